"""Buchberger's algorithm with reduced bases, plus the ideal toolbox built on
top of it: initial ideals, elimination, saturation, ring-map kernels, standard
monomials and graded dimensions.

Every returned ideal is canonicalized as its reduced Groebner basis under a
deterministic default order (degrevlex on the declared variables), so outputs
are diffable and ideal equality is structural equality of those bases.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Sequence

from .polycore import (
    MIN,
    BlockOrder,
    check_convention,
    DegRevLex,
    DimensionMismatch,
    Exponent,
    Grading,
    Polynomial,
    TermOrder,
    WeightOrder,
    exp_coprime,
    exp_divides,
    exp_lcm,
    exp_sub,
    format_polynomial,
    initial_form_rows,
    lex_reversed,
)


class NotHomogeneous(ValueError):
    """Ideal is not homogeneous for the grading in effect."""


class Ideal:
    """A finitely generated ideal in k[vars] with an optional grading.

    When a grading is supplied, every generator must be homogeneous for it;
    this is checked on construction.
    """

    __slots__ = ("vars", "gens", "grading", "_rgb_cache")

    def __init__(self, gens: Iterable[Polynomial], vars: Sequence[str],
                 grading: Grading | None = None):
        self.vars = tuple(vars)
        cleaned = []
        for g in gens:
            if g.vars != self.vars:
                raise DimensionMismatch("generator in a different ring")
            if not g.is_zero():
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self.grading = grading
        if grading is not None:
            if len(grading.weights) != len(self.vars):
                raise DimensionMismatch("grading length does not match variables")
            for g in self.gens:
                if not grading.is_homogeneous(g):
                    raise NotHomogeneous(
                        f"generator {format_polynomial(g)} is not homogeneous")
        self._rgb_cache = None

    def is_zero(self) -> bool:
        return not self.gens

    def contains_one(self) -> bool:
        G = reduced_basis(self)
        return any(len(g) == 1 and sum(next(iter(g.terms))) == 0 for g in G.elements)

    def __repr__(self):
        gs = ", ".join(format_polynomial(g) for g in self.gens)
        return f"Ideal([{gs}] in k[{', '.join(self.vars)}])"


class GroebnerBasis:
    """Reduced Groebner basis: monic, auto-reduced, sorted by leading term."""

    __slots__ = ("elements", "order", "reduced", "leads")

    def __init__(self, elements: Sequence[Polynomial], order: TermOrder,
                 reduced: bool = True):
        self.elements = tuple(elements)
        self.order = order
        self.reduced = reduced
        self.leads = tuple(g.lead(order)[0] for g in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        gs = ", ".join(format_polynomial(g, self.order) for g in self.elements)
        return f"GroebnerBasis([{gs}])"


# ---------------------------------------------------------------------------
# core algorithms


def _cached_key(order: TermOrder):
    cache: dict = {}
    key = order.key

    def k(e):
        v = cache.get(e)
        if v is None:
            v = key(e)
            cache[e] = v
        return v

    return k


def _normal_form(p: Polynomial, basis: Sequence[Polynomial],
                 leads: Sequence[Exponent], key) -> Polynomial:
    """Full normal form: no term of the result is divisible by any lead."""
    if p.is_zero() or not basis:
        return p
    work = dict(p.terms)
    out: dict = {}
    nb = len(basis)
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        hit = -1
        for i in range(nb):
            if exp_divides(leads[i], e):
                hit = i
                break
        if hit < 0:
            out[e] = c
            continue
        g = basis[hit]
        shift = exp_sub(e, leads[hit])
        glead_c = g.terms[leads[hit]]
        factor = c / glead_c
        for eg, cg in g.terms.items():
            if eg == leads[hit]:
                continue
            et = tuple(a + b for a, b in zip(eg, shift))
            c0 = work.get(et)
            if c0 is None:
                work[et] = -factor * cg
            else:
                c0 = c0 - factor * cg
                if c0 == 0:
                    del work[et]
                else:
                    work[et] = c0
    q = Polynomial.zero(p.vars)
    q.terms = out
    return q


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of p on division by G (fully reduced)."""
    if p.vars and G.elements and p.vars != G.elements[0].vars:
        raise DimensionMismatch("polynomial and basis in different rings")
    return _normal_form(p, G.elements, G.leads, _cached_key(G.order))


def _spoly(f: Polynomial, g: Polynomial, ef: Exponent, eg: Exponent) -> Polynomial:
    l = exp_lcm(ef, eg)
    cf = f.terms[ef]
    cg = g.terms[eg]
    return f.term_mul(exp_sub(l, ef), Fraction(1) / cf) - \
        g.term_mul(exp_sub(l, eg), Fraction(1) / cg)


def _interreduce(polys: list, order: TermOrder) -> list:
    """Minimalize and tail-reduce to the unique reduced basis."""
    key = _cached_key(order)
    polys = [p for p in polys if not p.is_zero()]
    leads = [p.lead(order)[0] for p in polys]
    # minimalize: drop any element whose lead is divisible by another lead
    keep = []
    for i, li in enumerate(leads):
        redundant = False
        for j, lj in enumerate(leads):
            if i != j and exp_divides(lj, li):
                if lj != li or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(i)
    polys = [polys[i] for i in keep]
    leads = [leads[i] for i in keep]
    # tail-reduce each against the others
    reduced = []
    for i, p in enumerate(polys):
        others = polys[:i] + polys[i + 1:]
        other_leads = leads[:i] + leads[i + 1:]
        r = _normal_form(p, others, other_leads, key)
        if not r.is_zero():
            reduced.append(r.monic(order))
    reduced.sort(key=lambda q: key(q.lead(order)[0]), reverse=True)
    return reduced


def buchberger(I: Ideal, order: TermOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of I under `order` (default degrevlex).

    Normal pair selection (smallest lcm first) with the coprime and chain
    criteria; the output is the unique reduced basis, independent of the
    generator order.
    """
    if order is None:
        order = DegRevLex(len(I.vars))
    if order.nvars != len(I.vars):
        raise DimensionMismatch("order does not match the ideal's ring")
    key = _cached_key(order)

    basis: list[Polynomial] = []
    leads: list[Exponent] = []
    pairs: list = []  # heap of (degree, key(lcm), i, j)
    entry_count = 0

    def push_pairs(j: int):
        nonlocal entry_count
        ej = leads[j]
        fresh = []
        for i in range(j):
            l = exp_lcm(leads[i], ej)
            fresh.append((i, l))
        # chain criterion within the new pairs: drop (i, j) when another new
        # pair's lcm properly divides its lcm
        kept = []
        for i, l in fresh:
            if exp_coprime(leads[i], ej):
                continue
            dominated = False
            for i2, l2 in fresh:
                if i2 != i and l2 != l and exp_divides(l2, l):
                    dominated = True
                    break
            if dominated:
                continue
            kept.append((i, l))
        for i, l in kept:
            heapq.heappush(pairs, (sum(l), key(l), entry_count, i, j, l))
            entry_count += 1

    # seed with successive normal forms of the generators; unlike the final
    # interreduction this never drops ideal content
    for g in I.gens:
        r = _normal_form(g, basis, leads, key)
        if r.is_zero():
            continue
        r = r.monic(order)
        basis.append(r)
        leads.append(r.lead(order)[0])
        push_pairs(len(basis) - 1)

    while pairs:
        _, _, _, i, j, l = heapq.heappop(pairs)
        # chain criterion against the current basis: skip when some other
        # lead divides the lcm strictly between the two
        skip = False
        for k2 in range(len(basis)):
            if k2 in (i, j):
                continue
            if exp_divides(leads[k2], l):
                l_ik = exp_lcm(leads[i], leads[k2])
                l_jk = exp_lcm(leads[j], leads[k2])
                if l_ik != l and l_jk != l:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(basis[i], basis[j], leads[i], leads[j])
        r = _normal_form(s, basis, leads, key)
        if r.is_zero():
            continue
        r = r.monic(order)
        basis.append(r)
        leads.append(r.lead(order)[0])
        push_pairs(len(basis) - 1)

    return GroebnerBasis(_interreduce(basis, order), order, reduced=True)


def reduced_basis(I: Ideal) -> GroebnerBasis:
    """Degrevlex reduced basis, cached on the ideal."""
    if I._rgb_cache is None:
        I._rgb_cache = buchberger(I)
    return I._rgb_cache


def canonical(I: Ideal) -> Ideal:
    """The ideal regenerated by its degrevlex reduced basis."""
    G = reduced_basis(I)
    J = Ideal(G.elements, I.vars, grading=I.grading)
    J._rgb_cache = G
    return J


def same_ideal(I: Ideal, J: Ideal) -> bool:
    if I.vars != J.vars:
        return False
    return list(reduced_basis(I).elements) == list(reduced_basis(J).elements)


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True if J is a subset of I."""
    G = reduced_basis(I)
    return all(normal_form(g, G).is_zero() for g in J.gens)


# ---------------------------------------------------------------------------
# initial ideals


def initial_ideal(I: Ideal, spec, convention: str = MIN) -> Ideal:
    """Initial ideal of I.

    `spec` is either a TermOrder (result: the monomial ideal of leading
    terms), a single weight vector, or a sequence of weight rows applied
    lexicographically.  For weights the result is generated by the initial
    forms of a reduced basis computed under the weight-refined order, and is
    returned in canonical form.
    """
    check_convention(convention)
    if isinstance(spec, TermOrder):
        G = buchberger(I, spec)
        gens = [Polynomial.monomial(I.vars, e) for e in G.leads]
        return canonical(Ideal(gens, I.vars, grading=I.grading))
    rows = _weight_rows(spec, len(I.vars))
    refined = WeightOrder(rows, convention, tie=lex_reversed(len(I.vars)))
    G = buchberger(I, refined)
    gens = [initial_form_rows(g, rows, convention) for g in G.elements]
    return canonical(Ideal(gens, I.vars, grading=I.grading))


def _weight_rows(spec, nvars: int) -> tuple:
    """Normalize a weight spec (vector, row list, or matrix-like) to rows."""
    if hasattr(spec, "rows_list"):
        rows = spec.rows_list()
    else:
        spec = list(spec)
        if spec and isinstance(spec[0], (list, tuple)):
            rows = [tuple(r) for r in spec]
        else:
            rows = [tuple(spec)]
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    for r in rows:
        if len(r) != nvars:
            raise DimensionMismatch("weight row length does not match variables")
    return rows


# ---------------------------------------------------------------------------
# elimination, saturation, kernels


def eliminate(I: Ideal, keep: Sequence[str]) -> Ideal:
    """Generators of I intersected with k[keep], via a two-block order."""
    keep = tuple(keep)
    for v in keep:
        if v not in I.vars:
            raise ValueError(f"variable {v!r} not in the ring")
    drop_idx = [i for i, v in enumerate(I.vars) if v not in keep]
    keep_idx = [i for i, v in enumerate(I.vars) if v in keep]
    if not drop_idx:
        return canonical(Ideal(I.gens, I.vars, grading=I.grading))
    order = BlockOrder(drop_idx, keep_idx)
    G = buchberger(I, order)
    drop_set = set(drop_idx)
    kept = [g for g in G.elements if not (g.support_vars() & drop_set)]
    restricted = [g.restrict(keep) for g in kept]
    grading = None
    if I.grading is not None:
        grading = Grading([I.grading.weights[I.vars.index(v)] for v in keep])
    return canonical(Ideal(restricted, keep, grading=grading))


def _fresh_name(base: str, used: Sequence[str]) -> str:
    name = base
    k = 0
    while name in used:
        name = f"{base}{k}"
        k += 1
    return name


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^infinity), via the extra variable y and the relation 1 - y*f."""
    if f.is_zero():
        raise ValueError("cannot saturate by 0")
    if f.vars != I.vars:
        raise DimensionMismatch("polynomial in a different ring")
    aux = _fresh_name("ysat", I.vars)
    big = I.vars + (aux,)
    gens = [g.extend(big) for g in I.gens]
    one = Polynomial.constant(big, 1)
    gens.append(one - Polynomial.variable(big, aux) * f.extend(big))
    out = eliminate(Ideal(gens, big), I.vars)
    if I.grading is not None and I.grading.is_homogeneous(f):
        out = canonical(Ideal(out.gens, I.vars, grading=I.grading))
    return out


def saturate_by_variables(I: Ideal, var_names: Sequence[str]) -> Ideal:
    """Successive (I : x^infinity) for each named variable.

    Fast path for ideals homogeneous under some positive weight vector:
    under degrevlex with x smallest, dividing every reduced-basis element by
    its x-content and repeating until stable computes the saturation without
    auxiliary variables.  Falls back to `saturate` otherwise.
    """
    J = I
    pos = _positive_grading_vector(I)
    for name in var_names:
        if pos is not None:
            J = _saturate_variable_graded(J, name, pos)
        else:
            J = saturate(J, Polynomial.variable(I.vars, name))
    return canonical(J)


def _positive_grading_vector(I: Ideal):
    """A strictly positive weight vector making all generators homogeneous."""
    if I.grading is not None:
        return I.grading.weights
    w = (1,) * len(I.vars)
    g = Grading(w)
    if all(g.is_homogeneous(p) for p in I.gens):
        return w
    return None


class _GradedRevLexLast(TermOrder):
    """w-graded order whose leading term minimizes one chosen exponent.

    For a w-homogeneous polynomial the leading term has minimal degree in
    x_i; hence x_i divides the lead only when it divides every term, which
    is what makes content-division compute (I : x_i^infinity).
    """

    def __init__(self, w: Sequence[int], i: int):
        self.w = tuple(w)
        self.i = i
        self.nvars = len(self.w)
        self._rest_rev = tuple(j for j in range(self.nvars - 1, -1, -1) if j != i)

    def key(self, e: Exponent):
        return (sum(wi * ei for wi, ei in zip(self.w, e)), -e[self.i],
                tuple(-e[j] for j in self._rest_rev))


def _saturate_variable_graded(I: Ideal, name: str, w: Sequence[int]) -> Ideal:
    i = I.vars.index(name)
    order = _GradedRevLexLast(w, i)
    J = I
    while True:
        G = buchberger(J, order)
        divided = []
        changed = False
        for g in G.elements:
            m = min(e[i] for e in g.terms)
            if m > 0:
                changed = True
                shifted = {}
                for e, c in g.terms.items():
                    ne = list(e)
                    ne[i] -= m
                    shifted[tuple(ne)] = c
                q = Polynomial.zero(I.vars)
                q.terms = shifted
                divided.append(q)
            else:
                divided.append(g)
        J = Ideal(divided, I.vars)
        if not changed:
            return J


def ring_map_kernel(source_vars: Sequence[str], images: Sequence[Polynomial],
                    target: Ideal) -> Ideal:
    """Kernel of k[source_vars] -> k[target.vars]/target, x_i -> image_i.

    Computed from the graph ideal (x_i - image_i) + target by eliminating the
    target variables.
    """
    source_vars = tuple(source_vars)
    if len(source_vars) != len(images):
        raise DimensionMismatch("one image per source variable required")
    if set(source_vars) & set(target.vars):
        raise ValueError("source and target variable names must be disjoint")
    big = target.vars + source_vars
    gens = []
    for name, img in zip(source_vars, images):
        if img.vars != target.vars:
            raise DimensionMismatch("images must live in the target ring")
        gens.append(Polynomial.variable(big, name) - img.extend(big))
    gens.extend(g.extend(big) for g in target.gens)
    return eliminate(Ideal(gens, big), source_vars)


# ---------------------------------------------------------------------------
# standard monomials and dimensions

DEFAULT_DEGREE_CAP = 8


def _weighted_exponents(weights: Sequence[int], degree: int):
    """All exponent tuples with the given weighted degree."""
    n = len(weights)

    def rec(i, remaining):
        if i == n - 1:
            if remaining % weights[i] == 0:
                yield (remaining // weights[i],)
            return
        w = weights[i]
        for k in range(remaining // w + 1):
            for rest in rec(i + 1, remaining - k * w):
                yield (k,) + rest

    if degree < 0:
        return
    yield from rec(0, degree)


def standard_monomials(G: GroebnerBasis, grading: Grading, degree: int):
    """Exponents of the given graded degree outside the leading-term ideal."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    leads = G.leads
    out = []
    for e in _weighted_exponents(grading.weights, degree):
        if not any(exp_divides(l, e) for l in leads):
            out.append(e)
    out.sort(key=G.order.key, reverse=True)
    return out


def graded_dimension(I: Ideal, degree: int, *, max_degree: int | None = None) -> int:
    """dim_k of (k[vars]/I) in the given degree; order-independent."""
    grading = I.grading
    if grading is None:
        grading = Grading.standard(len(I.vars))
        for g in I.gens:
            if not grading.is_homogeneous(g):
                raise NotHomogeneous("ideal is not homogeneous")
    cap = DEFAULT_DEGREE_CAP if max_degree is None else max_degree
    if degree > cap:
        raise ValueError(f"degree {degree} exceeds the cap {cap}; raise max_degree")
    G = reduced_basis(I)
    return len(standard_monomials(G, grading, degree))
