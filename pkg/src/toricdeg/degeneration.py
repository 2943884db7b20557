"""One-parameter Groebner families, their fibers, the valuation-matrix
verification pipeline, the value-semigroup embedding with all of its checks,
and degeneration-by-projection decompositions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import (
    Ideal,
    NotHomogeneous,
    buchberger,
    canonical,
    eliminate,
    graded_dimension,
    initial_ideal,
    reduced_basis,
    ring_map_kernel,
    same_ideal,
    saturate,
)
from .intlat import (
    IntMatrix,
    embed_degree_one_vector,
    homogenize_matrix,
    in_row_space,
    weight_from_matrix,
)
from .polycore import (
    MIN,
    MAX,
    DimensionMismatch,
    check_convention,
    Grading,
    Lex,
    Polynomial,
    WeightOrder,
    dot,
    exp_divides,
    lex_reversed,
)
from .toric import (
    Semigroup,
    embed_semigroup,
    is_vertex,
    toric_ideal,
)


class NoIndependentSubset(RuntimeError):
    """No admissible set of host variables exists without a coordinate change."""


class VerificationFailed(RuntimeError):
    def __init__(self, clause: str, detail: str = ""):
        super().__init__(f"verification failed: {clause}" + (f" ({detail})" if detail else ""))
        self.clause = clause


# ---------------------------------------------------------------------------
# one-parameter families

T_NAME = "t"


@dataclass(frozen=True)
class FamilyIdeal:
    """Ideal in k[t][x...] interpolating the base ideal (t=1) and its
    weight-initial ideal (t=0); generators are t-primitive."""

    gens: tuple
    vars: tuple  # base variables plus the parameter, parameter last
    base_ideal: Ideal
    w: tuple
    convention: str = MIN

    @property
    def parameter(self) -> str:
        return self.vars[-1]


def family_ideal(J: Ideal, w: Sequence[int], convention: str = MIN) -> FamilyIdeal:
    """t-interpolating family: each term of a weight-adapted reduced basis is
    scaled by t^(w.alpha - min w.beta), so t=1 gives back J and t=0 the
    initial ideal."""
    check_convention(convention)
    w = tuple(int(x) for x in w)
    if len(w) != len(J.vars):
        raise DimensionMismatch("weight length does not match variables")
    grading = J.grading if J.grading is not None else Grading.standard(len(J.vars))
    for g in J.gens:
        if not grading.is_homogeneous(g):
            raise NotHomogeneous("family construction requires a homogeneous ideal")
    w_min = w if convention == MIN else tuple(-x for x in w)
    if T_NAME in J.vars:
        raise ValueError(f"base ring already contains a variable named {T_NAME!r}")
    order = WeightOrder([w_min], MIN, tie=lex_reversed(len(J.vars)))
    G = buchberger(J, order)
    big = J.vars + (T_NAME,)
    gens = []
    for g in G.elements:
        weights = {e: dot(w_min, e) for e in g.terms}
        m = min(weights.values())
        terms = {}
        for e, c in g.terms.items():
            terms[e + (weights[e] - m,)] = c
        gens.append(Polynomial(big, terms))
    return FamilyIdeal(tuple(gens), big, canonical(J), w, convention)


def fiber(F: FamilyIdeal, t0) -> Ideal:
    """Substitute the parameter and return the canonical fiber ideal."""
    t0 = Fraction(t0)
    base_vars = F.vars[:-1]
    gens = []
    for g in F.gens:
        h = g.substitute({F.parameter: t0})
        if not h.is_zero():
            gens.append(h.restrict(base_vars))
    return canonical(Ideal(gens, base_vars, grading=F.base_ideal.grading))


# ---------------------------------------------------------------------------
# valuation pipeline


@dataclass
class PipelineReport:
    w: tuple                 # certified weight, in the caller's convention
    convention: str
    flipped: bool            # True when a max-style input was negated
    weight_min: tuple        # the internal min-convention weight
    init: Ideal
    semigroup: Semigroup | None
    toric: Ideal
    binomial_prime: bool


def valuation_pipeline(J: Ideal, M: IntMatrix, convention: str = MIN,
                       labels: Sequence[str] | None = None) -> PipelineReport:
    """Verify that the matrix of values induces a binomial-prime degeneration.

    Computes a certified weight w with in_w(J) = in_M(J), the initial ideal,
    the column semigroup, and compares the initial ideal against the toric
    ideal of M (homogenized first when the all-ones vector is outside M's row
    space).
    """
    check_convention(convention)
    if M.cols != len(J.vars):
        raise DimensionMismatch("one matrix column per variable required")
    w = weight_from_matrix(J, M, convention)
    flipped = convention == MAX
    w_min = tuple(w) if not flipped else tuple(-x for x in w)
    rows_min = M.rows_list() if not flipped else M.negate().rows_list()
    init = initial_ideal(J, rows_min, MIN)

    semigroup = None
    if all(x > 0 for x in M.entries[0]):
        semigroup = Semigroup(M.columns(), degree_coord=0,
                              labels=tuple(labels) if labels else J.vars)

    A_hat = M if in_row_space(M, [1] * M.cols) else homogenize_matrix(M)
    T = toric_ideal(A_hat, J.vars)
    prime = same_ideal(init, T)
    return PipelineReport(tuple(w), convention, flipped, w_min, init,
                          semigroup, T, prime)


# ---------------------------------------------------------------------------
# value-semigroup embedding


@dataclass
class EmbeddingReport:
    independent_vars: tuple          # indices of the host variables, ascending
    hosts: tuple                     # hosts[j] = variable index carrying image coordinate j
    N: int
    images: dict                     # generator label -> exponent tuple over J.vars
    kernel_check: Ideal              # kernel of the induced ring map, over fresh vars
    dims_checked: tuple              # (m, dim R_m, dim of image algebra in degree N*m)
    finiteness_certified: bool
    cone_initial: Ideal              # monomial initial ideal of the chosen cone


def embed_value_semigroup(J: Ideal, M: IntMatrix, convention: str = MIN,
                          degree_bound: int = 5) -> EmbeddingReport:
    """Realize the value semigroup algebra as a monomial subalgebra of k[x]/J.

    Steps: embed the column semigroup into the positive orthant; pick host
    variables with independent value columns (preferring hulls' vertex
    columns, requiring finiteness of the quotient when attainable); map each
    generator to the monomial with its embedded exponent; verify the images
    are standard monomials for the tie-broken cone, that the induced ring-map
    kernel equals the toric ideal of the embedded semigroup, and that graded
    dimensions match degree by degree.
    """
    pipe = valuation_pipeline(J, M, convention)
    if not pipe.binomial_prime:
        raise VerificationFailed("binomial_prime",
                                 "initial ideal is not the toric ideal")
    if any(x != 1 for x in M.entries[0]):
        raise VerificationFailed("degree_one",
                                 "degree row must be all ones; apply veronese first")
    S = Semigroup(M.columns(), degree_coord=0, labels=J.vars)
    N, _ = embed_semigroup(S)
    # one image vector per variable (the semigroup deduplicates, columns may not)
    cvecs = [embed_degree_one_vector(N, col) for col in M.columns()]
    r_plus_1 = len(cvecs[0])
    used = tuple(sorted({j for c in cvecs for j in range(r_plus_1) if c[j] > 0}))

    value_pts = [tuple(Fraction(x) for x in col[1:]) for col in M.columns()]
    vertex_cols = {i for i, p in enumerate(value_pts) if is_vertex(p, value_pts)}
    nvars = len(J.vars)
    subsets = list(itertools.combinations(range(nvars), len(used)))
    subsets.sort(key=lambda T: (not all(i in vertex_cols for i in T), T))

    init = pipe.init
    chosen = None
    fallback = None
    for T in subsets:
        if not _columns_independent(M, T):
            continue
        hosts = _assign_hosts(T, used, cvecs, J.vars)
        images_exp = _image_exponents(cvecs, hosts, used, nvars)
        cone = _cone_initial(init, T, nvars)
        if not _all_standard(images_exp, cone):
            continue
        if _finite_over(init, T):
            chosen = (T, hosts, images_exp, cone, True)
            break
        if fallback is None:
            fallback = (T, hosts, images_exp, cone, False)
    if chosen is None:
        chosen = fallback
    if chosen is None:
        raise NoIndependentSubset(
            "no host subset with independent columns and standard images; "
            "a linear change of coordinates would be required")
    T, hosts, images_exp, cone, finite_ok = chosen

    image_polys = [Polynomial.monomial(J.vars, e) for e in images_exp]
    labels = J.vars
    source_vars = _fresh_source_names(labels, J.vars)
    K1 = ring_map_kernel(source_vars, image_polys, J)
    K2 = toric_ideal(IntMatrix.from_columns(cvecs), source_vars)
    if not same_ideal(K1, K2):
        raise VerificationFailed("kernel",
                                 "ring-map kernel differs from the toric ideal "
                                 "of the embedded semigroup")
    dims = []
    for m in range(degree_bound + 1):
        dR = graded_dimension(J, m, max_degree=degree_bound)
        dS = graded_dimension(K2, m, max_degree=degree_bound)
        dims.append((m, dR, dS))
        if dR != dS:
            raise VerificationFailed("dims", f"degree {m}: {dR} != {dS}")
    images = {label: e for label, e in zip(labels, images_exp)}
    return EmbeddingReport(tuple(sorted(T)), tuple(hosts), N, images, K1,
                           tuple(dims), finite_ok, cone)


def _columns_independent(M: IntMatrix, T) -> bool:
    sub = IntMatrix([list(M.column(i)) for i in T])
    return sub.rank() == len(T)


def _assign_hosts(T, used, cvecs, vars):
    """hosts[j] for j in `used`: the subset variable with the largest own
    image exponent in coordinate j; ties to the smaller variable index."""
    remaining = list(T)
    hosts = {}
    for j in used:
        best = max(remaining, key=lambda i: (cvecs[i][j], -i))
        hosts[j] = best
        remaining.remove(best)
    return tuple(hosts[j] for j in used)


def _image_exponents(cvecs, hosts, used, nvars):
    out = []
    for c in cvecs:
        e = [0] * nvars
        for j, host in zip(used, hosts):
            e[host] = c[j]
        out.append(tuple(e))
    return out


def _cone_initial(init: Ideal, T, nvars) -> Ideal:
    """Monomial initial ideal of the tie-broken cone: lex leading terms of
    the weight-initial ideal, with non-host variables most significant."""
    non_sel = [i for i in range(nvars - 1, -1, -1) if i not in T]
    sel = [i for i in range(nvars - 1, -1, -1) if i in T]
    order = Lex(tuple(non_sel + sel))
    G = buchberger(init, order)
    gens = [Polynomial.monomial(init.vars, e) for e in G.leads]
    return canonical(Ideal(gens, init.vars))


def _all_standard(images_exp, cone: Ideal) -> bool:
    leads = [next(iter(g.terms)) for g in cone.gens]
    return all(not any(exp_divides(l, e) for l in leads) for e in images_exp)


def _finite_over(init: Ideal, T) -> bool:
    """Radical of (initial ideal + host variables) contains every variable."""
    vars = init.vars
    gens = list(init.gens) + [Polynomial.variable(vars, vars[i]) for i in T]
    K = Ideal(gens, vars)
    for i in range(len(vars)):
        if i in T:
            continue
        if not _in_radical(K, Polynomial.variable(vars, vars[i])):
            return False
    return True


def _in_radical(K: Ideal, f: Polynomial) -> bool:
    return saturate(K, f).contains_one()


def _fresh_source_names(labels, taken):
    out = []
    for lab in labels:
        name = f"v_{lab}"
        while name in taken or name in out:
            name = "v" + name
        out.append(name)
    return tuple(out)


# ---------------------------------------------------------------------------
# degeneration by projection


@dataclass
class ProjectionReport:
    limit: Ideal       # weight-initial ideal for 0 on kept, -1 on dropped
    cone_part: Ideal   # (limit : product of dropped vars ^ infinity)
    closure: Ideal     # I intersected with k[kept]
    scheme_check: bool  # limit restricted to the kept plane equals the closure
    kept: tuple
    dropped: tuple
    w: tuple


def projection_limit(I: Ideal, kept: Sequence[str]) -> ProjectionReport:
    """Split a coordinate projection's flat limit into cone part and closure.

    The limit is the initial ideal for weights 0 on kept and -1 on dropped
    variables (min convention); the closure of the projected image is the
    elimination ideal; their agreement on the kept coordinate plane is the
    scheme-level check.
    """
    kept = tuple(kept)
    if not kept or set(kept) == set(I.vars):
        raise ValueError("kept variables must be a nonempty proper subset")
    for v in kept:
        if v not in I.vars:
            raise ValueError(f"variable {v!r} not in the ring")
    dropped = tuple(v for v in I.vars if v not in kept)
    w = tuple(0 if v in kept else -1 for v in I.vars)
    limit = initial_ideal(I, [list(w)], MIN)
    prod = Polynomial.constant(I.vars, 1)
    for v in dropped:
        prod = prod * Polynomial.variable(I.vars, v)
    cone_part = saturate(limit, prod)
    closure = eliminate(I, kept)
    zeroed = []
    subs = {v: Fraction(0) for v in dropped}
    for g in reduced_basis(limit).elements:
        h = g.substitute(subs)
        if not h.is_zero():
            zeroed.append(h.restrict(kept))
    restricted = canonical(Ideal(zeroed, kept))
    check = same_ideal(restricted, closure)
    return ProjectionReport(limit, cone_part, closure, check, kept, dropped, w)


def hilbert_witness(I: Ideal, Jlimit: Ideal, degrees: Sequence[int],
                    max_degree: int | None = None):
    """Per-degree graded dimensions of two homogeneous ideals, side by side."""
    if I.vars != Jlimit.vars:
        raise DimensionMismatch("ideals must share one ring")
    cap = max(degrees) if max_degree is None else max_degree
    out = []
    for m in degrees:
        out.append((m, graded_dimension(I, m, max_degree=cap),
                    graded_dimension(Jlimit, m, max_degree=cap)))
    return out
