"""Exact sparse multivariate polynomial arithmetic, term orders, and text I/O.

Polynomials live over a fixed ordered tuple of variable names.  Coefficients
are `fractions.Fraction` (always stored in lowest terms), exponents are tuples
of nonnegative ints.  Everything is immutable after construction, so values
are safe to share freely.

The one convention that matters everywhere downstream: weight selection
defaults to "min", i.e. `initial_form(p, w)` keeps the terms of *minimal*
w-weight.  Weight data coming from a max-style source is negated on ingestion
by its caller.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple  # tuple[int, ...]

# exponents beyond this are almost certainly a runaway computation
MAX_EXPONENT = 2**62

MIN = "min"
MAX = "max"


class DimensionMismatch(ValueError):
    """Vector/exponent lengths do not agree."""


class ZeroPolynomialError(ValueError):
    """Operation undefined on the zero polynomial."""


class DegreeOverflow(OverflowError):
    """An exponent exceeded MAX_EXPONENT."""


class ParseError(ValueError):
    def __init__(self, position: int, expected: str):
        super().__init__(f"parse error at position {position}: expected {expected}")
        self.position = position
        self.expected = expected


class UnknownVariable(ValueError):
    def __init__(self, name: str):
        super().__init__(f"unknown variable {name!r}")
        self.name = name


# ---------------------------------------------------------------------------
# exponent helpers


def exp_add(a: Exponent, b: Exponent) -> Exponent:
    c = tuple(x + y for x, y in zip(a, b))
    if any(x > MAX_EXPONENT for x in c):
        raise DegreeOverflow(f"exponent exceeds {MAX_EXPONENT}")
    return c


def exp_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x if x > y else y for x, y in zip(a, b))


def exp_divides(a: Exponent, b: Exponent) -> bool:
    """True if x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def exp_coprime(a: Exponent, b: Exponent) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def dot(w: Sequence[int], e: Exponent) -> int:
    return sum(wi * ei for wi, ei in zip(w, e))


# ---------------------------------------------------------------------------
# term orders

LESS, EQUAL, GREATER = -1, 0, 1


class TermOrder:
    """Total order on exponents of a fixed length, via sort keys.

    `key(e)` returns a tuple; bigger key = bigger monomial.  Leading terms
    are maxima under the order.
    """

    nvars: int

    def key(self, e: Exponent):
        raise NotImplementedError

    def compare(self, a: Exponent, b: Exponent) -> int:
        if len(a) != len(b) or len(a) != self.nvars:
            raise DimensionMismatch(
                f"exponent lengths {len(a)}, {len(b)} vs order on {self.nvars} variables"
            )
        ka, kb = self.key(a), self.key(b)
        return LESS if ka < kb else (GREATER if ka > kb else EQUAL)


class DegRevLex(TermOrder):
    """Graded reverse lexicographic on the declared variable sequence."""

    def __init__(self, nvars: int):
        self.nvars = nvars

    def key(self, e: Exponent):
        return (sum(e), tuple(-x for x in reversed(e)))

    def __repr__(self):
        return f"DegRevLex({self.nvars})"


class Lex(TermOrder):
    """Lexicographic with an explicit variable priority.

    `priority` lists variable indices from most to least significant.
    """

    def __init__(self, priority: Sequence[int]):
        self.priority = tuple(priority)
        self.nvars = len(self.priority)
        if sorted(self.priority) != list(range(self.nvars)):
            raise ValueError("priority must be a permutation of all variable indices")

    def key(self, e: Exponent):
        return tuple(e[i] for i in self.priority)

    def __repr__(self):
        return f"Lex({self.priority})"


def lex_reversed(nvars: int) -> Lex:
    """Lex with the declared variable order reversed (last variable biggest)."""
    return Lex(tuple(range(nvars - 1, -1, -1)))


class WeightOrder(TermOrder):
    """Weight rows refined by a tie-break order.

    Rows are compared in sequence.  Convention "min" prefers smaller weight
    (the minimal-weight monomial is the leading one), "max" prefers larger.
    """

    def __init__(self, rows: Sequence[Sequence[int]], convention: str = MIN,
                 tie: TermOrder | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows:
            raise ValueError("need at least one weight row")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("weight rows of unequal length")
        if convention not in (MIN, MAX):
            raise ValueError(f"convention must be {MIN!r} or {MAX!r}")
        self.rows = rows
        self.convention = convention
        self.tie = tie if tie is not None else lex_reversed(n)
        if self.tie.nvars != n:
            raise DimensionMismatch("tie-break order has wrong variable count")
        self.nvars = n
        self._sign = -1 if convention == MIN else 1

    def weight(self, e: Exponent) -> tuple:
        return tuple(dot(r, e) for r in self.rows)

    def key(self, e: Exponent):
        s = self._sign
        return (tuple(s * dot(r, e) for r in self.rows), self.tie.key(e))

    def __repr__(self):
        return f"WeightOrder({len(self.rows)} rows, {self.convention})"


class BlockOrder(TermOrder):
    """Two-block elimination order: degrevlex on `first`, then on `second`.

    Any monomial containing a `first` variable beats every monomial free of
    them, so a Groebner basis under this order computes the elimination
    ideal for the `second` block.
    """

    def __init__(self, first: Sequence[int], second: Sequence[int]):
        self.first = tuple(first)
        self.second = tuple(second)
        self.nvars = len(self.first) + len(self.second)
        if sorted(self.first + self.second) != list(range(self.nvars)):
            raise ValueError("blocks must partition the variable indices")
        self._rev1 = tuple(reversed(self.first))
        self._rev2 = tuple(reversed(self.second))

    def key(self, e: Exponent):
        return (
            sum(e[i] for i in self.first),
            tuple(-e[i] for i in self._rev1),
            sum(e[i] for i in self.second),
            tuple(-e[i] for i in self._rev2),
        )

    def __repr__(self):
        return f"BlockOrder({self.first} >> {self.second})"


def compare_monomials(order: TermOrder, a: Exponent, b: Exponent) -> int:
    """Compare two exponents under `order`; returns -1, 0 or 1."""
    return order.compare(tuple(a), tuple(b))


# ---------------------------------------------------------------------------
# grading


class Grading:
    """Positive integer weight per variable; default weight 1 everywhere."""

    def __init__(self, weights: Sequence[int]):
        self.weights = tuple(int(w) for w in weights)
        if any(w <= 0 for w in self.weights):
            raise ValueError("grading weights must be positive")

    @classmethod
    def standard(cls, nvars: int) -> "Grading":
        return cls((1,) * nvars)

    def degree(self, e: Exponent) -> int:
        return dot(self.weights, e)

    def is_homogeneous(self, p: "Polynomial") -> bool:
        degs = {self.degree(e) for e in p.terms}
        return len(degs) <= 1

    def homogeneous_degree(self, p: "Polynomial") -> int:
        degs = {self.degree(e) for e in p.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def __eq__(self, other):
        return isinstance(other, Grading) and self.weights == other.weights

    def __repr__(self):
        return f"Grading({self.weights})"


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Sparse polynomial: dict exponent -> nonzero Fraction, over named vars."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exponent, object] | None = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: dict = {}
        if terms:
            for e, c in terms.items():
                if len(e) != n:
                    raise DimensionMismatch(
                        f"exponent {e} has length {len(e)}, expected {n}")
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent in {e}")
                if any(x > MAX_EXPONENT for x in e):
                    raise DegreeOverflow(f"exponent exceeds {MAX_EXPONENT}")
                c = Fraction(c)
                if c != 0:
                    te = tuple(int(x) for x in e)
                    c0 = clean.get(te)
                    if c0 is None:
                        clean[te] = c
                    else:
                        c0 = c0 + c
                        if c0 == 0:
                            del clean[te]
                        else:
                            clean[te] = c0
        self.terms = clean

    # -- constructors

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Polynomial":
        return cls(vars)

    @classmethod
    def constant(cls, vars: Sequence[str], c) -> "Polynomial":
        return cls(vars, {(0,) * len(vars): Fraction(c)})

    @classmethod
    def monomial(cls, vars: Sequence[str], e: Exponent, c=1) -> "Polynomial":
        return cls(vars, {tuple(e): Fraction(c)})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "Polynomial":
        try:
            i = list(vars).index(name)
        except ValueError:
            raise UnknownVariable(name) from None
        e = [0] * len(vars)
        e[i] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    # -- predicates / views

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("total degree of 0 undefined")
        return max(sum(e) for e in self.terms)

    def support_vars(self) -> set:
        """Indices of variables that actually occur."""
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(i)
        return used

    def lead(self, order: TermOrder) -> tuple:
        """(exponent, coeff) of the leading term under `order`."""
        if not self.terms:
            raise ZeroPolynomialError("leading term of 0 undefined")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    # -- arithmetic

    def _check_same_ring(self, other: "Polynomial"):
        if self.vars != other.vars:
            raise DimensionMismatch(
                f"mixed variable lists {self.vars} vs {other.vars}")

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.vars == other.vars
                and self.terms == other.terms)

    def __neg__(self) -> "Polynomial":
        p = Polynomial.zero(self.vars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_same_ring(other)
        res = dict(self.terms)
        for e, c in other.terms.items():
            c0 = res.get(e)
            if c0 is None:
                res[e] = c
            else:
                c0 = c0 + c
                if c0 == 0:
                    del res[e]
                else:
                    res[e] = c0
        p = Polynomial.zero(self.vars)
        p.terms = res
        return p

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_same_ring(other)
        res: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exp_add(e1, e2)
                c0 = res.get(e)
                if c0 is None:
                    res[e] = c1 * c2
                else:
                    c0 = c0 + c1 * c2
                    if c0 == 0:
                        del res[e]
                    else:
                        res[e] = c0
        p = Polynomial.zero(self.vars)
        p.terms = res
        return p

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        p = Polynomial.zero(self.vars)
        if c != 0:
            p.terms = {e: c0 * c for e, c0 in self.terms.items()}
        return p

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def term_mul(self, e: Exponent, c) -> "Polynomial":
        """Multiply by the single term c * x^e."""
        c = Fraction(c)
        p = Polynomial.zero(self.vars)
        if c != 0:
            p.terms = {exp_add(e0, e): c0 * c for e0, c0 in self.terms.items()}
        return p

    def monic(self, order: TermOrder) -> "Polynomial":
        e, c = self.lead(order)
        if c == 1:
            return self
        return self.scale(Fraction(1) / c)

    # -- ring-change helpers

    def extend(self, new_vars: Sequence[str]) -> "Polynomial":
        """Reinterpret in a larger ring; `new_vars` must contain all vars."""
        new_vars = tuple(new_vars)
        pos = []
        for v in self.vars:
            try:
                pos.append(new_vars.index(v))
            except ValueError:
                raise UnknownVariable(v) from None
        n = len(new_vars)
        res = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, x in enumerate(e):
                ne[pos[i]] = x
            res[tuple(ne)] = c
        p = Polynomial.zero(new_vars)
        p.terms = res
        return p

    def restrict(self, new_vars: Sequence[str]) -> "Polynomial":
        """Project onto a subring; requires support within `new_vars`."""
        new_vars = tuple(new_vars)
        keep = []
        for v in new_vars:
            keep.append(self.vars.index(v))
        keep_set = set(keep)
        for e in self.terms:
            for i, x in enumerate(e):
                if x and i not in keep_set:
                    raise ValueError(
                        f"variable {self.vars[i]!r} occurs; cannot restrict")
        res = {tuple(e[i] for i in keep): c for e, c in self.terms.items()}
        p = Polynomial.zero(new_vars)
        p.terms = res
        return p

    def substitute(self, values: Mapping[str, object]) -> "Polynomial":
        """Substitute Fractions for some variables, keep the ring unchanged."""
        idx = {}
        for name, val in values.items():
            if name not in self.vars:
                raise UnknownVariable(name)
            idx[self.vars.index(name)] = Fraction(val)
        res: dict = {}
        for e, c in self.terms.items():
            coeff = c
            ne = list(e)
            for i, val in idx.items():
                if e[i]:
                    coeff = coeff * val ** e[i]
                ne[i] = 0
            if coeff == 0:
                continue
            te = tuple(ne)
            c0 = res.get(te)
            if c0 is None:
                res[te] = coeff
            else:
                c0 = c0 + coeff
                if c0 == 0:
                    del res[te]
                else:
                    res[te] = c0
        p = Polynomial.zero(self.vars)
        p.terms = res
        return p

    def evaluate(self, point: Sequence[object]) -> Fraction:
        """Exact evaluation at a full rational point."""
        if len(point) != len(self.vars):
            raise DimensionMismatch("point length does not match variables")
        vals = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            prod = c
            for x, k in zip(vals, e):
                if k:
                    prod *= x ** k
            total += prod
        return total

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)})"

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))


def poly_arith(op: str, a: Polynomial, b) -> Polynomial:
    """Dispatcher for the ring operations: op in {"add", "mul", "scale"}.

    "scale" takes a rational for b; the others take a polynomial over the
    same variables.
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


def check_convention(convention: str) -> str:
    if convention not in (MIN, MAX):
        raise ValueError(f"convention must be {MIN!r} or {MAX!r}, got {convention!r}")
    return convention


def initial_form(p: Polynomial, w: Sequence[int], convention: str = MIN) -> Polynomial:
    """Sub-sum of terms attaining the extremal w-weight.

    "min" keeps the terms of least weight (this is the t -> 0 limit of the
    one-parameter family built from w); "max" keeps the largest.
    """
    check_convention(convention)
    if p.is_zero():
        raise ZeroPolynomialError("initial form of 0 undefined")
    if len(w) != len(p.vars):
        raise DimensionMismatch("weight length does not match variables")
    weights = {e: dot(w, e) for e in p.terms}
    target = min(weights.values()) if convention == MIN else max(weights.values())
    q = Polynomial.zero(p.vars)
    q.terms = {e: c for e, c in p.terms.items() if weights[e] == target}
    return q


def initial_form_rows(p: Polynomial, rows: Sequence[Sequence[int]],
                      convention: str = MIN) -> Polynomial:
    """Initial form for a weight matrix: rows applied in order, ties carried."""
    q = p
    for r in rows:
        q = initial_form(q, r, convention)
        if len(q) == 1:
            break
    return q


# ---------------------------------------------------------------------------
# parsing / printing
#
# poly   := ['+'|'-'] term (('+'|'-') term)*
# term   := coeff | [coeff '*'] factor ('*' factor)*
# factor := ident ['^' uint]
# coeff  := uint ['/' uint]
# ident  := [A-Za-z][A-Za-z0-9_]*

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[+\-*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(pos, "number, identifier or operator")
        if m.lastgroup is None:
            break
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_polynomial(text: str, vars: Sequence[str]) -> Polynomial:
    """Parse ASCII polynomial text over the given variable list."""
    vars = tuple(vars)
    index = {v: i for i, v in enumerate(vars)}
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos]

    def take(kind):
        nonlocal pos
        if toks[pos][0] != kind:
            raise ParseError(toks[pos][2], kind)
        tok = toks[pos]
        pos += 1
        return tok

    def parse_coeff() -> Fraction:
        num = int(take("num")[1])
        if peek()[0] == "op" and peek()[1] == "/":
            take("op")
            den_tok = take("num")
            den = int(den_tok[1])
            if den == 0:
                raise ParseError(den_tok[2], "nonzero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def parse_factor() -> Exponent:
        tok = take("ident")
        if tok[1] not in index:
            raise UnknownVariable(tok[1])
        e = [0] * len(vars)
        k = 1
        if peek()[0] == "op" and peek()[1] == "^":
            take("op")
            k = int(take("num")[1])
        e[index[tok[1]]] = k
        return tuple(e)

    def parse_term() -> tuple:
        coeff = Fraction(1)
        exp = (0,) * len(vars)
        saw_factor = False
        if peek()[0] == "num":
            coeff = parse_coeff()
            if peek()[0] == "op" and peek()[1] == "*":
                take("op")
            else:
                return coeff, exp
        while True:
            exp = exp_add(exp, parse_factor())
            saw_factor = True
            if peek()[0] == "op" and peek()[1] == "*":
                take("op")
                continue
            break
        if not saw_factor:
            raise ParseError(peek()[2], "factor")
        return coeff, exp

    terms: dict = {}
    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take("op")[1] == "-" else 1
    while True:
        c, e = parse_term()
        c *= sign
        c0 = terms.get(e, Fraction(0)) + c
        if c0 == 0:
            terms.pop(e, None)
        else:
            terms[e] = c0
        if peek()[0] == "op" and peek()[1] in "+-":
            sign = -1 if take("op")[1] == "-" else 1
            continue
        break
    end = peek()
    if end[0] != "end":
        raise ParseError(end[2], "'+', '-' or end of input")
    return Polynomial(vars, terms)


def _format_term(vars, e, c, leading: bool) -> str:
    factors = []
    for v, k in zip(vars, e):
        if k == 1:
            factors.append(v)
        elif k > 1:
            factors.append(f"{v}^{k}")
    mono = "*".join(factors)
    a = abs(c)
    if not mono:
        body = str(a)
    elif a == 1:
        body = mono
    else:
        body = f"{a}*{mono}"
    if leading:
        return body if c > 0 else f"-{body}"
    return f" + {body}" if c > 0 else f" - {body}"


def format_polynomial(p: Polynomial, order: TermOrder | None = None) -> str:
    """Print with terms in descending order; inverse of parse_polynomial."""
    if p.is_zero():
        return "0"
    if order is None:
        order = DegRevLex(len(p.vars))
    if order.nvars != len(p.vars):
        raise DimensionMismatch("order does not match variable count")
    exps = sorted(p.terms, key=order.key, reverse=True)
    parts = [_format_term(p.vars, e, p.terms[e], i == 0) for i, e in enumerate(exps)]
    return "".join(parts)
