"""Integer matrix linear algebra: Hermite normal form, kernel lattices,
matrix homogenization, the graded embedding matrix, and certified weight
vectors that realize a matrix refinement as a single weight.
"""

from __future__ import annotations

from typing import Sequence

from . import groebner
from .polycore import MIN, DimensionMismatch, check_convention


class NegativeEntryUnresolvable(ValueError):
    """No nonnegative completion row exists for the chosen column sum."""


class NTooSmall(ValueError):
    """Embedding bound N too small: an image entry would be negative."""


class NoCertificate(RuntimeError):
    """No single weight vector certified the matrix refinement within bounds."""


class IntMatrix:
    """Immutable rectangular matrix of arbitrary-precision integers."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in entries)
        if not rows:
            raise ValueError("matrix must have at least one row")
        w = len(rows[0])
        if any(len(r) != w for r in rows):
            raise DimensionMismatch("ragged rows")
        self.entries = rows
        self.rows = len(rows)
        self.cols = w

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        cols = [tuple(c) for c in columns]
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    def rows_list(self):
        return [list(r) for r in self.entries]

    def column(self, j: int):
        return tuple(r[j] for r in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.entries[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions do not match")
        return IntMatrix([[sum(self.entries[i][k] * other.entries[k][j]
                               for k in range(self.cols))
                           for j in range(other.cols)]
                          for i in range(self.rows)])

    def apply(self, v: Sequence[int]):
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match columns")
        return tuple(sum(r[k] * v[k] for k in range(self.cols)) for r in self.entries)

    def negate(self) -> "IntMatrix":
        return IntMatrix([[-x for x in r] for r in self.entries])

    def det(self) -> int:
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        # fraction-free Gaussian elimination (Bareiss)
        n = self.rows
        m = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def rank(self) -> int:
        H, _ = hermite_normal_form(self)
        return sum(1 for r in H.entries if any(r))

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]})"


def hermite_normal_form(A: IntMatrix):
    """Row-style HNF: returns (H, U) with U unimodular, H = U*A, H in echelon
    form with positive pivots and entries above each pivot reduced into
    [0, pivot)."""
    m, n = A.rows, A.cols
    H = [list(r) for r in A.entries]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def row_op_sub(i, j, q):
        # row_i -= q * row_j
        Hi, Hj = H[i], H[j]
        for k in range(n):
            Hi[k] -= q * Hj[k]
        Ui, Uj = U[i], U[j]
        for k in range(m):
            Ui[k] -= q * Uj[k]

    r = 0
    for c in range(n):
        # make all entries below row r in column c zero by Euclid
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(H[i][c]))
            if piv != r:
                H[r], H[piv] = H[piv], H[r]
                U[r], U[piv] = U[piv], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][c] != 0:
                    q = H[i][c] // H[r][c]
                    row_op_sub(i, r, q)
                    if H[i][c] != 0:
                        done = False
            if done:
                break
        if r < m and H[r][c] != 0:
            if H[r][c] < 0:
                H[r] = [-x for x in H[r]]
                U[r] = [-x for x in U[r]]
            p = H[r][c]
            for i in range(r):
                if H[i][c] != 0:
                    q = H[i][c] // p  # floor keeps residues in [0, p)
                    row_op_sub(i, r, q)
            r += 1
            if r == m:
                break
    return IntMatrix(H), IntMatrix(U)


def kernel_lattice(A: IntMatrix):
    """Basis of the saturated integer kernel lattice {u : A u = 0}."""
    H, U = hermite_normal_form(A.transpose())
    basis = []
    for i in range(H.rows):
        if not any(H.entries[i]):
            v = list(U.entries[i])
            # sign-normalize: first nonzero entry positive
            lead = next((x for x in v if x != 0), 0)
            if lead < 0:
                v = [-x for x in v]
            basis.append(tuple(v))
    basis.sort()
    return basis


def in_row_space(A: IntMatrix, v: Sequence[int]) -> bool:
    """Exact test whether v lies in the rational row space of A."""
    if len(v) != A.cols:
        raise DimensionMismatch("vector length does not match columns")
    # v in rowspace(A)  iff  v is orthogonal to ker(A)
    return all(sum(int(x) * u[k] for k, x in enumerate(v)) == 0
               for u in kernel_lattice(A))


def homogenize_matrix(A: IntMatrix) -> IntMatrix:
    """Prepend a row making every column sum equal max of the column sums."""
    sums = [sum(A.column(j)) for j in range(A.cols)]
    c = max(sums)
    new_row = [c - s for s in sums]
    if any(x < 0 for x in new_row):
        raise NegativeEntryUnresolvable("no nonnegative completion row")
    return IntMatrix([new_row] + A.rows_list())


def graded_embedding_matrix(N: int, r: int) -> IntMatrix:
    """(r+1)x(r+1) matrix with first row (N, -1, ..., -1) and the identity
    below.  Applied to (1, a_1, ..., a_r) it yields (N - sum a_j, a), whose
    entries are nonnegative and sum to N whenever N bounds the total degree.
    The determinant equals N; on the lattice generated by degree-one values
    the map is an isomorphism onto its image.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if N < 1:
        raise ValueError("N must be positive")
    rows = [[N] + [-1] * r]
    for i in range(r):
        rows.append([0] * (i + 1) + [1] + [0] * (r - i - 1))
    return IntMatrix(rows)


def embed_degree_one_vector(N: int, v: Sequence[int]):
    """Image (N - sum a, a) of a degree-one value (1, a_1, ..., a_r)."""
    v = tuple(int(x) for x in v)
    if v[0] != 1:
        raise ValueError("vector must have degree coordinate 1")
    a = v[1:]
    c0 = N - sum(a)
    if c0 < 0 or any(x < 0 for x in a):
        raise NTooSmall(f"image of {v} has a negative entry with N={N}")
    return (c0,) + a


def weight_from_matrix(J: "groebner.Ideal", M: IntMatrix, convention: str = MIN,
                       max_doublings: int = 40):
    """A single weight vector w with in_w(J) = in_M(J), certified.

    w = sum_k B^(d-k) * row_k for the smallest B in {2, 4, 8, ...} whose
    weight separations match the matrix refinement on the marked reduced
    basis; the identity of the two initial ideals is then verified outright
    (reduced-basis equality) before returning.
    """
    check_convention(convention)
    if M.cols != len(J.vars):
        raise DimensionMismatch("one matrix column per ideal variable required")
    rows = M.rows_list() if convention == MIN else M.negate().rows_list()
    d = len(rows)
    if d == 1:
        w = [int(x) for x in rows[0]]
        result = w if convention == MIN else [-x for x in w]
        return result

    init_M = groebner.initial_ideal(J, rows, MIN)
    refined = groebner.WeightOrder(rows, MIN)
    G = groebner.buchberger(J, refined)

    B = 2
    for _ in range(max_doublings):
        w = [sum(B ** (d - 1 - k) * rows[k][j] for k in range(d))
             for j in range(M.cols)]
        if _splits_agree(G, rows, w):
            init_w = groebner.initial_ideal(J, w, MIN)
            if groebner.same_ideal(init_w, init_M):
                return w if convention == MIN else [-x for x in w]
        B *= 2
    raise NoCertificate(
        f"no certified weight within {max_doublings} doublings")


def _splits_agree(G, rows, w) -> bool:
    """Check w groups each basis element's terms exactly as the rows do."""
    from .polycore import dot, initial_form_rows

    for g in G.elements:
        exps = list(g.terms)
        m_init = set(initial_form_rows(g, rows, MIN).terms)
        wvals = {e: dot(w, e) for e in exps}
        wmin = min(wvals.values())
        w_init = {e for e in exps if wvals[e] == wmin}
        if w_init != m_init:
            return False
    return True
