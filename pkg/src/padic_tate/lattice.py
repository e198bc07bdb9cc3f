"""Integer-matrix calculus for subgroup cosets of (multiplicative torus)^n x E^n.

Subgroups are presented by integer lattices: columns of L_mult span the
cocharacter lattice of the torus part, columns of L_ell span the lattice of
the elliptic part (endomorphisms are plain integers, so dimensions are plain
ranks).  Everything reduces to Smith normal form over Z with exact big
integers.  Translating by a coset representative changes no dimension, so
cosets carry no extra data here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    DimensionMismatch,
    FullRank,
    InconsistentDimensions,
    SearchSpaceTooLarge,
)
from .field import PadicElement

Matrix = tuple[tuple[int, ...], ...]


def matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> Matrix:
    return tuple((0,) * c for _ in range(r))


def shape(M: Matrix) -> tuple[int, int]:
    return len(M), len(M[0]) if M else 0


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    ra, ca = shape(A)
    rb, cb = shape(B)
    if ca != rb:
        raise DimensionMismatch(f"{ra}x{ca} times {rb}x{cb}")
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(ca)) for j in range(cb))
                 for i in range(ra))


def hstack(A: Matrix, B: Matrix) -> Matrix:
    ra, _ = shape(A)
    rb, _ = shape(B)
    if ra != rb:
        raise DimensionMismatch("row counts differ")
    return tuple(A[i] + B[i] for i in range(ra))


def determinant(M: Matrix) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    n, m = shape(M)
    if n != m:
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(M: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """(U, D, V) with U M V = D diagonal, d1 | d2 | ..., U and V unimodular."""
    r, c = shape(M)
    A = [list(row) for row in M]
    U = [list(row) for row in identity(r)]
    V = [list(row) for row in identity(c)]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def row_sub(i, j, q):
        # row_i -= q * row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_sub(i, j, q):
        for row in A:
            row[i] -= q * row[j]
        for row in V:
            row[i] -= q * row[j]

    def row_negate(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(r, c):
        # choose the least nonzero entry in the trailing block as pivot
        pivot = None
        for i in range(t, r):
            for j in range(t, c):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        row_swap(t, pivot[0])
        col_swap(t, pivot[1])
        if A[t][t] < 0:
            row_negate(t)
        dirty = False
        for i in range(t + 1, r):
            if A[i][t]:
                q = A[i][t] // A[t][t]
                row_sub(i, t, q)
                if A[i][t]:
                    dirty = True
        for j in range(t + 1, c):
            if A[t][j]:
                q = A[t][j] // A[t][t]
                col_sub(j, t, q)
                if A[t][j]:
                    dirty = True
        if dirty:
            continue
        # pivot must divide the whole trailing block for the chain property
        bad = None
        for i in range(t + 1, r):
            for j in range(t + 1, c):
                if A[i][j] % A[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            # fold the offending row into row t and continue reducing
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
            U[t] = [a + b for a, b in zip(U[t], U[bad])]
            continue
        t += 1

    return (tuple(tuple(row) for row in U),
            tuple(tuple(row) for row in A),
            tuple(tuple(row) for row in V))


def smith_diagonal(M: Matrix) -> list[int]:
    _, D, _ = smith_normal_form(M)
    r, c = shape(D)
    return [D[i][i] for i in range(min(r, c))]


def rank(M: Matrix) -> int:
    if not M or not M[0]:
        return 0
    return sum(1 for d in smith_diagonal(M) if d)


def kernel_lattice(A: Matrix) -> Matrix:
    """Columns form a saturated basis of {v : A v = 0}."""
    r, c = shape(A)
    if c == 0:
        return zeros(0, 0)
    _, D, V = smith_normal_form(A)
    diag = [D[i][i] if i < r else 0 for i in range(c)]
    cols = [j for j in range(c) if j >= min(r, c) or diag[j] == 0]
    return tuple(tuple(V[i][j] for j in cols) for i in range(c))


# ---------------------------------------------------------------------------
# subgroup lattices of torus^n x E^n
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupLattice:
    """Connected subgroup (or coset) presented by its component lattices."""

    n: int
    mult: Matrix        # n x k1, columns span the torus-part lattice
    ell: Matrix         # n x k2, columns span the elliptic-part lattice

    def __post_init__(self):
        for part in (self.mult, self.ell):
            if part and len(part) != self.n:
                raise DimensionMismatch("lattice rows must equal the ambient n")

    @property
    def dim_mult(self) -> int:
        return rank(self.mult)

    @property
    def dim_ell(self) -> int:
        return rank(self.ell)

    @property
    def dim(self) -> int:
        return self.dim_mult + self.dim_ell


def full_subgroup(n: int) -> SubgroupLattice:
    return SubgroupLattice(n, identity(n), identity(n))


def dim_image(M: Matrix, T: SubgroupLattice) -> int:
    """Dimension of M . T = rank(M L_mult) + rank(M L_ell)."""
    r, c = shape(M)
    if r != T.n or c != T.n:
        raise DimensionMismatch(f"M is {r}x{c}, ambient n = {T.n}")
    total = 0
    for part in (T.mult, T.ell):
        if part and part[0]:
            total += rank(mat_mul(M, part))
    return total


@dataclass(frozen=True)
class RotundVerdict:
    refuted: bool
    witness: Optional[Matrix]
    height: int

    def __str__(self) -> str:
        if self.refuted:
            return f"refuted by M = {self.witness}"
        return f"verified up to height {self.height}"


def _normalized_rows(n: int, height: int) -> list[tuple[int, ...]]:
    """Zero or primitive rows with positive leading entry; every integer row is
    a scalar multiple of exactly one of these, and scaling rows changes no rank."""
    rows = [(0,) * n]
    for row in itertools.product(range(-height, height + 1), repeat=n):
        if all(x == 0 for x in row):
            continue
        g = 0
        for x in row:
            g = math.gcd(g, x)
        if g != 1:
            continue
        lead = next(x for x in row if x)
        if lead < 0:
            continue
        rows.append(row)
    return rows


def rotund_check(V: SubgroupLattice, height: int,
                 max_candidates: int = 5_000_000) -> RotundVerdict:
    """Search integer matrices of entry height <= H for dim(MV) < rank(M).

    A witness refutes rotundity outright; exhausting the height box only
    verifies it up to that height.
    """
    n = V.n
    if (2 * height + 1) ** n > max_candidates:
        raise SearchSpaceTooLarge(
            f"row enumeration alone needs {(2 * height + 1) ** n} draws")
    rows = _normalized_rows(n, height)
    total = len(rows) ** n
    if total > max_candidates:
        raise SearchSpaceTooLarge(f"{total} candidate matrices at height {height}")
    for combo in itertools.product(rows, repeat=n):
        M = tuple(combo)
        rk = rank(M)
        if rk == 0:
            continue
        if dim_image(M, V) < rk:
            return RotundVerdict(True, M, height)
    return RotundVerdict(False, None, height)


def lattice_intersection_rank(A: Matrix, B: Matrix) -> int:
    """rank(span A intersect span B) = rank A + rank B - rank [A | B]."""
    ra = rank(A) if A and A[0] else 0
    rb = rank(B) if B and B[0] else 0
    if ra == 0 or rb == 0:
        return 0
    return ra + rb - rank(hstack(A, B))


@dataclass(frozen=True)
class VMBound:
    r: int
    bound: int
    intersection_dim: int
    image_dim: int


def lemma_vm_bound(V: SubgroupLattice, M: Matrix) -> VMBound:
    """For rank(M) = n - r with r >= 1: the generic fibre bound dim V - n + r,
    together with dim(V intersect T) for T = {x^M = 1, M y = 0} computed from
    the kernel lattice of M."""
    n = V.n
    r_m, c_m = shape(M)
    if r_m != n or c_m != n:
        raise DimensionMismatch("M must be n x n")
    rk = rank(M)
    r = n - rk
    if r < 1:
        raise FullRank("M has full rank; the bound requires r >= 1")
    bound = V.dim - n + r
    ker = kernel_lattice(M)
    inter = (lattice_intersection_rank(V.mult, ker)
             + lattice_intersection_rank(V.ell, ker))
    return VMBound(r=r, bound=bound, intersection_dim=inter,
                   image_dim=dim_image(M, V))


def quotient_dim(L: Matrix, T: Matrix, n: int) -> int:
    """Dimension of the image of the subgroup spanned by L in the quotient by
    the subgroup spanned by T: rank[L | T] - rank T."""
    lt = rank(T) if T and T[0] else 0
    ll = rank(L) if L and L[0] else 0
    if ll == 0:
        return 0
    if lt == 0:
        return ll
    return rank(hstack(L, T)) - lt


@dataclass(frozen=True)
class LikelyVerdict:
    index: int
    ok: bool
    lhs: int
    rhs: int


def persistently_likely(V: Matrix, S: Matrix, T_list: Sequence[Matrix],
                        n: int) -> list[LikelyVerdict]:
    """Check dim psi(V) + dim psi(S) >= n - dim T for each quotient lattice T.

    All lattices live in the elliptic power alone; translation by coset
    representatives is immaterial for every dimension involved.
    """
    for L in (V, S, *T_list):
        if L and len(L) != n:
            raise DimensionMismatch("lattice rows must equal the ambient n")
    out = []
    for idx, T in enumerate(T_list):
        lhs = quotient_dim(V, T, n) + quotient_dim(S, T, n)
        rhs = n - (rank(T) if T and T[0] else 0)
        out.append(LikelyVerdict(index=idx, ok=lhs >= rhs, lhs=lhs, rhs=rhs))
    return out


def atypical(dim_x: int, dim_v: int, dim_w: int, dim_z: int) -> bool:
    """Strict excess over the expected intersection dimension."""
    if not (0 <= dim_x <= min(dim_v, dim_w) <= dim_z):
        raise InconsistentDimensions(
            f"need 0 <= {dim_x} <= min({dim_v}, {dim_w}) <= {dim_z}")
    return dim_x > dim_v + dim_w - dim_z


# ---------------------------------------------------------------------------
# bounded-height relation probers
# ---------------------------------------------------------------------------

def _primitive_signed(vec: Sequence[int]) -> bool:
    g = 0
    for x in vec:
        g = math.gcd(g, x)
    if g != 1:
        return False
    lead = next((x for x in vec if x), 0)
    return lead > 0


def _meets_threshold(residual: PadicElement, threshold_pi: int) -> bool:
    v = residual.valuation()
    return v.value * residual.field.e >= threshold_pi


def relation_search(z: Sequence[PadicElement], height: int,
                    slack: int = 10,
                    max_candidates: int = 5_000_000) -> list[tuple[int, ...]]:
    """All primitive integer vectors m with |m_i| <= height whose combination
    sum m_i z_i vanishes to precision minus slack.

    Exhaustive over the height box, so every planted relation within the box
    is found; an empty answer is 'no relation to precision', never a proof.
    """
    if not z:
        return []
    field = z[0].field
    n = len(z)
    total = (2 * height + 1) ** n
    if total > max_candidates:
        raise SearchSpaceTooLarge(f"{total} candidates at height {height}")
    threshold = min(x.abs_prec for x in z) - slack
    tables = [{m: x * m for m in range(-height, height + 1)} for x in z]
    found = []
    for m_vec in itertools.product(range(-height, height + 1), repeat=n):
        if not _primitive_signed(m_vec):
            continue
        acc = tables[0][m_vec[0]]
        for i in range(1, n):
            acc = acc + tables[i][m_vec[i]]
        if _meets_threshold(acc, threshold):
            found.append(m_vec)
    return found


def relation_false_positive_bound(n: int, height: int, p: int, f: int,
                                  threshold_pi: int) -> float:
    """Chance a random height-box candidate vanishes to the threshold."""
    return float((2 * height + 1) ** n) * float(p) ** (-threshold_pi * f)


def mult_dependence_mod_kernel(q: PadicElement, u: Sequence[PadicElement],
                               height: int, slack: int = 10,
                               max_candidates: int = 5_000_000
                               ) -> list[tuple[tuple[int, ...], int]]:
    """Primitive (m, k) with prod u_i^(m_i) = q^k to precision minus slack.

    Only one exponent k can match each m (valuations decide it), so the scan
    is exhaustive in m for every k at once.
    """
    if q.is_zero or q.shift <= 0:
        raise ValueError("q needs positive exact valuation")
    n = len(u)
    total = (2 * height + 1) ** n
    if total > max_candidates:
        raise SearchSpaceTooLarge(f"{total} candidates at height {height}")
    for x in u:
        if x.is_zero:
            raise ValueError("every u_i needs a known leading digit")
    threshold = min([x.abs_prec for x in u] + [q.abs_prec]) - slack
    tables = [{m: x ** m for m in range(-height, height + 1)} for x in u]
    qpow_cache: dict[int, PadicElement] = {}

    def qpow(k: int) -> PadicElement:
        if k not in qpow_cache:
            qpow_cache[k] = q ** k
        return qpow_cache[k]

    found = []
    for m_vec in itertools.product(range(-height, height + 1), repeat=n):
        if all(x == 0 for x in m_vec):
            continue
        val = sum(m * x.shift for m, x in zip(m_vec, u))
        if val % q.shift:
            continue
        k = val // q.shift
        if not _primitive_signed(tuple(m_vec) + (k,)):
            continue
        prod = tables[0][m_vec[0]]
        for i in range(1, n):
            prod = prod * tables[i][m_vec[i]]
        residual = prod * qpow(-k) - 1
        if _meets_threshold(residual, threshold):
            found.append((m_vec, k))
    return found
