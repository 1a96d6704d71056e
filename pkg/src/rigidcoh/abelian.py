"""Exact arithmetic for finitely generated abelian groups.

A group is presented as Z^g modulo the column span of an integer relation
matrix.  Everything structural (kernels, cokernels, torsion, finite duals,
element equality) reduces to Smith normal form over Z, computed with exact
integer arithmetic and explicit unimodular transforms.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import prod

# Matrices are dense row-major lists of lists of ints.


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(rows, cols):
    return [[0] * cols for _ in range(rows)]


def mat_copy(m):
    return [row[:] for row in m]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    if a and len(a[0]) != inner:
        raise ValueError("matrix dimensions do not match")
    out = []
    for i in range(rows):
        arow = a[i]
        orow = [0] * cols
        for k in range(inner):
            aik = arow[k]
            if aik:
                brow = b[k]
                for j in range(cols):
                    orow[j] += aik * brow[j]
        out.append(orow)
    return out


def mat_vec(m, v):
    return [sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m))]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(k, m):
    return [[k * x for x in row] for row in m]


def transpose(m):
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def mat_eq(a, b):
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def columns(m):
    return [list(col) for col in zip(*m)] if m and m[0] else []


def from_columns(cols, rows=None):
    if not cols:
        return [[] for _ in range(rows)] if rows else []
    return [list(r) for r in zip(*cols)]


def det(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = mat_copy(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def mat_inverse_unimodular(m):
    """Inverse of an integer matrix with determinant +-1, as an integer matrix."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = [[x for x in row[n:]] for row in aug]
    for row in out:
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


def smith_normal_form(mat):
    """Smith normal form with transforms: returns (U, D, V) with U*mat*V = D.

    D is diagonal with d1 | d2 | ... >= 0 and U, V unimodular.  Pivoting
    always selects a smallest-absolute-value nonzero entry, and rows and
    columns are reduced eagerly, which keeps coefficient growth tame on the
    small dense matrices this library handles.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    A = mat_copy(mat)
    U = identity_matrix(m)
    V = identity_matrix(n)

    def row_op(i, k, q):  # row_i -= q * row_k
        Ai, Ak = A[i], A[k]
        for j in range(n):
            Ai[j] -= q * Ak[j]
        Ui, Uk = U[i], U[k]
        for j in range(m):
            Ui[j] -= q * Uk[j]

    def col_op(j, k, q):  # col_j -= q * col_k
        for i in range(m):
            A[i][j] -= q * A[i][k]
        for i in range(n):
            V[i][j] -= q * V[i][k]

    def row_swap(i, k):
        if i != k:
            A[i], A[k] = A[k], A[i]
            U[i], U[k] = U[k], U[i]

    def col_swap(j, k):
        if j != k:
            for i in range(m):
                A[i][j], A[i][k] = A[i][k], A[i][j]
            for i in range(n):
                V[i][j], V[i][k] = V[i][k], V[i][j]

    def diagonalize(start):
        t = start
        while t < min(m, n):
            best = None
            piv = None
            for i in range(t, m):
                for j in range(t, n):
                    a = abs(A[i][j])
                    if a and (best is None or a < best):
                        best, piv = a, (i, j)
            if piv is None:
                break
            row_swap(t, piv[0])
            col_swap(t, piv[1])
            while True:
                promoted = False
                for i in range(t + 1, m):
                    if A[i][t]:
                        q = A[i][t] // A[t][t]
                        row_op(i, t, q)
                        if A[i][t]:  # remainder strictly smaller: new pivot
                            row_swap(t, i)
                            promoted = True
                for j in range(t + 1, n):
                    if A[t][j]:
                        q = A[t][j] // A[t][t]
                        col_op(j, t, q)
                        if A[t][j]:
                            col_swap(t, j)
                            promoted = True
                if not promoted and all(A[i][t] == 0 for i in range(t + 1, m)) \
                        and all(A[t][j] == 0 for j in range(t + 1, n)):
                    break
            t += 1
        return t

    rank = diagonalize(0)
    for i in range(rank):
        if A[i][i] < 0:
            for j in range(n):
                A[i][j] = -A[i][j]
            for j in range(m):
                U[i][j] = -U[i][j]

    # Repair the divisibility chain: fold an offending successor into its
    # predecessor's column and re-diagonalize from there.
    changed = True
    guard = 0
    while changed:
        changed = False
        guard += 1
        if guard > 16 * (rank + 1):
            raise RuntimeError("divisibility repair failed to terminate")
        for i in range(rank - 1):
            if A[i + 1][i + 1] % A[i][i] != 0:
                col_op(i, i + 1, -1)
                rank = diagonalize(i)
                for k in range(i, rank):
                    if A[k][k] < 0:
                        for j in range(n):
                            A[k][j] = -A[k][j]
                        for j in range(m):
                            U[k][j] = -U[k][j]
                changed = True
                break
    return U, A, V


def solve_integer(mat, rhs):
    """One integer solution x of mat*x = rhs, or None if none exists."""
    U, D, V = smith_normal_form(mat)
    m = len(mat)
    n = len(mat[0]) if m else 0
    c = mat_vec(U, rhs)
    w = [0] * n
    for i in range(m):
        d = D[i][i] if i < min(m, n) else 0
        if d:
            if c[i] % d:
                return None
            w[i] = c[i] // d
        elif c[i] != 0:
            return None
    return mat_vec(V, w)


def kernel_basis(mat):
    """Basis (list of columns) of the integer kernel lattice of mat."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if n == 0:
        return []
    _, D, V = smith_normal_form(mat)
    r = sum(1 for i in range(min(m, n)) if D[i][i])
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


def lattice_basis(cols, dim):
    """Basis of the sublattice of Z^dim spanned by the given columns."""
    if not cols:
        return []
    M = from_columns(cols, rows=dim)
    U, D, _ = smith_normal_form(M)
    Uinv = mat_inverse_unimodular(U)
    r = sum(1 for i in range(min(dim, len(cols))) if D[i][i])
    return [[D[j][j] * Uinv[i][j] for i in range(dim)] for j in range(r)]


class FinAb:
    """Finitely generated abelian group Z^g / (column span of relations)."""

    def __init__(self, generator_count, relations=None):
        self.ngens = generator_count
        if relations is None or (relations and not relations[0]) or not relations:
            relations = [[] for _ in range(generator_count)]
        if len(relations) != generator_count:
            raise ValueError("relation matrix must have one row per generator")
        self.relations = mat_copy(relations)
        nrel = len(relations[0]) if relations and relations[0] else 0
        self.nrels = nrel
        U, D, V = smith_normal_form(self.relations) if generator_count else \
            ([], [], identity_matrix(nrel))
        self.snf_U = U if generator_count else []
        self.snf_V = V
        self.snf_Uinv = mat_inverse_unimodular(U) if generator_count else []
        self.orders = []
        for i in range(generator_count):
            d = D[i][i] if i < min(generator_count, nrel) else 0
            self.orders.append(d)
        self.invariant_factors = tuple(d for d in self.orders if d >= 2)
        self.free_rank = sum(1 for d in self.orders if d == 0)

    # -- structure ---------------------------------------------------------

    def is_finite(self):
        return self.free_rank == 0

    def order(self):
        if not self.is_finite():
            raise ValueError("group is infinite")
        return prod(self.invariant_factors) if self.invariant_factors else 1

    def exponent(self):
        if not self.is_finite():
            raise ValueError("group is infinite")
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def describe(self):
        """Canonical form, e.g. 'Z^2 x Z/2 x Z/4' or '0'."""
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " x ".join(parts) if parts else "0"

    # -- elements ----------------------------------------------------------

    def element(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ngens:
            raise ValueError("wrong coordinate length")
        return AbElement(self, coords)

    def zero(self):
        return self.element((0,) * self.ngens)

    def generator(self, i):
        return self.element(tuple(int(j == i) for j in range(self.ngens)))

    def generators(self):
        return [self.generator(i) for i in range(self.ngens)]

    def canonical(self, coords):
        c = mat_vec(self.snf_U, list(coords))
        return tuple(c[i] % d if (d := self.orders[i]) else c[i]
                     for i in range(self.ngens))

    def from_canonical(self, canon):
        return self.element(mat_vec(self.snf_Uinv, list(canon)))

    def is_zero_coords(self, coords):
        return all(c == 0 for c in self.canonical(coords))

    def elements(self):
        """All elements (finite groups only), in a deterministic order."""
        if not self.is_finite():
            raise ValueError("group is infinite")
        ranges = [range(d) for d in self.orders]
        for canon in product(*ranges):
            yield self.from_canonical(canon)

    def element_order(self, elem):
        canon = self.canonical(elem.coords)
        n = 1
        for c, d in zip(canon, self.orders):
            if d == 0:
                if c:
                    raise ValueError("element has infinite order")
                continue
            if c:
                k = d // _gcd(c, d)
                n = n * k // _gcd(n, k)
        return n

    def __repr__(self):
        return f"FinAb({self.describe()})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


class AbElement:
    """Element of a FinAb, stored as integer coordinates on the generators."""

    __slots__ = ("group", "coords")

    def __init__(self, group, coords):
        self.group = group
        self.coords = tuple(coords)

    def __add__(self, other):
        if other.group is not self.group:
            raise ValueError("elements of different groups")
        return AbElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AbElement(self.group, tuple(-a for a in self.coords))

    def __rmul__(self, k):
        return AbElement(self.group, tuple(int(k) * a for a in self.coords))

    def __eq__(self, other):
        if not isinstance(other, AbElement) or other.group is not self.group:
            return NotImplemented
        return self.group.canonical(self.coords) == other.group.canonical(other.coords)

    def __hash__(self):
        return hash(self.group.canonical(self.coords))

    def is_zero(self):
        return self.group.is_zero_coords(self.coords)

    def __repr__(self):
        return f"AbElement{self.coords}"


class AbHom:
    """Homomorphism between FinAb groups, given on generator coordinates."""

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        if len(matrix) != target.ngens or (matrix and len(matrix[0]) != source.ngens):
            if not (target.ngens == 0 and not matrix) and \
               not (source.ngens == 0 and all(len(r) == 0 for r in matrix)):
                raise ValueError("hom matrix has wrong shape")
        self.matrix = mat_copy(matrix)

    def __call__(self, elem):
        if elem.group is not self.source:
            raise ValueError("element not in the source group")
        return self.target.element(mat_vec(self.matrix, list(elem.coords)))

    def is_well_defined(self):
        for rel in columns(self.source.relations):
            if not self.target.is_zero_coords(mat_vec(self.matrix, rel)):
                return False
        return True

    def compose(self, other):
        """self after other."""
        if other.target is not self.source:
            raise ValueError("homs do not compose")
        return AbHom(other.source, self.target, mat_mul(self.matrix, other.matrix))

    def is_invertible(self):
        if self.source.ngens == 0 or self.target.ngens == 0:
            return (self.source.ngens == 0 or all(d == 1 for d in self.source.orders)) and \
                   (self.target.ngens == 0 or all(d == 1 for d in self.target.orders))
        ker, _ = kernel(self)
        if not ker.is_finite() or ker.order() != 1:
            return False
        cok, _ = cokernel(self)
        return cok.is_finite() and cok.order() == 1

    @staticmethod
    def identity(group):
        return AbHom(group, group, identity_matrix(group.ngens))

    def __repr__(self):
        return f"AbHom({self.source.describe()} -> {self.target.describe()})"


class IllDefinedHom(ValueError):
    pass


def _require_well_defined(f):
    if not f.is_well_defined():
        raise IllDefinedHom("homomorphism does not respect the source relations")


def subgroup(ambient, generator_cols):
    """Subgroup of `ambient` generated by the given coordinate columns.

    Returns (group, inclusion).  The subgroup is presented on the given
    generators; relations are all integer combinations that die in ambient.
    """
    k = len(generator_cols)
    if k == 0:
        return FinAb(0), AbHom(FinAb(0), ambient, [[] for _ in range(ambient.ngens)])
    P = from_columns(generator_cols, rows=ambient.ngens)
    aug = [P[i] + ambient.relations[i] for i in range(ambient.ngens)]
    rels = [kv[:k] for kv in kernel_basis(aug)]
    grp = FinAb(k, from_columns(rels, rows=k))
    return grp, AbHom(grp, ambient, P)


def kernel(f: AbHom):
    """Kernel of a hom, as (group, inclusion into the source)."""
    _require_well_defined(f)
    sg, tg = f.source.ngens, f.target.ngens
    if sg == 0:
        z = FinAb(0)
        return z, AbHom(z, f.source, [])
    aug = [f.matrix[i] + f.target.relations[i] for i in range(tg)] if tg else []
    if not aug:
        cols = columns(identity_matrix(sg))
    else:
        cols = [kv[:sg] for kv in kernel_basis(aug)]
    return subgroup(f.source, cols)


def cokernel(f: AbHom):
    """Cokernel target/image(f), as (group, projection from the target)."""
    _require_well_defined(f)
    tg = f.target.ngens
    rels = [f.target.relations[i] + f.matrix[i] for i in range(tg)]
    grp = FinAb(tg, rels)
    return grp, AbHom(f.target, grp, identity_matrix(tg))


def image_order(f: AbHom):
    """Order of the image of f (finite target required)."""
    cok, _ = cokernel(f)
    return f.target.order() // cok.order()


def torsion_subgroup(A: FinAb):
    """The full torsion subgroup, as (group, inclusion)."""
    cols = []
    for i, d in enumerate(A.orders):
        if d != 0:
            cols.append([A.snf_Uinv[r][i] for r in range(A.ngens)])
    return subgroup(A, cols)


def quotient(A: FinAb, sub_inclusion: AbHom):
    """Quotient of A by the image of a subgroup inclusion: (group, projection)."""
    return cokernel(sub_inclusion)


class FiniteDual:
    """Character group Hom(A, Q/Z) of a finite A, with the evaluation pairing."""

    def __init__(self, A: FinAb):
        if not A.is_finite():
            raise ValueError("dual requires a finite group")
        self.source = A
        self.group = FinAb(A.ngens, [[A.orders[i] if i == j else 0
                                      for j in range(A.ngens)]
                                     for i in range(A.ngens)])

    def eval(self, chi: AbElement, a: AbElement) -> Fraction:
        """Pairing value in Q/Z, as a Fraction in [0, 1)."""
        if chi.group is not self.group or a.group is not self.source:
            raise ValueError("arguments belong to the wrong groups")
        y = self.source.canonical(a.coords)
        total = Fraction(0)
        for ci, yi, d in zip(chi.coords, y, self.source.orders):
            total += Fraction(ci * yi, d)
        return total - (total.numerator // total.denominator)


def dual_finite(A: FinAb) -> FiniteDual:
    return FiniteDual(A)
