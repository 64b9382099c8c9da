"""Exact dense linear algebra over the ground field.

Conventions used across the package:
  * a vector is a plain list of scalars, length = space dim;
  * a matrix is a list of rows; a LinearMap stores the codomain x domain
    matrix whose column j is the image of the j-th domain basis vector;
  * tensor bases are ordered lexicographically, left factor major, with
    labels "u⊗v".

All reductions go through the canonical RREF kernels, so every basis this
module returns is deterministic (identical inputs give identical output).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .fields import PrimeField


class ShapeError(ValueError):
    """Dimension mismatch between operands."""


@dataclass(frozen=True)
class Space:
    dim: int
    labels: tuple

    def __post_init__(self):
        if self.dim != len(self.labels):
            raise ShapeError(f"dim {self.dim} != {len(self.labels)} labels")
        if len(set(self.labels)) != self.dim:
            raise ShapeError("duplicate basis labels")

    @staticmethod
    def make(labels) -> "Space":
        labels = tuple(labels)
        return Space(len(labels), labels)


def tensor_space(v: Space, w: Space) -> Space:
    labels = tuple(f"{a}⊗{b}" for a in v.labels for b in w.labels)
    return Space(v.dim * w.dim, labels)


def dual_space(v: Space) -> Space:
    return Space(v.dim, tuple(f"{a}^" for a in v.labels))


# ---------------------------------------------------------------------------
# vector / matrix helpers


def zero_vec(field, n):
    return [field.zero] * n


def unit_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def vec_add(field, u, v):
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field, u, v):
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_scale(field, c, v):
    return [field.mul(c, a) for a in v]


def vec_is_zero(field, v):
    return all(field.is_zero(a) for a in v)


def vec_eq(field, u, v):
    return all(field.is_zero(field.sub(a, b)) for a, b in zip(u, v))


def sparse_of(field, v):
    """[(index, coeff)] for the nonzero entries of a dense vector."""
    return [(i, a) for i, a in enumerate(v) if not field.is_zero(a)]


def dense_of(field, sparse, n):
    v = [field.zero] * n
    for i, a in sparse:
        v[i] = field.add(v[i], a)
    return v


def zeros(field, m, n):
    return [[field.zero] * n for _ in range(m)]


def identity_rows(field, n):
    return [unit_vec(field, n, i) for i in range(n)]


def mat_vec(field, rows, v):
    if rows and len(rows[0]) != len(v):
        raise ShapeError(f"matrix has {len(rows[0])} columns, vector has {len(v)}")
    out = []
    for row in rows:
        acc = field.zero
        for a, b in zip(row, v):
            if not (field.is_zero(a) or field.is_zero(b)):
                acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out


def columns_of(field, rows):
    """Sparse columns [(row, coeff)] of a dense matrix."""
    if not rows:
        return []
    ncols = len(rows[0])
    cols = [[] for _ in range(ncols)]
    for i, row in enumerate(rows):
        for j, a in enumerate(row):
            if not field.is_zero(a):
                cols[j].append((i, a))
    return cols


def cols_times_vec(field, cols, nrows, v):
    """Matrix-vector product from sparse columns; v dense."""
    out = [field.zero] * nrows
    for j, b in enumerate(v):
        if field.is_zero(b):
            continue
        for i, a in cols[j]:
            out[i] = field.add(out[i], field.mul(a, b))
    return out


def mat_mul(field, a_rows, b_rows):
    if a_rows and b_rows and len(a_rows[0]) != len(b_rows):
        raise ShapeError("inner dimensions differ")
    b_cols = columns_of(field, b_rows)
    nrows = len(a_rows)
    ncols = len(b_rows[0]) if b_rows else 0
    out = zeros(field, nrows, ncols)
    for i, arow in enumerate(a_rows):
        for k, c in enumerate(arow):
            if field.is_zero(c):
                continue
            brow = b_rows[k]
            orow = out[i]
            for j, b in enumerate(brow):
                if not field.is_zero(b):
                    orow[j] = field.add(orow[j], field.mul(c, b))
    return out


def mat_sub(field, a, b):
    return [vec_sub(field, r, s) for r, s in zip(a, b)]


def mat_eq(field, a, b):
    return all(vec_eq(field, r, s) for r, s in zip(a, b))


def kron_rows(field, a_rows, a_shape, b_rows, b_shape):
    """Kronecker product on lexicographic tensor bases (left factor major)."""
    am, an = a_shape
    bm, bn = b_shape
    out = zeros(field, am * bm, an * bn)
    for i in range(am):
        arow = a_rows[i]
        for j in range(an):
            a = arow[j]
            if field.is_zero(a):
                continue
            for k in range(bm):
                brow = b_rows[k]
                orow = out[i * bm + k]
                for l in range(bn):
                    b = brow[l]
                    if not field.is_zero(b):
                        orow[j * bn + l] = field.add(orow[j * bn + l], field.mul(a, b))
    return out


def flatten_rows(rows):
    """Row-major flattening of a matrix into a vector."""
    out = []
    for row in rows:
        out.extend(row)
    return out


def unflatten(vec, nrows, ncols):
    return [list(vec[i * ncols : (i + 1) * ncols]) for i in range(nrows)]


# ---------------------------------------------------------------------------
# linear maps


@dataclass
class LinearMap:
    field: object
    domain: Space
    codomain: Space
    rows: list  # codomain.dim x domain.dim

    def __post_init__(self):
        if len(self.rows) != self.codomain.dim:
            raise ShapeError("row count != codomain dim")
        for r in self.rows:
            if len(r) != self.domain.dim:
                raise ShapeError("column count != domain dim")

    def apply(self, v):
        return mat_vec(self.field, self.rows, v)

    def column(self, j):
        return [row[j] for row in self.rows]

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        if other.codomain.dim != self.domain.dim:
            raise ShapeError("composition mismatch")
        return LinearMap(self.field, other.domain, self.codomain,
                         mat_mul(self.field, self.rows, other.rows))

    def kron(self, other: "LinearMap") -> "LinearMap":
        rows = kron_rows(self.field, self.rows, (self.codomain.dim, self.domain.dim),
                         other.rows, (other.codomain.dim, other.domain.dim))
        return LinearMap(self.field, tensor_space(self.domain, other.domain),
                         tensor_space(self.codomain, other.codomain), rows)

    def rank(self):
        return rank(self.field, self.rows)

    def is_injective(self):
        return self.rank() == self.domain.dim

    def is_bijective(self):
        return self.domain.dim == self.codomain.dim and self.rank() == self.domain.dim

    def inverse(self) -> "LinearMap":
        if not self.is_bijective():
            raise ShapeError("map is not invertible")
        n = self.domain.dim
        aug = [list(row) + unit_vec(self.field, n, i) for i, row in enumerate(self.rows)]
        pivots, rr = rref(self.field, aug)
        if list(pivots) != list(range(n)):
            raise ShapeError("map is not invertible")
        inv_rows = [row[n:] for row in rr]
        return LinearMap(self.field, self.codomain, self.domain, inv_rows)

    @staticmethod
    def identity(field, space: Space) -> "LinearMap":
        return LinearMap(field, space, space, identity_rows(field, space.dim))

    @staticmethod
    def from_columns(field, domain: Space, codomain: Space, cols) -> "LinearMap":
        rows = zeros(field, codomain.dim, domain.dim)
        for j, col in enumerate(cols):
            for i, a in enumerate(col):
                rows[i][j] = a
        return LinearMap(field, domain, codomain, rows)


# ---------------------------------------------------------------------------
# reductions


def rref(field, rows):
    """Canonical reduced row echelon form: (pivot columns, reduced rows)."""
    if isinstance(field, PrimeField):
        return kernels.rref_prime(rows, field.p)
    return kernels.rref_rational(rows)


def rank(field, rows):
    return len(rref(field, rows)[0])


def solve_linear(field, a_rows, b):
    """A solution x of Ax = b with free variables zero, or None if inconsistent."""
    if a_rows and len(b) != len(a_rows):
        raise ShapeError(f"matrix has {len(a_rows)} rows, rhs has {len(b)}")
    if not a_rows:
        return None if any(not field.is_zero(x) for x in b) else []
    n = len(a_rows[0])
    aug = [list(row) + [bi] for row, bi in zip(a_rows, b)]
    pivots, rr = rref(field, aug)
    if pivots and pivots[-1] == n:
        return None
    x = [field.zero] * n
    for k, p in enumerate(pivots):
        x[p] = rr[k][n]
    return x


def kernel_basis(field, a_rows):
    """Basis of the null space, one vector per free column, ascending."""
    if not a_rows:
        return []
    n = len(a_rows[0])
    pivots, rr = rref(field, a_rows)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [field.zero] * n
        v[f] = field.one
        for k, p in enumerate(pivots):
            v[p] = field.neg(rr[k][f])
        basis.append(v)
    return basis


@dataclass
class QuotientData:
    """A quotient space V / span(relations) with a fixed linear section."""

    space: Space
    proj: LinearMap
    section: LinearMap
    relations: list
    pivot_cols: tuple
    free_cols: tuple

    def project(self, v):
        return self.proj.apply(v)

    def lift(self, q):
        return self.section.apply(q)


def quotient_space(field, space: Space, relations, label_prefix="q") -> QuotientData:
    """Quotient by the span of the relation vectors.

    The section embeds the quotient onto the free coordinates, so
    proj . section = id and ker(proj) = span(relations); both are asserted.
    """
    for r in relations:
        if len(r) != space.dim:
            raise ShapeError("relation has wrong length")
    pivots, rr = rref(field, list(relations)) if relations else ((), [])
    pivot_set = set(pivots)
    free = [j for j in range(space.dim) if j not in pivot_set]
    q_space = Space.make(tuple(space.labels[j] for j in free))
    # proj: x  |->  (x - sum_k x[p_k] * row_k) restricted to the free columns
    proj_rows = []
    for fi, f in enumerate(free):
        row = [field.zero] * space.dim
        row[f] = field.one
        for k, p in enumerate(pivots):
            row[p] = field.neg(rr[k][f])
        proj_rows.append(row)
    sec_rows = zeros(field, space.dim, q_space.dim)
    for fi, f in enumerate(free):
        sec_rows[f][fi] = field.one
    proj = LinearMap(field, space, q_space, proj_rows)
    section = LinearMap(field, q_space, space, sec_rows)
    # per-call invariants
    comp = mat_mul(field, proj_rows, sec_rows)
    assert mat_eq(field, comp, identity_rows(field, q_space.dim)), "proj . section != id"
    for r in relations:
        assert vec_is_zero(field, proj.apply(r)), "relation does not project to zero"
    return QuotientData(q_space, proj, section, [list(r) for r in relations],
                        tuple(pivots), tuple(free))


class CoordinateSolver:
    """Repeated coordinate lookups in a fixed independent set of vectors.

    Columns are the basis vectors (length n, k of them, full column rank).
    coordinates(v) returns x with  basis . x = v,  or None if v is outside
    the span.
    """

    def __init__(self, field, basis_vectors, ambient_dim=None):
        self.field = field
        self.k = len(basis_vectors)
        n = ambient_dim if ambient_dim is not None else len(basis_vectors[0])
        self.n = n
        aug = []
        for i in range(n):
            row = [basis_vectors[j][i] for j in range(self.k)]
            row.extend(unit_vec(field, n, i))
            aug.append(row)
        pivots, rr = rref(field, aug)
        if list(pivots[: self.k]) != list(range(self.k)):
            raise ShapeError("basis vectors are not independent")
        self.transform = [row[self.k :] for row in rr]  # rank(aug)=n rows
        self.t_cols = columns_of(field, self.transform)

    def coordinates(self, v):
        w = cols_times_vec(self.field, self.t_cols, len(self.transform), v)
        for extra in w[self.k :]:
            if not self.field.is_zero(extra):
                return None
        return w[: self.k]

    def contains(self, v):
        return self.coordinates(v) is not None


class ReducedBasisSolver:
    """Coordinate lookups in a basis with signature columns.

    A signature column for basis vector s is a column where v_s has entry 1
    and every other basis vector has 0 (kernel_basis output always has one
    per vector: its free column).  Coordinates are then read off directly,
    followed by a reconstruction check for membership.
    """

    def __init__(self, field, basis_vectors, signature_cols, ambient_dim):
        self.field = field
        self.basis = basis_vectors
        self.sig = signature_cols
        self.n = ambient_dim
        self.k = len(basis_vectors)
        self._sparse = [sparse_of(field, v) for v in basis_vectors]

    def coordinates(self, v):
        f = self.field
        coords = [v[c] for c in self.sig]
        residual = list(v)
        for x, sp in zip(coords, self._sparse):
            if f.is_zero(x):
                continue
            for i, a in sp:
                residual[i] = f.sub(residual[i], f.mul(x, a))
        if not vec_is_zero(f, residual):
            return None
        return coords

    def contains(self, v):
        return self.coordinates(v) is not None


def _signature_columns(field, basis_vectors, ambient_dim):
    counts = [0] * ambient_dim
    owner = [-1] * ambient_dim
    for s, v in enumerate(basis_vectors):
        for i, a in enumerate(v):
            if not field.is_zero(a):
                counts[i] += 1
                owner[i] = s
    sig = [None] * len(basis_vectors)
    for i in range(ambient_dim):
        if counts[i] == 1:
            s = owner[i]
            if sig[s] is None and field.is_zero(field.sub(basis_vectors[s][i], field.one)):
                sig[s] = i
    if any(c is None for c in sig):
        return None
    return sig


def make_solver(field, basis_vectors, ambient_dim):
    """Best coordinate solver for the given independent vectors."""
    if basis_vectors:
        sig = _signature_columns(field, basis_vectors, ambient_dim)
        if sig is not None:
            return ReducedBasisSolver(field, basis_vectors, sig, ambient_dim)
    return CoordinateSolver(field, basis_vectors, ambient_dim)


def span_rank(field, vectors):
    return rank(field, list(vectors)) if vectors else 0


def subspace_leq(field, inner, outer):
    """span(inner) <= span(outer), by rank comparison."""
    if not inner:
        return True
    r_out = span_rank(field, outer)
    return span_rank(field, list(outer) + list(inner)) == r_out


def subspace_eq(field, u, v):
    return subspace_leq(field, u, v) and subspace_leq(field, v, u)
