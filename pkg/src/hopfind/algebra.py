"""Finite-dimensional associative unital algebras by structure constants.

The multiplication table is stored sparsely: table[i][j] is the list of
(k, coeff) pairs appearing in e_i * e_j.  Vectors are dense lists; products
of general elements iterate only over nonzero coordinates, which keeps the
group-algebra-like instances (one term per product) fast.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    CoordinateSolver,
    LinearMap,
    make_solver,
    ShapeError,
    Space,
    columns_of,
    dense_of,
    flatten_rows,
    identity_rows,
    kernel_basis,
    mat_mul,
    sparse_of,
    tensor_space,
    unit_vec,
    vec_eq,
    zeros,
)
from .report import Report, VerificationError


@dataclass
class Algebra:
    field: object
    space: Space
    table: list  # table[i][j] = [(k, coeff), ...]
    unit: list   # dense vector

    @property
    def dim(self):
        return self.space.dim

    def mul_basis(self, i, j):
        return self.table[i][j]

    def mul(self, u, v):
        """Product of two dense vectors."""
        f = self.field
        out = [f.zero] * self.dim
        for i, a in enumerate(u):
            if f.is_zero(a):
                continue
            row = self.table[i]
            for j, b in enumerate(v):
                if f.is_zero(b):
                    continue
                ab = f.mul(a, b)
                for k, c in row[j]:
                    out[k] = f.add(out[k], f.mul(ab, c))
        return out

    def left_mult_matrix(self, v):
        """Matrix of x |-> v*x."""
        f = self.field
        rows = zeros(f, self.dim, self.dim)
        for i, a in enumerate(v):
            if f.is_zero(a):
                continue
            for j in range(self.dim):
                for k, c in self.table[i][j]:
                    rows[k][j] = f.add(rows[k][j], f.mul(a, c))
        return rows

    def right_mult_matrix(self, v):
        """Matrix of x |-> x*v."""
        f = self.field
        rows = zeros(f, self.dim, self.dim)
        for j, b in enumerate(v):
            if f.is_zero(b):
                continue
            for i in range(self.dim):
                for k, c in self.table[i][j]:
                    rows[k][i] = f.add(rows[k][i], f.mul(b, c))
        return rows

    def power(self, v, n):
        out = list(self.unit)
        for _ in range(n):
            out = self.mul(out, v)
        return out

    def label(self, i):
        return self.space.labels[i]


def algebra_from_products(field, space, products, unit):
    """Build an Algebra from a function (i, j) -> dense product vector."""
    table = []
    for i in range(space.dim):
        row = []
        for j in range(space.dim):
            row.append(sparse_of(field, products(i, j)))
        table.append(row)
    return Algebra(field, space, table, list(unit))


def verify_algebra(alg: Algebra, task="algebra axioms") -> Report:
    """Associativity and two-sided unit law, with a witness per failed axiom."""
    f = alg.field
    rep = Report(task, dims={"dim": alg.dim})
    n = alg.dim
    unit_ok = True
    witness = None
    for i in range(n):
        e = unit_vec(f, n, i)
        if not vec_eq(f, alg.mul(alg.unit, e), e) or not vec_eq(f, alg.mul(e, alg.unit), e):
            unit_ok, witness = False, {"basis": alg.label(i)}
            break
    rep.add("unit law", unit_ok, witness)
    assoc_ok = True
    witness = None
    dense = [[dense_of(f, alg.table[i][j], n) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            ij = dense[i][j]
            for l in range(n):
                left = alg.mul(ij, unit_vec(f, n, l))
                right = alg.mul(unit_vec(f, n, i), dense[j][l])
                if not vec_eq(f, left, right):
                    assoc_ok = False
                    witness = {"triple": [alg.label(i), alg.label(j), alg.label(l)]}
                    break
            if not assoc_ok:
                break
        if not assoc_ok:
            break
    rep.add("associativity", assoc_ok, witness)
    return rep


def opposite_algebra(alg: Algebra) -> Algebra:
    table = [[alg.table[j][i] for j in range(alg.dim)] for i in range(alg.dim)]
    return Algebra(alg.field, alg.space, table, list(alg.unit))


def tensor_algebra(a: Algebra, b: Algebra) -> Algebra:
    """Componentwise product on the lexicographic tensor basis."""
    if a.field != b.field:
        raise ShapeError("tensor factors over different fields")
    f = a.field
    space = tensor_space(a.space, b.space)
    nb = b.dim
    table = []
    for i1 in range(a.dim):
        for j1 in range(nb):
            row = []
            for i2 in range(a.dim):
                arow = a.table[i1][i2]
                for j2 in range(nb):
                    brow = b.table[j1][j2]
                    entry = []
                    for k1, c1 in arow:
                        for k2, c2 in brow:
                            entry.append((k1 * nb + k2, f.mul(c1, c2)))
                    entry.sort(key=lambda t: t[0])
                    row.append(entry)
            table.append(row)
    unit = [f.zero] * (a.dim * nb)
    for i, x in enumerate(a.unit):
        if f.is_zero(x):
            continue
        for j, y in enumerate(b.unit):
            if not f.is_zero(y):
                unit[i * nb + j] = f.mul(x, y)
    return Algebra(f, space, table, unit)


def matrix_algebra(n: int, coeff: Algebra) -> Algebra:
    """n x n matrices over a coefficient algebra, basis E_st (x) r, lexicographic."""
    if n < 1:
        raise ShapeError("matrix size must be >= 1")
    f = coeff.field
    d = coeff.dim
    labels = []
    for s in range(n):
        for t in range(n):
            for r in range(d):
                labels.append(f"E{s+1}{t+1}⊗{coeff.label(r)}" if d > 1 else f"E{s+1}{t+1}")
    space = Space.make(labels)

    def idx(s, t, r):
        return (s * n + t) * d + r

    table = [[[] for _ in range(space.dim)] for _ in range(space.dim)]
    for s in range(n):
        for t in range(n):
            for r1 in range(d):
                for u in range(n):
                    for v in range(n):
                        if t != u:
                            continue
                        for r2 in range(d):
                            entry = [(idx(s, v, k), c) for k, c in coeff.table[r1][r2]]
                            table[idx(s, t, r1)][idx(u, v, r2)] = entry
    unit = [f.zero] * space.dim
    for s in range(n):
        for r, c in enumerate(coeff.unit):
            if not f.is_zero(c):
                unit[idx(s, s, r)] = c
    return Algebra(f, space, table, unit)


def scalar_algebra(field) -> Algebra:
    space = Space.make(("1",))
    return Algebra(field, space, [[[(0, field.one)]]], [field.one])


# ---------------------------------------------------------------------------
# morphisms


@dataclass
class AlgebraMorphism:
    source: Algebra
    target: Algebra
    map: LinearMap
    report: Report


def verify_morphism(source: Algebra, target: Algebra, lin: LinearMap,
                    anti=False, require_bijective=False,
                    task="algebra morphism") -> Report:
    """f(1) = 1 and f(xy) = f(x)f(y) (reversed when anti) on all basis pairs."""
    f = source.field
    rep = Report(task, dims={"source": source.dim, "target": target.dim})
    rep.add("unitality", vec_eq(f, lin.apply(source.unit), target.unit))
    ok = True
    witness = None
    images = [lin.column(j) for j in range(source.dim)]
    n = source.dim
    for i in range(n):
        for j in range(n):
            prod = dense_of(f, source.table[i][j], n)
            lhs = lin.apply(prod)
            if anti:
                rhs = target.mul(images[j], images[i])
            else:
                rhs = target.mul(images[i], images[j])
            if not vec_eq(f, lhs, rhs):
                ok = False
                witness = {"pair": [source.label(i), source.label(j)]}
                break
        if not ok:
            break
    rep.add("anti-multiplicativity" if anti else "multiplicativity", ok, witness)
    if require_bijective:
        rep.add("bijectivity", lin.is_bijective(),
                {"rank": lin.rank(), "dim": source.dim})
    return rep


def algebra_morphism(source, target, lin, task="algebra morphism") -> AlgebraMorphism:
    rep = verify_morphism(source, target, lin, task=task)
    rep.raise_if_failed()
    return AlgebraMorphism(source, target, lin, rep)


# ---------------------------------------------------------------------------
# augmented algebras


@dataclass
class AugmentedAlgebra:
    algebra: Algebra
    aug: list  # dense row: aug[i] = alpha(e_i)

    def alpha(self, v):
        f = self.algebra.field
        acc = f.zero
        for a, b in zip(self.aug, v):
            acc = f.add(acc, f.mul(a, b))
        return acc


def verify_augmentation(alg: Algebra, aug, task="augmentation") -> Report:
    f = alg.field
    rep = Report(task)
    one = f.one

    def ev(v):
        acc = f.zero
        for a, b in zip(aug, v):
            acc = f.add(acc, f.mul(a, b))
        return acc

    rep.add("unitality", f.is_zero(f.sub(ev(alg.unit), one)))
    ok, witness = True, None
    for i in range(alg.dim):
        for j in range(alg.dim):
            prod = dense_of(f, alg.table[i][j], alg.dim)
            if not f.is_zero(f.sub(ev(prod), f.mul(aug[i], aug[j]))):
                ok, witness = False, {"pair": [alg.label(i), alg.label(j)]}
                break
        if not ok:
            break
    rep.add("multiplicativity", ok, witness)
    return rep


def augmented_algebra(alg: Algebra, aug) -> AugmentedAlgebra:
    verify_augmentation(alg, aug).raise_if_failed()
    return AugmentedAlgebra(alg, list(aug))


# ---------------------------------------------------------------------------
# subalgebras and commutants


@dataclass
class SubalgebraData:
    """A subspace of an ambient algebra, closed under product, as an Algebra."""

    algebra: Algebra
    basis: list          # vectors in the ambient space
    solver: CoordinateSolver
    ambient: Algebra | None


def subalgebra_on_basis(ambient: Algebra, basis, labels=None,
                        unit=None, task="subalgebra") -> SubalgebraData:
    """Structure constants of a multiplicatively closed span inside an algebra.

    Raises if the span is not closed or does not contain the unit.
    """
    f = ambient.field
    if labels is None:
        labels = tuple(f"b{i}" for i in range(len(basis)))
    solver = make_solver(f, basis, ambient.dim)
    unit_vecb = unit if unit is not None else ambient.unit
    unit_coords = solver.coordinates(list(unit_vecb))
    rep = Report(task)
    rep.require("unit in span", unit_coords is not None)
    space = Space.make(labels)
    table = []
    for i, u in enumerate(basis):
        row = []
        for j, v in enumerate(basis):
            prod = ambient.mul(u, v)
            coords = solver.coordinates(prod)
            if coords is None:
                rep.add("closure", False, {"pair": [labels[i], labels[j]]})
                raise VerificationError(rep)
            row.append(sparse_of(f, coords))
        table.append(row)
    alg = Algebra(f, space, table, unit_coords)
    return SubalgebraData(alg, [list(b) for b in basis], solver, ambient)


@dataclass
class CommutantData:
    """Endomorphisms commuting with a family of operators, as an algebra.

    basis_matrices[i] is the matrix of the i-th basis endomorphism; the
    algebra product is composition.  flatten/solver convert between
    matrices and coordinates.
    """

    algebra: Algebra
    basis_matrices: list
    solver: CoordinateSolver
    module_space: Space

    def coordinates_of_matrix(self, rows):
        return self.solver.coordinates(flatten_rows(rows))

    def matrix_of(self, coords):
        f = self.algebra.field
        n = self.module_space.dim
        out = zeros(f, n, n)
        for c, mat in zip(coords, self.basis_matrices):
            if f.is_zero(c):
                continue
            for i in range(n):
                row = mat[i]
                orow = out[i]
                for j, a in enumerate(row):
                    if not f.is_zero(a):
                        orow[j] = f.add(orow[j], f.mul(c, a))
        return out


def commutant_algebra(field, module_space: Space, operators, labels_prefix="f",
                      task="commutant") -> CommutantData:
    """The algebra {X : X.op = op.X for all given operators}, by kernel solve.

    Equations are assembled sparsely per operator; the returned basis is the
    canonical kernel basis, reshaped row-major to matrices.
    """
    n = module_space.dim
    rows = []
    for op in operators:
        op_cols = columns_of(field, op)
        # (X op - op X)_{a b} = sum_t X_{a t} op_{t b} - op_{a t} X_{t b}
        for a in range(n):
            for b in range(n):
                row = {}
                for t, c in op_cols[b]:
                    row[a * n + t] = field.add(row.get(a * n + t, field.zero), c)
                for t, c in enumerate(op[a]):
                    if not field.is_zero(c):
                        key = t * n + b
                        row[key] = field.sub(row.get(key, field.zero), c)
                if row:
                    dense = [field.zero] * (n * n)
                    for k, c in row.items():
                        dense[k] = c
                    rows.append(dense)
    basis_flat = kernel_basis(field, rows) if rows else identity_rows(field, n * n)
    matrices = [[v[i * n : (i + 1) * n] for i in range(n)] for v in basis_flat]
    solver = make_solver(field, basis_flat, n * n)
    k = len(matrices)
    labels = tuple(f"{labels_prefix}{i}" for i in range(k))
    space = Space.make(labels)
    rep = Report(task, dims={"dim": k, "module": n})
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            comp = mat_mul(field, matrices[i], matrices[j])
            coords = solver.coordinates(flatten_rows(comp))
            if coords is None:
                rep.add("closure under composition", False, {"pair": [i, j]})
                raise VerificationError(rep)
            row.append(sparse_of(field, coords))
        table.append(row)
    unit_coords = solver.coordinates(flatten_rows(identity_rows(field, n)))
    rep.require("identity in commutant", unit_coords is not None)
    alg = Algebra(field, space, table, unit_coords)
    return CommutantData(alg, matrices, solver, module_space)
