"""Modules and bimodules by action matrices; tensor over a subalgebra; twists.

Action convention: a module element is a column vector; the operator stored
for an algebra basis element maps coordinates to coordinates.  For a right
module, acting by e_i then e_j composes as op(e_j) . op(e_i).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra
from .linalg import (
    LinearMap,
    QuotientData,
    ShapeError,
    Space,
    columns_of,
    cols_times_vec,
    identity_rows,
    kernel_basis,
    mat_eq,
    mat_mul,
    quotient_space,
    tensor_space,
    unit_vec,
    vec_is_zero,
    zeros,
)
from .report import Report, VerificationError


@dataclass
class LeftModule:
    algebra: Algebra
    space: Space
    ops: list  # ops[i] = matrix of the action of algebra basis e_i

    def act(self, i, v):
        f = self.algebra.field
        return cols_times_vec(f, columns_of(f, self.ops[i]), self.space.dim, v)

    def act_by(self, a, v):
        """Action of a general algebra element (dense vector)."""
        f = self.algebra.field
        out = [f.zero] * self.space.dim
        for i, c in enumerate(a):
            if f.is_zero(c):
                continue
            w = self.act(i, v)
            out = [f.add(x, f.mul(c, y)) for x, y in zip(out, w)]
        return out

    def operator_of(self, a):
        f = self.algebra.field
        n = self.space.dim
        out = zeros(f, n, n)
        for i, c in enumerate(a):
            if f.is_zero(c):
                continue
            for r in range(n):
                row = self.ops[i][r]
                orow = out[r]
                for s, x in enumerate(row):
                    if not f.is_zero(x):
                        orow[s] = f.add(orow[s], f.mul(c, x))
        return out


@dataclass
class RightModule(LeftModule):
    pass


@dataclass
class Bimodule:
    left: LeftModule
    right: RightModule

    @property
    def space(self):
        return self.left.space


def _combined_operator(field, ops, coeffs, n):
    out = zeros(field, n, n)
    for i, c in enumerate(coeffs):
        if field.is_zero(c):
            continue
        op = ops[i]
        for r in range(n):
            row = op[r]
            orow = out[r]
            for s, x in enumerate(row):
                if not field.is_zero(x):
                    orow[s] = field.add(orow[s], field.mul(c, x))
    return out


def verify_left_module(mod: LeftModule, task="left module") -> Report:
    f = mod.algebra.field
    n = mod.space.dim
    rep = Report(task, dims={"dim": n})
    unit_op = _combined_operator(f, mod.ops, mod.algebra.unit, n)
    rep.add("unit acts as identity", mat_eq(f, unit_op, identity_rows(f, n)))
    ok, witness = True, None
    for i in range(mod.algebra.dim):
        for j in range(mod.algebra.dim):
            comp = mat_mul(f, mod.ops[i], mod.ops[j])
            prod_op = zeros(f, n, n)
            for k, c in mod.algebra.table[i][j]:
                for r in range(n):
                    for s, x in enumerate(mod.ops[k][r]):
                        if not f.is_zero(x):
                            prod_op[r][s] = f.add(prod_op[r][s], f.mul(c, x))
            if not mat_eq(f, comp, prod_op):
                ok, witness = False, {"pair": [mod.algebra.label(i), mod.algebra.label(j)]}
                break
        if not ok:
            break
    rep.add("action respects products", ok, witness)
    return rep


def verify_right_module(mod: RightModule, task="right module") -> Report:
    f = mod.algebra.field
    n = mod.space.dim
    rep = Report(task, dims={"dim": n})
    unit_op = _combined_operator(f, mod.ops, mod.algebra.unit, n)
    rep.add("unit acts as identity", mat_eq(f, unit_op, identity_rows(f, n)))
    ok, witness = True, None
    for i in range(mod.algebra.dim):
        for j in range(mod.algebra.dim):
            comp = mat_mul(f, mod.ops[j], mod.ops[i])  # act by e_i, then e_j
            prod_op = zeros(f, n, n)
            for k, c in mod.algebra.table[i][j]:
                for r in range(n):
                    for s, x in enumerate(mod.ops[k][r]):
                        if not f.is_zero(x):
                            prod_op[r][s] = f.add(prod_op[r][s], f.mul(c, x))
            if not mat_eq(f, comp, prod_op):
                ok, witness = False, {"pair": [mod.algebra.label(i), mod.algebra.label(j)]}
                break
        if not ok:
            break
    rep.add("action respects products", ok, witness)
    return rep


def verify_bimodule(bim: Bimodule, task="bimodule") -> Report:
    f = bim.left.algebra.field
    rep = Report(task)
    rep.merge(verify_left_module(bim.left), "left: ")
    rep.merge(verify_right_module(bim.right), "right: ")
    ok, witness = True, None
    for i in range(bim.left.algebra.dim):
        for j in range(bim.right.algebra.dim):
            lr = mat_mul(f, bim.left.ops[i], bim.right.ops[j])
            rl = mat_mul(f, bim.right.ops[j], bim.left.ops[i])
            if not mat_eq(f, lr, rl):
                ok = False
                witness = {"left": bim.left.algebra.label(i),
                           "right": bim.right.algebra.label(j)}
                break
        if not ok:
            break
    rep.add("actions commute", ok, witness)
    return rep


def regular_left_module(alg: Algebra) -> LeftModule:
    ops = [alg.left_mult_matrix(unit_vec(alg.field, alg.dim, i)) for i in range(alg.dim)]
    return LeftModule(alg, alg.space, ops)


def regular_right_module(alg: Algebra) -> RightModule:
    ops = [alg.right_mult_matrix(unit_vec(alg.field, alg.dim, i)) for i in range(alg.dim)]
    return RightModule(alg, alg.space, ops)


def restricted_module(module_cls, alg_small: Algebra, incl: LinearMap, big: LeftModule):
    """Restrict an action along an algebra map (small basis acts via its image)."""
    ops = [big.operator_of(incl.column(i)) for i in range(alg_small.dim)]
    return module_cls(alg_small, big.space, ops)


def twist_left(mod: LeftModule, beta_rows) -> LeftModule:
    """Left action precomposed with an automorphism: b . m = beta(b) m."""
    f = mod.algebra.field
    n = mod.space.dim
    ops = []
    for i in range(mod.algebra.dim):
        col = [beta_rows[r][i] for r in range(mod.algebra.dim)]
        ops.append(_combined_operator(f, mod.ops, col, n))
    out = LeftModule(mod.algebra, mod.space, ops)
    verify_left_module(out, "twisted left module").raise_if_failed()
    return out


def twist_right(mod: RightModule, beta_rows) -> RightModule:
    f = mod.algebra.field
    n = mod.space.dim
    ops = []
    for i in range(mod.algebra.dim):
        col = [beta_rows[r][i] for r in range(mod.algebra.dim)]
        ops.append(_combined_operator(f, mod.ops, col, n))
    out = RightModule(mod.algebra, mod.space, ops)
    verify_right_module(out, "twisted right module").raise_if_failed()
    return out


# ---------------------------------------------------------------------------
# tensor over a subalgebra


@dataclass
class TensorOverData:
    """M (x)_B N: quotient of M (x) N by (m.b (x) n) - (m (x) b.n)."""

    quotient: QuotientData
    m_space: Space
    n_space: Space

    @property
    def space(self):
        return self.quotient.space

    def pure(self, mv, nv, field):
        """Class of a pure tensor (dense m-vector, dense n-vector)."""
        nn = self.n_space.dim
        amb = [field.zero] * (self.m_space.dim * nn)
        for i, a in enumerate(mv):
            if field.is_zero(a):
                continue
            for j, b in enumerate(nv):
                if not field.is_zero(b):
                    amb[i * nn + j] = field.mul(a, b)
        return self.quotient.project(amb)


def tensor_over(m: RightModule, n: LeftModule) -> TensorOverData:
    if m.algebra is not n.algebra and m.algebra.table != n.algebra.table:
        raise ShapeError("tensor factors are modules over different algebras")
    f = m.algebra.field
    dm, dn = m.space.dim, n.space.dim
    amb = tensor_space(m.space, n.space)
    relations = []
    for b in range(m.algebra.dim):
        mop = m.ops[b]
        nop = n.ops[b]
        m_cols = columns_of(f, mop)
        n_cols = columns_of(f, nop)
        for i in range(dm):
            for j in range(dn):
                rel = [f.zero] * (dm * dn)
                for r, c in m_cols[i]:
                    rel[r * dn + j] = f.add(rel[r * dn + j], c)
                for s, c in n_cols[j]:
                    rel[i * dn + s] = f.sub(rel[i * dn + s], c)
                if not vec_is_zero(f, rel):
                    relations.append(rel)
    q = quotient_space(f, amb, relations)
    return TensorOverData(q, m.space, n.space)


def transported_operator(field, q: QuotientData, amb_op_rows, side_note="operator"):
    """proj . op . section on a quotient, verifying op maps relations into them.

    The well-definedness check is exactly: op(r) projects to zero for every
    relation r.
    """
    for r in q.relations:
        img = cols_times_vec(field, columns_of(field, amb_op_rows), len(amb_op_rows), r)
        if not vec_is_zero(field, q.project(img)):
            rep = Report("transport to quotient")
            rep.add(f"{side_note} well defined on quotient", False, {})
            raise VerificationError(rep)
    n_q = q.space.dim
    cols = []
    op_cols = columns_of(field, amb_op_rows)
    for j in range(n_q):
        lifted = q.section.column(j)
        img = cols_times_vec(field, op_cols, len(amb_op_rows), lifted)
        cols.append(q.project(img))
    rows = zeros(field, n_q, n_q)
    for j, col in enumerate(cols):
        for i, a in enumerate(col):
            rows[i][j] = a
    return rows


def kron_operator(field, a_rows, a_dim, b_rows, b_dim):
    """Operator a (x) b on the lexicographic tensor basis (square matrices)."""
    from .linalg import kron_rows
    return kron_rows(field, a_rows, (a_dim, a_dim), b_rows, (b_dim, b_dim))


# ---------------------------------------------------------------------------
# invariants and B-valued Hom


def invariant_subspace(field, space: Space, ops, weights):
    """{v : op_i v = w_i v} as a list of basis vectors (canonical kernel basis)."""
    rows = []
    n = space.dim
    for op, w in zip(ops, weights):
        for r in range(n):
            row = list(op[r])
            row[r] = field.sub(row[r], w)
            if not vec_is_zero(field, row):
                rows.append(row)
    if not rows:
        return identity_rows(field, n)
    return kernel_basis(field, rows)


def hom_over_subalgebra(field, a_alg: Algebra, b_alg: Algebra, incl: LinearMap):
    """The space of left-B-linear maps theta: A -> B, theta(b x) = b theta(x).

    Returns (basis of theta-matrices (dimB x dimA), flattened basis vectors).
    """
    da, db = a_alg.dim, b_alg.dim
    rows = []
    # unknowns theta_{r s} = coefficient of e_r^B in theta(e_s^A), row-major
    for bi in range(db):
        bvec = incl.column(bi)
        lmul_a = a_alg.left_mult_matrix(bvec)       # x |-> incl(b) x on A
        lmul_b = b_alg.left_mult_matrix(unit_vec(field, db, bi))  # on B
        for s in range(da):
            img_col = [lmul_a[r][s] for r in range(da)]  # incl(b) e_s in A
            for r in range(db):
                row = [field.zero] * (db * da)
                # theta(incl(b) e_s)_r
                for t, c in enumerate(img_col):
                    if not field.is_zero(c):
                        row[r * da + t] = field.add(row[r * da + t], c)
                # minus (b . theta(e_s))_r
                for t in range(db):
                    c = lmul_b[r][t]
                    if not field.is_zero(c):
                        row[t * da + s] = field.sub(row[t * da + s], c)
                if not vec_is_zero(field, row):
                    rows.append(row)
    flat = kernel_basis(field, rows) if rows else identity_rows(field, db * da)
    mats = [[v[r * da : (r + 1) * da] for r in range(db)] for v in flat]
    return mats, flat
