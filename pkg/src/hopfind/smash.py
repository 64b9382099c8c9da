"""Hopf module algebras, smash products, and their induction.

The smash product C # B lives on C (x) B (lexicographic) with
(c # b)(c' # b') = sum c (b_(1) . c') # b_(2) b'; the map b |-> 1 # b makes
it an interior B-algebra.  Induction of a module algebra goes through the
functional algebra F (injective case, carrier F (x) C) or through the
K-invariants C^K (surjective case, over the quotient B-bar).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, algebra_from_products, tensor_algebra, verify_algebra, verify_morphism
from .hopf import CoinvariantAlgebra, HopfAlgebra, HopfEmbedding, NormalQuotient, coinvariant_algebra
from .interior import InteriorAlgebra, interior_algebra
from .linalg import (
    LinearMap,
    Space,
    make_solver,
    unit_vec,
    vec_eq,
    vec_is_zero,
    zeros,
)
from .modules import LeftModule, invariant_subspace, verify_left_module
from .report import Report, VerificationError


@dataclass
class ModuleAlgebra:
    """An algebra C with a left Hopf action of B."""

    b: HopfAlgebra
    c: Algebra
    action: list  # action[i] = matrix on C for B basis e_i

    @property
    def field(self):
        return self.b.field

    def act(self, i, cv):
        f = self.field
        out = [f.zero] * self.c.dim
        mat = self.action[i]
        for s, x in enumerate(cv):
            if f.is_zero(x):
                continue
            for r in range(self.c.dim):
                a = mat[r][s]
                if not f.is_zero(a):
                    out[r] = f.add(out[r], f.mul(a, x))
        return out

    def act_by(self, bv, cv):
        f = self.field
        out = [f.zero] * self.c.dim
        for i, x in enumerate(bv):
            if f.is_zero(x):
                continue
            w = self.act(i, cv)
            out = [f.add(u, f.mul(x, v)) for u, v in zip(out, w)]
        return out


def verify_module_algebra(ma: ModuleAlgebra, task="module algebra") -> Report:
    """Module axioms plus the measuring axioms  b.(cc') = sum (b_(1).c)(b_(2).c')
    and b.1 = eps(b) 1."""
    f = ma.field
    rep = Report(task, dims={"dimB": ma.b.dim, "dimC": ma.c.dim})
    mod = LeftModule(ma.b.alg, ma.c.space, ma.action)
    rep.merge(verify_left_module(mod, "underlying module"), "module: ")
    ok, witness = True, None
    for i in range(ma.b.dim):
        lhs = ma.act(i, ma.c.unit)
        rhs = [f.mul(ma.b.counit[i], u) for u in ma.c.unit]
        if not vec_eq(f, lhs, rhs):
            ok, witness = False, {"basis": ma.b.alg.label(i)}
            break
    rep.add("unit is scaled by the counit", ok, witness)
    ok, witness = True, None
    dc = ma.c.dim
    for i in range(ma.b.dim):
        for s in range(dc):
            es = unit_vec(f, dc, s)
            for t in range(dc):
                et = unit_vec(f, dc, t)
                lhs = ma.act(i, ma.c.mul(es, et))
                rhs = [f.zero] * dc
                for j, k, c in ma.b.delta[i]:
                    term = ma.c.mul(ma.act(j, es), ma.act(k, et))
                    rhs = [f.add(x, f.mul(c, y)) for x, y in zip(rhs, term)]
                if not vec_eq(f, lhs, rhs):
                    ok = False
                    witness = {"basis": ma.b.alg.label(i),
                               "pair": [ma.c.label(s), ma.c.label(t)]}
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("action measures products", ok, witness)
    return rep


def module_algebra(b, c, action) -> ModuleAlgebra:
    ma = ModuleAlgebra(b, c, action)
    verify_module_algebra(ma).raise_if_failed()
    return ma


# ---------------------------------------------------------------------------
# smash products


@dataclass
class SmashProduct:
    algebra: Algebra
    ma: ModuleAlgebra
    structural: LinearMap  # b |-> 1 # b
    interior: InteriorAlgebra

    @property
    def dim(self):
        return self.algebra.dim

    def index(self, ci, bi):
        return ci * self.ma.b.dim + bi


def smash_product(ma: ModuleAlgebra, task="smash product") -> SmashProduct:
    f = ma.field
    b, c = ma.b, ma.c
    db, dc = b.dim, c.dim
    space = Space.make(tuple(f"{cl}#{bl}" for cl in c.space.labels for bl in b.space.labels))

    def products(t1, t2):
        c1, b1 = divmod(t1, db)
        c2, b2 = divmod(t2, db)
        out = [f.zero] * (dc * db)
        for j, k, coef in b.delta[b1]:
            left = c.mul(unit_vec(f, dc, c1), ma.act(j, unit_vec(f, dc, c2)))
            for bk, coef2 in b.alg.table[k][b2]:
                cc = f.mul(coef, coef2)
                for r, x in enumerate(left):
                    if not f.is_zero(x):
                        out[r * db + bk] = f.add(out[r * db + bk], f.mul(cc, x))
        return out

    unit = [f.zero] * (dc * db)
    for r, x in enumerate(c.unit):
        if f.is_zero(x):
            continue
        for s, y in enumerate(b.alg.unit):
            if not f.is_zero(y):
                unit[r * db + s] = f.mul(x, y)
    alg = algebra_from_products(f, space, products, unit)
    rep = Report(task, dims={"dim": alg.dim})
    rep.merge(verify_algebra(alg, "smash axioms"), "smash: ")
    cols = []
    for i in range(db):
        col = [f.zero] * (dc * db)
        for r, x in enumerate(c.unit):
            if not f.is_zero(x):
                col[r * db + i] = x
        cols.append(col)
    structural = LinearMap.from_columns(f, b.space, space, cols)
    rep.merge(verify_morphism(b.alg, alg, structural, task="structural"), "structural: ")
    rep.raise_if_failed()
    interior = interior_algebra(b.alg, alg, structural)
    return SmashProduct(alg, ma, structural, interior)


# ---------------------------------------------------------------------------
# injective induction of a module algebra (carrier F (x) C)


@dataclass
class InducedModuleAlgebra:
    ma: ModuleAlgebra          # the induced module algebra (over A or B-bar)
    f_data: CoinvariantAlgebra | None
    report: Report
    # surjective-case extras
    invariants: list | None = None
    solver: object | None = None


def module_algebra_induction(emb: HopfEmbedding, ma: ModuleAlgebra,
                             f_data: CoinvariantAlgebra | None = None,
                             task="module algebra induction") -> InducedModuleAlgebra:
    """Carrier F (x) C with componentwise product; A acts on the F factor."""
    if ma.b.alg.table != emb.b.alg.table:
        raise VerificationError(_fail(task, "coefficients are not over the subalgebra"))
    f = emb.field
    if f_data is None:
        f_data = coinvariant_algebra(emb)
    carrier = tensor_algebra(f_data.algebra, ma.c)
    nf, dc = f_data.dim, ma.c.dim
    action = []
    for i in range(emb.a.dim):
        mat = zeros(f, nf * dc, nf * dc)
        fa = f_data.action[i]
        for r in range(nf):
            for s in range(nf):
                x = fa[r][s]
                if f.is_zero(x):
                    continue
                for t in range(dc):
                    mat[r * dc + t][s * dc + t] = x
        action.append(mat)
    out = ModuleAlgebra(emb.a, carrier, action)
    rep = Report(task, dims={"dimF": nf, "dimC": dc, "dim": carrier.dim})
    rep.merge(verify_module_algebra(out, "induced module algebra"), "induced: ")
    rep.raise_if_failed()
    return InducedModuleAlgebra(out, f_data, rep)


def _fail(task, msg):
    rep = Report(task)
    rep.add(msg, False, None)
    return rep


# ---------------------------------------------------------------------------
# surjective induction of a module algebra (carrier C^K)


def invariant_induction(quot: NormalQuotient, ma: ModuleAlgebra,
                        task="invariant induction") -> InducedModuleAlgebra:
    """C^K as a module algebra over the quotient B-bar.

    The K-invariants are computed with the counit weights; the B-bar action
    uses fixed lifts through the section and is checked to be independent of
    the lift (the ideal acts by zero on C^K).
    """
    b = quot.b
    if ma.b.alg.table != b.alg.table:
        raise VerificationError(_fail(task, "coefficients are not over B"))
    f = b.field
    k_emb = quot.k_emb
    dk = k_emb.b.dim
    dc = ma.c.dim
    ops = []
    weights = []
    for j in range(dk):
        xb = k_emb.incl.column(j)
        mod = LeftModule(b.alg, ma.c.space, ma.action)
        ops.append(mod.operator_of(xb))
        weights.append(b.counit_of(xb))
    inv = invariant_subspace(f, ma.c.space, ops, weights)
    rep = Report(task, dims={"invariants": len(inv), "dimC": dc})
    rep.require("invariants nonempty", len(inv) > 0)
    solver = make_solver(f, inv, dc)
    space = Space.make(tuple(f"v{i}" for i in range(len(inv))))

    def products(i, j):
        w = ma.c.mul(inv[i], inv[j])
        coords = solver.coordinates(w)
        if coords is None:
            rep.add("product closes on invariants", False, {"pair": [i, j]})
            raise VerificationError(rep)
        return coords

    unit_coords = solver.coordinates(list(ma.c.unit))
    rep.require("unit is invariant", unit_coords is not None)
    carrier = algebra_from_products(f, space, products, unit_coords)
    rep.merge(verify_algebra(carrier, "carrier axioms"), "carrier: ")

    bbar = quot.bbar
    mod = LeftModule(b.alg, ma.c.space, ma.action)
    # the ideal must act by zero on the invariants (lift independence)
    ok = True
    for w in quot.ideal_basis:
        op = mod.operator_of(w)
        for v in inv:
            img = [f.zero] * dc
            for s, x in enumerate(v):
                if f.is_zero(x):
                    continue
                for r in range(dc):
                    a = op[r][s]
                    if not f.is_zero(a):
                        img[r] = f.add(img[r], f.mul(a, x))
            if not vec_is_zero(f, img):
                ok = False
                break
        if not ok:
            break
    rep.require("ideal acts by zero on invariants", ok)
    action = []
    for i in range(bbar.dim):
        lift = quot.section.column(i)
        op = mod.operator_of(lift)
        mat = zeros(f, len(inv), len(inv))
        for s, v in enumerate(inv):
            img = [f.zero] * dc
            for t, x in enumerate(v):
                if f.is_zero(x):
                    continue
                for r in range(dc):
                    a = op[r][t]
                    if not f.is_zero(a):
                        img[r] = f.add(img[r], f.mul(a, x))
            coords = solver.coordinates(img)
            if coords is None:
                rep.add("action preserves invariants", False,
                        {"basis": bbar.alg.label(i), "vector": s})
                raise VerificationError(rep)
            for r, x in enumerate(coords):
                mat[r][s] = x
        action.append(mat)
    out = ModuleAlgebra(bbar, carrier, action)
    rep.merge(verify_module_algebra(out, "induced module algebra"), "induced: ")
    rep.raise_if_failed()
    return InducedModuleAlgebra(out, None, rep, invariants=inv, solver=solver)


def invariants_action_coincidence(quot: NormalQuotient, ma: ModuleAlgebra,
                                  smash: SmashProduct,
                                  invariants) -> Report:
    """For c in C^K:  sum x_(1) c # x_(2) b  =  c # x b  for all x in K, b in B.

    This is the coincidence of the diagonal and left-regular K-actions on
    C^K # B.
    """
    b = quot.b
    f = b.field
    k_emb = quot.k_emb
    rep = Report("invariant action coincidence")
    db, dc = b.dim, ma.c.dim
    ok, witness = True, None
    for j in range(k_emb.b.dim):
        xb = k_emb.incl.column(j)
        dx = b.delta_of(xb)
        for v in invariants:
            for bi in range(db):
                lhs = [f.zero] * (dc * db)
                for (u, w), coef in dx.items():
                    acted = ma.act(u, v)
                    for bk, coef2 in b.alg.table[w][bi]:
                        cc = f.mul(coef, coef2)
                        for r, x in enumerate(acted):
                            if not f.is_zero(x):
                                lhs[r * db + bk] = f.add(lhs[r * db + bk], f.mul(cc, x))
                rhs = [f.zero] * (dc * db)
                xb_bi = b.alg.mul(xb, unit_vec(f, db, bi))
                for r, x in enumerate(v):
                    if f.is_zero(x):
                        continue
                    for s, y in enumerate(xb_bi):
                        if not f.is_zero(y):
                            rhs[r * db + s] = f.add(rhs[r * db + s], f.mul(x, y))
                if not vec_eq(f, lhs, rhs):
                    ok = False
                    witness = {"x": k_emb.b.alg.label(j), "b": b.alg.label(bi)}
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("diagonal action equals left-regular action on C^K", ok, witness)
    return rep


# ---------------------------------------------------------------------------
# skew group algebras (independent group-theoretic construction)


def skew_group_algebra(field, group_table, c: Algebra, automorphisms,
                       task="skew group algebra"):
    """C * G built directly from a Cayley table and per-element automorphisms.

    Product (c * g)(c' * g') = c (g.c') * gg'.  Independent of the Hopf
    machinery; used to cross-check the group specializations.
    """
    n = len(group_table)
    dc = c.dim
    f = field
    labels = tuple(f"{cl}*{gi}" for cl in c.space.labels for gi in range(n))
    space = Space.make(labels)

    def act(g, cv):
        mat = automorphisms[g]
        out = [f.zero] * dc
        for s, x in enumerate(cv):
            if f.is_zero(x):
                continue
            for r in range(dc):
                a = mat[r][s]
                if not f.is_zero(a):
                    out[r] = f.add(out[r], f.mul(a, x))
        return out

    def products(t1, t2):
        c1, g1 = divmod(t1, n)
        c2, g2 = divmod(t2, n)
        left = c.mul(unit_vec(f, dc, c1), act(g1, unit_vec(f, dc, c2)))
        gg = group_table[g1][g2]
        out = [f.zero] * (dc * n)
        for r, x in enumerate(left):
            if not f.is_zero(x):
                out[r * n + gg] = x
        return out

    identity = next(e for e in range(n)
                    if all(group_table[e][j] == j for j in range(n)))
    unit = [f.zero] * (dc * n)
    for r, x in enumerate(c.unit):
        if not f.is_zero(x):
            unit[r * n + identity] = x
    alg = algebra_from_products(f, space, products, unit)
    verify_algebra(alg, task).raise_if_failed()
    return alg
