"""Frobenius systems for subalgebra extensions: a twisted bimodule form
phi: A -> B together with dual bases {r_i}, {l_i} satisfying

    a = sum_i r_i phi(l_i a) = sum_i beta^{-1}(phi(a r_i)) l_i.

beta is searched id-first (the identity works for all group-algebra pairs);
a caller-supplied hint is tried next.  The candidate forms are scanned in a
fixed order (solution-space basis vectors, then sums of two, then of three),
so the constructed system is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .hopf import HopfEmbedding
from .linalg import (
    LinearMap,
    identity_rows,
    kernel_basis,
    mat_mul,
    solve_linear,
    unit_vec,
    vec_add,
    vec_eq,
    vec_is_zero,
)
from .report import Report, VerificationError


@dataclass
class FrobeniusSystem:
    embedding: HopfEmbedding
    beta: list        # automorphism of B (rows)
    beta_inv: list
    phi: list         # dim B x dim A matrix of the form
    r: list           # dual bases in A
    l: list

    @property
    def field(self):
        return self.embedding.field

    def phi_of(self, av):
        """phi evaluated on a dense A-vector, as a B-vector."""
        f = self.field
        db = len(self.phi)
        out = [f.zero] * db
        for s, c in enumerate(av):
            if f.is_zero(c):
                continue
            for r in range(db):
                x = self.phi[r][s]
                if not f.is_zero(x):
                    out[r] = f.add(out[r], f.mul(c, x))
        return out

    def beta_of(self, bv):
        f = self.field
        out = [f.zero] * len(bv)
        for j, c in enumerate(bv):
            if f.is_zero(c):
                continue
            for i in range(len(bv)):
                x = self.beta[i][j]
                if not f.is_zero(x):
                    out[i] = f.add(out[i], f.mul(c, x))
        return out

    def beta_inv_of(self, bv):
        f = self.field
        out = [f.zero] * len(bv)
        for j, c in enumerate(bv):
            if f.is_zero(c):
                continue
            for i in range(len(bv)):
                x = self.beta_inv[i][j]
                if not f.is_zero(x):
                    out[i] = f.add(out[i], f.mul(c, x))
        return out


def frobenius_form_space(emb: HopfEmbedding, beta_rows):
    """Basis of the space of maps phi with phi(b a b') = beta(b) phi(a) b'."""
    a, b = emb.a, emb.b
    f = emb.field
    da, db = a.dim, b.dim
    beta_map = LinearMap(f, b.space, b.space, beta_rows)
    rows = []
    for b1 in range(db):
        l_a = a.alg.left_mult_matrix(emb.incl.column(b1))
        l_b = b.alg.left_mult_matrix(beta_map.column(b1))
        for b2 in range(db):
            r_a = a.alg.right_mult_matrix(emb.incl.column(b2))
            r_b = b.alg.right_mult_matrix(unit_vec(f, db, b2))
            m_b = mat_mul(f, l_b, r_b)
            sandwich = mat_mul(f, l_a, r_a)  # x |-> incl(b1) x incl(b2)
            for ai in range(da):
                y = [sandwich[t][ai] for t in range(da)]  # incl(b1) e_a incl(b2)
                for r in range(db):
                    row = [f.zero] * (db * da)
                    for s, c in enumerate(y):
                        if not f.is_zero(c):
                            row[r * da + s] = f.add(row[r * da + s], c)
                    for t in range(db):
                        c = m_b[r][t]
                        if not f.is_zero(c):
                            row[t * da + ai] = f.sub(row[t * da + ai], c)
                    if not vec_is_zero(f, row):
                        rows.append(row)
    flat = kernel_basis(f, rows) if rows else identity_rows(f, db * da)
    return [[v[r * da : (r + 1) * da] for r in range(db)] for v in flat]


def _phi_candidates(space_basis, field):
    """Deterministic scan order: basis vectors, sums of two, sums of three."""
    n = len(space_basis)
    for i in range(n):
        yield space_basis[i]
    for i, j in combinations(range(n), 2):
        yield [[field.add(x, y) for x, y in zip(r1, r2)]
               for r1, r2 in zip(space_basis[i], space_basis[j])]
    for i, j, k in combinations(range(n), 3):
        yield [[field.add(field.add(x, y), z) for x, y, z in zip(r1, r2, r3)]
               for r1, r2, r3 in zip(space_basis[i], space_basis[j], space_basis[k])]


def dual_bases(emb: HopfEmbedding, phi_rows):
    """Dual bases for a candidate form: r_i is the free basis, l_i solves
    phi(l_i r_j) = delta_ij 1_B.  Returns None when phi is degenerate."""
    a, b = emb.a, emb.b
    f = emb.field
    da, db = a.dim, b.dim
    r_list = [list(v) for v in emb.free_basis]
    n = len(r_list)
    # stacked system: rows indexed by (j, B-coordinate)
    sys_rows = []
    for j in range(n):
        rm = a.alg.right_mult_matrix(r_list[j])  # x |-> x r_j
        for rr in range(db):
            row = [f.zero] * da
            for s in range(da):
                acc = f.zero
                for t in range(da):
                    c = rm[t][s]
                    if not f.is_zero(c):
                        acc = f.add(acc, f.mul(c, phi_rows[rr][t]))
                row[s] = acc
            sys_rows.append(row)
    l_list = []
    for i in range(n):
        rhs = []
        for j in range(n):
            for rr in range(db):
                rhs.append(b.alg.unit[rr] if i == j else f.zero)
        sol = solve_linear(f, sys_rows, rhs)
        if sol is None:
            return None
        l_list.append(sol)
    return r_list, l_list


def verify_frobenius(sys: FrobeniusSystem, task="frobenius system") -> Report:
    """Bimodule property of phi and both dual-basis identities, exhaustively."""
    emb = sys.embedding
    a, b = emb.a, emb.b
    f = emb.field
    da, db = a.dim, b.dim
    rep = Report(task, dims={"dimA": da, "dimB": db, "n": len(sys.r)})
    ok, witness = True, None
    for b1 in range(db):
        ib1 = emb.incl.column(b1)
        bb1 = sys.beta_of(unit_vec(f, db, b1))
        for ai in range(da):
            mid = a.alg.mul(ib1, unit_vec(f, da, ai))
            for b2 in range(db):
                lhs = sys.phi_of(a.alg.mul(mid, emb.incl.column(b2)))
                rhs = b.alg.mul(b.alg.mul(bb1, sys.phi_of(unit_vec(f, da, ai))),
                                unit_vec(f, db, b2))
                if not vec_eq(f, lhs, rhs):
                    ok = False
                    witness = {"triple": [b.alg.label(b1), a.alg.label(ai), b.alg.label(b2)]}
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("bimodule form", ok, witness)
    ok, witness = True, None
    for ai in range(da):
        e = unit_vec(f, da, ai)
        acc = [f.zero] * da
        for rv, lv in zip(sys.r, sys.l):
            coef = sys.phi_of(a.alg.mul(lv, e))
            acc = vec_add(f, acc, a.alg.mul(rv, emb.incl.apply(coef)))
        if not vec_eq(f, acc, e):
            ok, witness = False, {"basis": a.alg.label(ai)}
            break
    rep.add("a = sum r_i phi(l_i a)", ok, witness)
    ok, witness = True, None
    for ai in range(da):
        e = unit_vec(f, da, ai)
        acc = [f.zero] * da
        for rv, lv in zip(sys.r, sys.l):
            coef = sys.beta_inv_of(sys.phi_of(a.alg.mul(e, rv)))
            acc = vec_add(f, acc, a.alg.mul(emb.incl.apply(coef), lv))
        if not vec_eq(f, acc, e):
            ok, witness = False, {"basis": a.alg.label(ai)}
            break
    rep.add("a = sum beta_inv(phi(a r_i)) l_i", ok, witness)
    return rep


def build_frobenius_system(emb: HopfEmbedding, beta_hint=None) -> FrobeniusSystem:
    """First verified system over the deterministic (beta, phi) scan."""
    f = emb.field
    b = emb.b
    betas = [identity_rows(f, b.dim)]
    if beta_hint is not None:
        betas.append([list(r) for r in beta_hint])
    from .algebra import verify_morphism
    for beta_rows in betas:
        beta_map = LinearMap(f, b.space, b.space, beta_rows)
        rep = verify_morphism(b.alg, b.alg, beta_map, require_bijective=True,
                              task="beta automorphism")
        if not rep.ok:
            raise VerificationError(rep)
        space = frobenius_form_space(emb, beta_rows)
        for phi_rows in _phi_candidates(space, f):
            pair = dual_bases(emb, phi_rows)
            if pair is None:
                continue
            r_list, l_list = pair
            sys = FrobeniusSystem(emb, beta_rows, beta_map.inverse().rows,
                                  phi_rows, r_list, l_list)
            rep = verify_frobenius(sys)
            if rep.ok:
                return sys
    fail = Report("frobenius system")
    fail.add("no Frobenius system found - supply beta", False,
             {"embedding": emb.name or "?"})
    raise VerificationError(fail)
