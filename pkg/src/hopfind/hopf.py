"""Hopf algebra structures and their verification.

Comultiplication is stored sparsely: delta[i] is the list of (j, k, coeff)
triples with Delta(e_i) = sum coeff * e_j (x) e_k.  The counit is a dense
row, the antipode a dense matrix.

Also here: subalgebra embeddings with a freeness certificate, normal
quotients, the algebra of right-B-linear functionals F with its left
action, and the induced quotient coalgebra with its dual.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Algebra,
    algebra_from_products,
    opposite_algebra,
    verify_algebra,
    verify_morphism,
)
from .linalg import (
    CoordinateSolver,
    LinearMap,
    make_solver,
    Space,
    kernel_basis,
    quotient_space,
    rank,
    rref,
    sparse_of,
    subspace_eq,
    subspace_leq,
    unit_vec,
    vec_eq,
    vec_is_zero,
    zeros,
)
from .report import Report, UnsupportedInstanceError, VerificationError


@dataclass
class HopfAlgebra:
    alg: Algebra
    delta: list    # delta[i] = [(j, k, coeff), ...]
    counit: list   # dense row
    antipode: list # dense matrix (rows)

    @property
    def field(self):
        return self.alg.field

    @property
    def space(self):
        return self.alg.space

    @property
    def dim(self):
        return self.alg.dim

    def delta_of(self, v):
        """Comultiplication of a dense vector, as a dict (j, k) -> coeff."""
        f = self.field
        out = {}
        for i, a in enumerate(v):
            if f.is_zero(a):
                continue
            for j, k, c in self.delta[i]:
                key = (j, k)
                out[key] = f.add(out.get(key, f.zero), f.mul(a, c))
        return {k: c for k, c in out.items() if not f.is_zero(c)}

    def counit_of(self, v):
        f = self.field
        acc = f.zero
        for a, b in zip(self.counit, v):
            acc = f.add(acc, f.mul(a, b))
        return acc

    def antipode_of(self, v):
        f = self.field
        out = [f.zero] * self.dim
        for j, a in enumerate(v):
            if f.is_zero(a):
                continue
            for i in range(self.dim):
                c = self.antipode[i][j]
                if not f.is_zero(c):
                    out[i] = f.add(out[i], f.mul(a, c))
        return out


def _tensor_product_dict(alg: Algebra, d1: dict, d2: dict) -> dict:
    """Product in A (x) A of two tensors given as dicts (u, v) -> coeff."""
    f = alg.field
    out = {}
    for (a, b), c1 in d1.items():
        for (u, v), c2 in d2.items():
            c12 = f.mul(c1, c2)
            for k1, x1 in alg.table[a][u]:
                for k2, x2 in alg.table[b][v]:
                    key = (k1, k2)
                    out[key] = f.add(out.get(key, f.zero), f.mul(c12, f.mul(x1, x2)))
    return {k: c for k, c in out.items() if not f.is_zero(c)}


def _dicts_equal(field, d1, d2):
    keys = set(d1) | set(d2)
    for k in keys:
        if not field.is_zero(field.sub(d1.get(k, field.zero), d2.get(k, field.zero))):
            return False
    return True


def verify_hopf(h: HopfAlgebra, task="hopf axioms") -> Report:
    """All Hopf axiom families, exactly, with a witness per failure."""
    f = h.field
    n = h.dim
    rep = Report(task, dims={"dim": n})
    rep.merge(verify_algebra(h.alg), "algebra: ")

    # coassociativity
    ok, witness = True, None
    for i in range(n):
        left, right = {}, {}
        for j, k, c in h.delta[i]:
            for a, b, c2 in h.delta[j]:
                key = (a, b, k)
                left[key] = f.add(left.get(key, f.zero), f.mul(c, c2))
            for a, b, c2 in h.delta[k]:
                key = (j, a, b)
                right[key] = f.add(right.get(key, f.zero), f.mul(c, c2))
        if not _dicts_equal(f, left, right):
            ok, witness = False, {"basis": h.alg.label(i)}
            break
    rep.add("coassociativity", ok, witness)

    # counit law
    ok, witness = True, None
    for i in range(n):
        lv = [f.zero] * n
        rv = [f.zero] * n
        for j, k, c in h.delta[i]:
            lv[k] = f.add(lv[k], f.mul(c, h.counit[j]))
            rv[j] = f.add(rv[j], f.mul(c, h.counit[k]))
        e = unit_vec(f, n, i)
        if not (vec_eq(f, lv, e) and vec_eq(f, rv, e)):
            ok, witness = False, {"basis": h.alg.label(i)}
            break
    rep.add("counit law", ok, witness)

    # Delta is an algebra morphism
    ok, witness = True, None
    unit_delta = h.delta_of(h.alg.unit)
    expected_unit = {}
    for i, a in enumerate(h.alg.unit):
        if f.is_zero(a):
            continue
        for j, b in enumerate(h.alg.unit):
            if not f.is_zero(b):
                expected_unit[(i, j)] = f.mul(a, b)
    if not _dicts_equal(f, unit_delta, expected_unit):
        ok, witness = False, {"basis": "1"}
    if ok:
        deltas = [dict(((j, k), c) for j, k, c in h.delta[i]) for i in range(n)]
        for i in range(n):
            for j in range(n):
                lhs = {}
                for k, c in h.alg.table[i][j]:
                    for (a, b), c2 in deltas[k].items():
                        key = (a, b)
                        lhs[key] = f.add(lhs.get(key, f.zero), f.mul(c, c2))
                rhs = _tensor_product_dict(h.alg, deltas[i], deltas[j])
                lhs = {k: c for k, c in lhs.items() if not f.is_zero(c)}
                if not _dicts_equal(f, lhs, rhs):
                    ok, witness = False, {"pair": [h.alg.label(i), h.alg.label(j)]}
                    break
            if not ok:
                break
    rep.add("comultiplication is multiplicative", ok, witness)

    # counit is an algebra morphism
    ok, witness = True, None
    if not f.is_zero(f.sub(h.counit_of(h.alg.unit), f.one)):
        ok, witness = False, {"basis": "1"}
    if ok:
        for i in range(n):
            for j in range(n):
                acc = f.zero
                for k, c in h.alg.table[i][j]:
                    acc = f.add(acc, f.mul(c, h.counit[k]))
                if not f.is_zero(f.sub(acc, f.mul(h.counit[i], h.counit[j]))):
                    ok, witness = False, {"pair": [h.alg.label(i), h.alg.label(j)]}
                    break
            if not ok:
                break
    rep.add("counit is multiplicative", ok, witness)

    # antipode law
    ok, witness = True, None
    for i in range(n):
        lv = [f.zero] * n
        rv = [f.zero] * n
        for j, k, c in h.delta[i]:
            sj = h.antipode_of(unit_vec(f, n, j))
            term = h.alg.mul(sj, unit_vec(f, n, k))
            lv = [f.add(x, f.mul(c, y)) for x, y in zip(lv, term)]
            sk = h.antipode_of(unit_vec(f, n, k))
            term = h.alg.mul(unit_vec(f, n, j), sk)
            rv = [f.add(x, f.mul(c, y)) for x, y in zip(rv, term)]
        target = [f.mul(h.counit[i], u) for u in h.alg.unit]
        if not (vec_eq(f, lv, target) and vec_eq(f, rv, target)):
            ok, witness = False, {"basis": h.alg.label(i)}
            break
    rep.add("antipode law", ok, witness)
    return rep


# ---------------------------------------------------------------------------
# group algebras


def check_group_table(table) -> Report:
    """Closure/associativity/identity/inverses of a Cayley table of indices."""
    n = len(table)
    rep = Report("group table")
    ok, witness = True, None
    for i in range(n):
        if len(table[i]) != n:
            ok, witness = False, {"row": i}
            break
        for j in range(n):
            if not (0 <= table[i][j] < n):
                ok, witness = False, {"pair": [i, j]}
                break
        if not ok:
            break
    rep.add("closure", ok, witness)
    if not ok:
        return rep
    if not ok:
        return rep
    ok, witness = True, None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    ok, witness = False, {"triple": [i, j, k]}
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("associativity", ok, witness)
    identity = None
    for e in range(n):
        if all(table[e][j] == j and table[j][e] == j for j in range(n)):
            identity = e
            break
    rep.add("identity", identity is not None)
    if identity is None:
        return rep
    ok, witness = True, None
    for i in range(n):
        if not any(table[i][j] == identity and table[j][i] == identity for j in range(n)):
            ok, witness = False, {"element": i}
            break
    rep.add("inverses", ok, witness)
    return rep


def group_algebra(field, labels, table) -> HopfAlgebra:
    """Group algebra Hopf structure: Delta(g) = g (x) g, S(g) = g^{-1}."""
    check_group_table(table).raise_if_failed()
    n = len(table)
    space = Space.make(labels)
    alg_table = [[[(table[i][j], field.one)] for j in range(n)] for i in range(n)]
    identity = next(e for e in range(n)
                    if all(table[e][j] == j and table[j][e] == j for j in range(n)))
    unit = unit_vec(field, n, identity)
    alg = Algebra(field, space, alg_table, unit)
    delta = [[(i, i, field.one)] for i in range(n)]
    counit = [field.one] * n
    antipode = zeros(field, n, n)
    for i in range(n):
        inv = next(j for j in range(n) if table[i][j] == identity)
        antipode[inv][i] = field.one
    return HopfAlgebra(alg, delta, counit, antipode)


def dual_hopf(h: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on the dual basis."""
    f = h.field
    n = h.dim
    space = Space.make(tuple(f"{l}^" for l in h.space.labels))
    # product of functionals is dual to comultiplication
    table = [[[] for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for j, l, c in h.delta[k]:
            table[j][l].append((k, c))
    for i in range(n):
        for j in range(n):
            table[i][j].sort(key=lambda t: t[0])
    unit = list(h.counit)
    alg = Algebra(f, space, table, unit)
    delta = []
    for k in range(n):
        entry = []
        for i in range(n):
            for j in range(n):
                for t, c in h.alg.table[i][j]:
                    if t == k and not f.is_zero(c):
                        entry.append((i, j, c))
        delta.append(entry)
    counit = list(h.alg.unit)
    antipode = [[h.antipode[j][i] for j in range(n)] for i in range(n)]
    return HopfAlgebra(alg, delta, counit, antipode)


# ---------------------------------------------------------------------------
# embeddings


@dataclass
class HopfEmbedding:
    b: HopfAlgebra
    a: HopfAlgebra
    incl: LinearMap
    free_basis: list  # vectors in A; right translates by incl(B) give a basis
    name: str = ""

    @property
    def field(self):
        return self.a.field

    @property
    def index(self):
        return len(self.free_basis)

    def incl_vec(self, bv):
        return self.incl.apply(bv)


def verify_embedding(emb: HopfEmbedding, task="hopf embedding") -> Report:
    f = emb.field
    b, a, incl = emb.b, emb.a, emb.incl
    rep = Report(task, dims={"dimA": a.dim, "dimB": b.dim, "index": emb.index})
    rep.add("inclusion injective", rank(f, incl.rows) == b.dim)
    rep.merge(verify_morphism(b.alg, a.alg, incl, task="inclusion"), "inclusion: ")
    ok, witness = True, None
    for i in range(b.dim):
        img = incl.column(i)
        lhs = emb.a.delta_of(img)
        rhs = {}
        for j, k, c in b.delta[i]:
            cj = incl.column(j)
            ck = incl.column(k)
            for u, x in enumerate(cj):
                if f.is_zero(x):
                    continue
                for v, y in enumerate(ck):
                    if not f.is_zero(y):
                        key = (u, v)
                        rhs[key] = f.add(rhs.get(key, f.zero), f.mul(c, f.mul(x, y)))
        rhs = {k: c for k, c in rhs.items() if not f.is_zero(c)}
        if not _dicts_equal(f, lhs, rhs):
            ok, witness = False, {"basis": b.alg.label(i)}
            break
    rep.add("comultiplication compatible", ok, witness)
    ok = True
    for i in range(b.dim):
        img = incl.column(i)
        if not f.is_zero(f.sub(emb.a.counit_of(img), b.counit[i])):
            ok = False
            break
    rep.add("counit compatible", ok, None if ok else {"basis": b.alg.label(i)})
    ok = True
    for i in range(b.dim):
        lhs = emb.a.antipode_of(incl.column(i))
        rhs = incl.apply(b.antipode_of(unit_vec(f, b.dim, i)))
        if not vec_eq(f, lhs, rhs):
            ok = False
            break
    rep.add("antipode compatible", ok, None if ok else {"basis": b.alg.label(i)})
    # freeness certificate
    translates = []
    for e in emb.free_basis:
        for j in range(b.dim):
            translates.append(a.alg.mul(e, incl.column(j)))
    rep.add("freeness certificate",
            len(translates) == a.dim and rank(f, translates) == a.dim,
            {"rank": rank(f, translates) if translates else 0, "dim": a.dim})
    return rep


def compute_free_basis(b: HopfAlgebra, a: HopfAlgebra, incl: LinearMap):
    """Greedy scan over the standard basis of A for a free right-B basis.

    A basis vector is kept when all its right translates extend the span by
    the full dim B.  Fails (raises) if the scan ends below dim A.
    """
    f = a.field
    if a.dim % b.dim != 0:
        raise VerificationError(_fail_report(
            "free basis", "dim B divides dim A", {"dimA": a.dim, "dimB": b.dim}))
    incl_cols = [incl.column(j) for j in range(b.dim)]
    chosen = []
    span = []
    current_rank = 0
    for i in range(a.dim):
        e = unit_vec(f, a.dim, i)
        translates = [a.alg.mul(e, c) for c in incl_cols]
        new_rank = rank(f, span + translates)
        if new_rank == current_rank + b.dim:
            chosen.append(e)
            span.extend(translates)
            current_rank = new_rank
        if current_rank == a.dim:
            break
    if current_rank != a.dim:
        raise VerificationError(_fail_report(
            "free basis", "freeness failure", {"rank": current_rank, "dim": a.dim}))
    return chosen


def _fail_report(task, check, witness):
    rep = Report(task)
    rep.add(check, False, witness)
    return rep


def hopf_embedding(b: HopfAlgebra, a: HopfAlgebra, incl: LinearMap, name="") -> HopfEmbedding:
    free = compute_free_basis(b, a, incl)
    emb = HopfEmbedding(b, a, incl, free, name)
    verify_embedding(emb).raise_if_failed()
    return emb


def trivial_group_hopf(field) -> HopfAlgebra:
    return group_algebra(field, ("1",), [[0]])


def trivial_embedding(a: HopfAlgebra) -> HopfEmbedding:
    """The unit embedding k -> A (used for the full dual (A^x)^op)."""
    b = trivial_group_hopf(a.field)
    incl = LinearMap(a.field, b.space, a.space, [[x] for x in a.alg.unit])
    return hopf_embedding(b, a, incl, name="unit")


def identity_embedding(a: HopfAlgebra, name="") -> HopfEmbedding:
    incl = LinearMap.identity(a.field, a.space)
    return hopf_embedding(a, a, incl, name=name)


# ---------------------------------------------------------------------------
# normal quotients


@dataclass
class NormalQuotient:
    k_emb: HopfEmbedding         # K inside B
    bbar: HopfAlgebra
    proj: LinearMap              # B -> Bbar
    section: LinearMap           # Bbar -> B (linear section of proj)
    ideal_basis: list            # basis of B K+ (vectors in B)

    @property
    def b(self):
        return self.k_emb.a

    @property
    def field(self):
        return self.b.field


def normal_quotient(k_emb: HopfEmbedding) -> NormalQuotient:
    """Quotient of B by the ideal B K+ of a normal Hopf subalgebra K.

    Normality is the subspace equality B K+ = K+ B; a failure raises
    UnsupportedInstanceError.  The Hopf-ideal conditions and all quotient
    structure maps are checked.
    """
    b = k_emb.a
    k = k_emb.b
    f = b.field
    n = b.dim
    # K+ = ker(counit restricted to K), pushed into B
    eps_row = [[b.counit_of(k_emb.incl.column(j)) for j in range(k.dim)]]
    kplus_k = kernel_basis(f, eps_row)
    kplus = [k_emb.incl.apply(v) for v in kplus_k]
    bkplus = []
    kplusb = []
    for i in range(n):
        e = unit_vec(f, n, i)
        for w in kplus:
            bkplus.append(b.alg.mul(e, w))
            kplusb.append(b.alg.mul(w, e))
    if not subspace_eq(f, bkplus, kplusb):
        raise UnsupportedInstanceError(
            f"K is not normal in B: B·K+ and K+·B differ (dims "
            f"{rank(f, bkplus)} vs {rank(f, kplusb)}, join {rank(f, bkplus + kplusb)})")
    _, ideal = rref(f, bkplus)
    rep = Report("normal hopf quotient", dims={"dimB": n, "ideal": len(ideal)})
    # Hopf ideal conditions
    side_span = []
    for w in ideal:
        for i in range(n):
            vec = [f.zero] * (n * n)
            for u, x in enumerate(w):
                if not f.is_zero(x):
                    vec[u * n + i] = x
            side_span.append(vec)
            vec = [f.zero] * (n * n)
            for u, x in enumerate(w):
                if not f.is_zero(x):
                    vec[i * n + u] = x
            side_span.append(vec)
    ok, witness = True, None
    for idx, w in enumerate(ideal):
        dw = b.delta_of(w)
        dvec = [f.zero] * (n * n)
        for (u, v), c in dw.items():
            dvec[u * n + v] = c
        if not subspace_leq(f, [dvec], side_span):
            ok, witness = False, {"ideal vector": idx}
            break
    rep.require("Delta(I) inside I⊗B + B⊗I", ok, witness)
    ok = all(f.is_zero(b.counit_of(w)) for w in ideal)
    rep.require("counit kills I", ok)
    ok, witness = True, None
    for idx, w in enumerate(ideal):
        if not subspace_leq(f, [b.antipode_of(w)], ideal):
            ok, witness = False, {"ideal vector": idx}
            break
    rep.require("S(I) inside I", ok, witness)

    q = quotient_space(f, b.space, ideal)
    # two-sided ideal: products with basis vectors stay inside
    ok, witness = True, None
    for idx, w in enumerate(ideal):
        for i in range(n):
            e = unit_vec(f, n, i)
            if not vec_is_zero(f, q.project(b.alg.mul(w, e))) or \
               not vec_is_zero(f, q.project(b.alg.mul(e, w))):
                ok, witness = False, {"ideal vector": idx, "basis": b.alg.label(i)}
                break
        if not ok:
            break
    rep.require("I is a two-sided ideal", ok, witness)

    m = q.space.dim
    lifted = [q.section.column(j) for j in range(m)]

    def products(i, j):
        return q.project(b.alg.mul(lifted[i], lifted[j]))

    bbar_alg = algebra_from_products(f, q.space, products, q.project(b.alg.unit))
    delta = []
    pp = q.proj
    for j in range(m):
        dw = b.delta_of(lifted[j])
        entry = {}
        for (u, v), c in dw.items():
            pu = pp.column(u)
            pv = pp.column(v)
            for r, x in enumerate(pu):
                if f.is_zero(x):
                    continue
                for s, y in enumerate(pv):
                    if not f.is_zero(y):
                        key = (r, s)
                        entry[key] = f.add(entry.get(key, f.zero), f.mul(c, f.mul(x, y)))
        delta.append([(r, s, c) for (r, s), c in sorted(entry.items()) if not f.is_zero(c)])
    counit = [b.counit_of(v) for v in lifted]
    antipode_cols = [q.project(b.antipode_of(v)) for v in lifted]
    antipode = zeros(f, m, m)
    for j, col in enumerate(antipode_cols):
        for i, c in enumerate(col):
            antipode[i][j] = c
    bbar = HopfAlgebra(bbar_alg, delta, counit, antipode)
    rep.merge(verify_hopf(bbar, "quotient hopf axioms"), "quotient: ")
    # proj is a Hopf algebra morphism
    rep.merge(verify_morphism(b.alg, bbar_alg, q.proj, task="projection"), "projection: ")
    ok = True
    for i in range(n):
        lhs = {}
        for j2, k2, c in b.delta[i]:
            pj = q.project(unit_vec(f, n, j2))
            pk = q.project(unit_vec(f, n, k2))
            for r, x in enumerate(pj):
                if f.is_zero(x):
                    continue
                for s, y in enumerate(pk):
                    if not f.is_zero(y):
                        key = (r, s)
                        lhs[key] = f.add(lhs.get(key, f.zero), f.mul(c, f.mul(x, y)))
        lhs = {kk: c for kk, c in lhs.items() if not f.is_zero(c)}
        pi = q.project(unit_vec(f, n, i))
        rhs = bbar.delta_of(pi)
        if not _dicts_equal(f, lhs, rhs):
            ok = False
            break
    rep.require("projection respects comultiplication", ok)
    rep.raise_if_failed()
    return NormalQuotient(k_emb, bbar, q.proj, q.section, ideal)


# ---------------------------------------------------------------------------
# the coinvariant functional algebra F


@dataclass
class CoinvariantAlgebra:
    """Right-B-linear functionals on A, with product dual to Delta (reversed)
    and the left A-action through the antipode."""

    embedding: HopfEmbedding
    algebra: Algebra
    functionals: list   # row vectors on A
    action: list        # action[i] = dim F matrix for A basis e_i
    solver: CoordinateSolver

    @property
    def dim(self):
        return self.algebra.dim

    def functional_of(self, coords):
        f = self.embedding.field
        da = self.embedding.a.dim
        out = [f.zero] * da
        for c, func in zip(coords, self.functionals):
            if f.is_zero(c):
                continue
            out = [f.add(x, f.mul(c, y)) for x, y in zip(out, func)]
        return out


def coinvariant_algebra(emb: HopfEmbedding, task="coinvariant algebra F") -> CoinvariantAlgebra:
    a, b = emb.a, emb.b
    f = emb.field
    da, db = a.dim, b.dim
    rep = Report(task)
    rows = []
    for bj in range(db):
        rm = a.alg.right_mult_matrix(emb.incl.column(bj))
        eps_b = b.counit[bj]
        for ai in range(da):
            row = [rm[t][ai] for t in range(da)]
            row[ai] = f.sub(row[ai], eps_b)
            if not vec_is_zero(f, row):
                rows.append(row)
    funcs = kernel_basis(f, rows) if rows else [unit_vec(f, da, i) for i in range(da)]
    rep.require("dim F = dim A / dim B", len(funcs) * db == da,
                {"dimF": len(funcs), "dimA": da, "dimB": db})
    solver = make_solver(f, funcs, da)
    space = Space.make(tuple(f"f{i}" for i in range(len(funcs))))

    def convolve(fu, fv):
        out = [f.zero] * da
        for i in range(da):
            acc = f.zero
            for j, k, c in a.delta[i]:
                acc = f.add(acc, f.mul(c, f.mul(fu[k], fv[j])))
            out[i] = acc
        return out

    table = []
    for s, fu in enumerate(funcs):
        row = []
        for t, fv in enumerate(funcs):
            w = convolve(fu, fv)
            coords = solver.coordinates(w)
            if coords is None:
                rep.add("closure under product", False, {"pair": [s, t]})
                raise VerificationError(rep)
            row.append(sparse_of(f, coords))
        table.append(row)
    unit_coords = solver.coordinates(list(a.counit))
    rep.require("counit lies in F", unit_coords is not None)
    algebra = Algebra(f, space, table, unit_coords)
    rep.merge(verify_algebra(algebra, "F axioms"), "F: ")

    action = []
    for i in range(da):
        lm = a.alg.left_mult_matrix(a.antipode_of(unit_vec(f, da, i)))
        mat = zeros(f, len(funcs), len(funcs))
        for s, fu in enumerate(funcs):
            w = [f.zero] * da
            for x in range(da):
                acc = f.zero
                for t in range(da):
                    c = lm[t][x]
                    if not f.is_zero(c):
                        acc = f.add(acc, f.mul(c, fu[t]))
                w[x] = acc
            coords = solver.coordinates(w)
            if coords is None:
                rep.add("closure under A-action", False, {"basis": a.alg.label(i), "f": s})
                raise VerificationError(rep)
            for r, c in enumerate(coords):
                mat[r][s] = c
        action.append(mat)
    out = CoinvariantAlgebra(emb, algebra, funcs, action, solver)
    rep.merge(verify_f_module_algebra(out), "module algebra: ")
    rep.raise_if_failed()
    return out


def verify_f_module_algebra(fdata: CoinvariantAlgebra, task="F module algebra") -> Report:
    """F is a left A-module algebra: a(ff') = sum (a_(1) f)(a_(2) f'), a.1 = eps(a) 1."""
    emb = fdata.embedding
    a = emb.a
    f = emb.field
    nf = fdata.dim
    rep = Report(task)
    from .modules import LeftModule, verify_left_module
    mod = LeftModule(a.alg, fdata.algebra.space, fdata.action)
    rep.merge(verify_left_module(mod, "F as left A-module"), "module: ")
    ok, witness = True, None
    unit = fdata.algebra.unit
    for i in range(a.dim):
        acted = mod.act(i, unit)
        target = [f.mul(a.counit[i], u) for u in unit]
        if not vec_eq(f, acted, target):
            ok, witness = False, {"basis": a.alg.label(i)}
            break
    rep.add("action on unit is counit", ok, witness)
    ok, witness = True, None
    for i in range(a.dim):
        for s in range(nf):
            es = unit_vec(f, nf, s)
            for t in range(nf):
                et = unit_vec(f, nf, t)
                lhs = mod.act(i, fdata.algebra.mul(es, et))
                rhs = [f.zero] * nf
                for j, k, c in a.delta[i]:
                    term = fdata.algebra.mul(mod.act(j, es), mod.act(k, et))
                    rhs = [f.add(x, f.mul(c, y)) for x, y in zip(rhs, term)]
                if not vec_eq(f, lhs, rhs):
                    ok, witness = False, {"basis": a.alg.label(i), "pair": [s, t]}
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("action measures products", ok, witness)
    return rep


# ---------------------------------------------------------------------------
# induced quotient coalgebra and its dual


@dataclass
class InducedCoalgebra:
    embedding: HopfEmbedding
    quotient: object            # QuotientData of A -> A (x)_B k
    delta: list                 # sparse comultiplication on the quotient
    dual_op: Algebra            # (dual algebra)^op
    iso_to_f: LinearMap         # algebra iso (dual)^op -> F
    f_data: CoinvariantAlgebra


def induced_coalgebra(emb: HopfEmbedding, f_data: CoinvariantAlgebra | None = None) -> InducedCoalgebra:
    """A (x)_B k with its coalgebra structure, and the dual-opposite iso onto F."""
    a, b = emb.a, emb.b
    f = emb.field
    da, db = a.dim, b.dim
    relations = []
    for bj in range(db):
        rm = a.alg.right_mult_matrix(emb.incl.column(bj))
        eps_b = b.counit[bj]
        for ai in range(da):
            rel = [rm[t][ai] for t in range(da)]
            rel[ai] = f.sub(rel[ai], eps_b)
            if not vec_is_zero(f, rel):
                relations.append(rel)
    q = quotient_space(f, a.space, relations)
    rep = Report("induced coalgebra", dims={"dimC1": q.space.dim})
    rep.require("dim C1 = dim A / dim B", q.space.dim * db == da,
                {"dimC1": q.space.dim, "dimA": da, "dimB": db})
    m = q.space.dim
    delta = []
    for j in range(m):
        lifted = q.section.column(j)
        dw = a.delta_of(lifted)
        entry = {}
        for (u, v), c in dw.items():
            pu = q.project(unit_vec(f, da, u))
            pv = q.project(unit_vec(f, da, v))
            for r, x in enumerate(pu):
                if f.is_zero(x):
                    continue
                for s, y in enumerate(pv):
                    if not f.is_zero(y):
                        key = (r, s)
                        entry[key] = f.add(entry.get(key, f.zero), f.mul(c, f.mul(x, y)))
        delta.append([(r, s, c) for (r, s), c in sorted(entry.items()) if not f.is_zero(c)])
    # well-definedness of the comultiplication over the section choice
    proj2 = q.proj.kron(q.proj)
    for rel in relations:
        dw = a.delta_of(rel)
        amb = [f.zero] * (da * da)
        for (u, v), c in dw.items():
            amb[u * da + v] = c
        if not vec_is_zero(f, proj2.apply(amb)):
            rep.add("comultiplication well defined", False, {})
            raise VerificationError(rep)
    # dual algebra of the coalgebra, then opposite
    dual_table = [[[] for _ in range(m)] for _ in range(m)]
    for k in range(m):
        for j, l, c in delta[k]:
            dual_table[j][l].append((k, c))
    dual_unit = [a.counit_of(q.section.column(j)) for j in range(m)]
    dual_space = Space.make(tuple(f"{l}^" for l in q.space.labels))
    dual = Algebra(f, dual_space, dual_table, dual_unit)
    dual_op = opposite_algebra(dual)
    rep.merge(verify_algebra(dual_op, "dual algebra axioms"), "dual: ")
    if f_data is None:
        f_data = coinvariant_algebra(emb)
    # lambda |-> lambda . proj : row k of proj, expressed in the F basis
    cols = []
    for k in range(m):
        func = list(q.proj.rows[k])
        coords = f_data.solver.coordinates(func)
        rep.require("dual functional lies in F", coords is not None, {"index": k})
        cols.append(coords)
    iso = LinearMap.from_columns(f, dual_space, f_data.algebra.space, cols)
    rep.merge(verify_morphism(dual_op, f_data.algebra, iso, require_bijective=True,
                              task="dual-opposite vs F"), "iso: ")
    rep.raise_if_failed()
    return InducedCoalgebra(emb, q, delta, dual_op, iso, f_data)
