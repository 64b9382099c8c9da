"""Interior algebras and their induction along an extension.

Two constructions of the induced algebra are materialized on explicit
bases and compared by explicit isomorphism:

  * the endomorphism form End_{C^op}(M (x)_B C), built as the commutant of
    the right C-action;
  * the tensor form A_beta (x)_B C (x)_B A, whose product is written through
    the Frobenius form (middle factor sigma(beta^{-1}(phi(a' a)))).

Also here: the surjective induction through an augmented epimorphism
(invariants of k (x)_K C), and the general induction together with its
factorization through the image.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Algebra,
    CommutantData,
    algebra_from_products,
    commutant_algebra,
    subalgebra_on_basis,
    verify_algebra,
    verify_morphism,
)
from .frobenius import FrobeniusSystem
from .linalg import (
    CoordinateSolver,
    LinearMap,
    ShapeError,
    make_solver,
    QuotientData,
    Space,
    columns_of,
    cols_times_vec,
    flatten_rows,
    kernel_basis,
    mat_mul,
    quotient_space,
    rank,
    solve_linear,
    sparse_of,
    subspace_leq,
    tensor_space,
    unit_vec,
    vec_eq,
    vec_is_zero,
    zeros,
)
from .modules import (
    Bimodule,
    LeftModule,
    RightModule,
    TensorOverData,
    invariant_subspace,
    tensor_over,
    transported_operator,
    twist_right,
    verify_bimodule,
)
from .report import Report, VerificationError


@dataclass
class InteriorAlgebra:
    """An algebra C together with a structural map sigma: B -> C."""

    b: Algebra
    c: Algebra
    sigma: LinearMap

    @property
    def field(self):
        return self.b.field

    def sigma_of(self, bv):
        return self.sigma.apply(bv)


def interior_algebra(b: Algebra, c: Algebra, sigma: LinearMap) -> InteriorAlgebra:
    rep = verify_morphism(b, c, sigma, task="structural map")
    rep.raise_if_failed()
    return InteriorAlgebra(b, c, sigma)


def interior_bimodule(ia: InteriorAlgebra) -> Bimodule:
    """C as a (B, B)-bimodule through sigma."""
    f = ia.field
    left_ops = [ia.c.left_mult_matrix(ia.sigma.column(i)) for i in range(ia.b.dim)]
    right_ops = [ia.c.right_mult_matrix(ia.sigma.column(i)) for i in range(ia.b.dim)]
    bim = Bimodule(LeftModule(ia.b, ia.c.space, left_ops),
                   RightModule(ia.b, ia.c.space, right_ops))
    verify_bimodule(bim, "interior bimodule").raise_if_failed()
    return bim


@dataclass
class InducedInterior:
    """An induced interior algebra: carrier with a verified structural map."""

    carrier: Algebra
    structural: LinearMap
    report: Report
    # endomorphism-form extras
    commutant: CommutantData | None = None
    module: TensorOverData | None = None
    # tensor-form extras
    quotient: QuotientData | None = None

    @property
    def dim(self):
        return self.carrier.dim


# ---------------------------------------------------------------------------
# the endomorphism form


def endomorphism_induction(m: Bimodule, ia: InteriorAlgebra,
                           task="endomorphism induction") -> InducedInterior:
    """End_{C^op}(M (x)_B C) with a |-> left multiplication as structural map."""
    f = ia.field
    if m.right.algebra is not ia.b and m.right.algebra.table != ia.b.table:
        raise ShapeError("module and interior algebra live over different algebras")
    c_left = LeftModule(ia.b, ia.c.space,
                        [ia.c.left_mult_matrix(ia.sigma.column(i)) for i in range(ia.b.dim)])
    tq = tensor_over(m.right, c_left)
    rep = Report(task, dims={"module": tq.space.dim})
    dm, dc = m.space.dim, ia.c.space.dim
    # right C-action (m (x) c) c' = m (x) cc', transported to the quotient
    right_ops = []
    for j in range(ia.c.dim):
        amb = _kron_id_left(f, dm, ia.c.right_mult_matrix(unit_vec(f, ia.c.dim, j)), dc)
        right_ops.append(transported_operator(f, tq.quotient, amb, "right C-action"))
    comm = commutant_algebra(f, tq.space, right_ops, task="End over C^op")
    # the commutant really commutes with the action (module-map certificate)
    for mat in comm.basis_matrices:
        for op in right_ops:
            if not vec_eq(f, flatten_rows(mat_mul(f, mat, op)),
                          flatten_rows(mat_mul(f, op, mat))):
                rep.add("commutant certificate", False, {})
                raise VerificationError(rep)
    rep.dims["dim"] = comm.algebra.dim
    # structural map: left multiplication by a on the M side
    a_alg = m.left.algebra
    cols = []
    for i in range(a_alg.dim):
        amb = _kron_id_right(f, m.left.ops[i], dm, dc)
        op = transported_operator(f, tq.quotient, amb, "left A-action")
        coords = comm.coordinates_of_matrix(op)
        if coords is None:
            rep.add("structural lands in commutant", False, {"basis": a_alg.label(i)})
            raise VerificationError(rep)
        cols.append(coords)
    structural = LinearMap.from_columns(f, a_alg.space, comm.algebra.space, cols)
    rep.merge(verify_morphism(a_alg, comm.algebra, structural, task="structural"),
              "structural: ")
    rep.raise_if_failed()
    return InducedInterior(comm.algebra, structural, rep, commutant=comm, module=tq)


def _kron_id_left(field, dm, right_rows, dc):
    """id_M (x) op on the lexicographic basis of M (x) C."""
    out = zeros(field, dm * dc, dm * dc)
    for i in range(dm):
        for r in range(dc):
            row = right_rows[r]
            orow = out[i * dc + r]
            for s, c in enumerate(row):
                if not field.is_zero(c):
                    orow[i * dc + s] = c
    return out


def _kron_id_right(field, left_rows, dm, dc):
    """op (x) id_C on the lexicographic basis of M (x) C."""
    out = zeros(field, dm * dc, dm * dc)
    for r in range(dm):
        row = left_rows[r]
        for s, c in enumerate(row):
            if field.is_zero(c):
                continue
            for j in range(dc):
                out[r * dc + j][s * dc + j] = c
    return out


# ---------------------------------------------------------------------------
# the tensor form


@dataclass
class TensorForm:
    induced: InducedInterior
    sys: FrobeniusSystem
    ia: InteriorAlgebra
    quotient: QuotientData
    mid_table: list  # mid_table[k][i] = sigma(beta_inv(phi(e_k e_i))) in C

    def ambient_product(self, u, v):
        """Product of two ambient vectors of A (x) C (x) A."""
        f = self.sys.field
        da = self.sys.embedding.a.dim
        dc = self.ia.c.dim
        out = [f.zero] * (da * dc * da)
        uc = [(t, x) for t, x in enumerate(u) if not f.is_zero(x)]
        vc = [(t, x) for t, x in enumerate(v) if not f.is_zero(x)]
        for t1, x1 in uc:
            a1, rem = divmod(t1, dc * da)
            c1, a1p = divmod(rem, da)
            for t2, x2 in vc:
                a2, rem2 = divmod(t2, dc * da)
                c2, a2p = divmod(rem2, da)
                mid = self.mid_table[a1p][a2]
                if mid is None:
                    continue
                coef = f.mul(x1, x2)
                middle = self.ia.c.mul(self.ia.c.mul(unit_vec(f, dc, c1), mid),
                                       unit_vec(f, dc, c2))
                base = a1 * dc * da
                for cm, xm in enumerate(middle):
                    if not f.is_zero(xm):
                        out[base + cm * da + a2p] = f.add(
                            out[base + cm * da + a2p], f.mul(coef, xm))
        return out


def tensor_induction(sys: FrobeniusSystem, ia: InteriorAlgebra,
                     task="tensor-form induction") -> TensorForm:
    """A_beta (x)_B C (x)_B A with the Frobenius-form product, fully verified."""
    emb = sys.embedding
    a, b = emb.a, emb.b
    f = emb.field
    if ia.b.table != b.alg.table:
        raise ShapeError("interior algebra is not over the base of the extension")
    da, dc, db = a.dim, ia.c.dim, b.dim
    amb_space = tensor_space(tensor_space(a.space, ia.c.space), a.space)
    rep = Report(task, dims={"ambient": amb_space.dim})

    relations = []
    # (a.beta(b)) (x) c (x) a'  -  a (x) sigma(b)c (x) a'
    for bj in range(db):
        rm = a.alg.right_mult_matrix(emb.incl.apply(
            [sys.beta[t][bj] for t in range(db)]))
        lm = ia.c.left_mult_matrix(ia.sigma.column(bj))
        for ai in range(da):
            acol = [rm[t][ai] for t in range(da)]
            for ci in range(dc):
                ccol = [lm[t][ci] for t in range(dc)]
                for aj in range(da):
                    rel = [f.zero] * amb_space.dim
                    for t, x in enumerate(acol):
                        if not f.is_zero(x):
                            rel[t * dc * da + ci * da + aj] = f.add(
                                rel[t * dc * da + ci * da + aj], x)
                    for t, x in enumerate(ccol):
                        if not f.is_zero(x):
                            rel[ai * dc * da + t * da + aj] = f.sub(
                                rel[ai * dc * da + t * da + aj], x)
                    if not vec_is_zero(f, rel):
                        relations.append(rel)
    # a (x) c.sigma(b) (x) a'  -  a (x) c (x) incl(b) a'
    for bj in range(db):
        rm = ia.c.right_mult_matrix(ia.sigma.column(bj))
        lm = a.alg.left_mult_matrix(emb.incl.column(bj))
        for ci in range(dc):
            ccol = [rm[t][ci] for t in range(dc)]
            for aj in range(da):
                acol = [lm[t][aj] for t in range(da)]
                for ai in range(da):
                    rel = [f.zero] * amb_space.dim
                    for t, x in enumerate(ccol):
                        if not f.is_zero(x):
                            rel[ai * dc * da + t * da + aj] = f.add(
                                rel[ai * dc * da + t * da + aj], x)
                    for t, x in enumerate(acol):
                        if not f.is_zero(x):
                            rel[ai * dc * da + ci * da + t] = f.sub(
                                rel[ai * dc * da + ci * da + t], x)
                    if not vec_is_zero(f, rel):
                        relations.append(rel)
    q = quotient_space(f, amb_space, relations)
    rep.dims["dim"] = q.space.dim

    # middle factors sigma(beta_inv(phi(e_k e_i)))
    mid_table = []
    for k in range(da):
        row = []
        for i in range(da):
            prod = a.alg.mul(unit_vec(f, da, k), unit_vec(f, da, i))
            mid = ia.sigma.apply(sys.beta_inv_of(sys.phi_of(prod)))
            row.append(None if vec_is_zero(f, mid) else mid)
        mid_table.append(row)

    form = TensorForm(None, sys, ia, q, mid_table)  # induced filled below

    # well-definedness: relations annihilate the product on both sides
    lifted = [q.section.column(j) for j in range(q.space.dim)]
    ok = True
    for rel in relations:
        for w in lifted:
            if not vec_is_zero(f, q.project(form.ambient_product(rel, w))) or \
               not vec_is_zero(f, q.project(form.ambient_product(w, rel))):
                ok = False
                break
        if not ok:
            break
    rep.require("product well defined on quotient", ok)

    def products(i, j):
        return q.project(form.ambient_product(lifted[i], lifted[j]))

    unit_amb = [f.zero] * amb_space.dim
    for rv, lv in zip(sys.r, sys.l):
        for t1, x1 in enumerate(rv):
            if f.is_zero(x1):
                continue
            for c1, xc in enumerate(ia.c.unit):
                if f.is_zero(xc):
                    continue
                for t2, x2 in enumerate(lv):
                    if not f.is_zero(x2):
                        idx = t1 * dc * da + c1 * da + t2
                        unit_amb[idx] = f.add(unit_amb[idx],
                                              f.mul(f.mul(x1, xc), x2))
    carrier = algebra_from_products(f, q.space, products, q.project(unit_amb))
    rep.merge(verify_algebra(carrier, "carrier axioms"), "carrier: ")

    # structural map tau(a) = sum a r_i (x) 1 (x) l_i
    cols = []
    for i in range(da):
        e = unit_vec(f, da, i)
        amb = [f.zero] * amb_space.dim
        for rv, lv in zip(sys.r, sys.l):
            ar = a.alg.mul(e, rv)
            for t1, x1 in enumerate(ar):
                if f.is_zero(x1):
                    continue
                for c1, xc in enumerate(ia.c.unit):
                    if f.is_zero(xc):
                        continue
                    for t2, x2 in enumerate(lv):
                        if not f.is_zero(x2):
                            idx = t1 * dc * da + c1 * da + t2
                            amb[idx] = f.add(amb[idx], f.mul(f.mul(x1, xc), x2))
        cols.append(q.project(amb))
    structural = LinearMap.from_columns(f, a.space, q.space, cols)
    rep.merge(verify_morphism(a.alg, carrier, structural, task="structural tau"),
              "tau: ")
    rep.raise_if_failed()
    induced = InducedInterior(carrier, structural, rep, quotient=q)
    form.induced = induced
    return form


# ---------------------------------------------------------------------------
# the isomorphism between the two forms


@dataclass
class InteriorIsomorphism:
    source: Algebra
    target: Algebra
    forward: LinearMap
    backward: LinearMap
    report: Report


def beta_twisted_bimodule(sys: FrobeniusSystem) -> Bimodule:
    """A as an (A, B)-bimodule: plain left multiplication, right
    multiplication twisted through beta."""
    emb = sys.embedding
    a = emb.a
    f = emb.field
    left_ops = [a.alg.left_mult_matrix(unit_vec(f, a.dim, i)) for i in range(a.dim)]
    right_ops = []
    for j in range(emb.b.dim):
        tw = emb.incl.apply([sys.beta[t][j] for t in range(emb.b.dim)])
        right_ops.append(a.alg.right_mult_matrix(tw))
    m = Bimodule(LeftModule(a.alg, a.space, left_ops),
                 RightModule(emb.b.alg, a.space, right_ops))
    verify_bimodule(m, "A_beta bimodule").raise_if_failed()
    return m


def tensor_endomorphism_iso(sys: FrobeniusSystem, ia: InteriorAlgebra,
                            endo_ind: InducedInterior | None = None,
                            task="tensor vs endomorphism forms") -> tuple:
    """The explicit isomorphism  tensor form -> End_{C^op}(A_beta (x)_B C).

    psi(a (x) c (x) a') sends b (x) d to a (x) c sigma(beta_inv(phi(a' b))) d;
    its inverse sends f to sum_i f(r_i (x) 1) (x) l_i.  Everything is checked:
    mutual inversion, multiplicativity, unitality, and the intertwining of
    the two structural maps.
    """
    emb = sys.embedding
    a = emb.a
    f = emb.field
    form = tensor_induction(sys, ia)
    tensor_ind = form.induced
    if endo_ind is None:
        endo_ind = endomorphism_induction(beta_twisted_bimodule(sys), ia)
    rep = Report(task, dims={"tensor": tensor_ind.dim, "endo": endo_ind.dim})
    rep.require("dimensions agree", tensor_ind.dim == endo_ind.dim,
                {"tensor": tensor_ind.dim, "endo": endo_ind.dim})

    q = form.quotient
    tq = endo_ind.module
    dc = ia.c.dim
    da = a.dim
    # psi on the quotient basis of the tensor form
    cols = []
    psi_mats = []
    for jq in range(tensor_ind.dim):
        amb = q.section.column(jq)
        mat = zeros(f, tq.space.dim, tq.space.dim)
        # column of the operator: image of each basis vector of A_beta (x)_B C
        for jm in range(tq.space.dim):
            mc = tq.quotient.section.column(jm)  # in A (x) C
            out_amb = [f.zero] * (da * dc)
            for t, x in enumerate(amb):
                if f.is_zero(x):
                    continue
                a1, rem = divmod(t, dc * da)
                c1, a1p = divmod(rem, da)
                for tm, y in enumerate(mc):
                    if f.is_zero(y):
                        continue
                    bb, dd = divmod(tm, dc)
                    mid = form.mid_table[a1p][bb]
                    if mid is None:
                        continue
                    middle = ia.c.mul(ia.c.mul(unit_vec(f, dc, c1), mid),
                                      unit_vec(f, dc, dd))
                    coef = f.mul(x, y)
                    for cm, xm in enumerate(middle):
                        if not f.is_zero(xm):
                            out_amb[a1 * dc + cm] = f.add(
                                out_amb[a1 * dc + cm], f.mul(coef, xm))
            col = tq.quotient.project(out_amb)
            for r, x in enumerate(col):
                mat[r][jm] = x
        psi_mats.append(mat)
        coords = endo_ind.commutant.coordinates_of_matrix(mat)
        rep.require("psi image lies in End_{C^op}", coords is not None, {"basis": jq})
        cols.append(coords)
    forward = LinearMap.from_columns(f, q.space, endo_ind.carrier.space, cols)
    rep.merge(verify_morphism(tensor_ind.carrier, endo_ind.carrier, forward,
                              require_bijective=True, task="psi"), "psi: ")
    # psi inverse: f |-> sum_i f(r_i (x) 1) (x) l_i
    bcols = []
    for s in range(endo_ind.dim):
        mat = endo_ind.commutant.basis_matrices[s]
        amb_total = [f.zero] * (da * dc * da)
        for rv, lv in zip(sys.r, sys.l):
            r_amb = [f.zero] * (da * dc)
            for t, x in enumerate(rv):
                if f.is_zero(x):
                    continue
                for c1, xc in enumerate(ia.c.unit):
                    if not f.is_zero(xc):
                        r_amb[t * dc + c1] = f.add(r_amb[t * dc + c1], f.mul(x, xc))
            img = cols_times_vec(f, columns_of(f, mat), tq.space.dim,
                                 tq.quotient.project(r_amb))
            lifted = tq.quotient.lift(img)  # in A (x) C
            for tm, y in enumerate(lifted):
                if f.is_zero(y):
                    continue
                bb, dd = divmod(tm, dc)
                for t2, x2 in enumerate(lv):
                    if not f.is_zero(x2):
                        idx = bb * dc * da + dd * da + t2
                        amb_total[idx] = f.add(amb_total[idx], f.mul(y, x2))
        bcols.append(q.project(amb_total))
    backward = LinearMap.from_columns(f, endo_ind.carrier.space, q.space, bcols)
    ident_t = LinearMap.identity(f, q.space)
    ident_e = LinearMap.identity(f, endo_ind.carrier.space)
    rep.require("psi_inv . psi = id",
                vec_eq(f, flatten_rows(backward.compose(forward).rows),
                       flatten_rows(ident_t.rows)))
    rep.require("psi . psi_inv = id",
                vec_eq(f, flatten_rows(forward.compose(backward).rows),
                       flatten_rows(ident_e.rows)))
    # interior compatibility: psi . tau = structural of the endomorphism form
    lhs = forward.compose(tensor_ind.structural)
    rhs = endo_ind.structural
    rep.require("psi intertwines the structural maps",
                vec_eq(f, flatten_rows(lhs.rows), flatten_rows(rhs.rows)))
    rep.raise_if_failed()
    iso = InteriorIsomorphism(tensor_ind.carrier, endo_ind.carrier, forward, backward, rep)
    return form, endo_ind, iso


# ---------------------------------------------------------------------------
# surjective and general induction through an augmented morphism


@dataclass
class AugmentedMap:
    """An algebra map phi: B -> A commuting with the augmentations."""

    source: Algebra
    target: Algebra
    map: LinearMap
    alpha_source: list  # dense row on B
    alpha_target: list  # dense row on A


def augmented_map(source, target, lin, alpha_source, alpha_target) -> AugmentedMap:
    f = source.field
    rep = verify_morphism(source, target, lin, task="augmented morphism")
    ok = True
    for j in range(source.dim):
        img = lin.column(j)
        acc = f.zero
        for x, c in zip(img, alpha_target):
            acc = f.add(acc, f.mul(x, c))
        if not f.is_zero(f.sub(acc, alpha_source[j])):
            ok = False
            break
    rep.add("compatible with augmentations", ok)
    rep.raise_if_failed()
    return AugmentedMap(source, target, lin, list(alpha_source), list(alpha_target))


def _kernel_of_map(field, lin: LinearMap):
    return kernel_basis(field, lin.rows)


def _sandwich_data(phi: AugmentedMap, k_incl: LinearMap):
    """Subspace data for the hypothesis K+ <= Ker phi <= K+ B.

    Returns (ker_phi, kplus, lower_ok, upper_right_ok, upper_left_ok); the
    last entry is the mirrored product B K+, computed for the sidedness
    diagnostic only.
    """
    f = phi.source.field
    b = phi.source
    ker_phi = _kernel_of_map(f, phi.map)
    # K+ = ker(alpha_B) cap K, inside B
    alpha_on_k = [[_pair(f, phi.alpha_source, k_incl.column(j))
                   for j in range(k_incl.domain.dim)]]
    kplus = [k_incl.apply(v) for v in kernel_basis(f, alpha_on_k)]
    right_prod = []
    left_prod = []
    for w in kplus:
        for i in range(b.dim):
            e = unit_vec(f, b.dim, i)
            right_prod.append(b.mul(w, e))
            left_prod.append(b.mul(e, w))
    lower_ok = subspace_leq(f, kplus, ker_phi)
    upper_right = subspace_leq(f, ker_phi, right_prod)
    upper_left = subspace_leq(f, ker_phi, left_prod)
    return ker_phi, kplus, lower_ok, upper_right, upper_left


def _pair(field, row, col):
    acc = field.zero
    for a, b in zip(row, col):
        acc = field.add(acc, field.mul(a, b))
    return acc


@dataclass
class ScalarCollapse:
    """The right-C-module identification A_phi (x)_B C = k (x)_K C."""

    lhs: TensorOverData       # A_phi (x)_B C
    rhs: QuotientData         # C / span(sigma(x) c - alpha(x) c)
    forward: LinearMap
    backward: LinearMap
    preimages: list           # chosen b with phi(b) = e_a, per A basis vector
    report: Report


def scalar_collapse(phi: AugmentedMap, k_incl: LinearMap, ia: InteriorAlgebra,
                    task="scalar collapse") -> ScalarCollapse:
    """psi(b-bar (x) c) = 1 (x) sigma(b) c and its inverse, both verified."""
    f = phi.source.field
    b_alg, a_alg = phi.source, phi.target
    rep = Report(task)
    ker_phi, kplus, lower_ok, upper_right, upper_left = _sandwich_data(phi, k_incl)
    rep.dims["kernel_in_KplusB"] = int(upper_right)
    rep.dims["kernel_in_BKplus"] = int(upper_left)
    rep.require("hypothesis: Ker phi inside K+ B", upper_right)
    # left side: A as right B-module through phi, tensored with C
    right_ops = [a_alg.right_mult_matrix(phi.map.column(j)) for j in range(b_alg.dim)]
    m = RightModule(b_alg, a_alg.space, right_ops)
    c_left = LeftModule(b_alg, ia.c.space,
                        [ia.c.left_mult_matrix(ia.sigma.column(j)) for j in range(b_alg.dim)])
    lhs = tensor_over(m, c_left)
    # right side: C / span(sigma(x) c - alpha_B(x) c)
    relations = []
    dc = ia.c.dim
    for j in range(k_incl.domain.dim):
        xb = k_incl.column(j)
        lm = ia.c.left_mult_matrix(ia.sigma.apply(xb))
        weight = _pair(f, phi.alpha_source, xb)
        for ci in range(dc):
            rel = [lm[t][ci] for t in range(dc)]
            rel[ci] = f.sub(rel[ci], weight)
            if not vec_is_zero(f, rel):
                relations.append(rel)
    rhs = quotient_space(f, ia.c.space, relations)
    rep.dims.update({"lhs": lhs.space.dim, "rhs": rhs.space.dim})
    # deterministic preimages of the A-basis under phi
    preimages = []
    for i in range(a_alg.dim):
        sol = solve_linear(f, phi.map.rows, unit_vec(f, a_alg.dim, i))
        rep.require("phi surjective", sol is not None, {"basis": a_alg.label(i)})
        preimages.append(sol)
    # kernel vectors of phi must die in the rhs (well-definedness over preimages)
    ok = True
    for v in ker_phi:
        sv = ia.sigma.apply(v)
        for ci in range(dc):
            img = rhs.project(ia.c.mul(sv, unit_vec(f, dc, ci)))
            if not vec_is_zero(f, img):
                ok = False
                break
        if not ok:
            break
    rep.require("Ker phi acts by zero on the collapse", ok)

    da = a_alg.dim
    fwd_cols = []
    for jq in range(lhs.space.dim):
        amb = lhs.quotient.section.column(jq)  # in A (x) C
        out = [f.zero] * dc
        for t, x in enumerate(amb):
            if f.is_zero(x):
                continue
            ai, ci = divmod(t, dc)
            term = ia.c.mul(ia.sigma.apply(preimages[ai]), unit_vec(f, dc, ci))
            out = [f.add(u, f.mul(x, v)) for u, v in zip(out, term)]
        fwd_cols.append(rhs.project(out))
    forward = LinearMap.from_columns(f, lhs.space, rhs.space, fwd_cols)
    # inverse: 1 (x) c |-> class(1_A (x) c)
    bwd_cols = []
    for jq in range(rhs.space.dim):
        cvec = rhs.section.column(jq)
        amb = [f.zero] * (da * dc)
        for ai, x in enumerate(a_alg.unit):
            if f.is_zero(x):
                continue
            for ci, y in enumerate(cvec):
                if not f.is_zero(y):
                    amb[ai * dc + ci] = f.mul(x, y)
        bwd_cols.append(lhs.quotient.project(amb))
    backward = LinearMap.from_columns(f, rhs.space, lhs.space, bwd_cols)
    rep.require("mutually inverse",
                vec_eq(f, flatten_rows(forward.compose(backward).rows),
                       flatten_rows(LinearMap.identity(f, rhs.space).rows))
                and vec_eq(f, flatten_rows(backward.compose(forward).rows),
                           flatten_rows(LinearMap.identity(f, lhs.space).rows)))
    # right C-module maps
    ok = True
    for j in range(ia.c.dim):
        amb_op = _kron_id_left(f, da, ia.c.right_mult_matrix(unit_vec(f, dc, j)), dc)
        lhs_op = transported_operator(f, lhs.quotient, amb_op, "right C on lhs")
        rhs_op = transported_operator(f, rhs, ia.c.right_mult_matrix(unit_vec(f, dc, j)),
                                      "right C on rhs")
        if not vec_eq(f, flatten_rows(mat_mul(f, forward.rows, lhs_op)),
                      flatten_rows(mat_mul(f, rhs_op, forward.rows))):
            ok = False
            break
    rep.require("right C-linear", ok)
    rep.raise_if_failed()
    return ScalarCollapse(lhs, rhs, forward, backward, preimages, rep)


@dataclass
class SurjectiveInduction:
    induced: InducedInterior
    collapse_quotient: QuotientData   # k (x)_K C as a quotient of C
    invariants: list                  # basis of the K-invariants (in the quotient)
    solver: CoordinateSolver
    preimages: list


def surjective_induction(phi: AugmentedMap, k_incl: LinearMap, ia: InteriorAlgebra,
                         task="surjective induction") -> SurjectiveInduction:
    """(k (x)_K C)^K with product 1 (x) c . 1 (x) d = 1 (x) cd and the
    structural map b-bar |-> 1 (x) sigma(b)."""
    f = phi.source.field
    rep = Report(task)
    ker_phi, kplus, lower_ok, upper_right, upper_left = _sandwich_data(phi, k_incl)
    rep.dims["kernel_in_KplusB"] = int(upper_right)
    rep.dims["kernel_in_BKplus"] = int(upper_left)
    rep.require("hypothesis: K+ inside Ker phi", lower_ok)
    rep.require("hypothesis: Ker phi inside K+ B", upper_right)
    dc = ia.c.dim
    relations = []
    dk = k_incl.domain.dim
    for j in range(dk):
        xb = k_incl.column(j)
        lm = ia.c.left_mult_matrix(ia.sigma.apply(xb))
        weight = _pair(f, phi.alpha_source, xb)
        for ci in range(dc):
            rel = [lm[t][ci] for t in range(dc)]
            rel[ci] = f.sub(rel[ci], weight)
            if not vec_is_zero(f, rel):
                relations.append(rel)
    q = quotient_space(f, ia.c.space, relations)
    # right K-action (1 (x) c) x = 1 (x) c sigma(x), transported
    ops = []
    weights = []
    for j in range(dk):
        xb = k_incl.column(j)
        amb_op = ia.c.right_mult_matrix(ia.sigma.apply(xb))
        ops.append(transported_operator(f, q, amb_op, "right K-action"))
        weights.append(_pair(f, phi.alpha_source, xb))
    inv = invariant_subspace(f, q.space, ops, weights)
    rep.dims.update({"collapse": q.space.dim, "invariants": len(inv)})
    rep.require("invariants nonempty", len(inv) > 0)
    solver = make_solver(f, inv, q.space.dim)
    lifted = [q.lift(v) for v in inv]  # representatives in C
    # product well-defined on invariants: u . r projects to zero for relations r
    ok = True
    for u in lifted:
        for rel in relations:
            if not vec_is_zero(f, q.project(ia.c.mul(u, rel))):
                ok = False
                break
        if not ok:
            break
    rep.require("product independent of representatives", ok)
    space = Space.make(tuple(f"v{i}" for i in range(len(inv))))

    def products(i, j):
        w = q.project(ia.c.mul(lifted[i], lifted[j]))
        coords = solver.coordinates(w)
        if coords is None:
            rep.add("product closes on invariants", False, {"pair": [i, j]})
            raise VerificationError(rep)
        return coords

    unit_coords = solver.coordinates(q.project(ia.c.unit))
    rep.require("unit is invariant", unit_coords is not None)
    carrier = algebra_from_products(f, space, products, unit_coords)
    rep.merge(verify_algebra(carrier, "carrier axioms"), "carrier: ")
    # structural map through phi-preimages
    preimages = []
    cols = []
    for i in range(phi.target.dim):
        sol = solve_linear(f, phi.map.rows, unit_vec(f, phi.target.dim, i))
        rep.require("phi surjective", sol is not None, {"basis": phi.target.label(i)})
        preimages.append(sol)
        w = q.project(ia.sigma.apply(sol))
        coords = solver.coordinates(w)
        rep.require("structural image invariant", coords is not None,
                    {"basis": phi.target.label(i)})
        cols.append(coords)
    structural = LinearMap.from_columns(f, phi.target.space, space, cols)
    rep.merge(verify_morphism(phi.target, carrier, structural, task="structural"),
              "structural: ")
    rep.raise_if_failed()
    induced = InducedInterior(carrier, structural, rep)
    return SurjectiveInduction(induced, q, inv, solver, preimages)


# ---------------------------------------------------------------------------
# general induction through an arbitrary augmented morphism


@dataclass
class GeneralInduction:
    direct: InducedInterior      # End form over A_phi
    factored: InducedInterior    # End form over A as a phi(B)-module
    iso: "InteriorIsomorphism"   # explicit comparison, factored -> direct
    image: object                # SubalgebraData for phi(B)


def general_induction(phi: AugmentedMap, k_incl: LinearMap, ia: InteriorAlgebra,
                      task="general induction") -> GeneralInduction:
    """Induction through any augmented morphism, computed two ways.

    Directly as the endomorphism induction over A with the right action
    through phi, and as the factored form through the image phi(B) (the
    surjective induction there, then induction along A).  The two are
    compared by an explicit verified isomorphism.
    """
    f = phi.source.field
    a_alg, b_alg = phi.target, phi.source
    rep = Report(task)
    # direct route
    left_ops = [a_alg.left_mult_matrix(unit_vec(f, a_alg.dim, i))
                for i in range(a_alg.dim)]
    right_ops = [a_alg.right_mult_matrix(phi.map.column(j)) for j in range(b_alg.dim)]
    m_phi = Bimodule(LeftModule(a_alg, a_alg.space, left_ops),
                     RightModule(b_alg, a_alg.space, right_ops))
    verify_bimodule(m_phi, "A_phi bimodule").raise_if_failed()
    direct = endomorphism_induction(m_phi, ia)

    # image subalgebra phi(B) with its induced augmentation
    from .linalg import rref
    _, img_basis = rref(f, [phi.map.column(j) for j in range(b_alg.dim)])
    image = subalgebra_on_basis(a_alg, img_basis,
                                labels=tuple(f"p{i}" for i in range(len(img_basis))),
                                task="image subalgebra")
    bprime = image.algebra
    phibar_cols = []
    for j in range(b_alg.dim):
        coords = image.solver.coordinates(phi.map.column(j))
        rep.require("phi lands in its image", coords is not None)
        phibar_cols.append(coords)
    phibar_map = LinearMap.from_columns(f, b_alg.space, bprime.space, phibar_cols)
    alpha_prime = [_pair(f, phi.alpha_target, v) for v in image.basis]
    phibar = augmented_map(b_alg, bprime, phibar_map, phi.alpha_source, alpha_prime)

    # surjective induction through the image
    surj = surjective_induction(phibar, k_incl, ia)
    d_alg = surj.induced.carrier
    d_interior = InteriorAlgebra(bprime, d_alg, surj.induced.structural)
    # factored route: A as an (A, phi(B))-bimodule
    right_ops2 = [a_alg.right_mult_matrix(v) for v in image.basis]
    m1 = Bimodule(LeftModule(a_alg, a_alg.space, left_ops),
                  RightModule(bprime, a_alg.space, right_ops2))
    verify_bimodule(m1, "A over the image").raise_if_failed()
    factored = endomorphism_induction(m1, d_interior)
    rep.dims.update({"direct": direct.dim, "factored": factored.dim})
    rep.require("dimensions agree", direct.dim == factored.dim)

    # explicit comparison factored -> direct through
    #   (A (x)_{B'} D) (x)_D (k (x)_K C)  =  A_phi (x)_B C
    v1 = direct.module      # A_phi (x)_B C
    v2 = factored.module    # A (x)_{B'} D
    qc = surj.collapse_quotient
    dc = ia.c.dim
    da = a_alg.dim
    dd = d_alg.dim
    inv_reps = [qc.lift(v) for v in surj.invariants]  # representatives in C
    # p_a = class of e_a (x) 1_D in V2
    p_cols = []
    for a_i in range(da):
        amb = [f.zero] * (da * dd)
        for r, x in enumerate(d_alg.unit):
            if not f.is_zero(x):
                amb[a_i * dd + r] = x
        p_cols.append(v2.quotient.project(amb))
    cols = []
    for s in range(factored.dim):
        fmat = factored.commutant.basis_matrices[s]
        out_cols = []
        for jq in range(v1.space.dim):
            amb1 = v1.quotient.section.column(jq)  # in A (x) C
            out_amb = [f.zero] * (da * dc)
            for t, x in enumerate(amb1):
                if f.is_zero(x):
                    continue
                a_i, c_i = divmod(t, dc)
                w = cols_times_vec(f, columns_of(f, fmat), v2.space.dim, p_cols[a_i])
                w_amb = v2.quotient.lift(w)  # in A (x) D
                for tm, y in enumerate(w_amb):
                    if f.is_zero(y):
                        continue
                    a_p, d_r = divmod(tm, dd)
                    acted = qc.project(ia.c.mul(inv_reps[d_r], unit_vec(f, dc, c_i)))
                    lifted = qc.lift(acted)
                    coef = f.mul(x, y)
                    for c_m, z in enumerate(lifted):
                        if not f.is_zero(z):
                            idx = a_p * dc + c_m
                            out_amb[idx] = f.add(out_amb[idx], f.mul(coef, z))
            out_cols.append(v1.quotient.project(out_amb))
        theta_mat = zeros(f, v1.space.dim, v1.space.dim)
        for j, col in enumerate(out_cols):
            for r, x in enumerate(col):
                theta_mat[r][j] = x
        coords = direct.commutant.coordinates_of_matrix(theta_mat)
        rep.require("comparison lands in the direct commutant", coords is not None,
                    {"basis": s})
        cols.append(coords)
    forward = LinearMap.from_columns(f, factored.carrier.space, direct.carrier.space,
                                     cols)
    rep.merge(verify_morphism(factored.carrier, direct.carrier, forward,
                              require_bijective=True, task="comparison"),
              "comparison: ")
    rep.require("comparison intertwines the structural maps",
                vec_eq(f, flatten_rows(forward.compose(factored.structural).rows),
                       flatten_rows(direct.structural.rows)))
    backward = forward.inverse()
    rep.raise_if_failed()
    iso = InteriorIsomorphism(factored.carrier, direct.carrier, forward, backward, rep)
    return GeneralInduction(direct, factored, iso, image)
