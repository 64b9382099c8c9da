"""Built-in instances: group algebras, the 4-dimensional Sweedler algebra,
Taft algebras over a prime field, duals, embeddings, normal quotients, and
the standard coefficient algebras (trivial / adjoint / regular / functions).

Names follow the A/B convention: "kS3/kC3" is the embedding kC3 <= kS3,
"kS3/kC3-normal" the quotient of kS3 by the ideal generated by the
augmentation ideal of kC3.
"""

from __future__ import annotations

from itertools import permutations

from .algebra import Algebra, scalar_algebra
from .fields import QQ, PrimeField
from .hopf import (
    HopfAlgebra,
    HopfEmbedding,
    NormalQuotient,
    dual_hopf,
    group_algebra,
    hopf_embedding,
    identity_embedding,
    normal_quotient,
)
from .linalg import LinearMap, Space, mat_mul, unit_vec, zeros


class UnknownInstanceError(KeyError):
    pass


# ---------------------------------------------------------------------------
# groups


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def cyclic_labels(n):
    return tuple("1" if i == 0 else ("g" if i == 1 else f"g{i}") for i in range(n))


def cyclic_group_algebra(n, field=QQ) -> HopfAlgebra:
    return group_algebra(field, cyclic_labels(n), cyclic_table(n))


_S3_PERMS = list(permutations(range(3)))
_S3_LABELS = {
    (0, 1, 2): "e",
    (0, 2, 1): "(23)",
    (1, 0, 2): "(12)",
    (1, 2, 0): "(123)",
    (2, 0, 1): "(132)",
    (2, 1, 0): "(13)",
}


def s3_table():
    idx = {p: i for i, p in enumerate(_S3_PERMS)}
    table = []
    for p in _S3_PERMS:
        row = []
        for q in _S3_PERMS:
            comp = tuple(p[q[i]] for i in range(3))  # p after q
            row.append(idx[comp])
        table.append(row)
    return table


def s3_group_algebra(field=QQ) -> HopfAlgebra:
    return group_algebra(field, tuple(_S3_LABELS[p] for p in _S3_PERMS), s3_table())


S3_ROTATIONS = (0, 3, 4)       # e, (123), (132)
S3_TRANSPOSITION = 2           # (12)


# ---------------------------------------------------------------------------
# Sweedler's 4-dimensional algebra


def sweedler_h4(field=QQ) -> HopfAlgebra:
    """Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx."""
    f = field
    one, zero = f.one, f.zero
    m1 = f.neg(one)
    space = Space.make(("1", "g", "x", "gx"))
    t = [[[] for _ in range(4)] for _ in range(4)]
    t[0][0] = [(0, one)]; t[0][1] = [(1, one)]; t[0][2] = [(2, one)]; t[0][3] = [(3, one)]
    t[1][0] = [(1, one)]; t[1][1] = [(0, one)]; t[1][2] = [(3, one)]; t[1][3] = [(2, one)]
    t[2][0] = [(2, one)]; t[2][1] = [(3, m1)];  t[2][2] = [];         t[2][3] = []
    t[3][0] = [(3, one)]; t[3][1] = [(2, m1)];  t[3][2] = [];         t[3][3] = []
    alg = Algebra(f, space, t, [one, zero, zero, zero])
    delta = [
        [(0, 0, one)],
        [(1, 1, one)],
        [(2, 0, one), (1, 2, one)],
        [(3, 1, one), (0, 3, one)],
    ]
    counit = [one, one, zero, zero]
    antipode = zeros(f, 4, 4)
    antipode[0][0] = one
    antipode[1][1] = one
    antipode[3][2] = m1   # S(x) = -gx
    antipode[2][3] = one  # S(gx) = x
    return HopfAlgebra(alg, delta, counit, antipode)


def sweedler_h4_wrong_antipode(field=QQ) -> HopfAlgebra:
    """Mutation oracle: S(x) = +gx breaks the antipode law."""
    h = sweedler_h4(field)
    antipode = [list(r) for r in h.antipode]
    antipode[3][2] = field.one
    antipode[2][3] = field.neg(field.one)
    return HopfAlgebra(h.alg, h.delta, h.counit, antipode)


# ---------------------------------------------------------------------------
# Taft algebras


def taft(n=3, p=7) -> HopfAlgebra:
    """Taft algebra of dimension n^2 over GF(p), q a primitive n-th root of 1.

    Basis g^i x^j (i major); g^n = 1, x^n = 0, x g = q g x,
    Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x.
    """
    f = PrimeField(p)
    q = f.primitive_root_of_unity(n)
    dim = n * n

    def idx(i, j):
        return i * n + j

    labels = []
    for i in range(n):
        for j in range(n):
            gi = "1" if i == 0 else ("g" if i == 1 else f"g{i}")
            xj = "" if j == 0 else ("x" if j == 1 else f"x{j}")
            labels.append((gi + xj) if (i or not j) else xj)
    space = Space.make(tuple(labels))
    table = [[[] for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j + l >= n:
                        entry = []
                    else:
                        entry = [(idx((i + k) % n, j + l), pow(q, j * k, p))]
                    table[idx(i, j)][idx(k, l)] = entry
    alg = Algebra(f, space, table, unit_vec(f, dim, 0))
    # comultiplication by multiplying out Delta(g)^i Delta(x)^j in A (x) A
    from .algebra import tensor_algebra
    aa = tensor_algebra(alg, alg)
    dg = unit_vec(f, dim * dim, idx(1, 0) * dim + idx(1, 0))
    dx = [f.zero] * (dim * dim)
    dx[idx(0, 1) * dim + idx(0, 0)] = f.one
    dx[idx(1, 0) * dim + idx(0, 1)] = f.one
    delta = []
    for i in range(n):
        for j in range(n):
            v = list(aa.unit)
            for _ in range(i):
                v = aa.mul(v, dg)
            for _ in range(j):
                v = aa.mul(v, dx)
            delta.append([(t // dim, t % dim, c) for t, c in enumerate(v) if not f.is_zero(c)])
    counit = [f.one if (t % n) == 0 else f.zero for t in range(dim)]
    # S(g) = g^{n-1}, S(x) = -g^{n-1} x, extended anti-multiplicatively
    sg = unit_vec(f, dim, idx(n - 1, 0))
    sx = [f.zero] * dim
    sx[idx(n - 1, 1)] = f.neg(f.one)
    antipode = zeros(f, dim, dim)
    for i in range(n):
        for j in range(n):
            v = list(alg.unit)
            for _ in range(j):
                v = alg.mul(v, sx)
            for _ in range(i):
                v = alg.mul(v, sg)
            for r, c in enumerate(v):
                antipode[r][idx(i, j)] = c
    return HopfAlgebra(alg, delta, counit, antipode)


# ---------------------------------------------------------------------------
# embeddings and quotients


def _embedding_from_indices(b: HopfAlgebra, a: HopfAlgebra, indices, name) -> HopfEmbedding:
    cols = [unit_vec(a.field, a.dim, i) for i in indices]
    incl = LinearMap.from_columns(a.field, b.space, a.space, cols)
    return hopf_embedding(b, a, incl, name=name)


def embedding_kc2_in_kc4(field=QQ) -> HopfEmbedding:
    return _embedding_from_indices(cyclic_group_algebra(2, field),
                                   cyclic_group_algebra(4, field), [0, 2], "kC4/kC2")


def embedding_kc3_in_ks3(field=QQ) -> HopfEmbedding:
    return _embedding_from_indices(cyclic_group_algebra(3, field),
                                   s3_group_algebra(field), list(S3_ROTATIONS), "kS3/kC3")


def embedding_kc2_in_ks3(field=QQ) -> HopfEmbedding:
    return _embedding_from_indices(cyclic_group_algebra(2, field),
                                   s3_group_algebra(field), [0, S3_TRANSPOSITION], "kS3/kC2")


def embedding_kc2_in_h4(field=QQ) -> HopfEmbedding:
    return _embedding_from_indices(cyclic_group_algebra(2, field),
                                   sweedler_h4(field), [0, 1], "H4/kC2")


# ---------------------------------------------------------------------------
# coefficient algebras


def trivial_module_algebra(b: HopfAlgebra):
    """C = k with the action through the counit."""
    from .smash import ModuleAlgebra
    c = scalar_algebra(b.field)
    action = [[[b.counit[i]]] for i in range(b.dim)]
    return ModuleAlgebra(b, c, action)


def adjoint_module_algebra(b: HopfAlgebra):
    """C = B with the adjoint action b.c = sum b_(1) c S(b_(2))."""
    from .smash import ModuleAlgebra
    f = b.field
    n = b.dim
    action = []
    for i in range(n):
        mat = zeros(f, n, n)
        for j, k, c in b.delta[i]:
            lm = b.alg.left_mult_matrix(unit_vec(f, n, j))
            rm = b.alg.right_mult_matrix(b.antipode_of(unit_vec(f, n, k)))
            comp = mat_mul(f, rm, lm)  # c |-> (e_j c) S(e_k)
            for r in range(n):
                for s in range(n):
                    if not f.is_zero(comp[r][s]):
                        mat[r][s] = f.add(mat[r][s], f.mul(c, comp[r][s]))
        action.append(mat)
    return ModuleAlgebra(b, Algebra(f, b.space, b.alg.table, list(b.alg.unit)), action)


def functions_module_algebra(b: HopfAlgebra, table):
    """C = k^G (pointwise product) with the translation action g . d_h = d_{gh}.

    Only meaningful when b is the group algebra of the given Cayley table.
    """
    from .smash import ModuleAlgebra
    f = b.field
    n = b.dim
    space = Space.make(tuple(f"d[{l}]" for l in b.space.labels))
    ctable = [[([(i, f.one)] if i == j else []) for j in range(n)] for i in range(n)]
    c = Algebra(f, space, ctable, [f.one] * n)
    action = []
    for g in range(n):
        mat = zeros(f, n, n)
        for h in range(n):
            mat[table[g][h]][h] = f.one
        action.append(mat)
    return ModuleAlgebra(b, c, action)


def trivial_interior_algebra(b: HopfAlgebra):
    """C = k, structural map the counit."""
    from .interior import InteriorAlgebra, interior_algebra
    c = scalar_algebra(b.field)
    sigma = LinearMap(b.field, b.space, c.space, [list(b.counit)])
    return interior_algebra(b.alg, c, sigma)


def regular_interior_algebra(b: HopfAlgebra):
    """C = B, structural map the identity."""
    from .interior import interior_algebra
    return interior_algebra(b.alg, b.alg, LinearMap.identity(b.field, b.space))


# ---------------------------------------------------------------------------
# the named catalog


def _hopf_builders():
    return {
        "kC2": lambda: cyclic_group_algebra(2),
        "kC3": lambda: cyclic_group_algebra(3),
        "kC4": lambda: cyclic_group_algebra(4),
        "kC6": lambda: cyclic_group_algebra(6),
        "kS3": s3_group_algebra,
        "H4": sweedler_h4,
        "T3F7": lambda: taft(3, 7),
        "dual-kC2": lambda: dual_hopf(cyclic_group_algebra(2)),
        "dual-kC3": lambda: dual_hopf(cyclic_group_algebra(3)),
        "dual-kS3": lambda: dual_hopf(s3_group_algebra()),
    }


def _embedding_builders():
    return {
        "kC4/kC2": embedding_kc2_in_kc4,
        "kS3/kC3": embedding_kc3_in_ks3,
        "kS3/kC2": embedding_kc2_in_ks3,
        "H4/kC2": embedding_kc2_in_h4,
        "kC2/kC2": lambda: identity_embedding(cyclic_group_algebra(2), name="kC2/kC2"),
        "kS3/kS3": lambda: identity_embedding(s3_group_algebra(), name="kS3/kS3"),
        "H4/H4": lambda: identity_embedding(sweedler_h4(), name="H4/H4"),
    }


def _quotient_builders():
    return {
        "kS3/kC3-normal": lambda: normal_quotient(embedding_kc3_in_ks3()),
        "kC4/kC2-normal": lambda: normal_quotient(embedding_kc2_in_kc4()),
        "kS3/kC2-normal": lambda: normal_quotient(embedding_kc2_in_ks3()),
        "H4/kC2-normal": lambda: normal_quotient(embedding_kc2_in_h4()),
    }


def hopf_names():
    return sorted(_hopf_builders())


def embedding_names():
    return sorted(_embedding_builders())


def quotient_names():
    return sorted(_quotient_builders())


def instance(name: str):
    """A fully verified catalog object: HopfAlgebra, embedding, or quotient."""
    for builders in (_hopf_builders(), _embedding_builders(), _quotient_builders()):
        if name in builders:
            return builders[name]()
    raise UnknownInstanceError(
        f"unknown instance {name!r}; known: "
        + ", ".join(hopf_names() + embedding_names() + quotient_names()))


def group_table_of(name: str):
    """Cayley table for the group-algebra instances (used by the CLI oracles)."""
    tables = {
        "kC2": cyclic_table(2),
        "kC3": cyclic_table(3),
        "kC4": cyclic_table(4),
        "kC6": cyclic_table(6),
        "kS3": s3_table(),
    }
    if name not in tables:
        raise UnknownInstanceError(f"{name!r} is not a group-algebra instance")
    return tables[name]


def coefficient_module_algebra(kind: str, b: HopfAlgebra, b_name: str = ""):
    """Named B-module algebras: trivial, adjoint, functions (group case)."""
    if kind == "trivial":
        return trivial_module_algebra(b)
    if kind == "adjoint":
        return adjoint_module_algebra(b)
    if kind == "functions":
        return functions_module_algebra(b, group_table_of(b_name))
    raise UnknownInstanceError(f"unknown coefficient algebra {kind!r}")


def coefficient_interior_algebra(kind: str, b: HopfAlgebra):
    """Named interior B-algebras: trivial (via the counit), regular."""
    if kind == "trivial":
        return trivial_interior_algebra(b)
    if kind == "regular":
        return regular_interior_algebra(b)
    raise UnknownInstanceError(f"unknown interior coefficient algebra {kind!r}")


def frobenius_beta_hint(emb: HopfEmbedding):
    """Stored twist for embeddings where the identity fails (instance data).

    For H4 over k[g] the working automorphism is g |-> -g.
    """
    if emb.name == "H4/kC2":
        f = emb.field
        return [[f.one, f.zero], [f.zero, f.neg(f.one)]]
    return None


def frobenius_system_for(emb: HopfEmbedding):
    from .frobenius import build_frobenius_system
    return build_frobenius_system(emb, beta_hint=frobenius_beta_hint(emb))
