# cython: boundscheck=False, wraparound=False
"""Compiled row-reduction kernels (same contract as hopfind._kernel_py).

The rational path keeps arbitrary-precision Python ints for the values and
only types the loop machinery; the prime path runs on C integers whenever
intermediates fit in 64 bits (p < 2**31).
"""

from fractions import Fraction
from math import gcd

BACKEND = "cython"


cdef list _primitive_int_row(object row):
    cdef Py_ssize_t i, n = len(row)
    cdef object denom = 1, g = 0, a, d
    cdef list ints = [0] * n
    for i in range(n):
        a = row[i]
        if isinstance(a, Fraction):
            d = a.denominator
            denom = denom // gcd(denom, d) * d
    for i in range(n):
        a = row[i]
        if isinstance(a, Fraction):
            ints[i] = int(a * denom)
        else:
            ints[i] = a * denom
    for i in range(n):
        a = ints[i]
        if a:
            g = gcd(g, a if a > 0 else -a)
    if g == 0:
        return None
    if g > 1:
        for i in range(n):
            ints[i] = ints[i] // g
    return ints


cdef list _make_primitive(list ints):
    cdef Py_ssize_t i, n = len(ints)
    cdef object g = 0, a
    for i in range(n):
        a = ints[i]
        if a:
            g = gcd(g, a if a > 0 else -a)
    if g == 0:
        return None
    if g > 1:
        return [ints[i] // g for i in range(n)]
    return list(ints)


cdef list _cross_reduce(list r, list pr, object coef, object lead):
    # r*lead - pr*coef, skipping known zeros
    cdef Py_ssize_t i, n = len(r)
    cdef list out = [0] * n
    cdef object a, b
    for i in range(n):
        a = r[i]
        b = pr[i]
        if b:
            out[i] = a * lead - b * coef
        elif a:
            out[i] = a * lead
    return out


def rref_rational(rows):
    """Canonical RREF over the rationals.  Returns (pivot_cols, rref_rows)."""
    if not rows:
        return [], []
    cdef list piv_cols = []
    cdef list piv_rows = []
    cdef list r, pr
    cdef object coef, lead
    cdef Py_ssize_t idx, j, n, pos
    for row in rows:
        r = _primitive_int_row(row)
        if r is None:
            continue
        for idx in range(len(piv_cols)):
            coef = r[<Py_ssize_t> piv_cols[idx]]
            if coef:
                pr = piv_rows[idx]
                r = _cross_reduce(r, pr, coef, pr[<Py_ssize_t> piv_cols[idx]])
        r = _make_primitive(r)
        if r is None:
            continue
        j = 0
        while not r[j]:
            j += 1
        if r[j] < 0:
            r = [-a for a in r]
        lead = r[j]
        for idx in range(len(piv_cols)):
            pr = piv_rows[idx]
            coef = pr[j]
            if coef:
                piv_rows[idx] = _make_primitive(_cross_reduce(pr, r, coef, lead))
        pos = 0
        n = len(piv_cols)
        while pos < n and <Py_ssize_t> piv_cols[pos] < j:
            pos += 1
        piv_cols.insert(pos, j)
        piv_rows.insert(pos, r)
    out = []
    for c, pr in zip(piv_cols, piv_rows):
        lead = pr[<Py_ssize_t> c]
        out.append([Fraction(a, lead) for a in pr])
    return list(piv_cols), out


def rref_prime(rows, p):
    """Canonical RREF over GF(p).  Returns (pivot_cols, rref_rows)."""
    if not rows:
        return [], []
    if p >= (1 << 31):
        return _rref_prime_obj(rows, p)
    cdef long long cp = p
    cdef list piv_cols = []
    cdef list piv_rows = []
    cdef list r, pr
    cdef long long coef, inv, a
    cdef Py_ssize_t idx, j, n, pos, i, ncols
    for row in rows:
        ncols = len(row)
        r = [0] * ncols
        for i in range(ncols):
            r[i] = (<long long> row[i]) % cp
        for idx in range(len(piv_cols)):
            j = <Py_ssize_t> piv_cols[idx]
            coef = <long long> r[j]
            if coef:
                pr = piv_rows[idx]
                for i in range(ncols):
                    a = <long long> pr[i]
                    if a:
                        r[i] = ((<long long> r[i]) - coef * a) % cp
        j = 0
        while j < ncols and not r[j]:
            j += 1
        if j == ncols:
            continue
        inv = <long long> pow(<object> r[j], p - 2, p)
        for i in range(ncols):
            a = <long long> r[i]
            if a:
                r[i] = (a * inv) % cp
        for idx in range(len(piv_cols)):
            pr = piv_rows[idx]
            coef = <long long> pr[j]
            if coef:
                for i in range(ncols):
                    a = <long long> r[i]
                    if a:
                        pr[i] = ((<long long> pr[i]) - coef * a) % cp
        pos = 0
        n = len(piv_cols)
        while pos < n and <Py_ssize_t> piv_cols[pos] < j:
            pos += 1
        piv_cols.insert(pos, j)
        piv_rows.insert(pos, r)
    return list(piv_cols), piv_rows


def _rref_prime_obj(rows, p):
    # big-prime fallback on Python ints
    piv_cols = []
    piv_rows = []
    for row in rows:
        r = [a % p for a in row]
        for idx in range(len(piv_cols)):
            c = piv_cols[idx]
            coef = r[c]
            if coef:
                pr = piv_rows[idx]
                r = [(a - coef * b) % p for a, b in zip(r, pr)]
        j = 0
        n = len(r)
        while j < n and r[j] == 0:
            j += 1
        if j == n:
            continue
        inv = pow(r[j], p - 2, p)
        r = [(a * inv) % p for a in r]
        for idx in range(len(piv_cols)):
            pr = piv_rows[idx]
            coef = pr[j]
            if coef:
                piv_rows[idx] = [(a - coef * b) % p for a, b in zip(pr, r)]
        pos = 0
        while pos < len(piv_cols) and piv_cols[pos] < j:
            pos += 1
        piv_cols.insert(pos, j)
        piv_rows.insert(pos, r)
    return piv_cols, piv_rows
