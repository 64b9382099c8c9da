"""Pure-Python row-reduction kernels.

Same contract as the compiled twin (_kernel_c): rref_rational / rref_prime
return the canonical reduced row echelon form (pivot entries 1, pivot
columns cleared, rows ordered by pivot column, zero rows dropped).  The
RREF of a matrix depends only on its row space, so the output is
deterministic regardless of input row order.

The rational path works fraction-free on primitive integer rows and only
divides once per row at the end; entries may be ints or Fractions on the
way in, Fractions on the way out.
"""

from fractions import Fraction
from math import gcd

BACKEND = "python"


def _primitive_int_row(row):
    """Scale a row of ints/Fractions to coprime ints; None if the row is zero."""
    denom = 1
    for a in row:
        if isinstance(a, Fraction):
            d = a.denominator
            denom = denom // gcd(denom, d) * d
    ints = [int(a * denom) if isinstance(a, Fraction) else a * denom for a in row]
    g = 0
    for a in ints:
        if a:
            g = gcd(g, a if a > 0 else -a)
    if g == 0:
        return None
    if g > 1:
        ints = [a // g for a in ints]
    return ints


def _make_primitive(ints):
    g = 0
    for a in ints:
        if a:
            g = gcd(g, a if a > 0 else -a)
    if g == 0:
        return None
    if g > 1:
        return [a // g for a in ints]
    return list(ints)


def rref_rational(rows):
    """Canonical RREF over the rationals.  Returns (pivot_cols, rref_rows)."""
    if not rows:
        return [], []
    ncols = len(rows[0])
    piv_cols = []  # ascending
    piv_rows = []  # primitive int rows, positive leading entry
    for row in rows:
        r = _primitive_int_row(row)
        if r is None:
            continue
        # eliminate the entries of r at existing pivot columns
        for idx in range(len(piv_cols)):
            c = piv_cols[idx]
            coef = r[c]
            if coef:
                pr = piv_rows[idx]
                lead = pr[c]
                r = [a * lead - b * coef for a, b in zip(r, pr)]
        r = _make_primitive(r)
        if r is None:
            continue
        j = 0
        while r[j] == 0:
            j += 1
        if r[j] < 0:
            r = [-a for a in r]
        # clear column j in the existing pivot rows
        lead = r[j]
        for idx in range(len(piv_cols)):
            pr = piv_rows[idx]
            coef = pr[j]
            if coef:
                pr = [a * lead - b * coef for a, b in zip(pr, r)]
                piv_rows[idx] = _make_primitive(pr)
        pos = 0
        while pos < len(piv_cols) and piv_cols[pos] < j:
            pos += 1
        piv_cols.insert(pos, j)
        piv_rows.insert(pos, r)
    out = []
    for c, pr in zip(piv_cols, piv_rows):
        lead = pr[c]
        out.append([Fraction(a, lead) for a in pr])
    return piv_cols, out


def rref_prime(rows, p):
    """Canonical RREF over GF(p).  Returns (pivot_cols, rref_rows)."""
    if not rows:
        return [], []
    piv_cols = []
    piv_rows = []  # rows with pivot entry 1
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
