"""Exact ground fields: arbitrary-precision rationals and prime fields.

Elements are plain Python objects (Fraction for the rationals, ints in
[0, p) for a prime field); a Field object supplies the arithmetic.  Nothing
in the package ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    """Bad field specification or unparsable scalar."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """The field of rational numbers; elements are fractions.Fraction."""

    kind = "rational"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, s):
        """Accept an int, or a string "a" / "a/b"."""
        if isinstance(s, bool):
            raise FieldError(f"not a scalar: {s!r}")
        if isinstance(s, int):
            return Fraction(s)
        if isinstance(s, str):
            try:
                return Fraction(s.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise FieldError(f"not a rational scalar: {s!r}") from e
        raise FieldError(f"not a scalar: {s!r}")

    def serialize(self, a):
        if a.denominator == 1:
            return int(a)
        return f"{a.numerator}/{a.denominator}"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers modulo a prime p; elements are ints in [0, p)."""

    kind = "prime"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"modulus {p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def from_int(self, n: int):
        return n % self.p

    def parse(self, s):
        if isinstance(s, bool):
            raise FieldError(f"not a scalar: {s!r}")
        if isinstance(s, int):
            return s % self.p
        if isinstance(s, str):
            try:
                q = Fraction(s.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise FieldError(f"not a scalar: {s!r}") from e
            if q.denominator % self.p == 0:
                raise FieldError(f"denominator of {s!r} vanishes mod {self.p}")
            return self.div(q.numerator % self.p, q.denominator % self.p)
        raise FieldError(f"not a scalar: {s!r}")

    def serialize(self, a):
        return a % self.p

    def primitive_root_of_unity(self, n: int):
        """A primitive n-th root of unity, requiring p = 1 (mod n)."""
        if (self.p - 1) % n != 0:
            raise FieldError(f"no primitive {n}-th root of unity mod {self.p}")
        for g in range(2, self.p):
            q = pow(g, (self.p - 1) // n, self.p)
            if all(pow(q, k, self.p) != 1 for k in range(1, n)):
                return q
        raise FieldError(f"no primitive {n}-th root of unity mod {self.p}")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def field_from_spec(spec) -> Rationals | PrimeField:
    """Field from the JSON instance-file spec: {"rational": true} or {"prime": p}."""
    if not isinstance(spec, dict):
        raise FieldError(f"bad field spec: {spec!r}")
    if spec.get("rational") is True and "prime" not in spec:
        return QQ
    if "prime" in spec and "rational" not in spec:
        p = spec["prime"]
        if not isinstance(p, int) or isinstance(p, bool):
            raise FieldError(f"bad prime: {p!r}")
        return PrimeField(p)
    raise FieldError(f"bad field spec: {spec!r}")


def field_to_spec(field) -> dict:
    if field.kind == "rational":
        return {"rational": True}
    return {"prime": field.p}
