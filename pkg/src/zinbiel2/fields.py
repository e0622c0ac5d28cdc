"""Exact scalar arithmetic over Q and GF(p).

Rational scalars are `fractions.Fraction` (always reduced); GF(p) scalars are
plain ints in canonical residue form 0..p-1.  All operations go through a
field object so the rest of the library is field-generic.

GF(2) and GF(3) are refused unless explicitly overridden, and fields built
with the override mark every downstream report as non-conforming.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """The field Q with Fraction scalars."""

    name = "q"
    char = 0
    conforming = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def of_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("cannot invert 0 in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("cannot divide by 0 in Q")
        return Fraction(a) / b

    def parse(self, s):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational scalar: {s!r}") from exc

    def fmt(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """GF(p) with int scalars in 0..p-1."""

    def __init__(self, p: int, allow_small_char: bool = False):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p in (2, 3) and not allow_small_char:
            raise ValueError(
                f"GF({p}) has characteristic {p}; pass allow_small_char=True to "
                "proceed (reports will be marked non-conforming-characteristic)"
            )
        self.p = p
        self.name = f"gf{p}"
        self.char = p
        self.conforming = p not in (2, 3)

    def zero(self):
        return 0

    def one(self):
        return 1

    def of_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise DivisionByZero(f"cannot invert 0 in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        return range(self.p)

    def parse(self, s):
        try:
            n = int(s)
        except ValueError as exc:
            raise ValueError(f"not a GF({self.p}) scalar: {s!r}") from exc
        return n % self.p

    def fmt(self, a):
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def field_from_name(name: str, allow_small_char: bool = False):
    """Parse "q" or "gf<p>" into a field object."""
    name = name.strip().lower()
    if name == "q":
        return Rationals()
    if name.startswith("gf"):
        try:
            p = int(name[2:])
        except ValueError as exc:
            raise ValueError(f"bad field name {name!r}; expected q or gf<p>") from exc
        return PrimeField(p, allow_small_char=allow_small_char)
    raise ValueError(f"bad field name {name!r}; expected q or gf<p>")
