"""Exact scalar arithmetic over the rationals and over prime fields F_p.

Scalars are plain Python values: `fractions.Fraction` over the rationals and
`int` residues in [0, p) over F_p.  The field object carries the descriptor
and all arithmetic; no per-scalar wrapper is used.  Canonical forms are
unique: fractions are reduced with positive denominator, residues lie in
[0, p).  Characteristics 2 and 3 are rejected, since the alternative laws
in those characteristics degenerate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadPrime, FieldMismatch

# A scalar is a Fraction (over Q) or an int residue (over F_p).
Scalar = Fraction | int

_SCALAR_RE = re.compile(r"^-?\d+(/-?\d+)?$")


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


@dataclass(frozen=True)
class Rationals:
    """The field Q; elements are Fraction values."""

    char = 0

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

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
        return self.mul(a, self.inv(b))

    def parse(self, text: str) -> Fraction:
        if not _SCALAR_RE.match(text):
            raise ValueError(f"not a rational literal: {text!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator: {text!r}") from None

    def format(self, value) -> str:
        return str(Fraction(value))

    def canonical(self, value) -> Fraction:
        return Fraction(value)

    def check_element(self, value) -> None:
        if not isinstance(value, (Fraction, int)):
            raise FieldMismatch(f"{value!r} is not a rational scalar")

    def sample(self, rng, span: int = 3) -> Fraction:
        num = rng.randrange(-span, span + 1)
        den = rng.randrange(1, span + 1)
        return Fraction(num, den)

    def __str__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for an odd prime p; elements are ints in [0, p).

    Characteristic 2 is rejected outright.  Characteristic 3 is allowed
    here so small exhaustive runs stay cheap; the document layer still
    refuses p in {2, 3}, where the characteristic hypothesis is enforced.
    """

    p: int

    def __post_init__(self):
        if self.p == 2:
            raise BadPrime(self.p, "characteristic 2 is not supported")
        if not _is_prime(self.p):
            raise BadPrime(self.p, "not prime")

    char = property(lambda self: self.p)

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, text: str) -> int:
        if not _SCALAR_RE.match(text):
            raise ValueError(f"not a scalar literal: {text!r}")
        if "/" in text:
            num, den = text.split("/")
            return self.div(int(num) % self.p, int(den) % self.p)
        return int(text) % self.p

    def format(self, value) -> str:
        return str(value % self.p)

    def canonical(self, value) -> int:
        return value % self.p

    def check_element(self, value) -> None:
        if not isinstance(value, int) or isinstance(value, bool):
            raise FieldMismatch(f"{value!r} is not an F_{self.p} residue")

    def elements(self):
        return range(self.p)

    def units(self):
        return range(1, self.p)

    def sample(self, rng) -> int:
        return rng.randrange(self.p)

    def __str__(self) -> str:
        return f"F{self.p}"


QQ = Rationals()

Field = Rationals | PrimeField


def same_field(a, b) -> None:
    """Raise FieldMismatch unless the two field descriptors are equal."""
    if a != b:
        raise FieldMismatch(f"{a} vs {b}")
