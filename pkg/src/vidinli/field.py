"""Exact ground fields: the rationals and prime fields GF(p).

Scalars are plain Python values: ``Fraction`` over Q and ``int`` in
``[0, p)`` over GF(p).  The :class:`Field` descriptor normalizes values after
ring operations (``F(a * b - c)``) and supplies division.
"""
from __future__ import annotations

from random import Random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import InputError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    kind: str  # "rational" | "prime"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise InputError("rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not _is_prime(self.p):
                raise InputError(f"GF(p) needs a prime modulus, got {self.p!r}")
        else:
            raise InputError(f"unknown field kind {self.kind!r}")

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rational" else self.p

    @property
    def is_finite(self) -> bool:
        return self.kind == "prime"

    @property
    def order(self) -> int | None:
        return self.p

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction, numeric string) into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.kind == "rational":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def norm(self, x):
        """Reduce the result of raw +, -, * on field values."""
        return x % self.p if self.p is not None else x

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return Fraction(1) / a
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.norm(a * self.inv(b))

    def neg(self, a):
        return self.norm(-a)

    def elements(self):
        if self.p is None:
            raise InputError("the rational field cannot be enumerated")
        return range(self.p)

    def sqrt(self, a):
        """A square root of ``a`` in the field, or None."""
        a = self(a)
        if self.p is None:
            if a < 0:
                return None
            n, d = isqrt(a.numerator), isqrt(a.denominator)
            if n * n == a.numerator and d * d == a.denominator:
                return Fraction(n, d)
            return None
        for r in range(self.p):
            if r * r % self.p == a:
                return r
        return None

    def is_square(self, a) -> bool:
        return self.sqrt(a) is not None

    def random(self, rng: Random, height: int = 3):
        if self.p is not None:
            return rng.randrange(self.p)
        den = rng.randint(1, height)
        return Fraction(rng.randint(-height * den, height * den), den)

    # -- serialization: "a/b" strings over Q, plain ints over GF(p)
    def dump(self, a):
        if self.p is not None:
            return int(a)
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def load(self, s):
        if self.p is not None and isinstance(s, str):
            return self(Fraction(s))
        if isinstance(s, float):
            raise InputError(f"floating-point scalar {s!r} not allowed; use an exact string")
        if isinstance(s, bool) or not isinstance(s, (int, str, Fraction)):
            raise InputError(f"bad scalar {s!r}")
        try:
            return self(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad scalar {s!r}: {exc}") from None

    def describe(self) -> dict:
        return {"kind": "rational"} if self.p is None else {"kind": "prime", "p": self.p}

    @classmethod
    def from_description(cls, d) -> "Field":
        if not isinstance(d, dict) or "kind" not in d:
            raise InputError(f"field must be an object with a 'kind', got {d!r}")
        if d["kind"] == "rational":
            return QQ
        if d["kind"] == "prime":
            return GF(d.get("p"))
        raise InputError(f"unknown field kind {d['kind']!r}")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """``Q``/``QQ``/``rational`` or ``GF(p)``/``p``."""
        t = text.strip()
        if t.lower() in ("q", "qq", "rational"):
            return QQ
        if t.upper().startswith("GF(") and t.endswith(")"):
            t = t[3:-1]
        try:
            return GF(int(t))
        except ValueError:
            raise InputError(f"cannot parse field {text!r}") from None

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field("rational")


def GF(p: int) -> Field:
    return Field("prime", p)
