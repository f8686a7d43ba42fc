"""Exact scalar fields.

Scalars are plain Python numbers so that the inner loops of matrix
arithmetic stay on native ``int`` operations:

* over the rationals a scalar is an ``int`` or a ``fractions.Fraction``
  (integral fractions are collapsed back to ``int``);
* over ``F_p`` a scalar is an ``int`` in ``range(p)``.

Addition and multiplication are the native operators; results are brought
back to canonical form with :meth:`Field.normalize`.  Division always goes
through :meth:`Field.div`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

_INT_RE = re.compile(r"^[+-]?\d+$")
_FRAC_RE = re.compile(r"^([+-]?\d+)/(\d+)$")


class Field:
    """Interface shared by the built-in fields."""

    name: str = "abstract"
    characteristic: int = 0
    zero = 0
    one = 1

    def normalize(self, x):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def inv(self, a):
        return self.div(1, a)

    def neg(self, a):
        return self.normalize(-a)

    def __repr__(self):
        return f"<field {self.name}>"

    # fields are singletons per name, equality by name keeps pickling sane
    def __eq__(self, other):
        return isinstance(other, Field) and other.name == self.name

    def __hash__(self):
        return hash(self.name)


class RationalField(Field):
    name = "rational"
    characteristic = 0

    def normalize(self, x):
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return x.numerator
            return x
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"not an exact rational: {x!r}")

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in the rationals")
        return self.normalize(Fraction(a) / Fraction(b))

    def parse(self, text):
        text = str(text).strip()
        if _INT_RE.match(text):
            return int(text)
        match = _FRAC_RE.match(text)
        if not match:
            raise ValueError(f"malformed rational scalar {text!r}")
        den = int(match.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return self.normalize(Fraction(int(match.group(1)), den))

    def format(self, x):
        x = self.normalize(x)
        if isinstance(x, Fraction):
            return f"{x.numerator}/{x.denominator}"
        return str(x)


class PrimeField(Field):
    """``F_p`` for a prime ``p``; scalars are ints in ``range(p)``."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"prime:{p}"

    def normalize(self, x):
        if isinstance(x, Fraction):
            return self.div(x.numerator, x.denominator)
        if isinstance(x, str):
            return self.parse(x)
        return int(x) % self.p

    def div(self, a, b):
        b = int(b) % self.p
        if b == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return (int(a) * pow(b, -1, self.p)) % self.p

    def parse(self, text):
        text = str(text).strip()
        if _INT_RE.match(text):
            return int(text) % self.p
        match = _FRAC_RE.match(text)
        if match:
            return self.div(int(match.group(1)), int(match.group(2)))
        raise ValueError(f"malformed F_{self.p} scalar {text!r}")

    def format(self, x):
        return str(self.normalize(x))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """Parse ``"rational"`` or ``"prime:p"``."""
    if spec == "rational":
        return QQ
    if spec.startswith("prime:"):
        try:
            p = int(spec.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad field spec {spec!r}") from None
        return GF(p)
    raise ValueError(f"unknown field spec {spec!r}")
