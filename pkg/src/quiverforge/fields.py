"""Exact coefficient fields: the rationals and prime fields GF(p).

Every coefficient in the package is a :class:`Scalar`, an exact element of
either Q (arbitrary-precision rationals) or GF(p) for a prime p.  Arithmetic
between scalars of different fields is rejected.
"""
from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(ValueError):
    """Raised when scalars of two different fields are combined."""


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


class Field:
    """Base class for exact fields.  Instances are stateless and hashable."""

    name: str
    characteristic: int

    def __call__(self, value) -> "Scalar":
        raise NotImplementedError

    @property
    def zero(self) -> "Scalar":
        return self(0)

    @property
    def one(self) -> "Scalar":
        return self(1)

    def parse(self, text: str) -> "Scalar":
        return self(text)

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"
    characteristic = 0

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatchError(f"cannot coerce {value.field} scalar into Q")
            return value
        return Scalar(self, Fraction(value))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    characteristic: int

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"GF({p}): modulus must be a prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"cannot coerce {value.field} scalar into {self.name}")
            return value
        if isinstance(value, str):
            frac = Fraction(value)
            num = frac.numerator % self.p
            den = frac.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"{value} has no meaning in {self.name}")
            return Scalar(self, num * pow(den, -1, self.p) % self.p)
        if isinstance(value, Fraction):
            return self(str(value))
        return Scalar(self, int(value) % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()

_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


def field_from_name(name: str) -> Field:
    """Parse "Q" or "GF(p)" (also accepts the CLI spelling "GF:p")."""
    name = name.strip()
    if name == "Q":
        return QQ
    for prefix, suffix in (("GF(", ")"), ("GF:", "")):
        if name.startswith(prefix) and name.endswith(suffix):
            body = name[len(prefix):len(name) - len(suffix) if suffix else len(name)]
            return GF(int(body))
    raise ValueError(f"unknown field name {name!r}")


class Scalar:
    """An exact field element.  Immutable and hashable."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    def _check(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            return self.field(other)
        if other.field != self.field:
            raise FieldMismatchError(
                f"mixed-field arithmetic: {self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, (self.value + other.value) % self.field.p)
        return Scalar(self.field, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, (-self.value) % self.field.p)
        return Scalar(self.field, -self.value)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + self._check(other)

    def __mul__(self, other):
        other = self._check(other)
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, (self.value * other.value) % self.field.p)
        return Scalar(self.field, self.value * other.value)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, pow(self.value, -1, self.field.p))
        return Scalar(self.field, 1 / self.value)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = self.field(other)
            except (ValueError, TypeError):
                return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value}[{self.field.name}]"
