"""The signed abacus: a-cores as points of the charge lattice.

An a-core corresponds to a runner assignment of the Maya diagram: the level
``m + 1/2`` sits on runner ``(-m - 1) mod a``, and the partition is an
a-core exactly when every runner is right-justified.  The charge ``c_i`` of
runner ``i`` determines the filled levels ``{k*a - i - 1 : k <= -c_i}`` (in
the integer encoding of :mod:`corelattice.partitions`), and the charges sum
to zero.

Two coordinate systems are used throughout:

* charge coordinates ``c`` (integers summing to 0);
* shifted coordinates ``x_i = c_i + i/a - (a-1)/(2a)``, stored exactly as
  the integers ``2a * x_i`` so that the simplex inequalities, the size
  formula, and the floor formulas for statistics all run in pure integer
  arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import Parts, beta_set, is_core


@dataclass(frozen=True)
class ChargeVector:
    """A point of the charge lattice: ``a`` runner charges summing to zero."""

    a: int
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(v) for v in self.c))
        if self.a < 2:
            raise ValueError("a must be >= 2")
        if len(self.c) != self.a:
            raise ValueError(f"expected {self.a} charges, got {len(self.c)}")
        if sum(self.c) != 0:
            raise ValueError(f"charges must sum to 0, got {self.c}")

    def to_json_dict(self) -> dict:
        return {"a": self.a, "c": list(self.c)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ChargeVector":
        return cls(int(data["a"]), tuple(int(v) for v in data["c"]))


def zero_charges(a: int) -> ChargeVector:
    """The origin of the lattice (the empty partition)."""
    return ChargeVector(a, (0,) * a)


@dataclass(frozen=True)
class ShiftedPoint:
    """A point in shifted coordinates, stored as the integers ``2a * x_i``.

    Only ``sum(x) == 0`` is enforced: besides charge-lattice points the
    statistics formulas are also evaluated on rotated-lattice points, whose
    coordinates carry other fractional parts.
    """

    a: int
    tx: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "tx", tuple(int(v) for v in self.tx))
        if self.a < 2:
            raise ValueError("a must be >= 2")
        if len(self.tx) != self.a:
            raise ValueError(f"expected {self.a} coordinates, got {len(self.tx)}")
        if sum(self.tx) != 0:
            raise ValueError("shifted coordinates must sum to 0")

    def x(self) -> tuple[Fraction, ...]:
        """The coordinates as exact rationals."""
        return tuple(Fraction(v, 2 * self.a) for v in self.tx)


def shift(cv: ChargeVector) -> ShiftedPoint:
    """Shifted coordinates ``x_i = c_i + i/a - (a-1)/(2a)`` of a charge vector."""
    a = cv.a
    return ShiftedPoint(a, tuple(2 * a * ci + 2 * i - (a - 1) for i, ci in enumerate(cv.c)))


def unshift(sp: ShiftedPoint) -> ChargeVector:
    """Inverse of :func:`shift`; raises if the point is off the charge lattice."""
    a = sp.a
    charges = []
    for i, t in enumerate(sp.tx):
        num = t - 2 * i + (a - 1)
        if num % (2 * a):
            raise ValueError("point does not lie on the shifted charge lattice")
        charges.append(num // (2 * a))
    return ChargeVector(a, tuple(charges))


def core_from_charges(cv: ChargeVector) -> Parts:
    """The a-core of a charge vector, by direct abacus simulation.

    Builds the right-justified filled levels down to the lowest empty level
    and reads the partition off the boundary path.
    """
    a, c = cv.a, cv.c
    lowest_empty = min(a * (1 - ci) - i - 1 for i, ci in enumerate(c))
    filled = []
    for i, ci in enumerate(c):
        m = -a * ci - i - 1
        while m >= lowest_empty:
            filled.append(m)
            m -= a
    filled.sort(reverse=True)
    if len(filled) + lowest_empty != 0:
        raise AssertionError("abacus bookkeeping is inconsistent")
    parts = []
    for k, m in enumerate(filled, start=1):
        v = m + k
        if v <= 0:
            break
        parts.append(v)
    return tuple(parts)


def charges_from_core(parts: Parts, a: int) -> ChargeVector:
    """Runner charges of an a-core; raises ``ValueError`` if not an a-core."""
    if a < 2:
        raise ValueError("a must be >= 2")
    if not is_core(parts, a):
        raise ValueError(f"partition {parts} is not a {a}-core")
    n = len(parts)
    highest: dict[int, int] = {}
    for m in beta_set(parts):
        r = (-m - 1) % a
        if r not in highest or m > highest[r]:
            highest[r] = m
    charges = []
    for i in range(a):
        if i in highest:
            m = highest[i]
        else:
            # highest level of the consecutive tail on runner i
            t = -n - 1
            m = t - ((t + i + 1) % a)
        num = -(m + i + 1)
        if num % a:
            raise AssertionError("runner residue bookkeeping is inconsistent")
        charges.append(num // a)
    return ChargeVector(a, tuple(charges))


def size_quadratic(cv: ChargeVector) -> int:
    """Size of the core as the quadratic form ``(a/2) sum c_i^2 + sum i*c_i``."""
    a, c = cv.a, cv.c
    num = a * sum(v * v for v in c) + 2 * sum(i * v for i, v in enumerate(c))
    if num % 2:
        raise AssertionError("quadratic form must be integral")
    return num // 2


def size_from_x(sp: ShiftedPoint) -> Fraction:
    """The same quadratic form in shifted coordinates: ``-(a^2-1)/24 + (a/2) sum x_i^2``."""
    a = sp.a
    return Fraction(-(a * a - 1), 24) + Fraction(sum(t * t for t in sp.tx), 8 * a)
