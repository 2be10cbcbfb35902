"""The simplex of simultaneous (a,b)-cores inside the charge lattice.

For coprime ``a`` and ``b`` the b-cores among a-cores are the lattice
points satisfying ``c_{i+b} - c_i <= (b+i) div a`` (cyclic indices), a
rational simplex.  The change of variables

    ``z_i = x_{ib+k} - x_{(i+1)b+k} + b/a``,   ``2k = -(b+1) (mod a)``

identifies it with the nonnegative integer vectors summing to ``b`` whose
weighted sum ``sum i*z_i`` vanishes mod ``a`` (b-dimensional cyclic-group
representations with trivial determinant).  Enumeration walks that standard
simplex and maps back, which keeps the loops trivially bounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from . import partitions
from .abacus import ChargeVector, ShiftedPoint, core_from_charges, shift, size_quadratic, unshift
from .errors import CapExceededError

DEFAULT_CAP = 10_000_000


@dataclass(frozen=True)
class SimplexSpec:
    """Parameters (a, b) of a core simplex; a >= 2, b >= 1, gcd(a, b) = 1."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 2:
            raise ValueError("a must be >= 2")
        if self.b < 1:
            raise ValueError("b must be >= 1")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"a={self.a} and b={self.b} must be coprime")


@dataclass(frozen=True)
class RepVector:
    """Multiplicities of a trivial-determinant representation: z >= 0, sum i*z_i = 0 mod a."""

    z: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "z", tuple(int(v) for v in self.z))
        a = len(self.z)
        if a < 2:
            raise ValueError("need at least two coordinates")
        if any(v < 0 for v in self.z):
            raise ValueError(f"multiplicities must be nonnegative, got {self.z}")
        if sum(i * v for i, v in enumerate(self.z)) % a:
            raise ValueError(f"determinant condition fails for {self.z}")

    @property
    def a(self) -> int:
        return len(self.z)

    @property
    def b(self) -> int:
        return sum(self.z)


def rational_catalan(a: int, b: int) -> int:
    """``binom(a+b, a) / (a+b)`` (an integer for coprime a, b)."""
    if gcd(a, b) != 1:
        raise ValueError(f"a={a} and b={b} must be coprime")
    n = comb(a + b, a)
    if n % (a + b):
        raise AssertionError("the rational Catalan number must be integral")
    return n // (a + b)


def contains(spec: SimplexSpec, cv: ChargeVector) -> bool:
    """Membership test via the cyclic charge inequalities."""
    a, b = spec.a, spec.b
    if cv.a != a:
        raise ValueError("charge vector has a different modulus")
    c = cv.c
    return all(c[(i + b) % a] - c[i] <= (b + i) // a for i in range(a))


def _z_offset(a: int, b: int) -> int:
    """The index shift k with 2k = -(b+1) mod a."""
    if (b + 1) % 2 == 0:
        return (-(b + 1) // 2) % a
    return (-(b + 1) * pow(2, -1, a)) % a


def to_z(spec: SimplexSpec, sp: ShiftedPoint) -> RepVector:
    """Representation coordinates of a point of the core simplex.

    Raises ``ValueError`` when the point is off the charge lattice or
    outside the simplex.
    """
    a, b = spec.a, spec.b
    k = _z_offset(a, b)
    tx = sp.tx
    z = []
    for i in range(a):
        num = tx[(i * b + k) % a] - tx[((i + 1) * b + k) % a] + 2 * b
        if num % (2 * a):
            raise ValueError("point does not lie on the charge lattice")
        v = num // (2 * a)
        if v < 0:
            raise ValueError("point lies outside the core simplex")
        z.append(v)
    return RepVector(tuple(z))


def from_z(spec: SimplexSpec, rv: RepVector) -> ShiftedPoint:
    """Inverse of :func:`to_z`."""
    a, b = spec.a, spec.b
    if rv.a != a or rv.b != b:
        raise ValueError("representation vector does not match the simplex")
    k = _z_offset(a, b)
    # walk tx along the index cycle k, k+b, k+2b, ...
    offsets = [0]
    for zi in rv.z[:-1]:
        offsets.append(offsets[-1] + 2 * b - 2 * a * zi)
    total = sum(offsets)
    if total % a:
        raise ValueError("representation vector is not on the trivial-determinant lattice")
    t0 = -total // a
    tx = [0] * a
    for j, off in enumerate(offsets):
        tx[(j * b + k) % a] = t0 + off
    return ShiftedPoint(a, tuple(tx))


def _compositions_lex(total: int, parts: int):
    """Nonnegative integer compositions, in lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions_lex(total - head, parts - 1):
            yield (head, *rest)


def enumerate_cores(spec: SimplexSpec, cap: int = DEFAULT_CAP) -> list[ChargeVector]:
    """All (a,b)-cores as charge vectors, ordered lexicographically by z.

    Raises :class:`CapExceededError` when the count exceeds ``cap``.
    """
    a, b = spec.a, spec.b
    count = rational_catalan(a, b)
    if count > cap:
        raise CapExceededError(f"Cat({a},{b}) = {count} exceeds the cap of {cap}")
    out = []
    for z in _compositions_lex(b, a):
        if sum(i * v for i, v in enumerate(z)) % a:
            continue
        out.append(unshift(from_z(spec, RepVector(z))))
    if len(out) != count:
        raise AssertionError("enumeration disagrees with the closed-form count")
    return out


def conjugation_T(cv: ChargeVector) -> ChargeVector:
    """Charge-lattice conjugation ``T(c)_i = -c_{-1-i}`` (transposes the core)."""
    a = cv.a
    return ChargeVector(a, tuple(-cv.c[(-1 - i) % a] for i in range(a)))


def enumerate_self_conjugate(spec: SimplexSpec, cap: int = DEFAULT_CAP) -> list[ChargeVector]:
    """The T-fixed subset of :func:`enumerate_cores`."""
    return [cv for cv in enumerate_cores(spec, cap) if conjugation_T(cv) == cv]


def self_conjugate_count(a: int, b: int) -> int:
    """Closed form ``binom(floor(a/2) + floor(b/2), floor(a/2))``."""
    return comb(a // 2 + b // 2, a // 2)


def armstrong_average(a: int, b: int) -> Fraction:
    """Closed form ``(a+b+1)(a-1)(b-1)/24`` for the average core size."""
    return Fraction((a + b + 1) * (a - 1) * (b - 1), 24)


def total_size(spec: SimplexSpec, cap: int = DEFAULT_CAP) -> int:
    return sum(size_quadratic(cv) for cv in enumerate_cores(spec, cap))


def average_size(spec: SimplexSpec, cap: int = DEFAULT_CAP) -> Fraction:
    return Fraction(total_size(spec, cap), rational_catalan(spec.a, spec.b))


def self_conjugate_total_size(spec: SimplexSpec, cap: int = DEFAULT_CAP) -> int:
    return sum(size_quadratic(cv) for cv in enumerate_self_conjugate(spec, cap))


def self_conjugate_average_size(spec: SimplexSpec, cap: int = DEFAULT_CAP) -> Fraction:
    return Fraction(self_conjugate_total_size(spec, cap), self_conjugate_count(spec.a, spec.b))


def core_record(spec: SimplexSpec, cv: ChargeVector) -> dict:
    """The per-core record exposed by the CLI (exact, JSON-serializable)."""
    p = core_from_charges(cv)
    sl = partitions.skew_length(p, spec.a, spec.b)
    return {
        "charges": list(cv.c),
        "z": list(to_z(spec, shift(cv)).z),
        "partition": list(p),
        "size": size_quadratic(cv),
        "length": len(p),
        "skew_length": sl,
        "co_skew_length": (spec.a - 1) * (spec.b - 1) // 2 - sl,
    }
