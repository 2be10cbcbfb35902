"""Integer partitions, hook lengths, Maya diagrams, and core statistics.

Partitions are plain tuples of weakly decreasing positive integers
(``(3, 2, 2, 1)``); the empty partition is ``()``.  Everything here is the
partition-level ground truth that the lattice machinery in the rest of the
package is checked against, so the implementations favor directness over
cleverness.

The Maya diagram of a partition is encoded through its set of filled
energy levels.  We index the level ``m + 1/2`` by the integer ``m``; for a
partition ``p`` of length ``L`` at charge ``c`` the filled levels are
``{p[i] - (i+1) - c}`` together with every ``m <= -L-1-c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Parts = tuple[int, ...]


def as_partition(parts) -> Parts:
    """Validate and normalize an iterable of parts to a partition tuple."""
    p = tuple(int(v) for v in parts)
    for i, v in enumerate(p):
        if v < 1:
            raise ValueError(f"parts must be positive, got {v}")
        if i and p[i - 1] < v:
            raise ValueError(f"parts must be weakly decreasing, got {p}")
    return p


def size(parts: Parts) -> int:
    """Number of cells of the Young diagram."""
    return sum(parts)


def length(parts: Parts) -> int:
    """Number of parts."""
    return len(parts)


def conjugate(parts: Parts) -> Parts:
    """Transpose of the Young diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    """
    if not parts:
        return ()
    cols = [0] * parts[0]
    for v in parts:
        for j in range(v):
            cols[j] += 1
    return tuple(cols)


@dataclass(frozen=True)
class Cell:
    """A box of a Young diagram with its arm, leg and hook statistics.

    ``row`` and ``col`` are 0-based; ``hook == arm + leg + 1``.  The arm
    counts cells to the right in the same row and the leg cells below in
    the same column (rows-of-boxes model; the arm/leg/hook multisets do not
    depend on how the diagram is drawn).
    """

    row: int
    col: int
    arm: int
    leg: int
    hook: int


def hook_lengths(parts: Parts) -> list[Cell]:
    """All cells of the diagram with hook statistics filled in."""
    conj = conjugate(parts)
    cells = []
    for r, v in enumerate(parts):
        for c in range(v):
            arm = v - c - 1
            leg = conj[c] - r - 1
            cells.append(Cell(r, c, arm, leg, arm + leg + 1))
    return cells


def hook_multiset(parts: Parts) -> tuple[int, ...]:
    """Sorted multiset of hook lengths."""
    return tuple(sorted(cell.hook for cell in hook_lengths(parts)))


def beta_set(parts: Parts) -> frozenset[int]:
    """Filled energy levels above the consecutive tail: ``{p[i] - (i+1)}``."""
    return frozenset(v - i for i, v in enumerate(parts, start=1))


def is_core(parts: Parts, a: int) -> bool:
    """True iff no cell has hook length exactly ``a``.

    A hook of length ``a`` exists iff some filled level ``m`` has ``m - a``
    empty, so it suffices to check ``m - a`` for the finitely many filled
    levels above the tail.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    n = len(parts)
    beta = beta_set(parts)
    return all(m - a in beta or m - a < -n for m in beta)


@dataclass(frozen=True)
class MayaState:
    """A finite-energy state: electrons above the sea, positron holes in it.

    Energies are positive half-integers stored as odd integers (twice the
    energy), so all arithmetic stays integral.
    """

    electrons: frozenset[int]
    positrons: frozenset[int]

    def __post_init__(self):
        for v in (*self.electrons, *self.positrons):
            if v < 1 or v % 2 == 0:
                raise ValueError(f"energies must be positive odd integers, got {v}")

    @property
    def charge(self) -> int:
        """Number of positrons minus number of electrons."""
        return len(self.positrons) - len(self.electrons)

    def energy(self) -> Fraction:
        """Total energy of all particles, in half-integer units."""
        return Fraction(sum(self.electrons) + sum(self.positrons), 2)


def to_maya(parts: Parts) -> MayaState:
    """Charge-0 state of a partition: read the boundary path off ``beta_set``."""
    n = len(parts)
    beta = [v - i for i, v in enumerate(parts, start=1)]
    electrons = frozenset(2 * m + 1 for m in beta if m >= 0)
    filled_neg = {m for m in beta if m < 0}
    positrons = frozenset(-2 * m - 1 for m in range(-1, -n - 1, -1) if m not in filled_neg)
    return MayaState(electrons, positrons)


def from_maya(state: MayaState) -> tuple[Parts, int]:
    """Partition and charge of a state (inverse of ``to_maya`` at charge 0).

    At charge ``c`` the filled levels are ``{p[i] - (i+1) - c}``, so the
    i-th largest filled level ``m_i`` gives part ``m_i + i + c``; the parts
    hit 0 exactly when the consecutive tail starts.
    """
    charge = state.charge
    holes = {-(o + 1) // 2 for o in state.positrons}
    filled = sorted(((o - 1) // 2 for o in state.electrons), reverse=True)
    floor = min(holes, default=0) - 1
    filled += [m for m in range(-1, floor - 1, -1) if m not in holes]
    parts = []
    for i, m in enumerate(filled, start=1):
        v = m + i + charge
        if v < 0:
            raise AssertionError("inconsistent state")
        if v == 0:
            break
        parts.append(v)
    else:
        raise AssertionError("state tail not reached")
    return tuple(parts), charge


def a_row_indices(parts: Parts, a: int) -> list[int]:
    """1-based rows of the a-parts: the longest row in each class of ``p[i]-i mod a``.

    In an a-core the longest row of a class is unique: ``a+1`` consecutive
    equal parts would force a hook of length ``a``.
    """
    best: dict[int, int] = {}
    for i, v in enumerate(parts, start=1):
        r = (v - i) % a
        if r not in best or v > parts[best[r] - 1]:
            best[r] = i
    return sorted(best.values())


def skew_length(parts: Parts, a: int, b: int) -> int:
    """Number of cells lying in an a-row and having hook length below ``b``.

    Defined for simultaneous (a,b)-cores with coprime a and b; raises
    ``ValueError`` otherwise.

    >>> skew_length((9, 7, 5, 3, 2, 2, 1, 1), 3, 11)
    9
    """
    if gcd(a, b) != 1:
        raise ValueError("a and b must be coprime")
    if not (is_core(parts, a) and is_core(parts, b)):
        raise ValueError("skew length is only defined for (a,b)-cores")
    n = len(parts)
    beta = beta_set(parts)
    total = 0
    for i in a_row_indices(parts, a):
        # cells of row i <-> empty levels below beta_i; hook = beta_i - level
        b_i = parts[i - 1] - i
        lo = max(b_i - b + 1, -n)
        total += sum(1 for f in range(lo, b_i) if f not in beta)
    return total


def co_skew_length(parts: Parts, a: int, b: int) -> int:
    """Complementary statistic ``(a-1)(b-1)/2 - skew_length``."""
    return (a - 1) * (b - 1) // 2 - skew_length(parts, a, b)


def partitions_of(n: int):
    """Yield all partitions of ``n`` as weakly decreasing tuples.

    Ascending-composition generator (accelAsc), reversed on output.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield ()
        return
    a = [0] * (n + 1)
    k = 1
    a[1] = n
    while k != 0:
        x = a[k - 1] + 1
        y = a[k] - 1
        k -= 1
        while x <= y:
            a[k] = x
            y -= x
            k += 1
        a[k] = x + y
        yield tuple(a[k::-1])


def brute_force_simultaneous_cores(a: int, b: int, max_size: int) -> list[Parts]:
    """All (a,b)-cores of size at most ``max_size``, by exhaustive search.

    Deliberately independent of the abacus machinery; this is the oracle the
    simplex enumeration is tested against.
    """
    found = []
    for n in range(max_size + 1):
        for p in partitions_of(n):
            if is_core(p, a) and is_core(p, b):
                found.append(p)
    return found
