"""Permutation statistics and the left-decreasing factorization code.

Permutations are tuples in one-line notation over ``1..n``.  Composition is
``(s * t)(i) = s(t(i))``; with this convention the left-decreasing code
below multiplies new cycles on the left, which is the order that makes its
weight bookkeeping work (the exhaustive checks pin this down).
"""

from __future__ import annotations

from itertools import permutations as _permutations

from .errors import CapExceededError
from .polys import LaurentPoly2

DISTRIBUTION_CAP = 9


def check_permutation(sigma) -> tuple[int, ...]:
    p = tuple(sigma)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..n: {p}")
    return p


def des_set(sigma) -> frozenset[int]:
    """Descent positions: i in 1..n-1 with sigma(i) > sigma(i+1)."""
    return frozenset(i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i])


def des(sigma) -> int:
    return len(des_set(sigma))


def maj(sigma) -> int:
    """Major index: sum of the descent positions."""
    return sum(des_set(sigma))


def inv(sigma) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def siz(sigma) -> int:
    """Quadratic descent statistic ``sum_{i in DES} (n+1-i)*i - inv``."""
    n = len(sigma)
    return sum((n + 1 - i) * i for i in des_set(sigma)) - inv(sigma)


def sqin(sigma) -> int:
    """Companion statistic ``inv + sum_{i in DES} i^2``."""
    return inv(sigma) + sum(i * i for i in des_set(sigma))


def compose(s, t) -> tuple[int, ...]:
    """``(s * t)(i) = s(t(i))``."""
    return tuple(s[t[i] - 1] for i in range(len(t)))


def decreasing_cycle(k: int, n: int) -> tuple[int, ...]:
    """The cycle (k, k-1, ..., 1) as an element of S_n: 1 -> k, j -> j-1."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return (k, *range(1, k), *range(k + 1, n + 1))


def check_valid_sequence(code) -> tuple[int, ...]:
    """A valid sequence has entries ``0 <= code[i-1] < i`` (so the first is 0)."""
    c = tuple(code)
    for i, v in enumerate(c, start=1):
        if not 0 <= v < i:
            raise ValueError(f"entry {v} at index {i} out of range [0, {i})")
    return c


def valid_sequences(n: int):
    """All n! valid sequences of length n, lexicographically."""

    def extend(prefix):
        i = len(prefix) + 1
        if i > n:
            yield prefix
            return
        for v in range(i):
            yield from extend(prefix + (v,))

    yield from extend(())


def ld_decode(code) -> tuple[int, ...]:
    """Left-decreasing factorization: code -> product of decreasing-cycle powers."""
    c = check_valid_sequence(code)
    n = len(c)
    sigma = tuple(range(1, n + 1))
    for k in range(2, n + 1):
        cyc = decreasing_cycle(k, n)
        for _ in range(c[k - 1]):
            sigma = compose(cyc, sigma)
    return sigma


def ld_encode(sigma) -> tuple[int, ...]:
    """Inverse of :func:`ld_decode`: peel cycle powers off the left."""
    sigma = check_permutation(sigma)
    n = len(sigma)
    code = [0] * n
    for k in range(n, 1, -1):
        a_k = k - sigma[k - 1]
        code[k - 1] = a_k
        # strip the factor by applying C_k^{-a_k} = C_k^{k - a_k} on the left
        cyc = decreasing_cycle(k, n)
        for _ in range((k - a_k) % k):
            sigma = compose(cyc, sigma)
    if sigma != tuple(range(1, n + 1)):
        raise AssertionError("factorization code did not reduce to the identity")
    return tuple(code)


def check_ld_weights(n: int) -> bool:
    """Exhaustively check maj(LD(a)) = sum a_i and siz(LD(a)) = sum (n+1-i) a_i."""
    for code in valid_sequences(n):
        sigma = ld_decode(code)
        if maj(sigma) != sum(code):
            return False
        if siz(sigma) != sum((n + 1 - i) * v for i, v in enumerate(code, start=1)):
            return False
    return True


def distribution(n: int, cap: int = DISTRIBUTION_CAP) -> LaurentPoly2:
    """Joint distribution ``sum q^siz t^maj`` over S_n, by brute force."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the brute-force cap of {cap}")
    out: dict[tuple[int, int], int] = {}
    for sigma in _permutations(range(1, n + 1)):
        key = (siz(sigma), maj(sigma))
        out[key] = out.get(key, 0) + 1
    return LaurentPoly2(out)


def _q_int2(k: int, qexp: int, texp: int) -> LaurentPoly2:
    """``[k]_x`` with ``x = q^qexp t^texp``."""
    return LaurentPoly2({(qexp * j, texp * j): 1 for j in range(k)})


def sizmaj_product(n: int) -> LaurentPoly2:
    """``prod_{k=1..n} [k]_{q^(n+1-k) t}``."""
    out = LaurentPoly2.one()
    for k in range(1, n + 1):
        out = out * _q_int2(k, n + 1 - k, 1)
    return out


def check_sizmaj2(n: int, cap: int = DISTRIBUTION_CAP) -> bool:
    """Brute-force distribution against the product formula."""
    return distribution(n, cap) == sizmaj_product(n)


def check_sqin_relation(n: int, cap: int = DISTRIBUTION_CAP) -> bool:
    """The sqin/maj product formula, and its substitution into the siz/maj one.

    ``sum q^sqin t^maj = prod [k]_{t q^k}``, and replacing ``q -> 1/q``,
    ``t -> t q^(n+1)`` turns it into the siz/maj identity (monomials map by
    ``(e, f) -> ((n+1) f - e, f)``).
    """
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the brute-force cap of {cap}")
    brute: dict[tuple[int, int], int] = {}
    for sigma in _permutations(range(1, n + 1)):
        key = (sqin(sigma), maj(sigma))
        brute[key] = brute.get(key, 0) + 1
    sqin_poly = LaurentPoly2(brute)
    prod = LaurentPoly2.one()
    for k in range(1, n + 1):
        prod = prod * _q_int2(k, k, 1)
    if sqin_poly != prod:
        return False
    substituted = sqin_poly.map_exponents(lambda e, f: ((n + 1) * f - e, f))
    return substituted == distribution(n, cap)
