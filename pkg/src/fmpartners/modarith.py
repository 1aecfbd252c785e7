"""Factorization and square roots of unity modulo n."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator

import numpy as np

MAX_FACTOR_INPUT = 2**63
BRUTEFORCE_LIMIT = 10**7

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % q for q in range(2, math.isqrt(p) + 1))]
# deterministic for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((p1, e1), (p2, e2), ...)`` with p1 < p2 < ..."""

    factors: tuple[tuple[int, int], ...] = ()

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    def odd_part(self) -> "Factorization":
        return Factorization(tuple((p, e) for p, e in self.factors if p != 2))


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; exact for every n below 2**64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:13]:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    f = _pollard_brent(n, rng)
    _split(f, out, rng)
    _split(n // f, out, rng)


def factorize(n: int) -> Factorization:
    """Exact prime factorization of ``1 <= n < 2**63``.

    Small primes are stripped by trial division, the cofactor is split with
    Pollard-Brent rho and certified with deterministic Miller-Rabin.
    """
    n = int(n)
    if not 1 <= n < MAX_FACTOR_INPUT:
        raise ValueError(f"factorize needs 1 <= n < 2**63, got {n}")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        # fixed seed keeps results and timings reproducible
        _split(n, out, random.Random(n))
    return Factorization(tuple(sorted(out.items())))


def _prime_power_roots(p: int, e: int) -> int:
    if p != 2:
        return 2
    return {1: 1, 2: 2}.get(e, 4)


def unit_square_root_count(n: int) -> int:
    """Number of residues x mod n with x**2 == 1 (mod n).

    Product over the prime powers of n: an odd p**e gives 2, 2 gives 1,
    4 gives 2 and 2**a with a >= 3 gives 4. ``n = 1`` counts the single
    residue 0.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    return math.prod(_prime_power_roots(p, e) for p, e in factorize(n))


def unit_square_roots_bruteforce(n: int) -> list[int]:
    """All ``0 <= x < n`` with ``x*x % n == 1 % n`` by a linear scan."""
    if not 1 <= n <= BRUTEFORCE_LIMIT:
        raise ValueError(f"linear scan limited to 1 <= n <= {BRUTEFORCE_LIMIT}, got {n}")
    x = np.arange(n, dtype=np.int64)
    return np.flatnonzero((x * x) % n == 1 % n).tolist()


def count_sqrt1_halfrange(n: int) -> int:
    """Count ``0 <= b < 2n`` with ``b**2 == 1 (mod 4n)``, by direct scan."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if 2 * n > BRUTEFORCE_LIMIT:
        return sum(1 for b in range(2 * n) if (b * b - 1) % (4 * n) == 0)
    b = np.arange(2 * n, dtype=np.int64)
    return int(np.count_nonzero((b * b) % (4 * n) == 1 % (4 * n)))


def closed_form_count_2d(d: int) -> int:
    """``|(Z_2d^x)_2|`` from the three shapes of an even ``d >= 4``.

    d = 2**(a+1)                     -> 4
    d = 2 * p1**e1 ... pk**ek        -> 2**(k+1)
    d = 2**(a+1) * p1**e1 ... pk**ek -> 2**(k+2)
    with a, k >= 1 and odd primes p_i.
    """
    if d % 2 or d < 4:
        raise ValueError(f"closed form covers even d >= 4, got {d}")
    f = factorize(d)
    a_plus_1 = f.exponent(2)
    k = len(f.odd_part())
    if k == 0:
        return 4
    if a_plus_1 == 1:
        return 2 ** (k + 1)
    return 2 ** (k + 2)
