"""Exact integer arithmetic: Kronecker symbol, primality, factoring, prime sieves.

Everything here is deterministic.  Primality uses a Miller-Rabin witness set
that is provably correct below 2^64, and factoring is trial division plus
Brent's cycle variant of Pollard rho with a fixed parameter schedule.
"""

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

_FACTOR_LIMIT = 1 << 64
_SIEVE_SEGMENT = 1 << 26

# Jaeschke / Sorenson-Webster witnesses: deterministic for all n < 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2^64."""
    if n < 0 or n >= _FACTOR_LIMIT:
        raise ValueError(f"is_prime: n out of supported range [0, 2^64): {n}")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
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


def _pollard_rho(n: int) -> int:
    """Brent's rho; returns a nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
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
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ValueError(f"factorization failed for {n}")  # unreachable in 64-bit range


@dataclass(frozen=True)
class Factorization:
    """sign * prod(p^e) == value, primes strictly increasing."""

    value: int
    sign: int
    factors: tuple  # of (prime, exponent)

    def __post_init__(self):
        acc = self.sign
        for p, e in self.factors:
            acc *= p**e
        if acc != self.value:
            raise ValueError("inconsistent factorization")

    def radical(self) -> int:
        out = 1
        for p, _ in self.factors:
            out *= p
        return out


def factorize(n: int) -> Factorization:
    """Full factorization of a nonzero integer with |n| < 2^64."""
    if n == 0:
        raise ValueError("factorize(0)")
    if abs(n) >= _FACTOR_LIMIT:
        raise ValueError(f"factorize: |n| >= 2^64 unsupported: {n}")
    sign = 1 if n > 0 else -1
    m = abs(n)
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _pollard_rho(m)
        stack += [d, m // d]
    factors = tuple(sorted(counts.items()))
    return Factorization(value=n, sign=sign, factors=factors)


def squarefree_kernel(n: int) -> int:
    """The squarefree d with n = d * (perfect square), sign(d) = sign(n)."""
    if n == 0:
        raise ValueError("squarefree_kernel(0)")
    d = 1 if n > 0 else -1
    for p, e in factorize(n).factors:
        if e % 2:
            d *= p
    return d


def valuation(n: int, p: int) -> int:
    """Largest v with p^v | n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), extending Jacobi to all integers n.

    Conventions: (a|2) is 0 for even a and (-1)^((a^2-1)/8) otherwise;
    (a|-1) is -1 exactly for a < 0; (a|0) is 1 iff a = +-1.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # peel off the even part of n
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        v = 0
        while n % 2 == 0:
            n //= 2
            v += 1
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi loop on odd n >= 1
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def primes_upto(n: int) -> list:
    """All primes <= n, ascending (simple sieve, n bounded by memory guard)."""
    if n < 2:
        return []
    if n > _SIEVE_SEGMENT * 8:
        raise ValueError(f"primes_upto: {n} exceeds the memory budget")
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).tolist()


def primes_in_range(lo: int, hi: int) -> list:
    """All primes in [lo, hi], ascending; segmented sieve, 2 <= lo <= hi < 2^40."""
    if not (2 <= lo <= hi):
        raise ValueError(f"primes_in_range: need 2 <= lo <= hi, got [{lo}, {hi}]")
    if hi >= 1 << 40:
        raise ValueError("primes_in_range: hi >= 2^40 unsupported")
    if hi - lo > _SIEVE_SEGMENT * 4:
        raise ValueError("primes_in_range: segment exceeds the memory budget")
    if hi <= _SIEVE_SEGMENT:
        ps = primes_upto(hi)
        import bisect

        return ps[bisect.bisect_left(ps, lo) :]
    base = primes_upto(isqrt(hi))
    seg = np.ones(hi - lo + 1, dtype=bool)
    for p in base:
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start <= hi:
            seg[start - lo :: p] = False
    return (np.flatnonzero(seg) + lo).tolist()
