"""Integer helpers: primes, valuations, trial-division factoring, factored forms."""

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


@lru_cache(maxsize=None)
def primes_up_to(bound):
    """All primes <= bound, as a tuple (sieve of Eratosthenes)."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    i = 17
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def valuation(x, p):
    """p-adic valuation of a nonzero integer or Fraction."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def trial_factor(n, bound=10**6):
    """Factor |n| by trial division up to ``bound``.

    Returns ``(factors, cofactor)`` where ``factors`` maps primes to
    exponents and ``cofactor`` is the unfactored remainder (1 when the
    factorization is complete). A cofactor below ``bound**2`` is prime.
    """
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor zero")
    factors = {}
    for p in primes_up_to(bound):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
    if n > 1 and n < bound * bound:
        factors[n] = factors.get(n, 0) + 1
        n = 1
    return factors, n


def factorint(n):
    """Complete factorization of a nonzero integer as a sorted dict.

    Raises ValueError when trial division to 10**6 leaves a cofactor.
    """
    factors, rest = trial_factor(n)
    if rest != 1:
        raise ValueError("incomplete factorization of %d" % n)
    return dict(sorted(factors.items()))


def from_factors(factors, sign=1):
    out = sign
    for p, e in factors.items():
        out *= p**e
    return out


def format_factored(n):
    """Human form like ``-2^8·5^4·11``."""
    n = int(n)
    if n == 0:
        return "0"
    if abs(n) == 1:
        return str(n)
    factors, rest = trial_factor(n)
    parts = ["%d^%d" % (p, e) if e > 1 else str(p) for p, e in sorted(factors.items())]
    if rest != 1:
        parts.append("(%d)" % rest)
    return ("-" if n < 0 else "") + "·".join(parts)


def squarefree_divisors(primes, signed=False):
    """All products of subsets of ``primes``; optionally with both signs."""
    divs = [1]
    for p in primes:
        divs += [d * p for d in divs]
    if signed:
        divs += [-d for d in divs]
    return sorted(divs, key=lambda d: (abs(d), d < 0))


def divisors(factors):
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def squarefree_part(n):
    """Signed squarefree kernel: n = squarefree_part(n) * m**2."""
    n = int(n)
    if n == 0:
        raise ValueError("zero has no squarefree part")
    out = -1 if n < 0 else 1
    for p, e in factorint(n).items():
        if e % 2:
            out *= p
    return out


def is_square(x):
    """True when the rational x is the square of a rational."""
    x = Fraction(x)
    if x < 0:
        return False
    return isqrt(x.numerator) ** 2 == x.numerator and isqrt(x.denominator) ** 2 == x.denominator


def legendre(a, p):
    """Quadratic-residue symbol (a/p) for an odd prime p, by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError("legendre symbol needs an odd prime, got %d" % p)
    r = pow(int(a) % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def is_square_qp(x, p):
    """Is the nonzero rational x a square in Q_p?"""
    x = Fraction(x)
    if x == 0:
        return True
    v = valuation(x, p)
    if v % 2:
        return False
    unit = x / Fraction(p) ** v
    u = unit.numerator * unit.denominator  # same square class, p-adic unit
    if p == 2:
        return u % 8 == 1
    return legendre(u, p) == 1


def mod_inverse(a, m):
    return pow(a, -1, m)


def lcm(a, b):
    return a * b // gcd(a, b)
