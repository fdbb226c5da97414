"""Small integer helpers: primality, prime powers, primitive roots."""

from __future__ import annotations

from .errors import ParameterError


def is_prime(n: int) -> bool:
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


def prime_power(n: int):
    """Return ``(p, e)`` with ``n == p**e`` and ``p`` prime, or ``None``."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            m = n
            while m % p == 0:
                m //= p
                e += 1
            return (p, e) if m == 1 else None
        p += 1
    return (n, 1)


def smallest_primitive_root(p: int) -> int:
    if not is_prime(p):
        raise ParameterError(f"{p} is not prime")
    if p == 2:
        return 1
    for g in range(2, p):
        x = g
        order = 1
        while x != 1:
            x = x * g % p
            order += 1
        if order == p - 1:
            return g
    raise ParameterError(f"no primitive root found modulo {p}")
