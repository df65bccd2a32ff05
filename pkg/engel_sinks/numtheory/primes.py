"""Prime utilities on top of sympy's number theory module."""
from math import gcd
from typing import List, Tuple

from sympy import isprime, n_order, prevprime, primerange


def primes_upto(n: int) -> List[int]:
    """All primes ``p <= n`` in increasing order."""
    return list(primerange(2, n + 1))


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def p_part(n: int, p: int) -> Tuple[int, int]:
    """Split ``n`` as ``p^a * rest`` with ``p`` not dividing ``rest``.

    Args:
        n (int): A positive integer.
        p (int): A prime.

    Returns:
        Tuple[int, int]: ``(p^a, n / p^a)``.
    """
    if n < 1:
        raise ValueError('p_part needs a positive integer, got {}'.format(n))
    power = 1
    while n % p == 0:
        n //= p
        power *= p
    return power, n


def multiplicative_order(q: int, r: int) -> int:
    """Least ``e >= 1`` with ``q^e = 1 (mod r)``.

    Raises:
        ValueError: if ``r < 2`` or ``gcd(q, r) != 1``.
    """
    if r < 2:
        raise ValueError('modulus must be at least 2, got {}'.format(r))
    if gcd(q, r) != 1:
        raise ValueError('{} is not invertible modulo {}'.format(q, r))
    return int(n_order(q % r, r))


def bertrand_prime(n: int) -> int:
    """The largest prime ``p`` with ``n/2 < p <= n``."""
    if n < 2:
        raise ValueError('no prime lies in (n/2, n] for n = {}'.format(n))
    return int(prevprime(n + 1))
