"""Zsigmondy primes and the exponent bound built on them."""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from sympy import factorint

from ..config import UINT128_LIMIT
from ..errors import ArithmeticOverflowError, InvariantViolationError
from .primes import multiplicative_order

logger = logging.getLogger(__name__)


class ZsigmondyException(str, Enum):
    Q2E6 = 'q2e6'
    MERSENNE_E2 = 'mersenne_e2'


@dataclass(frozen=True)
class ZsigmondyResult:
    """Primes dividing ``q^e - 1`` and no ``q^f - 1`` with ``f < e``."""

    q: int
    e: int
    primes: Tuple[int, ...]
    exception: Optional[ZsigmondyException] = None

    def describe(self) -> str:
        if self.primes:
            return ' '.join(str(r) for r in self.primes)
        if self.exception is ZsigmondyException.Q2E6:
            return 'no Zsigmondy prime (exception: q=2, e=6)'
        if self.exception is ZsigmondyException.MERSENNE_E2:
            return 'no Zsigmondy prime (exception: e=2, q={} is 2^k-1)'.format(
                self.q
            )
        return 'no Zsigmondy prime'


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def zsigmondy(q: int, e: int) -> ZsigmondyResult:
    """All Zsigmondy primes for ``(q, e)``.

    Args:
        q (int): Base, at least 2.
        e (int): Exponent, at least 1.

    Returns:
        ZsigmondyResult: Sorted primes and the exception that explains an
            empty answer.

    Raises:
        ArithmeticOverflowError: if ``q^e`` does not fit in 128 bits.
    """
    if q < 2 or e < 1:
        raise ValueError('need q >= 2 and e >= 1, got ({}, {})'.format(q, e))
    if e * (q.bit_length() - 1) >= 128 or q**e >= UINT128_LIMIT:
        raise ArithmeticOverflowError(
            '{}^{} does not fit in 128 bits'.format(q, e)
        )
    primes = tuple(
        sorted(
            r for r in factorint(q**e - 1)
            if multiplicative_order(q, r) == e
        )
    )
    exception = None
    if not primes and e >= 2:
        if (q, e) == (2, 6):
            exception = ZsigmondyException.Q2E6
        elif e == 2 and _is_power_of_two(q + 1):
            exception = ZsigmondyException.MERSENNE_E2
        else:
            raise InvariantViolationError(
                'no Zsigmondy prime for ({}, {}) outside the known exceptions'.
                format(q, e)
            )
    return ZsigmondyResult(q, e, primes, exception)


@dataclass(frozen=True)
class ZsigmondyBoundReport:
    """The exponent chain for a field of order ``p^k`` and sink size ``m``.

    With ``r`` the least Zsigmondy prime for ``(p, ke)``, the multiplicative
    order of ``p`` modulo ``r`` is ``ke``, so ``ke <= r - 1``. A cyclic Sylow
    ``r``-subgroup gives ``r <= (m - 1)^2``, and together these give
    ``k <= max(4, (m - 1)^2 - 1)``.
    """

    p: int
    k: int
    e: int
    m: int
    r: Optional[int]
    exception: Optional[ZsigmondyException]
    exponent_below_r: Optional[bool]
    r_within_sink_bound: Optional[bool]
    k_within_bound: bool

    @property
    def ok(self) -> bool:
        return all(
            flag is not False for flag in
            (self.exponent_below_r, self.r_within_sink_bound,
             self.k_within_bound)
        )

    def to_dict(self) -> dict:
        return {
            'p': self.p,
            'k': self.k,
            'e': self.e,
            'm': self.m,
            'r': self.r,
            'exception': self.exception.value if self.exception else None,
            'exponent_below_r': self.exponent_below_r,
            'r_within_sink_bound': self.r_within_sink_bound,
            'k_within_bound': self.k_within_bound,
        }


def zsigmondy_bound_check(p: int, k: int, e: int, m: int) -> ZsigmondyBoundReport:
    """Replay the exponent bound for ``p^k`` with measured sink size ``m``.

    A missing Zsigmondy prime is reported in the result, not raised.
    """
    result = zsigmondy(p, k * e)
    bound = (m - 1)**2
    r = result.primes[0] if result.primes else None
    report = ZsigmondyBoundReport(
        p=p,
        k=k,
        e=e,
        m=m,
        r=r,
        exception=result.exception,
        exponent_below_r=None if r is None else k * e <= r - 1,
        r_within_sink_bound=None if r is None else r <= bound,
        k_within_bound=k <= max(4, bound - 1)
    )
    logger.debug('zsigmondy bound check %s', report)
    return report
