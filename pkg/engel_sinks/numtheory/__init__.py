from .primes import (  # noqa
    bertrand_prime, is_prime, multiplicative_order, p_part, primes_upto
)
from .zsigmondy import (  # noqa
    ZsigmondyBoundReport, ZsigmondyException, ZsigmondyResult, zsigmondy,
    zsigmondy_bound_check
)
