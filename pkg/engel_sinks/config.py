"""Ceilings and environment defaults."""
import os

# Largest group the closure algorithm will enumerate.
ENUMERATION_CEILING = 10000
# Largest permutation degree accepted for the regular carrier of G<phi>.
CARRIER_CEILING = 4096
# Groups up to this order get their full automorphism group enumerated.
AUTOMORPHISM_ENUMERATION_LIMIT = 128
# Candidate generator-image assignments tried before giving up.
AUTOMORPHISM_SEARCH_LIMIT = 200000
UINT128_LIMIT = 2**128


def _int_from_env(variable: str, default: int) -> int:
    value = os.environ.get(variable)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(
            '{} must be an integer, got {!r}'.format(variable, value)
        )


def default_tier() -> int:
    return _int_from_env('ENGEL_SINKS_TIER', 1)


def default_jobs() -> int:
    return max(1, _int_from_env('ENGEL_SINKS_JOBS', 1))
