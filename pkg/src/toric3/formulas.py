"""Closed-form minimum distances and bounds.

Exact values exist for the empty tetrahedra T(s,t), the degenerate
(embedded polygon) codes 1-3, and the width-1 signatures (2,1) and
(2,2).  Signatures (3,1) and (3,2) only admit bounds; the irrational
sqrt(q) bound is evaluated in exact integer arithmetic (isqrt) so the
acceptance tests are bit-exact.
"""

from __future__ import annotations

from math import gcd, isqrt

from .codes import DistanceResult
from .errors import InvalidField, InvalidParams, OutOfRange
from .galois import _factor_prime_power


def _check_q(q: int, minimum: int = 3) -> None:
    if _factor_prime_power(q) is None:
        raise InvalidField(f"q={q} is not a prime power")
    if q < minimum:
        raise InvalidField(f"formula needs q >= {minimum}; got {q}")


def dim4_distance(q: int, t: int) -> DistanceResult:
    """Exact distance of C_T(s,t); independent of s.

    (q-1)^3 - (q-1)^2 when gcd(t, q-1) = 1, otherwise
    (q-1)^3 - (q-1)(q-3) - q*gcd(t, q-1).
    """
    _check_q(q)
    if t < 1:
        raise InvalidParams(f"t must be >= 1; got {t}")
    g = gcd(t, q - 1)
    if g == 1:
        d = (q - 1) ** 3 - (q - 1) ** 2
    else:
        d = (q - 1) ** 3 - (q - 1) * (q - 3) - q * g
    return DistanceResult(d, d, "formula")


def _sqrt_bound_floor(q: int) -> int:
    """floor(2*sqrt(q)*(q-1)), exactly."""
    return isqrt(4 * q * (q - 1) ** 2)


def _sqrt_bound_ceil(q: int) -> int:
    r2 = 4 * q * (q - 1) ** 2
    f = isqrt(r2)
    return f if f * f == r2 else f + 1


def degenerate_distance(i: int, q: int) -> DistanceResult:
    """Distance of the embedded-polygon code E:i.

    Exact for i in {1, 2, 3}; for the exceptional triangle (i = 4) only
    a strict lower bound d > (q-1)^3 - (1+q+2*sqrt(q))(q-1) is known.
    """
    if not 1 <= i <= 4:
        raise OutOfRange(f"embedded polygons are 1..4; got {i}")
    _check_q(q, 5 if i == 1 else 3)
    n = (q - 1) ** 3
    if i == 1:
        d = n - 3 * (q - 1) ** 2
    elif i == 2:
        d = n - 2 * (q - 1) ** 2
    elif i == 3:
        d = n - (2 * q - 3) * (q - 1)
    else:
        # smallest integer strictly above n - (1+q)(q-1) - 2*sqrt(q)(q-1)
        lower = n - (1 + q) * (q - 1) - _sqrt_bound_ceil(q) + 1
        return DistanceResult(max(1, lower), n, "bound")
    return DistanceResult(d, d, "formula")


def dim5_distance(sig: tuple[int, int], q: int, s: int = 0, t: int = 0) -> DistanceResult:
    """Distance (or bound interval) for the width-1 five-point codes."""
    _check_q(q, 5)
    n = (q - 1) ** 3
    if sig == (2, 1):
        if t < 1 or gcd(s, t) != 1 or not 0 <= 2 * s <= t:
            raise InvalidParams(f"(2,1) needs 0 <= s <= t/2, gcd(s,t)=1; got ({s},{t})")
        d = n - 2 * (q - 1) ** 2
        return DistanceResult(d, d, "formula")
    if sig == (2, 2):
        d = n - (2 * q * q - 5 * q + 3)
        return DistanceResult(d, d, "formula")
    if sig == (3, 1):
        # d >= (q-1)^3 - (q-1)(1+q+2*sqrt(q)), non-strict
        lower = n - (1 + q) * (q - 1) - _sqrt_bound_floor(q)
        return DistanceResult(max(1, lower), n, "bound")
    if sig == (3, 2):
        if t < 1 or gcd(s, t) != 1 or not 0 < s <= t:
            raise InvalidParams(f"(3,2) needs 0 < s <= t, gcd(s,t)=1; got ({s},{t})")
        lower = n - (q - 2) ** 2 - (s + t) * q
        upper = n - (q - 1) * (q - 3) - q * gcd(s + t, q - 1)
        # distances of nonzero codes are >= 1; a nonpositive lower bound
        # is vacuous but the interval stays valid
        return DistanceResult(max(1, min(lower, upper)), min(n, upper), "bound")
    raise InvalidParams(f"unknown width-1 signature {sig}")
