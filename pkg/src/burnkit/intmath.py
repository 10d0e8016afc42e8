"""Exact integer arithmetic helpers.

Everything here is float-free: ceiling-of-square-root is the classic
off-by-one trap when done through ``math.sqrt``, so all callers go through
these helpers instead.
"""

import math


def ceil_sqrt(n: int) -> int:
    """Smallest integer s with s*s >= n (n must be nonnegative)."""
    if n < 0:
        raise ValueError(f"ceil_sqrt of negative number: {n}")
    if n == 0:
        return 0
    return math.isqrt(n - 1) + 1


def is_square(n: int) -> bool:
    """True iff n is a perfect square."""
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for positive b."""
    return -(-a // b)
