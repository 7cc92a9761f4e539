"""Pure-Python monomial kernel.

Monomials are tuples of non-negative integer exponents. These functions are
the hot path of every Groebner computation; syzal._kernel_c provides a
compiled twin with identical behaviour.
"""
from __future__ import annotations

BACKEND = "python"


def mono_deg(a):
    """Total exponent sum (ring degree is d times this)."""
    return sum(a)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff a divides b componentwise."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(a, b):
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if y > x:
            return None
        out.append(x - y)
    return tuple(out)


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def cmp_grevlex(a, b):
    """Graded reverse lexicographic: -1, 0 or 1."""
    da, db = sum(a), sum(b)
    if da != db:
        return -1 if da < db else 1
    # a > b iff the LAST nonzero entry of a - b is negative
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def cmp_grlex(a, b):
    """Graded lexicographic: -1, 0 or 1."""
    da, db = sum(a), sum(b)
    if da != db:
        return -1 if da < db else 1
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    return 0
