"""Exact Fibonacci and Lucas integers plus shared high-precision decimals.

Integers are plain Python ints (arbitrary precision), exact ratios are
``fractions.Fraction``, and every approximate value produced by this
package is a ``decimal.Decimal`` carrying :data:`DIGITS` significant
digits. All functions are pure and the values immutable, so everything
here is safe to share between threads.
"""

from __future__ import annotations

from decimal import Context, Decimal, localcontext
from fractions import Fraction

#: Significant decimal digits carried by every Decimal this package produces.
DIGITS = 50

_CTX = Context(prec=DIGITS)


def decimal_context() -> Context:
    """A fresh context at package precision, for callers doing their own
    arithmetic on values returned here (the default context truncates)."""
    return Context(prec=DIGITS)

# Mantissa width used when taking logarithms of huge integers. 192 bits of
# mantissa leave a relative truncation error around 1e-57, far below DIGITS.
_LOG_MANTISSA_BITS = 192


def fibonacci_pair(n: int) -> tuple[int, int]:
    """Return ``(F(n), F(n+1))`` with F(0)=0, F(1)=1.

    Fast doubling: O(log n) big-integer multiplications, so indices up to
    10**5 and beyond stay cheap.
    """
    if n < 0:
        raise ValueError("Fibonacci index must be >= 0")
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fibonacci(n: int) -> int:
    """F(n) with F(0)=0, F(1)=1."""
    return fibonacci_pair(n)[0]


def lucas(n: int) -> int:
    """L(n) with L(0)=2, L(1)=1, via the identity L(n) = 2*F(n+1) - F(n)."""
    if n < 0:
        raise ValueError("Lucas index must be >= 0")
    a, b = fibonacci_pair(n)
    return 2 * b - a


def sqrt5() -> Decimal:
    with localcontext(_CTX):
        return Decimal(5).sqrt()


def golden_ratio() -> Decimal:
    """(1 + sqrt 5) / 2 to DIGITS significant digits."""
    with localcontext(_CTX):
        return (1 + Decimal(5).sqrt()) / 2


def to_decimal(value: Fraction | int) -> Decimal:
    """Convert an exact rational, correctly rounded to DIGITS digits."""
    q = Fraction(value)
    with localcontext(_CTX):
        return Decimal(q.numerator) / Decimal(q.denominator)


def log2_int(v: int) -> Decimal:
    """Base-2 logarithm of a positive integer.

    The exponent comes from the bit length; only a normalized
    _LOG_MANTISSA_BITS-bit mantissa enters the Decimal logarithm, so the
    cost does not grow with the size of ``v``.
    """
    if v <= 0:
        raise ValueError("log2 is undefined for non-positive integers")
    shift = max(0, v.bit_length() - _LOG_MANTISSA_BITS)
    with localcontext(_CTX):
        return shift + Decimal(v >> shift).ln() / Decimal(2).ln()
