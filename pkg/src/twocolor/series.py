"""Truncated integer power series: the independent counting oracle.

Coefficients are exact integers with a tracked truncation order; asking for
a coefficient beyond the order raises instead of silently returning junk,
and any coefficient leaving the signed 64-bit range aborts the computation.
Division is restricted to the geometric unit factors 1/(1 - q^m), applied
as multiplication by sum_i q^(m*i).
"""

from __future__ import annotations

from dataclasses import dataclass

_COEFF_BOUND = 2**63 - 1


class CoefficientOverflow(OverflowError):
    """A series coefficient left the signed 64-bit range."""


@dataclass(frozen=True)
class PowerSeries:
    """Integer coefficients for q^0 .. q^order."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        for i, c in enumerate(coeffs):
            if abs(c) > _COEFF_BOUND:
                raise CoefficientOverflow(f"coefficient of q^{i} exceeds the 64-bit range")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient of q^{n} is beyond truncation order {self.order}")
        return self.coefficients[n]

    def __getitem__(self, n: int) -> int:
        return self.coefficient(n)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        return cls((1,) + (0,) * order)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(
            tuple(self.coefficients[i] + other.coefficients[i] for i in range(order + 1))
        )

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i in range(order + 1):
            a = self.coefficients[i]
            if a == 0:
                continue
            for j in range(order + 1 - i):
                out[i + j] += a * other.coefficients[j]
        return PowerSeries(tuple(out))

    def times_one_plus_power(self, m: int) -> "PowerSeries":
        """Multiply by (1 + q^m)."""
        _check_exponent(m)
        c = self.coefficients
        return PowerSeries(tuple(c[i] + (c[i - m] if i >= m else 0) for i in range(len(c))))

    def times_geometric(self, m: int) -> "PowerSeries":
        """Divide by (1 - q^m), i.e. multiply by the geometric series in q^m."""
        _check_exponent(m)
        out = list(self.coefficients)
        for i in range(m, len(out)):
            out[i] += out[i - m]
        return PowerSeries(tuple(out))


def _check_exponent(m: int) -> None:
    if m < 1:
        raise ValueError(f"factor exponent must be positive, got {m}")


def series_E(order: int) -> PowerSeries:
    """Counting series for two-color partitions with distinct parts and
    blue-only evens: prod(1 + q^k) * prod(1 + q^(2k-1))."""
    s = PowerSeries.one(order)
    for k in range(1, order + 1):
        s = s.times_one_plus_power(k)
    for k in range(1, order + 1, 2):
        s = s.times_one_plus_power(k)
    return s


def series_podd(order: int) -> PowerSeries:
    """Counting series for overpartitions into odd parts:
    prod (1 + q^(2k-1)) / (1 - q^(2k-1))."""
    s = PowerSeries.one(order)
    for k in range(1, order + 1, 2):
        s = s.times_one_plus_power(k).times_geometric(k)
    return s
