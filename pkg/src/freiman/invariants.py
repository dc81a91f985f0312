"""Numerical invariants of the fiber cone of an equigenerated monomial ideal.

For equigenerated ``I`` the fiber cone is spanned in degree ``k`` by the
generators of ``I^k``, so its Hilbert function is ``k -> mu(I^k)`` and its
dimension (the analytic spread) is the rank of the exponent matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import kernels
from .errors import InternalInvariantError, InvalidArgument, UnsupportedInput
from .ideal import MonomialIdeal, ideal_power, ideal_product, is_equigenerated

__all__ = [
    "FreimanReport",
    "HVectorPrefix",
    "analytic_spread",
    "freiman_lower_bound",
    "delta",
    "power_counts",
    "h_vector_prefix",
    "power_count_formula",
    "power_formula_holds",
    "reduction_step_test",
    "minimal_multiplicity_gap",
]


def _require_equigenerated(ideal: MonomialIdeal) -> int:
    flag, d = is_equigenerated(ideal)
    if not flag:
        raise UnsupportedInput(
            f"ideal is not equigenerated (degrees {sorted(set(ideal.degrees()))}); "
            "fiber-cone invariants are only computed for equigenerated ideals"
        )
    return d


@dataclass(frozen=True)
class FreimanReport:
    n: int
    degree: int
    mu: int
    mu2: int
    spread: int
    delta: int
    freiman: bool

    @property
    def h(self) -> list[int]:
        """``[h0, h1, h2]`` of the fiber cone's h-vector."""
        return [1, self.mu - self.spread, self.delta]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "mu": self.mu,
            "mu2": self.mu2,
            "spread": self.spread,
            "delta": self.delta,
            "freiman": self.freiman,
            "h": self.h,
        }


@dataclass(frozen=True)
class HVectorPrefix:
    spread: int
    values: tuple[int, ...]

    @property
    def multiplicity_estimate(self) -> int:
        """Sum of the computed ``h_k``.

        This equals the multiplicity of the fiber cone only when every later
        ``h_k`` vanishes, which the prefix alone cannot certify.
        """
        return sum(self.values)

    def to_dict(self) -> dict:
        return {
            "spread": self.spread,
            "h": list(self.values),
            "multiplicity_estimate": self.multiplicity_estimate,
            "multiplicity_is_truncated_sum": True,
        }


def analytic_spread(ideal: MonomialIdeal) -> int:
    """Rank over Q of the exponent matrix of ``G(I)``."""
    _require_equigenerated(ideal)
    return kernels.rank(ideal.exponent_rows())


def freiman_lower_bound(mu: int, spread: int) -> int:
    """``spread*mu - C(spread, 2)``, the least possible ``mu(I^2)``."""
    if spread < 1 or mu < 1:
        raise InvalidArgument("mu and spread must be positive")
    if spread > mu:
        raise InvalidArgument(f"spread {spread} exceeds mu {mu}")
    return spread * mu - comb(spread, 2)


def power_counts(ideal: MonomialIdeal, k_max: int) -> list[int]:
    """``[mu(I^0), mu(I^1), ..., mu(I^k_max)]`` with ``mu(I^0) = 1``."""
    _require_equigenerated(ideal)
    if k_max < 0:
        raise InvalidArgument(f"k_max must be non-negative, got {k_max}")
    if k_max == 0:
        return [1]
    return [1] + list(kernels.power_sizes(ideal.exponent_rows(), k_max))


def delta(ideal: MonomialIdeal) -> FreimanReport:
    d = _require_equigenerated(ideal)
    _, mu, mu2 = power_counts(ideal, 2)
    spread = kernels.rank(ideal.exponent_rows())
    value = mu2 - spread * mu + comb(spread, 2)
    if value < 0:
        raise InternalInvariantError(
            f"Freiman inequality violated for {ideal!r}: mu={mu}, mu2={mu2}, spread={spread}"
        )
    return FreimanReport(ideal.n, d, mu, mu2, spread, value, value == 0)


def h_vector_prefix(ideal: MonomialIdeal, k_max: int) -> HVectorPrefix:
    """Numerator coefficients ``h_0..h_K`` of the fiber cone's Hilbert series.

    Multiplying ``sum mu(I^k) t^k`` by ``(1-t)^spread`` gives
    ``h_k = sum_j (-1)^j C(spread, j) mu(I^(k-j))``.
    """
    counts = power_counts(ideal, k_max)
    spread = kernels.rank(ideal.exponent_rows())
    values = tuple(
        sum((-1) ** j * comb(spread, j) * counts[k - j] for j in range(0, min(k, spread) + 1))
        for k in range(k_max + 1)
    )
    return HVectorPrefix(spread, values)


def power_count_formula(spread: int, mu: int, k: int) -> int:
    """``C(l+k-2, k-1)*mu - (k-1)*C(l+k-2, k)``: ``mu(I^k)`` when ``h_i = 0`` for ``i >= 2``."""
    if k < 1:
        raise InvalidArgument(f"k must be at least 1, got {k}")
    return comb(spread + k - 2, k - 1) * mu - (k - 1) * comb(spread + k - 2, k)


def power_formula_holds(ideal: MonomialIdeal, k: int) -> bool:
    if k < 2:
        raise InvalidArgument(f"k must be at least 2, got {k}")
    counts = power_counts(ideal, k)
    spread = kernels.rank(ideal.exponent_rows())
    return counts[k] == power_count_formula(spread, counts[1], k)


def reduction_step_test(ideal: MonomialIdeal, sub: MonomialIdeal) -> bool:
    """Whether ``I^2 == J*I`` for a subideal ``J`` of ``I``."""
    if ideal.n != sub.n:
        raise InvalidArgument(f"ambient mismatch: {ideal.n} vs {sub.n} variables")
    if not ideal.contains_ideal(sub):
        raise InvalidArgument("J is not contained in I")
    # J*I is always inside I^2, so comparing canonical forms decides equality.
    return ideal_power(ideal, 2) == ideal_product(sub, ideal)


def minimal_multiplicity_gap(mu: int, spread: int, e: int) -> int:
    """``e + spread - 1 - mu``; zero exactly when the fiber cone has minimal multiplicity."""
    if min(mu, spread, e) < 1:
        raise InvalidArgument("mu, spread and e must be positive")
    return e + spread - 1 - mu
