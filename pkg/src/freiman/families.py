"""Constructors and closed-form invariants for special families of ideals.

Covers strongly stable (Borel) closures, Hibi ideals of finite posets, ideals
of Veronese type and powers of the maximal ideal.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import InternalInvariantError, InvalidArgument
from .ideal import Monomial, MonomialIdeal

__all__ = [
    "MixedDegreeWarning",
    "Poset",
    "VeroneseSpec",
    "borel_closure",
    "is_strongly_stable",
    "borel_deg2_mu",
    "borel_deg2_delta",
    "borel_3vars_delta",
    "poset_downsets",
    "hibi_ideal",
    "hibi_freiman_predicate",
    "veronese_type",
    "squarefree_veronese",
    "squarefree_veronese_mu2",
    "katzman_multiplicity",
    "veronese_topminus1_f",
    "maxideal_power_delta",
]


class MixedDegreeWarning(UserWarning):
    """Borel closure was asked for seeds of different degrees."""


# ---------------------------------------------------------------- Borel ideals


def borel_closure(n: int, seeds: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Smallest strongly stable ideal containing ``seeds``.

    Closes the seed set under the moves ``u -> x_i * u / x_j`` (``i < j``,
    ``x_j | u``) with a worklist; each move keeps the degree and makes the
    exponent vector lexicographically larger, so the loop terminates.
    """
    seeds = [Monomial(s) for s in seeds]
    if not seeds:
        raise InvalidArgument("borel_closure needs at least one seed")
    for s in seeds:
        if len(s) != n:
            raise InvalidArgument(f"seed {tuple(s)} does not have {n} variables")
    if len({s.degree for s in seeds}) > 1:
        warnings.warn("Borel closure of seeds with different degrees", MixedDegreeWarning, stacklevel=2)
    seen = set(seeds)
    work = list(seen)
    while work:
        u = work.pop()
        for j in u.support:
            for i in range(j):
                e = list(u)
                e[j] -= 1
                e[i] += 1
                v = Monomial(e)
                if v not in seen:
                    seen.add(v)
                    work.append(v)
    return MonomialIdeal(n, seen)


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    for u in ideal:
        for j in u.support:
            for i in range(j):
                e = list(u)
                e[j] -= 1
                e[i] += 1
                if e not in ideal:
                    return False
    return True


def borel_deg2_mu(i: int, n: int) -> int:
    """Number of generators of ``B(x_i x_n)``."""
    return comb(i + 1, 2) + i * (n - i)


def borel_deg2_delta(i: int, n: int) -> int:
    """Delta of ``B(x_i x_n)`` in ``n`` variables (1-based ``i``)."""
    if not 1 <= i <= n:
        raise InvalidArgument(f"need 1 <= i <= n, got i={i}, n={n}")
    num = (i - 1) * (i - 2) * (6 * n * n - 2 * n * (4 * i + 3) + 3 * i * (i + 1))
    if num % 24:
        raise InternalInvariantError(f"non-integral Borel delta for i={i}, n={n}")
    return num // 24


def borel_3vars_delta(a2: int, a3: int) -> int:
    """Delta of ``B(x1^a1 x2^a2 x3^a3)``; independent of ``a1``."""
    if a2 < 0 or a3 < 1:
        raise InvalidArgument(f"need a2 >= 0 and a3 >= 1, got a2={a2}, a3={a3}")
    return a2 * (a3 - 1) + comb(a3 - 1, 2)


# ---------------------------------------------------------------- posets


class Poset:
    """Finite poset on labels ``1..size`` given by strict relations ``p < q``.

    The transitive closure is computed on construction and cyclic input is
    rejected.  ``covers`` holds the transitive reduction.
    """

    __slots__ = ("size", "_below", "covers")

    def __init__(self, size: int, relations: Iterable[tuple[int, int]] = ()):
        if size < 1:
            raise InvalidArgument("a poset needs at least one element")
        self.size = size
        below = [0] * (size + 1)  # bitmask over labels of elements strictly below
        for p, q in relations:
            if not (1 <= p <= size and 1 <= q <= size):
                raise InvalidArgument(f"relation {p} < {q} outside 1..{size}")
            below[q] |= 1 << p
        changed = True
        while changed:
            changed = False
            for q in range(1, size + 1):
                acc = below[q]
                m = acc
                while m:
                    low = m & -m
                    acc |= below[low.bit_length() - 1]
                    m ^= low
                if acc != below[q]:
                    below[q] = acc
                    changed = True
        for q in range(1, size + 1):
            if below[q] >> q & 1:
                raise InvalidArgument(f"relations contain a cycle through {q}")
        self._below = tuple(below)
        covers = []
        for q in range(1, size + 1):
            for p in range(1, size + 1):
                if below[q] >> p & 1 and not any(
                    below[q] >> r & 1 and below[r] >> p & 1 for r in range(1, size + 1)
                ):
                    covers.append((p, q))
        self.covers = tuple(sorted(covers))

    @classmethod
    def chain(cls, size: int) -> "Poset":
        return cls(size, [(p, p + 1) for p in range(1, size)])

    @classmethod
    def antichain(cls, size: int) -> "Poset":
        return cls(size, [])

    def less(self, p: int, q: int) -> bool:
        return bool(self._below[q] >> p & 1)

    def comparable(self, p: int, q: int) -> bool:
        return p == q or self.less(p, q) or self.less(q, p)

    def below_mask(self, q: int) -> int:
        """Bitmask (bit ``p``) of the elements strictly below ``q``."""
        return self._below[q]

    def relations(self) -> list[tuple[int, int]]:
        return [(p, q) for q in range(1, self.size + 1) for p in range(1, self.size + 1) if self.less(p, q)]

    def is_chain(self, elements: Iterable[int] | None = None) -> bool:
        elems = list(range(1, self.size + 1)) if elements is None else list(elements)
        return all(self.comparable(p, q) for p, q in combinations(elems, 2))

    def rank(self) -> int:
        """Number of covers in a longest chain."""
        height = {}
        for q in sorted(range(1, self.size + 1), key=lambda x: bin(self._below[x]).count("1")):
            height[q] = 1 + max((height[p] for p in range(1, self.size + 1) if self.less(p, q)), default=0)
        return max(height.values()) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.size == other.size and self._below == other._below

    def __hash__(self) -> int:
        return hash((self.size, self._below))

    def __repr__(self) -> str:
        return f"Poset({self.size}, {list(self.covers)})"


def poset_downsets(poset: Poset) -> list[tuple[int, ...]]:
    """All downward closed subsets, ordered by size and then lexicographically."""
    order = sorted(range(1, poset.size + 1), key=lambda q: bin(poset.below_mask(q)).count("1"))
    found: list[int] = []

    def rec(idx: int, mask: int) -> None:
        if idx == len(order):
            found.append(mask)
            return
        q = order[idx]
        rec(idx + 1, mask)
        # ``order`` is a linear extension, so everything below q was already decided.
        if poset.below_mask(q) & ~mask == 0:
            rec(idx + 1, mask | 1 << q)

    rec(0, 0)
    sets = [tuple(p for p in range(1, poset.size + 1) if m >> p & 1) for m in found]
    return sorted(sets, key=lambda s: (len(s), s))


def hibi_ideal(poset: Poset) -> MonomialIdeal:
    """Hibi ideal in ``2|P|`` variables: ``x_p`` at index ``p-1``, ``y_p`` at ``|P|+p-1``.

    Each downset ``D`` contributes ``prod_{p in D} x_p * prod_{p not in D} y_p``.
    """
    k = poset.size
    rows = []
    for down in poset_downsets(poset):
        e = [0] * (2 * k)
        inside = set(down)
        for p in range(1, k + 1):
            e[p - 1 if p in inside else k + p - 1] = 1
        rows.append(e)
    return MonomialIdeal._from_antichain(2 * k, rows)


def hibi_freiman_predicate(poset: Poset) -> tuple[bool, int | None]:
    """Whether removing a single element leaves a chain; returns that element.

    The answer is checked against the equivalent criterion
    ``rank(P) >= |P| - 2``; disagreement raises.
    """
    witness = None
    for p in range(1, poset.size + 1):
        if poset.is_chain(q for q in range(1, poset.size + 1) if q != p):
            witness = p
            break
    by_rank = poset.rank() >= poset.size - 2
    if by_rank != (witness is not None):
        raise InternalInvariantError(f"chain test and rank criterion disagree on {poset!r}")
    return witness is not None, witness


# ---------------------------------------------------------------- Veronese type


@dataclass(frozen=True)
class VeroneseSpec:
    """Bounds ``a_1 <= ... <= a_n`` with ``1 <= a_i <= d`` and ``sum(a) > d``."""

    n: int
    d: int
    bounds: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bounds", tuple(self.bounds))
        if self.n < 1 or self.d < 1:
            raise InvalidArgument("n and d must be positive")
        if len(self.bounds) != self.n:
            raise InvalidArgument(f"expected {self.n} bounds, got {len(self.bounds)}")
        if any(not 1 <= a <= self.d for a in self.bounds):
            raise InvalidArgument(f"bounds must lie in [1, {self.d}]: {self.bounds}")
        if list(self.bounds) != sorted(self.bounds):
            raise InvalidArgument(f"bounds must be non-decreasing: {self.bounds}")
        if sum(self.bounds) <= self.d:
            raise InvalidArgument(f"sum of bounds {sum(self.bounds)} must exceed d={self.d}")

    @classmethod
    def uniform(cls, n: int, d: int, a: int) -> "VeroneseSpec":
        return cls(n, d, (a,) * n)


def veronese_type(spec: VeroneseSpec) -> MonomialIdeal:
    """All ``x^b`` with ``sum(b) = d`` and ``b_i <= a_i``."""
    rows: list[tuple[int, ...]] = []
    a = spec.bounds

    def rec(i: int, left: int, prefix: tuple[int, ...]) -> None:
        if i == spec.n - 1:
            if left <= a[i]:
                rows.append(prefix + (left,))
            return
        for b in range(min(left, a[i]), -1, -1):
            rec(i + 1, left - b, prefix + (b,))

    rec(0, spec.d, ())
    return MonomialIdeal._from_antichain(spec.n, rows)


def squarefree_veronese(n: int, d: int) -> MonomialIdeal:
    if not 1 <= d <= n - 1:
        raise InvalidArgument(f"need 1 <= d <= n-1, got n={n}, d={d}")
    return veronese_type(VeroneseSpec.uniform(n, d, 1))


def squarefree_veronese_mu2(n: int, d: int) -> int:
    """``sum_i C(n, 2i) C(n-2i, d-i)``: generators of the square of ``I_{n,d}``."""
    if not 1 <= d <= n - 1:
        raise InvalidArgument(f"need 1 <= d <= n-1, got n={n}, d={d}")
    # comb() returns 0 whenever the lower index exceeds the upper one.
    return sum(comb(n, 2 * i) * comb(n - 2 * i, d - i) for i in range(d + 1) if 2 * i <= n)


def katzman_multiplicity(spec: VeroneseSpec) -> int:
    """Multiplicity of the fiber cone of ``I_{a,d}`` by inclusion-exclusion over bound sets."""
    total = 0
    for size in range(spec.n + 1):
        for subset in combinations(spec.bounds, size):
            s = sum(subset)
            if s < spec.d:
                total += (-1) ** size * (spec.d - s) ** (spec.n - 1)
    return total


def veronese_topminus1_f(n: int, d: int) -> int:
    """``d^(n-1) - C(n+d-1, d) + n - 1``; zero iff ``I_{a,d}`` with all ``a_i = d-1`` is Freiman."""
    if n < 2 or d < 2:
        raise InvalidArgument(f"need n, d >= 2, got n={n}, d={d}")
    return d ** (n - 1) - comb(n + d - 1, d) + n - 1


def maxideal_power_delta(n: int, m: int) -> int:
    """Delta of ``(x_1, ..., x_n)^m`` from generator counts of degree-m and degree-2m monomials."""
    if n < 1 or m < 1:
        raise InvalidArgument(f"need n, m >= 1, got n={n}, m={m}")
    return comb(n + 2 * m - 1, 2 * m) - n * comb(n + m - 1, m) + comb(n, 2)
