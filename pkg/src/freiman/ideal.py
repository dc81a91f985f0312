"""Monomials and monomial ideals in a fixed number of variables.

Variables are indexed from 0 internally; all user-facing text (``x1``,
``x2``, ...) is 1-based.  An ideal is stored as its unique minimal generating
set, sorted by degree and then by descending exponent vector, so two ideals
are equal exactly when their generator tuples are equal.
"""

from __future__ import annotations

import operator
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import InvalidArgument

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "minimalize",
    "ideal_product",
    "ideal_sum",
    "ideal_power",
    "pseudo_frobenius_power",
    "frobenius_primitive_root",
    "height",
    "is_equigenerated",
    "pure_powers",
    "maximal_ideal_power",
    "embed",
]


class Monomial(tuple):
    """Exponent vector ``(e_1, ..., e_n)`` standing for ``x1^e_1 ... xn^e_n``."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]) -> "Monomial":
        try:
            exps = tuple(operator.index(e) for e in exponents)
        except TypeError as exc:
            raise InvalidArgument(f"exponents must be integers: {exponents!r}") from exc
        if any(e < 0 for e in exps):
            raise InvalidArgument(f"negative exponent in {exps}")
        return tuple.__new__(cls, exps)

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> "Monomial":
        """``x_{i+1}^power`` in ``n`` variables (``i`` is 0-based)."""
        exps = [0] * n
        exps[i] = power
        return cls(exps)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def support(self) -> tuple[int, ...]:
        """0-based indices of the variables dividing the monomial."""
        return tuple(i for i, e in enumerate(self) if e)

    @property
    def max_var(self) -> int:
        """1-based index of the last variable dividing the monomial, 0 for 1."""
        for i in range(len(self) - 1, -1, -1):
            if self[i]:
                return i + 1
        return 0

    def divides(self, other: Sequence[int]) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def times(self, other: Sequence[int]) -> "Monomial":
        return Monomial(a + b for a, b in zip(self, other))

    def scaled(self, q: int) -> "Monomial":
        return Monomial(q * e for e in self)

    def __repr__(self) -> str:
        from .textio import format_monomial

        return f"Monomial({format_monomial(self)})"


def _canonical_key(m: Sequence[int]) -> tuple:
    return (sum(m), tuple(-e for e in m))


class MonomialIdeal:
    """Immutable monomial ideal given by its minimal generators.

    Construct with :func:`minimalize` or ``MonomialIdeal(n, gens)``; both
    drop duplicates and non-minimal generators.  The zero ideal and the unit
    ideal are rejected.
    """

    __slots__ = ("_n", "_gens", "_hash")

    def __init__(self, n: int, generators: Iterable[Sequence[int]]):
        n = operator.index(n)
        if n < 1:
            raise InvalidArgument(f"ambient variable count must be positive, got {n}")
        rows = [Monomial(g) for g in generators]
        if not rows:
            raise InvalidArgument("an ideal needs at least one generator")
        for g in rows:
            if len(g) != n:
                raise InvalidArgument(f"exponent vector {tuple(g)} has length {len(g)}, expected {n}")
            if not any(g):
                raise InvalidArgument("the unit ideal is not representable")
        self._set(n, kernels.minimal_rows(rows))

    @classmethod
    def _from_antichain(cls, n: int, rows: Iterable[Sequence[int]]) -> "MonomialIdeal":
        # Caller guarantees the rows are distinct, pairwise non-dividing and nonzero.
        obj = cls.__new__(cls)
        obj._set(n, rows)
        return obj

    def _set(self, n: int, rows: Iterable[Sequence[int]]) -> None:
        self._n = n
        self._gens = tuple(Monomial(r) if not isinstance(r, Monomial) else r
                           for r in sorted(rows, key=_canonical_key))
        self._hash = hash((n, self._gens))

    @property
    def n(self) -> int:
        return self._n

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return self._gens

    @property
    def mu(self) -> int:
        """Number of minimal generators."""
        return len(self._gens)

    def degrees(self) -> list[int]:
        return [g.degree for g in self._gens]

    def __len__(self) -> int:
        return len(self._gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._gens)

    def __contains__(self, m: Sequence[int]) -> bool:
        return any(g.divides(m) for g in self._gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(g in self for g in other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self._n == other._n and self._gens == other._gens

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_product(self, other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return ideal_power(self, k)

    def exponent_rows(self) -> list[tuple[int, ...]]:
        return [tuple(g) for g in self._gens]

    def relabel(self, perm: Sequence[int]) -> "MonomialIdeal":
        """Apply the variable map ``x_i -> x_{perm[i]}`` (0-based)."""
        rows = []
        for g in self._gens:
            e = [0] * self._n
            for i, a in enumerate(g):
                e[perm[i]] = a
            rows.append(e)
        return MonomialIdeal._from_antichain(self._n, rows)

    def __repr__(self) -> str:
        from .textio import format_monomial

        body = ", ".join(format_monomial(g) for g in self._gens)
        return f"MonomialIdeal(n={self._n}, [{body}])"


def minimalize(n: int, raw: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Ideal generated by ``raw`` with redundant generators removed."""
    return MonomialIdeal(n, raw)


def _check_same_ambient(i: MonomialIdeal, j: MonomialIdeal) -> None:
    if i.n != j.n:
        raise InvalidArgument(f"ambient mismatch: {i.n} vs {j.n} variables")


def is_equigenerated(ideal: MonomialIdeal) -> tuple[bool, int | None]:
    """Return ``(True, d)`` if all generators have degree ``d``, else ``(False, None)``."""
    degs = {g.degree for g in ideal}
    if len(degs) == 1:
        return True, degs.pop()
    return False, None


def ideal_product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_same_ambient(i, j)
    rows = kernels.sumset(i.exponent_rows(), j.exponent_rows())
    if is_equigenerated(i)[0] and is_equigenerated(j)[0]:
        # Distinct monomials of one degree never divide each other.
        return MonomialIdeal._from_antichain(i.n, rows)
    return MonomialIdeal._from_antichain(i.n, kernels.minimal_rows(rows))


def ideal_sum(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_same_ambient(i, j)
    return MonomialIdeal(i.n, list(i) + list(j))


def ideal_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """``ideal^k`` for ``k >= 1``."""
    k = operator.index(k)
    if k < 1:
        raise InvalidArgument(f"power must be at least 1, got {k}")
    result = ideal
    for _ in range(k - 1):
        result = ideal_product(result, ideal)
    return result


def pseudo_frobenius_power(ideal: MonomialIdeal, q: int) -> MonomialIdeal:
    """Raise every minimal generator to the ``q``-th power."""
    q = operator.index(q)
    if q < 1:
        raise InvalidArgument(f"q must be at least 1, got {q}")
    return MonomialIdeal._from_antichain(ideal.n, [g.scaled(q) for g in ideal])


def frobenius_primitive_root(ideal: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    """Return ``(root, q)`` with ``root^[q] == ideal`` and ``q`` maximal."""
    q = reduce(gcd, (e for g in ideal for e in g), 0)
    if q <= 1:
        return ideal, 1
    root = MonomialIdeal._from_antichain(ideal.n, [tuple(e // q for e in g) for g in ideal])
    return root, q


def height(ideal: MonomialIdeal) -> int:
    """Smallest number of variables meeting the support of every generator."""
    masks = {sum(1 << i for i in g.support) for g in ideal}
    for size in range(1, ideal.n + 1):
        for combo in combinations(range(ideal.n), size):
            cover = sum(1 << i for i in combo)
            if all(m & cover for m in masks):
                return size
    raise AssertionError("unreachable: the full variable set covers every nonzero support")


def pure_powers(n: int, d: int, indices: Iterable[int] | None = None) -> MonomialIdeal:
    """``(x_i^d : i in indices)``, all variables by default."""
    idx = range(n) if indices is None else list(indices)
    return MonomialIdeal._from_antichain(n, [Monomial.variable(n, i, d) for i in idx])


def monomials_of_degree(n: int, d: int, indices: Sequence[int] | None = None) -> list[Monomial]:
    """All degree-``d`` monomials in the given variables, canonically ordered."""
    idx = list(range(n)) if indices is None else list(indices)
    out: list[Monomial] = []

    def rec(pos: int, left: int, exps: list[int]) -> None:
        if pos == len(idx) - 1:
            exps[idx[pos]] = left
            out.append(Monomial(exps))
            exps[idx[pos]] = 0
            return
        for e in range(left, -1, -1):
            exps[idx[pos]] = e
            rec(pos + 1, left - e, exps)
        exps[idx[pos]] = 0

    if not idx:
        return [Monomial([0] * n)] if d == 0 else []
    rec(0, d, [0] * n)
    return sorted(out, key=_canonical_key)


def maximal_ideal_power(n: int, m: int, indices: Sequence[int] | None = None) -> MonomialIdeal:
    """``(x_i : i in indices)^m`` in ``n`` variables."""
    if m < 1:
        raise InvalidArgument(f"power must be at least 1, got {m}")
    return MonomialIdeal._from_antichain(n, monomials_of_degree(n, m, indices))


def embed(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """The same generators viewed in ``n >= ideal.n`` variables (new ones appended)."""
    if n < ideal.n:
        raise InvalidArgument(f"cannot embed {ideal.n} variables into {n}")
    pad = (0,) * (n - ideal.n)
    return MonomialIdeal._from_antichain(n, [tuple(g) + pad for g in ideal])
