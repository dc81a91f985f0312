"""Structural classification of Freiman ideals of maximal height and of products."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError, InvalidArgument, UnsupportedInput
from .ideal import (
    MonomialIdeal,
    frobenius_primitive_root,
    height,
    ideal_product,
    ideal_sum,
    is_equigenerated,
    maximal_ideal_power,
    pseudo_frobenius_power,
    pure_powers,
)
from .invariants import delta, reduction_step_test

__all__ = [
    "NormalForm",
    "MaxHeightVerdict",
    "normal_form_ideal",
    "classify_max_height",
    "product_freiman_max_height",
    "two_var_power_ideal",
    "two_var_power_product",
]

PURE_POWERS = "pure-powers"
MIXED_BLOCK = "mixed-block"
MAXIMAL_IDEAL = "maximal-ideal"


@dataclass(frozen=True)
class NormalForm:
    """``(x_1..x_r)^degree + (x_{r+1}^degree, ..., x_n^degree)`` after relabeling."""

    kind: str
    r: int
    degree: int

    def to_dict(self) -> dict:
        return {"kind": self.kind, "r": self.r, "degree": self.degree}


@dataclass(frozen=True)
class MaxHeightVerdict:
    freiman: bool
    primitive_q: int
    form: NormalForm | None = None
    relabeling: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.form is not None:
            if not self.freiman:
                raise InternalInvariantError("a normal form is only reported for Freiman ideals")
            f = self.form
            if f.kind == MIXED_BLOCK and not (f.r <= 3 if f.degree == 2 else f.r <= 2):
                raise InternalInvariantError(f"mixed block {f} outside the Freiman range")

    def to_dict(self) -> dict:
        return {
            "freiman": self.freiman,
            "primitive_q": self.primitive_q,
            "form": None if self.form is None else self.form.to_dict(),
            "relabeling": None if self.relabeling is None else [p + 1 for p in self.relabeling],
        }


def normal_form_ideal(n: int, r: int, d: int) -> MonomialIdeal:
    """``(x_1..x_r)^d + (x_{r+1}^d, ..., x_n^d)``."""
    if not 0 <= r <= n:
        raise InvalidArgument(f"need 0 <= r <= n, got r={r}, n={n}")
    tail = pure_powers(n, d, range(r, n)) if r < n else None
    if r == 0:
        return pure_powers(n, d)
    block = maximal_ideal_power(n, d, range(r))
    return block if tail is None else ideal_sum(block, tail)


def _allowed(r: int, d: int) -> bool:
    return d == 1 or r <= 1 or (r <= 3 if d == 2 else r <= 2)


def classify_max_height(ideal: MonomialIdeal) -> MaxHeightVerdict:
    """Decide and describe Freiman-ness of an equigenerated ideal of height ``n``.

    The verdict comes from the exact test ``I^2 == (x_1^d..x_n^d) I``.  The
    primitive root is then matched against the normal forms; the variables
    appearing in mixed generators determine the only candidate block, so the
    relabeling is read off directly.  The two routes must agree.
    """
    flag, d = is_equigenerated(ideal)
    if not flag:
        raise UnsupportedInput("classification needs an equigenerated ideal")
    n = ideal.n
    if height(ideal) != n:
        raise InvalidArgument(f"ideal has height {height(ideal)} < n={n}")
    freiman = reduction_step_test(ideal, pure_powers(n, d))

    root, q = frobenius_primitive_root(ideal)
    d_root = d // q
    block = sorted({i for g in root if len(g.support) > 1 for i in g.support})
    r = len(block)
    perm_order = block + [i for i in range(n) if i not in block]
    relabeling = tuple(perm_order.index(i) for i in range(n))
    matched = root.relabel(relabeling) == normal_form_ideal(n, r, d_root)
    structural = matched and _allowed(r, d_root)
    if structural != freiman:
        raise InternalInvariantError(
            f"reduction test says freiman={freiman} but normal-form match says {structural} for {ideal!r}"
        )
    if not freiman:
        return MaxHeightVerdict(False, q)
    if d == 1:
        form = NormalForm(MAXIMAL_IDEAL, n, 1)
    elif r == 0:
        form = NormalForm(PURE_POWERS, 0, d)
    else:
        form = NormalForm(MIXED_BLOCK, r, d_root)
    return MaxHeightVerdict(True, q, form, relabeling)


def _require_max_height(ideal: MonomialIdeal, name: str) -> int:
    flag, d = is_equigenerated(ideal)
    if not flag:
        raise UnsupportedInput(f"{name} is not equigenerated")
    if height(ideal) != ideal.n:
        raise InvalidArgument(f"{name} does not have height n={ideal.n}")
    return d


def product_freiman_max_height(i: MonomialIdeal, j: MonomialIdeal,
                               cross_check: bool = True) -> tuple[bool, str]:
    """Whether ``I*J`` is Freiman for height-``n`` ideals in ``n >= 3`` variables."""
    if i.n != j.n:
        raise InvalidArgument(f"ambient mismatch: {i.n} vs {j.n} variables")
    n = i.n
    if n <= 2:
        raise UnsupportedInput("products in at most two variables have no closed classification")
    di = _require_max_height(i, "I")
    _require_max_height(j, "J")
    if n >= 4:
        verdict, reason = False, "n >= 4: a product of height-n ideals is never Freiman"
    elif i == j and i == pure_powers(3, di):
        verdict, reason = True, f"I = J = (x1^{di}, x2^{di}, x3^{di})"
    else:
        verdict, reason = False, "n = 3 and I, J are not one common pure-power triple"
    if cross_check:
        brute = delta(ideal_product(i, j)).freiman
        if brute != verdict:
            raise InternalInvariantError(f"product verdict {verdict} disagrees with brute-force delta")
    return verdict, reason


def two_var_power_ideal(a: int, r: int) -> MonomialIdeal:
    """``(x^a, y^a)^r`` in two variables."""
    return pseudo_frobenius_power(maximal_ideal_power(2, r), a)


def two_var_power_product(a: int, r: int, b: int, s: int) -> tuple[int, int] | None:
    """``(c, t)`` with ``(x^a,y^a)^r (x^b,y^b)^s = (x^c,y^c)^t``, or None if no such pair."""
    if min(a, r, b, s) < 1:
        raise InvalidArgument("all parameters must be positive")
    if a > b:
        a, r, b, s = b, s, a, r
    if b % a:
        return None
    k = b // a
    if r < k - 1:
        return None
    return a, r + k * s
