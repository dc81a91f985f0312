"""Exhaustive enumeration, Freiman census and theorem verification.

Everything here is brute force at small parameters.  Parallel census runs
split the enumeration index range into shards and merge the per-ideal
records back in index order, so the report does not depend on the number of
workers.
"""

from __future__ import annotations

import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import permutations, product
from math import comb
from typing import Callable, Iterator

from .classify import (
    classify_max_height,
    product_freiman_max_height,
    two_var_power_ideal,
    two_var_power_product,
)
from .errors import InternalInvariantError, InvalidArgument, ResourceLimit
from .families import (
    Poset,
    VeroneseSpec,
    borel_3vars_delta,
    borel_closure,
    borel_deg2_delta,
    borel_deg2_mu,
    hibi_freiman_predicate,
    hibi_ideal,
    katzman_multiplicity,
    maxideal_power_delta,
    squarefree_veronese,
    squarefree_veronese_mu2,
    veronese_topminus1_f,
    veronese_type,
)
from .ideal import (
    Monomial,
    MonomialIdeal,
    embed,
    frobenius_primitive_root,
    ideal_product,
    ideal_sum,
    maximal_ideal_power,
    monomials_of_degree,
    pure_powers,
)
from .invariants import delta, minimal_multiplicity_gap, reduction_step_test
from .textio import format_monomial

DEFAULT_CAP = 1 << 20
WITNESS_LIMIT = 5

__all__ = [
    "DEFAULT_CAP",
    "EnumerationOptions",
    "CensusReport",
    "VerifyReport",
    "THEOREMS",
    "enumeration_size",
    "enumerate_equigenerated",
    "canonical_relabeling",
    "freiman_census",
    "labeled_posets",
    "parse_ranges",
    "verify_theorem",
]


@dataclass(frozen=True)
class EnumerationOptions:
    height_max: bool = False
    up_to_symmetry: bool = False
    primitive_only: bool = False
    cap: int = DEFAULT_CAP

    def filters(self) -> dict:
        return {
            "height_max": self.height_max,
            "up_to_symmetry": self.up_to_symmetry,
            "primitive_only": self.primitive_only,
        }


def _split(n: int, d: int, height_max: bool) -> tuple[list[Monomial], list[Monomial]]:
    """(forced generators, optional generators) for the enumeration."""
    mons = monomials_of_degree(n, d)
    if not height_max:
        return [], mons
    forced = [m for m in mons if len(m.support) == 1]
    return forced, [m for m in mons if len(m.support) > 1]


def enumeration_size(n: int, d: int, height_max: bool = False) -> int:
    """Number of subsets the enumeration walks before symmetry/primitive filtering."""
    forced, free = _split(n, d, height_max)
    return 2 ** len(free) - (0 if forced else 1)


def _index_range(n: int, d: int, opts: EnumerationOptions) -> tuple[int, int]:
    if n < 1 or d < 1:
        raise InvalidArgument(f"need n, d >= 1, got n={n}, d={d}")
    size = enumeration_size(n, d, opts.height_max)
    if size > opts.cap:
        raise ResourceLimit(
            f"enumeration at n={n}, d={d} needs {size} ideals, cap is {opts.cap}",
            required=size, cap=opts.cap,
        )
    forced, _ = _split(n, d, opts.height_max)
    start = 0 if forced else 1
    return start, start + size


def _ideal_at(n: int, forced: list[Monomial], free: list[Monomial], mask: int) -> MonomialIdeal:
    rows = list(forced)
    i = 0
    while mask:
        if mask & 1:
            rows.append(free[i])
        mask >>= 1
        i += 1
    return MonomialIdeal._from_antichain(n, rows)


def canonical_relabeling(ideal: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    """(orbit representative, orbit size) under permutations of the variables.

    The representative is the relabeling whose generator list is least when
    exponent vectors are compared in descending order, so ``x1`` is favored.
    """
    images = {ideal.relabel(p) for p in permutations(range(ideal.n))}
    least = min(images, key=lambda j: tuple(tuple(-e for e in g) for g in j))
    return least, len(images)


def _accept(ideal: MonomialIdeal, opts: EnumerationOptions) -> tuple[bool, int]:
    if opts.primitive_only and frobenius_primitive_root(ideal)[1] != 1:
        return False, 0
    if opts.up_to_symmetry:
        least, orbit = canonical_relabeling(ideal)
        return least == ideal, orbit
    return True, 1


def _walk(n: int, d: int, opts: EnumerationOptions, lo: int, hi: int) -> Iterator[tuple[MonomialIdeal, int]]:
    forced, free = _split(n, d, opts.height_max)
    for mask in range(lo, hi):
        ideal = _ideal_at(n, forced, free, mask)
        ok, weight = _accept(ideal, opts)
        if ok:
            yield ideal, weight


def enumerate_equigenerated(n: int, d: int, opts: EnumerationOptions | None = None) -> Iterator[MonomialIdeal]:
    """Yield every ideal generated by a non-empty set of degree-``d`` monomials.

    With ``height_max`` the pure powers are always included and only the
    mixed monomials vary.  With ``up_to_symmetry`` one representative per
    relabeling orbit is produced (the lexicographically least one).
    """
    opts = opts or EnumerationOptions()
    lo, hi = _index_range(n, d, opts)
    for ideal, _ in _walk(n, d, opts, lo, hi):
        yield ideal


# ---------------------------------------------------------------- census


@dataclass
class CensusReport:
    n: int
    d: int
    filters: dict
    total: int = 0
    freiman_count: int = 0
    orbit_weighted_total: int = 0
    orbit_weighted_freiman: int = 0
    form_counts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=lambda: {"freiman": [], "non_freiman": []})

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _census_records(n: int, d: int, opts: EnumerationOptions, lo: int, hi: int) -> list[tuple]:
    out = []
    for ideal, weight in _walk(n, d, opts, lo, hi):
        rep = delta(ideal)
        form = None
        if opts.height_max:
            verdict = classify_max_height(ideal)
            if verdict.freiman != rep.freiman:
                raise InternalInvariantError(f"classifier disagrees with delta on {ideal!r}")
            if verdict.form is not None:
                f = verdict.form
                form = f"{f.kind}(r={f.r},d={f.degree},q={verdict.primitive_q})"
        out.append((ideal.exponent_rows(), rep.delta, rep.freiman, weight, form))
    return out


def _shards(lo: int, hi: int, count: int) -> list[tuple[int, int]]:
    step = max(1, -(-(hi - lo) // count))
    return [(a, min(a + step, hi)) for a in range(lo, hi, step)]


def _run_shard(args) -> list[tuple]:
    return _census_records(*args)


def freiman_census(n: int, d: int, opts: EnumerationOptions | None = None, jobs: int = 1) -> CensusReport:
    opts = opts or EnumerationOptions()
    lo, hi = _index_range(n, d, opts)
    shards = _shards(lo, hi, max(1, jobs) * 4)
    tasks = [(n, d, opts, a, b) for a, b in shards]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_shard, tasks))
    else:
        chunks = [_run_shard(t) for t in tasks]

    report = CensusReport(n, d, opts.filters())
    for chunk in chunks:
        for rows, dval, freiman, weight, form in chunk:
            report.total += 1
            report.orbit_weighted_total += weight
            if freiman:
                report.freiman_count += 1
                report.orbit_weighted_freiman += weight
            if form is not None:
                report.form_counts[form] = report.form_counts.get(form, 0) + 1
            bucket = report.witnesses["freiman" if freiman else "non_freiman"]
            if len(bucket) < WITNESS_LIMIT:
                bucket.append({"generators": [format_monomial(r) for r in rows], "delta": dval})
    return report


# ---------------------------------------------------------------- posets


def labeled_posets(k: int) -> Iterator[Poset]:
    """All strict partial orders on labels ``1..k``.

    Elements are added one at a time; each new element picks, for every
    earlier element, "incomparable", "below" or "above", and the extension is
    kept only if transitivity still holds on triples involving it.
    """
    if k < 1:
        raise InvalidArgument("poset size must be positive")

    def rec(j: int, less: set[tuple[int, int]]) -> Iterator[set[tuple[int, int]]]:
        if j > k:
            yield less
            return
        for choice in product((0, 1, 2), repeat=j - 1):
            new = set(less)
            for i, c in enumerate(choice, start=1):
                if c == 1:
                    new.add((i, j))
                elif c == 2:
                    new.add((j, i))
            if _transitive_at(new, j):
                yield from rec(j + 1, new)

    for rel in rec(1, set()):
        yield Poset(k, sorted(rel))


def _transitive_at(less: set[tuple[int, int]], j: int) -> bool:
    for a, b in less:
        for c, e in less:
            if b == c and j in (a, b, e) and (a, e) not in less:
                return False
    return True


# ---------------------------------------------------------------- verification harness


@dataclass
class VerifyReport:
    theorem: str
    ranges: str
    tuples_checked: int = 0
    passed: bool = True
    status: str = "theorem"
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "ranges": self.ranges,
            "tuples_checked": self.tuples_checked,
            "pass": self.passed,
            "status": self.status,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.details:
            out["details"] = self.details
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


_RANGE = re.compile(r"\s*([A-Za-z]\w*)\s*=\s*([^.]+?)\s*\.\.\s*(.+?)\s*$")
_EXPR = re.compile(r"^(?:(-?\d+)|([A-Za-z]\w*)(?:\s*([+-])\s*(\d+))?)$")


def parse_ranges(text: str) -> dict[str, tuple[str, str]]:
    """Parse ``"i=1..6,n=i..6"`` into ``{"i": ("1", "6"), "n": ("i", "6")}``.

    Bounds are integers or ``name``, ``name+k``, ``name-k`` referring to an
    earlier variable.
    """
    out: dict[str, tuple[str, str]] = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        m = _RANGE.match(part)
        if not m:
            raise InvalidArgument(f"bad range {part!r}; expected name=lo..hi")
        name, lo, hi = m.groups()
        if name in out:
            raise InvalidArgument(f"variable {name!r} given twice")
        for e in (lo, hi):
            if not _EXPR.match(e.strip()):
                raise InvalidArgument(f"bad bound {e!r} in {part!r}")
        out[name] = (lo.strip(), hi.strip())
    return out


def _eval(expr: str, env: dict[str, int]) -> int:
    m = _EXPR.match(expr)
    if m is None:
        raise InvalidArgument(f"bad bound {expr!r}")
    if m.group(1) is not None:
        return int(m.group(1))
    name = m.group(2)
    if name not in env:
        raise InvalidArgument(f"bound refers to unknown or later variable {name!r}")
    value = env[name]
    if m.group(3):
        value += int(m.group(4)) if m.group(3) == "+" else -int(m.group(4))
    return value


def _tuples(order: list[str], ranges: dict[str, tuple[str, str]]) -> Iterator[dict[str, int]]:
    def rec(idx: int, env: dict[str, int]) -> Iterator[dict[str, int]]:
        if idx == len(order):
            yield dict(env)
            return
        name = order[idx]
        lo, hi = ranges[name]
        for v in range(_eval(lo, env), _eval(hi, env) + 1):
            env[name] = v
            yield from rec(idx + 1, env)
        env.pop(name, None)

    yield from rec(0, {})


def _x(n: int, *factors: int) -> Monomial:
    """Product of the given 1-based variables, e.g. ``_x(4, 2, 4) = x2*x4``."""
    e = [0] * n
    for i in factors:
        e[i - 1] += 1
    return Monomial(e)


class _Check:
    """Accumulates results for one theorem run; stops at the first mismatch."""

    def __init__(self, report: VerifyReport):
        self.report = report

    def expect(self, ok: bool, **context) -> bool:
        self.report.tuples_checked += 1
        if not ok and self.report.passed:
            self.report.passed = False
            self.report.counterexample = context
        return ok


def _verify_borel_deg2(t: dict, check: _Check) -> None:
    i, n = t["i"], t["n"]
    ideal = borel_closure(n, [_x(n, i, n)])
    brute = delta(ideal)
    formula = borel_deg2_delta(i, n)
    predicted = n <= 3 or i <= 2
    check.expect(
        formula == brute.delta and brute.mu == borel_deg2_mu(i, n)
        and brute.spread == n and (brute.delta == 0) == predicted,
        i=i, n=n, formula=formula, brute_delta=brute.delta, predicted_freiman=predicted,
    )


def _verify_borel_3vars(t: dict, check: _Check) -> None:
    a1, a2, a3 = t["a1"], t["a2"], t["a3"]
    brute = delta(borel_closure(3, [(a1, a2, a3)]))
    formula = borel_3vars_delta(a2, a3)
    predicted = a3 == 1 or (a3 == 2 and a2 == 0)
    check.expect(
        formula == brute.delta and (brute.delta == 0) == predicted,
        a1=a1, a2=a2, a3=a3, formula=formula, brute_delta=brute.delta, predicted_freiman=predicted,
    )


def _verify_thm_maxheight(t: dict, check: _Check) -> None:
    n, d = t["n"], t["d"]
    opts = EnumerationOptions(height_max=True)
    for ideal in enumerate_equigenerated(n, d, opts):
        by_delta = delta(ideal).freiman
        by_reduction = reduction_step_test(ideal, pure_powers(n, d))
        by_class = classify_max_height(ideal).freiman
        if not check.expect(by_delta == by_reduction == by_class,
                            n=n, d=d, generators=ideal.exponent_rows(),
                            delta_freiman=by_delta, reduction=by_reduction, classifier=by_class):
            return


def _verify_hibi(t: dict, check: _Check) -> None:
    p = t["p"]
    count = 0
    for poset in labeled_posets(p):
        count += 1
        predicate, _ = hibi_freiman_predicate(poset)
        h = hibi_ideal(poset)
        rep = delta(h)
        if not check.expect(predicate == rep.freiman and rep.spread == p + 1,
                            size=p, covers=[list(c) for c in poset.covers],
                            predicate=predicate, delta=rep.delta, spread=rep.spread):
            break
    check.report.details.setdefault("posets_by_size", {})[str(p)] = count


def _verify_veronese_squarefree(t: dict, check: _Check) -> None:
    n, d = t["n"], t["d"]
    ideal = squarefree_veronese(n, d)
    rep = delta(ideal)
    predicted = d in (1, n - 1)
    check.expect(
        rep.mu == comb(n, d) and rep.mu2 == squarefree_veronese_mu2(n, d)
        and rep.spread == n and rep.freiman == predicted,
        n=n, d=d, mu=rep.mu, mu2=rep.mu2, formula_mu2=squarefree_veronese_mu2(n, d),
        spread=rep.spread, delta=rep.delta, predicted_freiman=predicted,
    )


def _verify_veronese_topminus1(t: dict, check: _Check) -> None:
    n, d = t["n"], t["d"]
    if n * (d - 1) <= d:
        check.report.details["skipped_invalid_bounds"] = check.report.details.get("skipped_invalid_bounds", 0) + 1
        return
    spec = VeroneseSpec.uniform(n, d, d - 1)
    rep = delta(veronese_type(spec))
    f = veronese_topminus1_f(n, d)
    e = katzman_multiplicity(spec)
    gap = minimal_multiplicity_gap(rep.mu, rep.spread, e)
    predicted = n == 2 or (n == 3 and d == 2)
    check.expect(
        e == d ** (n - 1) - n and gap == f and rep.spread == n
        and (f == 0) == rep.freiman == predicted,
        n=n, d=d, f=f, katzman=e, gap=gap, delta=rep.delta, predicted_freiman=predicted,
    )


def _verify_add_pure_power(t: dict, check: _Check) -> None:
    n, d = t["n"], t["d"]
    for ideal in enumerate_equigenerated(n, d):
        base = delta(ideal)
        bigger = ideal_sum(embed(ideal, n + 1), pure_powers(n + 1, d, [n]))
        ext = delta(bigger)
        if not check.expect(
            base.freiman == ext.freiman and ext.mu2 == base.mu2 + base.mu + 1
            and ext.spread == base.spread + 1,
            n=n, d=d, generators=ideal.exponent_rows(), delta=base.delta, extended_delta=ext.delta,
        ):
            return


def _verify_twovar_product(t: dict, check: _Check) -> None:
    a, r, b, s = t["a"], t["r"], t["b"], t["s"]
    prod = ideal_product(two_var_power_ideal(a, r), two_var_power_ideal(b, s))
    claim = two_var_power_product(a, r, b, s)
    root, _ = frobenius_primitive_root(prod)
    root_deg = root.generators[0].degree
    shaped = root == maximal_ideal_power(2, root_deg)
    if claim is None:
        ok = not shaped
    else:
        ok = prod == two_var_power_ideal(*claim)
    check.expect(ok, a=a, r=r, b=b, s=s, claim=claim, brute_is_power=shaped)


def _verify_maxideal_power(t: dict, check: _Check) -> None:
    n, m = t["n"], t["m"]
    brute = delta(maximal_ideal_power(n, m))
    formula = maxideal_power_delta(n, m)
    predicted = m == 1 or n <= 2 or (n == 3 and m == 2)
    extra = n != 3 or formula == (m - 1) * (m - 2) // 2
    check.expect(formula == brute.delta and (formula == 0) == predicted and extra,
                 n=n, m=m, formula=formula, brute_delta=brute.delta, predicted_freiman=predicted)


def _verify_product_maxheight(t: dict, check: _Check) -> None:
    n, d1, d2 = t["n"], t["d1"], t["d2"]
    opts = EnumerationOptions(height_max=True)
    left = list(enumerate_equigenerated(n, d1, opts))
    right = list(enumerate_equigenerated(n, d2, opts))
    for i in left:
        for j in right:
            verdict, _ = product_freiman_max_height(i, j, cross_check=False)
            brute = delta(ideal_product(i, j)).freiman
            if not check.expect(verdict == brute, n=n, I=i.exponent_rows(), J=j.exponent_rows(),
                                claimed=verdict, brute=brute):
                return


def _verify_conjecture_borel_d3(t: dict, check: _Check) -> None:
    n, d = t["n"], t["d"]
    for u in monomials_of_degree(n, d, range(1, n)):
        brute = delta(borel_closure(n, [u])).freiman
        predicted = u[1] >= d - 1
        if not check.expect(brute == predicted, n=n, d=d, u=list(u),
                            brute_freiman=brute, predicted_freiman=predicted):
            return


@dataclass(frozen=True)
class _Theorem:
    order: tuple[str, ...]
    defaults: dict
    run: Callable[[dict, _Check], None]
    status: str = "theorem"


THEOREMS: dict[str, _Theorem] = {
    "borel-deg2": _Theorem(("i", "n"), {"i": ("1", "6"), "n": ("i", "6")}, _verify_borel_deg2),
    "borel-3vars": _Theorem(("a1", "a2", "a3"), {"a1": ("0", "1"), "a2": ("0", "3"), "a3": ("1", "4")},
                            _verify_borel_3vars),
    "thm-maxheight": _Theorem(("n", "d"), {"n": ("2", "3"), "d": ("2", "3")}, _verify_thm_maxheight),
    "hibi": _Theorem(("p",), {"p": ("1", "4")}, _verify_hibi),
    "veronese-squarefree": _Theorem(("n", "d"), {"n": ("2", "7"), "d": ("1", "n-1")},
                                    _verify_veronese_squarefree),
    "veronese-topminus1": _Theorem(("n", "d"), {"n": ("2", "4"), "d": ("2", "4")}, _verify_veronese_topminus1),
    "add-pure-power": _Theorem(("n", "d"), {"n": ("1", "3"), "d": ("1", "2")}, _verify_add_pure_power),
    "twovar-product": _Theorem(("a", "r", "b", "s"),
                               {"a": ("1", "4"), "r": ("1", "4"), "b": ("1", "4"), "s": ("1", "4")},
                               _verify_twovar_product),
    "maxideal-power": _Theorem(("n", "m"), {"n": ("1", "4"), "m": ("1", "4")}, _verify_maxideal_power),
    "product-maxheight": _Theorem(("n", "d1", "d2"), {"n": ("3", "3"), "d1": ("1", "2"), "d2": ("1", "2")},
                                  _verify_product_maxheight),
    "conjecture-borel-d3": _Theorem(("n", "d"), {"n": ("3", "4"), "d": ("3", "4")},
                                    _verify_conjecture_borel_d3, status="conjecture-evidence"),
}


def verify_theorem(theorem_id: str, ranges: str | dict | None = None) -> VerifyReport:
    """Compare closed-form or structural verdicts with brute force over parameter ranges."""
    if theorem_id not in THEOREMS:
        raise InvalidArgument(f"unknown theorem id {theorem_id!r}; known: {', '.join(sorted(THEOREMS))}")
    thm = THEOREMS[theorem_id]
    given = parse_ranges(ranges) if isinstance(ranges, str) else dict(ranges or {})
    unknown = set(given) - set(thm.order)
    if unknown:
        raise InvalidArgument(f"{theorem_id} has no parameter(s) {sorted(unknown)}; expected {list(thm.order)}")
    merged = {**thm.defaults, **given}
    text = ",".join(f"{k}={merged[k][0]}..{merged[k][1]}" for k in thm.order)
    report = VerifyReport(theorem_id, text, status=thm.status)
    check = _Check(report)
    for t in _tuples(list(thm.order), merged):
        thm.run(t, check)
        if not report.passed:
            break
    return report
