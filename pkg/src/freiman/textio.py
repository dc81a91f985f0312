"""Text formats for monomials, ideals and posets.

Monomial lines look like ``x1^2 x3`` or ``x1*x2`` (variables are 1-based),
or a raw exponent vector ``[2,0,1]``.  ``#`` starts a comment; blank lines
are skipped.  Poset files start with ``elements: k`` followed by relations
``p < q`` (chains such as ``1 < 2 < 3`` are accepted).
"""

from __future__ import annotations

import re
from typing import Sequence

from .errors import InvalidArgument, ParseError
from .ideal import Monomial, MonomialIdeal

_TOKEN = re.compile(r"x(\d+)(?:\^(\d+))?$")
_BRACKET = re.compile(r"\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_terms(text: str, line: int | None) -> dict[int, int] | list[int]:
    text = text.strip()
    m = _BRACKET.match(text)
    if m:
        return [int(t) for t in m.group(1).split(",")]
    if text.startswith("["):
        raise ParseError(f"malformed exponent vector {text!r}", line)
    exps: dict[int, int] = {}
    tokens = [t for t in re.split(r"[\s*]+", text) if t]
    if not tokens:
        raise ParseError("empty monomial", line)
    for tok in tokens:
        tm = _TOKEN.match(tok)
        if not tm:
            raise ParseError(f"bad monomial token {tok!r}", line)
        var = int(tm.group(1))
        power = int(tm.group(2)) if tm.group(2) is not None else 1
        if var < 1:
            raise ParseError(f"variable indices start at 1, got {tok!r}", line)
        if power < 1:
            raise ParseError(f"exponent must be positive in {tok!r}", line)
        exps[var] = exps.get(var, 0) + power
    return exps


def _assemble(parsed: list[tuple[int | None, dict[int, int] | list[int]]],
              n: int | None) -> list[Monomial]:
    vec_lens = {len(p) for _, p in parsed if isinstance(p, list)}
    max_var = max((max(p) for _, p in parsed if isinstance(p, dict)), default=0)
    if len(vec_lens) > 1:
        raise ParseError(f"exponent vectors of different lengths {sorted(vec_lens)}")
    if n is None:
        n = vec_lens.pop() if vec_lens else max_var
    elif vec_lens and vec_lens != {n}:
        raise ParseError(f"exponent vector length {vec_lens.pop()} does not match n={n}")
    if max_var > n:
        raise ParseError(f"variable x{max_var} exceeds ambient n={n}")
    out = []
    for line, p in parsed:
        if isinstance(p, list):
            if len(p) != n:
                raise ParseError(f"exponent vector length {len(p)} does not match n={n}", line)
            out.append(Monomial(p))
        else:
            e = [0] * n
            for var, power in p.items():
                e[var - 1] = power
            out.append(Monomial(e))
    return out


def parse_monomial(text: str, n: int | None = None) -> Monomial:
    """Parse one monomial; ``n`` defaults to the largest variable index used."""
    return _assemble([(None, _parse_terms(_strip(text), None))], n)[0]


def parse_monomials(text: str, n: int | None = None) -> list[Monomial]:
    parsed = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip(raw)
        if body:
            parsed.append((lineno, _parse_terms(body, lineno)))
    if not parsed:
        raise ParseError("no monomials found")
    return _assemble(parsed, n)


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    gens = parse_monomials(text, n)
    try:
        return MonomialIdeal(len(gens[0]), gens)
    except InvalidArgument as exc:
        raise ParseError(str(exc)) from exc


def format_monomial(m: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(ideal: MonomialIdeal) -> str:
    """One generator per line; re-parses to an equal ideal via ``parse_ideal(text, ideal.n)``."""
    return "\n".join(format_monomial(g) for g in ideal) + "\n"


def parse_poset(text: str):
    """Parse the poset file format into a :class:`~freiman.families.Poset`."""
    from .families import Poset

    size = None
    relations: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip(raw)
        if not body:
            continue
        if size is None:
            m = re.fullmatch(r"elements\s*:\s*(\d+)", body)
            if not m:
                raise ParseError("expected 'elements: k' header", lineno)
            size = int(m.group(1))
            if size < 1:
                raise ParseError("a poset needs at least one element", lineno)
            continue
        parts = [p.strip() for p in body.split("<")]
        if len(parts) < 2 or not all(re.fullmatch(r"\d+", p) for p in parts):
            raise ParseError(f"expected relation 'p < q', got {body!r}", lineno)
        labels = [int(p) for p in parts]
        for lab in labels:
            if not 1 <= lab <= size:
                raise ParseError(f"label {lab} outside 1..{size}", lineno)
        for a, b in zip(labels, labels[1:]):
            if a == b:
                raise ParseError(f"relation {a} < {a} is reflexive", lineno)
            relations.append((a, b))
    if size is None:
        raise ParseError("missing 'elements: k' header")
    try:
        return Poset(size, relations)
    except InvalidArgument as exc:
        raise ParseError(str(exc)) from exc


def format_poset(poset) -> str:
    lines = [f"elements: {poset.size}"]
    lines += [f"{p} < {q}" for p, q in poset.covers]
    return "\n".join(lines) + "\n"
