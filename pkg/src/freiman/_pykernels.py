"""Pure-Python reference kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and results.  Rows are tuples of non-negative ints, all of one length.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Row = tuple


def _add(u: Row, v: Row) -> Row:
    return tuple(a + b for a, b in zip(u, v))


def sumset(a: Sequence[Row], b: Sequence[Row]) -> list[Row]:
    """Distinct pairwise sums ``u + v`` for ``u`` in ``a``, ``v`` in ``b`` (unordered)."""
    return list({_add(u, v) for u in a for v in b})


def sumset_size(a: Sequence[Row], b: Sequence[Row]) -> int:
    return len({_add(u, v) for u in a for v in b})


def power_sizes(rows: Sequence[Row], k_max: int) -> list[int]:
    """Sizes of the k-fold sumsets of ``rows`` for k = 1..k_max."""
    gens = set(rows)
    current = set(gens)
    sizes = []
    for k in range(1, k_max + 1):
        if k > 1:
            current = {_add(u, v) for u in current for v in gens}
        sizes.append(len(current))
    return sizes


def _divides(u: Row, v: Row) -> bool:
    return all(a <= b for a, b in zip(u, v))


def minimal_rows(rows: Iterable[Row]) -> list[Row]:
    """Drop duplicates and rows that componentwise dominate another row."""
    # Sorting by total degree means a divisor is always seen before its multiples.
    cand = sorted(set(rows), key=sum)
    kept: list[Row] = []
    for v in cand:
        if not any(_divides(u, v) for u in kept):
            kept.append(v)
    return kept


def rank(rows: Sequence[Row]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        top = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * top[j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r
