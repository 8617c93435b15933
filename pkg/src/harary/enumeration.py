"""Exhaustive generation of non-isomorphic free trees and class filters.

Free trees are produced as canonical level sequences in the order of Wright,
Richmond, Odlyzko and McKay: each tree is visited once, rooted at its
centroid, so no isomorphism test is needed per tree.  Streams are lazy.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from functools import lru_cache
from itertools import islice
from typing import Iterator

from .errors import InconsistentClass, OutOfRange
from .trees import (
    Tree,
    degree_profile,
    distance_histogram,
    independence_number,
    matching_number,
)

DEFAULT_CAP = 24
CAP_ENV = "HARARY_ENUM_CAP"
FILTER_CHUNK = 1024


def enumeration_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise OutOfRange(f"{CAP_ENV} must be an integer, got {raw!r}") from None


def _check_cap(n: int, override: bool) -> None:
    if n < 1:
        raise OutOfRange(f"tree order must be >= 1, got {n}")
    cap = enumeration_cap()
    if n > cap and not override:
        raise OutOfRange(f"n={n} exceeds the enumeration cap {cap}; pass override=True or raise {CAP_ENV}")


# ---------------------------------------------------------------------------
# Level-sequence generation


def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a rooted level sequence (root at level 0), or None after the last."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    shift = p - q
    for i in range(p, len(out)):
        out[i] = out[i - shift]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """Split at the root's second child: (first subtree re-rooted, the rest)."""
    m = len(seq)
    seen_one = False
    for i in range(1, len(seq)):
        if seq[i] == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [x - 1 for x in seq[1:m]]
    rest = [0] + seq[m:]
    return left, rest


def _next_free(candidate: list[int]) -> list[int] | None:
    """Advance ``candidate`` to the next sequence that is a canonical free tree."""
    left, rest = _split(candidate)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return candidate
    p = len(left)
    nxt = _next_rooted(candidate, p)
    if nxt is not None and candidate[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[len(nxt) - len(tail):] = tail
    return nxt


def level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences of all free trees of order ``n``."""
    if n == 1:
        yield [0]
        return
    if n == 2:
        yield [0, 1]
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        if seq is not None:
            yield seq
            seq = _next_rooted(seq)


def parents_from_levels(levels: list[int]) -> list[int]:
    parents = [-1] * len(levels)
    last_at = [0] * (len(levels) + 1)
    for v, lv in enumerate(levels):
        if v:
            parents[v] = last_at[lv - 1]
        last_at[lv] = v
    return parents


def tree_from_levels(levels: list[int]) -> Tree:
    parents = parents_from_levels(levels)
    return Tree._trusted(len(levels), tuple((parents[v], v) for v in range(1, len(levels))))


def free_trees(n: int, override: bool = False) -> Iterator[Tree]:
    """All free trees of order ``n``, one per isomorphism class, in a fixed order."""
    _check_cap(n, override)
    for levels in level_sequences(n):
        yield tree_from_levels(levels)


@lru_cache(maxsize=None)
def _rooted_counts(n: int) -> tuple[int, ...]:
    # a[k] = number of rooted unlabeled trees on k vertices (Euler transform recurrence)
    a = [0, 1]
    for m in range(1, n):
        s = 0
        for k in range(1, m + 1):
            d_sum = sum(d * a[d] for d in range(1, k + 1) if k % d == 0)
            s += d_sum * a[m - k + 1]
        a.append(s // m)
    return tuple(a)


def count_free_trees(n: int) -> int:
    """Number of free trees of order ``n`` (Otter's formula; nothing is generated)."""
    if n < 1:
        raise OutOfRange(f"tree order must be >= 1, got {n}")
    a = _rooted_counts(n)
    pairs = sum(a[i] * a[n - i] for i in range(1, n))
    if n % 2 == 0:
        pairs -= a[n // 2]
    return a[n] - pairs // 2


def chunked(it, size: int):
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


# ---------------------------------------------------------------------------
# Tree classes

CONSTRAINTS = ("k", "q", "beta", "alpha", "diameter", "radius", "delta")


@dataclass(frozen=True)
class TreeClass:
    """Trees of order ``n`` satisfying every constraint that is not None.

    ``k`` pendent vertices, ``q`` vertices of degree two, matching number
    ``beta``, independence number ``alpha``, ``diameter``, ``radius`` and
    maximum degree ``delta``.
    """

    n: int
    k: int | None = None
    q: int | None = None
    beta: int | None = None
    alpha: int | None = None
    diameter: int | None = None
    radius: int | None = None
    delta: int | None = None

    def constraints(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)
                if f.name != "n" and getattr(self, f.name) is not None}

    def label(self) -> str:
        parts = [f"n={self.n}"] + [f"{k}={v}" for k, v in self.constraints().items()]
        return ",".join(parts)

    def validate(self) -> None:
        n = self.n
        if n < 1:
            raise InconsistentClass(f"n must be >= 1, got {n}")
        ranges = {
            "k": (2, n - 1) if n >= 3 else (2, 2) if n == 2 else (0, 0),
            "q": (0, max(n - 2, 0)),
            "beta": (0 if n == 1 else 1, n // 2),
            "alpha": ((n + 1) // 2, max(n - 1, 1)),
            "diameter": (0 if n == 1 else 1 if n == 2 else 2, n - 1),
            "radius": (0 if n == 1 else 1, n // 2),
            "delta": (0 if n == 1 else 1 if n == 2 else 2, n - 1),
        }
        for name, value in self.constraints().items():
            lo, hi = ranges[name]
            if not lo <= value <= hi:
                raise InconsistentClass(f"{name}={value} outside {lo}..{hi} for n={n}")
        d, r = self.diameter, self.radius
        if d is not None and r is not None and r != (d + 1) // 2:
            raise InconsistentClass(f"radius {r} incompatible with diameter {d}")
        if self.beta is not None and self.alpha is not None and self.alpha + self.beta != n:
            raise InconsistentClass(f"alpha + beta must equal n on trees")


@dataclass(frozen=True)
class TreeRecord:
    """Invariants of one tree needed by class filters and scans."""

    tree: Tree
    hist: tuple[int, ...]
    k: int
    q: int
    delta: int
    diameter: int
    radius: int
    beta: int
    alpha: int


def tree_record(t: Tree) -> TreeRecord:
    hist = tuple(distance_histogram(t))
    prof = degree_profile(t)
    diam = len(hist) - 1
    beta = matching_number(t)
    return TreeRecord(
        tree=t,
        hist=hist,
        k=prof.pendent_count if t.n > 1 else 0,
        q=prof.degree_two_count,
        delta=prof.max_degree,
        diameter=diam,
        radius=(diam + 1) // 2,
        beta=beta,
        alpha=independence_number(t),
    )


def record_matches(rec: TreeRecord, c: TreeClass) -> bool:
    for name, value in c.constraints().items():
        if getattr(rec, name) != value:
            return False
    return True


def _filter_chunk(args) -> list[list[int]]:
    c, chunk = args
    return [lv for lv in chunk if record_matches(tree_record(tree_from_levels(lv)), c)]


def trees_in_class(c: TreeClass, override: bool = False, workers: int = 1) -> Iterator[Tree]:
    """Members of ``c`` in generation order; chunks are filtered in parallel when ``workers > 1``."""
    c.validate()
    _check_cap(c.n, override)
    jobs = ((c, chunk) for chunk in chunked(level_sequences(c.n), FILTER_CHUNK))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for kept in ex.map(_filter_chunk, jobs):
                yield from map(tree_from_levels, kept)
    else:
        for job in jobs:
            yield from map(tree_from_levels, _filter_chunk(job))
