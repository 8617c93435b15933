"""Harary-monotone tree transformations and majorization of path-length partitions."""

from __future__ import annotations

from itertools import accumulate
from typing import Sequence

from .errors import (
    AtBottom,
    BadVertex,
    LengthMismatch,
    NotApplicable,
    SumMismatch,
)
from .trees import Tree

Partition = tuple[int, ...]


def pendant_path(t: Tree, v: int, first: int) -> list[int] | None:
    """Vertices of the pendant path leaving ``v`` through neighbour ``first``.

    Returns ``[first, ..., leaf]`` when every vertex after ``v`` has degree two
    except the final leaf, otherwise None.
    """
    adj = t.adj
    walk = [first]
    prev, cur = v, first
    while True:
        deg = len(adj[cur])
        if deg == 1:
            return walk
        if deg != 2:
            return None
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
        walk.append(cur)


def _rebuild(t: Tree, remove: set, add: list) -> Tree:
    keep = [e for e in t.edges if e not in remove]
    return Tree(t.n, tuple(keep + add))


def delta_transform(t: Tree, v: int, w: int | None = None) -> Tree:
    """Move all but one pendant path at ``v`` over to ``v``'s remaining neighbour ``w``.

    ``v`` must have degree ``m + 1`` (``m >= 2``) where ``m`` neighbours start
    pendant paths.  If ``w`` is omitted it is the unique neighbour that does
    not start a pendant path; when every neighbour does, the one with the
    longest path (then the smallest label) is taken.  The path that stays at
    ``v`` is a longest one (largest label on ties).
    """
    if not 0 <= v < t.n:
        raise BadVertex(f"vertex {v} not in tree of order {t.n}")
    nbrs = t.adj[v]
    if len(nbrs) < 3:
        raise NotApplicable(f"vertex {v} has degree {len(nbrs)}, needs at least 3")
    paths = {u: pendant_path(t, v, u) for u in nbrs}
    if w is None:
        non_path = [u for u in nbrs if paths[u] is None]
        if len(non_path) > 1:
            raise NotApplicable(f"vertex {v} has {len(non_path)} neighbours that are not pendant paths")
        if non_path:
            w = non_path[0]
        else:
            w = min(nbrs, key=lambda u: (-len(paths[u]), u))
    elif w not in nbrs:
        raise NotApplicable(f"{w} is not a neighbour of {v}")
    movable = [u for u in nbrs if u != w]
    if any(paths[u] is None for u in movable):
        raise NotApplicable(f"not every neighbour of {v} other than {w} starts a pendant path")
    movable.sort(key=lambda u: (len(paths[u]), u))
    moving = movable[:-1]
    remove = {(min(v, u), max(v, u)) for u in moving}
    return _rebuild(t, remove, [(w, u) for u in moving])


def _path_to(t: Tree, u: int, end: int) -> list[int]:
    """Pendant path from ``u`` to leaf ``end`` as ``[u, ..., end]``."""
    if not 0 <= end < t.n:
        raise BadVertex(f"vertex {end} not in tree of order {t.n}")
    if len(t.adj[end]) != 1:
        raise NotApplicable(f"{end} is not a leaf")
    walk = [end]
    prev, cur = -1, end
    while cur != u:
        if cur != end and len(t.adj[cur]) != 2:
            raise NotApplicable(f"the path from {end} meets vertex {cur} of degree {len(t.adj[cur])} before {u}")
        cur, prev = next(x for x in t.adj[cur] if x != prev), cur
        walk.append(cur)
    return walk[::-1]


def path_shift(t: Tree, u: int, long_end: int, short_end: int) -> Tree:
    """Move one vertex from the shorter pendant path at ``u`` to the end of the longer one.

    The paths end at leaves ``long_end`` and ``short_end`` and must leave ``u``
    through different neighbours, with lengths ``k >= m >= 1``.
    """
    if not 0 <= u < t.n:
        raise BadVertex(f"vertex {u} not in tree of order {t.n}")
    if long_end == short_end:
        raise NotApplicable("the two path ends coincide")
    if u in (long_end, short_end):
        raise NotApplicable("path ends must differ from the attachment vertex")
    long_path = _path_to(t, u, long_end)
    short_path = _path_to(t, u, short_end)
    if long_path[1] == short_path[1]:
        raise NotApplicable("both paths leave through the same neighbour")
    k, m = len(long_path) - 1, len(short_path) - 1
    if k < m:
        raise NotApplicable(f"long path has length {k} < short path length {m}")
    leaf, stem = short_path[-1], short_path[-2]
    return _rebuild(t, {(min(leaf, stem), max(leaf, stem))}, [(long_end, leaf)])


def attach(base: Tree, u: int, sub: Tree, root: int) -> Tree:
    """Glue ``sub`` onto ``base`` by identifying ``sub``'s ``root`` with ``base``'s ``u``.

    Base labels are kept; the other vertices of ``sub`` follow in label order.
    """
    if not 0 <= u < base.n:
        raise BadVertex(f"vertex {u} not in base tree of order {base.n}")
    if not 0 <= root < sub.n:
        raise BadVertex(f"vertex {root} not in attached tree of order {sub.n}")
    relabel = {}
    nxt = base.n
    for x in range(sub.n):
        if x == root:
            relabel[x] = u
        else:
            relabel[x] = nxt
            nxt += 1
    edges = list(base.edges) + [(relabel[a], relabel[b]) for a, b in sub.edges]
    return Tree(nxt, tuple(edges))


# ---------------------------------------------------------------------------
# Majorization


def _as_partition(x: Sequence[int]) -> Partition:
    x = tuple(x)
    if any(a < 1 for a in x) or list(x) != sorted(x, reverse=True):
        raise ValueError(f"partition must be non-increasing positive integers, got {x}")
    return x


def majorizes(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff every prefix sum of ``x`` is at least the matching prefix sum of ``y``."""
    x, y = _as_partition(x), _as_partition(y)
    if len(x) != len(y):
        raise LengthMismatch(f"lengths differ: {len(x)} vs {len(y)}")
    if sum(x) != sum(y):
        raise SumMismatch(f"sums differ: {sum(x)} vs {sum(y)}")
    return all(a >= b for a, b in zip(accumulate(x), accumulate(y)))


def majorization_step(q: Sequence[int]) -> Partition:
    """Move one unit from the last copy of the largest part to the first copy of the smallest."""
    q = list(_as_partition(q))
    if q[0] - q[-1] <= 1:
        raise AtBottom(f"{tuple(q)} is balanced")
    s = max(i for i in range(len(q)) if q[i] == q[0])
    r = min(i for i in range(len(q)) if q[i] == q[-1])
    q[s] -= 1
    q[r] += 1
    return tuple(sorted(q, reverse=True))


def partitions(total: int, parts: int, largest: int | None = None):
    """Non-increasing partitions of ``total`` into exactly ``parts`` positive parts."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    lo = -(-total // parts)
    for first in range(min(largest, total - parts + 1), lo - 1, -1):
        for rest in partitions(total - first, parts - 1, first):
            yield (first,) + rest
