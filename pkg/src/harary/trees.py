"""Tree representation, distances, structural invariants and canonical codes.

Vertices are dense integer labels ``0..n-1``.  A :class:`Tree` is immutable and
validated on construction; every function here is a pure function of it.

Canonical codes use AHU balanced-parenthesis strings: a rooted tree is encoded
as ``"(" + sorted child codes + ")"``.  The free tree is rooted at its center;
when the center is an edge, both endpoints are tried and the lexicographically
smaller code is kept.  The code therefore always has exactly ``2n`` characters.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

from .errors import BadLabel, InternalInconsistency, NotATree, ParseError


@dataclass(frozen=True)
class Tree:
    """A labeled tree on ``n`` vertices given by its ``n - 1`` edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @classmethod
    def _trusted(cls, n: int, edges: tuple[tuple[int, int], ...]) -> "Tree":
        # Skips validation; only for generators that produce trees by construction.
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "edges", edges)
        return t

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Return the tree with every vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise BadLabel("relabeling must be a permutation of 0..n-1")
        return Tree(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={list(self.edges)})"


def _normalize_edges(n, edges) -> tuple[tuple[int, int], ...]:
    if not isinstance(n, int) or n < 1:
        raise NotATree(f"vertex count must be a positive integer, got {n!r}")
    out = []
    for pair in edges:
        u, v = pair
        for x in (u, v):
            if not isinstance(x, int) or not 0 <= x < n:
                raise BadLabel(f"vertex {x!r} outside 0..{n - 1}")
        if u == v:
            raise NotATree(f"self-loop at {u}")
        out.append((u, v) if u < v else (v, u))
    if len(set(out)) != len(out):
        dup = next(e for e, c in Counter(out).items() if c > 1)
        raise NotATree(f"duplicate edge {dup}")
    if len(out) != n - 1:
        raise NotATree(f"a tree on {n} vertices has {n - 1} edges, got {len(out)}")
    root = list(range(n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for u, v in out:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise NotATree(f"edge {(u, v)} closes a cycle")
        root[ru] = rv
    # n - 1 edges and no cycle imply connectivity.
    return tuple(out)


def build_tree(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Validate ``edges`` and return the tree they span."""
    return Tree(n, tuple(tuple(e) for e in edges))


def tree_from_parents(parents: Sequence[int]) -> Tree:
    """Build a tree from a parent array where ``parents[0]`` is ignored (root)."""
    return Tree(len(parents), tuple((parents[v], v) for v in range(1, len(parents))))


# ---------------------------------------------------------------------------
# Distances


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[int, ...], ...]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.d[u]

    def pair_counts(self) -> Counter:
        """Number of unordered pairs at each distance."""
        c: Counter = Counter()
        for u in range(self.n):
            row = self.d[u]
            for v in range(u + 1, self.n):
                c[row[v]] += 1
        return c


def bfs_distances(t: Tree, source: int) -> list[int]:
    dist = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    adj = t.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def distances(t: Tree) -> DistanceMatrix:
    """All-pairs hop distances, one breadth-first search per vertex."""
    return DistanceMatrix(t.n, tuple(tuple(bfs_distances(t, s)) for s in range(t.n)))


def _rooted(adj, root: int = 0) -> tuple[list[int], list[int]]:
    """Breadth-first order and parent array of ``adj`` rooted at ``root``."""
    parent = [-1] * len(adj)
    order = [root]
    parent[root] = root
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in adj[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
    parent[root] = -1
    return order, parent


def distance_histogram(t: Tree) -> list[int]:
    """``hist[k]`` = number of unordered vertex pairs at distance ``k``.

    Computed bottom-up: every pair is counted once at its lowest common
    ancestor by convolving the depth profiles of the subtrees being merged.
    """
    n = t.n
    hist = [0] * n
    if n == 1:
        return hist
    order, parent = _rooted(t.adj)
    prof: list[list[int] | None] = [None] * n
    for v in reversed(order):
        pv = prof[v]
        if pv is None:
            pv = [1]
        p = parent[v]
        if p < 0:
            break
        pp = prof[p]
        if pp is None:
            pp = prof[p] = [1]
        # pair (x below p at depth i, y below v at depth j) is at distance i + j + 1
        for i, a in enumerate(pp):
            if a:
                for j, b in enumerate(pv, i + 1):
                    hist[j] += a * b
        if len(pp) < len(pv) + 1:
            pp.extend([0] * (len(pv) + 1 - len(pp)))
        for j, b in enumerate(pv, 1):
            pp[j] += b
        prof[v] = None
    while len(hist) > 1 and hist[-1] == 0:
        hist.pop()
    return hist


# ---------------------------------------------------------------------------
# Degrees and metric profile


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    pendent_count: int
    degree_two_count: int
    max_degree: int


def degree_profile(t: Tree) -> DegreeProfile:
    degs = tuple(len(a) for a in t.adj)
    return DegreeProfile(
        degrees=degs,
        pendent_count=sum(1 for d in degs if d == 1),
        degree_two_count=sum(1 for d in degs if d == 2),
        max_degree=max(degs),
    )


@dataclass(frozen=True)
class MetricProfile:
    eccentricity: tuple[int, ...]
    diameter: int
    radius: int
    centers: tuple[int, ...]


def metric_profile(t: Tree, dm: DistanceMatrix | None = None) -> MetricProfile:
    if dm is None:
        dm = distances(t)
    ecc = tuple(max(row) for row in dm.d)
    r = min(ecc)
    return MetricProfile(
        eccentricity=ecc,
        diameter=max(ecc),
        radius=r,
        centers=tuple(v for v in range(t.n) if ecc[v] == r),
    )


def centers(t: Tree) -> tuple[int, ...]:
    """Center vertices found by repeatedly stripping all leaves."""
    n = t.n
    if n <= 2:
        return tuple(range(n))
    deg = [len(a) for a in t.adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


# ---------------------------------------------------------------------------
# Matching and independence


def matching_number(t: Tree) -> int:
    """Maximum matching size by leaf stripping (match each leaf to its neighbour)."""
    order, parent = _rooted(t.adj)
    matched = [False] * t.n
    size = 0
    for v in reversed(order):
        p = parent[v]
        if p >= 0 and not matched[v] and not matched[p]:
            matched[v] = matched[p] = True
            size += 1
    return size


def independence_number(t: Tree) -> int:
    """Maximum independent set size by subtree DP, cross-checked against ``n - matching``."""
    order, parent = _rooted(t.adj)
    take = [1] * t.n
    skip = [0] * t.n
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            take[p] += skip[v]
            skip[p] += max(take[v], skip[v])
    alpha = max(take[0], skip[0])
    beta = matching_number(t)
    if alpha != t.n - beta:
        raise InternalInconsistency(
            f"independence DP gives {alpha} but n - matching = {t.n - beta}"
        )
    return alpha


# ---------------------------------------------------------------------------
# Canonical codes


def _rooted_codes(adj, root: int, banned: int = -1) -> list[str | None]:
    """AHU code of every vertex in the component of ``root`` (avoiding ``banned``)."""
    n = len(adj)
    parent = [-1] * n
    parent[root] = root
    order = [root]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in adj[u]:
            if w != banned and parent[w] < 0:
                parent[w] = u
                order.append(w)
    kids: list[list[str]] = [[] for _ in range(n)]
    code: list[str | None] = [None] * n
    for v in reversed(order):
        kv = kids[v]
        kv.sort()
        c = "(" + "".join(kv) + ")"
        code[v] = c
        if v != root:
            kids[parent[v]].append(c)
    return code


def rooted_code(t: Tree, root: int) -> str:
    return _rooted_codes(t.adj, root)[root]


def canonical_code(t: Tree) -> str:
    """Isomorphism-invariant code of length ``2n``; see module docstring."""
    return min(rooted_code(t, c) for c in centers(t))


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_code(a) == canonical_code(b)


def _rooted_automorphisms(adj, root: int, banned: int = -1) -> tuple[int, str]:
    n = len(adj)
    parent = [-1] * n
    parent[root] = root
    order = [root]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in adj[u]:
            if w != banned and parent[w] < 0:
                parent[w] = u
                order.append(w)
    kids: list[list[str]] = [[] for _ in range(n)]
    aut = [1] * n
    code = ""
    for v in reversed(order):
        kv = kids[v]
        kv.sort()
        for mult in Counter(kv).values():
            aut[v] *= factorial(mult)
        code = "(" + "".join(kv) + ")"
        if v != root:
            kids[parent[v]].append(code)
            aut[parent[v]] *= aut[v]
    return aut[root], code


def automorphism_count(t: Tree) -> int:
    """Order of the automorphism group of the free tree."""
    cs = centers(t)
    if len(cs) == 1:
        return _rooted_automorphisms(t.adj, cs[0])[0]
    a, b = cs
    aut_a, code_a = _rooted_automorphisms(t.adj, a, banned=b)
    aut_b, code_b = _rooted_automorphisms(t.adj, b, banned=a)
    return aut_a * aut_b * (2 if code_a == code_b else 1)


# ---------------------------------------------------------------------------
# Edge-list wire format


def format_edge_list(t: Tree) -> str:
    lines = [str(t.n)] + [f"{u} {v}" for u, v in t.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Tree:
    """Parse ``n`` followed by ``n - 1`` lines ``u v``; blank lines are ignored."""
    rows = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    rows = [(i, ln) for i, ln in rows if ln]
    if not rows:
        raise ParseError("empty input", line=1)
    first_line, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected vertex count, got {head!r}", line=first_line) from None
    if n < 1:
        raise ParseError(f"vertex count must be positive, got {n}", line=first_line)
    edges = []
    for lineno, ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}", line=lineno)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer vertex in {ln!r}", line=lineno) from None
    return build_tree(n, edges)
