"""Constructors for the named tree families.

Labeling conventions (fixed so examples are reproducible):

* path(n): ``0-1-...-(n-1)``; vertex 0 is an end.
* star(n): hub 0, leaves ``1..n-1``.
* starlike(lengths): branching vertex 0, then each pendant path in turn,
  numbered outward from the branching vertex.
* balanced_starlike(n, k): starlike with :func:`balanced_lengths`, longer paths first.
* broom(n, delta): hub 0 with leaves ``1..delta``; the handle continues from
  vertex 1 through ``delta+1..n-1``.
* spur(n, m): center 0, first level ``1..m``, second-level leaf ``m+j`` hangs
  from ``j`` for ``j = 1..n-m-1``.
* caterpillar / pinned_caterpillar: spine ``v_0..v_d`` is ``0..d``, pendants follow.
* volkmann(n, delta): breadth-first fill; the root takes ``delta`` children,
  every later vertex up to ``delta-1``, each parent filled before the next.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import BadSpec, IdentityViolated, OutOfRange
from .trees import Tree, canonical_code


def path(n: int) -> Tree:
    if n < 1:
        raise BadSpec(f"path needs n >= 1, got {n}")
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Tree:
    if n < 1:
        raise BadSpec(f"star needs n >= 1, got {n}")
    return Tree(n, tuple((0, i) for i in range(1, n)))


def _spider(lengths: Sequence[int]) -> Tree:
    edges = []
    nxt = 1
    for length in lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, tuple(edges))


def starlike(lengths: Sequence[int], allow_path: bool = False) -> Tree:
    """S(n_1, ..., n_k) for non-increasing lengths; ``k = 2`` only with ``allow_path``."""
    lengths = tuple(lengths)
    if any(not isinstance(x, int) or x < 1 for x in lengths):
        raise BadSpec(f"path lengths must be positive integers, got {lengths}")
    if list(lengths) != sorted(lengths, reverse=True):
        raise BadSpec(f"path lengths must be non-increasing, got {lengths}")
    if len(lengths) < 3 and not (allow_path and len(lengths) >= 1):
        raise BadSpec(f"a starlike tree needs at least 3 paths, got {len(lengths)}")
    return _spider(lengths)


def balanced_lengths(n: int, k: int) -> tuple[int, ...]:
    """Split ``n - 1`` into ``k`` parts differing by at most one, larger parts first."""
    if not 2 <= k <= n - 1:
        raise OutOfRange(f"balanced lengths need 2 <= k <= n-1, got n={n}, k={k}")
    q, r = divmod(n - 1, k)
    return (q + 1,) * r + (q,) * (k - r)


def balanced_starlike(n: int, k: int) -> Tree:
    if not 2 <= k <= n - 1:
        raise BadSpec(f"BS(n, k) needs 2 <= k <= n-1, got n={n}, k={k}")
    return _spider(balanced_lengths(n, k))


def broom(n: int, delta: int) -> Tree:
    if not 2 <= delta <= n - 1:
        raise BadSpec(f"broom needs 2 <= delta <= n-1, got n={n}, delta={delta}")
    edges = [(0, i) for i in range(1, delta + 1)]
    prev = 1
    for v in range(delta + 1, n):
        edges.append((prev, v))
        prev = v
    return Tree(n, tuple(edges))


def spur(n: int, m: int) -> Tree:
    # Accepts the boundary m = (n-1)/2 as well as the strict range.
    if n < 1 or not (n - 1 <= 2 * m and m <= n - 1):
        raise BadSpec(f"spur needs (n-1)/2 <= m <= n-1, got n={n}, m={m}")
    edges = [(0, i) for i in range(1, m + 1)]
    edges += [(j, m + j) for j in range(1, n - m)]
    return Tree(n, tuple(edges))


def caterpillar(d: int, pendants: Sequence[int]) -> Tree:
    """C_{n,d}(p_1..p_{d-1}): spine of length ``d`` with ``p_i`` leaves at spine vertex ``i``."""
    pendants = tuple(pendants)
    if d < 1:
        raise BadSpec(f"caterpillar needs d >= 1, got {d}")
    if len(pendants) != d - 1:
        raise BadSpec(f"caterpillar of diameter {d} needs {d - 1} pendant counts, got {len(pendants)}")
    if any(p < 0 for p in pendants):
        raise BadSpec(f"pendant counts must be >= 0, got {pendants}")
    edges = [(i, i + 1) for i in range(d)]
    nxt = d + 1
    for i, p in enumerate(pendants, 1):
        for _ in range(p):
            edges.append((i, nxt))
            nxt += 1
    return Tree(nxt, tuple(edges))


def pinned_caterpillar(n: int, d: int, i: int) -> Tree:
    """C_{n,d,i}: all ``n - d - 1`` pendants on spine vertex ``i``."""
    if d < 2 or not 1 <= i <= d - 1:
        raise BadSpec(f"pinned caterpillar needs d >= 2 and 1 <= i <= d-1, got d={d}, i={i}")
    if n < d + 1:
        raise BadSpec(f"pinned caterpillar needs n >= d+1, got n={n}, d={d}")
    pendants = [0] * (d - 1)
    pendants[i - 1] = n - d - 1
    return caterpillar(d, pendants)


def volkmann(n: int, delta: int) -> Tree:
    if not 2 <= delta <= n - 1:
        raise BadSpec(f"Volkmann tree needs 2 <= delta <= n-1, got n={n}, delta={delta}")
    edges = []
    parent = 0
    room = delta
    for v in range(1, n):
        while room == 0:
            parent += 1
            room = delta - 1
        edges.append((parent, v))
        room -= 1
    return Tree(n, tuple(edges))


def volkmann_height(n: int, delta: int) -> int:
    """Depth of the deepest vertex of :func:`volkmann` below its root."""
    if n == 1:
        return 0
    height, level, total = 1, delta, 1 + delta
    while total < n:
        level *= delta - 1
        total += level
        height += 1
    return height


# ---------------------------------------------------------------------------
# Tagged family descriptions


_BUILDERS = {
    "path": (path, ("n",)),
    "star": (star, ("n",)),
    "starlike": (starlike, ("lengths",)),
    "balanced-starlike": (balanced_starlike, ("n", "k")),
    "broom": (broom, ("n", "delta")),
    "spur": (spur, ("n", "m")),
    "caterpillar": (caterpillar, ("d", "pendants")),
    "pinned-caterpillar": (pinned_caterpillar, ("n", "d", "i")),
    "volkmann": (volkmann, ("n", "delta")),
}

FAMILY_KINDS = tuple(_BUILDERS)


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its parameters, e.g. ``FamilySpec("spur", {"n": 13, "m": 7})``."""

    kind: str
    params: dict[str, Any] = field(default_factory=dict, hash=False)

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.kind}({args})"


def make_family(spec: FamilySpec) -> Tree:
    try:
        builder, names = _BUILDERS[spec.kind]
    except KeyError:
        raise BadSpec(f"unknown family {spec.kind!r}; expected one of {', '.join(FAMILY_KINDS)}") from None
    missing = [p for p in names if spec.params.get(p) is None]
    if missing:
        raise BadSpec(f"family {spec.kind} needs parameter(s) {', '.join(missing)}")
    extra = set(spec.params) - set(names)
    if extra:
        raise BadSpec(f"family {spec.kind} does not take {', '.join(sorted(extra))}")
    try:
        return builder(*(spec.params[p] for p in names))
    except OutOfRange as e:
        raise BadSpec(str(e)) from None


def family_identities_check(n: int) -> list[tuple[str, str]]:
    """Check the isomorphisms between families of order ``n``.

    Returns the list of (left, right) pairs that were compared; raises
    :class:`IdentityViolated` on the first pair whose canonical codes differ.
    """
    if n < 4:
        raise OutOfRange(f"identity check needs n >= 4, got {n}")
    pairs: list[tuple[str, Tree, str, Tree]] = []
    for m in range(n // 2, n):
        if 2 * m > n - 1:
            pairs.append((f"A({n},{m})", spur(n, m), f"BS({n},{m})", balanced_starlike(n, m)))
    pairs += [
        (f"BS({n},2)", balanced_starlike(n, 2), f"P({n})", path(n)),
        (f"BS({n},{n - 1})", balanced_starlike(n, n - 1), f"S({n})", star(n)),
        (f"B({n},2)", broom(n, 2), f"P({n})", path(n)),
        (f"B({n},{n - 1})", broom(n, n - 1), f"S({n})", star(n)),
    ]
    checked = []
    for lname, left, rname, right in pairs:
        if canonical_code(left) != canonical_code(right):
            raise IdentityViolated(f"{lname} is not isomorphic to {rname}", lname, rname)
        checked.append((lname, rname))
    return checked
