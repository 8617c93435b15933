"""Harary and Wiener indices, harmonic numbers and closed-form index values.

All values are exact: :class:`fractions.Fraction` for rationals, ``int`` for
Wiener indices.  Floats appear only in :func:`approx`, which is for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import OutOfRange
from .trees import DistanceMatrix, Tree, distance_histogram, distances

Rational = Fraction


def harary_index(t: Tree, dm: DistanceMatrix | None = None) -> Fraction:
    """Sum of ``1/d(u, v)`` over unordered pairs of distinct vertices."""
    if dm is None:
        dm = distances(t)
    return sum((Fraction(c, d) for d, c in dm.pair_counts().items()), Fraction(0))


def wiener_index(t: Tree, dm: DistanceMatrix | None = None) -> int:
    if dm is None:
        dm = distances(t)
    return sum(d * c for d, c in dm.pair_counts().items())


@lru_cache(maxsize=None)
def distance_lcm(n: int) -> int:
    """lcm(1, ..., n-1): a common denominator for the Harary index of any n-vertex tree."""
    return lcm(*range(1, max(n, 2)))


def scaled_harary(hist: list[int], n: int) -> int:
    """Harary index times :func:`distance_lcm`, an integer comparable without fractions."""
    scale = distance_lcm(n)
    return sum(c * (scale // d) for d, c in enumerate(hist) if d and c)


def harary_from_histogram(hist: list[int]) -> Fraction:
    return sum((Fraction(c, d) for d, c in enumerate(hist) if d and c), Fraction(0))


def wiener_from_histogram(hist: list[int]) -> int:
    return sum(d * c for d, c in enumerate(hist))


def harary_fast(t: Tree) -> Fraction:
    """Harary index via the subtree-convolution distance histogram."""
    return harary_from_histogram(distance_histogram(t))


@lru_cache(maxsize=None)
def harmonic(k: int) -> Fraction:
    if k < 0:
        raise OutOfRange(f"harmonic number needs k >= 0, got {k}")
    return sum((Fraction(1, i) for i in range(1, k + 1)), Fraction(0))


# ---------------------------------------------------------------------------
# Closed forms

FORMULAS = (
    "StarMax",
    "PathMin",
    "Spur",
    "Broom",
    "MatchingBound",
    "IndependenceBound",
    "PerfectMatchingBound",
)


@dataclass(frozen=True)
class FormulaId:
    """A closed-form expression and its integer parameters.

    ``name`` is one of :data:`FORMULAS`.  Parameters: ``n`` always; ``m`` for
    Spur (pendent count); ``delta`` for Broom; ``beta`` for MatchingBound;
    ``alpha`` for IndependenceBound.
    """

    name: str
    n: int
    m: int | None = None
    delta: int | None = None
    beta: int | None = None
    alpha: int | None = None


def _need(value, label, name):
    if value is None:
        raise OutOfRange(f"{name} requires parameter {label}")
    return value


def star_max(n: int) -> Fraction:
    if n < 1:
        raise OutOfRange(f"StarMax needs n >= 1, got {n}")
    return Fraction((n + 2) * (n - 1), 4)


def path_min(n: int) -> Fraction:
    if n < 1:
        raise OutOfRange(f"PathMin needs n >= 1, got {n}")
    if n == 1:
        return Fraction(0)
    # 1 + n * (H_{n-1} - 1); the n = 2 case gives 1.
    return 1 + n * (harmonic(n - 1) - 1)


def spur(n: int, m: int) -> Fraction:
    if n < 1 or not (n - 1 <= 2 * m and m <= n - 1):
        raise OutOfRange(f"Spur needs (n-1)/2 <= m <= n-1, got n={n}, m={m}")
    return Fraction(3 * n * n + 2 * m * n + m * m - 9 * m + 19 * n - 22, 24)


def broom(n: int, delta: int) -> Fraction:
    if not 2 <= delta <= n - 1:
        raise OutOfRange(f"Broom needs 2 <= delta <= n-1, got n={n}, delta={delta}")
    return (
        n * harmonic(n - delta)
        - n
        + delta
        + Fraction((delta - 1) * (delta - 2), 4)
        + Fraction(delta - 1, n - delta + 1)
    )


def matching_bound(n: int, beta: int) -> Fraction:
    if n < 2 or not 1 <= beta <= n // 2:
        raise OutOfRange(f"MatchingBound needs 1 <= beta <= n/2, got n={n}, beta={beta}")
    return Fraction(6 * n * n - 4 * beta * n + beta * beta + 9 * beta + 10 * n - 22, 24)


def independence_bound(n: int, alpha: int) -> Fraction:
    if n < 2 or not (n <= 2 * alpha and alpha <= n - 1):
        raise OutOfRange(f"IndependenceBound needs ceil(n/2) <= alpha <= n-1, got n={n}, alpha={alpha}")
    return Fraction(3 * n * n + 2 * alpha * n + alpha * alpha - 9 * alpha + 19 * n - 22, 24)


def perfect_matching_bound(n: int) -> Fraction:
    # Matching bound at beta = n/2; the denominator is 96.
    if n < 2 or n % 2:
        raise OutOfRange(f"PerfectMatchingBound needs even n >= 2, got {n}")
    return Fraction(17 * n * n + 58 * n - 88, 96)


def perfect_matching_bound_as_printed(n: int) -> Fraction:
    """The same polynomial over 4; kept only so reports can show it is wrong."""
    return Fraction(17 * n * n + 58 * n - 88, 4)


def closed_form(f: FormulaId) -> Fraction:
    name = f.name
    if name == "StarMax":
        return star_max(f.n)
    if name == "PathMin":
        return path_min(f.n)
    if name == "Spur":
        return spur(f.n, _need(f.m, "m", name))
    if name == "Broom":
        return broom(f.n, _need(f.delta, "delta", name))
    if name == "MatchingBound":
        return matching_bound(f.n, _need(f.beta, "beta", name))
    if name == "IndependenceBound":
        return independence_bound(f.n, _need(f.alpha, "alpha", name))
    if name == "PerfectMatchingBound":
        return perfect_matching_bound(f.n)
    raise OutOfRange(f"unknown formula {name!r}; expected one of {', '.join(FORMULAS)}")


# ---------------------------------------------------------------------------
# Serialization helpers


def approx(x) -> str:
    """Decimal string of ``x`` rounded to 15 significant digits, without exponent for moderate sizes."""
    v = float(f"{float(x):.15g}")
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def rational_str(x) -> str:
    """``"p/q"`` in lowest terms (``"p/1"`` for integers)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
