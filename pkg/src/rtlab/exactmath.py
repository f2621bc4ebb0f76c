"""Exact arithmetic over Q(sqrt(7)) and the closed-form threshold table.

The extremal edge counts in this problem family live in the quadratic field
Q(sqrt(7)): the three-color transitive-triangle threshold has the quadratic
coefficient (52 - 4*sqrt(7))/81 = 0.51133..., and the optimal construction
splits the vertices into parts of relative sizes (4 - sqrt(7))/9, so floating
point is not good enough to decide equalities between these quantities.
``QuadraticRational`` represents a + b*sqrt(7) with ``Fraction`` coordinates
and compares values by sign analysis on integers -- no rounding anywhere.

The module also holds three self-contained pieces of exact machinery used by
the verification commands:

* ``thresholds()`` -- the table of edge-count thresholds that force a rainbow
  (three-distinct-color) triangle of the directed or transitive kind, per
  color count and per quantity measured (single color class / sum of a pair
  of color classes / total over all classes).

* ``lemma21_bound`` / ``lemma21_oracle`` -- for a graph on two disjoint
  vertex sets A and B with no triangle touching both sides, the edge count is
  at most C(|A|,2) + C(|B|,2) + min(|A|,|B|).  The oracle computes the true
  maximum by exhausting over all bipartite cross graphs: once the cross edges
  are fixed, a within-side edge is addable exactly when its endpoints share
  no cross-neighbor, independently of all other within-side edges.

* ``ConstraintSystem`` / ``scan_constraint_system`` -- the final reduction of
  the three-color transitive argument: a system of two quadratic and two
  linear constraints in four nonnegative reals (u, y, z, r) whose non-strict
  version admits exactly one solution (1/3, 0, 0, 0).  The scanner maximizes
  the minimum slack of the two quadratic constraints over the linearly
  feasible region on a dense grid, polishes by projected coordinate ascent,
  and checks the slacks vanish exactly (in Fraction arithmetic) at the
  claimed point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Sequence

import numpy as np

__all__ = [
    "QuadraticRational",
    "SQRT7",
    "ThresholdEntry",
    "thresholds",
    "threshold_value",
    "lemma21_bound",
    "lemma21_oracle",
    "ConstraintSystem",
    "ScanResult",
    "scan_constraint_system",
]


def _floor_root7(m: int) -> int:
    """floor(m * sqrt(7)) for an integer m, computed exactly."""
    if m == 0:
        return 0
    if m > 0:
        return isqrt(7 * m * m)
    # sqrt(7) is irrational, so m*sqrt(7) is never an integer for m != 0
    return -isqrt(7 * m * m) - 1


def _int_sign(a: int, b: int) -> int:
    """Sign of a + b*sqrt(7) for integers a, b."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: the term with the larger square wins
    lhs, rhs = a * a, 7 * b * b
    if a > 0:  # b < 0
        return 1 if lhs > rhs else -1 if lhs < rhs else 0
    return 1 if rhs > lhs else -1 if rhs < lhs else 0


@dataclass(frozen=True)
class QuadraticRational:
    """The real number a + b*sqrt(7) with rational a and b.

    Field arithmetic is exact; ordering is decided by integer sign analysis,
    so chained comparisons of nearby values such as 127 - 48*sqrt(7) versus 0
    are always correct.
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    # -- construction helpers -------------------------------------------
    @staticmethod
    def _coerce(value) -> "QuadraticRational":
        if isinstance(value, QuadraticRational):
            return value
        if isinstance(value, (int, Fraction)):
            return QuadraticRational(Fraction(value))
        return NotImplemented

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    # -- ring/field operations ------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticRational(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticRational":
        return QuadraticRational(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticRational(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticRational(
            self.a * other.a + 7 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        norm = other.a * other.a - 7 * other.b * other.b
        # norm == 0 only for the zero element; Fraction raises on /0
        return QuadraticRational(
            (self.a * other.a - 7 * self.b * other.b) / norm,
            (self.b * other.a - self.a * other.b) / norm,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __abs__(self) -> "QuadraticRational":
        return -self if self.sign() < 0 else self

    # -- ordering ---------------------------------------------------------
    def sign(self) -> int:
        """-1, 0 or 1 according to the sign of the represented real."""
        # clear denominators: sign(a + b*sqrt7) == sign(A + B*sqrt7)
        da, db = self.a.denominator, self.b.denominator
        return _int_sign(self.a.numerator * db, self.b.numerator * da)

    def _cmp(self, other) -> int:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign()

    def __eq__(self, other):
        c = self._cmp(other)
        return c == 0 if c is not NotImplemented else NotImplemented

    def __lt__(self, other):
        c = self._cmp(other)
        return c < 0 if c is not NotImplemented else NotImplemented

    def __le__(self, other):
        c = self._cmp(other)
        return c <= 0 if c is not NotImplemented else NotImplemented

    def __gt__(self, other):
        c = self._cmp(other)
        return c > 0 if c is not NotImplemented else NotImplemented

    def __ge__(self, other):
        c = self._cmp(other)
        return c >= 0 if c is not NotImplemented else NotImplemented

    def __hash__(self):
        # rational values hash like their Fraction so mixed dict keys work
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, "sqrt7"))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # -- conversions ------------------------------------------------------
    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 7.0**0.5

    def floor_scaled(self, scale: int) -> int:
        """floor(self * scale) for a positive integer scale, exactly."""
        if scale <= 0:
            raise ValueError("scale must be a positive integer")
        a, b = self.a * scale, self.b * scale
        d = a.denominator * b.denominator
        big_a = a.numerator * b.denominator
        big_b = b.numerator * a.denominator
        # big_a + t <= big_a + big_b*sqrt7 < big_a + t + 1, and dividing the
        # bracket by d cannot pass an integer, so the floor is immediate
        return (big_a + _floor_root7(big_b)) // d

    def decimal(self, digits: int = 4) -> str:
        """Decimal string rounded (half away from zero) to ``digits`` places."""
        if digits < 0:
            raise ValueError("digits must be non-negative")
        neg = self.sign() < 0
        v = -self if neg else self
        scaled = (v.floor_scaled(10 ** (digits + 1)) + 5) // 10
        whole, frac = divmod(scaled, 10**digits)
        out = f"{whole}.{frac:0{digits}d}" if digits else str(whole)
        return "-" + out if neg and scaled else out

    def __repr__(self) -> str:
        return f"QuadraticRational({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt(7)"
        op = "-" if self.b < 0 else "+"
        return f"{self.a} {op} {abs(self.b)}*sqrt(7)"


SQRT7 = QuadraticRational(Fraction(0), Fraction(1))


# ---------------------------------------------------------------------------
# threshold table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThresholdEntry:
    """One edge-count threshold that forces a rainbow triangle.

    The threshold reads ``quad * n**2 + linear * n`` (with ``quad`` scaled by
    the number of colors when ``scales_with_colors`` is set, for thresholds
    on the total over all color classes).  ``strict`` records whether the
    count must exceed the threshold or merely reach it.
    """

    name: str
    pattern: str  # "directed" | "transitive" | "undirected"
    colors: str  # "3" | ">=3" | ">=4"
    quantity: str  # "per-color" | "pair-sum" | "total"
    quad: QuadraticRational
    linear: Fraction = Fraction(0)
    strict: bool = True
    oriented_only: bool = False
    scales_with_colors: bool = False
    note: str = ""


def _q(num: int, den: int = 1) -> QuadraticRational:
    return QuadraticRational(Fraction(num, den))


def _q7(a_num: int, a_den: int, b_num: int, b_den: int) -> QuadraticRational:
    return QuadraticRational(Fraction(a_num, a_den), Fraction(b_num, b_den))


def thresholds() -> dict[str, ThresholdEntry]:
    """The threshold table, keyed by entry name.

    ``per-color``: every color class above the threshold forces the pattern.
    ``pair-sum``: every sum of two distinct color classes above it does.
    ``total``: the sum over all classes above it does (threshold scales with
    the number of colors).
    """
    entries = [
        ThresholdEntry(
            "directed-per-color-4plus", "directed", ">=4", "per-color", _q(1, 2)
        ),
        ThresholdEntry(
            "transitive-per-color-4plus", "transitive", ">=4", "per-color", _q(1, 2)
        ),
        ThresholdEntry(
            "directed-total-4plus",
            "directed",
            ">=4",
            "total",
            _q(1, 2),
            scales_with_colors=True,
            note="threshold (c/2)*n^2; two full color classes alone stay rainbow-free",
        ),
        ThresholdEntry(
            "transitive-total-4plus",
            "transitive",
            ">=4",
            "total",
            _q(1, 2),
            scales_with_colors=True,
        ),
        ThresholdEntry(
            "directed-per-color-3",
            "directed",
            "3",
            "per-color",
            _q(5, 9),
            strict=False,
            note="reaching (5/9)*n^2 in each of the three classes already suffices",
        ),
        ThresholdEntry(
            "directed-pair-3",
            "directed",
            "3",
            "pair-sum",
            _q(10, 9),
            strict=False,
        ),
        ThresholdEntry(
            "transitive-per-color-3",
            "transitive",
            "3",
            "per-color",
            _q7(52, 81, -4, 81),
            Fraction(3, 2),
        ),
        ThresholdEntry(
            "transitive-pair-3",
            "transitive",
            "3",
            "pair-sum",
            _q7(104, 81, -8, 81),
            Fraction(3),
        ),
        ThresholdEntry(
            "transitive-per-color-oriented",
            "transitive",
            ">=3",
            "per-color",
            _q(1, 3),
            oriented_only=True,
            note="for layers with no two-way pair; tight for the cyclic three-part graph",
        ),
        ThresholdEntry(
            "transitive-total-oriented",
            "transitive",
            ">=3",
            "total",
            _q(1, 3),
            oriented_only=True,
            scales_with_colors=True,
            note="threshold (c/3)*n^2 for layers with no two-way pair",
        ),
        ThresholdEntry(
            "undirected-pair-3",
            "undirected",
            "3",
            "pair-sum",
            _q7(52, 81, -4, 81),
            Fraction(3, 2),
        ),
        ThresholdEntry(
            "undirected-per-color-3",
            "undirected",
            "3",
            "per-color",
            _q7(26, 81, -2, 81),
            note="asymptotically optimal coefficient, about 0.2557",
        ),
    ]
    return {entry.name: entry for entry in entries}


def threshold_value(entry: ThresholdEntry, n: int, c: int | None = None) -> QuadraticRational:
    """Evaluate an entry's threshold at ``n`` vertices (and ``c`` colors)."""
    quad = entry.quad
    if entry.scales_with_colors:
        if c is None:
            raise ValueError(f"entry {entry.name!r} needs the number of colors")
        quad = quad * c
    return quad * (n * n) + QuadraticRational(entry.linear * n)


# ---------------------------------------------------------------------------
# two-sided triangle-free edge maximum
# ---------------------------------------------------------------------------


def lemma21_bound(a: int, b: int) -> int:
    """Edge bound C(a,2) + C(b,2) + min(a,b) for graphs on two disjoint sets
    with no triangle touching both sides."""
    if a < 0 or b < 0:
        raise ValueError("set sizes must be non-negative")
    return comb(a, 2) + comb(b, 2) + min(a, b)


def lemma21_oracle(a: int, b: int) -> int:
    """True maximum edge count over all graphs on sets of sizes a and b with
    no triangle having vertices on both sides.

    Exhausts the 2**(a*b) bipartite cross graphs.  For a fixed cross graph a
    within-side edge creates a mixed triangle exactly when its endpoints have
    a common neighbor on the other side, independently for every within-side
    pair, so each side contributes its count of cross-neighborhood-disjoint
    pairs.
    """
    if a < 0 or b < 0:
        raise ValueError("set sizes must be non-negative")
    if a * b > 20:
        raise ValueError("cross graph space too large; keep a*b <= 20")
    a_pairs = list(itertools.combinations(range(a), 2))
    best = 0
    for bits in range(1 << (a * b)):
        # neighbor bitmask over B for each vertex of A
        masks = [(bits >> (i * b)) & ((1 << b) - 1) for i in range(a)]
        edges = sum(m.bit_count() for m in masks)
        edges += sum(1 for i, j in a_pairs if masks[i] & masks[j] == 0)
        for x in range(b):
            for y in range(x + 1, b):
                both = (1 << x) | (1 << y)
                if not any(m & both == both for m in masks):
                    edges += 1
        best = max(best, edges)
    return best


# ---------------------------------------------------------------------------
# the four-variable constraint system
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstraintSystem:
    """The final four-variable system of the three-color transitive argument.

    Variables u, y, z, r are nonnegative reals subject to the linear
    constraints ``3u + y/2 + r <= 1`` and ``u - 3y/4 - z >= 0``.  The two
    quadratic quantities

        q1 = (u + 7y/12 + z/2 + 3r/4)^2 - (z/2 + 3r/4)^2
        q2 = 2u^2 + (1 - r - y/2 - 2u)^2 - yz/2 - 3z^2/2

    each come with a lower bound (1/9 and 1/3).  The slack pair is
    ``(q1 - 1/9, q2 - 1/3)``; the system's defining property is that the
    minimum of the two slacks is nonpositive everywhere on the feasible
    region and vanishes only at (u, y, z, r) = (1/3, 0, 0, 0).
    """

    bound1: Fraction = Fraction(1, 9)
    bound2: Fraction = Fraction(1, 3)

    OPTIMUM = (Fraction(1, 3), Fraction(0), Fraction(0), Fraction(0))

    def feasible(self, u, y, z, r) -> bool:
        u, y, z, r = Fraction(u), Fraction(y), Fraction(z), Fraction(r)
        if min(u, y, z, r) < 0:
            return False
        return 3 * u + y / 2 + r <= 1 and u - 3 * y / 4 - z >= 0

    def slacks(self, u, y, z, r) -> tuple[Fraction, Fraction]:
        """Exact slack pair (q1 - 1/9, q2 - 1/3) at a rational point."""
        u, y, z, r = Fraction(u), Fraction(y), Fraction(z), Fraction(r)
        w = z / 2 + 3 * r / 4
        q1 = (u + 7 * y / 12 + w) ** 2 - w**2
        q2 = 2 * u**2 + (1 - r - y / 2 - 2 * u) ** 2 - y * z / 2 - 3 * z**2 / 2
        return q1 - self.bound1, q2 - self.bound2

    def min_slack(self, u, y, z, r) -> Fraction:
        return min(self.slacks(u, y, z, r))

    def min_slack_float(self, u: float, y: float, z: float, r: float) -> float:
        w = 0.5 * z + 0.75 * r
        q1 = (u + y * 7.0 / 12.0 + w) ** 2 - w * w
        q2 = 2.0 * u * u + (1.0 - r - 0.5 * y - 2.0 * u) ** 2 - 0.5 * y * z - 1.5 * z * z
        return min(q1 - 1.0 / 9.0, q2 - 1.0 / 3.0)


@dataclass(frozen=True)
class ScanResult:
    """Outcome of the grid scan plus polish over the feasible region."""

    grid_value: float
    grid_point: tuple[float, float, float, float]
    polished_value: float
    polished_point: tuple[float, float, float, float]
    grid_points: int
    exact_slacks_at_optimum: tuple[Fraction, Fraction]

    @property
    def optimum_confirmed(self) -> bool:
        """True when the scan supports the unique-optimum property: the
        polished maximum of the minimum slack is numerically nonpositive,
        the maximizer sits at (1/3, 0, 0, 0), and the exact slacks there
        vanish."""
        close = max(
            abs(self.polished_point[0] - 1 / 3),
            self.polished_point[1],
            self.polished_point[2],
            self.polished_point[3],
        )
        return (
            self.polished_value <= 1e-9
            and close <= 1e-4
            and self.exact_slacks_at_optimum == (0, 0)
        )


def _min_slack_masked(u, y, z, r):
    """Vectorized minimum slack; -inf outside the feasible region."""
    w = 0.5 * z + 0.75 * r
    base = u + y * (7.0 / 12.0)
    s1 = (base + w) ** 2 - w * w - 1.0 / 9.0
    lin = 1.0 - r - 0.5 * y - 2.0 * u
    s2 = 2.0 * u * u + lin * lin - 0.5 * y * z - 1.5 * z * z - 1.0 / 3.0
    feas = (
        (u >= 0.0)
        & (y >= 0.0)
        & (z >= 0.0)
        & (r >= 0.0)
        & (3.0 * u + 0.5 * y + r <= 1.0)
        & (u - 0.75 * y - z >= 0.0)
    )
    return np.where(feas, np.minimum(s1, s2), -np.inf)


# global coordinate boxes implied by the linear constraints alone
_BOXES = ((0.0, 1.0 / 3.0), (0.0, 4.0 / 9.0), (0.0, 1.0 / 3.0), (0.0, 1.0))


def _polish(system: ConstraintSystem, start: Sequence[float], iters: int) -> tuple[float, list[float]]:
    """Projected ascent over pairs of coordinates with shrinking windows.

    The objective is a minimum of two smooth functions, so single-coordinate
    moves stall on the ridge where the two slacks agree; scanning a window
    jointly in two coordinates walks along that ridge.
    """
    point = list(map(float, start))
    best = system.min_slack_float(*point)
    coord_pairs = list(itertools.combinations(range(4), 2))

    for _ in range(iters):
        improved = 0.0
        for i, j in coord_pairs:
            width_i = _BOXES[i][1] - _BOXES[i][0]
            width_j = _BOXES[j][1] - _BOXES[j][0]
            for _refine in range(20):
                ti = np.linspace(
                    max(_BOXES[i][0], point[i] - width_i),
                    min(_BOXES[i][1], point[i] + width_i),
                    33,
                )
                tj = np.linspace(
                    max(_BOXES[j][0], point[j] - width_j),
                    min(_BOXES[j][1], point[j] + width_j),
                    33,
                )
                coords = [np.full((33, 33), v) for v in point]
                coords[i] = np.broadcast_to(ti[:, None], (33, 33))
                coords[j] = np.broadcast_to(tj[None, :], (33, 33))
                vals = _min_slack_masked(*coords)
                k = int(np.argmax(vals))
                ki, kj = divmod(k, 33)
                if vals.flat[k] > best:
                    improved += vals.flat[k] - best
                    best = float(vals.flat[k])
                    point[i], point[j] = float(ti[ki]), float(tj[kj])
                width_i /= 3.0
                width_j /= 3.0
        if improved < 1e-16:
            break
    return best, point


def scan_constraint_system(
    grid_step: float = 0.002, polish_iters: int = 200
) -> ScanResult:
    """Maximize the minimum slack over the feasible region.

    Grid scan: for each grid (u, y) the feasible (z, r) set is the rectangle
    [0, u - 3y/4] x [0, 1 - 3u - y/2], evaluated vectorized.  The best grid
    point is then polished by projected coordinate ascent, and the exact
    slack pair is computed at (1/3, 0, 0, 0) in Fraction arithmetic.
    """
    system = ConstraintSystem()
    h = grid_step
    best = -np.inf
    best_point = (0.0, 0.0, 0.0, 0.0)
    total = 0
    for u in np.arange(0.0, 1.0 / 3.0 + h / 2, h):
        y_max = min(4.0 * u / 3.0, 2.0 * (1.0 - 3.0 * u))
        if y_max < 0:
            continue
        for y in np.arange(0.0, y_max + h / 2, h):
            z_hi = u - 0.75 * y
            r_hi = 1.0 - 3.0 * u - 0.5 * y
            if z_hi < 0 or r_hi < 0:
                continue
            zs = np.arange(0.0, z_hi + h / 2, h)
            rs = np.arange(0.0, r_hi + h / 2, h)
            zcol = zs[:, None]
            rrow = rs[None, :]
            w = 0.5 * zcol + 0.75 * rrow
            base = u + y * (7.0 / 12.0)
            slack1 = base * base + 2.0 * base * w - 1.0 / 9.0
            lin = 1.0 - 0.5 * y - 2.0 * u - rrow
            slack2 = (
                2.0 * u * u + lin * lin - 0.5 * y * zcol - 1.5 * zcol * zcol - 1.0 / 3.0
            )
            grid = np.minimum(slack1, slack2)
            total += grid.size
            k = int(np.argmax(grid))
            if grid.flat[k] > best:
                best = float(grid.flat[k])
                iz, ir = divmod(k, grid.shape[1])
                best_point = (float(u), float(y), float(zs[iz]), float(rs[ir]))

    polished_value, polished_point = _polish(system, best_point, polish_iters)
    return ScanResult(
        grid_value=best,
        grid_point=best_point,
        polished_value=polished_value,
        polished_point=tuple(polished_point),
        grid_points=total,
        exact_slacks_at_optimum=system.slacks(*ConstraintSystem.OPTIMUM),
    )
