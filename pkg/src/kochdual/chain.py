"""Koch chain construction.

A chain of iteration s has 2^s + 1 points indexed -2^(s-1) .. +2^(s-1) along
the x-axis.  Level s is built from two copies of level s-1 that are squeezed
vertically by a factor 2^-k and mapped onto the legs of the base triangle
(-1,0), (0,-1), (1,0).  The exponent k is chosen per level as the smallest one
for which the combined point set passes all four validity checks below.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .geometry import Point, format_rational, parse_rational

BASE_POINTS = (
    Point(Fraction(-1), Fraction(0)),
    Point(Fraction(0), Fraction(-1)),
    Point(Fraction(1), Fraction(0)),
)

FLATTEN_EXPONENT_CAP = 64


class FlatteningDivergence(Exception):
    """No flattening exponent up to the cap produced a valid chain."""


class DegenerateTriple(Exception):
    """A chirotope was requested for a chain with three collinear points."""


class ChainValidityError(Exception):
    """Explicitly supplied flattening exponents produced an invalid chain."""


def map_left(p: Point) -> Point:
    """Similarity (with reflection) taking the baseline (-1,0)-(1,0) onto the left leg."""
    return Point((p.x - p.y - 1) / 2, (-p.x - p.y - 1) / 2)


def map_right(p: Point) -> Point:
    """Similarity (with reflection) taking the baseline onto the right leg."""
    return Point((p.x + p.y + 1) / 2, (p.x - p.y - 1) / 2)


@dataclass(frozen=True)
class Chain:
    s: int
    points: tuple[Point, ...]
    flatten_exponents: tuple[int, ...]

    @property
    def half(self) -> int:
        return 2 ** (self.s - 1)

    @property
    def n(self) -> int:
        return len(self.points)

    def point(self, index: int) -> Point:
        """Point at logical index in -2^(s-1) .. +2^(s-1)."""
        return self.points[index + self.half]

    def logical_indices(self) -> range:
        return range(-self.half, self.half + 1)


@dataclass
class ChainValidity:
    x_monotone: bool
    general_position: bool
    upper_shadow_ok: bool
    consecutive_edges_uncrossed: bool
    violations: list[tuple[str, tuple[int, ...]]]

    @property
    def valid(self) -> bool:
        return (
            self.x_monotone
            and self.general_position
            and self.upper_shadow_ok
            and self.consecutive_edges_uncrossed
            and not self.violations
        )


@dataclass
class Chirotope:
    """Orientation sign for every logical index triple i < j < k."""

    s: int
    table: dict[tuple[int, int, int], int]


def _combine(prev: Chain, level: int, k: int) -> Chain:
    f = Fraction(1, 2**k)
    flat = [Point(p.x, p.y * f) for p in prev.points]
    points = [map_left(p) for p in flat] + [map_right(p) for p in flat[1:]]
    return Chain(level, tuple(points), prev.flatten_exponents + (k,))


def generate_chain(
    s: int,
    override_exponents: list[int] | None = None,
    exponent_cap: int = FLATTEN_EXPONENT_CAP,
) -> Chain:
    """Build the chain of iteration s, choosing flattening exponents adaptively.

    When `override_exponents` is given (one exponent per level 2..s) those are
    used verbatim instead of searching, but the result is still validated and
    a ChainValidityError is raised on any violation.
    """
    if s < 1:
        raise ValueError(f"iteration must be >= 1, got {s}")
    if override_exponents is not None and len(override_exponents) != s - 1:
        raise ValueError(
            f"need {s - 1} override exponents for s={s}, got {len(override_exponents)}"
        )

    chain = Chain(1, BASE_POINTS, ())
    for level in range(2, s + 1):
        if override_exponents is not None:
            k = override_exponents[level - 2]
            candidate = _combine(chain, level, k)
            validity = validate_chain(candidate)
            if not validity.valid:
                raise ChainValidityError(
                    f"exponent {k} at level {level} violates {validity.violations[:5]}"
                )
            chain = candidate
            continue
        for k in range(1, exponent_cap + 1):
            candidate = _combine(chain, level, k)
            if validate_chain(candidate, early_exit=True).valid:
                chain = candidate
                break
        else:
            # sufficient flatness always exists, so hitting the cap is a bug
            raise FlatteningDivergence(
                f"no exponent <= {exponent_cap} accepted at level {level}"
            )
    return chain


def _scaled_coords(points: tuple[Point, ...]) -> tuple[list[int], list[int]]:
    # Integer coordinates on a common grid; per-axis positive scaling preserves
    # every orientation sign, and plain int arithmetic avoids per-op gcd cost.
    lx = lcm(*(p.x.denominator for p in points))
    ly = lcm(*(p.y.denominator for p in points))
    xs = [p.x.numerator * (lx // p.x.denominator) for p in points]
    ys = [p.y.numerator * (ly // p.y.denominator) for p in points]
    return xs, ys


def _iorient(xs, ys, i: int, j: int, k: int) -> int:
    d = (xs[j] - xs[i]) * (ys[k] - ys[i]) - (ys[j] - ys[i]) * (xs[k] - xs[i])
    return (d > 0) - (d < 0)


def validate_chain(chain: Chain, early_exit: bool = False) -> ChainValidity:
    """Run the four validity checks; violations carry logical index witnesses.

    Checks: (a) x strictly increasing with index; (b) no collinear triple;
    (c) no segment from the left half (index < 0) to the right half
    (index > 0) has a third point strictly above it within its x-range;
    (d) no point-pair segment properly crosses any consecutive edge, so every
    consecutive edge is contained in every triangulation of the point set.

    With early_exit the first violation aborts the scan; the generator's
    exponent search only needs the pass/fail answer.
    """
    pts = chain.points
    n = len(pts)
    half = chain.half
    xs, ys = _scaled_coords(pts)

    def logical(pos: int) -> int:
        return pos - half

    violations: list[tuple[str, tuple[int, ...]]] = []
    flags = {
        "x_monotone": True,
        "general_position": True,
        "upper_shadow": True,
        "edge_crossing": True,
    }

    def result() -> ChainValidity:
        return ChainValidity(
            x_monotone=flags["x_monotone"],
            general_position=flags["general_position"],
            upper_shadow_ok=flags["upper_shadow"],
            consecutive_edges_uncrossed=flags["edge_crossing"],
            violations=violations,
        )

    def record(check: str, witness: tuple[int, ...]) -> None:
        flags[check] = False
        violations.append((check, witness))

    for i in range(n - 1):
        if xs[i] >= xs[i + 1]:
            record("x_monotone", (logical(i), logical(i + 1)))
            if early_exit:
                return result()

    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                if _iorient(xs, ys, i, j, k) == 0:
                    record("general_position", (logical(i), logical(j), logical(k)))
                    if early_exit:
                        return result()

    for u in range(half):
        for v in range(half + 1, n):
            lo, hi = (u, v) if xs[u] < xs[v] else (v, u)
            for w in range(n):
                if w == u or w == v or not xs[lo] < xs[w] < xs[hi]:
                    continue
                if _iorient(xs, ys, lo, hi, w) == 1:
                    record("upper_shadow", (logical(u), logical(v), logical(w)))
                    if early_exit:
                        return result()

    for i in range(n - 1):
        if flags["x_monotone"]:
            # x-monotone: only segments straddling the edge's x-range can cross
            candidates = ((j, k) for j in range(i + 1) for k in range(i + 1, n))
        else:
            candidates = ((j, k) for j in range(n - 1) for k in range(j + 1, n))
        for j, k in candidates:
            if j == i and k == i + 1:
                continue
            o1 = _iorient(xs, ys, j, k, i)
            o2 = _iorient(xs, ys, j, k, i + 1)
            if o1 * o2 >= 0:
                continue
            o3 = _iorient(xs, ys, i, i + 1, j)
            o4 = _iorient(xs, ys, i, i + 1, k)
            if o3 * o4 < 0:
                record(
                    "edge_crossing",
                    (logical(i), logical(i + 1), logical(j), logical(k)),
                )
                if early_exit:
                    return result()

    return result()


def chirotope(chain: Chain) -> Chirotope:
    """Orientation table over all index triples; requires general position."""
    pts = chain.points
    n = len(pts)
    half = chain.half
    xs, ys = _scaled_coords(pts)
    table: dict[tuple[int, int, int], int] = {}
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                o = _iorient(xs, ys, i, j, k)
                if o == 0:
                    raise DegenerateTriple(
                        f"collinear triple at logical indices "
                        f"({i - half}, {j - half}, {k - half})"
                    )
                table[(i - half, j - half, k - half)] = o
    return Chirotope(chain.s, table)


def chain_to_json_dict(chain: Chain) -> dict:
    return {
        "s": chain.s,
        "flatten_exponents": list(chain.flatten_exponents),
        "points": [[format_rational(p.x), format_rational(p.y)] for p in chain.points],
    }


def chain_from_json_dict(data: dict) -> Chain:
    points = tuple(
        Point(parse_rational(px), parse_rational(py)) for px, py in data["points"]
    )
    return Chain(int(data["s"]), points, tuple(int(k) for k in data["flatten_exponents"]))


def dump_chain(chain: Chain) -> str:
    return json.dumps(chain_to_json_dict(chain), indent=2) + "\n"


def load_chain(text: str) -> Chain:
    return chain_from_json_dict(json.loads(text))
