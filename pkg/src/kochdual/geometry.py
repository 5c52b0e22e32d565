"""Exact rational plane geometry: points, non-vertical lines, predicates, duality.

Every quantity is a `fractions.Fraction`; nothing in this module (or anything
built on it) ever touches floating point, so all sign decisions are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class ParallelLines(Exception):
    """Two lines with equal slope have no unique intersection point."""


def parse_rational(text: str) -> Rational:
    """Parse a decimal rational string such as "-3/4" or "2/1" (or "2")."""
    return Fraction(text)


def format_rational(q: Rational) -> str:
    """Serialize a rational as "num/den", always spelling out the denominator."""
    return f"{q.numerator}/{q.denominator}"


def sign(q) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class Point:
    x: Rational
    y: Rational


@dataclass(frozen=True)
class Line:
    """The non-vertical line y = slope*x - offset."""

    slope: Rational
    offset: Rational

    def y_at(self, x: Rational) -> Rational:
        return self.slope * x - self.offset


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("segment endpoints must be distinct")


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of det[(q-p), (r-p)]: +1 counterclockwise, 0 collinear, -1 clockwise."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (d > 0) - (d < 0)


def dual_of_point(p: Point) -> Line:
    """Map the point (a, b) to the line y = a*x - b."""
    return Line(slope=p.x, offset=p.y)


def dual_of_line(line: Line) -> Point:
    """Inverse of `dual_of_point`: the line y = a*x - b maps back to (a, b)."""
    return Point(x=line.slope, y=line.offset)


def intersect_lines(l1: Line, l2: Line) -> Point:
    """The unique common point of two non-parallel lines."""
    if l1.slope == l2.slope:
        raise ParallelLines(f"equal slopes {l1.slope}")
    x = (l1.offset - l2.offset) / (l1.slope - l2.slope)
    return Point(x, l1.y_at(x))


def point_side_of_line(p: Point, line: Line) -> int:
    """+1 if p is strictly above the line, -1 strictly below, 0 on it."""
    return sign(p.y - line.y_at(p.x))


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def segments_cross_properly(s1: Segment, s2: Segment) -> bool:
    """True iff the two open segments share exactly one interior point.

    Shared endpoints, touching, and collinear overlap all return False; only a
    strict transversal crossing counts.
    """
    o1 = orient(s1.a, s1.b, s2.a)
    o2 = orient(s1.a, s1.b, s2.b)
    if o1 * o2 >= 0:
        return False
    o3 = orient(s2.a, s2.b, s1.a)
    o4 = orient(s2.a, s2.b, s1.b)
    return o3 * o4 < 0
