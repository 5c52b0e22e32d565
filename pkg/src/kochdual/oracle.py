"""Brute-force face census used to cross-check the arrangement builder.

Every face of a simple line arrangement is recovered from edge witnesses
alone: each open edge of each line contributes its sign vector (with +1 and
-1 substituted for the edge's own line) to the two faces it borders.  No face
tracing is involved, so the only shared code with the builder is the exact
geometry kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arrangement import ConcurrentLines, EuclideanCensus, FaceKind
from .geometry import Line, Point, point_side_of_line
from .report import VerificationReport


@dataclass
class OracleFace:
    sign_vector: tuple[int, ...]
    edge_count: int = 0
    left_rays: int = 0
    right_rays: int = 0

    @property
    def unbounded(self) -> bool:
        return self.left_rays > 0 or self.right_rays > 0

    def kind(self) -> FaceKind:
        if all(s == 1 for s in self.sign_vector):
            return FaceKind.TOP_UNBOUNDED
        if all(s == -1 for s in self.sign_vector):
            return FaceKind.BOTTOM_UNBOUNDED
        if not self.unbounded:
            return FaceKind.BOUNDED
        if self.left_rays and not self.right_rays:
            return FaceKind.LEFT_UNBOUNDED
        if self.right_rays and not self.left_rays:
            return FaceKind.RIGHT_UNBOUNDED
        raise AssertionError("mixed-direction rays outside the top/bottom faces")


def signvector_faces(lines: list[Line]) -> dict[tuple[int, ...], OracleFace]:
    """Census every face of the arrangement from per-edge witness points."""
    n = len(lines)
    if n < 2:
        raise ValueError("need at least two lines")
    if len({l.slope for l in lines}) != n:
        raise ValueError("slopes must be distinct")

    crossings: dict[int, list] = {}
    for i in range(n):
        xs = sorted(
            (lines[i].offset - lines[j].offset) / (lines[i].slope - lines[j].slope)
            for j in range(n)
            if j != i
        )
        for a, b in zip(xs, xs[1:]):
            if a == b:
                raise ConcurrentLines(f"three lines meet above x={a} on line {i}")
        crossings[i] = xs

    faces: dict[tuple[int, ...], OracleFace] = {}

    def touch(vector: tuple[int, ...], ray: int) -> None:
        face = faces.get(vector)
        if face is None:
            face = faces[vector] = OracleFace(vector)
        face.edge_count += 1
        if ray < 0:
            face.left_rays += 1
        elif ray > 0:
            face.right_rays += 1

    for i, line in enumerate(lines):
        xs = crossings[i]
        # witness x per open edge: interval midpoints plus one step past each end
        witnesses = [(xs[0] - 1, -1)]
        witnesses += [((a + b) / 2, 0) for a, b in zip(xs, xs[1:])]
        witnesses.append((xs[-1] + 1, +1))
        for x, ray in witnesses:
            w = Point(x, line.y_at(x))
            signs = []
            for j, other in enumerate(lines):
                if j == i:
                    signs.append(0)
                    continue
                side = point_side_of_line(w, other)
                assert side != 0, "edge witness landed on another line"
                signs.append(side)
            for own in (1, -1):
                signs[i] = own
                touch(tuple(signs), ray)

    assert sum(f.edge_count for f in faces.values()) == 2 * n * n
    return faces


def signvector_census(lines: list[Line], s: int | None = None) -> EuclideanCensus:
    """Shape the witness-derived faces into the standard Euclidean census."""
    faces = signvector_faces(lines)
    bounded: dict[int, int] = {}
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    top_edges = bottom_edges = None
    for face in faces.values():
        kind = face.kind()
        if kind is FaceKind.TOP_UNBOUNDED:
            assert top_edges is None
            top_edges = face.edge_count
        elif kind is FaceKind.BOTTOM_UNBOUNDED:
            assert bottom_edges is None
            bottom_edges = face.edge_count
        else:
            hist = {
                FaceKind.BOUNDED: bounded,
                FaceKind.LEFT_UNBOUNDED: left,
                FaceKind.RIGHT_UNBOUNDED: right,
            }[kind]
            hist[face.edge_count] = hist.get(face.edge_count, 0) + 1
    assert top_edges is not None and bottom_edges is not None
    return EuclideanCensus(
        s=s,
        n=len(lines),
        bounded=dict(sorted(bounded.items())),
        top_edges=top_edges,
        bottom_edges=bottom_edges,
        left=dict(sorted(left.items())),
        right=dict(sorted(right.items())),
    )


def projective_histogram(lines: list[Line]) -> dict[int, int]:
    """Projective face-size histogram re-derived from the oracle faces alone.

    Bounded faces keep their size; each antipodal pair of unbounded faces
    (negated sign vectors) merges into one face of size e + e' - 2.
    """
    faces = signvector_faces(lines)
    histogram: dict[int, int] = {}
    seen: set[tuple[int, ...]] = set()
    for vector, face in faces.items():
        if not face.unbounded:
            histogram[face.edge_count] = histogram.get(face.edge_count, 0) + 1
            continue
        if vector in seen:
            continue
        opposite = tuple(-s for s in vector)
        partner = faces.get(opposite)
        assert partner is not None and partner.unbounded
        seen.add(vector)
        seen.add(opposite)
        merged = face.edge_count + partner.edge_count - 2
        histogram[merged] = histogram.get(merged, 0) + 1
    return dict(sorted(histogram.items()))


def arrangement_identities(census: EuclideanCensus) -> VerificationReport:
    """Classical counts every simple arrangement of n lines must satisfy."""
    n = census.n
    report = VerificationReport()
    report.require("identity.bounded_faces", comb(n - 1, 2), census.bounded_total())
    report.require("identity.unbounded_faces", 2 * n, census.unbounded_total())
    report.require("identity.degree_sum", 2 * n * n, census.degree_sum())
    return report


def compare_census(a: EuclideanCensus, b: EuclideanCensus) -> list[str]:
    """Field-by-field structural diff; empty means identical."""
    diff = []
    for name in ("s", "n", "bounded", "top_edges", "bottom_edges", "left", "right"):
        va, vb = getattr(a, name), getattr(b, name)
        if va != vb:
            diff.append(f"{name}: {va} != {vb}")
    return diff
