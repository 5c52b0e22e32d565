"""Projective face census: merge antipodal unbounded faces of the arrangement.

Embedding the same lines in the projective plane identifies opposite
directions at infinity, so each unbounded face fuses with the face whose sign
vector is the exact negation of its own.  The two rays of one face meet the
two rays of the other, turning four rays into two projective edges; the
merged face therefore has e + e' - 2 edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arrangement import Arrangement, Face, FaceKind
from .report import VerificationReport


class MissingAntipode(Exception):
    """An unbounded face's negated sign vector is not realized (builder bug)."""


@dataclass
class ProjectiveCensus:
    s: int | None
    n: int
    histogram: dict[int, int]
    pairing: list[tuple[Face, Face]]

    def total_faces(self) -> int:
        return sum(self.histogram.values())

    def degree_sum(self) -> int:
        return sum(k * c for k, c in self.histogram.items())

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "n": self.n,
            "histogram": {str(k): self.histogram[k] for k in sorted(self.histogram)},
        }


def antipodal_pairs(arr: Arrangement) -> list[tuple[Face, Face]]:
    """Perfect matching of the 2n unbounded faces by sign-vector negation."""
    unbounded = arr.unbounded_faces()
    by_vector = {f.sign_vector: f for f in unbounded}
    pairs: list[tuple[Face, Face]] = []
    matched: set[tuple[int, ...]] = set()
    for face in unbounded:
        if face.sign_vector in matched:
            continue
        opposite = tuple(-s for s in face.sign_vector)
        partner = by_vector.get(opposite)
        if partner is None:
            raise MissingAntipode(f"no face with sign vector {opposite}")
        matched.add(face.sign_vector)
        matched.add(opposite)
        pairs.append((face, partner))
    assert len(pairs) == arr.n
    return pairs


def projective_census(arr: Arrangement, s: int | None = None) -> ProjectiveCensus:
    pairs = antipodal_pairs(arr)
    histogram: dict[int, int] = {}
    for face in arr.faces:
        if face.kind is FaceKind.BOUNDED:
            histogram[face.edge_count] = histogram.get(face.edge_count, 0) + 1
    for face, partner in pairs:
        merged = face.edge_count + partner.edge_count - 2
        histogram[merged] = histogram.get(merged, 0) + 1
    return ProjectiveCensus(
        s=s, n=arr.n, histogram=dict(sorted(histogram.items())), pairing=pairs
    )


def expected_projective_pentagons(s: int) -> int:
    return 3 * 2 ** (s - 1) - 3


def verify_projective_face_counts(census: ProjectiveCensus) -> VerificationReport:
    """Check the projective claims: pentagon count and the 3/4-edge bound.

    The pentagon formula 3*2^(s-1) - 3 holds for s = 1 and every s >= 3; at
    s = 2 the two four-edge unbounded faces merge with two-edge antipodes
    into tetragons, leaving exactly one pentagon.  No face may ever exceed
    five edges, and the projective Euler counts must hold.
    """
    if census.s is None:
        raise ValueError("census has no iteration number")
    s, n = census.s, census.n
    report = VerificationReport()
    report.require("projective.total_faces", 1 + comb(n, 2), census.total_faces())
    report.require("projective.degree_sum", 2 * n * (n - 1), census.degree_sum())
    pentagons = census.histogram.get(5, 0)
    if s == 2:
        report.require("projective.pentagons_s2_anomaly", 1, pentagons)
        sizes = sorted(census.histogram)
        report.add(
            "projective.sizes_in_3_4_5",
            all(k in (3, 4, 5) for k in sizes),
            "{3, 4, 5}",
            sizes,
        )
    else:
        report.require(
            "projective.pentagons", expected_projective_pentagons(s), pentagons
        )
        others = sorted(k for k in census.histogram if k != 5)
        report.add(
            "projective.other_faces_in_3_4",
            all(k in (3, 4) for k in others),
            "{3, 4}",
            others,
        )
    max_size = max(census.histogram, default=0)
    report.add("projective.max_face_size", max_size <= 5, "<= 5", max_size)
    return report
