"""Exact line-arrangement construction and the Euclidean face census.

Lines are clipped to a rectangle that strictly contains every pairwise
intersection and is tall enough that each line enters through the interior of
the left side and leaves through the interior of the right side.  The clipped
picture is a planar subdivision whose faces are traced by half-edge walking;
rays (the clipped end pieces of a line) count as single edges and rectangle
edges never count.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from math import comb, lcm

from .chain import Chain
from .geometry import (
    Line,
    Point,
    Rational,
    dual_of_point,
    midpoint,
    point_side_of_line,
)
from .report import VerificationReport


class DuplicateSlope(Exception):
    """Two chain points share an x-coordinate, so their dual lines are parallel."""


class ConcurrentLines(Exception):
    """Three or more lines pass through a common point (chain not in general position)."""


class FaceKind(Enum):
    BOUNDED = "bounded"
    TOP_UNBOUNDED = "top_unbounded"
    BOTTOM_UNBOUNDED = "bottom_unbounded"
    LEFT_UNBOUNDED = "left_unbounded"
    RIGHT_UNBOUNDED = "right_unbounded"


@dataclass(frozen=True)
class Face:
    """One cell of the arrangement.

    sign_vector holds the side of every input line (+1 above, -1 below);
    edge_count counts boundary segments and rays on arrangement lines only.
    """

    sign_vector: tuple[int, ...]
    edge_count: int
    ray_count: int
    kind: FaceKind


@dataclass
class Arrangement:
    lines: list[Line]
    vertices: list[Point]
    per_line_order: list[list[int]]
    clip_box: tuple[Rational, Rational]
    faces: list[Face]
    face_polygons: list[list[Point]]

    @property
    def n(self) -> int:
        return len(self.lines)

    def unbounded_faces(self) -> list[Face]:
        return [f for f in self.faces if f.kind is not FaceKind.BOUNDED]


def dualize_chain(chain: Chain) -> list[Line]:
    """One line per chain point, in index order; slopes strictly increase."""
    lines = [dual_of_point(p) for p in chain.points]
    for a, b in zip(lines, lines[1:]):
        if a.slope >= b.slope:
            raise DuplicateSlope(
                f"chain x-coordinates not strictly increasing near slope {a.slope}"
            )
    return lines


def _int_dir(a: Point, b: Point) -> tuple[int, int]:
    # direction a->b scaled to an integer vector (positive scaling only)
    dx = b.x - a.x
    dy = b.y - a.y
    m = lcm(dx.denominator, dy.denominator)
    return (dx.numerator * (m // dx.denominator), dy.numerator * (m // dy.denominator))


def _dir_cmp(d1: tuple[int, int], d2: tuple[int, int]) -> int:
    # counterclockwise order starting at the positive x direction
    x1, y1 = d1
    x2, y2 = d2
    h1 = 0 if (y1 > 0 or (y1 == 0 and x1 > 0)) else 1
    h2 = 0 if (y2 > 0 or (y2 == 0 and x2 > 0)) else 1
    if h1 != h2:
        return h1 - h2
    cross = x1 * y2 - y1 * x2
    if cross == 0:
        raise AssertionError("coincident edge directions at a node")
    return -1 if cross > 0 else 1


def build_arrangement(lines: list[Line], margin_scale: int = 1) -> Arrangement:
    """Construct the full clipped subdivision and classify every face.

    Raises ConcurrentLines if the arrangement is not simple.  margin_scale
    inflates the clip rectangle; face kinds and edge counts must not depend
    on it.
    """
    n = len(lines)
    if n < 1:
        raise ValueError("need at least one line")
    if len({l.slope for l in lines}) != n:
        raise DuplicateSlope("line slopes must be pairwise distinct")

    vertices: list[Point] = []
    seen: dict[tuple[Rational, Rational], tuple[int, int]] = {}
    pair_vertex: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(i + 1, n):
            x = (lines[i].offset - lines[j].offset) / (lines[i].slope - lines[j].slope)
            p = Point(x, lines[i].y_at(x))
            key = (p.x, p.y)
            if key in seen:
                raise ConcurrentLines(
                    f"lines {seen[key]} and ({i}, {j}) meet at the same point {key}"
                )
            seen[key] = (i, j)
            pair_vertex[(i, j)] = len(vertices)
            vertices.append(p)

    vmax = max((max(abs(p.x), abs(p.y)) for p in vertices), default=Fraction(0))
    half_w = (2 * vmax + 1) * margin_scale
    half_h = max([half_w] + [abs(l.slope) * half_w + abs(l.offset) for l in lines]) + 1

    # nodes: arrangement vertices, then per-line boundary points, then corners
    nodes: list[Point] = list(vertices)
    node_on_box: list[bool] = [False] * len(nodes)

    def add_node(p: Point) -> int:
        nodes.append(p)
        node_on_box.append(True)
        return len(nodes) - 1

    enter = [add_node(Point(-half_w, l.y_at(-half_w))) for l in lines]
    leave = [add_node(Point(half_w, l.y_at(half_w))) for l in lines]
    bl = add_node(Point(-half_w, -half_h))
    br = add_node(Point(half_w, -half_h))
    tr = add_node(Point(half_w, half_h))
    tl = add_node(Point(-half_w, half_h))

    edge_ends: list[tuple[int, int]] = []
    edge_line: list[int | None] = []
    edge_side: list[str | None] = []

    def add_edge(u: int, v: int, line: int | None = None, side: str | None = None) -> None:
        edge_ends.append((u, v))
        edge_line.append(line)
        edge_side.append(side)

    per_line_order: list[list[int]] = []
    for i in range(n):
        on_line = [pair_vertex[(i, j) if i < j else (j, i)] for j in range(n) if j != i]
        on_line.sort(key=lambda vid: nodes[vid].x)
        per_line_order.append(on_line)
        path = [enter[i], *on_line, leave[i]]
        for u, v in zip(path, path[1:]):
            add_edge(u, v, line=i)

    by_y = lambda vid: nodes[vid].y
    right_side = [br, *sorted(leave, key=by_y), tr]
    left_side = [tl, *sorted(enter, key=by_y, reverse=True), bl]
    for u, v in zip(right_side, right_side[1:]):
        add_edge(u, v, side="R")
    for u, v in zip(left_side, left_side[1:]):
        add_edge(u, v, side="L")
    add_edge(bl, br, side="B")
    add_edge(tr, tl, side="T")

    # rotational order of incident edges around every node
    adj: list[list[tuple[tuple[int, int], int, int]]] = [[] for _ in nodes]
    for eid, (u, v) in enumerate(edge_ends):
        d = _int_dir(nodes[u], nodes[v])
        adj[u].append((d, eid, v))
        adj[v].append(((-d[0], -d[1]), eid, u))
    order = cmp_to_key(_dir_cmp)
    for lst in adj:
        lst.sort(key=lambda entry: order(entry[0]))
    slot = [{eid: idx for idx, (_, eid, _) in enumerate(lst)} for lst in adj]

    # trace faces: the next boundary edge after arriving at a node is the
    # rotational predecessor of the arrival edge, keeping the face on the left
    face_of: dict[tuple[int, int], int] = {}
    cycles: list[list[tuple[int, int]]] = []
    for eid in range(len(edge_ends)):
        for head in edge_ends[eid]:
            if (eid, head) in face_of:
                continue
            cycle: list[tuple[int, int]] = []
            cur = (eid, head)
            while cur not in face_of:
                face_of[cur] = len(cycles)
                cycle.append(cur)
                e, v = cur
                _, e2, w = adj[v][slot[v][e] - 1]
                cur = (e2, w)
            if cur != cycle[0]:
                raise AssertionError("face walk did not close at its start")
            cycles.append(cycle)

    outer = [
        fid
        for fid, cycle in enumerate(cycles)
        if all(edge_line[eid] is None for eid, _ in cycle)
    ]
    if len(outer) != 1:
        raise AssertionError(f"expected exactly one all-box face, found {len(outer)}")
    outer_fid = outer[0]

    # sign vectors: evaluate one seed face directly, then flip one component
    # per shared line edge while flooding the face adjacency
    vectors: dict[int, list[int]] = {}
    seed = next(fid for fid in range(len(cycles)) if fid != outer_fid)
    seed_vec = _direct_sign_vector(cycles[seed], edge_ends, edge_line, nodes, lines)
    vectors[seed] = seed_vec
    queue = [seed]
    while queue:
        fid = queue.pop()
        vec = vectors[fid]
        for eid, head in cycles[fid]:
            i = edge_line[eid]
            if i is None:
                continue
            u, v = edge_ends[eid]
            twin = (eid, u if head == v else v)
            gid = face_of[twin]
            if gid in vectors:
                continue
            flipped = list(vec)
            flipped[i] = -flipped[i]
            vectors[gid] = flipped
            queue.append(gid)
    if len(vectors) != len(cycles) - 1:
        raise AssertionError("sign-vector flood did not reach every face")

    faces: list[Face] = []
    polygons: list[list[Point]] = []
    for fid, cycle in enumerate(cycles):
        if fid == outer_fid:
            continue
        edge_count = 0
        ray_count = 0
        sides: set[str] = set()
        for eid, _ in cycle:
            if edge_line[eid] is None:
                sides.add(edge_side[eid])
                continue
            edge_count += 1
            u, v = edge_ends[eid]
            if node_on_box[u] or node_on_box[v]:
                ray_count += 1
        polygons.append([nodes[head] for _, head in cycle])
        vec = tuple(vectors[fid])
        if all(s == 1 for s in vec):
            kind = FaceKind.TOP_UNBOUNDED
        elif all(s == -1 for s in vec):
            kind = FaceKind.BOTTOM_UNBOUNDED
        elif sides:
            if sides == {"L"}:
                kind = FaceKind.LEFT_UNBOUNDED
            elif sides == {"R"}:
                kind = FaceKind.RIGHT_UNBOUNDED
            else:
                raise AssertionError(f"unexpected box contact {sides} for face {vec}")
        else:
            kind = FaceKind.BOUNDED
        if (kind is FaceKind.BOUNDED) != (ray_count == 0):
            raise AssertionError("bounded face with rays (or unbounded without)")
        faces.append(Face(vec, edge_count, ray_count, kind))

    arr = Arrangement(
        lines=list(lines),
        vertices=vertices,
        per_line_order=per_line_order,
        clip_box=(half_w, half_h),
        faces=faces,
        face_polygons=polygons,
    )
    _check_structure(arr)
    return arr


def _direct_sign_vector(cycle, edge_ends, edge_line, nodes, lines) -> list[int]:
    for eid, head in cycle:
        i = edge_line[eid]
        if i is not None:
            break
    else:
        raise AssertionError("interior face without a line edge")
    u, v = edge_ends[eid]
    tail = u if head == v else v
    vec = []
    m = midpoint(nodes[tail], nodes[head])
    for j, line in enumerate(lines):
        if j == i:
            # the face lies left of tail->head; for a rightward edge that is above
            vec.append(1 if nodes[tail].x < nodes[head].x else -1)
            continue
        side = point_side_of_line(m, line)
        if side == 0:
            raise AssertionError("edge midpoint on a foreign line")
        vec.append(side)
    return vec


def _check_structure(arr: Arrangement) -> None:
    n = arr.n
    faces = arr.faces
    counts = {kind: 0 for kind in FaceKind}
    for f in faces:
        counts[f.kind] += 1
    checks = [
        (len(arr.vertices), comb(n, 2), "vertex count"),
        (len(faces), 1 + n + comb(n, 2), "face count"),
        (counts[FaceKind.BOUNDED], comb(n - 1, 2), "bounded faces"),
        (len(faces) - counts[FaceKind.BOUNDED], 2 * n, "unbounded faces"),
        (sum(f.edge_count for f in faces), 2 * n * n, "edge-face incidences"),
        (counts[FaceKind.TOP_UNBOUNDED], 1, "all-plus faces"),
        (counts[FaceKind.BOTTOM_UNBOUNDED], 1, "all-minus faces"),
    ]
    for actual, expected, label in checks:
        if actual != expected:
            raise AssertionError(f"{label}: got {actual}, expected {expected}")


@dataclass
class EuclideanCensus:
    """Face histograms of one arrangement, split by face category."""

    s: int | None
    n: int
    bounded: dict[int, int]
    top_edges: int
    bottom_edges: int
    left: dict[int, int]
    right: dict[int, int]

    def bounded_total(self) -> int:
        return sum(self.bounded.values())

    def unbounded_total(self) -> int:
        return 2 + sum(self.left.values()) + sum(self.right.values())

    def total_faces(self) -> int:
        return self.bounded_total() + self.unbounded_total()

    def degree_sum(self) -> int:
        hists = sum(
            k * c for hist in (self.bounded, self.left, self.right) for k, c in hist.items()
        )
        return hists + self.top_edges + self.bottom_edges

    def to_json_dict(self) -> dict:
        def hist(h: dict[int, int]) -> dict[str, int]:
            return {str(k): h[k] for k in sorted(h)}

        return {
            "s": self.s,
            "n": self.n,
            "bounded": hist(self.bounded),
            "top_edges": self.top_edges,
            "bottom_edges": self.bottom_edges,
            "left": hist(self.left),
            "right": hist(self.right),
        }


def euclidean_census(arr: Arrangement, s: int | None = None) -> EuclideanCensus:
    bounded: dict[int, int] = {}
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    top_edges = bottom_edges = None
    for face in arr.faces:
        if face.kind is FaceKind.TOP_UNBOUNDED:
            top_edges = face.edge_count
        elif face.kind is FaceKind.BOTTOM_UNBOUNDED:
            bottom_edges = face.edge_count
        else:
            hist = {
                FaceKind.BOUNDED: bounded,
                FaceKind.LEFT_UNBOUNDED: left,
                FaceKind.RIGHT_UNBOUNDED: right,
            }[face.kind]
            hist[face.edge_count] = hist.get(face.edge_count, 0) + 1
    assert top_edges is not None and bottom_edges is not None
    return EuclideanCensus(
        s=s,
        n=arr.n,
        bounded=dict(sorted(bounded.items())),
        top_edges=top_edges,
        bottom_edges=bottom_edges,
        left=dict(sorted(left.items())),
        right=dict(sorted(right.items())),
    )


def expected_euclidean_pentagons(s: int) -> int:
    return 3 * 2 ** (s - 1) - 2 * s - 1


def verify_euclidean_face_counts(census: EuclideanCensus) -> VerificationReport:
    """Check the Euclidean face-count claims for the dual chain arrangement.

    One named result per claim: the face without upper boundary has 3 edges,
    the one without lower boundary has 2, each of the left/right groups has
    exactly s-1 four-edge faces (rest with 2 or 3 edges), and the bounded
    faces split into 3*2^(s-1)-2s-1 pentagons plus triangles and tetragons.
    """
    if census.s is None:
        raise ValueError("census has no iteration number")
    s = census.s
    report = VerificationReport()
    report.require("euclidean.top_edges", 3, census.top_edges)
    report.require("euclidean.bottom_edges", 2, census.bottom_edges)
    for side, hist in (("left", census.left), ("right", census.right)):
        report.require(f"euclidean.{side}_four_edge_faces", s - 1, hist.get(4, 0))
        others = sorted(k for k in hist if k != 4)
        report.add(
            f"euclidean.{side}_other_faces_in_2_3",
            all(k in (2, 3) for k in others),
            "{2, 3}",
            others,
        )
    report.require(
        "euclidean.bounded_pentagons",
        expected_euclidean_pentagons(s),
        census.bounded.get(5, 0),
    )
    others = sorted(k for k in census.bounded if k != 5)
    report.add(
        "euclidean.bounded_other_faces_in_3_4",
        all(k in (3, 4) for k in others),
        "{3, 4}",
        others,
    )
    report.add(
        "euclidean.max_bounded_size",
        max(census.bounded, default=0) <= 5,
        "<= 5",
        max(census.bounded, default=0),
    )
    max_unbounded = max(
        [census.top_edges, census.bottom_edges]
        + [k for hist in (census.left, census.right) for k in hist]
    )
    report.add("euclidean.max_unbounded_size", max_unbounded <= 4, "<= 4", max_unbounded)
    return report


def pentagon_recurrence_check(censuses: list[EuclideanCensus]) -> bool:
    """True iff bounded-pentagon counts follow N_s = 2*N_{s-1} + 1 + 2*(s-2)."""
    by_s = {c.s: c for c in censuses}
    if any(s is None for s in by_s):
        raise ValueError("every census needs an iteration number")
    ordered = sorted(by_s)
    if len(ordered) < 2 or ordered != list(range(ordered[0], ordered[-1] + 1)):
        raise ValueError("need censuses at consecutive iterations")
    for prev, cur in zip(ordered, ordered[1:]):
        n_prev = by_s[prev].bounded.get(5, 0)
        n_cur = by_s[cur].bounded.get(5, 0)
        if n_cur != 2 * n_prev + 1 + 2 * (cur - 2):
            return False
    return True
