"""Planar diagram codes, Tait graphs, link determinants, tangle closures.

A link diagram is recorded as a PD code: one crossing per line, each a
4-tuple of arc labels read counterclockwise starting at the incoming
understrand (the de facto standard convention, so slots 0 and 2 carry the
understrand).  Arcs are the strand segments between crossings; every arc
label occurs exactly twice.  Crossingless circles are tracked as a count
of free loops, not as arcs.

Faces are traced combinatorially: from a crossing slot, jump to the other
occurrence of the arc label, then step to the next slot counterclockwise.
A code is accepted only if this walk produces exactly crossings + 2 faces
(the Euler count for a connected diagram on the sphere); anything else is
rejected as unrealizable.

Checkerboard shading 2-colors the faces so faces sharing an arc differ,
with the unbounded face unshaded.  PD codes carry no embedding frame, so
the unbounded face is chosen deterministically as the face with the most
corners (ties to the lowest face id); callers may override by naming an
arc on the outer face.  Determinants never depend on the choice.

The Tait graph has one vertex per shaded face and one signed edge per
crossing, joining the two shaded faces meeting there.  Crossing sign
convention, fixed here once and for all: the weight is +1 when rotating
the understrand counterclockwise onto the overstrand sweeps through the
shaded quadrants, and -1 otherwise.  Any globally consistent choice gives
the same absolute tree weight, i.e. the same link determinant.  Each
crossingless free loop contributes one isolated vertex (to the dual Tait
graph as well), so a diagram with a free loop plus anything else is split
and its determinant vanishes.

Tangles are PD codes plus an ordered boundary of 2n endpoint labels,
clockwise from the top-left endpoint (n endpoints above, n below).  A
closure joins boundary endpoints in non-crossing pairs; there are Catalan
many such patterns.  For 4-tangles the pattern {(1,2),(3,4)} is the
numerator closure and {(1,4),(2,3)} the denominator closure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import laplacian as _laplacian
from .composition import KrebesVerdict, krebes_verdict
from .graph import WeightedMultigraph, build_graph

Dart = tuple[int, int]  # (crossing index, slot index)


class PDSyntaxError(ValueError):
    """Unparseable PD or tangle text."""


class DiagramError(ValueError):
    """Structurally invalid or unrealizable diagram data."""


class TangleSizeError(ValueError):
    """Tangle boundary size outside the asserted obstruction theorems."""


@dataclass(frozen=True)
class Crossing:
    """Four arc labels counterclockwise from the incoming understrand."""

    arcs: tuple[int, int, int, int]


@dataclass(frozen=True)
class PlanarDiagramCode:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0


@dataclass(frozen=True)
class TangleCode:
    """Crossing list plus boundary labels, clockwise from top-left.

    A boundary label occurring twice on the boundary (and never at a
    crossing) is a crossingless strand through the tangle.
    """

    crossings: tuple[Crossing, ...]
    boundary: tuple[int, ...]
    free_loops: int = 0

    @property
    def n(self) -> int:
        return len(self.boundary) // 2


@dataclass(frozen=True)
class FaceStructure:
    """Faces of a diagram as corner orbits.

    Each face is a tuple of corners; the corner ``(c, s)`` stands for the
    quadrant of crossing ``c`` swept between slots ``s - 1`` and ``s``.
    ``corner_face`` maps corner to face id, ``arc_sides`` maps each arc
    label to the two faces along it.  Synthetic faces for crossingless
    loops (one disk per loop, plus an unbounded face when there are no
    crossings at all) follow the crossing faces and have no corners.
    """

    faces: tuple[tuple[Dart, ...], ...]
    corner_face: Mapping[Dart, int]
    arc_sides: Mapping[int, tuple[int, int]]
    crossing_face_count: int
    loop_faces: tuple[int, ...]
    outer_synthetic: int | None


@dataclass(frozen=True)
class Shading:
    shaded: frozenset[int]
    unshaded: frozenset[int]
    outer_face: int


@dataclass(frozen=True)
class TaitGraph:
    """A signed multigraph with face and crossing provenance."""

    graph: WeightedMultigraph
    face_of_vertex: Mapping[int, int]
    crossing_of_edge: Mapping[int, int]
    shading: Shading
    dual: bool = False


@dataclass(frozen=True)
class ClosurePattern:
    """A non-crossing perfect matching of the 2n boundary positions."""

    matching: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> "ClosurePattern":
        matching = tuple(sorted(tuple(sorted(p)) for p in pairs))
        points = sorted(x for p in matching for x in p)
        if points != list(range(1, len(points) + 1)) or len(points) % 2:
            raise DiagramError(f"not a perfect matching of 1..2n: {matching}")
        for (a, b), (c, d) in itertools.combinations(matching, 2):
            if a < c < b < d or c < a < d < b:
                raise DiagramError(f"pattern chords cross: ({a},{b}) and ({c},{d})")
        return cls(matching)

    @property
    def n(self) -> int:
        return len(self.matching)

    def __str__(self) -> str:
        return " ".join(f"{a}-{b}" for a, b in self.matching)


NUMERATOR = ClosurePattern.of([(1, 2), (3, 4)])
DENOMINATOR = ClosurePattern.of([(1, 4), (2, 3)])


# ---------------------------------------------------------------------------
# Parsing


def _parse_statements(text: str) -> tuple[list[Crossing], int, list[tuple[int, ...]]]:
    crossings: list[Crossing] = []
    loops = 0
    boundaries: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        keyword, args = parts[0], parts[1:]
        try:
            values = [int(tok) for tok in args]
        except ValueError:
            raise PDSyntaxError(f"line {lineno}: expected integers after {keyword!r}")
        if keyword == "X":
            if len(values) != 4 or any(v < 1 for v in values):
                raise PDSyntaxError(f"line {lineno}: X needs four positive arc labels")
            crossings.append(Crossing((values[0], values[1], values[2], values[3])))
        elif keyword == "L":
            if len(values) != 1 or values[0] < 0:
                raise PDSyntaxError(f"line {lineno}: L needs one nonnegative count")
            loops += values[0]
        elif keyword == "B":
            if len(values) < 2 or len(values) % 2 or any(v < 1 for v in values):
                raise PDSyntaxError(f"line {lineno}: B needs 2n positive labels")
            boundaries.append(tuple(values))
        else:
            raise PDSyntaxError(f"line {lineno}: unknown statement {keyword!r}")
    return crossings, loops, boundaries


def _slot_label_counts(crossings: Iterable[Crossing]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for crossing in crossings:
        for label in crossing.arcs:
            counts[label] = counts.get(label, 0) + 1
    return counts


def validate_link_code(code: PlanarDiagramCode) -> None:
    """Reject codes with bad arc multiplicities or a failed Euler count."""
    if not code.crossings and not code.free_loops:
        raise DiagramError("empty diagram: no crossings and no free loops")
    bad = {lab: c for lab, c in _slot_label_counts(code.crossings).items() if c != 2}
    if bad:
        raise DiagramError(f"arc labels must occur exactly twice, violated by: {sorted(bad)}")
    if code.crossings:
        trace_faces(code)  # raises when the face count is not crossings + 2


def parse_pd(text: str) -> PlanarDiagramCode:
    """Parse and validate a link PD file (statements X, L, comments)."""
    crossings, loops, boundaries = _parse_statements(text)
    if boundaries:
        raise PDSyntaxError("boundary (B) lines are only allowed in tangle files")
    code = PlanarDiagramCode(tuple(crossings), loops)
    validate_link_code(code)
    return code


def parse_tangle(text: str) -> TangleCode:
    """Parse and validate a tangle file (exactly one B line)."""
    crossings, loops, boundaries = _parse_statements(text)
    if len(boundaries) != 1:
        raise PDSyntaxError("a tangle file must contain exactly one B line")
    tangle = TangleCode(tuple(crossings), boundaries[0], loops)
    validate_tangle_code(tangle)
    return tangle


def validate_tangle_code(tangle: TangleCode) -> None:
    counts = _slot_label_counts(tangle.crossings)
    for label in tangle.boundary:
        counts[label] = counts.get(label, 0) + 1
    bad = {lab: c for lab, c in counts.items() if c != 2}
    if bad:
        raise DiagramError(
            f"every label must occur exactly twice across crossings and boundary: {sorted(bad)}"
        )
    if len(tangle.boundary) < 2 or len(tangle.boundary) % 2:
        raise DiagramError("a tangle needs an even number (2n >= 2) of boundary endpoints")


# ---------------------------------------------------------------------------
# Faces and shading


def trace_faces(code: PlanarDiagramCode) -> FaceStructure:
    """Trace the faces of a diagram as orbits of the corner walk.

    From a slot, move to the other occurrence of its arc label, then step
    one slot counterclockwise; orbits of this walk are the faces.  Raises
    when the orbit count differs from crossings + 2.
    """
    occurrences: dict[int, list[Dart]] = {}
    for ci, crossing in enumerate(code.crossings):
        for slot, label in enumerate(crossing.arcs):
            occurrences.setdefault(label, []).append((ci, slot))
    mate: dict[Dart, Dart] = {}
    for label, darts in occurrences.items():
        if len(darts) != 2:
            raise DiagramError(f"arc label {label} occurs {len(darts)} times, expected 2")
        mate[darts[0]] = darts[1]
        mate[darts[1]] = darts[0]

    faces: list[tuple[Dart, ...]] = []
    seen: set[Dart] = set()
    for start in sorted(mate):
        if start in seen:
            continue
        orbit = []
        dart = start
        while True:
            orbit.append(dart)
            seen.add(dart)
            m = mate[dart]
            dart = (m[0], (m[1] + 1) % 4)
            if dart == start:
                break
        faces.append(tuple(orbit))
    if code.crossings and len(faces) != len(code.crossings) + 2:
        raise DiagramError(
            f"diagram is not realizable: {len(faces)} faces for {len(code.crossings)} crossings"
        )

    crossing_face_count = len(faces)
    corner_face = {dart: fid for fid, orbit in enumerate(faces) for dart in orbit}
    arc_sides = {
        label: (corner_face[darts[0]], corner_face[darts[1]])
        for label, darts in occurrences.items()
    }

    outer_synthetic = None
    if not code.crossings and code.free_loops:
        faces.append(())
        outer_synthetic = len(faces) - 1
    loop_faces = []
    for _ in range(code.free_loops):
        faces.append(())
        loop_faces.append(len(faces) - 1)

    return FaceStructure(
        faces=tuple(faces),
        corner_face=corner_face,
        arc_sides=arc_sides,
        crossing_face_count=crossing_face_count,
        loop_faces=tuple(loop_faces),
        outer_synthetic=outer_synthetic,
    )


def checkerboard_shading(structure: FaceStructure, outer_arc: int | None = None) -> Shading:
    """Two-color the faces with the unbounded face unshaded.

    Deterministic: the unbounded face is the crossing face with the most
    corners (ties to the lowest id) unless ``outer_arc`` names an arc on
    the outer face, in which case the larger of its two faces is used.
    Loop disks are shaded.
    """
    ncf = structure.crossing_face_count
    if ncf == 0:
        outer = structure.outer_synthetic
        if outer is None:
            raise DiagramError("nothing to shade: empty diagram")
        return Shading(
            shaded=frozenset(structure.loop_faces),
            unshaded=frozenset({outer}),
            outer_face=outer,
        )

    if outer_arc is not None:
        if outer_arc not in structure.arc_sides:
            raise DiagramError(f"unknown arc {outer_arc} for the outer-face override")
        candidates: Iterable[int] = structure.arc_sides[outer_arc]
    else:
        candidates = range(ncf)
    outer = min(candidates, key=lambda f: (-len(structure.faces[f]), f))

    colors = {outer: 0}
    neighbors: dict[int, list[int]] = {f: [] for f in range(ncf)}
    for f1, f2 in structure.arc_sides.values():
        neighbors[f1].append(f2)
        neighbors[f2].append(f1)
    queue = [outer]
    while queue:
        f = queue.pop()
        for g in neighbors[f]:
            if g not in colors:
                colors[g] = 1 - colors[f]
                queue.append(g)
            elif colors[g] == colors[f]:
                raise DiagramError("face adjacency is not 2-colorable (internal error)")
    if len(colors) != ncf:
        raise DiagramError("face adjacency is disconnected (internal error)")

    shaded = frozenset(f for f, c in colors.items() if c == 1) | frozenset(structure.loop_faces)
    unshaded = frozenset(f for f, c in colors.items() if c == 0)
    if structure.outer_synthetic is not None:
        unshaded |= {structure.outer_synthetic}
    return Shading(shaded=shaded, unshaded=unshaded, outer_face=outer)


# ---------------------------------------------------------------------------
# Tait graphs and determinants


def tait_graph(
    code: PlanarDiagramCode,
    *,
    dual: bool = False,
    outer_arc: int | None = None,
) -> TaitGraph:
    """Tait graph of a diagram: one vertex per shaded face, one edge per crossing.

    With ``dual=True`` the vertices are the unshaded faces instead; the
    determinant is unchanged.  Every crossingless free loop contributes one
    isolated vertex in either mode.  Edge weights are always +1 or -1, by
    the sweep convention described in the module docstring; edge ids equal
    crossing indices.
    """
    structure = trace_faces(code)
    shading = checkerboard_shading(structure, outer_arc=outer_arc)
    chosen = [
        f
        for f in range(structure.crossing_face_count)
        if (f in shading.shaded) != dual
    ]
    face_list = chosen + list(structure.loop_faces)
    vertex_of_face = {f: i + 1 for i, f in enumerate(face_list)}

    edges = []
    crossing_of_edge = {}
    for ci in range(len(code.crossings)):
        # quadrant[s] is the face between slots s and s+1 (mod 4)
        quadrant = [structure.corner_face[(ci, (s + 1) % 4)] for s in range(4)]
        shaded_02 = quadrant[0] in shading.shaded
        if (quadrant[2] in shading.shaded) != shaded_02 or (
            (quadrant[1] in shading.shaded) == shaded_02
        ):
            raise DiagramError("quadrant shading is inconsistent (internal error)")
        # Rotating the understrand (slots 0-2) counterclockwise sweeps the
        # quadrants at positions 0 and 2.
        weight = 1 if shaded_02 else -1
        if shaded_02 != dual:
            a, b = quadrant[0], quadrant[2]
        else:
            a, b = quadrant[1], quadrant[3]
        edges.append((vertex_of_face[a], vertex_of_face[b], weight))
        crossing_of_edge[ci] = ci

    graph = build_graph(sorted(vertex_of_face.values()), edges)
    face_of_vertex = {vid: f for f, vid in vertex_of_face.items()}
    return TaitGraph(
        graph=graph,
        face_of_vertex=face_of_vertex,
        crossing_of_edge=crossing_of_edge,
        shading=shading,
        dual=dual,
    )


def link_determinant(code: PlanarDiagramCode, *, dual: bool = False) -> int:
    """Absolute tree weight of the Tait graph, via the Laplacian minor path.

    One lone free loop gives 1; a free loop next to anything else splits
    the diagram and gives 0.
    """
    graph = tait_graph(code, dual=dual).graph
    return abs(_laplacian.tree_weight_mtt(graph))


# ---------------------------------------------------------------------------
# Closures


def enumerate_closures(n: int) -> list[ClosurePattern]:
    """All non-crossing perfect matchings of 2n cyclic points, sorted.

    The count is the nth Catalan number; patterns come out in lexicographic
    order, so for n = 2 the numerator closure precedes the denominator.
    """
    if n < 1:
        raise DiagramError("closures need n >= 1")

    def matchings(points: list[int]):
        if not points:
            yield []
            return
        first = points[0]
        for idx in range(1, len(points), 2):
            for inner in matchings(points[1:idx]):
                for outer in matchings(points[idx + 1 :]):
                    yield [(first, points[idx])] + inner + outer

    patterns = [ClosurePattern.of(m) for m in matchings(list(range(1, 2 * n + 1)))]
    patterns.sort(key=lambda p: p.matching)
    return patterns


def close_tangle(tangle: TangleCode, pattern: ClosurePattern) -> PlanarDiagramCode:
    """Join boundary endpoints according to ``pattern`` and validate the link.

    Matched boundary arcs are merged (union-find over arc labels); a merge
    that closes an arc chain onto itself adds a free loop.
    """
    if 2 * pattern.n != len(tangle.boundary):
        raise DiagramError(
            f"pattern joins {2 * pattern.n} endpoints but the boundary has {len(tangle.boundary)}"
        )

    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    free = tangle.free_loops
    for a, b in pattern.matching:
        ra = find(tangle.boundary[a - 1])
        rb = find(tangle.boundary[b - 1])
        if ra == rb:
            free += 1
        else:
            parent[max(ra, rb)] = min(ra, rb)

    crossings = tuple(
        Crossing(tuple(find(label) for label in crossing.arcs)) for crossing in tangle.crossings
    )
    code = PlanarDiagramCode(crossings, free)
    validate_link_code(code)
    return code


def closure_determinants(tangle: TangleCode) -> list[tuple[ClosurePattern, int]]:
    """Determinant of every closure, in canonical pattern order."""
    return [
        (pattern, link_determinant(close_tangle(tangle, pattern)))
        for pattern in enumerate_closures(tangle.n)
    ]


def krebes_check(tangle: TangleCode, link: PlanarDiagramCode) -> KrebesVerdict:
    """Gcd-divisibility obstruction for embedding ``tangle`` in ``link``.

    Asserted only for 4- and 6-tangles; for larger tangles the gcd is still
    computable via :func:`closure_determinants` but no verdict is issued.
    """
    if tangle.n not in (2, 3):
        raise TangleSizeError(
            f"{2 * tangle.n}-endpoint tangle: gcd computed, theorem not asserted by this tool "
            "(only 4- and 6-tangle verdicts are supported)"
        )
    dets = [det for _, det in closure_determinants(tangle)]
    return krebes_verdict(dets, link_determinant(link))


# ---------------------------------------------------------------------------
# Writing


def pd_text(code: PlanarDiagramCode) -> str:
    lines = [f"X {a} {b} {c} {d}" for (a, b, c, d) in (x.arcs for x in code.crossings)]
    if code.free_loops:
        lines.append(f"L {code.free_loops}")
    return "\n".join(lines) + "\n"


def tangle_text(tangle: TangleCode) -> str:
    lines = [f"X {a} {b} {c} {d}" for (a, b, c, d) in (x.arcs for x in tangle.crossings)]
    lines.append("B " + " ".join(str(p) for p in tangle.boundary))
    if tangle.free_loops:
        lines.append(f"L {tangle.free_loops}")
    return "\n".join(lines) + "\n"
