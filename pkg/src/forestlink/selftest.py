"""Seeded randomized property suites, runnable from the CLI.

Each suite draws fresh random instances from a per-iteration seed derived
from the global seed, so runs are reproducible and iterations independent
(they could be sharded).  A failing iteration produces a record with the
offending instance serialized in the standard file formats, ready to be
replayed through the other subcommands.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import laplacian as _laplacian
from .composition import (
    CrossCheckError,
    GluedPair,
    gcd_list,
    verify_gluing_three,
    verify_gluing_two,
)
from .diagram import (
    Crossing,
    TangleCode,
    close_tangle,
    closure_determinants,
    enumerate_closures,
    link_determinant,
    pd_text,
    tangle_text,
)
from .graph import (
    RootSpec,
    WeightedMultigraph,
    build_graph,
    contract_vertices,
    forest_weight_enum,
    glue,
    graph_to_json_dict,
    tree_weight_enum,
)

DEFAULT_SEED = 1729


@dataclass
class FailureRecord:
    description: str
    files: dict[str, str] = field(default_factory=dict)


@dataclass
class SuiteOutcome:
    name: str
    iterations: int
    failures: list[tuple[int, FailureRecord]]

    @property
    def ok(self) -> bool:
        return not self.failures


def _graph_json(graph: WeightedMultigraph) -> str:
    return json.dumps(graph_to_json_dict(graph), indent=1) + "\n"


def _report_json(report) -> str:
    return json.dumps(report.to_json_dict()) + "\n"


# ---------------------------------------------------------------------------
# Random instance generators


def random_graph(
    rng: random.Random,
    max_vertices: int = 8,
    max_edges: int = 12,
    weight_lo: int = -3,
    weight_hi: int = 3,
) -> WeightedMultigraph:
    """A random multigraph; labels are occasionally scattered to exercise
    label independence, and loops arise from coincident endpoints.

    Edge counts are biased upward so most draws are connected (weights of
    disconnected graphs vanish and make for weak identity checks), with a
    sparse minority kept to cover the zero conventions.
    """
    n = rng.randint(1, max_vertices)
    if rng.random() < 0.3:
        labels = sorted(rng.sample(range(1, 60), n))
    else:
        labels = list(range(1, n + 1))
    edges = []
    if rng.random() < 0.75:
        # random tree skeleton, so the draw is connected
        for i in range(1, n):
            edges.append((labels[rng.randrange(i)], labels[i], rng.randint(weight_lo, weight_hi)))
    for _ in range(rng.randint(0, max_edges - len(edges))):
        edges.append((rng.choice(labels), rng.choice(labels), rng.randint(weight_lo, weight_hi)))
    return build_graph(labels, edges)


def random_glued_pair(
    rng: random.Random,
    shared_n: int,
    max_side_vertices: int = 6,
    max_side_edges: int = 7,
    weight_lo: int = -3,
    weight_hi: int = 3,
) -> GluedPair:
    """Two random graphs meeting exactly in the labels 1..shared_n."""
    shared = tuple(range(1, shared_n + 1))

    def side(offset: int) -> WeightedMultigraph:
        extra = rng.randint(0, max_side_vertices - shared_n)
        labels = list(shared) + list(range(offset, offset + extra))
        edges = []
        if rng.random() < 0.75:
            for i in range(1, len(labels)):
                edges.append(
                    (labels[rng.randrange(i)], labels[i], rng.randint(weight_lo, weight_hi))
                )
        for _ in range(rng.randint(0, max(0, max_side_edges - len(edges)))):
            edges.append(
                (rng.choice(labels), rng.choice(labels), rng.randint(weight_lo, weight_hi))
            )
        return build_graph(labels, edges)

    return GluedPair(side(100), side(200), shared)


def random_braid_tangle(
    rng: random.Random,
    strands: int,
    max_crossings: int = 5,
    loop_chance: float = 0.15,
) -> TangleCode:
    """A random braid-style tangle on ``strands`` strands (2n = 2*strands).

    Strands run top to bottom; each crossing swaps two adjacent strand
    positions with a random over/under choice.  Braid diagrams are always
    valid tangle diagrams.
    """
    counter = iter(range(1, 10_000))
    current = [next(counter) for _ in range(strands)]
    tops = list(current)
    crossings = []
    for _ in range(rng.randint(0, max_crossings)):
        pos = rng.randrange(strands - 1)
        tl, tr = current[pos], current[pos + 1]
        bl, br = next(counter), next(counter)
        if rng.random() < 0.5:
            crossings.append(Crossing((tl, bl, br, tr)))  # upper-left strand under
        else:
            crossings.append(Crossing((tr, tl, bl, br)))  # upper-right strand under
        current[pos], current[pos + 1] = bl, br
    boundary = tuple(tops + list(reversed(current)))
    free = 1 if rng.random() < loop_chance else 0
    return TangleCode(tuple(crossings), boundary, free)


# ---------------------------------------------------------------------------
# Suites: each takes a per-iteration rng and returns None or a failure


def _suite_matrix_tree(rng: random.Random) -> FailureRecord | None:
    graph = random_graph(rng)
    lap = _laplacian.laplacian_matrix(graph)
    n = lap.rows
    for i in range(n):
        if lap.at(i, i) != sum(
            e.weight for e in graph.non_loop_edges() if lap.row_labels[i] in (e.u, e.v)
        ):
            return FailureRecord("bad diagonal entry", {"graph.json": _graph_json(graph)})
        for j in range(n):
            if lap.at(i, j) != lap.at(j, i):
                return FailureRecord("laplacian not symmetric", {"graph.json": _graph_json(graph)})
        if sum(lap.at(i, j) for j in range(n)) != 0:
            return FailureRecord("laplacian row sum nonzero", {"graph.json": _graph_json(graph)})
    by_enum = tree_weight_enum(graph)
    for v in graph.sorted_vertices():
        if _laplacian.minor(lap, [v], [v]) != by_enum:
            return FailureRecord(
                f"principal minor at {v} disagrees with enumeration ({by_enum})",
                {"graph.json": _graph_json(graph)},
            )
    r = rng.randint(1, n)
    gamma = tuple(rng.sample(graph.sorted_vertices(), r))
    if forest_weight_enum(graph, RootSpec.rooted(gamma)) != _laplacian.minor(lap, gamma, gamma):
        return FailureRecord(
            f"rooted forest weight at {gamma} disagrees with the principal minor",
            {"graph.json": _graph_json(graph)},
        )
    return None


def _suite_contraction(rng: random.Random) -> FailureRecord | None:
    graph = random_graph(rng)
    if len(graph.vertices) < 2:
        return None
    u, v = rng.sample(graph.sorted_vertices(), 2)
    contracted = tree_weight_enum(contract_vertices(graph, {u, v}))
    rooted = forest_weight_enum(graph, RootSpec.rooted((u, v)))
    if contracted != rooted:
        return FailureRecord(
            f"contracting {{{u},{v}}} gives {contracted}, rooted weight is {rooted}",
            {"graph.json": _graph_json(graph)},
        )
    return None


def _pair_files(pair: GluedPair) -> dict[str, str]:
    return {"h.json": _graph_json(pair.h), "k.json": _graph_json(pair.k)}


def _suite_gluing_pairs(rng: random.Random) -> FailureRecord | None:
    pair = random_glued_pair(rng, 2)
    try:
        report = verify_gluing_two(pair)
    except CrossCheckError as exc:
        return FailureRecord(str(exc), _pair_files(pair))
    if not report.equal:
        files = _pair_files(pair)
        files["report.json"] = _report_json(report)
        return FailureRecord("two-vertex gluing identity failed", files)
    return None


def _suite_gluing_triples(rng: random.Random) -> FailureRecord | None:
    pair = random_glued_pair(rng, 3)
    try:
        report = verify_gluing_three(pair)
    except CrossCheckError as exc:
        return FailureRecord(str(exc), _pair_files(pair))
    if not report.equal:
        files = _pair_files(pair)
        files["report.json"] = _report_json(report)
        return FailureRecord("three-vertex gluing identity failed", files)
    return None


def _suite_join(rng: random.Random) -> FailureRecord | None:
    pair = random_glued_pair(rng, 1)
    glued = glue(pair.h, pair.k, {1: 1})
    product = tree_weight_enum(pair.h) * tree_weight_enum(pair.k)
    whole = tree_weight_enum(glued)
    if whole != product:
        return FailureRecord(
            f"join multiplicativity failed: {whole} != {product}", _pair_files(pair)
        )
    return None


def _suite_divisibility(rng: random.Random) -> FailureRecord | None:
    shared_n = rng.choice((2, 3))
    pair = random_glued_pair(rng, shared_n)
    glued = glue(pair.h, pair.k, {s: s for s in pair.shared})
    whole = abs(tree_weight_enum(glued))
    weights = [abs(tree_weight_enum(pair.h))]
    if shared_n == 2:
        weights.append(abs(forest_weight_enum(pair.h, RootSpec.rooted((1, 2)))))
    else:
        for gamma in ((1, 2), (2, 3), (1, 3), (1, 2, 3)):
            weights.append(abs(forest_weight_enum(pair.h, RootSpec.rooted(gamma))))
    g = gcd_list(weights)
    ok = (whole == 0) if g == 0 else (whole % g == 0)
    if not ok:
        return FailureRecord(
            f"gcd {g} of the side weights does not divide {whole}", _pair_files(pair)
        )
    return None


def _suite_closures(rng: random.Random) -> FailureRecord | None:
    n = rng.randint(1, 5)
    patterns = {p.matching for p in enumerate_closures(n)}
    brute = {m for m in _all_matchings(2 * n) if _noncrossing(m)}
    if patterns != brute:
        return FailureRecord(f"closure patterns for n={n} differ from the brute-force matcher")
    return None


def _suite_tangles(rng: random.Random) -> FailureRecord | None:
    tangle = random_braid_tangle(rng, rng.choice((2, 3)))
    dets = [det for _, det in closure_determinants(tangle)]
    g = gcd_list(dets)
    for pattern, det in closure_determinants(tangle):
        ok = (det == 0) if g == 0 else (det % g == 0)
        if not ok:
            return FailureRecord(
                f"gcd {g} of closure determinants does not divide closure {pattern} (det {det})",
                {"tangle.pd": tangle_text(tangle)},
            )
        code = close_tangle(tangle, pattern)
        if link_determinant(code) != link_determinant(code, dual=True):
            return FailureRecord(
                f"dual shading changed the determinant of closure {pattern}",
                {"tangle.pd": tangle_text(tangle), "closure.pd": pd_text(code)},
            )
    return None


SUITES = (
    ("matrix-tree", _suite_matrix_tree),
    ("contraction", _suite_contraction),
    ("gluing-pairs", _suite_gluing_pairs),
    ("gluing-triples", _suite_gluing_triples),
    ("join", _suite_join),
    ("divisibility", _suite_divisibility),
    ("closures", _suite_closures),
    ("tangles", _suite_tangles),
)


def _all_matchings(n_points: int):
    """Every perfect matching of 1..n_points (the oracle side)."""
    points = list(range(1, n_points + 1))

    def rec(remaining):
        if not remaining:
            yield ()
            return
        first = remaining[0]
        for i in range(1, len(remaining)):
            rest = remaining[1:i] + remaining[i + 1 :]
            for m in rec(rest):
                yield (tuple(sorted((first, remaining[i]))),) + m

    for m in rec(points):
        yield tuple(sorted(m))


def _noncrossing(matching) -> bool:
    for (a, b), (c, d) in ((p, q) for p in matching for q in matching if p < q):
        if a < c < b < d or c < a < d < b:
            return False
    return True


def run_selftest(iterations: int, seed: int = DEFAULT_SEED) -> list[SuiteOutcome]:
    """Run every suite ``iterations`` times; deterministic in ``seed``."""
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    outcomes = []
    for name, fn in SUITES:
        failures: list[tuple[int, FailureRecord]] = []
        for i in range(iterations):
            rng = random.Random(f"{seed}/{name}/{i}")
            record = fn(rng)
            if record is not None:
                failures.append((i, record))
        outcomes.append(SuiteOutcome(name, iterations, failures))
    return outcomes
