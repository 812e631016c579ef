"""Weighted multigraphs and exhaustive spanning-forest enumeration.

A finite multigraph (parallel edges and loops allowed) carries an integer
weight on every edge.  The tree weight of a graph is the sum, over all of
its spanning trees, of the product of the weights of the tree's edges; a
disconnected graph has tree weight 0, and a single vertex has tree weight
1 (the empty product).  For root sets ``gamma`` and ``gamma_prime`` of
equal size, the forest weight sums the same products over spanning forests
in which every component tree contains exactly one vertex of ``gamma`` and
exactly one vertex of ``gamma_prime``; a vertex lying in both sets may
serve both roles for its tree.  With ``gamma == gamma_prime`` the forests
are rooted at ``gamma``, and a singleton root set gives back the tree
weight.

Enumeration here is deliberately exhaustive: iterate over all edge subsets
of the right size, keep the acyclic ones, and check the root distribution.
This is the audit path against which the Laplacian-minor computations in
:mod:`forestlink.laplacian` are verified, and it is exact over arbitrary
Python integers.

Graphs are immutable after construction and every function is pure, so
everything in this module is safe for unrestricted concurrent use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class GraphError(ValueError):
    """Malformed graph, edge list, gluing, or root specification."""


@dataclass(frozen=True)
class WeightedEdge:
    """An undirected edge with an identifier and an integer weight.

    The endpoint pair is unordered; ``u == v`` makes the edge a loop.
    Loops never occur in spanning forests but are legal in graphs.
    """

    id: int
    u: int
    v: int
    weight: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def pair(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


@dataclass(frozen=True)
class WeightedMultigraph:
    """Vertex set plus multiset of weighted edges."""

    vertices: frozenset[int]
    edges: tuple[WeightedEdge, ...]

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def non_loop_edges(self) -> list[WeightedEdge]:
        return [e for e in self.edges if not e.is_loop]


@dataclass(frozen=True)
class RootSpec:
    """The pair of equal-size root sets selecting a forest class."""

    gamma: tuple[int, ...]
    gamma_prime: tuple[int, ...]

    @classmethod
    def rooted(cls, labels: Iterable[int]) -> "RootSpec":
        t = tuple(labels)
        return cls(t, t)

    @property
    def is_principal(self) -> bool:
        return set(self.gamma) == set(self.gamma_prime)

    def validate(self, graph: WeightedMultigraph) -> None:
        if len(self.gamma) != len(self.gamma_prime):
            raise GraphError("root sets must have equal cardinality")
        for side, labels in (("gamma", self.gamma), ("gamma_prime", self.gamma_prime)):
            if len(set(labels)) != len(labels):
                raise GraphError(f"{side} contains repeated vertices")
            missing = set(labels) - graph.vertices
            if missing:
                raise GraphError(f"{side} names vertices not in the graph: {sorted(missing)}")


@dataclass(frozen=True)
class SpanningForest:
    """A forest recorded as the set of its edge identifiers."""

    edge_ids: frozenset[int]


def build_graph(vertices: Iterable[int], edges: Iterable[tuple[int, int, int]]) -> WeightedMultigraph:
    """Build a graph from vertex labels and (u, v, weight) triples.

    Labels must be distinct positive integers and every endpoint must be a
    declared vertex.  Edges receive fresh identifiers in input order, so
    repeated (u, v) entries yield parallel edges.
    """
    labels = list(vertices)
    for v in labels:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise GraphError(f"vertex labels must be positive integers, got {v!r}")
    if len(set(labels)) != len(labels):
        seen, dups = set(), set()
        for v in labels:
            (dups if v in seen else seen).add(v)
        raise GraphError(f"duplicate vertex labels: {sorted(dups)}")
    vset = frozenset(labels)
    built = []
    for i, (u, v, w) in enumerate(edges):
        if u not in vset or v not in vset:
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
        if not isinstance(w, int) or isinstance(w, bool):
            raise GraphError(f"edge weights must be integers, got {w!r}")
        built.append(WeightedEdge(i, u, v, w))
    return WeightedMultigraph(vset, tuple(built))


def relabel(graph: WeightedMultigraph, mapping: Mapping[int, int]) -> WeightedMultigraph:
    """Rename vertices through ``mapping`` (identity where unspecified)."""
    new_labels = [mapping.get(v, v) for v in graph.sorted_vertices()]
    if len(set(new_labels)) != len(new_labels):
        raise GraphError("relabeling is not injective on the vertex set")
    edges = tuple(
        WeightedEdge(e.id, mapping.get(e.u, e.u), mapping.get(e.v, e.v), e.weight)
        for e in graph.edges
    )
    out = WeightedMultigraph(frozenset(new_labels), edges)
    for v in new_labels:
        if not isinstance(v, int) or v < 1:
            raise GraphError(f"relabeling produced a non-positive label {v!r}")
    return out


def collapse_parallel(graph: WeightedMultigraph) -> WeightedMultigraph:
    """Merge every parallel class into a single edge of summed weight.

    Tree and forest weights are multilinear over parallel classes, so this
    changes no weight computed from the graph.
    """
    totals: dict[tuple[int, int], int] = {}
    for e in graph.edges:
        key = e.pair()
        totals[key] = totals.get(key, 0) + e.weight
    edges = [(u, v, w) for (u, v), w in sorted(totals.items())]
    return build_graph(graph.sorted_vertices(), edges)


def glue(
    h: WeightedMultigraph,
    k: WeightedMultigraph,
    identification: Mapping[int, int] | Iterable[int],
) -> WeightedMultigraph:
    """Form the union of ``h`` and ``k`` identified along shared vertices.

    ``identification`` maps vertices of ``k`` onto vertices of ``h``; a
    plain iterable of labels is shorthand for the identity map on labels
    common to both graphs.  The result contains every edge of both inputs
    (never merged), and its vertex set is ``h``'s plus the unidentified
    part of ``k``'s.  Unidentified labels of ``k`` must not collide with
    labels of ``h``.
    """
    if not isinstance(identification, Mapping):
        identification = {x: x for x in identification}
    for kv, hv in identification.items():
        if kv not in k.vertices:
            raise GraphError(f"identified vertex {kv} is not in the second graph")
        if hv not in h.vertices:
            raise GraphError(f"identified vertex {hv} is not in the first graph")
    if len(set(identification.values())) != len(identification):
        raise GraphError("identification maps two vertices to the same target")
    leftover = k.vertices - set(identification)
    collision = leftover & h.vertices
    if collision:
        raise GraphError(f"vertex labels collide outside the identified set: {sorted(collision)}")

    def image(v: int) -> int:
        return identification.get(v, v)

    vertices = sorted(h.vertices | leftover)
    edges = [(e.u, e.v, e.weight) for e in h.edges]
    edges.extend((image(e.u), image(e.v), e.weight) for e in k.edges)
    return build_graph(vertices, edges)


def contract_vertices(graph: WeightedMultigraph, s: Iterable[int]) -> WeightedMultigraph:
    """Amalgamate the vertices of ``s`` into one vertex (the lowest label).

    Edges are re-endpointed; edges inside ``s`` become loops and are kept.
    Loops never enter spanning forests, so retained loops are invisible to
    every weight.  The tree weight of the contraction equals the forest
    weight of the original graph rooted at ``s``.
    """
    s = set(s)
    if not s:
        raise GraphError("contraction set is empty")
    if not s <= graph.vertices:
        raise GraphError(f"contraction set is not a subset of the vertices: {sorted(s - graph.vertices)}")
    target = min(s)

    def image(v: int) -> int:
        return target if v in s else v

    vertices = frozenset(image(v) for v in graph.vertices)
    edges = tuple(WeightedEdge(e.id, image(e.u), image(e.v), e.weight) for e in graph.edges)
    return WeightedMultigraph(vertices, edges)


class _DisjointSet:
    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def _iter_forest_edge_sets(
    graph: WeightedMultigraph, roots: RootSpec
) -> Iterator[tuple[WeightedEdge, ...]]:
    """Yield the edge tuples of forests in the class selected by ``roots``.

    Iterates every (|V| - |gamma|)-subset of the non-loop edges, keeps the
    acyclic ones, then requires each component to hold exactly one vertex
    from each root set.  Subsets come out in lexicographic edge-id order.
    """
    roots.validate(graph)
    verts = graph.sorted_vertices()
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    r = len(roots.gamma)
    size = n - r
    if size < 0:
        return
    gamma = [index[v] for v in roots.gamma]
    gamma_prime = [index[v] for v in roots.gamma_prime]
    for combo in itertools.combinations(graph.non_loop_edges(), size):
        ds = _DisjointSet(n)
        for e in combo:
            if not ds.union(index[e.u], index[e.v]):
                break
        else:
            # Acyclic with n - r edges, hence exactly r components.  Each
            # root set has r members, so pairwise-distinct components per
            # root set means exactly one root of each kind per component.
            if len({ds.find(i) for i in gamma}) != r:
                continue
            if len({ds.find(i) for i in gamma_prime}) != r:
                continue
            yield combo


def enumerate_forests(graph: WeightedMultigraph, roots: RootSpec) -> list[SpanningForest]:
    """List the spanning forests selected by ``roots``.

    With ``gamma == gamma_prime`` a singleton, the result is the set of
    spanning trees; for a disconnected graph it is empty.
    """
    return [
        SpanningForest(frozenset(e.id for e in combo))
        for combo in _iter_forest_edge_sets(graph, roots)
    ]


def forest_weight_enum(graph: WeightedMultigraph, roots: RootSpec) -> int:
    """Sum of edge-weight products over the forests selected by ``roots``."""
    total = 0
    for combo in _iter_forest_edge_sets(graph, roots):
        product = 1
        for e in combo:
            product *= e.weight
        total += product
    return total


def tree_weight_enum(graph: WeightedMultigraph) -> int:
    """Sum of edge-weight products over all spanning trees.

    The empty graph has weight 0 by convention, a single vertex weight 1,
    and any disconnected graph weight 0.
    """
    if not graph.vertices:
        return 0
    root = min(graph.vertices)
    return forest_weight_enum(graph, RootSpec.rooted([root]))


def graph_to_json_dict(graph: WeightedMultigraph) -> dict:
    """Serialize to the interchange form {"vertices": [...], "edges": [...]}"""
    return {
        "vertices": graph.sorted_vertices(),
        "edges": [{"u": e.u, "v": e.v, "w": e.weight} for e in graph.edges],
    }


def graph_from_json_dict(data: object) -> WeightedMultigraph:
    """Parse the interchange form produced by :func:`graph_to_json_dict`."""
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise GraphError('graph JSON must be an object with "vertices" and "edges"')
    raw_edges = data["edges"]
    if not isinstance(raw_edges, list):
        raise GraphError('"edges" must be a list')
    triples = []
    for entry in raw_edges:
        if not isinstance(entry, dict) or not {"u", "v", "w"} <= set(entry):
            raise GraphError(f'edge entries must be objects with "u", "v", "w": {entry!r}')
        triples.append((entry["u"], entry["v"], entry["w"]))
    return build_graph(data["vertices"], triples)
