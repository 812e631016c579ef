"""Gluing identities for tree weights and gcd-divisibility verdicts.

When a graph G is the union of subgraphs H and K meeting exactly in a set
of shared vertices, its tree weight decomposes over the ways a spanning
tree can intersect the two sides.  Meeting in a single vertex gives plain
multiplicativity, w(G) = w(H) * w(K).  Meeting in two vertices 1, 2:

    w(G) = w(H) * w(K, {1,2}) + w(H, {1,2}) * w(K)

where w(X, S) is the forest weight of X rooted at S.  Meeting in three
vertices 1, 2, 3 gives five terms: the tree weights pair with the fully
rooted forest weights of the other side, and each 2-subset rooted weight
of H pairs with the mixed-root weight of K whose forests keep that pair
together, e.g.

    w(H, {1,2}) * w(K, {1,3}, {2,3})

counts the case where 1 and 2 fall in one component of the tree's K-part
and 3 in the other.  Mixed-root weights take their sign straight from the
definition (a plain sum of products, no minor-derived sign).

The verifiers below recompute both sides from scratch: every tree weight
and every rooted (principal) forest weight is evaluated by exhaustive
enumeration and cross-checked against the corresponding Laplacian minor;
mixed-root weights come from enumeration alone.  A report with
``equal=False`` therefore indicates an implementation bug, and the report
content exists for diagnosis.

The same decomposition gives the gcd obstruction for tangle embeddings
(Krebes's criterion): any common divisor of the closure determinants of an
embedded tangle divides the link determinant.  The verdict helpers here do
that arithmetic given the determinants, with explicit conventions for 0
(gcd of an all-zero list is 0; 0 divides only 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import laplacian as _laplacian
from .graph import (
    RootSpec,
    WeightedMultigraph,
    forest_weight_enum,
    glue,
    relabel,
    tree_weight_enum,
)


class CompositionError(ValueError):
    """Malformed glued pair or verdict input."""


class CrossCheckError(RuntimeError):
    """The enumeration and Laplacian-minor paths disagreed (a bug trap)."""

    def __init__(self, message: str, graph: WeightedMultigraph, gamma: tuple[int, ...] | None):
        super().__init__(message)
        self.graph = graph
        self.gamma = gamma


@dataclass(frozen=True)
class GluedPair:
    """Two graphs whose vertex sets meet exactly in ``shared``."""

    h: WeightedMultigraph
    k: WeightedMultigraph
    shared: tuple[int, ...]

    def __post_init__(self):
        if not self.shared:
            raise CompositionError("shared vertex list is empty")
        if len(set(self.shared)) != len(self.shared):
            raise CompositionError("shared vertex list contains repeats")
        overlap = self.h.vertices & self.k.vertices
        if overlap != set(self.shared):
            raise CompositionError(
                f"graphs must meet exactly in the shared vertices; overlap is {sorted(overlap)}"
            )


@dataclass(frozen=True)
class GluingReport:
    """Both sides of a gluing identity, term by term.

    ``terms`` are the addends of the right-hand side in schema order and
    ``factors`` the (H-side, K-side) weights they multiply.
    """

    lhs: int
    terms: tuple[int, ...]
    factors: tuple[tuple[int, int], ...]
    equal: bool

    @property
    def rhs(self) -> int:
        return sum(self.terms)

    def to_json_dict(self) -> dict:
        return {"lhs": self.lhs, "terms": list(self.terms), "equal": self.equal}


@dataclass(frozen=True)
class KrebesVerdict:
    """Outcome of the gcd-divisibility obstruction check."""

    closure_determinants: tuple[int, ...]
    gcd: int
    link_determinant: int
    divides: bool
    conclusion: str  # "consistent" or "obstructed"


def gcd_list(values: Iterable[int]) -> int:
    """Greatest common divisor of a nonempty list, with gcd(0, x) = x."""
    vals = list(values)
    if not vals:
        raise CompositionError("gcd of an empty list is undefined here")
    if any(v < 0 for v in vals):
        raise CompositionError("gcd_list expects nonnegative integers")
    return math.gcd(*vals)


def krebes_verdict(closure_dets: Sequence[int], link_det: int) -> KrebesVerdict:
    """Decide the divisibility obstruction from closure and link determinants.

    ``obstructed`` certifies that the tangle cannot embed in the link;
    ``consistent`` means the test finds no obstruction.
    """
    dets = tuple(int(d) for d in closure_dets)
    if not dets:
        raise CompositionError("at least one closure determinant is required")
    if any(d < 0 for d in dets) or link_det < 0:
        raise CompositionError("determinants are nonnegative")
    g = gcd_list(dets)
    divides = (link_det == 0) if g == 0 else (link_det % g == 0)
    return KrebesVerdict(
        closure_determinants=dets,
        gcd=g,
        link_determinant=int(link_det),
        divides=divides,
        conclusion="consistent" if divides else "obstructed",
    )


def _normalized(pair: GluedPair) -> tuple[WeightedMultigraph, WeightedMultigraph]:
    """Relabel both sides so the shared vertices are 1..n and nothing collides."""
    n = len(pair.shared)
    mapping_h = {v: i + 1 for i, v in enumerate(pair.shared)}
    nxt = n + 1
    for v in sorted(pair.h.vertices - set(pair.shared)):
        mapping_h[v] = nxt
        nxt += 1
    mapping_k = {v: i + 1 for i, v in enumerate(pair.shared)}
    for v in sorted(pair.k.vertices - set(pair.shared)):
        mapping_k[v] = nxt
        nxt += 1
    return relabel(pair.h, mapping_h), relabel(pair.k, mapping_k)


def _tree_weight_checked(graph: WeightedMultigraph) -> int:
    by_enum = tree_weight_enum(graph)
    by_minor = _laplacian.tree_weight_mtt(graph)
    if by_enum != by_minor:
        raise CrossCheckError(
            f"tree weight mismatch: enumeration {by_enum}, minor {by_minor}", graph, None
        )
    return by_enum


def _rooted_weight_checked(graph: WeightedMultigraph, gamma: tuple[int, ...]) -> int:
    by_enum = forest_weight_enum(graph, RootSpec.rooted(gamma))
    by_minor = _laplacian.rooted_forest_weight_mtt(graph, gamma)
    if by_enum != by_minor:
        raise CrossCheckError(
            f"rooted forest weight mismatch at {gamma}: enumeration {by_enum}, minor {by_minor}",
            graph,
            gamma,
        )
    return by_enum


def verify_gluing_two(pair: GluedPair) -> GluingReport:
    """Check the two-term identity for a pair glued on two vertices."""
    if len(pair.shared) != 2:
        raise CompositionError("this identity needs exactly two shared vertices")
    h, k = _normalized(pair)
    g = glue(h, k, {1: 1, 2: 2})
    lhs = _tree_weight_checked(g)
    wh = _tree_weight_checked(h)
    wk = _tree_weight_checked(k)
    wh_rooted = _rooted_weight_checked(h, (1, 2))
    wk_rooted = _rooted_weight_checked(k, (1, 2))
    factors = ((wh, wk_rooted), (wh_rooted, wk))
    terms = tuple(a * b for a, b in factors)
    return GluingReport(lhs=lhs, terms=terms, factors=factors, equal=lhs == sum(terms))


def verify_gluing_three(pair: GluedPair) -> GluingReport:
    """Check the five-term identity for a pair glued on three vertices."""
    if len(pair.shared) != 3:
        raise CompositionError("this identity needs exactly three shared vertices")
    h, k = _normalized(pair)
    g = glue(h, k, {1: 1, 2: 2, 3: 3})
    lhs = _tree_weight_checked(g)
    wh = _tree_weight_checked(h)
    wk = _tree_weight_checked(k)
    wh_123 = _rooted_weight_checked(h, (1, 2, 3))
    wk_123 = _rooted_weight_checked(k, (1, 2, 3))
    wh_12 = _rooted_weight_checked(h, (1, 2))
    wh_23 = _rooted_weight_checked(h, (2, 3))
    wh_13 = _rooted_weight_checked(h, (1, 3))
    wk_13_23 = forest_weight_enum(k, RootSpec((1, 3), (2, 3)))
    wk_12_13 = forest_weight_enum(k, RootSpec((1, 2), (1, 3)))
    wk_12_23 = forest_weight_enum(k, RootSpec((1, 2), (2, 3)))
    factors = (
        (wh, wk_123),
        (wh_12, wk_13_23),
        (wh_23, wk_12_13),
        (wh_13, wk_12_23),
        (wh_123, wk),
    )
    terms = tuple(a * b for a, b in factors)
    return GluingReport(lhs=lhs, terms=terms, factors=factors, equal=lhs == sum(terms))
