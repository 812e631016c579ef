"""Bundled example diagrams and graphs.

Shipped fixtures:

- ``trefoil.pd``: the standard 3-crossing trefoil diagram (determinant 3).
- ``unknot_loop.pd``: a single crossingless circle (determinant 1).
- ``knot_det25.pd``: an 11-crossing knot diagram with determinant 25 whose
  Tait graph is the 7-vertex graph shipped as ``graph_det25.json``.
- ``tangle_det25_30.pd``: the 4-tangle obtained by cutting the diagram of
  ``knot_det25.pd`` open along two boundary arcs; its numerator closure is
  that knot (determinant 25) and its denominator closure has determinant
  30, so anything it embeds in has determinant divisible by 5.
- ``graph_det25.json``: the 7-vertex, 10-edge signed graph whose Laplacian
  has every principal minor equal to 25.
"""

from importlib import resources


def fixture_text(name: str) -> str:
    return (resources.files(__package__) / name).read_text(encoding="utf-8")


def fixture_path(name: str):
    """Filesystem path of a bundled fixture (valid for installed packages)."""
    return resources.files(__package__) / name
