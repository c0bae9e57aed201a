"""
Classifying a handful of planar norms
=====================================

Each row is the result of threshold tests on a sweep of L'_Y together with
a Frechet-identity sample.  The custom polygon is read from hexagon.txt,
which lists half of the vertices (the norm is made symmetric).
"""

from pathlib import Path

from geomlab import classify_space
from geomlab.cli import parse_space_descriptor

here = Path(__file__).parent
descriptors = ["lp:2:dim=2", "lp:3:dim=2", "lp:4:dim=2", "lp:1:dim=2", "lp:inf:dim=2",
               f"polygon:{here / 'hexagon.txt'}"]

print(f"{'space':28s} inner  nonsq  normal  convexity")
for text in descriptors:
    c = classify_space(parse_space_descriptor(text))
    name = text if not text.startswith("polygon:") else "polygon:hexagon.txt"
    print(f"{name:28s} {c.inner_product_like!s:6s} {c.uniformly_nonsquare!s:6s} "
          f"{c.normal_structure_sufficient!s:7s} {c.convexity_probe}")
