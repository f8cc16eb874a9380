"""
The core polygon across the three phase regimes
===============================================

Intersect the six mirrors v_ijk-perp pairwise and read off where the
vertices sit: inside, on the boundary, or outside complex hyperbolic space.
Writes schematic SVGs to ./core_polygons, or to the directory given as the
first argument.
"""

# %%
import sys
from pathlib import Path

from mostow_hybrids import build_group, core_polygon
from mostow_hybrids.svg import write_polygon

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("core_polygons")
out.mkdir(exist_ok=True)

# %%
# Small, critical and large phase shift.
for p, t in [(3, "0"), (4, "1/4"), (5, "7/10")]:
    g = build_group(p, t)
    poly = core_polygon(g)
    print(f"({p},{t}) {poly.phase.value}: {poly.topology()}")
    print("  hexagon vertex signs:", [v.norm_sign for v in poly.hexagon])
    print("  triangle corner signs:", [v.norm_sign for v in poly.triangle])
    print("  J R_j R_k:", poly.mirror_types)
    svg, js = write_polygon(g, out / f"core_{p}_{t.replace('/', '-')}.svg")
    print("  wrote", svg)
