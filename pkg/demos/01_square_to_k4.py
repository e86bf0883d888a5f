"""From a 4-cycle to K4, one stage at a time.

Run with ``python3 demos/01_square_to_k4.py``.
"""

# %% A square has pathwidth 2; the oracle returns an optimal decomposition.
from pwtri import exact_pathwidth, multi_triangulate, simplify
from pwtri.generators import named

g = named("C4")
result = exact_pathwidth(g)
p = result.witness
print("edges:", g.simple_edges())
print("pathwidth:", result.width, "bags:", [sorted(b) for b in p.bags])

# %% Multi-triangulation adds edges inside bags only, so the bags do not change.
before = [sorted(b) for b in p.bags]
chords = multi_triangulate(g, p)
print("added:", chords)
print("multi-edges:", g.multi_edges())
assert [sorted(b) for b in p.bags] == before

# %% Simplification removes the parallel copies and may widen a few bags.
simplify(g, p)
print("simple:", g.is_simple(), "edges:", g.simple_edges())
print("width after:", p.width, "valid:", p.validate(g))
