"""The end-to-end pipeline on a graph with cut-vertices.

Run with ``python3 demos/02_pipeline_report.py``.
"""

# %% Build a tree of blocks: it has cut-vertices, so the general pipeline applies.
from pwtri import exact_pathwidth, run_pipeline
from pwtri.generators import generate
from pwtri.io import emit_graph
from pwtri.planar import is_multi_triangulated

g = generate("random-block-tree", 10, seed=3)
print(emit_graph(g))

# %% Run it with the token audit on and print the stage report.
g_out, p_out, report = run_pipeline(g, exact_pathwidth(g).witness, mode="general", debug_tokens=True)
print(report.to_text())

# %% The output is a simple triangulation on the same vertices.
print("triangulated:", is_multi_triangulated(g_out), "simple:", g_out.is_simple())
print("oracle width of the output:", exact_pathwidth(g_out).width, "decomposition width:", p_out.width)
