"""Both L orientations at once: narrow x range, tall y range."""

# %%
from lsegments import LRep, LShape, Orientation, extract_graph_lrep, extract_graph_segments, gen_named
from lsegments import graphs_equal, resolution_stats, transform_mixed, transform_pow2
from lsegments.model import UnsupportedInputError

v = LShape("v", 1, 1, 3, 4, Orientation.TOP_RIGHT)
w = LShape("w", 2, 2, 4, 3, Orientation.TOP_LEFT)
rep = LRep((v, w), mode="mixed")
for seg in transform_mixed(rep):
    print(seg.id, seg.p, seg.q)

# %%
rep = gen_named("fig2-like")
segs = transform_mixed(rep)
print(graphs_equal(extract_graph_lrep(rep), extract_graph_segments(segs)))
print(resolution_stats(segs))

# %%
try:
    transform_pow2(rep)
except UnsupportedInputError as exc:
    print("pow2 refuses:", exc)
