"""Two crossing L-shapes turned into two crossing segments."""

# %%
from fractions import Fraction

from lsegments import LRep, extract_graph_lrep, seg_intersects_solve, transform_pow2

# a's vertical side at x=3 passes through c's top at y=3
rep = LRep.from_tuples([("a", 1, 1, 3, 4), ("c", 2, 2, 4, 3)])
print(extract_graph_lrep(rep).edges)

# %%
res = transform_pow2(rep)
for seg in res.segments:
    print(seg.id, seg.p, seg.q)
print("dilation exponent:", res.dilation_exponent)

# %%
a, c = res.segments
print("segments cross:", seg_intersects_solve(a, c))

# a lies on 2x + y = 16, c on x + 2y = 16
x = Fraction(16, 3)
print("crossing at", (x, 16 - 2 * x))
