"""Random canonical instances survive the power-of-two construction."""

# %%
import numpy as np

from lsegments import extract_graph_lrep, extract_graph_segments, gen_random, graphs_equal, transform_pow2

rep = gen_random(10, "pure", seed=11)
for s in rep:
    print(s.id, s.corners)

# %%
res = transform_pow2(rep)
g_l = extract_graph_lrep(rep)
g_s = extract_graph_segments(res.segments)
print(graphs_equal(g_l, g_s))
print("edges:", g_l.edge_count(), "of", rep.n * (rep.n - 1) // 2)

# %%
# adjacency is a plain numpy bool matrix
print(g_l.adjacency.astype(np.uint8))

# %%
# without dilation the largest coordinate stays below 4**n, i.e. at most 2n bits
for n in range(1, 9):
    results = [transform_pow2(gen_random(n, "pure", s)) for s in range(50)]
    bits = max(r.achieved_max_coord.bit_length() for r in results if r.dilation_exponent == 0)
    print(n, bits, 2 * n)
