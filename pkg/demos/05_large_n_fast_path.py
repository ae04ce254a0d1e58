"""Thousands of vertices: comparing coordinates without building them."""

# %%
import time

from lsegments import Pow2Coord, extract_graph_lrep, extract_graph_pow2, gen_random, graphs_equal, transform_pow2

# 2**4000 - 2**3999 against 2**3998 + ...: signs come from exponents alone
x = Pow2Coord(1, 4000, 1, 3999)
y = Pow2Coord(1, 3999)
print(int(x) == int(y), x.bit_length())

# %%
rep = gen_random(1000, "pure", seed=1)
t0 = time.perf_counter()
res = transform_pow2(rep)
ok, diff = graphs_equal(extract_graph_lrep(rep), extract_graph_pow2(res.symbolic))
print(ok, f"{time.perf_counter() - t0:.1f}s", "dilation exponent", res.dilation_exponent)
print("largest coordinate has", res.achieved_max_coord.bit_length(), "bits")
