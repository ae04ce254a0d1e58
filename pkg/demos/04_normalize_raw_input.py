"""Raw coordinates with ties and touching points, cleaned up first."""

# %%
from lsegments import LRep, extract_graph_lrep, normalize, validate_lrep
from lsegments.verify import extract_graph_raw

# b's top ends exactly on a's vertical side, and a, b share x=0
raw = LRep.from_tuples([("a", 0, 0, 5, 10), ("b", 0, 1, 5, 5), ("c", 7, 3, 9, 12)], canonical=False)
print(validate_lrep(raw))
print("raw graph:", extract_graph_raw(raw).edges)

# %%
rep = normalize(raw)
for s in rep:
    print(s.id, s.corners)
print(validate_lrep(rep))
print("canonical graph:", extract_graph_lrep(rep).edges)
