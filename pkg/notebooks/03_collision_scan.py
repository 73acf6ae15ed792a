# %% [markdown]
# # Looking for graphs with equal invariants
#
# Group every graph on n vertices by its Kromatic fingerprint, then do the
# same with the classical chromatic symmetric function and check whether
# the Kromatic fingerprint tells each classical collision apart.

# %%
from kromatic.graphs import generate_nonisomorphic, parse_graph6
from kromatic.scan import scan

# %%
for n in range(1, 8):
    graphs = [e.graph for e in generate_nonisomorphic(n)]
    k = scan(graphs, "kromatic")
    c = scan(graphs, "classical")
    separated = all(g["separated_by_kromatic"] for g in c.xg_collision_groups)
    print(n, len(graphs), len(k.collision_groups), len(c.collision_groups), separated)

# %% [markdown]
# The first classical collision shows up on five vertices.

# %%
res = scan([e.graph for e in generate_nonisomorphic(5)], "classical")
for grp in res.xg_collision_groups:
    print([parse_graph6(s).edges() for s in grp["graphs"]])
