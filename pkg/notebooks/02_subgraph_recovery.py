# %% [markdown]
# # Reading induced-subgraph counts off the vector
#
# Everything is set up on the complement, where stable sets become cliques.
# The cover counts ``#(i1; i2, i3, ...)`` come from a short recursion over the
# coefficients with ``n - i1`` trailing ones.

# %%
from kromatic.covers import CoverSpec, cover_count, cover_count_oracle
from kromatic.engine import mbar_vector
from kromatic.graphs import Graph, alias_graph, complement, induced_census, seeded_graphs
from kromatic.recovery import level_system, order4_recover, order5_recover, star_recover, tree_recover

# %%
g = Graph.empty(4)
spec = CoverSpec.of(4, i2=5)
print(cover_count(mbar_vector(g), spec), cover_count_oracle(g, spec))

# %% [markdown]
# ## Order 4
#
# The order-4 system has rank 10 over 11 unknowns.  Seven columns are pinned
# down; three constraints remain on the other four.

# %%
s4 = level_system(4)
flip = s4.catalog.complement_ids()
print(s4.rank, sorted(s4.catalog.name(flip[i]) for i in s4.determined_ids()))
print(order4_recover(mbar_vector(Graph.cycle(5))).to_table())

# %% [markdown]
# ## Order 5
#
# Lifting only the determined order-4 counts gives eleven determined graphs.
# Lifting every order-4 relation, including the three residual ones, also
# determines the counts of K5 and K5 minus an edge.

# %%
for lifts in ("determined", "all"):
    s5 = level_system(5, lifts)
    flip = s5.catalog.complement_ids()
    print(lifts, s5.rank, sorted(s5.catalog.name(flip[i]) for i in s5.determined_ids()))

# %%
g = seeded_graphs(1, 8, seed=0)[0]
r = order5_recover(mbar_vector(g))
census = induced_census(g, 5)
print(all(census.get(i, 0) == x for i, x in r.determined.items()))

# %% [markdown]
# ## Trees and stars

# %%
r4, r5 = tree_recover(mbar_vector(Graph.path(7)))
print(r4["P4"], r5["P5"], r5["chair"])
print(star_recover(mbar_vector(alias_graph("claw+v")), 3, 1))
