# %% [markdown]
# # The Kromatic symmetric function on small graphs
#
# A proper set colouring gives every vertex a nonempty set of colours, with
# adjacent vertices getting disjoint sets.  Summing the monomials of all
# such colourings gives the Kromatic symmetric function.  In the
# augmented monomial basis its coefficients count covers of the vertex set
# by distinct stable sets, and that expansion is finite.

# %%
from kromatic.algebra import Partition
from kromatic.engine import (
    classical_chromatic,
    expand_mbar,
    fingerprint,
    kromatic_truncated,
    mbar_vector,
)
from kromatic.graphs import Graph, alias_graph

# %% [markdown]
# Two isolated vertices: the covers are {a},{b}; {ab}; {ab},{a}; {ab},{b};
# and {ab},{a},{b}.

# %%
print(mbar_vector(Graph.empty(2)).to_text())

# %% [markdown]
# The path on three vertices, a-b-c, has stable sets {a}, {b}, {c}, {a,c}.

# %%
p3 = Graph.path(3)
print(mbar_vector(p3).to_text())

# %% [markdown]
# Expanding back into monomials up to degree n + 2 reproduces the direct
# sum over set colourings exactly.

# %%
d = p3.n + 2
print(expand_mbar(mbar_vector(p3), d) == kromatic_truncated(p3, d))
print(kromatic_truncated(p3, d).to_text())

# %% [markdown]
# The lowest-degree part is the ordinary chromatic symmetric function.

# %%
print(kromatic_truncated(p3, 3).homogeneous_part(3).to_text())
print(classical_chromatic(p3).to_text())

# %% [markdown]
# Sparse graphs have a huge support (the empty graph on 7 vertices has tens
# of millions of terms), so vectors are stored through the subset profiles
# ``(s_1(U), s_2(U), ...)`` and coefficients are computed on demand.

# %%
v = mbar_vector(Graph.empty(7))
print(v)
print(v[Partition((3, 2, 2, 1))])
print(len(fingerprint(alias_graph("bull"))), "bytes of fingerprint for the bull")
