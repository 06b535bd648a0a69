"""Build the two extremal families and look at why they have no k-factor."""

from kfactor import families
from kfactor.factoring import deficiency, has_k_factor
from kfactor.formats import to_dot

f = families.g1(12, 2)
g = f.graph
print(f"G1(12, 2): n={g.n}, e={g.edge_count}, min degree {g.min_degree}")
print("edge threshold:", families.edge_threshold(12, 2))

# The pair (clique_S, independent_T) is the obstruction.
w = deficiency(g, f.clique_S, f.independent_T, 2)
print(f"delta(S, T) = {w.delta} with q = {w.q}")

v = has_k_factor(g, 2)
print("2-factor exists:", v.exists, "| witness grade:", v.witness_grade)

f2 = families.g2(14, 3)
print(f"G2(14, 3): e={f2.graph.edge_count}, extra edges {f2.extra_edges}")

with open("g1_12_2.dot", "w") as fh:
    fh.write(to_dot(g, (f.clique_S, f.independent_T)))
print("wrote g1_12_2.dot (render with: dot -Tpng g1_12_2.dot -o g1.png)")
