"""Exact toughness and binding number on the extremal graphs."""

from kfactor import families
from kfactor.params import binding_number, is_t_tough, toughness

for n in (10, 12, 14):
    b = binding_number(families.g1(n, 2).graph)
    print(f"b(G1({n},2)) = {b.value}, witness S = {b.witness}")

for k, n in [(3, 14), (4, 16), (5, 18)]:
    g = families.g2(n, k).graph
    t = toughness(g)
    print(f"t(G2({n},{k})) = {t.value}: removing {t.witness} leaves {t.detail} components;"
          f" 1-tough: {bool(is_t_tough(g))}")
