"""Random counterexample search against each theorem checker."""

from kfactor import families
from kfactor.verify import check_spectral_theorem, sweep

rep = sweep(k=1, n=30, samples=200, seed=42)
print("contradictions:", rep.contradictions)
for name, t in rep.tallies.items():
    print(f"  {name}: evaluated {t.evaluated}, hypotheses met {t.hypotheses_met}, extremal {t.extremal_hits}")

v = check_spectral_theorem(families.g1(29, 2).graph, 2)
print("G1(29,2): hypotheses hold", v.hypotheses_hold, "| extremal", v.extremal_hit, "| factor", v.conclusion_holds)
