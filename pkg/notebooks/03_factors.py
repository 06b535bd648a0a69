"""Three independent k-factor deciders that should always agree."""

from kfactor.factoring import brute_force_factor, has_k_factor, min_deficiency
from kfactor.formats import load_corpus
from kfactor.graph import petersen

v = has_k_factor(petersen(), 2)
print("Petersen 2-factor:", v.certificate.edges)

corpus = [g for g in load_corpus() if g.n == 6]
for k in (1, 2, 3):
    answers = [
        (has_k_factor(g, k).exists, min_deficiency(g, k)[0] >= 0, brute_force_factor(g, k).exists)
        for g in corpus
    ]
    agree = sum(a == b == c for a, b, c in answers)
    yes = sum(a for a, _, _ in answers)
    print(f"k={k}: {len(corpus)} connected 6-vertex graphs, {yes} have a k-factor, deciders agree on {agree}")
