"""Two numerical experiments that back up the structural story.

First, products of admissible mixing matrices are probed: if the partner
family were closed under composition there would be a group structure to
exploit, but every product violates either the entry-modulus pattern or
the quarter-turn phase relation.  Second, a seeded greedy descent hunts
for a third unbiased basis anyway; it plateaus well above zero, exactly
as the obstruction predicts.
"""

import numpy as np

from museb import (
    SearchConfig,
    ThetaParams,
    closure_failure_probe,
    closure_sweep,
    solve_theta,
    third_basis_search,
    unbiasedness_penalty,
)

reference = ThetaParams(0.0, 1.5 * np.pi, 0.0)
finding = closure_failure_probe(reference, reference)
print("squaring the reference mixer leaves the family:")
print(f"  violated: {finding.violated}")
print(f"  modulus deviation {finding.modulus_deviation:.4f}, "
      f"phase deviation {finding.phase_deviation:.4f}")

sweep = closure_sweep(2000, seed=0)
print(f"\nrandom sweep: {sweep.failures}/{sweep.pairs} products fail to stay admissible")

rng = np.random.default_rng(1)
t1, t2 = rng.uniform(0, 2 * np.pi, size=2)
other = ThetaParams(t1, t2, solve_theta(t1, t2))
finding = closure_failure_probe(reference, other)
print(f"a random cross product violates {finding.violated} "
      f"by {max(finding.modulus_deviation, finding.phase_deviation):.4f}")

print("\ngreedy descent for a third basis (it should stall, not converge):")
for iters in (25, 100, 400):
    out = third_basis_search(SearchConfig(seed=3, max_iterations=iters, restarts=3))
    print(f"  {iters:4d} iterations/restart -> best penalty {out.best_cost:.6f}, "
          f"converged: {out.converged_to_zero}")

mixer = out.best_candidate
print("\nbest candidate found:")
print(np.round(mixer, 4))
print("its penalty, recomputed:", round(unbiasedness_penalty(mixer), 6))
print("a true third basis would score 0; the floor is the obstruction in numbers")
