"""A mutually unbiased pair of entangled bases for a qubit and a qutrit.

Builds the shift-phase basis of C^2 (x) C^3 and its phase-parameterized
partner, then shows the two facts that make the pair interesting: every
state has Schmidt number exactly 2 with balanced coefficients, and every
cross overlap magnitude equals 1/sqrt(6).
"""

import numpy as np

from museb import (
    NotAdmissible,
    ThetaParams,
    c23_partner,
    check_mu_pair,
    check_sebk,
    singular_values,
    solve_theta,
)

phi, psi = c23_partner(ThetaParams(0.0, 1.5 * np.pi, 0.0))

print("first basis element of each family:")
print(np.round(phi[0], 4))
print(np.round(psi[0], 4))

print("\nSchmidt coefficients (want 1/sqrt(2) twice):")
print("  phi[3]:", np.round(singular_values(phi[3]), 6))
print("  psi[5]:", np.round(singular_values(psi[5]), 6))

rep = check_sebk(psi)
print("\npartner basis certifies:", rep.passed, "worst violation", rep.worst_violation)

mags = np.abs(np.einsum("aij,bij->ab", phi.elements.conj(), psi.elements))
print("overlap magnitudes, all should be 1/sqrt(6) =", round(1 / np.sqrt(6), 6))
print(np.round(mags, 6))

print("\nthe third phase is not free: it is pinned by the first two")
t1, t2 = 0.9, 2.4
t3 = solve_theta(t1, t2)
print(f"solve_theta({t1}, {t2}) = {t3:.6f}")
pair = c23_partner(ThetaParams(t1, t2, t3))
print("that triple certifies:", check_mu_pair(*pair).passed)

try:
    c23_partner(ThetaParams(t1, t2, t3 + 0.05))
except NotAdmissible as exc:
    print("nudging it off the constraint is refused:", exc)
