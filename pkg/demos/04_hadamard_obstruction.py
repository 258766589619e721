"""Why the (2,3) pair cannot be extended to a mutually unbiased triple.

Stacking the two families as columns gives unitaries U and V whose
relative matrix W = U^dagger V is a complex Hadamard matrix.  A third
basis unbiased to both would make W part of a Hadamard triple, but W can
be column-dephased so that two rows turn real in more than two columns,
and that pattern is a known blocker.  The scan finds the certificate and
we re-validate it by hand.
"""

import numpy as np

from museb import catalog, dephased_obstruction, is_chm, theorem2_reproduce

u, v, q = catalog("U"), catalog("V"), catalog("Q")
w = u.conj().T @ v

print("W = U^dagger V is a complex Hadamard matrix:", is_chm(w))
print("entry moduli (want all 1/sqrt(6) = %.4f):" % (1 / np.sqrt(6)))
print(np.round(np.abs(w), 4))

print("\nafter the diagonal corrector Q, the lower-left block is real:")
print(np.round((w @ q)[4:6, 0:3], 6))

finding = dephased_obstruction(w)
print("\nscan result: obstructed =", finding.obstructed)
print("  rows", finding.row_pair, "columns", finding.columns,
      "on transpose:", finding.on_transpose)

mat = w.T if finding.on_transpose else np.array(w)
for col, phase in zip(finding.columns, finding.phases):
    mat[:, col] *= phase
r1, r2 = finding.row_pair
rows = np.vstack([mat[r1, list(finding.columns)], mat[r2, list(finding.columns)]])
print("  dephased rows (imaginary parts vanish):")
print(np.round(rows, 6))

rep = theorem2_reproduce()
print("\nfull chain re-certified:", rep.passed,
      "worst deviation", f"{rep.worst_violation:.2e}")

j = np.arange(5)
f5 = np.exp(2j * np.pi * np.outer(j, j) / 5) / np.sqrt(5)
print("\ncontrast: the 5x5 Fourier matrix shows no such pattern:",
      dephased_obstruction(f5).obstructed)
