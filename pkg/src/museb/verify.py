"""Certification of entangled bases and mutual unbiasedness.

A basis family is a full orthonormal basis of C^d (x) C^d' whose members
all have Schmidt number k with equal Schmidt coefficients 1/sqrt(k); in
matrix form each element has k singular values equal to 1/sqrt(k) and the
rest zero.  Two such bases are mutually unbiased when every cross overlap
has magnitude 1/sqrt(d d').  The checks below certify these properties to
explicit tolerances and report the worst violation seen, so a failed check
is as informative as a passed one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyInput, ShapeMismatch
from .matspace import as_matrix, singular_values

__all__ = [
    "MAX_OFFENDERS",
    "VerifyConfig",
    "VerificationReport",
    "BasisFamily",
    "FamilySet",
    "schmidt_number",
    "check_sebk",
    "check_mu_pair",
    "check_museb_set",
]

# offender lists are capped so reports stay readable on large sets
MAX_OFFENDERS = 32


@dataclass(frozen=True)
class VerifyConfig:
    """Tolerances for certification.

    tol_abs bounds deviations of singular values and Gram entries from
    their targets; tol_overlap bounds deviations of cross-overlap
    magnitudes.  Both must sit in [0, 1e-3): anything looser would let
    structurally different families pass as equal.
    """

    tol_abs: float = 1e-9
    tol_overlap: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("tol_abs", "tol_overlap"):
            tol = getattr(self, name)
            if not (0.0 <= tol < 1e-3):
                raise ValueError(f"{name} must sit in [0, 1e-3), got {tol}")


# (family_i, family_j, element_i, element_j, measured value)
Offender = tuple[int, int, int, int, float]


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    worst_violation: float
    offenders: tuple[Offender, ...]
    checks_run: int


@dataclass(frozen=True)
class BasisFamily:
    """An orthonormal basis of C^d (x) C^d' in matrix form.

    elements is a (d*d', d, d') complex array; element i is the matrix of
    the i-th basis state.  k declares the intended Schmidt number; it is a
    claim checked by check_sebk, not enforced at construction.
    """

    d: int
    dprime: int
    k: int
    elements: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        if self.d < 1 or self.dprime < 1:
            raise ValueError("dimensions must be positive")
        if not 1 <= self.k <= min(self.d, self.dprime):
            raise ValueError(
                f"k must sit in [1, {min(self.d, self.dprime)}], got {self.k}"
            )
        arr = np.array(self.elements, dtype=complex)
        want = (self.d * self.dprime, self.d, self.dprime)
        if arr.shape != want:
            raise ShapeMismatch(f"expected elements of shape {want}, got {arr.shape}")
        if not np.all(np.isfinite(arr.real) & np.isfinite(arr.imag)):
            raise ValueError("elements must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "elements", arr)

    def __len__(self) -> int:
        return self.elements.shape[0]

    def __getitem__(self, i: int) -> np.ndarray:
        return self.elements[i]


@dataclass(frozen=True)
class FamilySet:
    """A collection of basis families sharing the same (d, d', k)."""

    families: tuple[BasisFamily, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        fams = tuple(self.families)
        sigs = {(f.d, f.dprime, f.k) for f in fams}
        if len(sigs) > 1:
            raise ShapeMismatch(f"families disagree on (d, d', k): {sorted(sigs)}")
        object.__setattr__(self, "families", fams)

    @property
    def witness_count(self) -> int:
        return len(self.families)

    @property
    def d(self) -> int:
        self._require_nonempty()
        return self.families[0].d

    @property
    def dprime(self) -> int:
        self._require_nonempty()
        return self.families[0].dprime

    @property
    def k(self) -> int:
        self._require_nonempty()
        return self.families[0].k

    def _require_nonempty(self) -> None:
        if not self.families:
            raise EmptyInput("family set is empty")

    def __len__(self) -> int:
        return len(self.families)

    def __getitem__(self, i: int) -> BasisFamily:
        return self.families[i]

    def __iter__(self):
        return iter(self.families)


def _overlap_gram(e: np.ndarray, f: np.ndarray) -> np.ndarray:
    # all pairwise Hilbert-Schmidt inner products in one pass
    return np.einsum("aij,bij->ab", e.conj(), f)


def schmidt_number(a, cfg: VerifyConfig | None = None) -> int:
    """Number of singular values above tolerance (the rank of the matrix)."""
    cfg = cfg or VerifyConfig()
    sv = singular_values(as_matrix(a))
    return int(np.count_nonzero(sv > cfg.tol_abs))


def check_sebk(family: BasisFamily, cfg: VerifyConfig | None = None) -> VerificationReport:
    """Certify that a family is an orthonormal basis of uniform Schmidt rank.

    Every element must have singular spectrum (1/sqrt(k), ..., 1/sqrt(k),
    0, ..., 0) with k repetitions, and the mutual Gram matrix of the
    family must be the identity, both within cfg.tol_abs.
    """
    cfg = cfg or VerifyConfig()
    el = family.elements
    n = el.shape[0]
    small = min(family.d, family.dprime)

    sv = np.linalg.svd(el, compute_uv=False)
    target = np.zeros(small)
    target[: family.k] = 1.0 / np.sqrt(family.k)
    sv_dev = np.abs(sv - target)

    gram = _overlap_gram(el, el)
    gram_dev = np.abs(gram - np.eye(n))

    offenders: list[Offender] = []
    for i in np.flatnonzero(sv_dev.max(axis=1) > cfg.tol_abs):
        pos = int(np.argmax(sv_dev[i]))
        offenders.append((0, 0, int(i), pos, float(sv[i, pos])))
        if len(offenders) >= MAX_OFFENDERS:
            break
    if len(offenders) < MAX_OFFENDERS:
        bad = np.argwhere(gram_dev > cfg.tol_abs)
        for i, j in bad[: MAX_OFFENDERS - len(offenders)]:
            offenders.append((0, 0, int(i), int(j), float(np.abs(gram[i, j]))))

    worst = float(max(sv_dev.max(initial=0.0), gram_dev.max(initial=0.0)))
    return VerificationReport(
        passed=worst <= cfg.tol_abs,
        worst_violation=worst,
        offenders=tuple(offenders),
        checks_run=n + n * n,
    )


def check_mu_pair(
    f: BasisFamily, g: BasisFamily, cfg: VerifyConfig | None = None
) -> VerificationReport:
    """Certify that every cross overlap has magnitude 1/sqrt(d d')."""
    cfg = cfg or VerifyConfig()
    if (f.d, f.dprime) != (g.d, g.dprime):
        raise ShapeMismatch(
            f"cannot compare bases of ({f.d}, {f.dprime}) with ({g.d}, {g.dprime})"
        )
    target = 1.0 / np.sqrt(f.d * f.dprime)
    mags = np.abs(_overlap_gram(f.elements, g.elements))
    dev = np.abs(mags - target)

    offenders: list[Offender] = []
    for i, j in np.argwhere(dev > cfg.tol_overlap)[:MAX_OFFENDERS]:
        offenders.append((0, 1, int(i), int(j), float(mags[i, j])))

    worst = float(dev.max(initial=0.0))
    n = len(f)
    return VerificationReport(
        passed=worst <= cfg.tol_overlap,
        worst_violation=worst,
        offenders=tuple(offenders),
        checks_run=n * n,
    )


def check_museb_set(s: FamilySet, cfg: VerifyConfig | None = None) -> VerificationReport:
    """Certify a whole family set: each basis individually, and all pairs.

    For d = d' = 1 and k = 1 this reduces to the ordinary mutually
    unbiased bases condition on C^n written one column at a time.
    """
    cfg = cfg or VerifyConfig()
    worst = 0.0
    checks = 0
    passed = True
    offenders: list[Offender] = []

    def absorb(fi: int, fj: int, rep: VerificationReport) -> None:
        nonlocal worst, checks, passed
        worst = max(worst, rep.worst_violation)
        checks += rep.checks_run
        passed = passed and rep.passed
        for _, _, i, j, val in rep.offenders:
            if len(offenders) < MAX_OFFENDERS:
                offenders.append((fi, fj, i, j, val))

    for fi, fam in enumerate(s.families):
        absorb(fi, fi, check_sebk(fam, cfg))
    for fi, fj in itertools.combinations(range(len(s.families)), 2):
        absorb(fi, fj, check_mu_pair(s.families[fi], s.families[fj], cfg))

    return VerificationReport(
        passed=passed,
        worst_violation=worst,
        offenders=tuple(offenders),
        checks_run=checks,
    )
