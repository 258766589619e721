"""Constructors for the built-in entangled basis families.

The workhorses are weyl_meb, which builds a maximally entangled basis of
C^d (x) C^d' from shift and phase operators, and c23_partner, which pairs
the (2, 3) instance with a second basis parameterized by three phases.
The module also carries small mutually unbiased basis families for prime
and composite dimensions, a qubit-side trio of maximally entangled bases,
and a catalog of frozen reference families used throughout the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import (
    DimensionOrder,
    NotAdmissible,
    NotPrime,
    UnknownName,
)
from .matspace import StateVector, as_matrix, state_to_matrix
from .verify import BasisFamily, FamilySet

__all__ = [
    "ThetaParams",
    "IntFactorization",
    "CATALOG_NAMES",
    "solve_theta",
    "theta_mixing_matrix",
    "weyl_meb",
    "c23_family",
    "c23_partner",
    "is_prime",
    "factorize",
    "mub_prime",
    "mub_composite",
    "mumeb_qubit",
    "catalog",
]

_S2 = np.sqrt(2.0)
_S3 = np.sqrt(3.0)
_S6 = np.sqrt(6.0)
_W3 = np.exp(2j * np.pi / 3)

# the admissibility constraint fixes theta2 + theta3 - 2*theta1 modulo 2*pi
_ADMISSIBLE_RESIDUE = 1.5 * np.pi


@dataclass(frozen=True)
class ThetaParams:
    """Phase triple for the (2, 3) partner-basis construction."""

    theta1: float
    theta2: float
    theta3: float

    def __post_init__(self) -> None:
        for name in ("theta1", "theta2", "theta3"):
            val = getattr(self, name)
            if not math.isfinite(val):
                raise ValueError(f"{name} must be finite, got {val}")

    def residual(self) -> float:
        """Distance of theta2 + theta3 - 2*theta1 from the admissible value, mod 2*pi."""
        r = (self.theta2 + self.theta3 - 2.0 * self.theta1 - _ADMISSIBLE_RESIDUE) % (
            2.0 * np.pi
        )
        return float(min(r, 2.0 * np.pi - r))

    def is_admissible(self, tol: float = 1e-9) -> bool:
        return self.residual() <= tol


def solve_theta(theta1: float, theta2: float) -> float:
    """The unique theta3 in [0, 2*pi) making (theta1, theta2, theta3) admissible."""
    return float((_ADMISSIBLE_RESIDUE + 2.0 * theta1 - theta2) % (2.0 * np.pi))


@dataclass(frozen=True)
class IntFactorization:
    """Prime factorization n = prod(p ** a), factors sorted by prime."""

    n: int
    factors: tuple[tuple[int, int], ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def factorize(n: int) -> IntFactorization:
    if n < 2:
        raise ValueError(f"factorization needs n >= 2, got {n}")
    m = n
    factors: list[tuple[int, int]] = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
        p += 1
    if m > 1:
        factors.append((m, 1))
    return IntFactorization(n=n, factors=tuple(factors))


def weyl_meb(d: int, dprime: int) -> BasisFamily:
    """Maximally entangled basis of C^d (x) C^d' from shift and phase operators.

    Element (m, n), stored at flat index m*d + n, is the matrix with
    entries M[p, (p + m) mod d'] = omega^(n p) / sqrt(d) for omega the
    primitive d-th root of unity.  Requires d <= d'; every element has
    Schmidt number d.
    """
    if d < 1 or dprime < 1:
        raise ValueError("dimensions must be positive")
    if d > dprime:
        raise DimensionOrder(f"construction needs d <= d', got d={d}, d'={dprime}")
    omega = np.exp(2j * np.pi / d)
    out = np.zeros((d * dprime, d, dprime), dtype=complex)
    for m in range(dprime):
        for n in range(d):
            mat = np.zeros((d, dprime), dtype=complex)
            for p in range(d):
                mat[p, (p + m) % dprime] = omega ** (n * p) / np.sqrt(d)
            out[m * d + n] = mat
    return BasisFamily(d=d, dprime=dprime, k=d, elements=out, label=f"weyl({d},{dprime})")


def theta_mixing_matrix(theta: ThetaParams) -> np.ndarray:
    """The 2x2 matrix that mixes the left factor in the partner construction.

    It is unitary exactly when theta is admissible.
    """
    t1, t2, t3 = theta.theta1, theta.theta2, theta.theta3
    return np.array(
        [
            [np.exp(1j * t1), _S2 * np.exp(1j * t2)],
            [_S2 * np.exp(1j * t3), np.exp(1j * (t1 + np.pi / 2))],
        ],
        dtype=complex,
    ) / _S3


def c23_family(mixer, label: str = "") -> BasisFamily:
    """Basis of C^2 (x) C^3 whose left factor is mixed by a 2x2 matrix.

    Element (m, n) at flat index m*2 + n has entries
    M[r, (p + m) mod 3] += (-1)^(n p) * mixer[p, r] / sqrt(2).
    The result is orthonormal exactly when the mixer is unitary.
    """
    a = as_matrix(mixer)
    if a.shape != (2, 2):
        raise ValueError(f"mixer must be 2x2, got {a.shape}")
    out = np.zeros((6, 2, 3), dtype=complex)
    for m in range(3):
        for n in range(2):
            mat = np.zeros((2, 3), dtype=complex)
            for p in range(2):
                for r in range(2):
                    mat[r, (p + m) % 3] += (-1) ** (n * p) * a[p, r] / _S2
            out[m * 2 + n] = mat
    return BasisFamily(d=2, dprime=3, k=2, elements=out, label=label)


def c23_partner(theta: ThetaParams, tol: float = 1e-9) -> tuple[BasisFamily, BasisFamily]:
    """The mutually unbiased pair of Schmidt-rank-2 bases of C^2 (x) C^3.

    Returns (phi, psi) where phi is weyl_meb(2, 3) and psi is the partner
    determined by the phase triple.  Raises NotAdmissible when the phases
    violate the admissibility constraint by more than tol radians.
    """
    if not theta.is_admissible(tol):
        raise NotAdmissible(
            "theta2 + theta3 - 2*theta1 must equal 3*pi/2 mod 2*pi; "
            f"off by {theta.residual():.3e} rad"
        )
    phi = weyl_meb(2, 3)
    label = f"c23({theta.theta1:.6g},{theta.theta2:.6g},{theta.theta3:.6g})"
    psi = c23_family(theta_mixing_matrix(theta), label=label)
    return phi, psi


def _vectors_as_rows(vectors: np.ndarray, label: str) -> BasisFamily:
    # each vector of C^p becomes a 1 x p matrix, a Schmidt-rank-1 element
    n, p = vectors.shape
    return BasisFamily(d=1, dprime=p, k=1, elements=vectors.reshape(n, 1, p), label=label)


def mub_prime(p: int) -> FamilySet:
    """The standard p + 1 mutually unbiased bases of C^p for prime p.

    For p = 2 these are the frozen T1, T2, T3 families from the catalog.
    For odd p, basis b has vector j with amplitude omega^(b s^2 + j s)/sqrt(p)
    at position s, preceded by the computational basis.
    """
    if not isinstance(p, (int, np.integer)):
        raise TypeError(f"p must be an integer, got {type(p).__name__}")
    if not is_prime(int(p)):
        raise NotPrime(f"{p} is not prime")
    p = int(p)
    if p == 2:
        return FamilySet((catalog("T1"), catalog("T2"), catalog("T3")))
    omega = np.exp(2j * np.pi / p)
    families = [_vectors_as_rows(np.eye(p, dtype=complex), label=f"mub{p}.standard")]
    s = np.arange(p)
    for b in range(p):
        vecs = np.empty((p, p), dtype=complex)
        for j in range(p):
            vecs[j] = omega ** ((b * s * s + j * s) % p) / np.sqrt(p)
        families.append(_vectors_as_rows(vecs, label=f"mub{p}.quad{b}"))
    return FamilySet(tuple(families))


def mub_composite(q: int) -> FamilySet:
    """Mutually unbiased bases of C^q by tensoring prime constituents.

    Writing q = prod(p_i ** a_i), basis t of C^q is the tensor product of
    a_i copies of basis t of C^(p_i) for each factor, taken in increasing
    prime-power order.  This yields min(p_i + 1) bases, fewer than the
    best known count for prime powers but unbiased by the product rule.
    """
    fact = factorize(q)
    if len(fact.factors) == 1 and fact.factors[0][1] == 1:
        return mub_prime(fact.factors[0][0])
    parts = sorted(fact.factors, key=lambda pa: pa[0] ** pa[1])
    count = min(p + 1 for p, _ in parts)
    # column j of a p x p basis matrix is vector j of that basis
    basis_mats: list[list[np.ndarray]] = []
    for p, a in parts:
        prime_set = mub_prime(p)
        mats = [np.stack([f[j][0] for j in range(p)], axis=1) for f in prime_set]
        basis_mats.append(mats)
    families = []
    for t in range(count):
        full = np.eye(1, dtype=complex)
        for (p, a), mats in zip(parts, basis_mats):
            for _ in range(a):
                full = np.kron(full, mats[t])
        families.append(_vectors_as_rows(full.T.copy(), label=f"mub{q}.t{t}"))
    return FamilySet(tuple(families))


def mumeb_qubit() -> FamilySet:
    """Three mutually unbiased maximally entangled bases of C^2 (x) C^2.

    Basis t consists of the four matrices D^t P / sqrt(2) for P among the
    identity and the three Pauli matrices, where D = exp(i pi/3 * n.sigma)
    for the balanced axis n = (1,1,1)/sqrt(3).  D cycles the Pauli frame,
    and any two of the three bases meet at overlap magnitude 1/2.
    """
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    y = np.array([[0, -1j], [1j, 0]], dtype=complex)
    z = np.array([[1, 0], [0, -1]], dtype=complex)
    eye = np.eye(2, dtype=complex)
    d_op = expm(1j * (np.pi / 3) * (x + y + z) / _S3)
    families = []
    for t in range(3):
        frame = np.linalg.matrix_power(d_op, t)
        mats = np.array([frame @ pauli for pauli in (eye, x, y, z)]) / _S2
        families.append(BasisFamily(d=2, dprime=2, k=2, elements=mats, label=f"frame{t}"))
    return FamilySet(tuple(families))


# ---------------------------------------------------------------------------
# frozen catalog
# ---------------------------------------------------------------------------

def _r1_elements() -> np.ndarray:
    raw = [
        [[1, 0, 0], [0, 1, 0]],
        [[1, 0, 0], [0, -1, 0]],
        [[0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, -1]],
        [[0, 0, 1], [1, 0, 0]],
        [[0, 0, 1], [-1, 0, 0]],
    ]
    return np.array(raw, dtype=complex) / _S2


def _r2_elements() -> np.ndarray:
    raw = [
        [[1, _S2, 0], [-_S2 * 1j, 1j, 0]],
        [[1, -_S2, 0], [-_S2 * 1j, -1j, 0]],
        [[0, 1, _S2], [0, -_S2 * 1j, 1j]],
        [[0, 1, -_S2], [0, -_S2 * 1j, -1j]],
        [[_S2, 0, 1], [1j, 0, -_S2 * 1j]],
        [[-_S2, 0, 1], [-1j, 0, -_S2 * 1j]],
    ]
    return np.array(raw, dtype=complex) / _S6


def _s1_elements() -> np.ndarray:
    a = _W3 + 2
    b = 2 * _W3**2 + 1
    c = _W3**2 + 2 * _W3
    raw = [
        [[a, a, a], [b, a, c], [c, a, b]],
        [[a, c, b], [b, c, a], [c, c, c]],
        [[a, b, c], [b, b, b], [c, b, a]],
        [[a, a, a], [a, c, b], [a, b, c]],
        [[a, c, b], [a, b, c], [a, a, a]],
        [[a, b, c], [a, a, a], [a, c, b]],
        [[a, a, a], [c, b, a], [b, c, a]],
        [[a, c, b], [c, a, b], [b, b, b]],
        [[a, b, c], [c, c, c], [b, a, c]],
    ]
    return np.array(raw, dtype=complex) / (3 * _S3)


def _s2_elements() -> np.ndarray:
    w = _W3
    raw = [
        [[0, 3 * w**2, 0], [3 * w, 0, 0], [0, 0, 3]],
        [[0, 3, 0], [3 * w, 0, 0], [0, 0, 3 * w**2]],
        [[0, 3 * w, 0], [3 * w, 0, 0], [0, 0, 3 * w]],
        [[3 * w**2, 0, 0], [0, 0, 3 * w], [0, 3, 0]],
        [[3 * w**2, 0, 0], [0, 0, 3], [0, 3 * w, 0]],
        [[3 * w**2, 0, 0], [0, 0, 3 * w**2], [0, 3 * w**2, 0]],
        [[0, 0, 3 * w**2], [0, 3 * w, 0], [3, 0, 0]],
        [[0, 0, 3 * w], [0, 3 * w**2, 0], [3, 0, 0]],
        [[0, 0, 3], [0, 3, 0], [3, 0, 0]],
    ]
    return np.array(raw, dtype=complex) / (3 * _S3)


def _s3_elements() -> np.ndarray:
    w = _W3
    raw = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 0], [0, w, 0], [0, 0, w**2]],
        [[1, 0, 0], [0, w**2, 0], [0, 0, w]],
        [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
        [[0, 0, w**2], [1, 0, 0], [0, w, 0]],
        [[0, 0, w], [1, 0, 0], [0, w**2, 0]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[0, w, 0], [0, 0, w**2], [1, 0, 0]],
        [[0, w**2, 0], [0, 0, w], [1, 0, 0]],
    ]
    return np.array(raw, dtype=complex) / _S3


_EQ16_KETS = [
    (1, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, -1, 0),
    (0, 1, 0, 0, 0, 1),
    (0, 1, 0, 0, 0, -1),
    (0, 0, 1, 1, 0, 0),
    (0, 0, 1, -1, 0, 0),
]

_EQ17_KETS = [
    (1, _S2, 0, -_S2 * 1j, 1j, 0),
    (1, -_S2, 0, -_S2 * 1j, -1j, 0),
    (0, 1, _S2, 0, -_S2 * 1j, 1j),
    (0, 1, -_S2, 0, -_S2 * 1j, -1j),
    (_S2, 0, 1, 1j, 0, -_S2 * 1j),
    (-_S2, 0, 1, -1j, 0, -_S2 * 1j),
]


def _kets_to_family(kets, scale: float, label: str) -> BasisFamily:
    mats = [
        state_to_matrix(StateVector(2, 3, np.asarray(amps, dtype=complex) / scale))
        for amps in kets
    ]
    return BasisFamily(d=2, dprime=3, k=2, elements=np.array(mats), label=label)


def _u_matrix() -> np.ndarray:
    h = 1 / _S2
    return np.array(
        [
            [h, h, 0, 0, 0, 0],
            [0, 0, h, h, 0, 0],
            [0, 0, 0, 0, h, h],
            [0, 0, 0, 0, h, -h],
            [h, -h, 0, 0, 0, 0],
            [0, 0, h, -h, 0, 0],
        ],
        dtype=complex,
    )


def _v_matrix() -> np.ndarray:
    u = 1 / _S6
    s = _S2 / _S6
    return np.array(
        [
            [u, u, 0, 0, s, -s],
            [s, -s, u, u, 0, 0],
            [0, 0, s, -s, u, u],
            [-s * 1j, -s * 1j, 0, 0, u * 1j, -u * 1j],
            [u * 1j, -u * 1j, -s * 1j, -s * 1j, 0, 0],
            [0, 0, u * 1j, -u * 1j, -s * 1j, -s * 1j],
        ],
        dtype=complex,
    )


def _othermu_matrix() -> np.ndarray:
    return np.array(
        [
            [(_S2 / 2) * (1 + 1j), -1 + 1j],
            [-1 - 1j, (_S2 / 2) * (-1 + 1j)],
        ],
        dtype=complex,
    ) / _S3


_CATALOG_BUILDERS = {
    "R1": lambda: BasisFamily(2, 3, 2, _r1_elements(), label="R1"),
    "R2": lambda: BasisFamily(2, 3, 2, _r2_elements(), label="R2"),
    "S1": lambda: BasisFamily(3, 3, 3, _s1_elements(), label="S1"),
    "S2": lambda: BasisFamily(3, 3, 3, _s2_elements(), label="S2"),
    "S3": lambda: BasisFamily(3, 3, 3, _s3_elements(), label="S3"),
    "T1": lambda: BasisFamily(
        1, 2, 1, np.array([[[0, 1]], [[1, 0]]], dtype=complex), label="T1"
    ),
    "T2": lambda: BasisFamily(
        1, 2, 1, np.array([[[1, 1]], [[1, -1]]], dtype=complex) / _S2, label="T2"
    ),
    "T3": lambda: BasisFamily(
        1, 2, 1, np.array([[[1, 1j]], [[1, -1j]]], dtype=complex) / _S2, label="T3"
    ),
    "U": _u_matrix,
    "V": _v_matrix,
    "Q": lambda: np.diag([-1j, -1j, 1, 1, 1, 1]).astype(complex),
    "eq16": lambda: _kets_to_family(_EQ16_KETS, _S2, label="eq16"),
    "eq17": lambda: _kets_to_family(_EQ17_KETS, _S6, label="eq17"),
    "othermu": _othermu_matrix,
}

CATALOG_NAMES = tuple(_CATALOG_BUILDERS)

_CATALOG_BY_KEY = {name.lower(): builder for name, builder in _CATALOG_BUILDERS.items()}


def catalog(name: str):
    """Look up a frozen reference object by name, case-insensitively.

    R1/R2, S1..S3, T1..T3, eq16, eq17 are basis families; U, V, Q, and
    othermu are plain matrices.  eq16 and eq17 are ket-form transcriptions
    that reshape to the same matrices as R1 and R2, kept separate so the
    two routes can cross-check each other.
    """
    key = str(name).strip().lower()
    try:
        builder = _CATALOG_BY_KEY[key]
    except KeyError:
        raise UnknownName(
            f"unknown catalog entry {name!r}; known names: {', '.join(CATALOG_NAMES)}"
        ) from None
    return builder()
