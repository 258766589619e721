"""Composition of verified family sets into larger ones.

The central fact: if S is a set of mutually unbiased Schmidt-rank-k1
bases of C^d (x) C^d' and T one of rank-k2 bases of C^p (x) C^q, then
tensoring elements pairwise gives mutually unbiased rank-(k1 k2) bases of
C^(dp) (x) C^(d'q), one for each aligned pair of input families.  Singular
values and overlaps multiply across the Kronecker product, which is what
makes the count, the rank, and the unbiasedness all survive.

run_recipe packages named applications of this rule.  Every recipe
verifies its ingredients and its output before returning, so a returned
set is always a certified witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .construct import catalog, factorize, is_prime, mub_composite, mub_prime, mumeb_qubit
from .errors import EmptyInput, UnsupportedParameters, VerificationFailed
from .verify import BasisFamily, FamilySet, VerifyConfig, check_museb_set

__all__ = [
    "RecipeSpec",
    "RECIPE_NAMES",
    "tensor_families",
    "transpose_family",
    "run_recipe",
]


@dataclass(frozen=True)
class RecipeSpec:
    """A named composition recipe plus its integer parameters."""

    name: str
    parameters: dict[str, int] = field(default_factory=dict)


def tensor_families(s: FamilySet, t: FamilySet) -> FamilySet:
    """Tensor two family sets pairwise, first set as the left Kronecker factor.

    Family i of the result collects kron(A, C) for A in s[i] and C in t[i],
    with the index of A varying slowest.  The result has min(len(s), len(t))
    families of Schmidt rank s.k * t.k.
    """
    if len(s) == 0 or len(t) == 0:
        raise EmptyInput("tensor_families needs at least one family on each side")
    count = min(len(s), len(t))
    d, dp = s.d * t.d, s.dprime * t.dprime
    k = s.k * t.k
    families = []
    for i in range(count):
        left = s[i].elements
        right = t[i].elements
        prod = np.einsum("aij,bkl->abikjl", left, right)
        elements = prod.reshape(len(s[i]) * len(t[i]), d, dp)
        label = _join_labels(s[i].label, t[i].label)
        families.append(BasisFamily(d=d, dprime=dp, k=k, elements=elements, label=label))
    return FamilySet(tuple(families))


def _join_labels(a: str, b: str) -> str:
    if a and b:
        return f"{a}*{b}"
    return a or b


def transpose_family(s: FamilySet) -> FamilySet:
    """Transpose every element, swapping the roles of the two subsystems.

    Orthonormality, Schmidt coefficients, and overlap magnitudes are all
    invariant, so the result witnesses the mirrored dimension pair.
    """
    if len(s) == 0:
        raise EmptyInput("transpose_family needs at least one family")
    families = []
    for fam in s:
        elements = fam.elements.transpose(0, 2, 1).copy()
        label = f"{fam.label}^T" if fam.label else ""
        families.append(
            BasisFamily(d=fam.dprime, dprime=fam.d, k=fam.k, elements=elements, label=label)
        )
    return FamilySet(tuple(families))


def _trivial_set(count: int) -> FamilySet:
    # bases of C^1 (x) C^1; every pair is vacuously unbiased at 1/sqrt(1)
    one = np.ones((1, 1, 1), dtype=complex)
    fams = tuple(
        BasisFamily(d=1, dprime=1, k=1, elements=one, label="triv") for _ in range(count)
    )
    return FamilySet(fams)


def _mub_set(q: int) -> FamilySet:
    if q == 1:
        return _trivial_set(3)
    if is_prime(q):
        return mub_prime(q)
    return mub_composite(q)


def _mumeb_square(d: int) -> FamilySet:
    """Three or more mutually unbiased maximally entangled bases of C^d (x) C^d."""
    if d == 1:
        return _trivial_set(3)
    if d == 2:
        return mumeb_qubit()
    if d == 3:
        return FamilySet((catalog("S1"), catalog("S2"), catalog("S3")))
    fact = factorize(d)
    unsupported = [p for p, _ in fact.factors if p not in (2, 3)]
    if unsupported:
        raise UnsupportedParameters(
            f"no built-in maximally entangled basis set for C^{d} (x) C^{d}: "
            f"prime factor(s) {unsupported} would need the externally cited "
            "odd-prime-power construction, which this package does not build"
        )
    out: FamilySet | None = None
    for p, a in fact.factors:
        base = _mumeb_square(p)
        for _ in range(a):
            out = base if out is None else tensor_families(out, base)
    assert out is not None
    return out


def _known_set(d: int, dprime: int) -> FamilySet:
    """A built-in verified family set for the dimension pair, or a clear refusal."""
    if (d, dprime) == (1, 1):
        return _trivial_set(3)
    if d == 1:
        return _mub_set(dprime)
    if dprime == 1:
        return transpose_family(_mub_set(d))
    if (d, dprime) == (2, 3):
        return FamilySet((catalog("R1"), catalog("R2")))
    if (d, dprime) == (3, 2):
        return transpose_family(FamilySet((catalog("R1"), catalog("R2"))))
    if d == dprime:
        return _mumeb_square(d)
    raise UnsupportedParameters(
        f"no built-in family set for C^{d} (x) C^{dprime}: witnesses for this "
        "shape would need externally cited constructions not built here"
    )


def _require(cond_set: FamilySet, what: str, cfg: VerifyConfig) -> FamilySet:
    report = check_museb_set(cond_set, cfg)
    if not report.passed:
        raise VerificationFailed(
            f"{what} failed certification with worst violation {report.worst_violation:.3e}"
        )
    return cond_set


def _params(spec: RecipeSpec, names: tuple[str, ...], defaults: dict[str, int]) -> dict[str, int]:
    params = dict(defaults)
    params.update(spec.parameters)
    missing = [n for n in names if n not in params]
    if missing:
        raise ValueError(f"recipe {spec.name!r} is missing parameters {missing}")
    bad = {n: params[n] for n in names if int(params[n]) < 1}
    if bad:
        raise ValueError(f"recipe {spec.name!r} needs positive parameters, got {bad}")
    return {n: int(params[n]) for n in names}


def _recipe_theorem3(spec: RecipeSpec, cfg: VerifyConfig) -> FamilySet:
    p = _params(spec, ("d", "dprime", "p", "q"), {})
    s = _require(_known_set(p["d"], p["dprime"]), "left ingredient", cfg)
    t = _require(_known_set(p["p"], p["q"]), "right ingredient", cfg)
    return tensor_families(s, t)


def _recipe_corollary1_right(spec: RecipeSpec, cfg: VerifyConfig) -> FamilySet:
    p = _params(spec, ("d", "dprime", "q"), {})
    s = _require(_known_set(p["d"], p["dprime"]), "left ingredient", cfg)
    t = _require(_mub_set(p["q"]), "unbiased bases", cfg)
    return tensor_families(s, t)


def _recipe_corollary1_left(spec: RecipeSpec, cfg: VerifyConfig) -> FamilySet:
    p = _params(spec, ("d", "dprime", "p"), {})
    s = _require(_known_set(p["d"], p["dprime"]), "left ingredient", cfg)
    t = _require(transpose_family(_mub_set(p["p"])), "unbiased bases", cfg)
    return tensor_families(s, t)


def _recipe_example1(spec: RecipeSpec, cfg: VerifyConfig) -> FamilySet:
    # three maximally entangled witnesses in C^4 (x) C^24 built from
    # qubit frames crossed with small unbiased bases
    a = tensor_families(_require(mumeb_qubit(), "qubit frames", cfg), _mub_set(2))
    b = tensor_families(_require(mumeb_qubit(), "qubit frames", cfg), _mub_set(3))
    return tensor_families(_require(a, "(2,4) stage", cfg), _require(b, "(2,6) stage", cfg))


def _recipe_example3(spec: RecipeSpec, cfg: VerifyConfig) -> FamilySet:
    # Schmidt-rank-3 witnesses in C^6 (x) C^6 of the literal form
    # kron(t^T, kron(s, t)) with s from the square rank-3 set and t qubit-sided
    s_set = _require(_mumeb_square(3), "rank-3 square set", cfg)
    t_set = _require(_mub_set(2), "qubit unbiased bases", cfg)
    inner = tensor_families(s_set, t_set)
    return tensor_families(transpose_family(t_set), inner)


def _recipe_cor21k_mumeb(spec: RecipeSpec, cfg: VerifyConfig) -> FamilySet:
    p = _params(spec, ("d", "q"), {"d": 1, "q": 1})
    base = _require(_known_set(2, 3), "rank-2 pair", cfg)
    step = tensor_families(base, _require(_mumeb_square(p["d"]), "square set", cfg))
    return tensor_families(step, _require(_mub_set(p["q"]), "unbiased bases", cfg))


def _recipe_cor21k_seb2(spec: RecipeSpec, cfg: VerifyConfig) -> FamilySet:
    p = _params(spec, ("k",), {"k": 2})
    s = _require(transpose_family(_known_set(2, 3)), "rank-2 pair", cfg)
    return tensor_families(s, _require(_mub_set(p["k"]), "unbiased bases", cfg))


def _recipe_m69(spec: RecipeSpec, cfg: VerifyConfig) -> FamilySet:
    s = _require(_known_set(2, 3), "rank-2 pair", cfg)
    t = _require(_mumeb_square(3), "rank-3 square set", cfg)
    return tensor_families(s, t)


_RECIPES = {
    "theorem3": _recipe_theorem3,
    "corollary1_right": _recipe_corollary1_right,
    "corollary1_left": _recipe_corollary1_left,
    "example1": _recipe_example1,
    "example3": _recipe_example3,
    "cor21k_mumeb": _recipe_cor21k_mumeb,
    "cor21k_seb2": _recipe_cor21k_seb2,
    "m69": _recipe_m69,
}

RECIPE_NAMES = tuple(_RECIPES)


def run_recipe(spec: RecipeSpec, cfg: VerifyConfig | None = None) -> FamilySet:
    """Assemble a named composition and certify it before returning.

    Raises UnsupportedParameters when the recipe would need an ingredient
    this package does not build, and VerificationFailed if an assembled
    set does not certify (which would indicate a bug, not bad input).
    """
    cfg = cfg or VerifyConfig()
    try:
        recipe = _RECIPES[spec.name]
    except KeyError:
        raise ValueError(
            f"unknown recipe {spec.name!r}; known recipes: {', '.join(RECIPE_NAMES)}"
        ) from None
    result = recipe(spec, cfg)
    return _require(result, f"recipe {spec.name!r} output", cfg)
