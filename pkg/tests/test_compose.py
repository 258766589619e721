import numpy as np
import pytest

from museb import (
    EmptyInput,
    FamilySet,
    RecipeSpec,
    UnsupportedParameters,
    catalog,
    check_museb_set,
    check_sebk,
    hs_inner,
    kron,
    mub_prime,
    mumeb_qubit,
    run_recipe,
    singular_values,
    tensor_families,
    transpose_family,
    weyl_meb,
)


def s_set():
    return FamilySet((catalog("S1"), catalog("S2"), catalog("S3")))


def r_set():
    return FamilySet((catalog("R1"), catalog("R2")))


def test_tensor_dimensions_rank_and_count():
    out = tensor_families(s_set(), mub_prime(2))
    assert (out.d, out.dprime, out.k) == (3, 6, 3)
    assert out.witness_count == 3
    assert len(out[0]) == 18
    assert check_museb_set(out).passed


def test_tensor_count_is_min_of_inputs():
    assert tensor_families(r_set(), s_set()).witness_count == 2
    assert tensor_families(s_set(), r_set()).witness_count == 2
    assert tensor_families(s_set(), mub_prime(5)).witness_count == 3


def test_tensor_element_order_left_factor_slowest():
    out = tensor_families(r_set(), mub_prime(2))
    left, right = catalog("R1"), mub_prime(2)[0]
    # element a*len(right)+b must be kron(left[a], right[b])
    for a in (0, 3, 5):
        for b in (0, 1):
            got = out[0][a * 2 + b]
            assert np.max(np.abs(got - kron(left[a], right[b]))) < 1e-12


def test_tensor_overlap_product_law():
    out = tensor_families(s_set(), mub_prime(2))
    s, t = s_set(), mub_prime(2)
    rng = np.random.default_rng(41)
    for _ in range(30):
        fi, fj = rng.choice(3, size=2, replace=False)
        a, b = rng.integers(0, 9), rng.integers(0, 2)
        c, e = rng.integers(0, 9), rng.integers(0, 2)
        lhs = abs(hs_inner(out[fi][a * 2 + b], out[fj][c * 2 + e]))
        rhs = abs(hs_inner(s[fi][a], s[fj][c])) * abs(hs_inner(t[fi][b], t[fj][e]))
        assert abs(lhs - rhs) < 1e-12


def test_tensor_rejects_empty_sets():
    with pytest.raises(EmptyInput):
        tensor_families(FamilySet(()), s_set())
    with pytest.raises(EmptyInput):
        tensor_families(s_set(), FamilySet(()))


def test_tensor_labels_join():
    out = tensor_families(r_set(), s_set())
    assert out[0].label == "R1*S1"


def test_transpose_family_swaps_dims_and_preserves_verdict():
    out = transpose_family(r_set())
    assert (out.d, out.dprime, out.k) == (3, 2, 2)
    assert check_museb_set(out).passed
    assert np.max(np.abs(out[0][2] - catalog("R1")[2].T)) == 0.0
    back = transpose_family(out)
    assert np.array_equal(back[1].elements, catalog("R2").elements)


# ------------------------------------------------------------------ recipes

def test_recipe_m69_two_witnesses():
    out = run_recipe(RecipeSpec("m69"))
    assert (out.d, out.dprime, out.k) == (6, 9, 6)
    assert out.witness_count == 2
    # spot check the overlap magnitude between the two families
    ov = abs(hs_inner(out[0][7], out[1][31]))
    assert abs(ov - 1 / np.sqrt(54)) < 1e-12


def test_recipe_cor21k_seb2():
    out = run_recipe(RecipeSpec("cor21k_seb2", {"k": 2}))
    assert (out.d, out.dprime, out.k) == (3, 4, 2)
    assert out.witness_count == 2
    ov = abs(hs_inner(out[0][0], out[1][5]))
    assert abs(ov - 1 / np.sqrt(12)) < 1e-12


def test_recipe_cor21k_mumeb_degenerate_is_the_frozen_pair():
    out = run_recipe(RecipeSpec("cor21k_mumeb", {"d": 1, "q": 1}))
    assert out.witness_count == 2
    assert np.max(np.abs(out[0].elements - catalog("R1").elements)) == 0.0
    assert np.max(np.abs(out[1].elements - catalog("R2").elements)) == 0.0


def test_recipe_cor21k_mumeb_scales_up():
    out = run_recipe(RecipeSpec("cor21k_mumeb", {"d": 2, "q": 1}))
    assert (out.d, out.dprime, out.k) == (4, 6, 4)
    assert out.witness_count == 2


def test_recipe_example3_matches_the_literal_construction():
    out = run_recipe(RecipeSpec("example3"))
    assert (out.d, out.dprime, out.k) == (6, 6, 3)
    assert out.witness_count == 3
    s, t = s_set(), mub_prime(2)
    for fi in range(3):
        assert len(out[fi]) == 36
        for ti in (0, 1):
            for si in (0, 4, 8):
                for tj in (0, 1):
                    idx = ti * 18 + si * 2 + tj
                    want = kron(t[fi][ti].T, kron(s[fi][si], t[fi][tj]))
                    assert np.max(np.abs(out[fi][idx] - want)) < 1e-12


def test_recipe_example3_spectra():
    out = run_recipe(RecipeSpec("example3"))
    third = 1 / np.sqrt(3.0)
    for fi in range(3):
        sv = np.linalg.svd(out[fi].elements, compute_uv=False)
        target = np.array([third, third, third, 0.0, 0.0, 0.0])
        assert np.max(np.abs(sv - target)) < 1e-12


def test_recipe_example1_three_witnesses():
    out = run_recipe(RecipeSpec("example1"))
    assert (out.d, out.dprime, out.k) == (4, 24, 4)
    assert out.witness_count == 3
    assert len(out[0]) == 96
    # maximal rank on the smaller side: every element is maximally entangled
    sv = singular_values(out[2][17])
    assert np.max(np.abs(sv - 0.5)) < 1e-12


def test_recipe_theorem3_generic():
    out = run_recipe(RecipeSpec("theorem3", {"d": 2, "dprime": 2, "p": 3, "q": 3}))
    assert (out.d, out.dprime, out.k) == (6, 6, 6)
    assert out.witness_count == 3
    assert check_museb_set(out).passed


def test_recipe_corollary1_both_orientations():
    right = run_recipe(RecipeSpec("corollary1_right", {"d": 2, "dprime": 3, "q": 4}))
    assert (right.d, right.dprime, right.k) == (2, 12, 2)
    assert right.witness_count == 2
    left = run_recipe(RecipeSpec("corollary1_left", {"d": 2, "dprime": 3, "p": 3}))
    assert (left.d, left.dprime, left.k) == (6, 3, 2)
    assert left.witness_count == 2


def test_recipe_unknown_name():
    with pytest.raises(ValueError):
        run_recipe(RecipeSpec("theorem9"))


def test_recipe_missing_parameters():
    with pytest.raises(ValueError):
        run_recipe(RecipeSpec("theorem3", {"d": 2}))
    with pytest.raises(ValueError):
        run_recipe(RecipeSpec("theorem3", {"d": 2, "dprime": 3, "p": 0, "q": 2}))


def test_recipe_out_of_scope_parameters_are_refused_loudly():
    with pytest.raises(UnsupportedParameters) as exc:
        run_recipe(RecipeSpec("theorem3", {"d": 5, "dprime": 5, "p": 1, "q": 2}))
    assert "C^5" in str(exc.value)
    with pytest.raises(UnsupportedParameters):
        run_recipe(RecipeSpec("cor21k_mumeb", {"d": 5, "q": 1}))
    with pytest.raises(UnsupportedParameters):
        run_recipe(RecipeSpec("theorem3", {"d": 2, "dprime": 5, "p": 1, "q": 1}))


def test_composed_outputs_certify_end_to_end():
    pool = {
        "weyl33": FamilySet((weyl_meb(3, 3),)),
        "qubit": mumeb_qubit(),
        "mub3": mub_prime(3),
        "rset": r_set(),
    }
    for left in pool.values():
        for right in pool.values():
            out = tensor_families(left, right)
            assert out.witness_count == min(left.witness_count, right.witness_count)
            assert out.k == left.k * right.k
            rep = check_museb_set(out)
            assert rep.passed, rep.worst_violation


def test_tensor_three_deep_keeps_certifying():
    out = tensor_families(r_set(), tensor_families(mub_prime(2), mumeb_qubit()))
    assert (out.d, out.dprime, out.k) == (4, 12, 4)
    assert check_museb_set(out).passed
