import numpy as np
import pytest

from museb import (
    DimensionOrder,
    FamilySet,
    NotAdmissible,
    NotPrime,
    ThetaParams,
    UnknownName,
    c23_partner,
    catalog,
    check_mu_pair,
    check_museb_set,
    check_sebk,
    factorize,
    is_prime,
    is_unitary,
    mub_composite,
    mub_prime,
    mumeb_qubit,
    singular_values,
    solve_theta,
    theta_mixing_matrix,
    weyl_meb,
)

SQ2 = np.sqrt(2.0)
PI = np.pi


# ---------------------------------------------------------------- weyl_meb

def test_weyl_23_matches_frozen_family():
    assert np.max(np.abs(weyl_meb(2, 3).elements - catalog("R1").elements)) < 1e-12


def test_weyl_requires_ordered_dimensions():
    with pytest.raises(DimensionOrder):
        weyl_meb(3, 2)
    with pytest.raises(ValueError):
        weyl_meb(0, 2)


def test_weyl_1xq_is_product_basis():
    fam = weyl_meb(1, 5)
    assert fam.k == 1
    assert np.max(np.abs(fam.elements - np.eye(5).reshape(5, 1, 5))) < 1e-12


def test_weyl_families_certify_across_dimensions():
    for d in range(1, 5):
        for dprime in range(d, 6):
            fam = weyl_meb(d, dprime)
            assert fam.k == d
            rep = check_sebk(fam)
            assert rep.passed, (d, dprime, rep.worst_violation)


def test_weyl_square_case_scales_to_unitaries():
    for d in (2, 3, 4):
        fam = weyl_meb(d, d)
        for i in range(len(fam)):
            assert is_unitary(np.sqrt(d) * fam[i])


# ------------------------------------------------------------ c23 partner

def test_partner_at_reference_angles_is_frozen_r2():
    phi, psi = c23_partner(ThetaParams(0.0, 1.5 * PI, 0.0))
    assert np.max(np.abs(phi.elements - catalog("R1").elements)) < 1e-12
    assert np.max(np.abs(psi.elements - catalog("R2").elements)) < 1e-12


def test_partner_alternative_angles_match_frozen_mixer():
    theta = ThetaParams(PI / 4, 3 * PI / 4, 5 * PI / 4)
    assert theta.is_admissible()
    assert np.max(np.abs(theta_mixing_matrix(theta) - catalog("othermu"))) < 1e-12
    phi, psi = c23_partner(theta)
    assert check_sebk(psi).passed
    assert check_mu_pair(phi, psi).passed


def test_partner_rejects_inadmissible_angles():
    with pytest.raises(NotAdmissible):
        c23_partner(ThetaParams(0.0, 1.5 * PI, 0.02))
    with pytest.raises(NotAdmissible):
        c23_partner(ThetaParams(0.3, 0.3, 0.3))


def test_solve_theta_always_lands_admissible():
    rng = np.random.default_rng(23)
    for _ in range(50):
        t1, t2 = rng.uniform(0, 2 * PI, size=2)
        theta = ThetaParams(t1, t2, solve_theta(t1, t2))
        assert theta.is_admissible()
        phi, psi = c23_partner(theta)
        assert check_mu_pair(phi, psi).passed


def test_mixing_matrix_unitary_exactly_when_admissible():
    good = ThetaParams(0.7, 2.1, solve_theta(0.7, 2.1))
    assert is_unitary(theta_mixing_matrix(good))
    bad = ThetaParams(0.7, 2.1, solve_theta(0.7, 2.1) + 0.05)
    assert not is_unitary(theta_mixing_matrix(bad))


def test_theta_params_reject_non_finite():
    with pytest.raises(ValueError):
        ThetaParams(0.0, np.inf, 0.0)


# -------------------------------------------------------------------- mubs

def test_mub_prime_two_is_the_frozen_t_trio():
    fs = mub_prime(2)
    assert fs.witness_count == 3
    for fam, name in zip(fs, ("T1", "T2", "T3")):
        assert np.max(np.abs(fam.elements - catalog(name).elements)) < 1e-12


def test_mub_prime_counts_and_certification():
    for p in (2, 3, 5, 7):
        fs = mub_prime(p)
        assert fs.witness_count == p + 1
        assert (fs.d, fs.dprime, fs.k) == (1, p, 1)
        assert check_museb_set(fs).passed


def test_mub_prime_rejects_composites():
    for n in (1, 4, 6, 9):
        with pytest.raises(NotPrime):
            mub_prime(n)


def test_mub_composite_counts():
    for q, expected in ((4, 3), (6, 3), (9, 4), (12, 3), (15, 4)):
        fs = mub_composite(q)
        assert fs.witness_count == expected, q
        assert fs.dprime == q
        assert check_museb_set(fs).passed, q


def test_mub_composite_prime_input_delegates():
    fs = mub_composite(5)
    assert fs.witness_count == 6
    assert check_museb_set(fs).passed


def test_factorize_and_is_prime():
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(7).factors == ((7, 1),)
    assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    with pytest.raises(ValueError):
        factorize(1)
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


# ----------------------------------------------------------- mumeb_qubit

def test_mumeb_qubit_is_three_maximally_entangled_bases():
    fs = mumeb_qubit()
    assert fs.witness_count == 3
    assert (fs.d, fs.dprime, fs.k) == (2, 2, 2)
    assert check_museb_set(fs).passed
    for fam in fs:
        for i in range(4):
            assert np.max(np.abs(singular_values(fam[i]) - 1 / SQ2)) < 1e-12


def test_mumeb_qubit_cross_overlaps_are_half():
    fs = mumeb_qubit()
    for a in range(3):
        for b in range(a + 1, 3):
            for i in range(4):
                for j in range(4):
                    ov = abs(np.trace(fs[a][i].conj().T @ fs[b][j]))
                    assert abs(ov - 0.5) < 1e-12


# ---------------------------------------------------------------- catalog

def test_catalog_unknown_name():
    with pytest.raises(UnknownName):
        catalog("R9")


def test_catalog_is_case_insensitive():
    assert np.array_equal(catalog("r1").elements, catalog("R1").elements)
    assert np.array_equal(catalog("OTHERMU"), catalog("othermu"))


def test_catalog_q_is_the_frozen_corrector():
    q = catalog("Q")
    assert np.max(np.abs(q - np.diag([-1j, -1j, 1, 1, 1, 1]))) == 0.0


def test_catalog_u_v_columns_are_the_ket_families():
    u, v = catalog("U"), catalog("V")
    assert is_unitary(u) and is_unitary(v)
    assert np.max(np.abs(u.T.reshape(6, 2, 3) - catalog("eq16").elements)) < 1e-12
    assert np.max(np.abs(v.T.reshape(6, 2, 3) - catalog("eq17").elements)) < 1e-12


def test_catalog_ket_route_agrees_with_matrix_route():
    assert np.max(np.abs(catalog("eq16").elements - catalog("R1").elements)) == 0.0
    assert np.max(np.abs(catalog("eq17").elements - catalog("R2").elements)) == 0.0


def test_catalog_othermu_has_the_admissible_shape():
    mat = catalog("othermu")
    assert is_unitary(mat)
    pattern = np.array([[1.0, SQ2], [SQ2, 1.0]]) / np.sqrt(3.0)
    assert np.max(np.abs(np.abs(mat) - pattern)) < 1e-12
    delta = np.angle(mat[1, 1]) - np.angle(mat[0, 0])
    assert abs((delta - PI / 2 + PI) % (2 * PI) - PI) < 1e-12


def test_catalog_families_carry_labels():
    assert catalog("S2").label == "S2"
    assert catalog("eq17").label == "eq17"


def test_frozen_pair_is_mutually_unbiased():
    fs = FamilySet((catalog("R1"), catalog("R2")))
    rep = check_museb_set(fs)
    assert rep.passed
    assert rep.worst_violation < 1e-12
