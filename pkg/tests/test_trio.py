import numpy as np
import pytest

from museb import (
    NotCHM,
    ShapeMismatch,
    VerifyConfig,
    catalog,
    dephased_obstruction,
    has_real_2x3,
    is_chm,
    theorem2_reproduce,
)


def fourier(n):
    j = np.arange(n)
    return np.exp(2j * np.pi * np.outer(j, j) / n) / np.sqrt(n)


def builtin_w():
    return catalog("U").conj().T @ catalog("V")


def apply_witness(mat, finding):
    out = np.array(mat.T if finding.on_transpose else mat)
    for col, phase in zip(finding.columns, finding.phases):
        out[:, col] = out[:, col] * phase
    return out


def test_is_chm_on_fourier_and_builtin():
    assert is_chm(fourier(6))
    assert is_chm(fourier(5))
    assert is_chm(builtin_w())


def test_is_chm_rejects_flat_but_nonunitary_and_unitary_but_spiky():
    assert not is_chm(np.ones((3, 3), dtype=complex) / np.sqrt(3))
    assert not is_chm(np.eye(4, dtype=complex))
    with pytest.raises(ShapeMismatch):
        is_chm(np.ones((2, 3)))


def test_has_real_2x3_finds_a_planted_pattern():
    rng = np.random.default_rng(2)
    w = np.exp(1j * rng.uniform(0.2, 1.2, size=(4, 5)))
    w[1, [0, 2, 4]] = [1.0, -1.0, 1.0]
    w[3, [0, 2, 4]] = [-1.0, 1.0, 1.0]
    finding = has_real_2x3(w)
    assert finding.obstructed
    assert finding.row_pair == (1, 3)
    assert set(finding.columns) >= {0, 2, 4}
    assert not finding.on_transpose


def test_has_real_2x3_negative_and_shape_guard():
    rng = np.random.default_rng(4)
    w = np.exp(1j * rng.uniform(0.3, 1.0, size=(4, 4)))
    assert not has_real_2x3(w).obstructed
    with pytest.raises(ShapeMismatch):
        has_real_2x3(np.ones((1, 5)))
    with pytest.raises(ShapeMismatch):
        has_real_2x3(np.ones((4, 2)))


def test_dephased_obstruction_requires_chm():
    with pytest.raises(NotCHM):
        dephased_obstruction(np.eye(6))


def test_builtin_pair_is_obstructed_with_valid_witness():
    w = builtin_w()
    finding = dephased_obstruction(w)
    assert finding.obstructed
    assert len(finding.columns) >= 3
    assert len(finding.phases) == len(finding.columns)
    dephased = apply_witness(w, finding)
    r1, r2 = finding.row_pair
    for col in finding.columns:
        assert abs(dephased[r1, col].imag) < 1e-10
        assert abs(dephased[r2, col].imag) < 1e-10


def test_fourier6_is_obstructed_fourier5_is_not():
    assert dephased_obstruction(fourier(6)).obstructed
    assert not dephased_obstruction(fourier(5)).obstructed


def test_obstruction_survives_column_phases_and_permutations():
    rng = np.random.default_rng(9)
    w = builtin_w()
    w = w * np.exp(2j * np.pi * rng.uniform(size=6))[None, :]
    w = w[:, rng.permutation(6)][rng.permutation(6), :]
    assert is_chm(w)
    finding = dephased_obstruction(w)
    assert finding.obstructed
    dephased = apply_witness(w, finding)
    r1, r2 = finding.row_pair
    for col in finding.columns:
        assert abs(dephased[r1, col].imag) < 1e-10
        assert abs(dephased[r2, col].imag) < 1e-10


def test_obstruction_found_on_transpose_when_rows_are_scrambled():
    # row phases hide every direct pattern of the Fourier matrix, but the
    # transpose turns them into harmless column phases
    w = np.diag(np.exp(1j * np.array([0.0, 0.0, 0.0, 0.4, 1.1, 2.0]))) @ fourier(6)
    assert is_chm(w)
    finding = dephased_obstruction(w)
    assert finding.obstructed
    assert finding.on_transpose
    dephased = apply_witness(w, finding)
    r1, r2 = finding.row_pair
    for col in finding.columns:
        assert abs(dephased[r1, col].imag) < 1e-10
        assert abs(dephased[r2, col].imag) < 1e-10


def test_theorem2_reproduce_certifies_the_whole_chain():
    rep = theorem2_reproduce()
    assert rep.passed
    assert rep.worst_violation < 1e-10
    assert rep.offenders == ()
    assert rep.checks_run == 8


def test_theorem2_reproduce_with_tight_config():
    rep = theorem2_reproduce(VerifyConfig(tol_abs=1e-12, tol_overlap=1e-12))
    assert rep.passed


def test_corrector_makes_lower_left_block_real():
    w = builtin_w() @ catalog("Q")
    s6 = np.sqrt(6.0)
    target = np.array([[-1 / s6, -1 / s6, 1 / s6], [1 / s6, 1 / s6, 1 / s6]])
    assert np.max(np.abs(w[4:6, 0:3] - target)) < 1e-10
