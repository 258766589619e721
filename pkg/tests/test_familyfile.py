import json

import numpy as np
import pytest

from museb import (
    FamilySet,
    FileFormatError,
    catalog,
    family_set_from_dict,
    family_set_to_dict,
    load_family_set,
    load_matrix,
    mub_prime,
    mumeb_qubit,
    save_family_set,
    save_matrix,
)


def r_set():
    return FamilySet((catalog("R1"), catalog("R2")))


@pytest.mark.parametrize("fs_builder", [r_set, lambda: mub_prime(5), mumeb_qubit])
def test_round_trip_is_exact(tmp_path, fs_builder):
    fs = fs_builder()
    path = tmp_path / "set.json"
    save_family_set(fs, path)
    back = load_family_set(path)
    assert back.witness_count == fs.witness_count
    assert (back.d, back.dprime, back.k) == (fs.d, fs.dprime, fs.k)
    for orig, loaded in zip(fs, back):
        assert loaded.label == orig.label
        assert np.array_equal(loaded.elements, orig.elements)


def test_dict_round_trip_preserves_bits():
    fs = r_set()
    doc = json.loads(json.dumps(family_set_to_dict(fs)))
    back = family_set_from_dict(doc)
    assert np.array_equal(back[1].elements, fs[1].elements)


def test_version_tag_is_checked():
    doc = family_set_to_dict(r_set())
    doc["format_version"] = "museb-0"
    with pytest.raises(FileFormatError):
        family_set_from_dict(doc)
    del doc["format_version"]
    with pytest.raises(FileFormatError):
        family_set_from_dict(doc)


def test_malformed_documents_are_rejected():
    with pytest.raises(FileFormatError):
        family_set_from_dict([])
    doc = family_set_to_dict(r_set())
    doc.pop("bases")
    with pytest.raises(FileFormatError):
        family_set_from_dict(doc)

    doc = family_set_to_dict(r_set())
    doc["bases"][0] = doc["bases"][0][:3]  # drop half a basis
    with pytest.raises(FileFormatError):
        family_set_from_dict(doc)

    doc = family_set_to_dict(r_set())
    doc["labels"] = ["only-one"]
    with pytest.raises(FileFormatError):
        family_set_from_dict(doc)

    doc = family_set_to_dict(r_set())
    doc["bases"][0][0][0][0] = [1.0]  # not a [re, im] pair
    with pytest.raises(FileFormatError):
        family_set_from_dict(doc)


def test_truncated_json_file(tmp_path):
    path = tmp_path / "broken.json"
    save_family_set(r_set(), path)
    text = path.read_text()
    path.write_text(text[: len(text) // 2])
    with pytest.raises(FileFormatError):
        load_family_set(path)


def test_matrix_round_trip(tmp_path):
    mat = catalog("V")
    path = tmp_path / "v.json"
    save_matrix(mat, path)
    assert np.array_equal(load_matrix(path), mat)


def test_matrix_accepts_bare_nested_lists(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps([[[1.0, 0.0], [0.0, 1.0]], [[0.0, -1.0], [1.0, 0.0]]]))
    mat = load_matrix(path)
    assert np.array_equal(mat, np.array([[1.0, 1j], [-1j, 1.0]]))


def test_matrix_rejects_malformed(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"nope": 1}))
    with pytest.raises(FileFormatError):
        load_matrix(path)
    path.write_text(json.dumps([[1.0, 2.0]]))
    with pytest.raises(FileFormatError):
        load_matrix(path)
