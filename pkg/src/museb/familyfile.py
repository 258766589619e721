"""JSON serialization of family sets and plain matrices.

The on-disk format, tagged "museb-1", stores every complex entry as a
[real, imag] pair.  Python's float repr round-trips doubles exactly, so a
save/load cycle reproduces arrays bit for bit.
"""

from __future__ import annotations

import json
import os
from typing import Any

import numpy as np

from .errors import FileFormatError
from .verify import BasisFamily, FamilySet

__all__ = [
    "FORMAT_VERSION",
    "family_set_to_dict",
    "family_set_from_dict",
    "save_family_set",
    "load_family_set",
    "matrix_to_list",
    "matrix_from_list",
    "save_matrix",
    "load_matrix",
]

FORMAT_VERSION = "museb-1"


def matrix_to_list(mat: np.ndarray) -> list[list[list[float]]]:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(mat, complex)]


def matrix_from_list(data: Any) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"matrix entries must be [real, imag] pairs: {exc}") from exc
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise FileFormatError(
            f"matrix must be rows x cols x [real, imag], got shape {arr.shape}"
        )
    return arr[..., 0] + 1j * arr[..., 1]


def family_set_to_dict(fs: FamilySet) -> dict[str, Any]:
    if len(fs) == 0:
        raise FileFormatError("refusing to serialize an empty family set")
    return {
        "format_version": FORMAT_VERSION,
        "d": fs.d,
        "dprime": fs.dprime,
        "k": fs.k,
        "labels": [fam.label for fam in fs],
        "bases": [[matrix_to_list(fam[i]) for i in range(len(fam))] for fam in fs],
    }


def family_set_from_dict(doc: Any) -> FamilySet:
    if not isinstance(doc, dict):
        raise FileFormatError(f"expected a JSON object, got {type(doc).__name__}")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise FileFormatError(f"unsupported format_version {version!r}; expected {FORMAT_VERSION!r}")
    try:
        d = int(doc["d"])
        dprime = int(doc["dprime"])
        k = int(doc["k"])
        bases = doc["bases"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"missing or malformed field: {exc}") from exc
    if not isinstance(bases, list) or not bases:
        raise FileFormatError("bases must be a nonempty list")
    labels = doc.get("labels") or [""] * len(bases)
    if len(labels) != len(bases):
        raise FileFormatError("labels, when present, must align with bases")
    families = []
    for label, basis in zip(labels, bases):
        if not isinstance(basis, list) or not basis:
            raise FileFormatError("each basis must be a nonempty list of matrices")
        elements = np.stack([matrix_from_list(mat) for mat in basis])
        try:
            families.append(
                BasisFamily(d=d, dprime=dprime, k=k, elements=elements, label=str(label))
            )
        except Exception as exc:
            raise FileFormatError(f"stored basis is inconsistent: {exc}") from exc
    try:
        return FamilySet(tuple(families))
    except Exception as exc:
        raise FileFormatError(f"stored set is inconsistent: {exc}") from exc


def save_family_set(fs: FamilySet, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(family_set_to_dict(fs), fh)
        fh.write("\n")


def load_family_set(path: str | os.PathLike) -> FamilySet:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"not valid JSON: {exc}") from exc
    return family_set_from_dict(doc)


def save_matrix(mat: np.ndarray, path: str | os.PathLike) -> None:
    doc = {"format_version": FORMAT_VERSION, "matrix": matrix_to_list(mat)}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_matrix(path: str | os.PathLike) -> np.ndarray:
    """Read a matrix file; bare nested lists are accepted alongside the tagged form."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"not valid JSON: {exc}") from exc
    if isinstance(doc, dict):
        if "matrix" not in doc:
            raise FileFormatError("matrix file must carry a 'matrix' field")
        return matrix_from_list(doc["matrix"])
    return matrix_from_list(doc)
