"""JSON lattice and endomorphism documents.

Lattice: ``{"n": int, "covers": [[lo, hi], ...], "labels": [...]}``
(labels optional). Endomorphism: ``{"lattice": <lattice doc or path>,
"map": [t0, ..., t(n-1)]}``, optionally with a ``"matrix"`` entry recording
where the map came from.
"""

from __future__ import annotations

import json
from pathlib import Path

from latlin.endo import JoinEndo, _check_total
from latlin.errors import InputError
from latlin.lattice import FiniteLattice, build_from_covers


def lattice_to_doc(L: FiniteLattice, labels: bool = True) -> dict:
    doc = {"n": L.size, "covers": [list(c) for c in L.covers]}
    if labels and any(lab != str(i) for i, lab in enumerate(L.labels)):
        doc["labels"] = list(L.labels)
    return doc


def lattice_from_doc(doc) -> FiniteLattice:
    if not isinstance(doc, dict) or "n" not in doc or "covers" not in doc:
        raise InputError("lattice document needs 'n' and 'covers'")
    try:
        n = int(doc["n"])
        covers = [(int(a), int(b)) for a, b in doc["covers"]]
    except (TypeError, ValueError) as exc:
        raise InputError(f"malformed lattice document: {exc}") from exc
    return build_from_covers(n, covers, doc.get("labels"))


def endo_to_doc(lam: JoinEndo, **extra) -> dict:
    doc = {"lattice": lattice_to_doc(lam.lattice), "map": list(lam.table)}
    doc.update(extra)
    return doc


def read_json(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_document(path):
    """Parse a file holding either a lattice or an endomorphism document.

    Returns ``(lattice, table_or_None)``; the table is unvalidated.
    """
    doc = read_json(path)
    if isinstance(doc, dict) and "map" in doc:
        inner = doc.get("lattice")
        if isinstance(inner, str):
            inner_path = Path(inner)
            if not inner_path.is_absolute():
                inner_path = Path(path).parent / inner_path
            inner = read_json(inner_path)
        L = lattice_from_doc(inner)
        return L, _check_total(L, doc["map"])
    return lattice_from_doc(doc), None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
