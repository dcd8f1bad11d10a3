"""JSON files for series, pairings, twists, and expansions.

Coefficients travel as exact fraction text ("p/q" or "p", never a
decimal) and every writer emits terms in one fixed order, so equal
objects serialize to identical bytes.  Series payloads carry no rank:
enclosing documents supply it, and standalone loaders infer the
smallest alphabet that fits.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .derived_twists import TwistAutomorphism
from .fox_pairings import FoxPairing
from .series import TruncatedSeries
from .symplectic_tensor import SymplecticExpansion

_COEFF_RE = re.compile(r"-?[0-9]+(/[0-9]+)?\Z")


class FormatError(ValueError):
    """Malformed or internally inconsistent JSON payload."""


def _require(condition, message):
    if not condition:
        raise FormatError(message)


# -- series ------------------------------------------------------------


def series_to_dict(series) -> dict:
    terms = [
        {"word": list(word), "coeff": str(coeff)}
        for word, coeff in sorted(series.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    ]
    return {"degree_cap": series.cap, "terms": terms}


def series_from_dict(data, rank=None) -> TruncatedSeries:
    _require(isinstance(data, dict), "series payload must be an object")
    cap = data.get("degree_cap")
    _require(isinstance(cap, int) and cap >= 1, "degree_cap must be a positive integer")
    raw = data.get("terms")
    _require(isinstance(raw, list), "terms must be a list")
    terms = {}
    top = 0
    for item in raw:
        _require(isinstance(item, dict), "each term must be an object")
        word = item.get("word")
        _require(isinstance(word, list), "term word must be a list of letters")
        _require(all(isinstance(i, int) and i >= 1 for i in word),
                 "letters must be positive integers")
        _require(len(word) < cap, "term degree reaches the cap")
        coeff = item.get("coeff")
        _require(isinstance(coeff, str) and _COEFF_RE.match(coeff),
                 f"coefficient {coeff!r} is not exact fraction text")
        key = tuple(word)
        _require(key not in terms, "duplicate term word")
        terms[key] = Fraction(coeff)
        top = max(top, max(word, default=0))
    if rank is None:
        rank = max(top, 1)
    _require(top <= rank, "letters exceed the rank")
    return TruncatedSeries(rank, cap, terms)


# -- pairings ----------------------------------------------------------


def pairing_to_dict(pairing) -> dict:
    """Envelope degree_cap is the working degree, two below the entry cap."""
    _require(pairing.representation == "truncated",
             "only truncated pairings have a file format")
    _require(pairing.cap >= 3, "pairing cap too small to serialize")
    return {
        "rank": pairing.rank,
        "representation": "truncated",
        "degree_cap": pairing.cap - 2,
        "matrix": [[series_to_dict(entry) for entry in row] for row in pairing.matrix],
    }


def pairing_from_dict(data) -> FoxPairing:
    _require(isinstance(data, dict), "pairing payload must be an object")
    rank = data.get("rank")
    _require(isinstance(rank, int) and rank >= 1, "rank must be a positive integer")
    _require(data.get("representation") == "truncated",
             "representation must be 'truncated'")
    cap = data.get("degree_cap")
    _require(isinstance(cap, int) and cap >= 1, "degree_cap must be a positive integer")
    matrix = data.get("matrix")
    _require(isinstance(matrix, list) and len(matrix) == rank
             and all(isinstance(row, list) and len(row) == rank for row in matrix),
             "matrix must be rank x rank")
    entries = []
    for row in matrix:
        out_row = []
        for cell in row:
            entry = series_from_dict(cell, rank=rank)
            _require(entry.cap == cap + 2,
                     "entry cap must sit two degrees above degree_cap")
            out_row.append(entry)
        entries.append(out_row)
    return FoxPairing(entries)


# -- twists ------------------------------------------------------------


def twist_to_dict(automorphism) -> dict:
    return {
        "rank": automorphism.rank,
        "degree_cap": automorphism.cap,
        "images": [series_to_dict(image) for image in automorphism.images],
    }


def twist_from_dict(data) -> TwistAutomorphism:
    _require(isinstance(data, dict), "twist payload must be an object")
    rank = data.get("rank")
    _require(isinstance(rank, int) and rank >= 1, "rank must be a positive integer")
    cap = data.get("degree_cap")
    _require(isinstance(cap, int) and cap >= 1, "degree_cap must be a positive integer")
    raw = data.get("images")
    _require(isinstance(raw, list) and len(raw) == rank, "need one image per generator")
    images = [series_from_dict(item, rank=rank) for item in raw]
    for image in images:
        _require(image.cap == cap, "image cap must equal degree_cap")
    try:
        return TwistAutomorphism(rank, cap, images)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# -- symplectic expansions ----------------------------------------------


def expansion_to_dict(expansion) -> dict:
    return {
        "genus": expansion.genus,
        "degree_cap": expansion.cap,
        "images": [series_to_dict(image) for image in expansion.images],
    }


def expansion_from_dict(data) -> SymplecticExpansion:
    _require(isinstance(data, dict), "expansion payload must be an object")
    genus = data.get("genus")
    _require(isinstance(genus, int) and genus >= 1, "genus must be a positive integer")
    cap = data.get("degree_cap")
    _require(isinstance(cap, int) and cap >= 1, "degree_cap must be a positive integer")
    raw = data.get("images")
    _require(isinstance(raw, list) and len(raw) == 2 * genus,
             "need one image per basis direction")
    images = [series_from_dict(item, rank=2 * genus) for item in raw]
    for image in images:
        _require(image.cap == cap, "image cap must equal degree_cap")
    try:
        return SymplecticExpansion(genus, cap, images)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# -- files --------------------------------------------------------------


def dumps(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def write_json(path, data):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(data))


def read_json(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON in {path}: {exc}") from None
