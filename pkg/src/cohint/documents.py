"""Input documents: the JSON schema, parsing with located errors, and the
construction of validated lattice data."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InputError
from .lattice import (
    DEFAULT_GROUP_CAP,
    GroupData,
    RepresentationData,
    WeightMultiset,
)
from .matrices import IntMatrix


@dataclass(frozen=True)
class InputDocument:
    name: str
    rank: int
    weyl_generators: tuple[IntMatrix, ...]
    g_weights: WeightMultiset
    v_weights: WeightMultiset
    max_degree: int | None
    group_cap: int = DEFAULT_GROUP_CAP

    def group_data(self) -> GroupData:
        return GroupData(self.name, self.rank, self.weyl_generators, self.g_weights)

    def rep_data(self) -> RepresentationData:
        return RepresentationData(self.v_weights)

    def to_dict(self) -> dict:
        doc = {
            "name": self.name,
            "rank": self.rank,
            "weyl_generators": [[list(row) for row in m] for m in self.weyl_generators],
            "g_weights": [
                {"alpha": list(w), "multiplicity": m} for w, m in self.g_weights
            ],
            "v_weights": [
                {"alpha": list(w), "multiplicity": m} for w, m in self.v_weights
            ],
            "options": {"group_cap": self.group_cap},
        }
        if self.max_degree is not None:
            doc["options"]["max_degree"] = self.max_degree
        return doc


def _require(cond: bool, location: str, message: str) -> None:
    if not cond:
        raise InputError(f"{location}: {message}")


def _parse_weights(raw, location: str, rank: int) -> WeightMultiset:
    _require(isinstance(raw, list), location, "expected a list of weight entries")
    pairs = []
    for i, entry in enumerate(raw):
        loc = f"{location}[{i}]"
        _require(isinstance(entry, dict), loc, "expected an object")
        alpha = entry.get("alpha")
        _require(
            isinstance(alpha, list)
            and len(alpha) == rank
            and all(isinstance(c, int) for c in alpha),
            f"{loc}.alpha",
            f"expected a list of {rank} integers",
        )
        mult = entry.get("multiplicity", 1)
        _require(
            isinstance(mult, int) and mult >= 1,
            f"{loc}.multiplicity",
            "expected a positive integer",
        )
        pairs.append((tuple(alpha), mult))
    return WeightMultiset.from_pairs(pairs) if pairs else WeightMultiset(())


def document_from_dict(raw: dict) -> InputDocument:
    _require(isinstance(raw, dict), "document", "expected a JSON object")
    name = raw.get("name", "input")
    _require(isinstance(name, str), "name", "expected a string")
    rank = raw.get("rank")
    _require(isinstance(rank, int) and rank >= 1, "rank", "expected a positive integer")
    gens_raw = raw.get("weyl_generators", [])
    _require(isinstance(gens_raw, list), "weyl_generators", "expected a list of matrices")
    gens = []
    for k, g in enumerate(gens_raw):
        loc = f"weyl_generators[{k}]"
        _require(
            isinstance(g, list)
            and len(g) == rank
            and all(
                isinstance(row, list)
                and len(row) == rank
                and all(isinstance(x, int) for x in row)
                for row in g
            ),
            loc,
            f"expected a {rank}x{rank} integer matrix",
        )
        gens.append(tuple(tuple(row) for row in g))
    g_weights = _parse_weights(raw.get("g_weights", []), "g_weights", rank)
    v_weights = _parse_weights(raw.get("v_weights", []), "v_weights", rank)
    options = raw.get("options", {})
    _require(isinstance(options, dict), "options", "expected an object")
    max_degree = options.get("max_degree")
    _require(
        max_degree is None or (isinstance(max_degree, int) and max_degree >= 0),
        "options.max_degree",
        "expected a nonnegative integer",
    )
    group_cap = options.get("group_cap", DEFAULT_GROUP_CAP)
    _require(
        isinstance(group_cap, int) and group_cap >= 1,
        "options.group_cap",
        "expected a positive integer",
    )
    return InputDocument(
        name=name,
        rank=rank,
        weyl_generators=tuple(gens),
        g_weights=g_weights,
        v_weights=v_weights,
        max_degree=max_degree,
        group_cap=group_cap,
    )


def parse_input(text: str) -> InputDocument:
    """Parse and fully validate a JSON input document.

    Lattice invariants (generator invertibility, group finiteness within the
    cap, weight stability) are enforced here; weak symmetry is not, so that
    classification itself can be reported downstream.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    doc = document_from_dict(raw)
    group = doc.group_data()
    group.validate(doc.group_cap)
    doc.rep_data().validate(group)
    return doc
