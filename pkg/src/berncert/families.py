"""JSON family files and the bundled regression corpus.

A family file looks like::

    {
      "name": "kpoly_t+1_t2+1",
      "description": "...",
      "N": 2,
      "g0": "0",
      "terms": [{"f": "t+1", "g": "1/(t+1)"}, {"f": "t^2+1", "g": "-1/(t^2+1)"}]
    }

Constant-index terms are not allowed: fold ``g * B_c`` into ``g0``.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any, Union

from .checker import CongruenceFamily, InvalidFamily, Term
from .expr import format_expr, format_poly, parse_expr


class FamilyFileError(ValueError):
    pass


def family_from_dict(data: dict[str, Any]) -> CongruenceFamily:
    if not isinstance(data, dict):
        raise FamilyFileError("family file must hold a JSON object")
    missing = {"N", "g0", "terms"} - data.keys()
    if missing:
        raise FamilyFileError(f"missing keys: {', '.join(sorted(missing))}")
    N = data["N"]
    if not isinstance(N, int) or isinstance(N, bool):
        raise FamilyFileError("N must be an integer")
    try:
        g0 = parse_expr(str(data["g0"]))
    except ValueError as exc:
        raise FamilyFileError(f"g0: {exc}") from exc
    terms = []
    for i, raw in enumerate(data["terms"], start=1):
        if not isinstance(raw, dict) or {"f", "g"} - raw.keys():
            raise FamilyFileError(f"term {i} needs 'f' and 'g'")
        try:
            f = parse_expr(str(raw["f"]))
            g = parse_expr(str(raw["g"]))
        except ValueError as exc:
            raise FamilyFileError(f"term {i}: {exc}") from exc
        if not f.is_polynomial:
            raise FamilyFileError(f"term {i}: f must be a polynomial")
        poly = f.as_polynomial()
        if poly.degree < 1:
            raise FamilyFileError(
                f"term {i}: f = {raw['f']} is constant; fold g*B_{raw['f']} into g0 instead"
            )
        terms.append(Term(poly, g))
    try:
        return CongruenceFamily(
            N, g0, tuple(terms), str(data.get("name", "")), str(data.get("description", ""))
        )
    except InvalidFamily as exc:
        raise FamilyFileError(str(exc)) from exc


def family_to_dict(family: CongruenceFamily) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if family.name:
        out["name"] = family.name
    if family.description:
        out["description"] = family.description
    out["N"] = family.N
    out["g0"] = format_expr(family.g0)
    out["terms"] = [{"f": format_poly(t.f), "g": format_expr(t.g)} for t in family.terms]
    return out


def load_family(path: Union[str, Path]) -> CongruenceFamily:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FamilyFileError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFileError(f"{path}: invalid JSON: {exc}") from exc
    family = family_from_dict(data)
    if not family.name:
        family = CongruenceFamily(family.N, family.g0, family.terms, Path(path).stem, family.description)
    return family


def corpus_names() -> list[str]:
    root = resources.files("berncert") / "corpus"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def corpus_path(name: str) -> Path:
    return Path(str(resources.files("berncert") / "corpus" / f"{name}.json"))


def load_corpus(name: str) -> CongruenceFamily:
    return load_family(corpus_path(name))
