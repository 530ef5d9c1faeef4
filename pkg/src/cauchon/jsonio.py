"""JSON encodings of the domain types. All indices are 1-based."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from cauchon.grid import CauchonDiagram, GridShape
from cauchon.minors import MinorFamily, MinorIndex
from cauchon.perms import Permutation


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def diagram_to_json(d: CauchonDiagram) -> dict:
    return {"m": d.shape.m, "p": d.shape.p, "black": [list(pos) for pos in d.black]}


def diagram_from_json(obj: dict) -> CauchonDiagram:
    try:
        shape = GridShape(int(obj["m"]), int(obj["p"]))
        black = [(int(i), int(a)) for i, a in obj["black"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed diagram JSON: {obj!r}") from exc
    return CauchonDiagram.from_black(shape, black)


def permutation_to_json(w: Permutation) -> dict:
    return {"n": w.n, "images": list(w.images)}


def permutation_from_json(obj) -> Permutation:
    if isinstance(obj, list):
        return Permutation(tuple(obj))
    try:
        images = tuple(int(x) for x in obj["images"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed permutation JSON: {obj!r}") from exc
    if "n" in obj and int(obj["n"]) != len(images):
        raise ValueError(f"permutation JSON has n = {obj['n']} but {len(images)} images")
    return Permutation(images)


def minor_to_json(ix: MinorIndex) -> dict:
    return {"rows": list(ix.rows), "cols": list(ix.cols)}


def minor_from_json(obj: dict) -> MinorIndex:
    return MinorIndex(tuple(obj["rows"]), tuple(obj["cols"]))


def family_to_json(f: MinorFamily) -> dict:
    return {"m": f.shape.m, "p": f.shape.p, "minors": [minor_to_json(ix) for ix in f.sorted()]}


def family_from_json(obj: dict) -> MinorFamily:
    return MinorFamily(GridShape(obj["m"], obj["p"]), frozenset(minor_from_json(x) for x in obj["minors"]))


def fraction_to_json(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fraction_from_json(s: str) -> Fraction:
    return Fraction(s)


def vanishing_report_to_json(report) -> dict:
    return {
        "diagram": diagram_to_json(report.diagram),
        "vanishing": family_to_json(report.vanishing),
        "trials": report.trials,
        "field": report.field,
        "seed": report.seed,
    }


def vanishing_report_from_json(obj: dict):
    from cauchon.restoration import VanishingReport

    return VanishingReport(
        diagram_from_json(obj["diagram"]),
        family_from_json(obj["vanishing"]),
        int(obj["trials"]),
        obj["field"],
        int(obj["seed"]),
    )


def witness_to_json(w) -> dict:
    return {
        "diagram": diagram_to_json(w.diagram),
        "matrix": [[fraction_to_json(Fraction(x)) for x in row] for row in w.matrix],
        "minor_signs": [
            {"rows": list(ix.rows), "cols": list(ix.cols), "sign": w.minor_signs[ix]}
            for ix in sorted(w.minor_signs)
        ],
    }


def witness_from_json(obj: dict):
    from cauchon.tnn import TnnWitness

    return TnnWitness(
        diagram_from_json(obj["diagram"]),
        tuple(tuple(fraction_from_json(x) for x in row) for row in obj["matrix"]),
        {MinorIndex(tuple(s["rows"]), tuple(s["cols"])): s["sign"] for s in obj["minor_signs"]},
    )
