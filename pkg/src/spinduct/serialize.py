"""Canonical serialization: a sorted text form for golden tests and a JSON
form for the CLI (weights as integer arrays, rationals as {num, den})."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional

from .charring import GroupElement, TorusElement, TwistClass
from .errors import SchemaViolation
from .rootdata import RationalWeight, RootDatum


def _format_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def rational_to_text(w: RationalWeight) -> str:
    return ",".join(_format_fraction(f) for f in w.fractions())


def torus_to_text(a: TorusElement) -> str:
    """Bit-exact canonical text: twist header then sorted 'coeff @ coords'
    lines with absolute weight coordinates."""
    lines = [f"twist {rational_to_text(a.shift)}"]
    for w, c in a.terms():
        lines.append(f"{c} @ {rational_to_text(w)}")
    return "\n".join(lines)


def group_to_text(a: GroupElement) -> str:
    kind = "G" if isinstance(a.scope, RootDatum) else "H"
    lines = [f"scope {kind}", f"twist {rational_to_text(a.shift)}"]
    for w, c in a.terms():
        lines.append(f"{c} @ {rational_to_text(w)}")
    return "\n".join(lines)


def rational_to_json(w: RationalWeight) -> Dict:
    return {"num": list(w.nums), "den": w.den}


def rational_from_json(obj, rank: int, pointer: str = "") -> RationalWeight:
    if isinstance(obj, list):
        obj = {"num": obj, "den": 1}
    if not isinstance(obj, dict) or "num" not in obj:
        raise SchemaViolation("expected {num: [...], den: n}", pointer)
    num = obj["num"]
    den = obj.get("den", 1)
    if (
        not isinstance(num, list)
        or len(num) != rank
        or not all(isinstance(x, int) for x in num)
    ):
        raise SchemaViolation(f"num must be {rank} integers", pointer + "/num")
    if not isinstance(den, int) or den < 1:
        raise SchemaViolation("den must be a positive integer", pointer + "/den")
    return RationalWeight(num, den)


def torus_to_json(a: TorusElement) -> Dict:
    return {
        "twist": rational_to_json(a.shift),
        "terms": [
            {"coeff": c, "weight": rational_to_json(w)} for w, c in a.terms()
        ],
    }


def torus_from_json(datum: RootDatum, obj, pointer: str = "") -> TorusElement:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise SchemaViolation("expected a torus element object", pointer)
    out: Optional[TorusElement] = None
    for i, term in enumerate(obj["terms"]):
        tp = f"{pointer}/terms/{i}"
        if not isinstance(term, dict) or "coeff" not in term or "weight" not in term:
            raise SchemaViolation("term needs coeff and weight", tp)
        if not isinstance(term["coeff"], int):
            raise SchemaViolation("coeff must be an integer", tp + "/coeff")
        w = rational_from_json(term["weight"], datum.rank, tp + "/weight")
        mono = TorusElement.monomial(datum, w, term["coeff"])
        out = mono if out is None else out + mono
    if out is None:
        twist = obj.get("twist")
        shift = (
            rational_from_json(twist, datum.rank, pointer + "/twist")
            if twist
            else RationalWeight.zero(datum.rank)
        )
        return TorusElement.zero(datum, TwistClass.of(shift))
    if "twist" in obj:
        declared = rational_from_json(obj["twist"], datum.rank, pointer + "/twist")
        if declared.residue_mod_one() != out.shift:
            raise SchemaViolation(
                "declared twist disagrees with term weights", pointer + "/twist"
            )
    return out


def group_to_json(a: GroupElement) -> Dict:
    return {
        "scope": "G" if isinstance(a.scope, RootDatum) else "H",
        "twist": rational_to_json(a.shift),
        "terms": [
            {"coeff": c, "weight": rational_to_json(w)} for w, c in a.terms()
        ],
    }
