"""JSON encoding of Hecke elements and fusion results.

Output is UTF-8, keys sorted, newline-terminated, so that encoding a decoded
document reproduces it byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .exact_arith import RationalFunctionQ, format_poly, parse_poly
from .fusion import FusionResult, FusionSpec
from .hecke import RATQ, HeckeElement, ScalarRing, numeric_ring
from .tableaux import StandardTableau

__all__ = [
    "element_to_json", "element_from_json", "result_to_json", "result_from_json",
    "dumps", "loads_result", "fraction_str", "parse_fraction",
]


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _coeff_to_json(c: Any) -> dict:
    if isinstance(c, RationalFunctionQ):
        return {"num": format_poly(c.znum), "den": format_poly(c.zden)}
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def _zcoeffs(text: str) -> tuple[int, ...]:
    coeffs = parse_poly(text).coeffs
    if any(isinstance(v, Fraction) for v in coeffs):
        raise ValueError(f"expected integer coefficients in {text!r}")
    return tuple(coeffs)


def _coeff_from_json(d: dict, ring: ScalarRing) -> Any:
    if ring is RATQ:
        return RationalFunctionQ.from_zpolys(_zcoeffs(d["num"]), _zcoeffs(d["den"]))
    return Fraction(int(d["num"]), int(d["den"]))


def element_to_json(x: HeckeElement) -> dict:
    return {
        "n": x.n,
        "terms": [{"perm": list(s), "coeff": _coeff_to_json(c)} for s, c in x.terms()],
    }


def element_from_json(d: dict, ring: ScalarRing = RATQ) -> HeckeElement:
    n = int(d["n"])
    terms = {tuple(t["perm"]): _coeff_from_json(t["coeff"], ring) for t in d["terms"]}
    return HeckeElement(n, terms, ring)


def result_to_json(r: FusionResult) -> dict:
    out = element_to_json(r.element)
    out.update({
        "shape": list(r.spec.tableau.shape),
        "tableau": r.spec.tableau.to_lists(),
        "variant": r.spec.variant,
        "kind": r.kind,
        "mode": r.mode,
        "q0": None if r.q0 is None else fraction_str(r.q0),
        "direction": None if r.spec.direction is None else list(r.spec.direction),
    })
    return out


def result_from_json(d: dict) -> FusionResult:
    q0 = None if d.get("q0") is None else parse_fraction(d["q0"])
    ring = RATQ if d["mode"] == "symbolic" else numeric_ring(q0)
    T = StandardTableau.from_rows(d["tableau"])
    if list(T.shape) != list(d["shape"]):
        raise ValueError("shape does not match tableau")
    spec = FusionSpec(T, d["variant"], d.get("direction"))
    return FusionResult(element_from_json(d, ring), spec, d["kind"], d["mode"], q0)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def loads_result(text: str) -> FusionResult:
    return result_from_json(json.loads(text))
