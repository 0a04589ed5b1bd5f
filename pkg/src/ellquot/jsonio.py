"""Exact JSON and ASCII encodings for every public value type.

Rationals serialize as two decimal integer strings, polynomials as
coefficient lists lowest degree first, and every encoder has a matching
decoder so payloads round-trip exactly.  No floating point appears anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .curves import CurvePoint, WeierstrassCurve
from .fields import QQ
from .funcfield import RatFunc
from .isogeny import FiberPolynomial, IsogenyData
from .poly import UniPoly


def rational_to_json(q) -> list:
    q = Fraction(q)
    return [str(q.numerator), str(q.denominator)]


def rational_from_json(pair) -> Fraction:
    return Fraction(int(pair[0]), int(pair[1]))


def poly_to_json(f: UniPoly) -> dict:
    if f.field != QQ:
        raise ValueError("JSON polynomial encoding covers rational coefficients")
    return {"var": f.var, "coeffs": [rational_to_json(c) for c in f.coeffs]}


def poly_from_json(obj) -> UniPoly:
    return UniPoly(QQ, [rational_from_json(c) for c in obj["coeffs"]], obj["var"])


def poly_to_ascii(f: UniPoly) -> str:
    """Canonical ASCII form: (num/den)*var^k terms, descending degree."""
    if f.is_zero:
        return "(0/1)*%s^0" % f.var
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeff(k)
        if c == 0:
            continue
        c = Fraction(c)
        parts.append(f"({c.numerator}/{c.denominator})*{f.var}^{k}")
    return " + ".join(parts)


_TERM = re.compile(
    r"^(?P<coef>[+-]?\(?\s*-?\d+\s*(?:/\s*-?\d+)?\s*\)?)?"
    r"\s*\*?\s*"
    r"(?:(?P<var>[A-Za-z]\w*)\s*(?:\^\s*(?P<pow>\d+))?)?$"
)


def poly_from_ascii(text: str, var: str | None = None) -> UniPoly:
    """Parse the canonical ASCII polynomial form (and tolerant variants).

    Accepts terms like '(3/2)*x^2', '-x', '5', 'x^3 - 2*x + 1/3'.
    """
    cleaned = text.replace("-", "+-").replace("++", "+").replace("(+-", "(-")
    cleaned = cleaned.replace("^+-", "^-").replace("/+-", "/-")
    terms = [t.strip() for t in cleaned.split("+") if t.strip()]
    coeffs: dict[int, Fraction] = {}
    seen_var = var
    for term in terms:
        term = term.strip()
        if term.startswith("-") and len(term) > 1 and term[1].isalpha():
            term = "-1*" + term[1:]
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse polynomial term {term!r}")
        coef_text = m.group("coef")
        var_name = m.group("var")
        power = m.group("pow")
        if coef_text is None and var_name is None:
            raise ValueError(f"cannot parse polynomial term {term!r}")
        if coef_text in (None, "", "+", "-"):
            coef = Fraction(-1 if coef_text == "-" else 1)
        else:
            coef = Fraction(coef_text.replace("(", "").replace(")", "").replace(" ", ""))
        if var_name is None:
            k = 0
        else:
            if seen_var is None:
                seen_var = var_name
            elif var_name != seen_var:
                raise ValueError(f"mixed variables {seen_var!r} and {var_name!r}")
            k = int(power) if power else 1
        coeffs[k] = coeffs.get(k, Fraction(0)) + coef
    n = max(coeffs) if coeffs else 0
    return UniPoly(QQ, [coeffs.get(k, Fraction(0)) for k in range(n + 1)], seen_var or "x")


def _field_elem_to_json(value):
    if isinstance(value, Fraction):
        return rational_to_json(value)
    if isinstance(value, RatFunc):
        return {
            "num": poly_to_json(value.num),
            "den": poly_to_json(value.den),
        }
    raise ValueError(f"cannot encode {value!r}")


def curve_to_json(curve: WeierstrassCurve) -> dict:
    a1, a2, a3, a4, a6 = curve.a_invariants()
    return {
        "a1": _field_elem_to_json(a1),
        "a2": _field_elem_to_json(a2),
        "a3": _field_elem_to_json(a3),
        "a4": _field_elem_to_json(a4),
        "a6": _field_elem_to_json(a6),
    }


def curve_from_json(obj) -> WeierstrassCurve:
    vals = [rational_from_json(obj[k]) for k in ("a1", "a2", "a3", "a4", "a6")]
    return WeierstrassCurve(QQ, *vals)


def point_to_json(P: CurvePoint) -> dict:
    if P.inf:
        return {"inf": True}
    return {"inf": False, "x": _field_elem_to_json(P.x), "y": _field_elem_to_json(P.y)}


def point_from_json(obj) -> CurvePoint:
    if obj.get("inf"):
        return CurvePoint.infinity()
    return CurvePoint.affine(rational_from_json(obj["x"]), rational_from_json(obj["y"]))


def _sym_poly_to_json(f: UniPoly):
    """Polynomial over Q or over Q(c); the latter coefficient-wise."""
    if f.field == QQ:
        return poly_to_json(f)
    return {
        "var": f.var,
        "coeffs": [_field_elem_to_json(c) for c in f.coeffs],
    }


def isogeny_to_json(isog: IsogenyData) -> dict:
    return {
        "degree": isog.degree,
        "domain": curve_to_json(isog.domain),
        "codomain": curve_to_json(isog.codomain),
        "kernel_x": [_field_elem_to_json(x) for x in isog.kernel_x],
        "phi_x_num": _sym_poly_to_json(isog.phi_x_num),
        "phi_x_den": _sym_poly_to_json(isog.phi_x_den),
    }


def fiber_to_json(fiber: FiberPolynomial) -> dict:
    return {
        "poly": poly_to_json(fiber.poly),
        "base_point_x": rational_to_json(fiber.base_point_x),
    }


def certificate_to_json(cert) -> dict:
    out = {
        "l": cert.l,
        "params": {k: rational_to_json(v) for k, v in cert.params.items()},
        "on_curve": cert.on_curve,
        "infinite_order": cert.infinite_order,
        "nontrivial": cert.nontrivial,
        "valid": cert.valid,
        "excluded_reason": cert.excluded_reason,
    }
    out["curve_F"] = curve_to_json(cert.curve_F) if cert.curve_F is not None else None
    out["point"] = point_to_json(cert.point) if cert.point is not None else None
    out["b_point"] = (
        [rational_to_json(cert.b_point[0]), rational_to_json(cert.b_point[1])]
        if cert.b_point is not None
        else None
    )
    out["fiber"] = fiber_to_json(cert.fiber) if cert.fiber is not None else None
    out["witness"] = point_to_json(cert.witness) if cert.witness is not None else None
    return out


def galois_report_to_json(report) -> dict:
    return {
        "degree": report.degree,
        "irreducible": report.irreducible,
        "disc": rational_to_json(report.disc),
        "disc_is_square": report.disc_is_square,
        "group_label": report.group_label,
        "certainty": report.certainty,
        "primes_used": report.primes_used,
        "pattern_histogram": {
            ",".join(str(d) for d in pattern): count
            for pattern, count in sorted(report.pattern_histogram.items())
        },
    }


def family_to_json(fam) -> dict:
    return {
        "family": fam.family,
        "parameters": {k: rational_to_json(v) for k, v in fam.parameters.items()},
        "poly": poly_to_json(fam.poly),
        "ascii": poly_to_ascii(fam.poly),
    }
