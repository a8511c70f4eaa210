"""Canonical textual, LaTeX, and JSON-friendly renderings.

All output here is byte-deterministic for a given value: terms are sorted by
(t-exponent, y-exponent), coefficients are printed in full, and nothing
depends on environment or time.
"""

from __future__ import annotations

from .exactpoly import BivariatePoly, ClosedForm, LaurentPoly, RatFunc, YSeries


def format_int_poly(coeffs: list[int], var: str = "x") -> str:
    """Render an integer coefficient list ascending: ``1 + 2*x + 1*x^2``."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            mag = str(abs(c))
        elif i == 1:
            mag = f"{abs(c)}*{var}"
        else:
            mag = f"{abs(c)}*{var}^{i}"
        if not parts:
            parts.append(mag if c > 0 else "-" + mag)
        else:
            parts.append(("+ " if c > 0 else "- ") + mag)
    return " ".join(parts) if parts else "0"


def _compact_poly(p: LaurentPoly) -> str:
    """Tight rendering with unit coefficients omitted: ``2-t``, ``3-2*t``."""
    parts = []
    for e, v in p.items():
        if e == 0:
            mag = str(abs(v))
        else:
            var = "t" if e == 1 else f"t^{e}"
            mag = var if abs(v) == 1 else f"{abs(v)}*{var}"
        if not parts:
            parts.append(mag if v > 0 else "-" + mag)
        else:
            parts.append(("+" if v > 0 else "-") + mag)
    return "".join(parts) if parts else "0"


def format_laurent_factored(p: LaurentPoly) -> str:
    """Factor out the monomial content: ``t*(2-t)``, ``t^2*(3-2*t)``."""
    if p.is_zero():
        return "0"
    val = p.valuation()
    if val == 0:
        return _compact_poly(p)
    body = p.shifted(-val)
    t_str = "t" if val == 1 else f"t^{val}"
    items = body.items()
    if len(items) == 1 and items[0] == (0, 1):
        return t_str
    return f"{t_str}*({_compact_poly(body)})"


def format_ratfunc(rf: RatFunc) -> str:
    """Canonical string ``<poly> / (1-t)^e``, e.g. ``t*(2-t) / (1-t)^3``."""
    num = format_laurent_factored(rf.num)
    if rf.e == 0:
        return num
    return f"{num} / (1-t)^{rf.e}"


def format_series(series: YSeries) -> list[str]:
    return [format_ratfunc(c) for c in series.coeffs]


def format_closed_form(cf: ClosedForm) -> str:
    den = " ".join(f"({lab})" if m == 1 else f"({lab})^{m}" for lab, m in cf.factor_list())
    num = str(cf.numerator)
    if not den:
        return num
    return f"[{num}] / [{den}]"


def closed_form_to_dict(cf: ClosedForm) -> dict:
    """JSON-friendly encoding of a closed form; terms sorted canonically."""
    return {
        "numerator": {
            "terms": [[v, a, b] for (a, b), v in cf.numerator.items()],
            "string": str(cf.numerator),
        },
        "d": cf.d,
        "factors": {
            "one_minus_t": cf.one_minus_t,
            "one_minus_td_y": cf.one_minus_td_y,
            "one_minus_td1_y": cf.one_minus_td1_y,
            "t_pow": cf.t_pow,
            "y_pow": cf.y_pow,
        },
        "string": format_closed_form(cf),
    }


# ---------------------------------------------------------------------------
# LaTeX
# ---------------------------------------------------------------------------


def _latex_power(var: str, exp: int) -> str:
    if exp == 1:
        return var
    return f"{var}^{{{exp}}}"


def latex_laurent(p: LaurentPoly) -> str:
    parts = []
    for e, v in p.items():
        if e == 0:
            mag = str(abs(v))
        else:
            var = _latex_power("t", e)
            mag = var if abs(v) == 1 else f"{abs(v)}{var}"
        if not parts:
            parts.append(mag if v > 0 else "-" + mag)
        else:
            parts.append(("+" if v > 0 else "-") + mag)
    return "".join(parts) if parts else "0"


def latex_bivariate(p: BivariatePoly) -> str:
    parts = []
    for (a, b), v in p.items():
        factors = []
        if a != 0:
            factors.append(_latex_power("t", a))
        if b != 0:
            factors.append(_latex_power("y", b))
        body = "".join(factors)
        mag = (str(abs(v)) if abs(v) != 1 or not body else "") + body
        if not mag:
            mag = str(abs(v))
        if not parts:
            parts.append(mag if v > 0 else "-" + mag)
        else:
            parts.append(("+" if v > 0 else "-") + mag)
    return "".join(parts) if parts else "0"


def latex_ratfunc(rf: RatFunc) -> str:
    if rf.e == 0:
        return latex_laurent(rf.num)
    return f"\\frac{{{latex_laurent(rf.num)}}}{{(1-t)^{{{rf.e}}}}}"


def latex_closed_form(cf: ClosedForm) -> str:
    den_parts = []
    for label, mult in cf.factor_list():
        if label in ("1-t", "1-y", "t", "y"):
            base_tex = label
        elif label == "1-t*y":
            base_tex = "1-ty"
        else:
            # labels like 1-t^k*y
            k = int(label.split("^")[1].split("*")[0])
            base_tex = f"1-{_latex_power('t', k)}y"
        den_parts.append(f"({base_tex})" + (f"^{{{mult}}}" if mult > 1 else ""))
    num_tex = latex_bivariate(cf.numerator)
    if not den_parts:
        return num_tex
    return f"\\frac{{{num_tex}}}{{{''.join(den_parts)}}}"


def latex_int_poly(coeffs: list[int], var: str = "x") -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            mag = str(abs(c))
        else:
            v = _latex_power(var, i)
            mag = v if abs(c) == 1 else f"{abs(c)}{v}"
        if not parts:
            parts.append(mag if c > 0 else "-" + mag)
        else:
            parts.append(("+" if c > 0 else "-") + mag)
    return "".join(parts) if parts else "0"
