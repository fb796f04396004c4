"""LaTeX rendering of CLI reports."""
from __future__ import annotations

from fractions import Fraction

from .descriptor import PoleRay, SocleDescriptor
from .exactfield import GaussianRational

__all__ = ["emit_latex", "descriptor_latex", "linear_factor_latex"]


def _num(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\tfrac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def gaussian_latex(z: GaussianRational) -> str:
    if z.im == 0:
        return _num(z.re)
    im = "i" if abs(z.im) == 1 else f"{_num(abs(z.im))}i"
    if z.re == 0:
        return ("-" if z.im < 0 else "") + im
    return f"{_num(z.re)}{'-' if z.im < 0 else '+'}{im}"


def linear_factor_latex(t: GaussianRational, index: str | None = None, step: int = 0) -> str:
    """``h - t``, or ``h - t - step*index`` when ``index`` is given."""
    parts = ["h"]
    if t.im != 0:
        parts.append(f"-({gaussian_latex(t)})")
    elif t.re != 0:
        parts.append(f"{'-' if t.re > 0 else '+'}{_num(abs(t.re))}")
    if index is not None and step:
        coef = "" if abs(step) == 1 else str(abs(step))
        parts.append(f"{'-' if step > 0 else '+'}{coef}{index}")
    return "".join(parts)


def _fraction(denom: str, k) -> str:
    power = "" if k == 1 else f"^{{{k}}}"
    base = denom if k == 1 else f"({denom})"
    return f"\\frac{{1}}{{{base}{power}}}"


def _ray_terms(ray: PoleRay) -> list[str]:
    terms = []
    steps = list(ray.bounds)
    finite_steps = steps if ray.is_finite() else steps[:-1]
    for n, (i0, k) in enumerate(finite_steps):
        i1 = steps[n + 1][0] if n + 1 < len(steps) else i0 + 1
        for i in range(i0, i1):
            for kk in range(1, k + 1):
                terms.append(_fraction(linear_factor_latex(ray.pole(i)), kk))
    if not ray.is_finite():
        i0 = steps[-1][0]
        denom = linear_factor_latex(ray.base, "i", ray.direction)
        kmax = ray.tail_bound
        korder = "" if kmax == 1 else f", 1 \\le k \\le {kmax}"
        terms.append(f"{_fraction(denom, 'k' if kmax > 1 else 1)} \\ (i \\ge {i0}{korder})")
    return terms


def descriptor_latex(D: SocleDescriptor) -> str:
    terms = []
    for ray in D.nonempty_rays():
        terms.extend(_ray_terms(ray))
    head = "\\mathbb{C}[h]"
    if not terms:
        return head
    return f"{head} \\oplus \\langle " + ",\\ ".join(terms) + " \\rangle"


def emit_latex(report: dict) -> str:
    """Deterministic LaTeX for a report produced by the CLI."""
    lines = [f"% {report.get('algebra', '')} {report.get('command', '')}".rstrip()]
    result = report.get("result", {})
    for label in ("descriptor", "even", "odd"):
        block = result.get(label)
        if isinstance(block, dict) and "rays" in block:
            D = SocleDescriptor.from_json(block)
            name = {"descriptor": "S", "even": "S_{\\bar 0}", "odd": "S_{\\bar 1}"}[label]
            lines.append(f"{name} = {descriptor_latex(D)}")
        elif isinstance(block, dict) and isinstance(block.get("descriptor"), dict):
            D = SocleDescriptor.from_json(block["descriptor"])
            name = {"even": "S_{\\bar 0}", "odd": "S_{\\bar 1}"}.get(label, "S")
            lines.append(f"{name} = {descriptor_latex(D)}")
    for key, value in result.items():
        if isinstance(value, (dict, list)):
            continue
        lines.append(f"\\text{{{key.replace('_', ' ')}}}: {value}")
    return "\n".join(lines) + "\n"
