"""JSON schemas for exact values, plus a small safe parser for rational expressions in ``h``.

Schemas::

    GaussianRational  "a/b" or "a/b+c/d*i"
    Polynomial        ["c0", "c1", ...]            (ascending degree)
    FactoredRF        {"c": ..., "factors": [{"root": ..., "exp": m}, ...]}
    PartialFraction   {"poly": [...], "poles": [{"root": ..., "order": k, "coeff": ...}, ...]}

Wherever a rational function is expected, a string such as ``"(h-3)^3/(h-1)"``
is accepted too.
"""
from __future__ import annotations

import ast
from fractions import Fraction

from .exactfield import (
    GR,
    I,
    FactoredRF,
    GaussianRational,
    PartialFraction,
    Polynomial,
    RatFun,
    expand_partial_fractions,
    factor_ratfun,
)

__all__ = [
    "MalformedInput",
    "gr_to_json",
    "gr_from_json",
    "poly_to_json",
    "poly_from_json",
    "factored_to_json",
    "factored_from_json",
    "pf_to_json",
    "pf_from_json",
    "parse_ratfun",
]


class MalformedInput(ValueError):
    """Input does not match the expected schema."""


def gr_to_json(z: GaussianRational) -> str:
    return str(z)


def gr_from_json(obj) -> GaussianRational:
    if isinstance(obj, bool) or isinstance(obj, float):
        raise MalformedInput(f"expected an exact number, got {obj!r}")
    if isinstance(obj, int):
        return GR(obj)
    if isinstance(obj, str):
        try:
            return GaussianRational.parse(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInput(f"bad Gaussian rational {obj!r}") from exc
    raise MalformedInput(f"expected a Gaussian rational, got {obj!r}")


def poly_to_json(p: Polynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def poly_from_json(obj) -> Polynomial:
    if not isinstance(obj, list):
        raise MalformedInput("polynomial must be a coefficient list")
    return Polynomial([gr_from_json(c) for c in obj])


def factored_to_json(u: FactoredRF) -> dict:
    return {"c": str(u.c), "factors": [{"root": str(t), "exp": m} for t, m in u.factors]}


def factored_from_json(obj) -> FactoredRF:
    if isinstance(obj, str):
        f = parse_ratfun(obj)
        if f.is_zero():
            raise MalformedInput("rational function must be nonzero")
        return factor_ratfun(f)
    if not isinstance(obj, dict) or "factors" not in obj:
        raise MalformedInput("factored form needs 'c' and 'factors'")
    c = gr_from_json(obj.get("c", 1))
    if c.is_zero():
        raise MalformedInput("scalar c must be nonzero")
    acc: dict = {}
    for item in obj["factors"]:
        try:
            t, m = gr_from_json(item["root"]), item["exp"]
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad factor entry {item!r}") from exc
        if not isinstance(m, int) or isinstance(m, bool):
            raise MalformedInput(f"exponent must be an integer, got {m!r}")
        acc[t] = acc.get(t, 0) + m
    return FactoredRF(c, acc)


def pf_to_json(b: PartialFraction) -> dict:
    return {
        "poly": poly_to_json(b.poly),
        "poles": [
            {"root": str(t), "order": k, "coeff": str(c)} for (t, k), c in b.items() if not c.is_zero()
        ],
    }


def pf_from_json(obj) -> PartialFraction:
    if isinstance(obj, str):
        return expand_partial_fractions(parse_ratfun(obj))
    if not isinstance(obj, dict):
        raise MalformedInput("partial fraction must be an object or an expression string")
    out = PartialFraction.from_polynomial(poly_from_json(obj.get("poly", [])))
    for item in obj.get("poles", []):
        try:
            t, k, c = gr_from_json(item["root"]), item["order"], gr_from_json(item["coeff"])
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad pole entry {item!r}") from exc
        if not isinstance(k, int) or k < 1:
            raise MalformedInput(f"pole order must be a positive integer, got {k!r}")
        out = out + PartialFraction.pole(t, k, c)
    return out


# -- expression parser -------------------------------------------------------------

_H = RatFun(Polynomial((0, 1)))


def _eval(node) -> RatFun:
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return RatFun(Polynomial.constant(node.value))
    if isinstance(node, ast.Name):
        if node.id == "h":
            return _H
        if node.id in ("i", "I"):
            return RatFun(Polynomial.constant(I))
        raise MalformedInput(f"unknown symbol {node.id!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _eval(node.operand)
        return -val if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = node.right
            sign = 1
            if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                exp, sign = exp.operand, -1
            if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                raise MalformedInput("exponents must be integer literals")
            base = _eval(node.left)
            if base.is_zero() and sign < 0:
                raise MalformedInput("division by zero")
            return base ** (sign * exp.value)
        left, right = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if right.is_zero():
                raise MalformedInput("division by zero")
            return left / right
    raise MalformedInput(f"unsupported syntax in expression: {ast.dump(node)[:60]}")


def parse_ratfun(text: str) -> RatFun:
    """Parse ``+ - * / ^ **``, parentheses, integers, ``h`` and ``i`` into a rational function."""
    if not isinstance(text, str) or not text.strip():
        raise MalformedInput("empty expression")
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise MalformedInput(f"cannot parse {text!r}") from exc
    return _eval(tree)


def fraction_to_json(x: Fraction) -> str:
    return str(x)
