"""Command-line front end.

Reads a JSON payload (``--input FILE`` or ``-`` for stdin), runs one command
for one algebra, and prints a JSON or LaTeX report.  Exit codes: 0 on success,
1 on domain errors, 2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import osp, sl2, weyl
from .descriptor import SocleDescriptor, enumerate_window, pole_patterns_of
from .errors import NonSplittingFactor, NotInGSigma, RankOneError, StripViolation, WindowTooSmall
from .exactfield import GR, FactoredRF
from .jsonio import (
    MalformedInput,
    factored_from_json,
    factored_to_json,
    gr_from_json,
    pf_from_json,
    pf_to_json,
)
from .latex import emit_latex
from .sampling import random_partial_fraction
from .skewlaurent import SIGMA_SL2, canonical_rep, in_G_sigma, witness_r

__all__ = ["main", "run", "build_parser"]

ALGEBRAS = ("sl2", "weyl", "osp-graded", "osp-ungraded")
COMMANDS = ("normalize", "basis", "act", "iso", "verify", "oracle-check", "fg")
WINDOW_COMMANDS = {"basis", "oracle-check"}


def _require(payload: dict, key: str):
    if key not in payload:
        raise MalformedInput(f"missing field {key!r}")
    return payload[key]


def _patterns_json(patterns) -> list[dict]:
    ordered = sorted(patterns, key=lambda p: (p[0].sort_key(), p[1]))
    return [{"root": str(t), "order": k} for t, k in ordered]


# -- parameter parsing ---------------------------------------------------------------

def _sl2_module(payload: dict) -> sl2.ModuleParamSl2:
    r1 = gr_from_json(_require(payload, "r1"))
    u = factored_from_json(_require(payload, "u"))
    return sl2.ModuleParamSl2.make(r1, u, canonicalize=payload.get("canonicalize", True))


def _weyl_module(payload: dict) -> weyl.ModuleParamWeyl:
    u = factored_from_json(_require(payload, "u"))
    return weyl.ModuleParamWeyl.from_u(u, canonicalize=payload.get("canonicalize", True))


def _osp_params(payload: dict) -> osp.OspParams:
    return osp.OspParams(factored_from_json(_require(payload, "u")), gr_from_json(_require(payload, "lambda")))


# -- per-command handlers ---------------------------------------------------------------

def _descriptor_block(D: SocleDescriptor, max_shift: int) -> dict:
    window = pole_patterns_of(enumerate_window(D, max_shift, 0))
    return {
        "descriptor": D.to_json(),
        "finite": D.all_rays_finite(),
        "window_patterns": _patterns_json(window),
    }


def _oracle_compare(found, expected, bases, max_shift: int, step) -> dict:
    inner_found = {p for p in found if abs(_offset(p[0], bases, step)) < max_shift}
    inner_expected = {p for p in expected if abs(_offset(p[0], bases, step)) < max_shift}
    return {
        "verdict": "MATCH" if inner_found == inner_expected else "MISMATCH",
        "full_window_match": set(found) == set(expected),
        "oracle_patterns": _patterns_json(found),
        "descriptor_patterns": _patterns_json(expected),
        "stabilizes_inside_window": all(abs(_offset(p[0], bases, step)) < max_shift for p in found),
    }


def _offset(t, bases, step) -> int:
    for s in bases:
        d = t - s
        if d.is_real() and (d.re / step).denominator == 1:
            return int(d.re / step)
    raise AssertionError(f"pattern root {t} off the parameter lattice")


def _handle_sl2(cmd: str, payload: dict, win: dict) -> dict:
    if cmd == "iso":
        r1 = gr_from_json(_require(payload, "r1"))
        base = sl2.make_params(r1)
        u = factored_from_json(_require(payload, "u"))
        v = factored_from_json(_require(payload, "v"))
        return _iso_result(u, v, base.omega, SIGMA_SL2)
    P = _sl2_module(payload)
    if cmd == "normalize":
        b = P.base
        return {
            "u": factored_to_json(P.u),
            "theta": str(b.theta),
            "r1": str(b.r1),
            "r2": str(b.r2),
            "omega": str(b.omega),
            "t": [str(b.t1), str(b.t2)],
            "n": [b.n1, b.n2],
        }
    if cmd == "basis":
        return _descriptor_block(sl2.socle_descriptor(P), win["max_shift"])
    if cmd == "fg":
        return {
            "finitely_generated": sl2.is_finitely_generated(P),
            "all_rays_finite": sl2.socle_descriptor(P).all_rays_finite(),
        }
    if cmd == "act":
        ops = {"e": lambda b: sl2.act_e(P, b), "f": lambda b: sl2.act_f(P, b), "h": sl2.act_h}
        return _act(ops, payload)
    if cmd == "verify":
        rng = random.Random(payload.get("seed", 0))
        roots = list(P.u.support()) + [GR(0), P.base.r1]
        ok = True
        for _ in range(payload.get("samples", 5)):
            b = random_partial_fraction(rng, roots)
            e, f, h = (lambda x: sl2.act_e(P, x)), (lambda x: sl2.act_f(P, x)), sl2.act_h
            ok &= h(e(b)) - e(h(b)) == e(b).scale(2)
            ok &= h(f(b)) - f(h(b)) == f(b).scale(-2)
            ok &= e(f(b)) - f(e(b)) == h(b)
            ok &= sl2.casimir_operator(P, b) == b.scale(P.base.theta)
        return {"ring_identities": sl2.casimir_identity_check(P.base), "operator_identities": bool(ok)}
    if cmd == "oracle-check":
        D = sl2.socle_descriptor(P)
        res = sl2.oracle_closure(P, win["max_shift"], win["max_degree"], win["rounds"])
        expected = pole_patterns_of(enumerate_window(D, win["max_shift"], 0))
        out = _oracle_compare(res.patterns, expected, [t for t, _ in P.m], win["max_shift"], 2)
        out["finitely_generated"] = sl2.is_finitely_generated(P)
        return out
    raise MalformedInput(f"unknown command {cmd!r}")


def _handle_weyl(cmd: str, payload: dict, win: dict) -> dict:
    if cmd == "iso":
        u = factored_from_json(_require(payload, "u"))
        v = factored_from_json(_require(payload, "v"))
        return _iso_result(u, v, weyl.OMEGA, SIGMA_SL2)
    P = _weyl_module(payload)
    if cmd == "normalize":
        return {"u": factored_to_json(P.u), "omega": "0", "generator": str(weyl.socle_generator(P))}
    if cmd == "basis":
        out = _descriptor_block(weyl.weyl_socle_descriptor(P), win["max_shift"])
        out["generator"] = str(weyl.socle_generator(P))
        return out
    if cmd == "fg":
        return {
            "finitely_generated": weyl.weyl_is_finitely_generated(P),
            "all_rays_finite": weyl.weyl_socle_descriptor(P).all_rays_finite(),
        }
    if cmd == "act":
        ops = {"a": lambda b: weyl.act_a(P, b), "b": lambda b: weyl.act_b(P, b), "h": lambda b: b.mul_linear(GR(0))}
        return _act(ops, payload)
    if cmd == "verify":
        rng = random.Random(payload.get("seed", 0))
        roots = list(P.u.support()) + [GR(0), GR(1)]
        ok = True
        for _ in range(payload.get("samples", 5)):
            v = random_partial_fraction(rng, roots)
            a, b = (lambda x: weyl.act_a(P, x)), (lambda x: weyl.act_b(P, x))
            ok &= a(b(v)) - b(a(v)) == v
            ok &= b(a(v)).scale(-2) == v.mul_linear(GR(0))
        return {"ring_identities": weyl.weyl_relation_check(), "operator_identities": bool(ok)}
    if cmd == "oracle-check":
        D = weyl.weyl_socle_descriptor(P)
        res = weyl.weyl_oracle_closure(P, win["max_shift"], win["max_degree"], win["rounds"])
        expected = pole_patterns_of(enumerate_window(D, win["max_shift"], 0))
        out = _oracle_compare(res.patterns, expected, [t for t, _ in P.m], win["max_shift"], 2)
        out["finitely_generated"] = weyl.weyl_is_finitely_generated(P)
        out["generator"] = str(weyl.socle_generator(P))
        return out
    raise MalformedInput(f"unknown command {cmd!r}")


def _handle_osp_graded(cmd: str, payload: dict, win: dict) -> dict:
    P = _osp_params(payload)
    if cmd == "normalize":
        C = P.canonical()
        return {"u": factored_to_json(C.u), "lambda": str(C.lam), "graded": True, "omega": "0"}
    if cmd == "iso":
        Q = _osp_params(_require(payload, "other"))
        return {"isomorphic": osp.graded_iso(P, Q)}
    if cmd == "act":
        ops = {
            "p": lambda v: osp.act_p(P, v),
            "q": lambda v: osp.act_q(P, v),
            "h": osp.act_h,
            "e": lambda v: osp.act_e(P, v),
            "f": lambda v: osp.act_f(P, v),
            "sigma": lambda v: osp.act_scasimir(P, v),
        }
        op = _require(payload, "op")
        if op not in ops:
            raise MalformedInput(f"unknown operator {op!r}; expected one of {sorted(ops)}")
        elem = _require(payload, "element")
        if not isinstance(elem, dict):
            raise MalformedInput("graded element must be an object with 'even' and 'odd'")
        v = osp.GradedElement(pf_from_json(elem.get("even", {})), pf_from_json(elem.get("odd", {})))
        w = ops[op](v)
        return {"op": op, "even": pf_to_json(w.even), "odd": pf_to_json(w.odd)}
    sig = osp.scasimir_action(P)
    cas = osp.casimir_scalars(P)
    if cmd == "verify":
        return {
            "superrelations": osp.verify_superrelations(P, payload.get("samples", 5), payload.get("seed", 0)),
            "scasimir": [str(s) for s in sig],
            "casimir": [str(c) for c in cas],
            "theta_quotient": osp.theta_quotient_check(),
        }
    out: dict = {"scasimir": [str(s) for s in sig], "casimir": [str(c) for c in cas]}
    for label, part in zip(("even", "odd"), osp.restrict_to_sl2(P)):
        M = part.module()
        block: dict = {"theta": str(part.theta), "u2": factored_to_json(M.u), "omega": str(M.base.omega)}
        if cmd == "basis":
            block.update(_descriptor_block(sl2.socle_descriptor(M), win["max_shift"]))
        elif cmd == "fg":
            block["finitely_generated"] = sl2.is_finitely_generated(M)
            block["all_rays_finite"] = sl2.socle_descriptor(M).all_rays_finite()
        elif cmd == "oracle-check":
            D = sl2.socle_descriptor(M)
            res = sl2.oracle_closure(M, win["max_shift"], win["max_degree"], win["rounds"])
            expected = pole_patterns_of(enumerate_window(D, win["max_shift"], 0))
            block.update(_oracle_compare(res.patterns, expected, [t for t, _ in M.m], win["max_shift"], 2))
        else:
            raise MalformedInput(f"unknown command {cmd!r}")
        out[label] = block
    if cmd == "oracle-check":
        both = out["even"]["verdict"] == out["odd"]["verdict"] == "MATCH"
        out["verdict"] = "MATCH" if both else "MISMATCH"
    return out


def _handle_osp_ungraded(cmd: str, payload: dict, win: dict) -> dict:
    if cmd in ("normalize", "basis", "fg", "oracle-check", "iso"):
        out = _handle_weyl(cmd, payload, win)
        if cmd == "normalize":
            out["scasimir"] = str(osp.ungraded_to_weyl(_weyl_module(payload)).scasimir_scalar())
        return out
    M = osp.ungraded_to_weyl(_weyl_module(payload))
    if cmd == "act":
        ops = {
            "p'": M.act_p_scaled,
            "q'": M.act_q_scaled,
            "h": M.act_h,
            "e": M.act_e,
            "f": M.act_f,
            "sigma": M.act_scasimir,
        }
        return _act(ops, payload)
    if cmd == "verify":
        return {"theta_quotient": osp.theta_quotient_check(), "scasimir": str(M.scasimir_scalar())}
    raise MalformedInput(f"unknown command {cmd!r}")


def _act(ops: dict, payload: dict) -> dict:
    op = _require(payload, "op")
    if op not in ops:
        raise MalformedInput(f"unknown operator {op!r}; expected one of {sorted(ops)}")
    b = pf_from_json(_require(payload, "element"))
    return {"op": op, "result": pf_to_json(ops[op](b))}


def _iso_result(u: FactoredRF, v: FactoredRF, omega, shift) -> dict:
    ratio = v / u
    out = {
        "isomorphic": in_G_sigma(ratio, shift),
        "canonical_u": factored_to_json(canonical_rep(u, omega, shift)),
        "canonical_v": factored_to_json(canonical_rep(v, omega, shift)),
    }
    if out["isomorphic"]:
        out["witness"] = factored_to_json(witness_r(ratio, shift))
    return out


HANDLERS = {
    "sl2": _handle_sl2,
    "weyl": _handle_weyl,
    "osp-graded": _handle_osp_graded,
    "osp-ungraded": _handle_osp_ungraded,
}


# -- entry points ---------------------------------------------------------------------

def run(algebra: str, command: str, payload: dict, max_shift: int = 8, max_degree: int = 4, rounds: int = 200) -> tuple[dict, int]:
    """Execute one request; returns ``(report, exit_code)``."""
    report = {"algebra": algebra, "command": command}
    try:
        if algebra not in HANDLERS:
            raise MalformedInput(f"unknown algebra {algebra!r}")
        if command not in COMMANDS:
            raise MalformedInput(f"unknown command {command!r}")
        if not isinstance(payload, dict):
            raise MalformedInput("payload must be a JSON object")
        if command in WINDOW_COMMANDS and min(max_shift, max_degree, rounds) < 1:
            raise MalformedInput("window parameters must be positive")
        win = {"max_shift": max_shift, "max_degree": max_degree, "rounds": rounds}
        if command in WINDOW_COMMANDS:
            report["window"] = {"maxShift": max_shift, "maxDegree": max_degree, "rounds": rounds}
        report["result"] = HANDLERS[algebra](command, payload, win)
        return report, 0
    except (MalformedInput, StripViolation) as exc:
        report["error"] = {"type": type(exc).__name__, "operation": command, "message": str(exc)}
        return report, 2
    except (NonSplittingFactor, NotInGSigma, WindowTooSmall, RankOneError) as exc:
        report["error"] = {"type": type(exc).__name__, "operation": command, "message": str(exc)}
        return report, 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rankone", description="Simple rank-one modules over sl2, A1 and osp(1|2).")
    ap.add_argument("--algebra", required=True, choices=ALGEBRAS)
    ap.add_argument("--command", required=True, choices=COMMANDS)
    ap.add_argument("--input", default="-", help="JSON payload file, or '-' for stdin")
    ap.add_argument("--max-shift", type=int, default=8)
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--rounds", type=int, default=200)
    ap.add_argument("--format", choices=("json", "latex"), default="json")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
        payload = json.loads(text) if text.strip() else {}
    except (OSError, json.JSONDecodeError) as exc:
        report = {
            "algebra": args.algebra,
            "command": args.command,
            "error": {"type": "MalformedInput", "operation": "read-input", "message": str(exc)},
        }
        print(json.dumps(report, indent=2))
        return 2
    report, code = run(args.algebra, args.command, payload, args.max_shift, args.max_degree, args.rounds)
    if args.format == "latex" and code == 0:
        sys.stdout.write(emit_latex(report))
    else:
        print(json.dumps(report, indent=2, ensure_ascii=False))
    return code


if __name__ == "__main__":
    sys.exit(main())
