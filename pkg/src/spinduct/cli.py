"""Command-line front end: problem parsing, dispatch, structured output.

Exit codes: 0 success, 1 domain error (machine-readable record on stdout),
2 usage error.  Identical (problem, seed) inputs produce byte-identical
output; timing is reported only behind --timing so determinism holds.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Dict, List, Optional

from . import kernels, rootdata
from .charring import (
    GroupElement,
    TorusElement,
    TwistClass,
    dimension,
    dualize,
    euler_class,
    irreducible_restriction,
    multiply,
)
from .errors import SchemaViolation, SpinductError
from .induction import (
    branch,
    bwb_irreducible,
    induce_classical,
    induce_twisted_spinc,
    lefschetz_check,
    make_problem,
    pairing_report,
)
from .multiplets import alternating_dimension_sum, multiplet
from .rootdata import RationalWeight, RootDatum, subgroup_character_lattice
from .serialize import (
    group_to_json,
    rational_from_json,
    rational_to_json,
    torus_from_json,
    torus_to_json,
)
from .spinc import classify, nu
from .verify import run_suite
from .zoo import parse_group_spec, steinberg_pairing_bases, subgroup_from_spec

COMMANDS = (
    "info",
    "whset",
    "induce",
    "branch",
    "bwb",
    "multiplet",
    "pairing",
    "spinc",
    "lefschetz",
    "verify",
)


def parse_problem(text: str) -> Dict:
    """Validate a JSON problem document; errors carry a JSON-pointer path."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"invalid JSON: {exc}", pointer="")
    if not isinstance(doc, dict):
        raise SchemaViolation("problem document must be an object", pointer="")
    known = {
        "command",
        "group",
        "subgroup",
        "twist",
        "input",
        "mu",
        "kind",
        "gamma",
        "tau",
        "signs",
        "suite",
        "trials",
        "seed",
        "max_weyl_order",
    }
    for key in doc:
        if key not in known:
            raise SchemaViolation(f"unknown field {key!r}", pointer=f"/{key}")
    if "command" in doc and doc["command"] not in COMMANDS:
        raise SchemaViolation("unknown command", pointer="/command")
    if "seed" in doc and not isinstance(doc["seed"], int):
        raise SchemaViolation("seed must be an integer", pointer="/seed")
    if "trials" in doc and (
        not isinstance(doc["trials"], int) or doc["trials"] < 1
    ):
        raise SchemaViolation("trials must be a positive integer", pointer="/trials")
    doc.setdefault("seed", 0)
    doc.setdefault("trials", 20)
    return doc


def _resolve_datum(doc: Dict) -> RootDatum:
    g = doc.get("group")
    if g is None:
        raise SchemaViolation("missing group", pointer="/group")
    if isinstance(g, str):
        return parse_group_spec(g)
    if isinstance(g, dict) and "label" in g:
        return rootdata.build_root_datum(g["label"], g.get("lattice", "weight"))
    raise SchemaViolation("group must be a string or {label, lattice}", pointer="/group")


def _resolve_subgroup(doc: Dict, datum: RootDatum):
    spec = doc.get("subgroup", "t")
    if isinstance(spec, list):
        for i, item in enumerate(spec):
            if isinstance(item, int):
                if not 0 <= item < len(datum.positive_roots):
                    raise SchemaViolation(
                        f"root index {item} out of range",
                        pointer=f"/subgroup/roots/{i}",
                    )
    return subgroup_from_spec(datum, spec)


def _resolve_input(doc: Dict, problem) -> TorusElement:
    spec = doc.get("input", "1")
    datum = problem.datum
    if isinstance(spec, dict):
        return torus_from_json(datum, spec, pointer="/input")
    if not isinstance(spec, str):
        raise SchemaViolation("input must be a string or element object", "/input")
    s = spec.strip()
    if s == "1":
        return TorusElement.unit(datum)
    if s == "e^rhoG":
        return TorusElement.monomial(datum, datum.rho)
    if s == "e^rhoM":
        return TorusElement.monomial(datum, problem.rho_m)
    if s == "spinor":
        return irreducible_restriction(problem.sub, problem.rho_m)
    if s == "euler":
        return euler_class(problem.sub)
    if s == "dual-euler":
        return dualize(euler_class(problem.sub))
    if s == "hodge":
        e = euler_class(problem.sub)
        return multiply(e, dualize(e))
    if s.startswith("e^[") and "]" in s:
        body, _, den = s[3:].partition("]")
        den = den.lstrip("/") or "1"
        try:
            nums = [int(x) for x in body.split(",")]
            d = int(den)
        except ValueError:
            raise SchemaViolation(f"cannot parse monomial {s!r}", "/input")
        if len(nums) != datum.rank:
            raise SchemaViolation(
                f"monomial needs {datum.rank} coordinates", "/input"
            )
        return TorusElement.monomial(datum, RationalWeight(nums, d))
    raise SchemaViolation(f"unknown input shortcut {s!r}", "/input")


def _diagnostics(problem) -> Dict:
    datum = problem.datum
    sub = problem.sub
    return {
        "group": datum.cartan_label,
        "lattice": datum.lattice_choice,
        "rank": datum.rank,
        "roots": len(datum.roots),
        "weyl_order": problem.weyl.order,
        "weyl_order_h": problem.weyl_h.order,
        "coset_count": len(problem.reps.reps),
        "rho_g": rational_to_json(datum.rho),
        "rho_h": rational_to_json(sub.rho_h),
        "rho_m": rational_to_json(sub.rho_m),
        "pi1_invariants": list(datum.fundamental_group_invariants()),
        "pi1_torsion_free": datum.pi1_torsion_free(),
        "levi": sub.is_levi,
        "xh_rank": subgroup_character_lattice(sub).rank,
        "kernel_backend": kernels.backend_name(),
    }


def _run_command(doc: Dict, command: str) -> Dict:
    if command == "verify":
        suite = doc.get("suite", "all")
        results = run_suite(suite, seed=doc["seed"])
        return {
            "suite": suite,
            "seed": doc["seed"],
            "passed": all(r.passed for r in results),
            "checks": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                    **({"counterexample": r.counterexample} if r.counterexample else {}),
                }
                for r in results
            ],
        }

    datum = _resolve_datum(doc)
    sub = _resolve_subgroup(doc, datum)
    sigma = None
    if "twist" in doc:
        sigma = TwistClass.of(rational_from_json(doc["twist"], datum.rank, "/twist"))
    problem = make_problem(datum, sub, sigma)

    if command == "info":
        return {"diagnostics": _diagnostics(problem)}

    if command == "whset":
        return {
            "diagnostics": _diagnostics(problem),
            "representatives": [
                {"matrix": [list(row) for row in e.matrix], "length": e.length, "det": e.det}
                for e in problem.reps.reps
            ],
        }

    if command == "induce":
        a = _resolve_input(doc, problem)
        kind = doc.get("kind", "twisted")
        if kind == "twisted":
            out = induce_twisted_spinc(problem, a)
        else:
            gamma = doc.get("gamma")
            out = induce_classical(problem, kind, a, gamma=tuple(gamma) if gamma else None)
        return {
            "result": group_to_json(out),
            "dimension": dimension(out),
            "diagnostics": _diagnostics(problem),
        }

    if command == "branch":
        spec = doc.get("input")
        if isinstance(spec, dict):
            ge = _group_from_doc(problem, spec)
        else:
            a = _resolve_input(doc, problem)
            mono = a.terms()
            ge = GroupElement.from_weights(datum, {w: c for w, c in mono})
        out = branch(problem, ge)
        return {
            "result": group_to_json(out),
            "dimension": dimension(out),
            "diagnostics": _diagnostics(problem),
        }

    if command == "bwb":
        if "mu" not in doc:
            raise SchemaViolation("bwb needs a weight mu", "/mu")
        mu = rational_from_json(doc["mu"], datum.rank, "/mu")
        out = bwb_irreducible(problem, mu)
        return {"result": group_to_json(out), "diagnostics": _diagnostics(problem)}

    if command == "multiplet":
        a = _resolve_input(doc, problem)
        m = multiplet(problem, a)
        return {
            "source": torus_to_json(m.source),
            "members": [group_to_json(g) for g in m.members],
            "signs": list(m.signs),
            "dimensions": [dimension(g) for g in m.members],
            "alternating_dimension_sum": alternating_dimension_sum(m),
            "diagnostics": _diagnostics(problem),
        }

    if command == "pairing":
        tau_name = doc.get("tau", "0")
        basis_a, basis_b, tau = steinberg_pairing_bases(problem, tau_name)
        rep = pairing_report(problem, tau, basis_a, basis_b)
        return {
            "tau": tau_name,
            "basis_a": [torus_to_json(x) for x in rep.basis_a],
            "basis_b": [torus_to_json(x) for x in rep.basis_b],
            "gram": [[group_to_json(g) for g in row] for row in rep.gram],
            "determinant": torus_to_json(rep.determinant_character),
            "is_unit": rep.is_unit,
            "diagnostics": _diagnostics(problem),
        }

    if command == "spinc":
        c = classify(problem)
        payload = {
            "rho_m": rational_to_json(c.rho_m),
            "is_spin": c.is_spin,
            "is_c_spinorial": c.is_c_spinorial,
            "gamma": list(c.gamma) if c.gamma is not None else None,
            "torsor_note": c.torsor_note,
        }
        if c.gamma is not None:
            payload["nu_gamma"] = rational_to_json(nu(problem, c.gamma))
        return {"result": payload, "diagnostics": _diagnostics(problem)}

    if command == "lefschetz":
        a = _resolve_input(doc, problem)
        euler_name = doc.get("kind", "twisted")
        e = euler_class(problem.sub)
        if euler_name == "hodge":
            e = multiply(e, dualize(e))
        rep = lefschetz_check(
            problem, e, a, trials=doc["trials"], seed=doc["seed"]
        )
        return {
            "trials": rep.trials,
            "max_rel_error": rep.max_rel_error,
            "passed": rep.max_rel_error <= 1e-8,
            "diagnostics": _diagnostics(problem),
        }

    raise SchemaViolation(f"unknown command {command!r}", "/command")


def _group_from_doc(problem, obj) -> GroupElement:
    scope = problem.datum if obj.get("scope", "G") == "G" else problem.sub
    weights: Dict[RationalWeight, int] = {}
    for i, term in enumerate(obj.get("terms", [])):
        w = rational_from_json(term.get("weight"), problem.datum.rank, f"/input/terms/{i}/weight")
        c = term.get("coeff")
        if not isinstance(c, int):
            raise SchemaViolation("coeff must be an integer", f"/input/terms/{i}/coeff")
        weights[w] = weights.get(w, 0) + c
    return GroupElement.from_weights(scope, weights)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spinduct",
        description="Exact twisted Spin^c induction calculus for compact Lie groups",
    )
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--group", help="series label, e.g. G2 or B3:spin")
    ap.add_argument("--subgroup", default="t", help="preset name, t, g, or JSON list")
    ap.add_argument("--input", help="element: 1, e^rhoG, e^rhoM, spinor, euler, dual-euler, hodge, e^[c,...]/d, or JSON")
    ap.add_argument("--mu", help="weight for bwb, as JSON or c1,c2,...[/den]")
    ap.add_argument("--kind", default=None, help="induce: twisted|holomorphic|spin|spinc; lefschetz: twisted|hodge")
    ap.add_argument("--gamma", help="character for spinc induction, c1,c2,...")
    ap.add_argument("--tau", default="0", choices=["0", "rhoM"], help="pairing twist")
    ap.add_argument("--twist", help="G-side twist shift, c1,c2,...[/den]")
    ap.add_argument("--suite", default="all", help="verify suite name")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--problem", help="path to a JSON problem document (- for stdin)")
    ap.add_argument("--max-weyl-order", type=int, default=None)
    ap.add_argument("--timing", action="store_true", help="include wall time (breaks byte determinism)")
    ap.add_argument("--pretty", action="store_true", help="indent JSON output")
    return ap


def _parse_weight_flag(text: str, rank: int, pointer: str) -> Dict:
    body, _, den = text.partition("/")
    try:
        nums = [int(x) for x in body.split(",")]
        d = int(den) if den else 1
    except ValueError:
        raise SchemaViolation(f"cannot parse weight {text!r}", pointer)
    if len(nums) != rank:
        raise SchemaViolation(f"weight needs {rank} coordinates", pointer)
    return {"num": nums, "den": d}


def _doc_from_args(args) -> Dict:
    if args.problem:
        text = (
            sys.stdin.read()
            if args.problem == "-"
            else open(args.problem, "r", encoding="utf-8").read()
        )
        doc = parse_problem(text)
    else:
        doc = {"seed": args.seed, "trials": args.trials}
    if args.group:
        doc["group"] = args.group
    if args.subgroup and "subgroup" not in doc:
        sg = args.subgroup
        if sg.startswith("["):
            doc["subgroup"] = json.loads(sg)
        else:
            doc["subgroup"] = sg
    if args.input:
        s = args.input
        doc["input"] = json.loads(s) if s.lstrip().startswith("{") else s
    if args.kind:
        doc["kind"] = args.kind
    if args.suite:
        doc.setdefault("suite", args.suite)
    if args.seed is not None:
        doc["seed"] = args.seed
    if args.trials is not None:
        doc["trials"] = args.trials
    doc["suite"] = args.suite
    if args.max_weyl_order:
        doc["max_weyl_order"] = args.max_weyl_order
    return doc


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    started = time.monotonic()
    try:
        doc = _doc_from_args(args)
        if args.max_weyl_order:
            rootdata.WEYL_ORDER_CAP = args.max_weyl_order
        # late flag parsing that needs the rank
        if args.mu or args.gamma or args.twist:
            datum = _resolve_datum(doc)
            if args.mu:
                doc["mu"] = (
                    json.loads(args.mu)
                    if args.mu.lstrip().startswith("{")
                    else _parse_weight_flag(args.mu, datum.rank, "/mu")
                )
            if args.gamma:
                doc["gamma"] = [int(x) for x in args.gamma.split(",")]
            if args.twist:
                doc["twist"] = _parse_weight_flag(args.twist, datum.rank, "/twist")
        payload = _run_command(doc, args.command)
    except SchemaViolation as exc:
        record = {
            "error": {"code": exc.code, "message": str(exc), "pointer": exc.pointer}
        }
        print(json.dumps(record, sort_keys=True), flush=True)
        return 1
    except SpinductError as exc:
        record = {"error": {"code": exc.code, "message": str(exc)}}
        print(json.dumps(record, sort_keys=True), flush=True)
        return 1
    out = {"command": args.command, "problem": _echo(doc), **payload}
    if args.timing:
        out["timing_seconds"] = round(time.monotonic() - started, 6)
    print(json.dumps(out, sort_keys=True, indent=2 if args.pretty else None), flush=True)
    return 0


def _echo(doc: Dict) -> Dict:
    return {k: v for k, v in sorted(doc.items())}


if __name__ == "__main__":
    sys.exit(main())
