"""Command-line front end: verification suites, fuzzing, tightness, evaluation.

Verbs
-----
verify FAMILY     run the unmutated fuzz suite; exit 0 only with zero violations
fuzz FAMILY       run a configured fuzz campaign, optionally with a mutation
tightness FAMILY  report improvement margins of the refined bounds
eval scalar|operator|hs   evaluate one explicit instance
check REPORT.json re-run a report's embedded config and compare verdicts

Reports are JSON (schema version 1, with every effective default echoed in
the config header) or CSV with the fixed columns
family, theorem, branch, n, v, h, lhs, rhs, slack, seed, trial.
The slack column is relative to the comparison scale; for operator rows the
lhs/rhs columns carry traces of the two matrix sides.

Exit codes: 0 success with zero violations, 1 violation found (the report is
still emitted), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import enum
import json
import sys
import time

import numpy as np

from . import __version__
from .errors import MatrixFileError, SandwichError, ShapeError
from .fuzz import MUTATIONS, FuzzConfig, fuzz_run, tightness_report
from .hs import hs_chain, hs_gap_bounds, hs_refined_lower, hs_refined_upper, kappa_min, make_hs_instance
from .operators import evaluate_all, make_instance
from .scalar import ScalarPair, all_bounds, exponents, young_means
from .spd import SpdMatrix

SCHEMA = 1
CSV_COLUMNS = ("family", "theorem", "branch", "n", "v", "h",
               "lhs", "rhs", "slack", "seed", "trial")
_VERIFY_TRIALS = {"scalar": 100_000, "operator": 200, "hs": 200}


# ---------------------------------------------------------------------------
# Matrix file format: first line n, then n rows of n whitespace-separated
# decimals.  Trivially producible from any tool.
# ---------------------------------------------------------------------------

def read_matrix_file(path: str) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise MatrixFileError(path, 0, f"cannot read file: {exc}") from exc
    rows: list[list[float]] = []
    n = None
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        if n is None:
            try:
                n = int(text)
            except ValueError as exc:
                raise MatrixFileError(path, lineno,
                                      f"expected the dimension n, got {text!r}") from exc
            if n < 1:
                raise MatrixFileError(path, lineno, f"dimension must be >= 1, got {n}")
            continue
        if len(rows) == n:
            raise MatrixFileError(path, lineno, f"more than {n} data rows")
        try:
            values = [float(tok) for tok in text.split()]
        except ValueError as exc:
            raise MatrixFileError(path, lineno, f"non-numeric entry in {text!r}") from exc
        if len(values) != n:
            raise MatrixFileError(path, lineno,
                                  f"expected {n} entries, got {len(values)}")
        rows.append(values)
    if n is None:
        raise MatrixFileError(path, 1, "empty file")
    if len(rows) != n:
        raise MatrixFileError(path, len(lines), f"expected {n} data rows, got {len(rows)}")
    return np.array(rows, dtype=float)


# ---------------------------------------------------------------------------
# Serialization helpers
# ---------------------------------------------------------------------------

def _jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return _jsonable(dataclasses.asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if isinstance(obj, enum.Enum):
        return obj.value
    return obj


def _envelope(kind: str, config: dict, report: dict) -> dict:
    return {"schema": SCHEMA, "tool": "meanbounds", "version": __version__,
            "kind": kind, "config": _jsonable(config), "report": _jsonable(report)}


def _config_from_dict(d: dict) -> FuzzConfig:
    d = dict(d)
    for key in ("dims", "spectrum_range", "v_grid"):
        if d.get(key) is not None:
            d[key] = tuple(d[key])
    return FuzzConfig(**d)


def _csv_rows(payload: dict) -> list[dict]:
    kind = payload["kind"]
    if kind == "fuzz":
        rows = list(payload["report"]["samples"])
        worst = payload["report"]["worst"]
        if worst is not None:
            rows.append(worst)
        return rows
    if kind == "fuzz-suite":
        out = []
        for sub in payload["report"]["families"].values():
            out.extend(_csv_rows({"kind": "fuzz", "report": sub["report"]}))
        return out
    if kind == "tightness":
        return [imp["max_instance"] for imp in payload["report"]["improvements"].values()]
    if kind == "eval":
        return list(payload["report"].get("rows", []))
    raise ValueError(f"no CSV view for report kind {kind!r}")


def _emit(payload: dict, out: str | None, fmt: str | None) -> None:
    if out is None:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return
    if fmt is None:
        fmt = "csv" if out.endswith(".csv") else "json"
    if fmt == "json":
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, extrasaction="ignore")
            writer.writeheader()
            for row in _csv_rows(payload):
                writer.writerow(row)


# ---------------------------------------------------------------------------
# Payload builders (shared by the verbs and by check mode)
# ---------------------------------------------------------------------------

def _fuzz_payload(cfg: FuzzConfig) -> dict:
    report = fuzz_run(cfg)
    return _envelope("fuzz", dataclasses.asdict(cfg), dataclasses.asdict(report))


def _suite_payload(families: list[str], overrides: dict) -> dict:
    sub = {}
    configs = {}
    for family in families:
        opts = dict(overrides)
        opts.setdefault("trials", _VERIFY_TRIALS[family])
        cfg = FuzzConfig(family=family, **opts)
        payload = _fuzz_payload(cfg)
        sub[family] = {"config": payload["config"], "report": payload["report"]}
        configs[family] = payload["config"]
    return _envelope("fuzz-suite", {"families": configs}, {"families": sub})


def _tightness_payload(cfg: FuzzConfig) -> dict:
    report = tightness_report(cfg)
    return _envelope("tightness", dataclasses.asdict(cfg), dataclasses.asdict(report))


def _fmt(x: float) -> str:
    return f"{x:.5f}"


def _eval_scalar_payload(a: float, b: float, v: float, tol: float) -> dict:
    config = {"family": "scalar", "inputs": {"a": a, "b": b, "v": v}, "tol_rel": tol}
    if v in (0.0, 1.0):
        side = a if v == 0.0 else b
        report = {"trivial": True,
                  "message": (f"v={v:g} is an endpoint: the weighted mean equals "
                              f"{'a' if v == 0.0 else 'b'} = {side:g} and every bound "
                              "is trivially an equality"),
                  "rows": [], "all_hold": True}
        return _envelope("eval", config, report)
    pair = ScalarPair(a, b)
    weight = exponents(v)
    means = young_means(pair, v)
    bounds = all_bounds(pair, v)
    rows = []
    detail = {}
    for name, bs in bounds.items():
        rows.append({"family": "scalar", "theorem": name, "branch": bs.branch, "n": 1,
                     "v": v, "h": pair.h, "lhs": bs.lhs, "rhs": bs.rhs,
                     "slack": bs.rel_slack, "seed": "", "trial": ""})
        detail[name] = {"kind": bs.kind, "branch": bs.branch, "lhs": bs.lhs,
                        "terms": bs.terms, "rhs": bs.rhs, "slack": bs.slack,
                        "rel_slack": bs.rel_slack, "holds": bs.holds(tol)}
    report = {"trivial": False,
              "exponents": dataclasses.asdict(weight),
              "means": dataclasses.asdict(means),
              "bounds": detail, "rows": rows,
              "all_hold": all(d["holds"] for d in detail.values())}
    return _envelope("eval", config, report)


def _print_eval_scalar(payload: dict) -> None:
    rep = payload["report"]
    print("family: scalar")
    if rep["trivial"]:
        print(rep["message"])
        return
    inp = payload["config"]["inputs"]
    w = rep["exponents"]
    print(f"a={_fmt(inp['a'])} b={_fmt(inp['b'])} v={_fmt(inp['v'])} "
          f"h={_fmt(inp['b'] / inp['a'])} branch={'low' if inp['v'] <= 0.5 else 'high'}")
    print(f"exponents: r={_fmt(w['r'])} R={_fmt(w['big_r'])} r1={_fmt(w['r1'])} "
          f"rhat1={_fmt(w['rhat1'])}")
    m = rep["means"]
    print(f"means: arithmetic={_fmt(m['arith'])} geometric={_fmt(m['geo'])} "
          f"heinz={_fmt(m['heinz'])}")
    print("bounds:")
    for name, d in rep["bounds"].items():
        print(f"  {name}: lhs={_fmt(d['lhs'])} rhs={_fmt(d['rhs'])} "
              f"slack={_fmt(d['slack'])} holds={'yes' if d['holds'] else 'NO'}")
        terms = " ".join(f"{k}={_fmt(t)}" for k, t in d["terms"].items())
        print(f"    terms: {terms}")
    print(f"result: {'all bounds hold' if rep['all_hold'] else 'VIOLATION FOUND'}")


def _eval_operator_payload(a_mat, b_mat, v: float, tol: float,
                           constants=None) -> dict:
    config = {"family": "operator",
              "inputs": {"A": np.asarray(a_mat).tolist(), "B": np.asarray(b_mat).tolist(),
                         "v": v, "sandwich": list(constants) if constants else None},
              "tol_rel": tol}
    if v in (0.0, 1.0):
        report = {"trivial": True,
                  "message": (f"v={v:g} is an endpoint: the weighted operator mean "
                              f"equals {'A' if v == 0.0 else 'B'} and every bound is "
                              "trivially an equality"),
                  "rows": [], "all_hold": True}
        return _envelope("eval", config, report)
    A = SpdMatrix(a_mat)
    B = SpdMatrix(b_mat)
    inst = make_instance(A, B, v, constants=constants)
    ev = evaluate_all(inst, tol)
    s = inst.sandwich
    branch = "low" if v <= 0.5 else "high"
    rows = []
    checks = {}
    for i, verdict in enumerate(ev.chain.verdicts):
        label = f"chain:{ev.chain.labels[i]}->{ev.chain.labels[i + 1]}"
        rel = verdict.min_eig / (verdict.tol_used / tol)
        rows.append({"family": "operator", "theorem": label, "branch": branch,
                     "n": A.dim, "v": v, "h": s.h, "lhs": ev.chain.term_values[i],
                     "rhs": ev.chain.term_values[i + 1], "slack": rel,
                     "seed": "", "trial": ""})
        checks[label] = {"min_eig": verdict.min_eig, "tol_used": verdict.tol_used,
                         "holds": verdict.holds}
    for name, bound in (("op_heinz_lower", ev.heinz_lower),
                        ("op_heinz_upper", ev.heinz_upper)):
        verdict = bound.verdict
        rel = verdict.min_eig / (verdict.tol_used / tol)
        rows.append({"family": "operator", "theorem": name, "branch": branch,
                     "n": A.dim, "v": v, "h": s.h,
                     "lhs": float(np.trace(bound.lhs)), "rhs": float(np.trace(bound.rhs)),
                     "slack": rel, "seed": "", "trial": ""})
        checks[name] = {"min_eig": verdict.min_eig, "tol_used": verdict.tol_used,
                        "holds": verdict.holds}
    report = {"trivial": False,
              "sandwich": {"m_prime": s.m_prime, "m": s.m, "M": s.M,
                           "M_prime": s.M_prime, "h": s.h, "h_prime": s.h_prime,
                           "orientation": s.orientation.value},
              "kappa": inst.kappa,
              "exponents": dataclasses.asdict(inst.weight),
              "checks": checks, "rows": rows,
              "all_hold": all(c["holds"] for c in checks.values())}
    return _envelope("eval", config, report)


def _print_eval_matrix(payload: dict) -> None:
    rep = payload["report"]
    family = payload["config"]["family"]
    print(f"family: {family}")
    if rep["trivial"]:
        print(rep["message"])
        return
    v = payload["config"]["inputs"]["v"]
    print(f"v={_fmt(v)} branch={'low' if v <= 0.5 else 'high'}")
    if family == "operator":
        s = rep["sandwich"]
        print(f"sandwich: m'={s['m_prime']:.6g} m={s['m']:.6g} M={s['M']:.6g} "
              f"M'={s['M_prime']:.6g} h={s['h']:.6g} h'={s['h_prime']:.6g} "
              f"orientation={s['orientation']}")
        print(f"kappa: {rep['kappa']:.6f}")
    else:
        print(f"kappa_min: {rep['kappa_min']:.6f}")
    print("checks:")
    for name, c in rep["checks"].items():
        if "min_eig" in c:
            print(f"  {name}: min_eig={c['min_eig']:.6g} tol={c['tol_used']:.3g} "
                  f"holds={'yes' if c['holds'] else 'NO'}")
        else:
            print(f"  {name}: lhs={_fmt(c['lhs'])} rhs={_fmt(c['rhs'])} "
                  f"slack={_fmt(c['slack'])} holds={'yes' if c['holds'] else 'NO'}")
    print(f"result: {'all bounds hold' if rep['all_hold'] else 'VIOLATION FOUND'}")


def _eval_hs_payload(a_mat, b_mat, x_mat, v: float, tol: float) -> dict:
    config = {"family": "hs",
              "inputs": {"A": np.asarray(a_mat).tolist(), "B": np.asarray(b_mat).tolist(),
                         "X": np.asarray(x_mat).tolist(), "v": v},
              "tol_rel": tol}
    if v in (0.0, 1.0):
        report = {"trivial": True,
                  "message": f"v={v:g} is an endpoint: both sides coincide with the "
                             "plain product norm and every bound is an equality",
                  "rows": [], "all_hold": True}
        return _envelope("eval", config, report)
    A = SpdMatrix(a_mat)
    B = SpdMatrix(b_mat)
    inst = make_hs_instance(A, B, x_mat, v)
    lower = hs_refined_lower(inst, tol_rel=tol)
    upper = hs_refined_upper(inst, tol_rel=tol)
    gaps = hs_gap_bounds(inst, tol_rel=tol)
    chain = hs_chain(inst, tol_rel=tol)
    branch = "low" if v <= 0.5 else "high"
    rows = []
    checks = {}
    for name, rep_ in (("hs_lower", lower), ("hs_upper", upper),
                       ("hs_gap_lower", gaps["lower"]), ("hs_gap_upper", gaps["upper"])):
        rel = rep_.slack / (rep_.tol_used / tol)
        rows.append({"family": "hs", "theorem": name, "branch": branch, "n": A.dim,
                     "v": v, "h": float("nan"), "lhs": rep_.lhs_sq, "rhs": rep_.rhs_sq,
                     "slack": rel, "seed": "", "trial": ""})
        checks[name] = {"lhs": rep_.lhs_sq, "rhs": rep_.rhs_sq, "slack": rep_.slack,
                        "lhs_terms": rep_.lhs_terms, "rhs_terms": rep_.rhs_terms,
                        "holds": rep_.holds}
    for i, verdict in enumerate(chain.verdicts):
        label = f"chain:{chain.labels[i]}->{chain.labels[i + 1]}"
        rel = verdict.min_eig / (verdict.tol_used / tol)
        rows.append({"family": "hs", "theorem": label, "branch": branch, "n": A.dim,
                     "v": v, "h": float("nan"), "lhs": chain.term_values[i],
                     "rhs": chain.term_values[i + 1], "slack": rel,
                     "seed": "", "trial": ""})
        checks[label] = {"min_eig": verdict.min_eig, "tol_used": verdict.tol_used,
                         "holds": verdict.holds}
    report = {"trivial": False, "kappa_min": kappa_min(A, B),
              "checks": checks, "rows": rows,
              "all_hold": all(c["holds"] for c in checks.values())}
    return _envelope("eval", config, report)


def _recompute(payload: dict) -> dict:
    kind = payload["kind"]
    if kind == "fuzz":
        return _fuzz_payload(_config_from_dict(payload["config"]))
    if kind == "fuzz-suite":
        out = {"families": {}}
        configs = {"families": {}}
        for family, sub in payload["report"]["families"].items():
            p = _fuzz_payload(_config_from_dict(sub["config"]))
            out["families"][family] = {"config": p["config"], "report": p["report"]}
            configs["families"][family] = p["config"]
        return _envelope("fuzz-suite", configs, out)
    if kind == "tightness":
        return _tightness_payload(_config_from_dict(payload["config"]))
    if kind == "eval":
        cfg = payload["config"]
        inputs = cfg["inputs"]
        if cfg["family"] == "scalar":
            return _eval_scalar_payload(inputs["a"], inputs["b"], inputs["v"],
                                        cfg["tol_rel"])
        if cfg["family"] == "operator":
            constants = inputs.get("sandwich")
            return _eval_operator_payload(inputs["A"], inputs["B"], inputs["v"],
                                          cfg["tol_rel"],
                                          tuple(constants) if constants else None)
        return _eval_hs_payload(inputs["A"], inputs["B"], inputs["X"], inputs["v"],
                                cfg["tol_rel"])
    raise ValueError(f"cannot re-check report kind {kind!r}")


def _payload_passed(payload: dict) -> bool:
    kind = payload["kind"]
    rep = payload["report"]
    if kind == "fuzz":
        return rep["violations"] == 0 and rep["dominance_violations"] == 0
    if kind == "fuzz-suite":
        return all(sub["report"]["violations"] == 0
                   and sub["report"]["dominance_violations"] == 0
                   for sub in rep["families"].values())
    if kind == "tightness":
        return all(imp.get("negative", 0) == 0 for imp in rep["improvements"].values())
    if kind == "eval":
        return bool(rep["all_hold"])
    return False


# ---------------------------------------------------------------------------
# Argument parsing and dispatch
# ---------------------------------------------------------------------------

def _add_fuzz_options(p: argparse.ArgumentParser, with_mutation: bool) -> None:
    p.add_argument("--trials", type=int, default=None, help="number of trials")
    p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    p.add_argument("--dims", type=int, nargs=2, metavar=("LO", "HI"), default=None,
                   help="matrix dimension range (default 2 8)")
    p.add_argument("--spectrum", type=float, nargs=2, metavar=("LO", "HI"), default=None,
                   help="eigenvalue/input range (family default otherwise)")
    p.add_argument("--gap", type=float, default=None,
                   help="sandwich gap for the operator family (default 0.1)")
    p.add_argument("--v-grid", type=str, default=None,
                   help="comma-separated fixed weights (default 0.25,0.5,0.75)")
    p.add_argument("--v-random", type=int, default=None,
                   help="random weights per trial (default 1)")
    p.add_argument("--tol", type=float, default=None,
                   help="relative tolerance (family default otherwise)")
    p.add_argument("--sample-cap", type=int, default=None,
                   help="max sampled rows kept for CSV output (default 256)")
    if with_mutation:
        p.add_argument("--mutation", type=str, default=None,
                       choices=sorted(MUTATIONS),
                       help="evaluate with one catalogue mutation applied")
    p.add_argument("--out", type=str, default=None, help="write report to this path")
    p.add_argument("--format", type=str, choices=("json", "csv"), default=None,
                   help="report format (default: by extension, else json)")


def _overrides_from_args(args) -> dict:
    out: dict = {}
    if args.trials is not None:
        out["trials"] = args.trials
    out["seed"] = args.seed
    if args.dims is not None:
        out["dims"] = tuple(args.dims)
    if args.spectrum is not None:
        out["spectrum_range"] = tuple(args.spectrum)
    if args.gap is not None:
        out["sandwich_gap"] = args.gap
    if args.v_grid is not None:
        out["v_grid"] = tuple(float(tok) for tok in args.v_grid.split(",") if tok)
    if args.v_random is not None:
        out["v_random"] = args.v_random
    if args.tol is not None:
        out["tol_rel"] = args.tol
    if args.sample_cap is not None:
        out["sample_cap"] = args.sample_cap
    if getattr(args, "mutation", None) is not None:
        out["mutation"] = args.mutation
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meanbounds",
        description="Certified Young/Heinz mean inequalities with Kantorovich refinements")
    parser.add_argument("--version", action="version", version=f"meanbounds {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_verify = sub.add_parser("verify", help="run the unmutated verification suite")
    p_verify.add_argument("family", choices=("scalar", "operator", "hs", "all"))
    _add_fuzz_options(p_verify, with_mutation=False)

    p_fuzz = sub.add_parser("fuzz", help="run a configured fuzz campaign")
    p_fuzz.add_argument("family", choices=("scalar", "operator", "hs"))
    _add_fuzz_options(p_fuzz, with_mutation=True)

    p_tight = sub.add_parser("tightness", help="improvement margins over the baselines")
    p_tight.add_argument("family", choices=("scalar", "operator", "hs"))
    _add_fuzz_options(p_tight, with_mutation=False)

    p_eval = sub.add_parser("eval", help="evaluate one explicit instance")
    p_eval.add_argument("family", choices=("scalar", "operator", "hs"))
    p_eval.add_argument("--a", type=float, help="scalar a > 0")
    p_eval.add_argument("--b", type=float, help="scalar b > 0")
    p_eval.add_argument("--v", type=float, required=True, help="weight in [0, 1]")
    p_eval.add_argument("--matrix-a", type=str, help="matrix file for A")
    p_eval.add_argument("--matrix-b", type=str, help="matrix file for B")
    p_eval.add_argument("--matrix-x", type=str, help="matrix file for X (hs family)")
    p_eval.add_argument("--sandwich", type=float, nargs=4,
                        metavar=("MPRIME", "M", "MCAP", "MCAPPRIME"),
                        help="override sandwich constants m' m M M' (operator family)")
    p_eval.add_argument("--tol", type=float, default=None)
    p_eval.add_argument("--out", type=str, default=None)
    p_eval.add_argument("--format", type=str, choices=("json", "csv"), default=None)

    p_check = sub.add_parser("check", help="re-run a JSON report and compare verdicts")
    p_check.add_argument("report", type=str)
    return parser


def _run_verify(args) -> tuple[int, dict]:
    overrides = _overrides_from_args(args)
    families = ["scalar", "operator", "hs"] if args.family == "all" else [args.family]
    if args.family == "all":
        payload = _suite_payload(families, overrides)
        for family, sub in payload["report"]["families"].items():
            rep = sub["report"]
            print(f"verify {family}: trials={rep['trials_run']} checks={rep['checks']} "
                  f"violations={rep['violations']} dominance={rep['dominance_violations']}",
                  file=sys.stderr)
    else:
        opts = dict(overrides)
        opts.setdefault("trials", _VERIFY_TRIALS[args.family])
        payload = _fuzz_payload(FuzzConfig(family=args.family, **opts))
        rep = payload["report"]
        print(f"verify {args.family}: trials={rep['trials_run']} checks={rep['checks']} "
              f"violations={rep['violations']} dominance={rep['dominance_violations']}",
              file=sys.stderr)
    ok = _payload_passed(payload)
    print("PASS" if ok else "FAIL", file=sys.stderr)
    return (0 if ok else 1), payload


def _run_fuzz(args) -> tuple[int, dict]:
    overrides = _overrides_from_args(args)
    overrides.setdefault("trials", 1000)
    payload = _fuzz_payload(FuzzConfig(family=args.family, **overrides))
    rep = payload["report"]
    print(f"fuzz {args.family}: trials={rep['trials_run']} checks={rep['checks']} "
          f"violations={rep['violations']} dominance={rep['dominance_violations']}",
          file=sys.stderr)
    return (0 if _payload_passed(payload) else 1), payload


def _run_tightness(args) -> tuple[int, dict]:
    overrides = _overrides_from_args(args)
    overrides.setdefault("trials", 1000)
    payload = _tightness_payload(FuzzConfig(family=args.family, **overrides))
    for name, imp in payload["report"]["improvements"].items():
        print(f"tightness {name}: count={imp['count']} negative={imp['negative']} "
              f"median={imp['q0.50']:.6g} max={imp['q1.00']:.6g}", file=sys.stderr)
    return (0 if _payload_passed(payload) else 1), payload


def _run_eval(args) -> tuple[int, dict]:
    if args.family == "scalar":
        if args.a is None or args.b is None:
            raise ValueError("eval scalar requires --a and --b")
        tol = args.tol if args.tol is not None else 1e-12
        payload = _eval_scalar_payload(args.a, args.b, args.v, tol)
        _print_eval_scalar(payload)
    elif args.family == "operator":
        if not (args.matrix_a and args.matrix_b):
            raise ValueError("eval operator requires --matrix-a and --matrix-b")
        tol = args.tol if args.tol is not None else 1e-8
        payload = _eval_operator_payload(read_matrix_file(args.matrix_a),
                                         read_matrix_file(args.matrix_b),
                                         args.v, tol,
                                         tuple(args.sandwich) if args.sandwich else None)
        _print_eval_matrix(payload)
    else:
        if not (args.matrix_a and args.matrix_b and args.matrix_x):
            raise ValueError("eval hs requires --matrix-a, --matrix-b and --matrix-x")
        tol = args.tol if args.tol is not None else 1e-10
        payload = _eval_hs_payload(read_matrix_file(args.matrix_a),
                                   read_matrix_file(args.matrix_b),
                                   read_matrix_file(args.matrix_x), args.v, tol)
        _print_eval_matrix(payload)
    return (0 if _payload_passed(payload) else 1), payload


def _run_check(args) -> tuple[int, dict | None]:
    try:
        with open(args.report, "r", encoding="utf-8") as fh:
            stored = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read report {args.report}: {exc}") from exc
    if stored.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {stored.get('schema')!r}")
    fresh = _recompute(stored)
    match = fresh["report"] == stored["report"]
    verdict_match = _payload_passed(fresh) == _payload_passed(stored)
    if match:
        print("check: report reproduced exactly", file=sys.stderr)
    elif verdict_match:
        print("check: verdicts match but report payload differs", file=sys.stderr)
    else:
        print("check: VERDICT MISMATCH", file=sys.stderr)
    return (0 if match else 1), None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        if args.verb == "verify":
            code, payload = _run_verify(args)
        elif args.verb == "fuzz":
            code, payload = _run_fuzz(args)
        elif args.verb == "tightness":
            code, payload = _run_tightness(args)
        elif args.verb == "eval":
            code, payload = _run_eval(args)
        else:
            code, payload = _run_check(args)
    except (ValueError, ShapeError, SandwichError, MatrixFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if payload is not None:
        out = getattr(args, "out", None)
        if args.verb == "eval" and out is None:
            pass  # the human-readable table already went to stdout
        else:
            _emit(payload, out, getattr(args, "format", None))
    print(f"elapsed: {time.monotonic() - started:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
