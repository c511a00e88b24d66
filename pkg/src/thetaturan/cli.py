"""Command-line front end; every command emits one JSON payload (or CSV for
tables) on stdout and is bitwise-reproducible for a fixed seed."""

from __future__ import annotations

import argparse
import json
import shlex
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .assignment import load_profile, minimize_psi
from .construct import behrend_set, apex_turan, matched_bipartite, ruzsa_szemeredi, \
    verify_linear_triangle_system
from .errors import Graph6Error, LimitError, SearchAbort
from .graphs import Graph, build_standard, graph6_decode, graph6_encode, is_bipartite
from .search import ForbiddenSpec, edge_maximal_lower_bound, extremal_oracle, \
    phi_oracle, theorem2_report, ORACLE_MAX_N
from .stability import stability_extract
from .subgraph import max_book
from .theta import ThetaSpec, build_theta, classify, is_edge_critical

SCHEMA = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_LIMIT = 2
EXIT_INTERNAL = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _forbid_arg(text: str) -> tuple[ForbiddenSpec, ThetaSpec | None]:
    """--forbid accepts a theta spec string or a raw graph6 pattern."""
    if text.lstrip().startswith("theta("):
        spec = ThetaSpec.parse(text)
        return ForbiddenSpec(build_theta(spec), 1, str(spec)), spec
    try:
        pattern = graph6_decode(text)
    except Graph6Error as exc:
        raise _UsageError(f"--forbid must be theta(...) or graph6: {exc}") from exc
    return ForbiddenSpec(pattern, 1, text), None


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for interface stability; results never depend on it")
    common.add_argument("--budget", type=int, default=32)
    common.add_argument("--csv", action="store_true")

    p = _Parser(prog="thetaturan", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    pc = sub.add_parser("classify", parents=[common],
                        help="growth class of the triangle maximum when this theta graph is forbidden")
    pc.add_argument("spec")

    pb = sub.add_parser("build", parents=[common], help="emit a named construction")
    pb.add_argument("kind")
    pb.add_argument("params", nargs="*", type=int)
    pb.add_argument("--out", type=Path)

    po = sub.add_parser("oracle", parents=[common],
                        help="exact extremal clique count by exhaustive search")
    po.add_argument("--n", type=int, required=True)
    po.add_argument("--r", type=int, required=True)
    po.add_argument("--forbid", required=True)
    po.add_argument("--copies", type=int, default=1)

    pp = sub.add_parser("phi", parents=[common],
                        help="maximize e(G) + c*N_r(G) over graphs avoiding a theta graph")
    pp.add_argument("--n", type=int, required=True)
    pp.add_argument("--r", type=int, required=True)
    pp.add_argument("--c", default="1")
    pp.add_argument("--forbid", required=True)

    pt = sub.add_parser("theorem2", parents=[common],
                        help="closed formula vs search for k disjoint forbidden copies")
    pt.add_argument("--k", type=int, required=True)
    pt.add_argument("--r", type=int, required=True)
    pt.add_argument("--forbid", required=True)
    pt.add_argument("--n-max", type=int, required=True)
    pt.add_argument("--n-min", type=int, default=None)

    pa = sub.add_parser("assign", parents=[common],
                        help="potential-minimizing clique assignment of a graph6 file")
    pa.add_argument("g6file", type=Path)
    pa.add_argument("--mode", default="single:2",
                    help="'single:k' or 'pair'")
    pa.add_argument("--forbid", default=None,
                    help="optional theta spec; echoes 2|H| next to the max load")
    pa.add_argument("--out", type=Path, help="write the text dump here")

    ps = sub.add_parser("stability", parents=[common],
                        help="degree peel + minimum-internal-edge bipartition report")
    ps.add_argument("g6file", type=Path)
    ps.add_argument("--eps", required=True)
    ps.add_argument("--forbid", required=True)

    pv = sub.add_parser("verify", parents=[common], help="construction verifiers")
    pv.add_argument("what", choices=["rs"])
    pv.add_argument("--m", type=int, required=True)

    pr = sub.add_parser("corpus", parents=[common],
                        help="run every command in a manifest, one per line")
    pr.add_argument("manifest", type=Path)
    pr.add_argument("--out-dir", type=Path, required=True)
    return p


def _payload_classify(args) -> dict:
    spec = ThetaSpec.parse(args.spec)
    out = {"schema": SCHEMA, "command": "classify", "spec": str(spec)}
    out.update(classify(spec).to_json_dict())
    out["edge_critical"] = is_edge_critical(spec)
    return out


_CONSTRUCT_KINDS = ("theta", "apex", "matched", "rs", "behrend")


def _payload_build(args) -> dict:
    kind = args.kind
    params = list(args.params)
    out = {"schema": SCHEMA, "command": "build", "kind": kind, "params": params}
    out_path: Path | None = args.out
    file_text = None
    if kind == "theta":
        g = build_theta(ThetaSpec(params))
    elif kind == "apex":
        if len(params) != 2:
            raise _UsageError("apex takes parameters: k n")
        g = apex_turan(params[0], params[1])
    elif kind == "matched":
        if len(params) != 1:
            raise _UsageError("matched takes one parameter: n")
        g = matched_bipartite(params[0])
    elif kind == "rs":
        if len(params) != 1:
            raise _UsageError("rs takes one parameter: m")
        s = behrend_set(params[0])
        ts = ruzsa_szemeredi(params[0], s)
        g = ts.graph
        out["set_size"] = len(s)
        out["triangles"] = len(ts.triangles)
        if out_path is not None:
            file_text = graph6_encode(g) + "\n" + "".join(
                f"{a} {b} {c}\n" for a, b, c in ts.triangles)
    elif kind == "behrend":
        if len(params) != 1:
            raise _UsageError("behrend takes one parameter: m")
        s = behrend_set(params[0])
        out["size"] = len(s)
        out["largest"] = s.elements[-1] if s.elements else None
        if out_path is not None:
            out_path.write_text(s.to_text())
            out["out"] = str(out_path)
        return out
    else:
        g = build_standard(kind, params)
    out["n"] = g.n
    out["edges"] = g.edge_count
    out["graph6"] = graph6_encode(g) if g.n <= 62 else None
    if out_path is not None:
        if file_text is None:
            file_text = graph6_encode(g) + "\n"
        out_path.write_text(file_text)
        out["out"] = str(out_path)
    return out


def _payload_oracle(args) -> dict:
    forbidden, _spec = _forbid_arg(args.forbid)
    forbidden = ForbiddenSpec(forbidden.pattern, args.copies, forbidden.label)
    if args.n <= ORACLE_MAX_N:
        res = extremal_oracle(args.n, args.r, forbidden)
    else:
        res = edge_maximal_lower_bound(args.n, args.r, forbidden,
                                       budget=args.budget, seed=args.seed,
                                       theta_spec=_spec)
    return {
        "schema": SCHEMA, "command": "oracle", "n": res.n, "r": args.r,
        "forbidden": {"pattern": forbidden.label, "copies": args.copies},
        "objective": res.objective, "value": res.value, "exact": res.exact,
        "witnesses": res.witnesses, "witnesses_total": res.witnesses_total,
        "examined": res.graphs_examined, "pruned": res.pruned,
    }


def _payload_phi(args) -> dict:
    _forbidden, spec = _forbid_arg(args.forbid)
    if spec is None:
        raise _UsageError("phi needs a theta(...) pattern")
    c = Fraction(args.c)
    res = phi_oracle(args.n, args.r, c, spec)
    return {
        "schema": SCHEMA, "command": "phi", "n": res.n, "r": args.r,
        "c_num": c.numerator, "c_den": c.denominator, "forbidden": str(spec),
        "value_num": res.value.numerator, "value_den": res.value.denominator,
        "bound": res.details["bound"], "relation": res.details["relation"],
        "unique_turan_witness": res.details["unique_turan_witness"],
        "witnesses": res.witnesses, "witnesses_total": res.witnesses_total,
        "examined": res.graphs_examined, "pruned": res.pruned,
    }


def _payload_theorem2(args):
    _forbidden, spec = _forbid_arg(args.forbid)
    if spec is None:
        raise _UsageError("theorem2 needs a theta(...) pattern")
    n_min = args.n_min if args.n_min is not None else max(3, args.k)
    if args.n_max < n_min:
        raise _UsageError("--n-max below the first row")
    rep = theorem2_report(range(n_min, args.n_max + 1), args.k, args.r, spec,
                          budget=args.budget, seed=args.seed)
    if args.csv:
        lines = ["n,formula,value,value_kind,clique_competitor,gap"]
        for row in rep["rows"]:
            lines.append(",".join("" if row[c] is None else str(row[c])
                                  for c in ("n", "formula", "value", "value_kind",
                                            "clique_competitor", "gap")))
        return "\n".join(lines) + "\n"
    rep.update({"schema": SCHEMA, "command": "theorem2"})
    return rep


def _payload_assign(args) -> dict:
    g = graph6_decode(args.g6file.read_text().strip().splitlines()[0])
    mode = args.mode
    if mode == "pair":
        a = minimize_psi(g, "pair")
    elif mode.startswith("single:"):
        a = minimize_psi(g, "single", k=int(mode.split(":", 1)[1]))
    else:
        raise _UsageError("--mode must be 'single:k' or 'pair'")
    ref = None
    if args.forbid:
        ref = ThetaSpec.parse(args.forbid).vertex_count
    profile = load_profile(a, reference_vertices=ref)
    if args.out is not None:
        args.out.write_text("".join(line + "\n" for line in a.dump_lines()))
        profile["out"] = str(args.out)
    profile.update({"schema": SCHEMA, "command": "assign", "mode": mode})
    return profile


def _payload_stability(args) -> dict:
    g = graph6_decode(args.g6file.read_text().strip().splitlines()[0])
    spec = ThetaSpec.parse(args.forbid)
    rep = stability_extract(g, Fraction(args.eps), spec,
                            budget=args.budget, seed=args.seed)
    rep.update({"schema": SCHEMA, "command": "stability", "forbidden": str(spec)})
    return rep


def _payload_verify(args) -> dict:
    s = behrend_set(args.m)
    ts = ruzsa_szemeredi(args.m, s)
    g = ts.graph
    m = args.m
    parts_ok = all(
        not (lo <= u < hi and lo <= v < hi)
        for u, v in g.edges()
        for lo, hi in ((0, m), (m, 3 * m), (3 * m, 6 * m)))
    from .construct import is_ap_free
    return {
        "schema": SCHEMA, "command": "verify_rs", "m": m,
        "set_size": len(s), "set": list(s.elements),
        "ap_free": is_ap_free(s.elements),
        "vertices": g.n, "edges": g.edge_count,
        "triangles": len(ts.triangles), "expected_triangles": m * len(s),
        "linear_system": verify_linear_triangle_system(ts),
        "max_book": max_book(g),
        "tripartite": parts_ok,
        "bipartite": is_bipartite(g) is not None,
        "ok": (verify_linear_triangle_system(ts)
               and len(ts.triangles) == m * len(s)
               and is_ap_free(s.elements) and parts_ok),
    }


def _payload_corpus(args) -> dict:
    try:
        text = args.manifest.read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read manifest: {exc}") from exc
    out_dir = args.out_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    failed = 0
    idx = 0
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            tokens = shlex.split(line)
        except ValueError as exc:
            entries.append({"argv": line, "status": "error", "error": str(exc),
                            "file": None})
            failed += 1
            idx += 1
            continue
        code, payload = run_command(tokens)
        if code == EXIT_OK:
            fname = f"cmd_{idx:03d}.json"
            (out_dir / fname).write_text(payload)
            entries.append({"argv": tokens, "status": "ok", "error": None,
                            "file": fname})
        else:
            entries.append({"argv": tokens, "status": "error",
                            "error": payload.strip(), "file": None})
            failed += 1
        idx += 1
    index = {"schema": SCHEMA, "command": "corpus", "entries": entries,
             "total": idx, "failed": failed}
    (out_dir / "index.json").write_text(_render(index))
    return index


_HANDLERS = {
    "classify": _payload_classify,
    "build": _payload_build,
    "oracle": _payload_oracle,
    "phi": _payload_phi,
    "theorem2": _payload_theorem2,
    "assign": _payload_assign,
    "stability": _payload_stability,
    "verify": _payload_verify,
    "corpus": _payload_corpus,
}


def _render(payload) -> str:
    if isinstance(payload, str):
        return payload
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def run_command(argv) -> tuple[int, str]:
    """Parse and run one command; returns (exit_code, payload or diagnostic).

    The payload string is complete or absent: nothing partial is ever
    produced.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise _UsageError("--threads must be >= 1")
        payload = _HANDLERS[args.cmd](args)
        return EXIT_OK, _render(payload)
    except _UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}\n"
    except (ValueError, OSError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    except LimitError as exc:
        return EXIT_LIMIT, f"rejected: {exc}\n"
    except (AssertionError, SearchAbort) as exc:
        return EXIT_INTERNAL, f"internal check failed: {exc}\n"


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    t0 = time.monotonic()
    code, text = run_command(argv)
    wall_ms = int((time.monotonic() - t0) * 1000)
    if code == EXIT_OK:
        sys.stdout.write(text)
        # timing is diagnostic only: payloads stay bitwise-reproducible
        print(f"thetaturan {__version__}: ok in {wall_ms} ms", file=sys.stderr)
    else:
        sys.stderr.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
