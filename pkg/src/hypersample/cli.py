"""Command line front end: ``hypersample <subcommand> ...``.

Exit codes: 0 success, 2 violated preconditions, 1 I/O errors.
JSON goes to stdout with sorted keys; every stochastic command reports its seed
and the content digest of the instance it ran on.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import curves, generators
from .adversarial import STRATEGIES, random_cover_trial, cover_trials_csv, search_worst_confined
from .errors import HypersampleError
from .hypergraph import Hypergraph, read_hypergraph, to_text, validate
from .oracle import duality_grid, exact_typical_stats, exact_worst_confinement
from .rewiring import edge_rewire, vertex_rewire
from .sampling import density_size
from .typical import STATISTICS, analysis_report, default_threshold, expected_hit_fraction


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "item"):
        return x.item()
    raise TypeError(f"cannot serialise {type(x).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=_json_default)


def _emit(obj, out=None):
    text = dumps(obj) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _write(text: str, out):
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# --- subcommands ----------------------------------------------------------------

def cmd_gen(a) -> int:
    kind = a.kind
    if kind == "complete":
        H = generators.complete_uniform(a.n, a.k)
    elif kind == "regular":
        H = generators.random_regular_uniform(a.n, a.k, a.d, a.seed)
    elif kind == "uniform":
        H = generators.random_uniform(a.n, a.k, a.m, a.seed)
    elif kind == "irregular":
        H = generators.random_irregular(a.n, a.m, a.max_size, a.seed)
    elif kind == "singleton":
        H = generators.singleton_repeated(a.n, a.r)
    else:
        adj = generators.cycle_adjacency(a.n) if a.d == 2 else generators.random_regular_graph_adjacency(a.n, a.d, a.seed)
        H = generators.walk_hypergraph(adj, a.k)
    _write(to_text(H), a.out)
    return 0


def _stats(H: Hypergraph) -> dict:
    st = validate(H)
    return {
        "n": H.n,
        "m": H.m,
        "incidences": st["incidences"],
        "r": float(st["r"]),
        "k_bar": float(st["k_bar"]) if "k_bar" in st else None,
        "d_bar": float(st["d_bar"]),
        "max_degree": H.max_degree,
        "min_degree": H.min_degree,
        "max_uniformity": H.max_uniformity,
        "min_uniformity": H.min_uniformity,
        "degree_profile": H.degree_profile.to_json(),
        "instance_digest": H.digest(),
    }


def cmd_stats(a) -> int:
    _emit(_stats(read_hypergraph(a.file)))
    return 0


def cmd_typical(a) -> int:
    H = read_hypergraph(a.file)
    rep = analysis_report(H, a.p, a.stat, a.threshold, None if a.exact else a.trials, a.seed, a.exact, a.alpha,
                          a.eta, a.threads, a.budget)
    rep["p"] = a.p
    _emit(rep)
    return 0


def _floors(H: Hypergraph, delta: float) -> dict:
    k = float(H.avg_uniformity)
    r = float(H.sparsity)
    out: dict = {}
    try:
        out["general"] = curves.worst_case_floor(H.n, k, delta)
    except HypersampleError as exc:
        out["general"] = None
        out["general_note"] = str(exc)
    if H.uniformity is not None:
        out["uniform"] = float(curves.worst_case_floor(H.n, H.uniformity, delta, uniform=True))
    if r * k >= 1:
        out["f"] = curves.f(k, r, delta)
    if k > 1:
        out["lower_bound_eps"] = curves.lower_bound_eps(k, r, delta)
    return out


def cmd_adversary(a) -> int:
    H = read_hypergraph(a.file)
    res = search_worst_confined(H, a.delta, a.budget, a.seed, a.strategy, a.threads, gamma_sweep=a.gamma_sweep)
    if a.dump_trials:
        g = res.gamma if res.gamma is not None else 0.5
        trials = [random_cover_trial(H, g, a.seed, i) for i in range(a.budget)]
        Path(a.dump_trials).write_text(cover_trials_csv(trials))
    out = res.to_json()
    if not a.full:
        out.pop("A")
    out["instance_digest"] = H.digest()
    out["floors"] = _floors(H, a.delta)
    _emit(out)
    return 0


def cmd_curves(a) -> int:
    which = tuple(w.strip() for w in a.which.split(",") if w.strip())
    bad = [w for w in which if w not in curves.CURVE_COLUMNS]
    if bad:
        raise HypersampleError(f"unknown curve(s) {bad}; choose from {curves.CURVE_COLUMNS}")
    rows = curves.curve_rows(a.k, a.r, curves.parse_grid(a.p_grid), which)
    _write(curves.curves_csv(rows, which, a.digits), a.out)
    return 0


def cmd_rewire(a) -> int:
    H = read_hypergraph(a.file)
    if a.max_degree is not None:
        H2, log, cut = vertex_rewire(H, a.max_degree)
        mode, key = "vertex", "V0"
    else:
        H2, log, cut = edge_rewire(H, a.max_uniformity)
        mode, key = "edge", "E0"
    _write(to_text(H2), a.out)
    summary = {"mode": mode, "moves": log.count, "initial_excess": log.initial_excess, key: sorted(cut),
               "instance_digest": H.digest(), "output_digest": H2.digest(),
               "max_degree": H2.max_degree, "max_uniformity": H2.max_uniformity}
    if a.out and a.out != "-":
        _emit(summary)
    else:
        sys.stderr.write(dumps(summary) + "\n")
    return 0


def cmd_oracle(a) -> int:
    H = read_hypergraph(a.file)
    out = {"instance_digest": H.digest(), "mode": a.mode, "p": a.p}
    if a.mode == "worst":
        conf, arg = exact_worst_confinement(H, a.p, a.budget)
        out.update(confinement=str(conf), confinement_float=float(conf), argmax=list(arg))
        if H.uniformity is not None:
            out["uniform_floor"] = str(curves.worst_case_floor(H.n, H.uniformity, a.p, uniform=True))
    elif a.mode == "typical":
        k = H.uniformity
        s = density_size(a.p, H.n)
        stat = a.stat
        thr = Fraction(a.threshold) if a.threshold is not None else (Fraction(default_threshold(H, stat)) if k else None)
        total = exceed = 0
        conf_sum = Fraction(0)
        tv_max = Fraction(0)
        for rec in exact_typical_stats(H, a.p, a.budget):
            total += 1
            conf_sum += rec.confinement
            if k is None:
                continue
            if stat == "tv_to_hyp":
                val = rec.tv_to_hyp
            elif stat == "tv_to_bin":
                val = rec.tv_to_bin
            elif stat == "confinement_dev_from_pk":
                val = abs(rec.confinement - Fraction(s, H.n) ** k)
            elif stat == "avoidance_dev":
                val = abs(Fraction(rec.counts[0], H.m) - (1 - Fraction(s, H.n)) ** k)
            else:
                raise HypersampleError(f"oracle typical mode does not support {stat}")
            tv_max = max(tv_max, val)
            exceed += val >= thr
        out.update(subsets=total, mean_confinement=str(conf_sum / total))
        if k is not None:
            out.update(statistic=stat, threshold=float(thr), exceed=exceed, estimate=exceed / total,
                       max_statistic=float(tv_max), expected_confinement=str(expected_hit_fraction(H.n, k, a.p, k)))
    else:
        ps = curves.parse_grid(a.p_grid)
        es = curves.parse_grid(a.eps_grid)
        fails = duality_grid(H, ps, es, a.budget)
        out.update(checked=len(ps) * len(es), failures=fails, holds=not fails)
    _emit(out)
    return 0


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypersample", description="Hypergraph samplers and confiners: analysis and bounds.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a hypergraph file")
    g.add_argument("kind", choices=["complete", "regular", "uniform", "irregular", "singleton", "walk"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--d", type=int, default=2)
    g.add_argument("--m", type=int, default=10)
    g.add_argument("--r", type=int, default=1)
    g.add_argument("--max-size", type=int, default=4)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(fn=cmd_gen)

    s = sub.add_parser("stats", help="print basic statistics as JSON")
    s.add_argument("file")
    s.set_defaults(fn=cmd_stats)

    t = sub.add_parser("typical", help="typical-case exceedance of a statistic over random density-p sets")
    t.add_argument("file")
    t.add_argument("--p", type=float, required=True)
    t.add_argument("--stat", choices=STATISTICS, default="confinement_dev_from_pk")
    t.add_argument("--threshold", type=float)
    t.add_argument("--eta", type=float)
    t.add_argument("--alpha", type=float, default=0.5)
    mode = t.add_mutually_exclusive_group()
    mode.add_argument("--trials", type=int, default=1000)
    mode.add_argument("--exact", action="store_true")
    t.add_argument("--budget", type=int, default=10**7)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--threads", type=int, default=1)
    t.set_defaults(fn=cmd_typical)

    v = sub.add_parser("adversary", help="search for a dense set confining many edges")
    v.add_argument("file")
    v.add_argument("--delta", type=float, required=True)
    v.add_argument("--budget", type=int, default=64)
    v.add_argument("--strategy", choices=STRATEGIES, default="hybrid")
    v.add_argument("--gamma-sweep", action="store_true")
    v.add_argument("--dump-trials", help="write cover trials as CSV")
    v.add_argument("--full", action="store_true", help="include the found set in the output")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--threads", type=int, default=1)
    v.set_defaults(fn=cmd_adversary)

    c = sub.add_parser("curves", help="export bound curves as CSV")
    c.add_argument("--k", type=float, required=True)
    c.add_argument("--r", type=float, required=True)
    c.add_argument("--p-grid", default="0:1:101", help="a:b:count or a comma separated list")
    c.add_argument("--which", default="f,g,h,xk")
    c.add_argument("--digits", type=int, default=6)
    c.add_argument("--out")
    c.set_defaults(fn=cmd_curves)

    w = sub.add_parser("rewire", help="cap the maximum degree or uniformity")
    w.add_argument("file")
    cap = w.add_mutually_exclusive_group(required=True)
    cap.add_argument("--max-degree", type=int)
    cap.add_argument("--max-uniformity", type=int)
    w.add_argument("--out")
    w.set_defaults(fn=cmd_rewire)

    o = sub.add_parser("oracle", help="exact answers by enumeration (small instances)")
    o.add_argument("file")
    o.add_argument("--p", type=float, default=0.5)
    o.add_argument("--mode", choices=["worst", "typical", "duality"], default="worst")
    o.add_argument("--stat", choices=[s for s in STATISTICS if s != "tail_mass"], default="tv_to_hyp")
    o.add_argument("--threshold", type=float)
    o.add_argument("--p-grid", default="0.2:0.8:5")
    o.add_argument("--eps-grid", default="0.1:0.9:5")
    o.add_argument("--budget", type=int, default=10**7)
    o.set_defaults(fn=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        sys.stderr.write("error: --threads must be >= 1\n")
        return 2
    try:
        return args.fn(args)
    except HypersampleError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
