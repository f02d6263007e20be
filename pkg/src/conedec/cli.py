"""Command-line surface.

Subcommands: build (matrix from a recipe file), cone (inequality census and
extreme rays), vertices (vertex census), decode (single word or seeded
Monte Carlo), genfun (truncated generating function), improve (redundant-row
loop).  Every command is deterministic given its flags; the effective
configuration, including the seed, is embedded in each JSON output.

Exit codes: 0 success, 2 input error, 3 resource bound exceeded,
4 internal numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import constructions as cons
from . import serialize as ser
from .cone import build_fundamental_cone, extreme_rays
from .errors import BoundExceeded, NumericalFailure
from .gf2 import (
    BinaryMatrix,
    BinaryVector,
    format_alist,
    format_dense,
    parse_alist,
    parse_dense,
)
from .lpdecode import (
    bsc_sample,
    llr_bsc,
    lp_decode,
    ml_decode,
    shift_equivariance_experiment,
)
from .pcw import generating_function
from .polytope import lp_pseudocodewords
from .qcimprove import ImproveTarget, improve_representation

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BOUND = 3
EXIT_NUMERICAL = 4


@dataclass(frozen=True)
class RunConfig:
    command: str
    seed: int
    bound_rays: int
    bound_vertices: int
    box_bound: int
    row_weight_cap: int
    format: str

    def __post_init__(self):
        for name in ("bound_rays", "bound_vertices", "row_weight_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.box_bound < 0:
            raise ValueError("box_bound must be >= 0")


def _config(args, command: str) -> RunConfig:
    return RunConfig(
        command=command,
        seed=getattr(args, "seed", 0),
        bound_rays=getattr(args, "bound_rays", 20),
        bound_vertices=getattr(args, "bound_vertices", 16),
        box_bound=getattr(args, "box_B", 0),
        row_weight_cap=getattr(args, "row_weight_cap", 20),
        format=getattr(args, "format", "json"),
    )


def read_matrix(path: str, in_format: str = "auto") -> BinaryMatrix:
    text = Path(path).read_text()
    if in_format == "auto":
        in_format = "alist" if path.endswith(".alist") else "dense"
    if in_format == "alist":
        return parse_alist(text)
    return parse_dense(text)


def _emit(payload: str, out: str | None, summary: str) -> None:
    if out:
        Path(out).write_text(payload)
        print(summary)
    else:
        sys.stdout.write(payload)


def _json(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


# --- subcommands -----------------------------------------------------------


def cmd_build(args) -> int:
    recipe = json.loads(Path(args.recipe).read_text())
    H = build_from_recipe(recipe)
    text = format_alist(H) if args.format == "alist" else format_dense(H)
    _emit(text, args.out, f"built {H.rows}x{H.cols} matrix")
    return EXIT_OK


def build_from_recipe(recipe: dict) -> BinaryMatrix:
    kind = recipe.get("kind")
    if kind == "hamming":
        return cons.hamming_matrix(int(recipe["r"]), bool(recipe.get("cyclic", False)))
    if kind == "steane":
        return cons.steane_matrix(int(recipe["r"]))
    if kind == "css":
        return cons.css_matrix(
            _recipe_matrix(recipe["h1"]), _recipe_matrix(recipe["h2"])
        )
    if kind == "label":
        return cons.label_matrix([str(g) for g in recipe["generators"]])
    if kind == "circulant":
        return cons.circulant_permutation(int(recipe["t"]), int(recipe.get("shift", 0)))
    if kind == "qc-exponent":
        E = cons.ExponentMatrix.from_rows(
            recipe["exponents"], int(recipe["block_size"])
        )
        return cons.qc_from_exponents(E)
    if kind == "block-circulant":
        return cons.block_circulant([_recipe_matrix(b) for b in recipe["blocks"]])
    if kind == "sc":
        return cons.sc_ldpc(
            [_recipe_matrix(b) for b in recipe["blocks"]],
            int(recipe["L"]),
            str(recipe["mode"]),
        )
    if kind == "hagiwara":
        return cons.hagiwara_css_label_matrix()
    raise ValueError(f"unknown recipe kind {kind!r}")


def _recipe_matrix(source) -> BinaryMatrix:
    if isinstance(source, str):
        return read_matrix(source)
    return BinaryMatrix.from_rows(source)


def cmd_cone(args) -> int:
    cfg = _config(args, "cone")
    H = read_matrix(args.matrix, args.in_format)
    K = build_fundamental_cone(H)
    rays = extreme_rays(K, max_dim=cfg.bound_rays)
    obj = ser.cone_to_obj(K)
    obj.update(ser.rays_to_obj(rays))
    obj["type"] = "cone-census"
    obj["config"] = asdict(cfg)
    _emit(
        _json(obj),
        args.out,
        f"dim {K.dim}: {len(K.inequalities)} inequalities, {len(rays)} extreme rays",
    )
    return EXIT_OK


def cmd_vertices(args) -> int:
    cfg = _config(args, "vertices")
    H = read_matrix(args.matrix, args.in_format)
    census = lp_pseudocodewords(
        H, max_dim=cfg.bound_vertices, row_weight_cap=cfg.row_weight_cap
    )
    vs = census.vertex_set
    if cfg.format == "csv":
        csv = f"# config: {json.dumps(asdict(cfg))}\n" + ser.vertices_to_csv(vs)
        _emit(csv, args.out, f"{len(vs)} vertices")
        return EXIT_OK
    obj = ser.vertices_to_obj(vs)
    obj["codeword_count"] = len(census.codeword)
    obj["non_codeword_count"] = len(census.non_codeword)
    obj["config"] = asdict(cfg)
    _emit(
        _json(obj),
        args.out,
        f"{len(vs)} vertices ({len(census.non_codeword)} non-codeword)",
    )
    return EXIT_OK


def cmd_decode(args) -> int:
    cfg = _config(args, "decode")
    H = read_matrix(args.matrix, args.in_format)
    if (args.word is None) == (not args.random):
        raise ValueError("give exactly one of --word or --random")
    if args.word is not None:
        w = BinaryVector.from_string(args.word)
        if w.n != H.cols:
            raise ValueError(f"word length {w.n} != cols {H.cols}")
        res = lp_decode(H, llr_bsc(w, args.crossover), cfg.row_weight_cap)
        obj = {
            "schema": ser.SCHEMA,
            "type": "decode",
            "word": w.to01(),
            "p": args.crossover,
            "status": res.status,
            "integral": res.integral,
            "objective": ser.frac_str(res.objective),
            "optimum": ser.vec_strs(res.optimum),
            "config": asdict(cfg),
        }
        if args.ml:
            obj["ml_word"] = ml_decode(H, llr_bsc(w, args.crossover)).to01()
        _emit(_json(obj), args.out, f"status {res.status}")
        return EXIT_OK

    zero = BinaryVector(H.cols, 0)
    if args.orbit_n0:
        errors = [
            bsc_sample(zero, args.crossover, args.seed ^ t)
            for t in range(args.trials)
        ]
        rep = shift_equivariance_experiment(H, args.orbit_n0, errors, args.crossover)
        base = [r.statuses[0] for r in rep.orbits]
        obj = {
            "schema": ser.SCHEMA,
            "type": "shift-experiment",
            "seed": args.seed,
            "p": args.crossover,
            "trials": args.trials,
            "n0": args.orbit_n0,
            "failures": sum(1 for s in base if s != "codeword"),
            "fractional_count": sum(1 for s in base if s == "fractional"),
            "tie_count": rep.tie_orbits,
            "violations": list(rep.violations),
            "per_orbit": [
                {
                    "error": "".join(str(b) for b in r.error),
                    "statuses": list(r.statuses),
                    "status_uniform": r.status_uniform,
                    "outputs_shift_consistent": r.outputs_shift_consistent,
                }
                for r in rep.orbits
            ],
            "config": asdict(cfg),
        }
        _emit(
            _json(obj),
            args.out,
            f"{len(rep.violations)} violations over {args.trials} orbits",
        )
        return EXIT_OK

    failures = fractional = ties = ml_mismatch = 0
    for t in range(args.trials):
        e = bsc_sample(zero, args.crossover, args.seed ^ t)
        gamma = llr_bsc(e, args.crossover)
        res = lp_decode(H, gamma, cfg.row_weight_cap)
        if not (res.status == "codeword" and all(x == 0 for x in res.optimum)):
            failures += 1
        if res.status == "fractional":
            fractional += 1
        elif res.status == "tie":
            ties += 1
        if args.ml and res.status == "codeword":
            if ml_decode(H, gamma) != res.as_binary():
                ml_mismatch += 1
    obj = {
        "schema": ser.SCHEMA,
        "type": "decode-trials",
        "seed": args.seed,
        "p": args.crossover,
        "trials": args.trials,
        "failures": failures,
        "fractional_count": fractional,
        "tie_count": ties,
        "config": asdict(cfg),
    }
    if args.ml:
        obj["ml_mismatches"] = ml_mismatch
    if cfg.format == "csv":
        csv = (
            f"# config: {json.dumps(asdict(cfg))}\n"
            "seed,p,trials,failures,fer,fractional_count,tie_count\n"
            f"{args.seed},{args.crossover},{args.trials},{failures},"
            f"{failures / args.trials:.12g},{fractional},{ties}\n"
        )
        _emit(csv, args.out, f"fer {failures / args.trials:.4g}")
        return EXIT_OK
    _emit(_json(obj), args.out, f"fer {failures / args.trials:.4g}")
    return EXIT_OK


def cmd_genfun(args) -> int:
    cfg = _config(args, "genfun")
    H = read_matrix(args.matrix, args.in_format)
    f = generating_function(H, args.box_B)
    obj = ser.genfun_to_obj(f)
    obj["config"] = asdict(cfg)
    _emit(_json(obj), args.out, f"{len(f)} terms at bound {args.box_B}")
    return EXIT_OK


def cmd_improve(args) -> int:
    cfg = _config(args, "improve")
    H = read_matrix(args.matrix, args.in_format)
    if (args.target_noncw is None) == (args.target_fer is None):
        raise ValueError("give exactly one of --target-noncw or --target-fer")
    target = ImproveTarget(
        max_noncw_vertices=args.target_noncw,
        max_fer=args.target_fer,
        p=args.crossover if args.target_fer is not None else None,
    )
    report = improve_representation(
        H,
        args.n0,
        target,
        budget=args.budget,
        seed=args.seed,
        trials=args.trials,
        max_dim=cfg.bound_vertices,
    )
    obj = {
        "schema": ser.SCHEMA,
        "type": "improvement",
        "seed": report.seed,
        "n0": args.n0,
        "met_target": report.met_target,
        "iterations": [
            {
                "added_word": "".join(str(b) for b in it.added_word),
                "added_word_hex": hex(
                    int("".join(str(b) for b in reversed(it.added_word)), 2)
                ),
                "orbit_size": it.orbit_size,
                "vertex_count": it.vertex_count,
                "non_codeword_vertex_count": it.non_codeword_vertex_count,
                "fer_estimate": it.fer_estimate,
            }
            for it in report.iterations
        ],
        "final_matrix": format_dense(report.final_matrix),
        "config": asdict(cfg),
    }
    _emit(
        _json(obj),
        args.out,
        f"met_target={report.met_target} after {len(report.iterations)} iterations",
    )
    return EXIT_OK


# --- argument parsing ------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write output to this file (summary to stdout)")
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--in-format", default="auto", choices=["auto", "dense", "alist"],
                   dest="in_format")
    p.add_argument("--bound-rays", type=int, default=20, dest="bound_rays")
    p.add_argument("--bound-vertices", type=int, default=16, dest="bound_vertices")
    p.add_argument("--row-weight-cap", type=int, default=20, dest="row_weight_cap")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="conedec",
        description="Fundamental cones, relaxed polytopes, and pseudocodewords "
        "of binary parity-check codes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a matrix from a JSON recipe")
    p.add_argument("recipe")
    p.add_argument("--out")
    p.add_argument("--format", default="dense", choices=["dense", "alist"])
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("cone", help="fundamental cone census and extreme rays")
    p.add_argument("matrix")
    _add_common(p)
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("vertices", help="relaxed polytope vertex census")
    p.add_argument("matrix")
    _add_common(p)
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("decode", help="LP decode a word or run seeded trials")
    p.add_argument("matrix")
    p.add_argument("--word", help="received word as a 0/1 string")
    p.add_argument("--random", action="store_true", help="Monte Carlo over the BSC")
    p.add_argument("--crossover", type=float, default=0.1)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--ml", action="store_true", help="cross-check against ML decoding")
    p.add_argument("--orbit-n0", type=int, dest="orbit_n0",
                   help="with --random: decode whole shift orbits and report per-orbit")
    _add_common(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("genfun", help="truncated pseudocodeword generating function")
    p.add_argument("matrix")
    p.add_argument("--box-B", type=int, required=True, dest="box_B")
    _add_common(p)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("improve", help="redundant-row representation improvement")
    p.add_argument("matrix")
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--target-noncw", type=int, dest="target_noncw")
    p.add_argument("--target-fer", type=float, dest="target_fer")
    p.add_argument("--crossover", type=float, default=0.05)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--budget", type=int, default=10)
    _add_common(p)
    p.set_defaults(func=cmd_improve)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BoundExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BOUND
    except (NumericalFailure, AssertionError, ArithmeticError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
