"""
Command line: strangeorbits {index,check,survey,reproduce,centralizer,meander}.

Exit codes: 0 ok, 1 verified negative, 2 usage, 3 engines disagree,
4 invalid witness.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import ratlin
from .lie import (GL, SL, AlgebraKind, SubalgebraBasis, centralizer_basis, gl,
                  index_monte_carlo, is_subalgebra, jordan_nilpotent, sl)
from .partitions import Partition, is_power_partition, orbit_stats
from .reproduce import SUITES, Options, run_suite
from .seaweed import (Composition, SeaweedSpec, composition_from_A, dk_index, meander,
                      seaweed_basis)
from .strange import (check_pair, fig1_witness, flag2_witness, flag3_witness, solvable_witness,
                      summary, survey)
from .strange.classify import _mat_from_json, _mat_json

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_DISAGREE, EXIT_BAD_WITNESS = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    seed: int = 1
    trials: int = 8
    height: int = 10
    format: str = "text"
    parallel: bool = False

    def __post_init__(self):
        if self.trials < 1 or self.height < 1:
            raise UsageError("--trials and --height must be >= 1")

    def to_json(self) -> dict:
        return {"seed": self.seed, "trials": self.trials, "height": self.height,
                "parallel": self.parallel}


def default_seed() -> int:
    env = os.environ.get("STRANGE_SEED")
    if env is None:
        return 1
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"STRANGE_SEED must be an integer, got {env!r}") from None


def _emit(obj: dict, cfg: RunConfig, text: str, out) -> None:
    if cfg.format == "json":
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _kind(args, n: int) -> AlgebraKind:
    return gl(n) if args.gl else sl(n)


def _parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _parse_seaweed(text: str) -> SeaweedSpec:
    try:
        return SeaweedSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_A(text: str, n: int) -> list[int]:
    """'A={2,3}' lists the Levi roots; a bare '1,3' lists the cut points, i.e. [n-1] minus A."""
    text = text.strip()
    levi = text.startswith("A=")
    body = text.removeprefix("A=").strip().strip("{}")
    try:
        vals = [int(t) for t in body.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad root set {text!r}") from None
    if any(not 1 <= v < n for v in vals):
        raise UsageError(f"roots must lie in 1..{n - 1}")
    if levi:
        return vals
    return [i for i in range(1, n) if i not in vals]


def load_witness_file(path: str, kind: AlgebraKind | None = None):
    """Read a witness file: an array of n x n matrices, or an object with 'matrices'."""
    try:
        with open(path) as fh:
            data = json.load(fh)
        meta = data if isinstance(data, dict) else {}
        mats = [_mat_from_json(m) for m in (meta["matrices"] if meta else data)]
    except (OSError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read witness file {path}: {exc}") from None
    if not mats:
        raise UsageError("witness file holds no matrices")
    n = mats[0].shape[0]
    if any(m.shape != (n, n) for m in mats):
        raise UsageError("witness matrices must all be n x n")
    if kind is None:
        kind = gl(n) if meta.get("algebra", "sl").startswith("gl") else sl(n)
    e = _mat_from_json(meta["e"]) if "e" in meta else None
    return mats, kind, e, meta.get("provenance", path)


def witness_file_json(h: SubalgebraBasis, provenance: str, e=None) -> dict:
    out = {"provenance": provenance, "algebra": str(h.kind),
           "matrices": [_mat_json(m) for m in h.mats]}
    if e is not None:
        out["e"] = _mat_json(e)
    return out


# -- subcommands -----------------------------------------------------------

def cmd_index(args, cfg: RunConfig, out) -> int:
    spec = None
    if args.borel:
        n = args.borel
        spec = SeaweedSpec(Composition((1,) * n), Composition((n,)))
        label = f"borel of {_kind(args, n)}"
    elif args.parabolic is not None:
        if not args.n:
            raise UsageError("--parabolic needs --n")
        A = _parse_A(args.parabolic, args.n)
        try:
            spec = SeaweedSpec(composition_from_A(A, args.n), Composition((args.n,)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        label = f"parabolic A={sorted(A)} of {_kind(args, args.n)}"
    elif args.seaweed:
        spec = _parse_seaweed(args.seaweed)
        label = f"seaweed {spec} of {_kind(args, spec.n)}"
    elif args.basis:
        mats, kind, _, prov = load_witness_file(args.basis)
        kind = _kind(args, kind.n) if (args.gl or args.sl) else kind
        try:
            h = SubalgebraBasis.span(kind, mats, prov)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        label = f"basis file {prov}"
    else:
        raise UsageError("index needs one of --borel, --parabolic, --seaweed, --basis")

    if spec is not None:
        h = seaweed_basis(spec, _kind(args, spec.n))
    est = index_monte_carlo(h, trials=cfg.trials, height=cfg.height, rng=cfg.seed)
    res = {"subalgebra": label, "dim": h.dim, "index_upper_bound": est.upper_bound_on_index,
           "trials_run": est.trials_run, "config": cfg.to_json()}
    lines = [label, f"dim = {h.dim}", f"monte-carlo index <= {est.upper_bound_on_index}"]
    code = EXIT_OK
    if spec is not None:
        dk = dk_index(spec, h.kind)
        agree = dk == est.upper_bound_on_index
        res.update({"dk_index": dk, "agree": agree})
        lines.append(f"meander index = {dk}  {'AGREE' if agree else 'DISAGREE'}")
        if not agree:
            code = EXIT_DISAGREE
    _emit(res, cfg, "\n".join(lines), out)
    return code


def _named_witness(name: str, lam: Partition, kind: AlgebraKind):
    n = lam.n
    k = is_power_partition(lam)
    if name in ("fig1", "solvable"):
        if k is None:
            return None, f"{lam} is not a power of a regular nilpotent: dim mismatch"
        try:
            w = fig1_witness(n, k, kind) if name == "fig1" else solvable_witness(n, k, kind)
        except ValueError as exc:
            return None, str(exc)
        return w, ""
    if name in ("flag2", "flag3"):
        try:
            w = flag2_witness(n, kind) if name == "flag2" else flag3_witness(n, kind)
        except ValueError as exc:
            return None, str(exc)
        if w.partition != lam:
            return None, f"{name} witness is built for {w.partition}, not {lam}"
        return w, ""
    raise UsageError(f"unknown witness {name!r} (fig1, solvable, flag2, flag3 or a JSON file)")


def cmd_check(args, cfg: RunConfig, out) -> int:
    lam = _parse_partition(args.partition)
    kind = _kind(args, lam.n)
    e = None
    if os.path.exists(args.witness):
        mats, file_kind, e, prov = load_witness_file(args.witness)
        if args.gl or args.sl:
            file_kind = kind
        try:
            h = SubalgebraBasis.span(file_kind, mats, prov)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if h.n != lam.n:
            raise UsageError("witness matrices and partition disagree on n")
        tag = prov
    else:
        w, why = _named_witness(args.witness, lam, kind)
        if w is None:
            res = {"partition": str(lam), "witness": args.witness, "is_strange_pair": False,
                   "reason": why}
            _emit(res, cfg, f"{lam} / {args.witness}: FAIL ({why})", out)
            return EXIT_NEGATIVE
        h, e, tag = w.h, w.e, w.tag
    if args.save:
        with open(args.save, "w") as fh:
            json.dump(witness_file_json(h, tag, e), fh, indent=2, sort_keys=True)
    try:
        closed = is_subalgebra(h)
    except ValueError:
        closed = False
    if not closed:
        res = {"partition": str(lam), "witness": tag, "h_is_subalgebra": False,
               "reason": "not closed under the bracket"}
        _emit(res, cfg, f"{lam} / {tag}: invalid witness (not closed under the bracket)", out)
        return EXIT_BAD_WITNESS
    try:
        rep = check_pair(lam, h, e=e)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = {"partition": str(lam), "algebra": str(h.kind), "witness": tag, **rep.to_json()}
    verdict = "strange pair" if rep.is_strange_pair else "not a strange pair"
    text = (f"{lam} in {h.kind} with {tag}: {verdict}\n"
            f"dim g = {rep.dim_g}, dim O = {rep.dim_orbit}, dim h = {rep.dim_h}\n"
            f"a = {rep.a}, b = {rep.b}")
    _emit(res, cfg, text, out)
    return EXIT_OK if rep.is_strange_pair else EXIT_NEGATIVE


def cmd_survey(args, cfg: RunConfig, out) -> int:
    n = args.n
    if n < 2:
        raise UsageError("survey needs n >= 2")
    family = GL if args.gl else SL
    verdicts = survey(n, cfg.seed, family, parallel=cfg.parallel)
    counts = summary(verdicts)
    res = {"n": n, "algebra": str(_kind(args, n)), "verdicts": [v.to_json() for v in verdicts],
           "summary": counts, "config": cfg.to_json()}
    width = max(len(str(v.partition)) for v in verdicts)
    lines = [f"nilpotent orbits of {_kind(args, n)} (seed {cfg.seed})"]
    for v in verdicts:
        tag = v.witness["kind"] if v.witness else "-"
        lines.append(f"  {str(v.partition):<{width}}  {v.status:<10} {tag:<20} {v.reason}")
    lines.append("  " + ", ".join(f"{k}: {c}" for k, c in counts.items()))
    _emit(res, cfg, "\n".join(lines), out)
    return EXIT_OK


def cmd_reproduce(args, cfg: RunConfig, out) -> int:
    opt = Options(seed=cfg.seed, trials=cfg.trials, height=cfg.height, n=args.n,
                  max_n=args.max_n, parallel=cfg.parallel)
    res = run_suite(args.suite, opt)
    lines = [f"[{'pass' if i.ok else 'FAIL'}] {i.label}  {i.detail}".rstrip() for i in res.items]
    lines.append(f"{res.name}: {'pass' if res.passed else 'FAIL'}")
    _emit({**res.to_json(), "config": cfg.to_json()}, cfg, "\n".join(lines), out)
    if res.disagreement:
        return EXIT_DISAGREE
    return EXIT_OK if res.passed else EXIT_NEGATIVE


def cmd_centralizer(args, cfg: RunConfig, out) -> int:
    lam = _parse_partition(args.partition)
    kind = _kind(args, lam.n)
    cz = centralizer_basis(jordan_nilpotent(lam), kind)
    stats = orbit_stats(lam)
    est = index_monte_carlo(cz, trials=cfg.trials, height=cfg.height, rng=cfg.seed)
    res = {"partition": str(lam), "algebra": str(kind), "centralizer_dim": cz.dim,
           "orbit_dim": stats.orbit_dim, "spherical": stats.spherical,
           "index_upper_bound": est.upper_bound_on_index, "config": cfg.to_json()}
    text = (f"centraliser of {lam} in {kind}: dim {cz.dim}\n"
            f"orbit dim {stats.orbit_dim}, spherical {stats.spherical}\n"
            f"monte-carlo index <= {est.upper_bound_on_index}")
    if args.basis:
        res["basis"] = [_mat_json(m) for m in cz.mats]
        text += "\n" + "\n\n".join(
            "\n".join(" ".join(f"{ratlin.format_rational(x):>3}" for x in row) for row in m)
            for m in cz.mats)
    _emit(res, cfg, text, out)
    return EXIT_OK


def cmd_meander(args, cfg: RunConfig, out) -> int:
    spec = _parse_seaweed(args.seaweed)
    g = meander(spec)
    res = {"seaweed": str(spec), **g.to_json(),
           "index_gl": dk_index(spec, GL), "index_sl": dk_index(spec, SL)}
    text = (f"{spec}\n{g.render()}\n"
            f"index: gl {res['index_gl']}, sl {res['index_sl']}")
    _emit(res, cfg, text, out)
    return EXIT_OK


# -- parser ----------------------------------------------------------------

def _add_globals(p: argparse.ArgumentParser, defaults: bool) -> None:
    sup = {} if defaults else {"default": argparse.SUPPRESS}
    p.add_argument("--seed", type=int, **({"default": None} if defaults else sup),
                   help="root seed (default 1, or $STRANGE_SEED)")
    p.add_argument("--trials", type=int, **({"default": 8} if defaults else sup))
    p.add_argument("--height", type=int, **({"default": 10} if defaults else sup))
    p.add_argument("--format", choices=("text", "json"), **({"default": "text"} if defaults else sup))
    p.add_argument("--parallel", action="store_true", **({"default": False} if defaults else sup))


def _add_kind(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--sl", action="store_true", help="work in sl_n (default)")
    g.add_argument("--gl", action="store_true", help="work in gl_n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strangeorbits",
                                     description="Strange nilpotent orbits and complementary subalgebras.")
    _add_globals(parser, True)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", parents=[common], help="index of a seaweed, parabolic or basis")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--borel", type=int, metavar="N")
    src.add_argument("--parabolic", metavar="A", help="cut points, e.g. '1' for the (1, n-1) parabolic, or Levi roots as 'A={2,3}'")
    src.add_argument("--seaweed", metavar="SPEC", help="'a|b|c / d|e'")
    src.add_argument("--basis", metavar="FILE", help="JSON witness/basis file")
    p.add_argument("--n", type=int)
    _add_kind(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("check", parents=[common], help="test a complementary subalgebra")
    p.add_argument("--partition", required=True)
    p.add_argument("--witness", required=True, help="fig1, solvable, flag2, flag3 or a JSON file")
    p.add_argument("--save", metavar="FILE", help="write the witness matrices to FILE")
    _add_kind(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("survey", parents=[common], help="classify every nilpotent orbit")
    p.add_argument("n", type=int)
    _add_kind(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("reproduce", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("centralizer", parents=[common], help="centraliser of a nilpotent")
    p.add_argument("--partition", required=True)
    p.add_argument("--basis", action="store_true", help="also print the basis")
    _add_kind(p)
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("meander", parents=[common], help="meander graph of a seaweed")
    p.add_argument("--seaweed", required=True)
    p.set_defaults(func=cmd_meander)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        seed = args.seed if args.seed is not None else default_seed()
        cfg = RunConfig(seed, args.trials, args.height, args.format, args.parallel)
        return args.func(args, cfg, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
