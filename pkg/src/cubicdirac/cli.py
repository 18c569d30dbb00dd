"""Command line entry point.

    cubicdirac verify                       # default instance suite
    cubicdirac cohomology --n 3 --composition 2+1 --lambda 1,0 --format csv
    cubicdirac scan --n 2 --lmax 20
    cubicdirac --config run.ini verify

Exit codes: 0 every check passed, 1 some identity or estimate failed,
2 bad configuration, usage or I/O problem.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import hashlib
import io
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import __version__
from .dirac import VARIANTS, cohomology, dirac_complex, hodge_decompose, identity_suite
from .fourier import (SmoothRepModel, casimir_growth_series, cg_scan, dimension_estimate_check,
                      global_T, seminorm_estimate_check)
from .lie import Weight, format_composition, parabolic_split, parse_composition, parse_weight
from .linalg import format_rational
from .representations import build_irrep
from .weights import dominant_weights

COMMANDS = ("verify", "cohomology", "hodge", "scan", "series", "fourier")
INSTANCE_COMMANDS = ("verify", "cohomology", "hodge")

DEFAULT_SUITE = (
    (2, (1, 1), ((0,), (1,), (2,), (3,), (4,))),
    (3, (1, 1, 1), ((0, 0), (1, 0), (1, 1), (2, 1))),
    (3, (2, 1), ((0, 0), (1, 0), (1, 1))),
    (4, (2, 2), ((1, 0, 0),)),
)


class ConfigError(ValueError):
    pass


@dataclass
class Instance:
    n: int
    composition: tuple[int, ...]
    lambdas: list[Weight]

    def to_dict(self) -> dict:
        return {"n": self.n, "composition": format_composition(self.composition),
                "lambdas": [str(l) for l in self.lambdas]}


@dataclass
class RunConfig:
    command: str
    instances: list[Instance]
    lmax: int = 6
    n_exps: tuple[int, ...] = (4,)
    m_exps: tuple[int, ...] = (0, 1, 2, 3, 4)
    m_exp: int = 2
    samples: int = 1000
    seed: int = 0
    growth: int = 0
    flip_contraction: bool = False
    format: str = "json"
    out: str | None = None

    def to_dict(self) -> dict:
        """Everything that affects results; the output path is left out."""
        d = asdict(self)
        d.pop("out")
        d["instances"] = [i.to_dict() for i in self.instances]
        d["n_exps"] = list(self.n_exps)
        d["m_exps"] = list(self.m_exps)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        inst = [Instance(i["n"], parse_composition(i["composition"]),
                         [parse_weight(l) for l in i["lambdas"]]) for i in d["instances"]]
        kw = {k: v for k, v in d.items() if k != "instances"}
        kw["n_exps"] = tuple(kw.get("n_exps", (4,)))
        kw["m_exps"] = tuple(kw.get("m_exps", (0, 1, 2, 3, 4)))
        return cls(instances=inst, **kw)

    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


# ---------------------------------------------------------------------------
# configuration


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubicdirac",
                                 description="Exact checks for cubic Dirac operators on sl_n.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", help="INI file with [instance], [run] and [output] sections")
    ap.add_argument("--n", type=int, help="rank + 1 of sl_n")
    ap.add_argument("--composition", help="block sizes of the parabolic, e.g. 2+1")
    ap.add_argument("--lambda", dest="lambdas", action="append", metavar="WEIGHT",
                    help="highest weight in fundamental coordinates, e.g. 1,0 (repeatable)")
    ap.add_argument("--lmax", type=int, help="truncation bound on |lambda|")
    ap.add_argument("--n-exp", type=int, action="append", dest="n_exps")
    ap.add_argument("--m-exp", type=int, action="append", dest="m_exps",
                    help="Casimir exponent (repeatable for series; first value for fourier)")
    ap.add_argument("--samples", type=int)
    ap.add_argument("--seed", type=int)
    ap.add_argument("--growth", type=int, help="multiplicity growth exponent of the model")
    ap.add_argument("--out", help="output file (default: stdout)")
    ap.add_argument("--format", choices=("json", "csv"))
    ap.add_argument("--flip-contraction-sign", action="store_true", default=None,
                    help="debug: use the opposite sign for the Clifford contraction")
    return ap


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.replace(";", ",").split(",") if t.strip())


def read_config_file(path: str) -> dict:
    cp = configparser.ConfigParser()
    try:
        with open(path) as fh:
            cp.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    except configparser.Error as exc:
        raise ConfigError(f"bad config {path}: {exc}") from None
    out: dict = {}
    try:
        if cp.has_section("instance"):
            sec = cp["instance"]
            if "n" in sec:
                out["n"] = sec.getint("n")
            if "composition" in sec:
                out["composition"] = sec["composition"]
            if "lambdas" in sec:
                out["lambdas"] = [t.strip() for t in sec["lambdas"].split(";") if t.strip()]
        if cp.has_section("run"):
            sec = cp["run"]
            for key in ("lmax", "m_exp", "samples", "seed", "growth"):
                if key in sec:
                    out[key] = sec.getint(key)
            for key in ("n_exps", "m_exps"):
                if key in sec:
                    out[key] = _int_list(sec[key])
            if "flip_contraction_sign" in sec:
                out["flip_contraction"] = sec.getboolean("flip_contraction_sign")
        if cp.has_section("output"):
            sec = cp["output"]
            if "format" in sec:
                out["format"] = sec["format"].strip()
            if "out" in sec:
                out["out"] = sec["out"].strip()
    except ValueError as exc:
        raise ConfigError(f"bad value in {path}: {exc}") from None
    return out


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge config file values with flag overrides and validate."""
    vals = read_config_file(args.config) if args.config else {}
    for key in ("n", "composition", "lmax", "samples", "seed", "growth", "format", "out"):
        v = getattr(args, key, None)
        if v is not None:
            vals[key] = v
    if args.lambdas is not None:
        vals["lambdas"] = args.lambdas
    if args.n_exps:
        vals["n_exps"] = tuple(args.n_exps)
    if args.m_exps:
        vals["m_exps"] = tuple(args.m_exps)
        if args.command == "fourier":
            vals["m_exp"] = args.m_exps[0]
    if args.flip_contraction_sign:
        vals["flip_contraction"] = True

    cmd = args.command
    try:
        instances = _instances(cmd, vals)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    kw = {k: vals[k] for k in ("lmax", "n_exps", "m_exps", "m_exp", "samples", "seed", "growth",
                               "flip_contraction", "format", "out") if k in vals}
    cfg = RunConfig(cmd, instances, **kw)
    if cfg.format not in ("json", "csv"):
        raise ConfigError(f"format must be json or csv, not {cfg.format!r}")
    for key in ("lmax", "samples", "growth", "m_exp"):
        if getattr(cfg, key) < 0:
            raise ConfigError(f"{key} must be non-negative")
    if any(v < 0 for v in cfg.n_exps + cfg.m_exps):
        raise ConfigError("series exponents must be non-negative")
    return cfg


def _instances(cmd: str, vals: dict) -> list[Instance]:
    if "n" not in vals:
        if "composition" in vals or "lambdas" in vals:
            raise ValueError("--composition/--lambda need --n")
        if cmd in INSTANCE_COMMANDS:
            return [Instance(n, comp, [Weight(l) for l in lams]) for n, comp, lams in DEFAULT_SUITE]
        return [Instance(2, (1, 1), [Weight((0,))])]
    n = vals["n"]
    if n < 2:
        raise ValueError("n must be at least 2")
    comp = parse_composition(vals["composition"]) if "composition" in vals else (1,) * n
    parabolic_split(n, comp)
    if "lambdas" in vals:
        lams = [parse_weight(t) for t in vals["lambdas"]]
    else:
        lams = [Weight.zero(n - 1)]
    if cmd in INSTANCE_COMMANDS and not lams:
        raise ValueError("highest weight list is empty")
    for lam in lams:
        if lam.rank != n - 1:
            raise ValueError(f"weight {lam} needs {n - 1} coordinates")
        if not (lam.is_dominant() and lam.is_integral()):
            raise ValueError(f"weight {lam} is not dominant integral")
    return [Instance(n, comp, lams)]


# ---------------------------------------------------------------------------
# commands; each returns (ok, json payload, csv header, csv rows)


def _instance_jobs(cfg: RunConfig):
    for inst in cfg.instances:
        p = parabolic_split(inst.n, inst.composition)
        for lam in inst.lambdas:
            cx = dirac_complex(build_irrep(inst.n, lam), p, cfg.flip_contraction)
            yield inst, lam, cx


def _head(inst: Instance, lam: Weight) -> dict:
    return {"algebra": f"sl{inst.n}", "composition": format_composition(inst.composition),
            "lambda": str(lam)}


def _fmt(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, Weight):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_fmt(v) for v in x]
    return x


def cmd_verify(cfg: RunConfig):
    out, rows, ok = [], [], True
    for inst, lam, cx in _instance_jobs(cfg):
        results, summary = identity_suite(cx)
        entry = _head(inst, lam)
        entry.update(_fmt(summary))
        entry["identities"] = [{"identity_name": r.name, "status": r.status,
                                "residual_rank": r.residual_rank, "detail": r.detail}
                               for r in results]
        entry["status"] = "pass" if all(r.ok for r in results) else "fail"
        ok = ok and entry["status"] == "pass"
        out.append(entry)
        for r in results:
            rows.append([entry["algebra"], entry["composition"], entry["lambda"], r.name,
                         r.status, "" if r.residual_rank is None else r.residual_rank])
    header = ["algebra", "composition", "lambda", "identity_name", "status", "residual_rank"]
    return ok, {"instances": out}, header, rows


def _weights_text(weights) -> str:
    return " ".join(f"{mu}x{m}" for mu, m in weights)


def cmd_cohomology(cfg: RunConfig):
    out, rows, ok = [], [], True
    for inst, lam, cx in _instance_jobs(cfg):
        tables = {v: cohomology(cx, v) for v in VARIANTS}
        agree = all(t.same_as(tables["harmonic"]) for t in tables.values())
        ok = ok and agree
        entry = _head(inst, lam)
        entry["agree"] = agree
        entry["tables"] = {}
        for v, t in tables.items():
            entry["tables"][v] = [{"degree": e.degree, "dim": e.dim,
                                   "weights": [{"weight": str(mu), "multiplicity": m}
                                               for mu, m in e.weights]}
                                  for e in t.entries]
            for e in t.entries:
                rows.append([entry["algebra"], entry["composition"], entry["lambda"], v,
                             e.degree, e.dim, _weights_text(e.weights)])
        out.append(entry)
    header = ["algebra", "composition", "lambda", "variant", "degree", "dim", "weights"]
    return ok, {"instances": out}, header, rows


HODGE_KEYS = ("ker_D", "im_D", "ker_d", "im_d", "ker_bd", "im_bd")


def cmd_hodge(cfg: RunConfig):
    out, rows, ok = [], [], True
    for inst, lam, cx in _instance_jobs(cfg):
        hd = hodge_decompose(cx, strict=False)
        entry = _head(inst, lam)
        entry["dims"] = hd.dims()
        entry["checks"] = {k: ("exact-pass" if v else "fail") for k, v in hd.checks.items()}
        entry["status"] = "pass" if hd.ok else "fail"
        ok = ok and hd.ok
        out.append(entry)
        dims = hd.dims()
        rows.append([entry["algebra"], entry["composition"], entry["lambda"]]
                    + [dims[k] for k in HODGE_KEYS] + [entry["status"]])
    header = ["algebra", "composition", "lambda", *HODGE_KEYS, "status"]
    return ok, {"instances": out}, header, rows


def cmd_scan(cfg: RunConfig):
    inst = cfg.instances[0]
    p = parabolic_split(inst.n, inst.composition)
    scan = cg_scan(p, cfg.lmax)
    dims = [dimension_estimate_check(p, lam)
            for lam in dominant_weights(inst.n - 1, cfg.lmax)]
    series = [casimir_growth_series(ne, me, cfg.lmax, inst.n)
              for ne in cfg.n_exps for me in cfg.m_exps]
    ok = scan.verdict and all(d.verdict for d in dims) and \
        all(s.values["monotone"] for s in series)
    rows = [[str(r.lam), str(r.mu), format_rational(r.c), r.dim_w] for r in scan.rows]
    if scan.values["min"] is not None:
        rows.append(["min", "", format_rational(scan.values["min"]), ""])
    payload = {"cg_scan": scan.to_json(),
               "cg_rows": [{"lambda": str(r.lam), "mu": str(r.mu), "c_value": format_rational(r.c),
                            "dim_W_mu": r.dim_w, "multiplicity": r.multiplicity}
                           for r in scan.rows],
               "dimension_estimates": [d.to_json() for d in dims],
               "growth_series": [s.to_json() for s in series]}
    return ok, payload, ["lambda", "mu", "c_value", "dim_W_mu"], rows


def cmd_series(cfg: RunConfig):
    n = cfg.instances[0].n
    reports = [casimir_growth_series(ne, me, cfg.lmax, n)
               for ne in cfg.n_exps for me in cfg.m_exps]
    rows = [[n, r.parameters["n_exp"], r.parameters["m_exp"], cfg.lmax,
             format_rational(r.values["sum"]), r.values["exponent"],
             str(r.values["monotone"]).lower(),
             "convergent" if r.verdict else "divergent"] for r in reports]
    ok = all(r.values["monotone"] for r in reports)
    header = ["n", "n_exp", "m_exp", "lmax", "partial_sum", "exponent", "monotone", "verdict"]
    return ok, {"series": [r.to_json() for r in reports]}, header, rows


def cmd_fourier(cfg: RunConfig):
    inst = cfg.instances[0]
    p = parabolic_split(inst.n, inst.composition)
    model = SmoothRepModel(inst.n, cfg.lmax, cfg.growth)
    semi = seminorm_estimate_check(model, cfg.m_exp, cfg.samples, cfg.seed)
    gt = global_T(model, p).report
    bound = 1 / gt.values["cg"]
    rows = [[str(b["lambda"]), format_rational(b["norm"]), format_rational(bound),
             "fail" if b["failed"] else "exact-pass"] for b in gt.values["blocks"]]
    payload = {"seminorm_estimate": semi.to_json(), "global_T": gt.to_json()}
    return semi.verdict and gt.verdict, payload, ["lambda", "norm_T", "bound", "status"], rows


HANDLERS = {"verify": cmd_verify, "cohomology": cmd_cohomology, "hodge": cmd_hodge,
            "scan": cmd_scan, "series": cmd_series, "fourier": cmd_fourier}


def render(cfg: RunConfig, ok: bool, payload: dict, header, rows) -> str:
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    doc = {"command": cfg.command, "config": cfg.to_dict(), "config_hash": cfg.digest(),
           "version": __version__, "status": "pass" if ok else "fail"}
    doc.update(payload)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def run(cfg: RunConfig) -> tuple[int, str]:
    ok, payload, header, rows = HANDLERS[cfg.command](cfg)
    return (0 if ok else 1), render(cfg, ok, payload, header, rows)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
    except ConfigError as exc:
        print(f"cubicdirac: config error: {exc}", file=sys.stderr)
        return 2
    code, text = run(cfg)
    if cfg.out:
        try:
            with open(cfg.out, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cubicdirac: cannot write {cfg.out}: {exc.strerror}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    if code:
        print(f"cubicdirac: {cfg.command} found failing checks", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
