"""Command line interface: ``nlfourier {analyze,reconstruct,verify,lebesgue}``.

Floats are written with ``repr`` (shortest round-trip form) and nothing
time-dependent enters the output, so identical arguments give identical
files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .approx import THEOREM_IDS, approximation_error, verify_corpus
from .bernstein import bernstein_sweep
from .kernels import lebesgue_constant
from .numerics import GridSpec, read_csv_signal
from .phase import PhaseParam
from .signals import CORPUS, builtin
from .transform import (
    NlPolynomial,
    analyze,
    cesaro_coeffs,
    coeffs_from_json,
    coeffs_to_json,
    read_coeffs_csv,
    synthesize,
    write_coeffs_csv,
)

ALL_THEOREMS = (*THEOREM_IDS, "bernstein")
DEFAULT_MODULI = (0.0, 0.3, 0.7, 0.95)
DEFAULT_DEGREES = (2, 4, 8, 16, 32, 64, 128)
DEFAULT_BERNSTEIN_DEGREES = (1, 2, 4, 8, 16, 32, 64)


class ConfigError(ValueError):
    """Invalid command line configuration."""


@dataclass
class RunConfig:
    command: str
    a: list = field(default_factory=list)
    n: list = field(default_factory=list)
    p: list = field(default_factory=list)
    grid: int | None = None
    signal: list = field(default_factory=list)
    csv: str | None = None
    coeffs: str | None = None
    out: str | None = None
    format: str = "csv"
    seed: int = 0
    theorem: list = field(default_factory=list)
    operator: str = "both"
    points: int = 512
    samples: str | None = None
    method: str = "quadrature"
    trials: int = 200

    def validate(self) -> "RunConfig":
        if self.format not in ("csv", "json"):
            raise ConfigError(f"--format must be csv or json, got {self.format!r}")
        if self.grid is not None and (self.grid < 16 or self.grid & (self.grid - 1)):
            raise ConfigError(f"--grid must be a power of two >= 16, got {self.grid}")
        for mod, ang in self.a:
            try:
                PhaseParam(mod, ang)
            except ValueError as exc:
                raise ConfigError(f"--a {mod},{ang}: {exc}") from None
        for p in self.p:
            if not p >= 1.0:
                raise ConfigError(f"--p values must be >= 1, got {p}")
        if any(n < 0 for n in self.n):
            raise ConfigError("--n values must be nonnegative")
        if self.command in ("analyze", "reconstruct"):
            sources = bool(self.signal) + bool(self.csv) + bool(self.coeffs)
            if sources != 1:
                raise ConfigError("give exactly one of --signal, --csv or --coeffs")
            if self.coeffs and self.command == "analyze":
                raise ConfigError("--coeffs is only accepted by reconstruct")
            if len(self.signal) > 1:
                raise ConfigError("analyze/reconstruct take a single --signal")
            if len(self.a) > 1:
                raise ConfigError("analyze/reconstruct take a single --a")
            if self.command == "analyze" and len(self.n) != 1:
                raise ConfigError("analyze needs a single degree --n")
            if self.command == "reconstruct" and not self.coeffs and not self.n:
                raise ConfigError("reconstruct needs --n")
        if self.command == "reconstruct" and self.operator not in ("partial_sum", "cesaro", "both"):
            raise ConfigError(f"--operator must be partial_sum, cesaro or both, got {self.operator!r}")
        if self.command == "verify":
            bad = [t for t in self.theorem if t not in ALL_THEOREMS]
            if bad:
                raise ConfigError(f"unknown --theorem {bad}; choose from all, {', '.join(ALL_THEOREMS)}")
            if self.csv or self.coeffs:
                raise ConfigError("verify runs on builtin signals only")
        if self.command == "lebesgue" and not self.n:
            raise ConfigError("lebesgue needs a nonempty --n list")
        if self.points < 16:
            raise ConfigError("--points must be at least 16")
        return self

    def phase(self) -> PhaseParam:
        mod, ang = self.a[0] if self.a else (0.0, 0.0)
        return PhaseParam(mod, ang)

    def as_meta(self) -> dict:
        cfg = asdict(self)
        cfg["a"] = [list(x) for x in self.a]
        cfg["p"] = [_num(p) for p in self.p]
        return cfg


# --- parsing helpers ---------------------------------------------------------


def _num(x: float):
    return x if math.isfinite(x) else ("inf" if x > 0 else "-inf")


def _fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return repr(x)


def parse_phase(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise argparse.ArgumentTypeError(f"expected modulus[,angle], got {text!r}")
    try:
        mod = float(parts[0])
        ang = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected numbers in {text!r}") from None
    return mod, ang


def parse_degrees(text: str) -> list[int]:
    """``4``, ``2,4,8`` or a dyadic range ``2..128``."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if ".." in item:
            lo, hi = (int(x) for x in item.split(".."))
            if lo < 1 or hi < lo:
                raise argparse.ArgumentTypeError(f"bad dyadic range {item!r}")
            k = lo
            while k <= hi:
                out.append(k)
                k *= 2
        else:
            try:
                out.append(int(item))
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad degree {item!r}") from None
    return out


def parse_ps(text: str) -> list[float]:
    out = []
    for item in text.split(","):
        item = item.strip().lower()
        out.append(math.inf if item in ("inf", "infinity") else float(item))
    return out


def _csv_list(text: str) -> list[str]:
    return [s for s in text.split(",") if s]


def _signal_list(text: str) -> list[str]:
    # ';' separates signals because ',' already separates signal parameters
    out: list[str] = []
    for item in text.split(";"):
        item = item.strip()
        if item:
            out.append(item)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nlfourier",
                                     description="Nonlinear Fourier analysis in Moebius phases.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, signal=True):
        if signal:
            p.add_argument("--signal", type=_signal_list, default=[],
                           help="builtin name[:key=value,...]; separate several with ';'")
            p.add_argument("--csv", help="t,value[,imag] samples of one period")
        p.add_argument("--a", type=parse_phase, action="append", default=[],
                       metavar="MODULUS[,ANGLE]", help="phase parameter; angle in radians")
        p.add_argument("--n", type=parse_degrees, default=[], help="degree list, e.g. 8 or 2,4 or 2..128")
        p.add_argument("--grid", type=int, help="quadrature grid points (power of two)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--format", default="csv", choices=("csv", "json"))

    p = sub.add_parser("analyze", help="nonlinear Fourier coefficients")
    common(p)
    p.add_argument("--method", default="quadrature", choices=("quadrature", "fft"))

    p = sub.add_parser("reconstruct", help="partial sums / Cesaro means and their errors")
    common(p)
    p.add_argument("--coeffs", help="coefficient file written by analyze")
    p.add_argument("--p", type=parse_ps, default=[math.inf], help="norm exponents, e.g. 1,2,inf")
    p.add_argument("--operator", default="both")
    p.add_argument("--points", type=int, default=512, help="output samples per period")
    p.add_argument("--samples", help="also write reconstruction samples to this CSV")

    p = sub.add_parser("verify", help="run the inequality checks; exit 1 on any failure")
    common(p)
    p.add_argument("--theorem", type=_csv_list, default=["all"],
                   help=f"all or a comma list of: {', '.join(ALL_THEOREMS)}")
    p.add_argument("--p", type=parse_ps, default=[1.0, 2.0, 4.0])
    p.add_argument("--trials", type=int, default=200, help="random polynomials per bernstein cell")

    p = sub.add_parser("lebesgue", help="table of Lebesgue constants")
    common(p, signal=False)
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    theorems = getattr(ns, "theorem", [])
    if "all" in theorems:
        theorems = list(ALL_THEOREMS)
    return RunConfig(
        command=ns.command,
        a=ns.a,
        n=ns.n,
        p=getattr(ns, "p", []),
        grid=ns.grid,
        signal=getattr(ns, "signal", []),
        csv=getattr(ns, "csv", None),
        coeffs=getattr(ns, "coeffs", None),
        out=ns.out,
        format=ns.format,
        seed=ns.seed,
        theorem=theorems,
        operator=getattr(ns, "operator", "both"),
        points=getattr(ns, "points", 512),
        samples=getattr(ns, "samples", None),
        method=getattr(ns, "method", "quadrature"),
        trials=getattr(ns, "trials", 200),
    ).validate()


# --- output helpers --------------------------------------------------------------


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(x) if not isinstance(x, str) else x for x in row])
    return buf.getvalue()


def _json_text(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _load_signal(cfg: RunConfig, a: PhaseParam):
    if cfg.csv:
        return read_csv_signal(cfg.csv, cfg.grid)
    return builtin(cfg.signal[0], a, cfg.seed)


# --- commands ------------------------------------------------------------------


def cmd_analyze(cfg: RunConfig) -> int:
    a = cfg.phase()
    f = _load_signal(cfg, a)
    n = cfg.n[0]
    cv = analyze(f, a, n, GridSpec(cfg.grid) if cfg.grid else None, method=cfg.method)
    meta = {"signal": f.name, "method": cfg.method}
    if cfg.format == "json":
        _emit(_json_text(coeffs_to_json(cv, meta)), cfg.out)
    else:
        buf = io.StringIO()
        write_coeffs_csv(cv, buf, meta)
        _emit(buf.getvalue(), cfg.out)
    return 0


def _load_coeffs(path: str):
    if path.endswith(".json"):
        with open(path) as fh:
            return coeffs_from_json(json.load(fh))
    return read_coeffs_csv(path)[0]


def cmd_reconstruct(cfg: RunConfig) -> int:
    t = -math.pi + 2.0 * math.pi * np.arange(cfg.points) / cfg.points
    if cfg.coeffs:
        cv = _load_coeffs(cfg.coeffs)
        for n in cfg.n:
            if n > cv.degree:
                raise ConfigError(f"--n {n} exceeds the stored degree {cv.degree}")
        cvs = [cv.truncate(n) for n in cfg.n] if cfg.n else [cv]
        cols, header = [t], ["t"]
        for c in cvs:
            vals = synthesize(c, t)
            cols += [np.real(vals), np.imag(vals)]
            header += [f"S_{c.degree}_re", f"S_{c.degree}_im"]
        _emit(_csv_text(header, zip(*cols)), cfg.out)
        return 0

    a = cfg.phase()
    f = _load_signal(cfg, a)
    ops = ["partial_sum", "cesaro"] if cfg.operator == "both" else [cfg.operator]
    grid = GridSpec(cfg.grid) if cfg.grid else None
    cv = analyze(f, a, max(cfg.n), grid)
    rows = []
    sample_cols, sample_header = [t, np.real(f(t))], ["t", "f"]
    for op in ops:
        for n in cfg.n:
            sub = cv.truncate(n)
            if op == "cesaro":
                sub = cesaro_coeffs(sub)
            for p in cfg.p:
                err = approximation_error(f, a, n, op, p, coeffs=cv)
                rows.append([op, n, p, err])
            sample_cols.append(np.real(NlPolynomial(sub)(t)))
            sample_header.append(f"{op}_{n}")
    if cfg.format == "json":
        doc = {"meta": {"version": __version__, "config": cfg.as_meta(), "signal": f.name},
               "errors": [{"operator": r[0], "n": r[1], "p": _num(r[2]), "error": r[3]}
                          for r in rows]}
        _emit(_json_text(doc), cfg.out)
    else:
        _emit(_csv_text(["operator", "n", "p", "error"], rows), cfg.out)
    if cfg.samples:
        _emit(_csv_text(sample_header, zip(*sample_cols)), cfg.samples)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    moduli = [PhaseParam(m, ang) for m, ang in cfg.a] or [PhaseParam(m) for m in DEFAULT_MODULI]
    signals = cfg.signal or list(CORPUS)
    verifier_ids = [t for t in cfg.theorem if t in THEOREM_IDS]
    reports = []
    if verifier_ids:
        degrees = sorted(set(cfg.n)) if cfg.n else list(DEFAULT_DEGREES)
        reports += verify_corpus(signals, moduli, degrees, [p for p in cfg.p if math.isfinite(p)],
                                 verifier_ids, cfg.seed)
    if "bernstein" in cfg.theorem:
        degrees = sorted(set(n for n in cfg.n if n >= 1)) if cfg.n else list(DEFAULT_BERNSTEIN_DEGREES)
        ps = [p for p in cfg.p if math.isfinite(p)]
        for a in moduli:
            reports += bernstein_sweep(degrees, [a.modulus], ps, cfg.trials, cfg.seed, a.angle)
    docs = [r.to_dict() for r in reports]
    failed = [d for d in docs if not d["pass"]]
    doc = {"meta": {"version": __version__, "config": cfg.as_meta()}, "reports": docs}
    if cfg.format == "csv":
        rows = [[d["theorem_id"], _fmt(d["context"]["a"][0]), d["context"].get("n"),
                 d["context"]["p"] if isinstance(d["context"]["p"], str) else _fmt(d["context"]["p"]),
                 d["lhs"], d["rhs"], "true" if d["pass"] else "false"] for d in docs]
        rows = [[("" if x is None else x) for x in r] for r in rows]
        csv_path = cfg.out or "verify-report.csv"
        _emit(_csv_text(["theorem_id", "a", "n", "p", "lhs", "rhs", "pass"], rows), csv_path)
        # the full JSON report accompanies the summary
        json_path = os.path.splitext(csv_path)[0] + ".json"
    else:
        json_path = cfg.out or "verify-report.json"
    _emit(_json_text(doc), json_path)
    for d in failed:
        ctx = d["context"]
        print(f"FAIL {d['theorem_id']} signal={ctx.get('signal')} a={ctx.get('a')} "
              f"n={ctx.get('n')} p={ctx.get('p')} lhs={d['lhs']!r} rhs={d['rhs']!r}",
              file=sys.stderr)
    print(f"{len(docs) - len(failed)}/{len(docs)} checks passed", file=sys.stderr)
    return 0 if not failed else 1


def cmd_lebesgue(cfg: RunConfig) -> int:
    rows = []
    for n in cfg.n:
        lam = lebesgue_constant(n)
        ratio = lam / math.log(n) if n >= 2 else math.nan
        rows.append([n, lam, ratio])
    if cfg.format == "json":
        doc = {"meta": {"version": __version__, "config": cfg.as_meta()},
               "rows": [{"n": r[0], "lambda_n": r[1],
                         "lambda_n_over_log_n": None if math.isnan(r[2]) else r[2]} for r in rows]}
        _emit(_json_text(doc), cfg.out)
    else:
        _emit(_csv_text(["n", "lambda_n", "lambda_n_over_log_n"], rows), cfg.out)
    return 0


COMMANDS = {
    "analyze": cmd_analyze,
    "reconstruct": cmd_reconstruct,
    "verify": cmd_verify,
    "lebesgue": cmd_lebesgue,
}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = _config(ns)
        return COMMANDS[cfg.command](cfg)
    except (ConfigError, ValueError, OSError, RuntimeError, FloatingPointError) as exc:
        print(f"nlfourier {ns.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
