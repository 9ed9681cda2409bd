"""Command line front end.

Exit codes: 0 all checks passed, 1 a verification failed, 2 the multiplier
vector was rejected, 64 usage error.  Exact values are printed as ``p/q``
strings; floats only appear in ``plot-data`` CSV.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from .algebra import RationalPolynomial
from .denumerant import GeneratorVector, denumerant
from .relations import (
    DegenerateInput,
    InvalidDelta,
    check_bell_conjecture,
    generate_relation,
    numeric_identities,
    random_conjecture_draw,
    relation_continuous_profile,
    validate_delta,
    verify_bernoulli_relations,
    verify_poly_relation,
    verify_relation_integer,
)

COMMANDS = ("denumerant", "relation-gen", "relation-verify", "identities", "conjecture", "plot-data")
EXIT_OK, EXIT_FAIL, EXIT_BAD_DELTA, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    d: tuple[int, ...] | None = None
    delta: tuple[int, ...] | None = None
    s_range: tuple[int, int] = (0, 200)
    grid: tuple[float, float, float] = (0.0, 16.0, 0.01)
    seed: int = 0
    output_format: str = "json"
    m_values: tuple[int, ...] = (2, 3, 4, 5)
    draws: int = 100

    def to_argv(self) -> list[str]:
        argv = [self.command]
        if self.d is not None:
            argv += ["--d", _ints(self.d)]
        if self.delta is not None:
            argv += ["--delta", _ints(self.delta)]
        argv += ["--s-min", str(self.s_range[0]), "--s-max", str(self.s_range[1]),
                 "--grid", ",".join(repr(float(x)) for x in self.grid),
                 "--seed", str(self.seed), "--format", self.output_format,
                 "--m", _ints(self.m_values), "--draws", str(self.draws)]
        return argv

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, text: str) -> RunConfig:
        raw = json.loads(text)
        for key in ("d", "delta", "s_range", "grid", "m_values"):
            if raw.get(key) is not None:
                raw[key] = tuple(raw[key])
        return cls(**raw)


def _ints(v) -> str:
    return ",".join(str(x) for x in v)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out or any(x < 1 for x in out):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return out


def _grid(text: str) -> tuple[float, float, float]:
    try:
        lo, hi, step = (float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo,hi,step, got {text!r}")
    if step <= 0 or hi < lo:
        raise argparse.ArgumentTypeError("grid needs lo <= hi and step > 0")
    return lo, hi, step


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="scalarpart", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--d", type=_int_list, help="generators, e.g. 2,3,6,7")
    p.add_argument("--delta", type=_int_list, help="multipliers, e.g. 1,2,1,1")
    p.add_argument("--s", type=int, help="single argument for the denumerant command")
    p.add_argument("--s-min", type=int, default=0)
    p.add_argument("--s-max", type=int, default=200)
    p.add_argument("--grid", type=_grid, default=(0.0, 16.0, 0.01), help="lo,hi,step")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", dest="output_format", choices=("json", "csv"), default="json")
    p.add_argument("--m", dest="m_values", type=_int_list, default=(2, 3, 4, 5),
                   help="conjecture: numbers of variables to test")
    p.add_argument("--draws", type=int, default=100, help="conjecture: draws per m")
    return p


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    s_range = (ns.s, ns.s) if ns.s is not None else (ns.s_min, ns.s_max)
    if s_range[0] > s_range[1]:
        raise UsageError("--s-min exceeds --s-max")
    if ns.command != "conjecture" and ns.d is None:
        raise UsageError(f"{ns.command} requires --d")
    if ns.command in ("relation-gen", "relation-verify", "identities", "plot-data") and ns.delta is None:
        raise UsageError(f"{ns.command} requires --delta")
    return RunConfig(
        command=ns.command, d=ns.d, delta=ns.delta, s_range=s_range, grid=tuple(ns.grid),
        seed=ns.seed, output_format=ns.output_format, m_values=tuple(ns.m_values), draws=ns.draws,
    )


def _poly(p: RationalPolynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _report(cfg: RunConfig, result, status: str) -> str:
    body = {
        "command": cfg.command,
        "input": {"d": list(cfg.d) if cfg.d else None,
                  "delta": list(cfg.delta) if cfg.delta else None},
        "result": result,
        "status": status,
    }
    return json.dumps(body, indent=2)


def _cmd_denumerant(cfg: RunConfig):
    lo, hi = cfg.s_range
    values = [(s, denumerant(s, cfg.d)) for s in range(lo, hi + 1)]
    if cfg.output_format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "value"])
        w.writerows(values)
        return buf.getvalue().rstrip("\n"), EXIT_OK
    if lo == hi:
        result = {"s": lo, "value": values[0][1]}
    else:
        result = {"values": [{"s": s, "value": v} for s, v in values]}
    return _report(cfg, result, "pass"), EXIT_OK


def _relation_result(r):
    return {
        "terms": [
            {"raw": list(t.raw_generators), "s_multiplier": t.s_multiplier, "sign": t.sign,
             "shift": t.shift, "abs": list(t.abs_generators)}
            for t in r.terms
        ]
    }


def _cmd_relation_gen(cfg: RunConfig):
    r = generate_relation(cfg.d, cfg.delta)
    return _report(cfg, _relation_result(r), "pass"), EXIT_OK


def _cmd_relation_verify(cfg: RunConfig):
    r = generate_relation(cfg.d, cfg.delta)
    lo, hi = cfg.s_range
    rep = verify_relation_integer(r, lo, hi)
    poly_ok, residual, parts = verify_poly_relation(r)
    bern = verify_bernoulli_relations(r)
    ok = rep.passed and poly_ok and all(v == 0 for v in bern)
    result = _relation_result(r)
    result.update(
        integer_check={"range": [lo, hi], "violations": [[s, v] for s, v in rep.violations]},
        poly_parts=[_poly(p) for p in parts],
        poly_residual=_poly(residual),
        bernoulli_residuals=[str(v) for v in bern],
    )
    return _report(cfg, result, "pass" if ok else "fail"), EXIT_OK if ok else EXIT_FAIL


def _cmd_identities(cfg: RunConfig):
    r = generate_relation(cfg.d, cfg.delta)
    ids = numeric_identities(r)
    keys = ("sigma_sum_ratio", "lead_term", "second_term", "third_term")
    ok = all(ids[k] is None or ids[k] == 1 for k in keys)
    result = {k: _jsonable(v) for k, v in ids.items()}
    return _report(cfg, result, "pass" if ok else "fail"), EXIT_OK if ok else EXIT_FAIL


def _cmd_conjecture(cfg: RunConfig):
    rng = random.Random(cfg.seed)
    per_m = []
    counterexamples = []
    for m in cfg.m_values:
        checked = 0
        for _ in range(cfg.draws):
            x, y = random_conjecture_draw(rng, m)
            for k in range(m):
                try:
                    v = check_bell_conjecture(x, y, k)
                except DegenerateInput:
                    continue
                checked += 1
                if v != 0:
                    counterexamples.append({"x": _jsonable(x), "y": _jsonable(y), "k": k, "value": str(v)})
        per_m.append({"m": m, "draws": cfg.draws, "evaluations": checked})
    ok = not counterexamples
    result = {"seed": cfg.seed, "per_m": per_m, "counterexamples": counterexamples}
    return _report(cfg, result, "pass" if ok else "fail"), EXIT_OK if ok else EXIT_FAIL


def emit_plot_data(cfg: RunConfig) -> str:
    r = generate_relation(cfg.d, cfg.delta)
    s, w = relation_continuous_profile(r, *cfg.grid)
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["s", "w", "is_integer"])
    for a, b in zip(s, w):
        out.writerow([format(a, ".12g"), format(b, ".12g"), int(float(a).is_integer())])
    return buf.getvalue().rstrip("\n")


def _cmd_plot_data(cfg: RunConfig):
    return emit_plot_data(cfg), EXIT_OK


_DISPATCH = {
    "denumerant": _cmd_denumerant,
    "relation-gen": _cmd_relation_gen,
    "relation-verify": _cmd_relation_verify,
    "identities": _cmd_identities,
    "conjecture": _cmd_conjecture,
    "plot-data": _cmd_plot_data,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute ``cfg``; return ``(exit_status, text)``."""
    try:
        if cfg.d is not None:
            GeneratorVector(cfg.d)
        if cfg.delta is not None and cfg.d is not None:
            if len(cfg.delta) != len(cfg.d):
                return EXIT_USAGE, f"--delta has {len(cfg.delta)} entries, --d has {len(cfg.d)}"
            bad = validate_delta(cfg.d, cfg.delta)
            if bad:
                return EXIT_BAD_DELTA, _report(cfg, {"violations": bad}, "invalid-delta")
        text, code = _DISPATCH[cfg.command](cfg)
    except InvalidDelta as exc:
        return EXIT_BAD_DELTA, _report(cfg, {"violations": exc.violations}, "invalid-delta")
    return code, text


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"scalarpart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # argparse: --help exits 0, bad flags exit 64
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    code, text = run(cfg)
    stream = sys.stderr if code == EXIT_USAGE else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
