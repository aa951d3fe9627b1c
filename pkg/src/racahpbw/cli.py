"""Command-line interface.

Exit codes: 0 ok, 1 a check returned false, 2 bad input. ``--format json``
emits one JSON object carrying ``schema_version``, ``command``, ``inputs``,
``status`` and a command-specific ``result``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Any, Dict, List, Optional

from . import analysis as an
from .errors import RacahError
from .exprlang import parse, print_canonical
from .freealg import exponents_to_word, format_word
from .racah import apply, d6_from_name
from .rewrite import check_confluence, reduce, set_default_fuel
from .suites import SUITE_NAMES, Settings, suite_checks

SCHEMA_VERSION = 1
EXIT_CODES = {"ok": 0, "fail": 1, "error": 2}


class UsageError(Exception):
    pass


@dataclass
class CliReport:
    command: str
    status: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    result: Dict[str, Any] = field(default_factory=dict)
    text: str = ""
    format: str = "text"

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def render(self) -> str:
        if self.format == "json":
            doc = {
                "schema_version": SCHEMA_VERSION,
                "command": self.command,
                "inputs": self.inputs,
                "status": self.status,
                "result": self.result,
            }
            return json.dumps(doc, sort_keys=True) + "\n"
        return self.text if self.text.endswith("\n") or not self.text else self.text + "\n"


def _json_scalar(c) -> str:
    return str(Fraction(c))


def _bool(b: bool) -> str:
    return "true" if b else "false"


def load_config(path: str) -> Dict[str, str]:
    """Read ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = value.strip("\"'")
    return out


def _settings(args: argparse.Namespace) -> Settings:
    cfg = Settings()
    known = {f.name for f in fields(Settings)}
    if getattr(args, "config", None):
        for key, value in load_config(args.config).items():
            if key not in known:
                raise UsageError(f"unknown config key {key!r}")
            setattr(cfg, key, value if key == "format" else _int(value, key))
    for key in known:
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, key, value)
    if cfg.format not in ("text", "json"):
        raise UsageError(f"unknown format {cfg.format!r}")
    return cfg


def _int(value: str, key: str) -> int:
    try:
        return int(value.replace("_", ""))
    except ValueError:
        raise UsageError(f"config key {key!r} needs an integer, got {value!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--config", default=argparse.SUPPRESS, help="key = value settings file")
    common.add_argument("--fuel", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    p = _Parser(prog="racahpbw", parents=[common], description="Exact computation in the Racah algebra.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    add("reduce", "normal form of an expression").add_argument("expr")
    eq = add("eq", "test two expressions for equality in the algebra")
    eq.add_argument("lhs")
    eq.add_argument("rhs")
    add("degree", "filtration degree").add_argument("expr")
    add("leading", "leading term").add_argument("expr")
    ap = add("apply", "image under a D6 element, e.g. sigma*tau^2")
    ap.add_argument("morphism")
    ap.add_argument("expr")
    add("confluence", "check every overlap ambiguity")
    ce = add("center", "exact center of R_n")
    ce.add_argument("--bound", type=int, required=True)
    ce.add_argument("--center-bound-max", dest="center_bound_max", type=int, default=argparse.SUPPRESS)
    ve = add("verify", "run a verification suite")
    ve.add_argument("suite")
    add("list-suites", "list verification suites")
    return p


def _poly_result(p) -> Dict[str, Any]:
    return {
        "result": print_canonical(p),
        "terms": [[format_word(w), _json_scalar(c)] for w, c in sorted(p.items())],
    }


def _dispatch(args: argparse.Namespace, cfg: Settings) -> CliReport:
    cmd = args.command
    if cmd == "reduce":
        p = reduce(parse(args.expr))
        return CliReport(cmd, "ok", {"expr": args.expr}, _poly_result(p), print_canonical(p))
    if cmd == "eq":
        diff = reduce(parse(args.lhs) - parse(args.rhs))
        equal = diff.is_zero()
        text = f"equal = {_bool(equal)}"
        if not equal:
            text += f"\ndifference = {print_canonical(diff)}"
        return CliReport(
            cmd, "ok" if equal else "fail", {"lhs": args.lhs, "rhs": args.rhs},
            {"equal": equal, "difference": print_canonical(diff)}, text,
        )
    if cmd == "degree":
        d = an.degree(parse(args.expr))
        shown = "-inf" if d == an.ZERO_DEGREE else str(d)
        return CliReport(cmd, "ok", {"expr": args.expr}, {"degree": None if d == an.ZERO_DEGREE else d}, shown)
    if cmd == "leading":
        lt = an.leading_term(reduce(parse(args.expr)))
        term = format_word(exponents_to_word(lt.tuple))
        text = f"tuple = {lt.tuple}\ncoefficient = {lt.coefficient}\nterm = {term}"
        return CliReport(
            cmd, "ok", {"expr": args.expr},
            {"tuple": list(lt.tuple), "coefficient": _json_scalar(lt.coefficient), "term": term}, text,
        )
    if cmd == "apply":
        try:
            g = d6_from_name(args.morphism)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        p = apply(g.realized, parse(args.expr))
        return CliReport(cmd, "ok", {"morphism": g.name, "expr": args.expr}, _poly_result(p), print_canonical(p))
    if cmd == "confluence":
        reports = check_confluence()
        lines = [f"{format_word(r.overlap_word)}: {'resolvable' if r.resolvable else 'NOT resolvable'}" for r in reports]
        ok = sum(r.resolvable for r in reports)
        lines += [f"overlaps = {len(reports)}", f"resolvable = {ok}"]
        result = {
            "overlaps": [
                {"word": format_word(r.overlap_word), "resolvable": r.resolvable,
                 "normal_form": print_canonical(r.left_path_result)}
                for r in reports
            ],
            "count": len(reports),
            "resolvable": ok,
        }
        return CliReport(cmd, "ok" if ok == len(reports) else "fail", {}, result, "\n".join(lines))
    if cmd == "center":
        if args.bound < 0:
            raise UsageError("bound must be nonnegative")
        rep = an.center_basis(args.bound, cfg.center_bound_max)
        text = "\n".join([
            f"bound = {rep.bound}",
            f"kernel_dimension = {rep.kernel_dimension}",
            f"expected_dimension = {rep.expected_dimension}",
            f"matches = {_bool(rep.matches)}",
        ])
        result = {
            "bound": rep.bound,
            "kernel_dimension": rep.kernel_dimension,
            "expected_dimension": rep.expected_dimension,
            "matches": rep.matches,
        }
        return CliReport(cmd, "ok" if rep.matches else "fail", {"bound": args.bound}, result, text)
    if cmd == "verify":
        try:
            checks = suite_checks(args.suite, cfg)
        except KeyError:
            raise UsageError(f"unknown suite {args.suite!r}; try list-suites") from None
        rows = []
        for suite, name, fn in checks:
            t0 = time.perf_counter()
            passed = bool(fn())
            rows.append({
                "suite": suite, "name": name, "pass": passed,
                "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
            })
        npass = sum(r["pass"] for r in rows)
        lines = [f"{'PASS' if r['pass'] else 'FAIL'} {r['suite']}: {r['name']}" for r in rows]
        lines.append(f"{npass}/{len(rows)} checks passed")
        status = "ok" if npass == len(rows) else "fail"
        return CliReport(cmd, status, {"suite": args.suite}, {"checks": rows, "passed": npass, "total": len(rows)}, "\n".join(lines))
    if cmd == "list-suites":
        return CliReport(cmd, "ok", {}, {"suites": list(SUITE_NAMES)}, "\n".join(SUITE_NAMES))
    raise UsageError(f"unknown command {cmd!r}")


def run(argv: Optional[List[str]] = None) -> CliReport:
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "json" if "json" in argv and "--format" in argv else "text"
    command = next((a for a in argv if not a.startswith("-")), "")
    try:
        args = build_parser().parse_args(argv)
        cfg = _settings(args)
        fmt = cfg.format
        set_default_fuel(cfg.fuel)
        report = _dispatch(args, cfg)
    except (UsageError, RacahError, OSError) as exc:
        report = CliReport(command, "error", {"argv": argv}, {"error": str(exc)}, f"error: {exc}")
    report.format = fmt
    return report


def main(argv: Optional[List[str]] = None) -> int:
    report = run(argv)
    out = sys.stderr if report.status == "error" and report.format == "text" else sys.stdout
    out.write(report.render())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
