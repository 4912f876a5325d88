"""Command-line interface.

Exit codes: 0 success or all checks pass, 1 a verification check failed,
2 bad input or usage, 3 a resource guard tripped (or a check came back
unknown because of one).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .algebra import AlgebraBasis, read_algebra
from .bundled import BUNDLED, bundled_algebra
from .enumerate import FAIL, PASS, SUITES, build_pool, enumerate_indecomposables, verify_theorem_suite
from .errors import GuardTripped, NewtmodError
from .homological import delta_vector, tau
from .io import dumps, module_to_dict, read_module
from .modules import Module, end_and_brick, is_indecomposable
from .polytope import newton_polytope
from .torsion import delta_of_pair, tau_rigidity

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

KINDS = ("indec", "bricks", "taurigid", "pairs")


@dataclass(frozen=True)
class CommandSpec:
    """A parsed command line."""

    command: str
    algebra: str
    module: str | None = None
    max_dim: tuple[int, ...] | None = None
    format: str = "json"
    output: str | None = None
    kind: str = "indec"
    suite: str = "all"
    workers: int = 1

    def __post_init__(self):
        if self.format not in ("json", "table"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.max_dim is not None and any(d < 0 for d in self.max_dim):
            raise ValueError("--max-dim entries must be non-negative")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _dim_list(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(d < 0 for d in out):
        raise argparse.ArgumentTypeError("entries must be non-negative")
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json", help="output format (default json)")
    common.add_argument("--output", metavar="FILE", help="write the result here instead of stdout")

    parser = _Parser(
        prog="newtmod",
        description="Newton polytopes and tau-tilting theory for quiver algebras over F_p.",
        epilog=f"ALGEBRA is a JSON file or a bundled name ({', '.join(sorted(BUNDLED))}). "
        "Exit codes: 0 ok, 1 check failed, 2 input error, 3 resource guard.",
    )
    sub = parser.add_subparsers(dest="group", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    alg = sub.add_parser("algebra", help="algebra commands")
    alg_sub = alg.add_subparsers(dest="command", metavar="ACTION", parser_class=_Parser)
    alg_sub.required = True
    check = alg_sub.add_parser("check", parents=[common], help="validate an algebra and print its basis")
    check.add_argument("algebra", metavar="ALGEBRA")

    mod = sub.add_parser("module", help="module commands")
    mod_sub = mod.add_subparsers(dest="command", metavar="ACTION", parser_class=_Parser)
    mod_sub.required = True
    for name, text in (
        ("info", "dimension vector, indecomposability, brick, tau-rigidity, delta-vector"),
        ("tau", "write the Auslander-Reiten translate as a module file"),
        ("newton", "write the Newton polytope as a polytope file"),
    ):
        p = mod_sub.add_parser(name, parents=[common], help=text)
        p.add_argument("algebra", metavar="ALGEBRA")
        p.add_argument("module", metavar="MODULE")

    en = sub.add_parser("enumerate", parents=[common], help="enumerate indecomposables or tilting pairs")
    en.add_argument("algebra", metavar="ALGEBRA")
    en.add_argument("--max-dim", type=_dim_list, required=True, metavar="D1,..,DN", help="dimension bound")
    en.add_argument("--kind", choices=KINDS, default="indec", help="what to list (default indec)")
    en.add_argument("--workers", type=int, default=1, help="worker processes for the search (default 1)")

    ver = sub.add_parser("verify", parents=[common], help="run the verification suite")
    ver.add_argument("algebra", metavar="ALGEBRA")
    ver.add_argument("--max-dim", type=_dim_list, required=True, metavar="D1,..,DN", help="dimension bound")
    ver.add_argument("--suite", choices=SUITES, default="all", help="which checks to run (default all)")
    ver.add_argument("--workers", type=int, default=1, help="worker processes for the search (default 1)")
    return parser


def parse_command(argv: list[str]) -> CommandSpec:
    ns = build_parser().parse_args(argv)
    command = ns.group if ns.group in ("enumerate", "verify") else f"{ns.group} {ns.command}"
    return CommandSpec(
        command=command,
        algebra=ns.algebra,
        module=getattr(ns, "module", None),
        max_dim=getattr(ns, "max_dim", None),
        format=ns.format,
        output=ns.output,
        kind=getattr(ns, "kind", "indec"),
        suite=getattr(ns, "suite", "all"),
        workers=getattr(ns, "workers", 1),
    )


def load_algebra_arg(arg: str) -> AlgebraBasis:
    """Read ALGEBRA from a file, falling back to a bundled name."""
    if os.path.exists(arg):
        return read_algebra(arg)
    name = os.path.basename(arg).removesuffix(".json")
    if name in BUNDLED:
        return bundled_algebra(name)
    raise FileNotFoundError(f"no such algebra file or bundled algebra: {arg}")


def _bound(spec: CommandSpec, alg: AlgebraBasis) -> tuple[int, ...]:
    if len(spec.max_dim) != alg.n:
        raise ValueError(f"--max-dim needs {alg.n} entries, got {len(spec.max_dim)}")
    return spec.max_dim


# -- table rendering -------------------------------------------------------------


def _cell(x) -> str:
    if isinstance(x, list):
        return "[" + ",".join(_cell(y) for y in x) + "]"
    if isinstance(x, bool):
        return "yes" if x else "no"
    if x is None:
        return "-"
    return str(x)


def _table(rows: list[dict], columns: list[str]) -> str:
    cells = [columns] + [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(row[k]) for row in cells) for k in range(len(columns))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _kv_table(data: dict) -> str:
    return _table([{"key": k, "value": data[k]} for k in sorted(data)], ["key", "value"])


# -- commands --------------------------------------------------------------------


def _algebra_check(spec: CommandSpec):
    alg = load_algebra_arg(spec.algebra)
    data = {
        "p": alg.p,
        "vertices": list(alg.quiver.vertices),
        "dimension": alg.dim,
        "nilpotency": alg.nilpotency,
        "basis": [alg.label(k) for k in range(alg.dim)],
    }
    return data, EXIT_OK


def _module_info(alg: AlgebraBasis, m: Module):
    indec = is_indecomposable(m)
    flags = tau_rigidity(m)
    data = {
        "dims": list(m.dims),
        "indecomposable": indec,
        "brick": end_and_brick(m)[1],
        "tau_rigid": flags.tau_rigid,
        "delta": list(delta_vector(m)),
        "tau_dims": list(tau(m).dims),
    }
    return data, EXIT_OK


def _module_command(spec: CommandSpec):
    alg = load_algebra_arg(spec.algebra)
    m = read_module(spec.module, alg)
    if spec.command == "module info":
        return _module_info(alg, m)
    if spec.command == "module tau":
        return module_to_dict(tau(m)), EXIT_OK
    return newton_polytope(m).to_dict(), EXIT_OK


def _module_rows(pool, indices):
    rows = []
    for k in indices:
        m = pool.indecomposables[k]
        row = {"index": k, "brick": pool.bricks[k], "tau_rigid": pool.tau_rigid[k]}
        row.update(module_to_dict(m))
        rows.append(row)
    return rows


def _enumerate(spec: CommandSpec):
    alg = load_algebra_arg(spec.algebra)
    bound = _bound(spec, alg)
    if spec.kind == "pairs":
        pool = build_pool(alg, bound, spec.workers)
        rows = []
        for pr in pool.tilting_pairs:
            delta, g = delta_of_pair(pr)
            rows.append(
                {
                    "m": [pool.index_of(u) for u in pr.m_summands],
                    "p": [f"P{k + 1}" for k in pr.p_vertices],
                    "delta": list(delta),
                    "g": list(g),
                }
            )
        return rows, EXIT_OK
    pool = enumerate_indecomposables(alg, bound, spec.workers)
    if spec.kind == "bricks":
        idx = pool.brick_indices()
    elif spec.kind == "taurigid":
        idx = pool.rigid_indices()
    else:
        idx = range(len(pool.indecomposables))
    return _module_rows(pool, idx), EXIT_OK


def _verify(spec: CommandSpec):
    alg = load_algebra_arg(spec.algebra)
    pool = build_pool(alg, _bound(spec, alg), spec.workers)
    report = verify_theorem_suite(pool, spec.suite)
    code = {PASS: EXIT_OK, FAIL: EXIT_FAIL}.get(report.status, EXIT_GUARD)
    return report.to_list(), code


def _render(spec: CommandSpec, data) -> str:
    if spec.format == "json":
        return dumps(data)
    if spec.command == "verify":
        rows = [dict(r, witnesses=len(r["witnesses"])) for r in data]
        return _table(rows, ["check", "ref", "status", "witnesses"])
    if spec.command == "enumerate":
        if spec.kind == "pairs":
            return _table(data, ["m", "p", "delta", "g"])
        return _table(data, ["index", "dims", "brick", "tau_rigid"])
    if spec.command == "algebra check":
        return _kv_table({k: v for k, v in data.items() if k != "basis"}) + "basis: " + " ".join(data["basis"]) + "\n"
    if spec.command == "module newton":
        return _table([{"extreme": pt} for pt in data["extremes"]], ["extreme"])
    return _kv_table(data if spec.command == "module info" else {"dims": data["dims"], **data["arrows"]})


HANDLERS = {
    "algebra check": _algebra_check,
    "module info": _module_command,
    "module tau": _module_command,
    "module newton": _module_command,
    "enumerate": _enumerate,
    "verify": _verify,
}


def run_command(argv: list[str], stdout=None, stderr=None) -> int:
    """Run one command line and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        spec = parse_command(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        data, code = HANDLERS[spec.command](spec)
    except GuardTripped as exc:
        print(f"guard: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_GUARD
    except (NewtmodError, ValueError, OSError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INPUT
    text = _render(spec, data)
    if spec.output:
        with open(spec.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
