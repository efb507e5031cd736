"""Command-line entry point: analyze, scan, family-s, verify-table, selfcheck."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, replace
from decimal import Decimal, InvalidOperation
from typing import Sequence

from .errors import DomainError, InternalError, ResourceError
from .thue import DEFAULT_CUTOFF, ThueSearchConfig

log = logging.getLogger("monogen")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_RESOURCE = 2
EXIT_MISMATCH = 3
EXIT_USAGE = 64

FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_bound(text: str) -> int:
    """Exact positive integer from '1000000', '1e100', '10**100' or '2.5e3'."""
    s = text.strip().replace("_", "")
    if "**" in s:
        base, _, exp = s.partition("**")
        try:
            value = int(base) ** int(exp)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad bound {text!r}") from exc
    else:
        try:
            d = Decimal(s)
        except InvalidOperation as exc:
            raise argparse.ArgumentTypeError(f"bad bound {text!r}") from exc
        if not d.is_finite() or d != d.to_integral_value():
            raise argparse.ArgumentTypeError(f"bound {text!r} is not an integer")
        value = int(d)
    if value < 1:
        raise argparse.ArgumentTypeError("bound must be positive")
    return value


@dataclass(frozen=True)
class CliConfig:
    command: str
    n: int | None = None
    n_from: int | None = None
    n_to: int | None = None
    samples: tuple[int, ...] = ()
    bound: int = 10**6
    strategy: str = "convergent"
    fmt: str = "table"
    output: str | None = None
    verbosity: int = 0
    jobs: int = 1
    timing: bool = True

    @property
    def search(self) -> ThueSearchConfig:
        return ThueSearchConfig(bound=self.bound, strategy=self.strategy, cutoff=DEFAULT_CUTOFF)


# --- serialization ---------------------------------------------------------------

def result_to_dict(r) -> dict:
    if r.error is not None:
        return {"n": r.n, "error": r.error, "error_kind": r.error_kind, "bound": str(r.bound)}
    return {
        "n": r.n,
        "basis": {
            "denominators": [str(d) for d in r.basis_denominators],
            "numerators": [[str(c) for c in row] for row in r.basis_numerators],
        },
        "index_form": [str(c) for c in r.index_form],
        "generators": [[str(c) for c in g] for g in r.generators],
        "bound": str(r.bound),
        "complete": r.complete,
        "elapsed_ms": r.elapsed_ms,
        "completeness": r.completeness,
        "H": [[str(c) for c in s] for s in r.H],
        "H1": [[str(c) for c in s] for s in r.H1],
    }


def result_from_dict(d: dict):
    from .pipeline import ScanResult

    def ints(rows):
        return tuple(tuple(int(c) for c in row) for row in rows)

    if "error" in d:
        return ScanResult(d["n"], (), (), (), (), (), (), int(d["bound"]), "", 0, d["error"], d.get("error_kind"))
    return ScanResult(
        n=int(d["n"]),
        basis_denominators=tuple(int(c) for c in d["basis"]["denominators"]),
        basis_numerators=ints(d["basis"]["numerators"]),
        index_form=tuple(int(c) for c in d["index_form"]),
        H=ints(d.get("H", ())),
        H1=ints(d.get("H1", ())),
        generators=ints(d["generators"]),
        bound=int(d["bound"]),
        completeness=d.get("completeness", "exhaustive-complete" if d["complete"] else "heuristic-up-to-B"),
        elapsed_ms=int(d["elapsed_ms"]),
    )


def _basis_text(r) -> str:
    from .algebra.poly import Poly

    parts = []
    for num, den in zip(r.basis_numerators, r.basis_denominators):
        s = str(Poly(num)).replace("*", "")
        if den == 1:
            parts.append(s)
        elif sum(1 for c in num if c) > 1:
            parts.append(f"({s})/{den}")
        else:
            parts.append(f"{s}/{den}")
    return "(" + ",".join(parts) + ")"


CSV_FIELDS = ("n", "x2", "x3", "y1", "y2", "y3", "bound", "complete")


def emit_report(results: Sequence, fmt: str, single: bool = False) -> bytes:
    if fmt == "json":
        docs = [result_to_dict(r) for r in results]
        payload = docs[0] if single and len(docs) == 1 else docs
        return (json.dumps(payload, indent=2, sort_keys=False) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in results:
            if r.error is not None:
                continue
            if not r.generators:
                w.writerow([r.n, "", "", "", "", "", r.bound, r.complete])
            for g in r.generators:
                w.writerow([r.n, *g, r.bound, r.complete])
        return buf.getvalue().encode()
    if fmt == "table":
        lines = []
        for r in results:
            if r.error is not None:
                lines.append(f"n={r.n}: error ({r.error})")
                continue
            if not r.generators and not single:
                continue
            lines.append(f"n={r.n}, integral basis of L: {_basis_text(r)}")
            a, b, c, d = r.index_form
            lines.append(f"  I_L(x2,x3) = {a} x2^3 + {b} x2^2 x3 + {c} x2 x3^2 + {d} x3^3")
            if r.generators:
                rows = ", ".join("(" + ", ".join(str(v) for v in g) + ")" for g in r.generators)
                lines.append(f"  (x2,x3,y1,y2,y3) = {rows}")
            else:
                lines.append("  no generators")
            lines.append("")
        return ("\n".join(lines).rstrip("\n") + "\n").encode()
    raise DomainError(f"unknown format {fmt!r}")


def parse_report(raw: bytes | str) -> list:
    doc = json.loads(raw)
    if isinstance(doc, dict):
        doc = [doc]
    return [result_from_dict(d) for d in doc]


# --- commands ---------------------------------------------------------------------

def _write(cfg: CliConfig, data: bytes) -> None:
    if cfg.output:
        with open(cfg.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _strip_timing(cfg: CliConfig, results):
    return results if cfg.timing else [replace(r, elapsed_ms=0) for r in results]


def cmd_analyze(cfg: CliConfig) -> int:
    from .pipeline import analyze

    r = analyze(cfg.n, cfg.search)
    _write(cfg, emit_report(_strip_timing(cfg, [r]), cfg.fmt, single=True))
    return EXIT_OK


def _scan_exit(results) -> int:
    kinds = {r.error_kind for r in results if r.error is not None}
    if "resource" in kinds:
        return EXIT_RESOURCE
    if kinds:
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_scan(cfg: CliConfig) -> int:
    from .pipeline import scan_range

    results = scan_range(cfg.n_from, cfg.n_to, cfg.search, jobs=cfg.jobs)
    for r in results:
        if r.error is not None:
            log.warning("n=%d failed: %s", r.n, r.error)
    _write(cfg, emit_report(_strip_timing(cfg, results), cfg.fmt))
    return _scan_exit(results)


def default_s_samples(k: int) -> tuple[int, ...]:
    """k members of S spread evenly over the sorted list."""
    from .family import S_members

    S = S_members()
    if k >= len(S):
        return tuple(S)
    step = len(S) / k
    return tuple(S[int(i * step)] for i in range(k))


def cmd_family_s(cfg: CliConfig) -> int:
    from .pipeline import verify_family_s

    samples = cfg.samples or default_s_samples(20)
    rep = verify_family_s(samples, cfg.search)
    if cfg.fmt == "json":
        doc = {
            "samples": [str(n) for n in samples],
            "identities": rep.identities,
            "basis_ok": {str(k): v for k, v in rep.basis_ok.items()},
            "form_ok": {str(k): v for k, v in rep.form_ok.items()},
            "form_sign": {str(k): v for k, v in rep.form_sign.items()},
            "norm_poly_ok": {str(k): v for k, v in rep.norm_poly_ok.items()},
            "class_free": {str(k): v for k, v in rep.class_free.items()},
            "spot_generators": {str(k): v for k, v in rep.spot_generators.items()},
            "residual_y1": {
                str(n): {f"{a},{b}": [str(y) for y in ys] for (a, b), ys in d.items()}
                for n, d in rep.residual_y1.items()
            },
            "passed": rep.passed,
        }
        data = (json.dumps(doc, indent=2) + "\n").encode()
    else:
        lines = [f"identity {k}: {'ok' if v else 'FAILED'}" for k, v in rep.identities.items()]
        for n in samples:
            lines.append(
                f"n={n}: basis {'ok' if rep.basis_ok.get(n) else 'FAILED'}, "
                f"index form {'ok' if rep.form_ok.get(n) else 'FAILED'} (sign {rep.form_sign.get(n)}), "
                f"T classes {'generator-free' if rep.class_free.get(n) else 'FAILED'}, "
                f"search found {rep.spot_generators.get(n, '-')} generators"
            )
        lines.append("passed" if rep.passed else "FAILED")
        data = ("\n".join(lines) + "\n").encode()
    _write(cfg, data)
    return EXIT_OK if rep.passed else EXIT_DOMAIN


def cmd_verify_table(cfg: CliConfig) -> int:
    from .golden import golden_generators
    from .pipeline import compare_with_golden, scan_range

    lo, hi = (cfg.n_from, cfg.n_to) if cfg.n_from is not None else (-100, 100)
    results = scan_range(lo, hi, cfg.search, jobs=cfg.jobs)
    code = _scan_exit(results)
    if code:
        return code
    golden = golden_generators()
    diff = compare_with_golden(results, golden)
    outside = [n for n in golden if not lo <= n <= hi]
    lines = [f"scanned n in [{lo}, {hi}] with bound {cfg.bound}"]
    for n, g in diff.missing:
        lines.append(f"missing n={n} {g}")
    for n, g in diff.extra:
        lines.append(f"extra   n={n} {g}")
    if outside:
        lines.append(f"table entries outside the range not checked: {outside}")
    lines.append("table reproduced" if diff.empty else f"{len(diff)} differences")
    _write(cfg, ("\n".join(lines) + "\n").encode())
    return EXIT_OK if diff.empty else EXIT_MISMATCH


def cmd_selfcheck(cfg: CliConfig) -> int:
    from .family import check_disc_identity
    from .golden import golden_generators
    from .pipeline import analyze, compare_with_golden, norm_factorizations, symbolic_norm_identity
    from .sextic import build_sextic, index_of_xi
    from .cubicfield import integral_basis

    checks = []
    checks.append(("disc(g) = u^2 v^2 for |n| <= 50", all(check_disc_identity(n) for n in range(-50, 51))))
    checks.append(("N+-1 factorizations", all(norm_factorizations().values())))
    checks.append(("symbolic norm form", symbolic_norm_identity()))
    mono = [n for n in range(-5, 6) if index_of_xi(build_sextic(integral_basis(n))) == 1]
    checks.append(("f_n monogenic exactly for n in -2..1 (|n| <= 5)", mono == [-2, -1, 0, 1]))
    r140 = analyze(140, ThueSearchConfig(bound=10**3))
    checks.append(("n=140 index form", r140.index_form == (-138173, -137613, -44758, -4777)))
    r0 = analyze(0, ThueSearchConfig(bound=10**4))
    checks.append(("n=0 generators match the table", compare_with_golden([r0], golden_generators()).empty))
    lines = [f"{'ok  ' if ok else 'FAIL'} {name}" for name, ok in checks]
    _write(cfg, ("\n".join(lines) + "\n").encode())
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_DOMAIN


COMMANDS = {
    "analyze": cmd_analyze,
    "scan": cmd_scan,
    "family-s": cmd_family_s,
    "verify-table": cmd_verify_table,
    "selfcheck": cmd_selfcheck,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--bound", type=parse_bound, default=10**6, help="height bound B (e.g. 1e6, 1e100)")
    common.add_argument("--strategy", choices=("exhaustive", "convergent", "both"), default="convergent")
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="table")
    common.add_argument("--output", "-o", default=None)
    common.add_argument("--jobs", "-j", type=int, default=1)
    common.add_argument("--no-timing", dest="timing", action="store_false", help="write elapsed_ms as 0")
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = _Parser(prog="monogen", description="Power integral bases of a family of cyclic sextic fields")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    a = sub.add_parser("analyze", parents=[common], help="generators for one n")
    a.add_argument("--n", type=int, required=True)
    s = sub.add_parser("scan", parents=[common], help="generators for a range of n")
    s.add_argument("--from", dest="n_from", type=int, required=True)
    s.add_argument("--to", dest="n_to", type=int, required=True)
    f = sub.add_parser("family-s", parents=[common], help="checks for the family S")
    f.add_argument("--n", dest="samples", type=int, nargs="+", default=None)
    f.add_argument("--samples", dest="count", type=int, default=20)
    t = sub.add_parser("verify-table", parents=[common], help="scan and compare with the embedded table")
    t.add_argument("--from", dest="n_from", type=int, default=None)
    t.add_argument("--to", dest="n_to", type=int, default=None)
    sub.add_parser("selfcheck", parents=[common], help="fast consistency checks")
    return p


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    samples = ()
    if ns.command == "family-s":
        samples = tuple(ns.samples) if ns.samples else default_s_samples(ns.count)
    if ns.command == "scan" and ns.n_from > ns.n_to:
        raise UsageError("--from must not exceed --to")
    if ns.command == "verify-table" and (ns.n_from is None) != (ns.n_to is None):
        raise UsageError("--from and --to go together")
    if ns.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    return CliConfig(
        command=ns.command,
        n=getattr(ns, "n", None),
        n_from=getattr(ns, "n_from", None),
        n_to=getattr(ns, "n_to", None),
        samples=samples,
        bound=ns.bound,
        strategy=ns.strategy,
        fmt=ns.fmt,
        output=ns.output,
        verbosity=ns.verbose,
        jobs=ns.jobs,
        timing=ns.timing,
    )


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"monogen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbosity, 2), format="%(levelname)s %(message)s")
    try:
        return COMMANDS[cfg.command](cfg)
    except ResourceError as exc:
        print(f"monogen: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DomainError, InternalError) as exc:
        print(f"monogen: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
