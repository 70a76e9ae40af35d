# main.py
# command-line orchestrator: censuses, bijection verification and series computation.

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields
from pathlib import Path

# fix encoding for Windows console
if os.name == 'nt':
    import io
    sys.stdout = io.TextIOWrapper(sys.stdout.buffer, encoding='utf-8')
    sys.stderr = io.TextIOWrapper(sys.stderr.buffer, encoding='utf-8')

# add project root to python's path to allow for clean module imports
sys.path.insert(0, str(Path(__file__).parent))

import config

# --- censuses ---
from analyzers.good_maps import enumerate_good_maps, verify_closure_bijection
from analyzers.map_enumerator import (
    bivariate_slice,
    count_bivariate,
    count_univariate,
    enumerate_4valent_bicolorable,
    verify_propp_census,
    verify_radial,
)

# --- schemes & series ---
from analyzers.assembly import assemble_O_and_M, compare_with_census, verify_shape
from analyzers.core_scheme import fibres_of_decorated_cores, verify_mirror_statistics
from analyzers.rationality import (
    verify_decomposition,
    verify_diagonal,
    verify_mirror,
    verify_s_mirror,
    verify_uni_mirror,
)
from analyzers.scheme_enumerator import all_rooted_schemes
from analyzers.series_engine import (
    bc_tree_series,
    d_series,
    rational_t_and_B,
    series_identity_checks,
    tree_residuals,
    tree_series,
)
from models.errors import CounterexampleFound, MapForgeError, ParseError, ResourceLimit
from models.rational_function import D_BLACK, D_UNI, D_WHITE, RationalFunction
from models.verification import VerificationReport

# --- output ---
from reports.reporter import Reporter

EXIT_PASS = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_RESOURCE_LIMIT = 2
EXIT_USAGE = 64

VERIFY_TARGETS = ("closure", "radial", "propp", "mirror", "shortcut", "motzkin", "decomp")
SERIES_NAMES = ("T", "Tbc", "Tuni", "D", "Duni", "B", "Buni", "M1")

# the genus-1 census behind `series M1 --check-oracle` covers V + F <= 5
M1_CENSUS_MAX_TOTAL = 5


class UsageError(MapForgeError):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage, which is reserved for resource limits here"""

    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    """merged settings for one invocation: flag > config file > environment > defaults"""
    command: str
    target: str | None = None
    genus: int = 0
    edges: int | None = None
    max_edges: int = config.max_edges
    order: int = config.default_order
    height_bound: int = 3
    limit: int | None = None
    format: str = config.output_format
    seed: int = config.seed
    max_nodes: int = config.max_nodes
    bivariate: bool = False
    univariate: bool = False
    bc4: bool = False
    good: bool = False
    check_oracle: bool = False
    verbose: bool = False

    def __post_init__(self):
        if self.genus < 0:
            raise UsageError(f"genus must be non-negative, got {self.genus}")
        for name in ("max_edges", "max_nodes", "height_bound"):
            if getattr(self, name) < 1:
                raise UsageError(f"{name} must be positive, got {getattr(self, name)}")
        if self.edges is not None and self.edges < 0:
            raise UsageError(f"edges must be non-negative, got {self.edges}")
        if self.order < 1:
            raise UsageError(f"order must be at least 1, got {self.order}")
        if self.format not in Reporter.FORMATS:
            raise UsageError(f"unknown format {self.format!r}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        file_values = {}
        if args.config:
            try:
                file_values = json.loads(Path(args.config).read_text())
            except (OSError, json.JSONDecodeError) as e:
                raise ParseError(f"cannot read config file {args.config}: {e}") from e
            if not isinstance(file_values, dict):
                raise ParseError(f"config file {args.config} must hold a json object")
        names = {f.name for f in fields(cls)}
        unknown = set(file_values) - names
        if unknown:
            raise ParseError(f"unknown config keys: {', '.join(sorted(unknown))}")
        values = {}
        for name in names:
            flag = getattr(args, name, None)
            if flag is not None and flag is not False:
                values[name] = flag
            elif name in file_values:
                values[name] = file_values[name]
        return cls(**values)

    def apply(self):
        """push the resource limits into the library settings"""
        config.max_edges = self.max_edges
        config.max_nodes = self.max_nodes


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mapforge", description="enumeration and verification toolkit for maps on surfaces")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="json file with the same keys as the flags")
    common.add_argument("--format", choices=Reporter.FORMATS)
    common.add_argument("--genus", type=int)
    common.add_argument("--order", type=int)
    common.add_argument("--max-nodes", dest="max_nodes", type=int)
    common.add_argument("--max-edges", dest="max_edges", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--verbose", "-v", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    count = sub.add_parser("count", parents=[common], help="rooted map censuses")
    count.add_argument("--edges", type=int)
    kind = count.add_mutually_exclusive_group()
    kind.add_argument("--bivariate", action="store_true", help="maps with exactly --edges edges, by (V, F)")
    kind.add_argument("--univariate", action="store_true", help="maps with at most --edges edges, by E")
    kind.add_argument("--bc4", action="store_true", help="4-valent bicolorable maps with --edges vertices")
    kind.add_argument("--good", action="store_true", help="good maps with --edges interior edges")

    verify = sub.add_parser("verify", parents=[common], help="exhaustive and exact checks")
    verify.add_argument("target", choices=VERIFY_TARGETS)
    verify.add_argument("--edges", type=int)
    verify.add_argument("--height-bound", dest="height_bound", type=int)
    verify.add_argument("--limit", type=int, help="only the first N rooted schemes")

    series = sub.add_parser("series", parents=[common], help="truncated generating series")
    series.add_argument("target", choices=SERIES_NAMES)
    series.add_argument("--check-oracle", dest="check_oracle", action="store_true")
    return parser


# --- count ---

def cmd_count(run: RunConfig) -> str:
    reporter = Reporter(run.format)
    n = run.edges if run.edges is not None else 0
    if run.verbose:
        print(f"🔍 counting genus {run.genus} objects of size {n}...", file=sys.stderr)
    if run.univariate:
        table = count_univariate(run.genus, n)
    elif run.bc4:
        table = enumerate_4valent_bicolorable(run.genus, n)
    elif run.good:
        table = enumerate_good_maps(run.genus, n)
    elif run.bivariate:
        table = bivariate_slice(run.genus, n)
    else:
        table = bivariate_slice(run.genus, n)
        if run.format == "json":
            return Reporter._dumps({"genus": run.genus, "edges": n, "count": table.total})
    return reporter.table(table)


# --- verify ---

def _schemes(run: RunConfig):
    schemes = all_rooted_schemes(run.genus)
    return schemes[: run.limit] if run.limit else schemes


def _edges(run: RunConfig, fallback: int) -> int:
    return run.edges if run.edges is not None else fallback


def cmd_verify(run: RunConfig) -> list[VerificationReport]:
    target, g = run.target, run.genus
    if target == "closure":
        return [verify_closure_bijection(g, _edges(run, 3), verbose=run.verbose)]
    if target == "radial":
        return [verify_radial(g, _edges(run, 4), verbose=run.verbose)]
    if target == "propp":
        return [verify_propp_census(_edges(run, config.propp_max_edges), verbose=run.verbose)]
    if target == "shortcut":
        return [fibres_of_decorated_cores(max(g, 1), _edges(run, 2 * max(g, 1) + 2), verbose=run.verbose)]
    if target == "motzkin":
        report = VerificationReport(f"motzkin identities to order {run.order}")
        for name, ok in series_identity_checks(run.order).items():
            report.checked += 1
            report.details[name] = ok
            if not ok:
                report.fail(name)
        return [report]
    if target == "decomp":
        return [verify_decomposition(_schemes(run), run.order, run.height_bound, verbose=run.verbose)]
    # mirror
    reports = []
    for s in _schemes(run):
        if run.verbose:
            print(f"🔍 mirror checks on a scheme with {s.n_vertices} vertices...", file=sys.stderr)
        for check in (verify_mirror_statistics, verify_uni_mirror, verify_s_mirror, verify_mirror, verify_diagonal):
            reports.append(check(s))
    return reports


# --- series ---

def _diagonal_coefficients(s) -> list[int]:
    return [int(c) for c in s.diagonal().univariate_coefficients()[1:]]


def cmd_series(run: RunConfig) -> tuple[str, list[VerificationReport]]:
    reporter = Reporter(run.format)
    name, order = run.target, run.order
    checks = []
    if name == "T":
        tb, tw = tree_series(order)
        out = [reporter.series("T_black", tb, extra={"diagonal": _diagonal_coefficients(tb)}),
               reporter.series("T_white", tw)]
        if run.check_oracle:
            report = VerificationReport("tree system residuals")
            report.checked = 2
            if not all(r.is_zero() for r in tree_residuals(order)):
                report.fail("tree series do not solve the system")
            checks.append(report)
        return "\n".join(out), checks
    if name in ("Tbc", "Tuni"):
        t = bc_tree_series(order) if name == "Tbc" else tree_series(order)[0].diagonal()
        if run.check_oracle:
            report = VerificationReport("univariate tree series")
            report.checked = 1
            if bc_tree_series(order) != tree_series(order)[0].diagonal():
                report.fail("T = z + 3T^2 differs from the diagonal of the bivariate system")
            checks.append(report)
        return reporter.series(name, t, extra={"coefficients": [int(c) for c in t.univariate_coefficients()]}), checks
    if name in ("D", "Duni"):
        univariate = name == "Duni"
        db, dw, _ = d_series(order, univariate)
        if univariate:
            out = reporter.series("D", db, rational=RationalFunction.univariate(D_UNI))
        else:
            out = "\n".join([
                reporter.series("D_black", db, rational=RationalFunction.bivariate(D_BLACK)),
                reporter.series("D_white", dw, rational=RationalFunction.bivariate(D_WHITE)),
            ])
        if run.check_oracle:
            checks.append(_identity_report(order))
        return out, checks
    if name in ("B", "Buni"):
        univariate = name == "Buni"
        _, _, b = d_series(order, univariate)
        rational = rational_t_and_B(univariate)[2]
        extra = {} if univariate else {"symmetric": b == b.swap()}
        if run.check_oracle:
            checks.append(_identity_report(order))
        return reporter.series(name, b, rational=rational, extra=extra), checks
    # M1
    if order <= 3:
        raise UsageError("M1 needs --order of at least 4 to certify the numerator")
    assembly = assemble_O_and_M(1, order, verbose=run.verbose)
    extra = {
        "numerator": str(assembly.numerator.as_expr()),
        "denominator": str(assembly.rational_form.denom.as_expr()),
    }
    out = reporter.series("M1", assembly.M, extra=extra)
    if run.check_oracle:
        max_total = min(order, M1_CENSUS_MAX_TOTAL)
        if run.verbose:
            print(f"🔍 brute-force genus 1 census up to {max_total} edges...", file=sys.stderr)
        checks.append(compare_with_census(assembly.M, count_bivariate(1, max_total), max_total))
        checks.append(verify_shape(assembly))
    return out, checks


def _identity_report(order: int) -> VerificationReport:
    report = VerificationReport(f"motzkin identities to order {order}")
    for identity, ok in series_identity_checks(order).items():
        report.checked += 1
        if not ok:
            report.fail(identity)
    return report


def run(argv: list[str] | None = None) -> int:
    """parses argv, runs one command and returns the exit code"""
    try:
        args = build_parser().parse_args(argv)
        settings = RunConfig.from_args(args)
    except (UsageError, ParseError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    settings.apply()
    reporter = Reporter(settings.format)
    try:
        if settings.command == "count":
            print(cmd_count(settings))
            return EXIT_PASS
        if settings.command == "verify":
            reports = cmd_verify(settings)
            print(reporter.reports(reports))
        else:
            text, reports = cmd_series(settings)
            print(text)
            if reports:
                print(reporter.reports(reports))
    except CounterexampleFound as e:
        print(f"❌ counterexample: {e}", file=sys.stderr)
        print(f"   witness: {e.witness!r}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except ResourceLimit as e:
        print(f"❌ resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE_LIMIT
    except (UsageError, ParseError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except MapForgeError as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    failed = [r for r in reports if not r.passed]
    for r in failed:
        print(f"❌ {r.name}: {r.failures[0]}", file=sys.stderr)
    if settings.verbose and not failed:
        print(f"✅ {len(reports)} check(s) passed", file=sys.stderr)
    return EXIT_COUNTEREXAMPLE if failed else EXIT_PASS


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
