"""Command-line front end, JSON/CSV/text serialization and the on-disk table cache."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .catalecticant import BinaryForm, catalecticant_det
from .chowdeg import DegreeRow, DegreeTable, is_hypersurface, solve_chow_degrees, validate_table
from .discdeg import DEFAULT_MAX_TERMS
from .errors import ConsistencyError, DomainError, ResourceError
from .factorization import Factor, FactorReport, report_from_table
from .galeryser import gale_ryser_count
from .partitions import Partition, RefinementMatrix, enumerate_partitions, refinement_matrix_bruteforce
from .symfunc import refinement_matrix_symfunc

log = logging.getLogger(__name__)

CACHE_ENV = "CHOWFACTOR_CACHE"


# -- serialization -----------------------------------------------------------

def table_to_dict(table: DegreeTable) -> dict:
    return {
        "d": table.d,
        "n": table.n,
        "rows": [
            {
                "lambda": list(r.lam.parts),
                "disc_degree": r.disc_degree,
                "chow_degree": r.chow_degree,
                "hypersurface": r.hypersurface,
            }
            for r in table.rows
        ],
    }


def table_from_dict(data: dict) -> DegreeTable:
    rows = tuple(
        DegreeRow(
            Partition(tuple(r["lambda"])),
            _strict_int(r["disc_degree"]),
            _strict_int(r["chow_degree"]),
            _strict_bool(r["hypersurface"]),
        )
        for r in data["rows"]
    )
    return DegreeTable(_strict_int(data["d"]), _strict_int(data["n"]), rows)


def report_to_dict(report: FactorReport) -> dict:
    return {
        "mu": list(report.mu.parts),
        "n": report.n,
        "factors": [
            {"lambda": list(f.lam.parts), "degree": f.degree, "multiplicity": f.multiplicity}
            for f in report.factors
        ],
        "total_degree": report.total_degree,
    }


def report_from_dict(data: dict) -> FactorReport:
    factors = tuple(
        Factor(Partition(tuple(f["lambda"])), _strict_int(f["degree"]), _strict_int(f["multiplicity"]))
        for f in data["factors"]
    )
    return FactorReport(
        Partition(tuple(data["mu"])), _strict_int(data["n"]), factors, _strict_int(data["total_degree"])
    )


def matrix_to_dict(matrix: RefinementMatrix) -> dict:
    return {
        "d": matrix.d,
        "order": [list(p.parts) for p in matrix.order],
        "entries": [list(row) for row in matrix.entries],
    }


def matrix_from_dict(data: dict) -> RefinementMatrix:
    return RefinementMatrix(
        tuple(Partition(tuple(p)) for p in data["order"]),
        tuple(tuple(_strict_int(x) for x in row) for row in data["entries"]),
    )


def _strict_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError(f"expected an integer, got {x!r}")
    return x


def _strict_bool(x) -> bool:
    if not isinstance(x, bool):
        raise ValueError(f"expected a boolean, got {x!r}")
    return x


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


# -- cache -------------------------------------------------------------------

class TableStore:
    """One JSON file per ``(d, n)`` degree table; unreadable or inconsistent files are recomputed."""

    def __init__(self, directory: Path | None):
        self.directory = directory

    def path(self, d: int, n: int) -> Path:
        assert self.directory is not None
        return self.directory / f"table_d{d}_n{n}.json"

    def load(self, d: int, n: int) -> DegreeTable | None:
        if self.directory is None:
            return None
        path = self.path(d, n)
        if not path.exists():
            return None
        try:
            table = table_from_dict(json.loads(path.read_text()))
            if (table.d, table.n) != (d, n):
                raise ValueError("cache file describes a different table")
            validate_table(table)
        except (OSError, ValueError, KeyError, TypeError, DomainError, ConsistencyError) as exc:
            log.warning("discarding cache entry %s: %s", path, exc)
            return None
        return table

    def save(self, table: DegreeTable) -> None:
        if self.directory is None:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".table_", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(canonical_json(table_to_dict(table)))
            os.replace(tmp, self.path(table.d, table.n))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get(self, d: int, n: int, max_terms: int) -> DegreeTable:
        # the guard applies to cache hits too: the largest series has n^d terms
        if n >= 2 and d >= 2 and n**d > max_terms:
            raise ResourceError(f"d={d}, n={n} needs up to {n**d} series terms, above the limit {max_terms}")
        table = self.load(d, n)
        if table is None:
            table = solve_chow_degrees(d, n, max_terms=max_terms)
            self.save(table)
        return table


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "chowfactor"


# -- rendering ---------------------------------------------------------------

def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _text_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells) + "\n"


def render_report(report: FactorReport, fmt: str) -> str:
    if fmt == "json":
        return canonical_json(report_to_dict(report)) + "\n"
    header = ["lambda", "degree", "multiplicity"]
    rows = [[str(f.lam), f.degree, f.multiplicity] for f in report.factors]
    if fmt == "csv":
        return _csv([header] + rows + [["total", report.total_degree, ""]])
    title = f"Sym(Delta) for mu = ({report.mu}), n = {report.n}\n"
    return title + _text_table(header, rows) + f"total_degree  {report.total_degree}\n"


def render_table(table: DegreeTable, fmt: str) -> str:
    if fmt == "json":
        return canonical_json(table_to_dict(table)) + "\n"
    header = ["lambda", "disc_degree", "chow_degree", "hypersurface"]
    rows = [[str(r.lam), r.disc_degree, r.chow_degree, str(r.hypersurface).lower()] for r in table.rows]
    if fmt == "csv":
        return _csv([header] + rows)
    return f"d = {table.d}, n = {table.n}\n" + _text_table(header, rows)


def render_matrix(matrix: RefinementMatrix, fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        data = matrix_to_dict(matrix)
        data.update(extra or {})
        return canonical_json(data) + "\n"
    header = ["lambda\\mu"] + [str(p) for p in matrix.order]
    rows = [[str(lam)] + list(row) for lam, row in zip(matrix.order, matrix.entries)]
    if fmt == "csv":
        return _csv([header] + rows)
    notes = "".join(f"{k}: {v}\n" for k, v in (extra or {}).items())
    return notes + _text_table(header, rows)


def render_classify(d: int, n: int, fmt: str) -> str:
    flags = [(p, is_hypersurface(p, n)) for p in enumerate_partitions(d)]
    if fmt == "json":
        data = {"d": d, "n": n, "rows": [{"lambda": list(p.parts), "hypersurface": f} for p, f in flags]}
        return canonical_json(data) + "\n"
    header = ["lambda", "hypersurface"]
    rows = [[str(p), str(f).lower()] for p, f in flags]
    if fmt == "csv":
        return _csv([header] + rows)
    return f"d = {d}, n = {n}\n" + _text_table(header, rows)


def _fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- argument parsing --------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise DomainError(f"{self.prog}: {message}")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _fraction_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(tok.strip()) for tok in text.split(",") if tok.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json", "csv"), default=default("text"))
    parser.add_argument("--cache-dir", type=Path, default=default(None))
    parser.add_argument("--max-terms", type=int, default=default(DEFAULT_MAX_TERMS))
    parser.add_argument("--no-cache", action="store_true", default=default(False))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chowfactor", description="Chow-dual factorizations of symmetrized discriminants.")
    _add_globals(parser, suppress=False)
    common = _Parser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("factor", parents=[common], help="factorization of Sym(Delta_{mu,n})")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=_partition, help="defaults to 1^d (the hyperdeterminant)")

    p = sub.add_parser("degrees", parents=[common], help="full degree table")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("refinement-matrix", parents=[common], help="refinement counts M[lam, mu]")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--method", choices=("brute", "symfunc", "both"), default="brute")

    p = sub.add_parser("classify", parents=[common], help="hypersurface flag for each lambda")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("galeryser", parents=[common], help="count 0-1 matrices with given margins")
    p.add_argument("--rows", type=_int_list, required=True)
    p.add_argument("--cols", type=_partition, required=True)

    p = sub.add_parser("catalecticant", parents=[common], help="determinant of the square catalecticant")
    p.add_argument("--coeffs", type=_fraction_list, required=True,
                   help="binomial-normalized coefficients c0,...,cd")
    return parser


def _store(args) -> TableStore:
    if args.no_cache:
        return TableStore(None)
    directory = args.cache_dir or (Path(os.environ[CACHE_ENV]) if os.environ.get(CACHE_ENV) else None)
    return TableStore(directory or default_cache_dir())


def _dispatch(args) -> str:
    fmt = args.format
    if args.command == "factor":
        mu = args.mu or Partition((1,) * args.d)
        if mu.weight != args.d:
            raise DomainError(f"--mu {mu} does not have weight --d {args.d}")
        table = _store(args).get(args.d, args.n, args.max_terms)
        return render_report(report_from_table(mu, table), fmt)
    if args.command == "degrees":
        return render_table(_store(args).get(args.d, args.n, args.max_terms), fmt)
    if args.command == "refinement-matrix":
        if args.d < 1:
            raise DomainError("--d must be positive")
        if args.method == "symfunc":
            return render_matrix(refinement_matrix_symfunc(args.d), fmt, {"method": "symfunc"})
        brute = refinement_matrix_bruteforce(args.d)
        if args.method == "brute":
            return render_matrix(brute, fmt, {"method": "brute"})
        if refinement_matrix_symfunc(args.d) != brute:
            raise ConsistencyError(f"brute-force and symmetric-function matrices differ for d={args.d}")
        return render_matrix(brute, fmt, {"method": "both", "agree": True})
    if args.command == "classify":
        if args.d < 2 or args.n < 2:
            raise DomainError("classify needs --d >= 2 and --n >= 2")
        return render_classify(args.d, args.n, fmt)
    if args.command == "galeryser":
        count = gale_ryser_count(args.rows, args.cols)
        if fmt == "json":
            return canonical_json({"rows": list(args.rows), "cols": list(args.cols.parts), "count": count}) + "\n"
        if fmt == "csv":
            return _csv([["rows", "cols", "count"], [",".join(map(str, args.rows)), str(args.cols), count]])
        return f"{count}\n"
    if args.command == "catalecticant":
        form = BinaryForm(args.coeffs)
        det = catalecticant_det(form)
        if fmt == "json":
            data = {"coeffs": [_fraction_text(c) for c in form.coeffs], "degree": form.degree,
                    "determinant": _fraction_text(det)}
            return canonical_json(data) + "\n"
        if fmt == "csv":
            return _csv([["degree", "determinant"], [form.degree, _fraction_text(det)]])
        return f"{_fraction_text(det)}\n"
    raise DomainError(f"unknown command {args.command!r}")


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str
    stderr: str


def run_command(argv: Sequence[str]) -> CommandResult:
    """Run one CLI invocation. Exit codes: 0 ok, 1 usage/domain/resource error, 2 consistency failure."""
    try:
        args = build_parser().parse_args(list(argv))
        return CommandResult(0, _dispatch(args), "")
    except ConsistencyError as exc:
        return CommandResult(2, "", f"internal consistency failure: {exc}\n")
    except (DomainError, ResourceError) as exc:
        return CommandResult(1, "", f"error: {exc}\n")
    except SystemExit as exc:
        # --help exits through argparse
        code = exc.code if isinstance(exc.code, int) else 1
        return CommandResult(code, "", "")


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    result = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
