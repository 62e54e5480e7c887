"""Command-line front end.

Exit codes: 0 on success, 1 when ``reproduce`` finds a difference from the
golden file, 2 on malformed input (bad flags, config, or descriptor).
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Sequence

from exchstat import tables
from exchstat.audit import AuditVerdict, StatisticsSpec, classify
from exchstat.errors import ConfigError, ExchstatError
from exchstat.experiments import EXPERIMENTS, run_experiment
from exchstat.fock import Algebra, AlgebraKind, HamiltonianSpec, build_basis, fit_statistics, freeness_check, spectrum
from exchstat.partitions import enumerate_partitions
from exchstat.report import (
    VERDICT_HEADER,
    fmt_float,
    fmt_partition,
    fmt_rational,
    jsonable,
    parse_rational,
    render_csv,
    render_table,
    verdict_json,
    verdict_row,
)
from exchstat.symfunc import Basis, kostka_matrix
from exchstat.zoo import DISPLAY_NAMES, Family, FamilyParams, make_spec, parse_family

OUTPUTS = ("text", "json", "csv")
EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2

_SPEC_KEYS = {"label", "n", "side", "coefficients"}
_FAMILY_KEYS = {"family", "params", "label"}
_PARAM_KEYS = {"n", "q", "p", "alpha", "m_states"}


# ---------------------------------------------------------------- config

def _field(obj: dict, key: str, where: str):
    if key not in obj:
        raise ConfigError(f"missing field {key!r}", where)
    return obj[key]


def _int_field(obj: dict, key: str, where: str) -> int:
    value = _field(obj, key, where)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"expected an integer, got {value!r}", f"{where}.{key}")
    return value


def _family_params(entry: dict, where: str) -> FamilyParams:
    params = entry.get("params", {})
    if not isinstance(params, dict):
        raise ConfigError("params must be an object", f"{where}.params")
    unknown = set(params) - _PARAM_KEYS
    if unknown:
        raise ConfigError(f"unknown parameter(s) {sorted(unknown)}", f"{where}.params")
    if "q" in params and "p" in params:
        raise ConfigError("give q or p, not both", f"{where}.params")
    pw = f"{where}.params"
    q = params.get("q", params.get("p"))
    if q is not None and (isinstance(q, bool) or not isinstance(q, int)):
        raise ConfigError(f"expected an integer, got {q!r}", f"{pw}.{'q' if 'q' in params else 'p'}")
    alpha = None
    if "alpha" in params:
        try:
            alpha = parse_rational(params["alpha"])
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(str(exc), f"{pw}.alpha") from None
    m_states = _int_field(params, "m_states", pw) if "m_states" in params else None
    try:
        return FamilyParams(parse_family(str(entry["family"])), _int_field(params, "n", pw), q, alpha, m_states)
    except ExchstatError as exc:
        raise ConfigError(str(exc), where) from None


def _explicit_spec(entry: dict, where: str) -> StatisticsSpec:
    n = _int_field(entry, "n", where)
    if n < 1:
        raise ConfigError("n must be >= 1", f"{where}.n")
    side = _field(entry, "side", where)
    try:
        side = Basis(side)
    except ValueError:
        raise ConfigError(f"side must be 'schur' or 'monomial', got {side!r}", f"{where}.side") from None
    raw = _field(entry, "coefficients", where)
    if not isinstance(raw, list):
        raise ConfigError("coefficients must be a list of \"p/q\" strings", f"{where}.coefficients")
    size = len(enumerate_partitions(n))
    if len(raw) != size:
        raise ConfigError(f"need P({n})={size} coefficients, got {len(raw)}", f"{where}.coefficients")
    coeffs = []
    for k, text in enumerate(raw):
        try:
            coeffs.append(parse_rational(text))
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"not an exact rational: {text!r}", f"{where}.coefficients[{k}]") from None
    label = entry.get("label", "")
    try:
        return StatisticsSpec(n, side, tuple(coeffs), str(label))
    except ValueError as exc:
        raise ConfigError(str(exc), where) from None


def parse_audit_config(text: str) -> tuple[list[StatisticsSpec], str]:
    """Parse an audit config document into specs and an output format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ConfigError("top level must be an object", "config")
    unknown = set(doc) - {"specs", "output"}
    if unknown:
        raise ConfigError(f"unknown field(s) {sorted(unknown)}", "config")
    output = doc.get("output", "text")
    if output not in OUTPUTS:
        raise ConfigError(f"output must be one of {', '.join(OUTPUTS)}", "output")
    entries = _field(doc, "specs", "config")
    if not isinstance(entries, list) or not entries:
        raise ConfigError("specs must be a non-empty list", "specs")
    specs: list[StatisticsSpec] = []
    seen: dict[str, int] = {}
    for i, entry in enumerate(entries):
        where = f"specs[{i}]"
        if not isinstance(entry, dict):
            raise ConfigError("each spec must be an object", where)
        if "family" in entry:
            unknown = set(entry) - _FAMILY_KEYS
            if unknown:
                raise ConfigError(f"unknown field(s) {sorted(unknown)}", where)
            spec = make_spec_checked(_family_params(entry, where), where)
            if "label" in entry:
                spec = spec.with_label(str(entry["label"]))
        else:
            unknown = set(entry) - _SPEC_KEYS
            if unknown:
                raise ConfigError(f"unknown field(s) {sorted(unknown)}", where)
            spec = _explicit_spec(entry, where)
            if not spec.label:
                spec = spec.with_label(f"spec {i + 1}")
        if spec.label in seen:
            raise ConfigError(f"duplicate label {spec.label!r} (also specs[{seen[spec.label]}])", f"{where}.label")
        seen[spec.label] = i
        specs.append(spec)
    return specs, output


def make_spec_checked(params: FamilyParams, where: str) -> StatisticsSpec:
    try:
        return make_spec(params)
    except ExchstatError as exc:
        raise ConfigError(str(exc), where) from None


def audit_all(specs: Sequence[StatisticsSpec], workers: int | None = None) -> list[AuditVerdict]:
    """Classify every spec concurrently; results follow input order."""
    if len(specs) <= 1:
        return [classify(s) for s in specs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(classify, specs))


def render_verdicts(verdicts: Sequence[AuditVerdict], output: str) -> str:
    if output == "json":
        return json.dumps([verdict_json(v) for v in verdicts], indent=2, ensure_ascii=False)
    rows = [verdict_row(v) for v in verdicts]
    if output == "csv":
        return render_csv(VERDICT_HEADER, rows).rstrip("\n")
    return render_table(VERDICT_HEADER, rows)


# ---------------------------------------------------------------- subcommands

def _cmd_audit(args) -> int:
    if args.config and args.family:
        raise ConfigError("give either --config or --family", "arguments")
    if args.config:
        try:
            text = Path(args.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(exc.strerror or str(exc), args.config) from None
        specs, output = parse_audit_config(text)
        output = args.output or output
    elif args.family:
        if args.n is None:
            raise ConfigError("--family needs --n", "arguments")
        alpha = parse_rational(args.alpha) if args.alpha is not None else None
        specs = [make_spec(FamilyParams(parse_family(args.family), args.n, args.q, alpha, args.m_states))]
        output = args.output or "text"
    else:
        raise ConfigError("give --config or --family", "arguments")
    print(render_verdicts(audit_all(specs, args.workers), output))
    return EXIT_OK


def _cmd_kostka(args) -> int:
    if args.n < 1:
        raise ConfigError("N must be >= 1", "N")
    km = kostka_matrix(args.n, use_disk_cache=not args.no_cache)
    labels = [fmt_partition(p) for p in km.partitions]
    rows = [[labels[j]] + [str(x) for x in row] for j, row in enumerate(km.rows())]
    header = ["content \\ shape"] + labels
    if args.output == "json":
        print(json.dumps({"n": args.n, "partitions": labels, "rows": jsonable(km.rows())}, indent=2))
    elif args.output == "csv":
        print(render_csv(header, rows).rstrip("\n"))
    else:
        print(render_table(header, rows))
    return EXIT_OK


def _cmd_zoo(args) -> int:
    if args.family is None:
        for fam in Family:
            print(f"{fam.value:24} {DISPLAY_NAMES[fam]}")
        return EXIT_OK
    if args.n is None:
        raise ConfigError("--family needs --n", "arguments")
    alpha = parse_rational(args.alpha) if args.alpha is not None else None
    verdict = classify(make_spec(FamilyParams(parse_family(args.family), args.n, args.q, alpha, args.m_states)))
    if args.output == "json":
        print(json.dumps(verdict_json(verdict), indent=2, ensure_ascii=False))
        return EXIT_OK
    header = ["partition", "C", "Omega"]
    rows = [
        [fmt_partition(p), fmt_rational(c), fmt_rational(o)]
        for p, c, o in zip(verdict.spec.partitions, verdict.c, verdict.omega)
    ]
    print(render_csv(header, rows).rstrip("\n") if args.output == "csv" else render_table(header, rows))
    return EXIT_OK


def _parse_column(text: str, n: int) -> tuple[str, FamilyParams]:
    """"gentile:2" -> Gentile with q=2; "jack_21:1/2" -> alpha=1/2; bare names take no parameter."""
    name, _, arg = text.partition(":")
    fam = parse_family(name)
    q = alpha = None
    if arg:
        if fam is Family.JACK_21:
            alpha = parse_rational(arg)
        else:
            try:
                q = int(arg)
            except ValueError:
                raise ConfigError(f"expected an integer parameter, got {arg!r}", f"--column {text}") from None
    return text, FamilyParams(fam, n, q, alpha)


def _microstate_output(data: dict, output: str) -> str:
    if output == "json":
        return json.dumps(jsonable(data), indent=2)
    header = ["distribution", "type"] + list(data["columns"])
    rows = [[d, r["type"], *r["counts"]] for d, r in data["rows"].items()]
    rows.append(["total", "", *data["totals"]])
    if output == "csv":
        return render_csv(header, rows).rstrip("\n")
    return render_table(header, rows)


def _cmd_microstates(args) -> int:
    if args.n < 1 or args.e < args.n:
        raise ConfigError("need 1 <= N <= E", "arguments")
    names = args.column or ["boson", "fermion", "gentile:2", "gentile:3", "gentile:4"]
    columns = [_parse_column(c, args.n) for c in names]
    data = tables.microstate_table(columns, args.n, args.e)
    if data["totals"] != data["series_totals"]:
        # both routes are exact; a disagreement is a bug, not an input error
        raise RuntimeError(f"direct totals {data['totals']} differ from series totals {data['series_totals']}")
    print(_microstate_output(data, args.output))
    return EXIT_OK


def parse_fock_descriptor(text: str) -> tuple[Algebra, int, int, HamiltonianSpec, dict]:
    """Parse a model descriptor: {kind, q|m, sites, N, s, hamiltonian: {diagonal|hopping}}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ConfigError("top level must be an object", "descriptor")
    allowed = {"kind", "q", "m", "sites", "N", "s", "hamiltonian", "fit", "wang_rule"}
    unknown = set(doc) - allowed
    if unknown:
        raise ConfigError(f"unknown field(s) {sorted(unknown)}", "descriptor")
    kind = _field(doc, "kind", "descriptor")
    try:
        kind = AlgebraKind(kind)
    except ValueError:
        choices = ", ".join(k.value for k in AlgebraKind)
        raise ConfigError(f"kind must be one of {choices}", "kind") from None
    q = _int_field(doc, "q", "descriptor") if "q" in doc else None
    m = _int_field(doc, "m", "descriptor") if "m" in doc else None
    s = _int_field(doc, "s", "descriptor") if "s" in doc else 1
    sites = _int_field(doc, "sites", "descriptor")
    n = _int_field(doc, "N", "descriptor")
    if sites < 1 or n < 1:
        raise ConfigError("sites and N must be >= 1", "descriptor")
    try:
        alg = Algebra(kind, q, m, s)
    except ExchstatError as exc:
        raise ConfigError(str(exc), "descriptor") from None
    ham = _field(doc, "hamiltonian", "descriptor")
    if not isinstance(ham, dict) or len(ham) != 1 or not set(ham) <= {"diagonal", "hopping"}:
        raise ConfigError("hamiltonian must hold exactly one of diagonal or hopping", "hamiltonian")
    try:
        if "diagonal" in ham:
            spec = HamiltonianSpec(diagonal=tuple(float(x) for x in ham["diagonal"]))
        else:
            spec = HamiltonianSpec(hopping=tuple((i, j, float(t)) for i, j, t in ham["hopping"]))
        spec.single_particle_matrix(sites)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc), f"hamiltonian.{next(iter(ham))}") from None
    options = {"fit": bool(doc.get("fit", False)), "wang_rule": doc.get("wang_rule", "distinct")}
    return alg, sites, n, spec, options


def run_fock(alg: Algebra, sites: int, n: int, spec: HamiltonianSpec, options: dict) -> dict:
    basis = build_basis(alg, sites, n)
    report = freeness_check(alg, spec, sites, n, wang_rule=options["wang_rule"])
    out = {
        "kind": alg.kind.value,
        "sites": sites,
        "N": n,
        "dimension": len(basis),
        "spectrum": [fmt_float(x) for x in spectrum(alg, sites, n, spec)],
        "freeness": {
            "free": report.free,
            "max_deviation": fmt_float(report.max_deviation),
            "rule": report.rule,
            "candidates": [fmt_float(x) for x in report.candidates],
        },
    }
    if options["fit"]:
        out["statistics"] = verdict_json(fit_statistics(alg, n).verdict)
    return out


def _cmd_fock(args) -> int:
    try:
        text = Path(args.descriptor).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(exc.strerror or str(exc), args.descriptor) from None
    result = run_fock(*parse_fock_descriptor(text))
    if args.output == "json":
        print(json.dumps(result, indent=2, ensure_ascii=False))
    else:
        print(f"{result['kind']}: {result['N']} particles on {result['sites']} sites, dimension {result['dimension']}")
        print("spectrum: " + " ".join(result["spectrum"]))
        free = result["freeness"]
        print(f"free ({free['rule']}): {free['free']} (max deviation {free['max_deviation']})")
        if "statistics" in result:
            st = result["statistics"]
            print(f"C = ({', '.join(st['C'])}), Omega = ({', '.join(st['Omega'])})")
    return EXIT_OK


def _cmd_tensor_lab(args) -> int:
    if args.list or args.experiment is None:
        print("\n".join(EXPERIMENTS))
        return EXIT_OK
    if args.experiment not in EXPERIMENTS:
        raise ConfigError(f"unknown experiment; choose from {', '.join(EXPERIMENTS)}", "--experiment")
    print(json.dumps(run_experiment(args.experiment).to_json(), indent=2, ensure_ascii=False))
    return EXIT_OK


def _summary(table_id: str, observed: dict) -> str:
    if table_id in ("tbl-gentile", "paracount"):
        return _microstate_output(observed, "text") + "\ntotals " + "/".join(observed["totals"])
    return json.dumps(observed, indent=2, ensure_ascii=False)


def _cmd_reproduce(args) -> int:
    ids = list(tables.TABLES) if args.table_id == "all" else [args.table_id]
    if args.table_id != "all" and args.table_id not in tables.TABLES:
        raise ConfigError(f"unknown table; choose from all, {', '.join(tables.TABLES)}", "table-id")
    status = EXIT_OK
    for table_id in ids:
        observed, diffs = tables.reproduce(table_id)
        if not args.quiet:
            print(f"== {table_id}")
            print(_summary(table_id, observed))
        if table_id in tables.ANNOTATIONS:
            print("note: " + tables.ANNOTATIONS[table_id]())
        if diffs:
            status = EXIT_MISMATCH
            print(f"{table_id}: {len(diffs)} difference(s) from golden file")
            for line in diffs:
                print("  " + line)
        else:
            print(f"{table_id}: diff clean")
    return status


# ---------------------------------------------------------------- parser

def _family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="family name, e.g. gentile, paraboson, jack")
    p.add_argument("--n", type=int, help="particle number")
    p.add_argument("--q", "--p", dest="q", type=int, help="occupancy cap q or parastatistics order p")
    p.add_argument("--alpha", help="Jack parameter as \"p/q\"")
    p.add_argument("--m-states", type=int, help="single-particle states (capped distinguishable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="exchstat", description="Audit exchange statistics for particle systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("audit", help="render the QM/SM verdict for candidate statistics")
    p.add_argument("--config", help="JSON config with a list of specs")
    _family_flags(p)
    p.add_argument("--output", choices=OUTPUTS)
    p.add_argument("--workers", type=int, default=None, help="thread count for multi-spec audits")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("kostka", help="print the Kostka matrix for N")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("--output", choices=OUTPUTS, default="text")
    p.add_argument("--no-cache", action="store_true", help="skip the on-disk cache")
    p.set_defaults(func=_cmd_kostka)

    p = sub.add_parser("zoo", help="list families or show one family's C and Omega vectors")
    _family_flags(p)
    p.add_argument("--output", choices=OUTPUTS, default="text")
    p.set_defaults(func=_cmd_zoo)

    p = sub.add_parser("microstates", help="microstate counts per energy distribution")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--e", type=int, default=10, help="total energy, levels counted from 1")
    p.add_argument("--column", action="append", help="family[:q|p|alpha]; repeat for more columns")
    p.add_argument("--output", choices=OUTPUTS, default="text")
    p.set_defaults(func=_cmd_microstates)

    p = sub.add_parser("fock", help="diagonalize a deformed-oscillator model from a descriptor file")
    p.add_argument("descriptor")
    p.add_argument("--output", choices=("text", "json"), default="json")
    p.set_defaults(func=_cmd_fock)

    p = sub.add_parser("tensor-lab", help="run a tensor-space experiment")
    p.add_argument("--experiment")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=_cmd_tensor_lab)

    p = sub.add_parser("reproduce", help="regenerate a table and diff it against the golden file")
    p.add_argument("table_id", metavar="table-id")
    p.add_argument("--quiet", action="store_true", help="print only the diff status")
    p.set_defaults(func=_cmd_reproduce)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except (ExchstatError, ValueError, ZeroDivisionError) as exc:
        print(f"exchstat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
