"""Command-line interface.

Every subcommand writes one JSON document (``"schema": "1"``) to stdout, or
to ``--json PATH`` when given, and a short human-readable summary to stderr.
Errors produce a single JSON line on stderr and exit status 2; failed
verification suites exit with status 1.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from . import closedform, haar, matrixfn, partitions, schur, symchar, verify
from .errors import ResourceLimitError

SCHEMA = "1"

_NUMBER = {"type": "number"}
_COMPLEX = {"type": "array", "items": _NUMBER, "minItems": 2, "maxItems": 2}
_SCALAR = {"anyOf": [_NUMBER, _COMPLEX]}
_INTS = {"type": "array", "items": {"type": "integer"}}

# JSON Schema (draft 2020-12) for reports; each command adds its required keys.
_COMMAND_KEYS = {
    "partitions": {},
    "char": {"m": {"type": "integer"}, "classes": {"type": "array", "items": _INTS}},
    "schur": {"value": _SCALAR, "formula": {"enum": ["frobenius", "hook-content"]}},
    "immanant": {"value": _SCALAR},
    "avg": {"value": _SCALAR, "eta": _INTS},
    "integral": {"value": _SCALAR, "sigma": _INTS, "terms": {"type": "array"}},
    "mc": {
        "mean": _COMPLEX,
        "std_error": _NUMBER,
        "std_error_imag": _NUMBER,
        "samples": {"type": "integer", "minimum": 2},
        "seed": {"type": "integer"},
        "workers": {"type": "integer", "minimum": 1},
    },
    "verify": {
        "suite": {"type": "string"},
        "checks": {"type": "integer"},
        "passed": {"type": "integer"},
        "warnings": {"type": "integer"},
        "worst_margin": {"type": ["number", "null"]},
        "ok": {"type": "boolean"},
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "command"],
    "properties": {"schema": {"const": SCHEMA}, "command": {"enum": sorted(_COMMAND_KEYS)}},
    "allOf": [
        {
            "if": {"properties": {"command": {"const": name}}},
            "then": {"required": sorted(keys), "properties": keys},
        }
        for name, keys in _COMMAND_KEYS.items()
    ],
}

ERROR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "error"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA},
        "error": {
            "type": "object",
            "required": ["type", "message"],
            "properties": {"type": {"type": "string"}, "message": {"type": "string"}},
        },
    },
}


class CLIError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError("usage", f"{self.prog}: {message}")


def jsonable(x):
    """Convert results to JSON types; complex numbers become ``[re, im]``."""
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, tuple) else ",".join(map(str, k)): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return jsonable(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else float(x)
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, (float, np.floating)):
        return float(x)
    return x


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise CLIError("input", f"expected comma-separated integers, got {text!r}") from None


def parse_partition(text: str) -> tuple[int, ...]:
    try:
        return partitions.as_partition(parse_ints(text))
    except ValueError as exc:
        raise CLIError("input", str(exc)) from None


def parse_spectrum(text: str) -> np.ndarray:
    try:
        values = [complex(t.replace("i", "j")) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise CLIError("input", f"malformed spectrum {text!r}") from None
    return matrixfn.as_spectrum(values)


def _entry(value):
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, (int, float)) for v in value):
        return complex(value[0], value[1])
    raise CLIError("matrix", f"bad matrix entry {value!r}: expected a number or [re, im]")


def load_matrix(path: str) -> np.ndarray:
    """Read a JSON ``{"n": int, "rows": [...]}`` matrix or a real CSV matrix."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CLIError("io", f"cannot read {path}: {exc.strerror}") from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CLIError("matrix", f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
        if not isinstance(doc, dict) or "rows" not in doc or "n" not in doc:
            raise CLIError("matrix", f"{path}: expected keys 'n' and 'rows'")
        n, rows = doc["n"], doc["rows"]
        if not isinstance(n, int) or n < 1 or not isinstance(rows, list) or len(rows) != n:
            raise CLIError("matrix", f"{path}: 'rows' must hold n={n} rows")
        if any(not isinstance(r, list) or len(r) != n for r in rows):
            raise CLIError("matrix", f"{path}: every row must have {n} entries")
        arr = np.array([[_entry(v) for v in row] for row in rows])
    else:
        try:
            rows = [[float(v) for v in row] for row in csv.reader(io.StringIO(text)) if row]
        except ValueError:
            raise CLIError("matrix", f"{path}: CSV entries must be real numbers") from None
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise CLIError("matrix", f"{path}: CSV matrix must be square")
        arr = np.array(rows, dtype=complex)
    if np.all(arr.imag == 0):
        arr = arr.real.copy()
    try:
        return matrixfn.as_matrix(arr)
    except ValueError as exc:
        raise CLIError("matrix", f"{path}: {exc}") from None


def _spectrum_from(args) -> np.ndarray:
    if (args.matrix is None) == (args.spectrum is None):
        raise CLIError("usage", "give exactly one of --matrix or --spectrum")
    if args.spectrum is not None:
        return parse_spectrum(args.spectrum)
    return matrixfn.hermitian_spectrum(load_matrix(args.matrix))


def _matrix_from(args) -> np.ndarray:
    if (args.matrix is None) == (args.spectrum is None):
        raise CLIError("usage", "give exactly one of --matrix or --spectrum")
    if args.spectrum is not None:
        return np.diag(parse_spectrum(args.spectrum))
    return matrixfn.hermitian_check(load_matrix(args.matrix))


def _character(eta, induced: bool) -> symchar.ClassFunction:
    return symchar.induced_character(eta) if induced else symchar.irreducible_character(eta)


def cmd_partitions(args):
    if args.dominates:
        a, b = (parse_partition(t) for t in args.dominates)
        return {"a": a, "b": b, "dominates": partitions.dominates(a, b)}, f"{a} >= {b}: {partitions.dominates(a, b)}"
    if args.path:
        a, b = (parse_partition(t) for t in args.path)
        path = partitions.dominance_path(a, b)
        return {"a": a, "b": b, "path": path}, "\n".join(map(str, path))
    if args.m is None:
        raise CLIError("usage", "partitions needs --m, --dominates or --path")
    parts = partitions.all_partitions(args.m, args.max_parts)
    rows = [
        {"partition": p, "syt": partitions.syt_count(p), "multinomial": partitions.multinomial(p, args.m)}
        for p in parts
    ]
    table = "\n".join(f"{str(r['partition']):<24} syt={r['syt']:<6} multinomial={r['multinomial']}" for r in rows)
    return {"m": args.m, "max_parts": args.max_parts, "partitions": rows}, table


def cmd_char(args):
    table = symchar.class_table(args.n)
    if args.table or args.eta is None:
        rows = {eta: chi.values for eta, chi in symchar.character_table(args.n).items()}
        if args.induced:
            rows = {eta: symchar.induced_character(eta).values for eta in rows}
        doc = {
            "m": args.n,
            "induced": bool(args.induced),
            "classes": table.classes,
            "sizes": table.sizes,
            "rows": [{"partition": eta, "values": vals} for eta, vals in rows.items()],
        }
        width = max(len(str(c)) for c in table.classes) + 2
        lines = [" " * 16 + "".join(f"{str(c):>{width}}" for c in table.classes)]
        lines += [f"{str(eta):<16}" + "".join(f"{v:>{width}}" for v in vals) for eta, vals in rows.items()]
        return doc, "\n".join(lines)
    eta = parse_partition(args.eta)
    chi = _character(eta, args.induced)
    doc = {
        "m": chi.m,
        "partition": eta,
        "induced": bool(args.induced),
        "classes": symchar.class_table(chi.m).classes,
        "values": chi.values,
    }
    return doc, " ".join(map(str, chi.values))


def cmd_schur(args):
    eta = parse_partition(args.eta)
    if (args.spectrum is None) == (args.ones is None):
        raise CLIError("usage", "give exactly one of --spectrum or --ones")
    if args.ones is not None:
        value = schur.schur_at_ones(eta, args.ones)
        return {"eta": eta, "n": args.ones, "value": value, "formula": "hook-content"}, f"s_{eta}(1^{args.ones}) = {value}"
    spec = parse_spectrum(args.spectrum)
    value = schur.schur_at_spectrum(eta, spec)
    return {"eta": eta, "spectrum": spec, "value": value, "formula": "frobenius"}, f"s_{eta} = {value}"


def cmd_immanant(args):
    a = load_matrix(args.matrix)
    if args.eta is not None:
        eta = parse_partition(args.eta)
        f = _character(eta, args.induced)
        label = f"{'[' if args.induced else 'chi'}{eta}"
    elif args.kind == "det":
        f, eta, label = symchar.sign_character(a.shape[0]), None, "det"
    else:
        f, eta, label = symchar.trivial_character(a.shape[0]), None, "per"
    value = matrixfn.matrix_function(a, f)
    return {"eta": eta, "induced": bool(args.induced), "kind": args.kind, "value": value}, f"d_{label}(A) = {value}"


def cmd_avg(args):
    spec = _spectrum_from(args)
    eta = parse_partition(args.eta)
    if args.induced:
        value = closedform.averaged_induced_immanant(spec, eta)
        doc = {"eta": eta, "induced": True, "spectrum": spec, "value": value,
               "ingredients": {"kostka": {mu: symchar.kostka(mu, eta) for mu in partitions.all_partitions(sum(eta))},
                               "averaged_immanants": closedform.averaged_immanants(spec, sum(eta))}}
    else:
        res = closedform.averaged_immanant(spec, eta)
        doc = {"spectrum": spec, "induced": False, **res.to_dict()}
        value = res.value
    return doc, f"avg d_{eta} = {value}"


def cmd_integral(args):
    spec = _spectrum_from(args)
    sigma = parse_partition(args.sigma)
    m = sum(sigma)
    value = closedform.matrix_element_integral(spec, sigma)
    s = schur.schur_values(spec, m)
    terms = [
        {"eta": eta, "s_eta_at_spec": s[eta], "s_eta_at_ones": schur.schur_at_ones(eta, len(spec)),
         "chi_e": symchar.irreducible_character(eta).at_identity,
         "chi_sigma": symchar.irreducible_character(eta)(sigma)}
        for eta in partitions.all_partitions(m, max_parts=len(spec))
    ]
    return {"sigma": sigma, "spectrum": spec, "value": value, "terms": terms}, f"I(A, {sigma}) = {value}"


def cmd_mc(args):
    a = _matrix_from(args)
    chosen = [x is not None for x in (args.eta, args.sigma, args.diagonal)]
    if sum(chosen) != 1:
        raise CLIError("usage", "give exactly one of --eta, --sigma or --diagonal")
    if args.samples < 2:
        raise CLIError("usage", "--samples must be at least 2")
    workers = args.workers
    if args.eta is not None:
        eta = parse_partition(args.eta)
        est = haar.mc_average_df(a, _character(eta, args.induced), args.samples, args.seed, workers)
        target = {"eta": eta, "induced": bool(args.induced)}
    elif args.sigma is not None:
        sigma = parse_partition(args.sigma)
        est = haar.mc_matrix_element_product(a, sigma, samples=args.samples, seed=args.seed, workers=workers)
        target = {"sigma": sigma}
    else:
        gamma = parse_partition(args.diagonal)
        est = haar.mc_diagonal_power_product(a, gamma, args.samples, args.seed, workers)
        target = {"diagonal": gamma}
    doc = {**target, **est.to_dict()}
    return doc, f"mean = {est.mean.real:.10g} +/- {est.std_error:.3g} ({est.samples} samples, seed {est.seed})"


def cmd_verify(args):
    if args.suite == "theorem9":
        report = verify.verify_orthogonality_suite(args.n, args.m)
    else:
        report = verify.SUITES[args.suite](args.n, args.trials, args.seed)
    s = report.summary()
    text = (
        f"{s['suite']}: {s['passed']}/{s['checks']} passed, {s['warnings']} warnings, "
        f"worst margin {s['worst_margin']:.3e}" + ("" if report.ok else "  FAILED")
    )
    return report.to_dict(cases=not args.summary_only), text, (0 if report.ok else 1)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="haar-immanant", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", metavar="PATH", help="write the JSON report here instead of stdout")
        return sp

    def source(sp):
        sp.add_argument("--matrix", metavar="FILE", help="JSON or CSV matrix file")
        sp.add_argument("--spectrum", metavar="L1,L2,...", help="eigenvalues instead of a matrix")

    sp = common(sub.add_parser("partitions", help="list partitions, dominance and paths"))
    sp.add_argument("--m", type=int)
    sp.add_argument("--max-parts", type=int)
    sp.add_argument("--dominates", nargs=2, metavar=("A", "B"))
    sp.add_argument("--path", nargs=2, metavar=("A", "B"))

    sp = common(sub.add_parser("char", help="symmetric group characters"))
    sp.add_argument("--n", type=int, required=True, help="degree m of S_m")
    sp.add_argument("--table", action="store_true")
    sp.add_argument("--eta")
    sp.add_argument("--induced", action="store_true")

    sp = common(sub.add_parser("schur", help="Schur polynomial values"))
    sp.add_argument("--eta", required=True)
    sp.add_argument("--spectrum")
    sp.add_argument("--ones", type=int)

    sp = common(sub.add_parser("immanant", help="d_f(A) for a matrix"))
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--eta")
    sp.add_argument("--induced", action="store_true")
    sp.add_argument("--kind", choices=["det", "per"], default="per")

    sp = common(sub.add_parser("avg", help="closed-form Haar conjugation average"))
    source(sp)
    sp.add_argument("--eta", required=True)
    sp.add_argument("--induced", action="store_true")

    sp = common(sub.add_parser("integral", help="closed-form matrix-element integral"))
    source(sp)
    sp.add_argument("--sigma", required=True, help="cycle type, e.g. 2,1")

    sp = common(sub.add_parser("mc", help="Monte Carlo Haar average"))
    source(sp)
    sp.add_argument("--eta")
    sp.add_argument("--induced", action="store_true")
    sp.add_argument("--sigma")
    sp.add_argument("--diagonal", metavar="GAMMA")
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=None)

    sp = common(sub.add_parser("verify", help="inequality verification suites"))
    sp.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--summary-only", action="store_true")
    return p


COMMANDS = {
    "partitions": cmd_partitions,
    "char": cmd_char,
    "schur": cmd_schur,
    "immanant": cmd_immanant,
    "avg": cmd_avg,
    "integral": cmd_integral,
    "mc": cmd_mc,
    "verify": cmd_verify,
}


def _error_line(kind: str, message: str) -> str:
    return json.dumps({"schema": SCHEMA, "error": {"type": kind, "message": message}})


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = COMMANDS[args.command](args)
    except CLIError as exc:
        print(_error_line(exc.kind, str(exc)), file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(_error_line("resource-limit", str(exc)), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(_error_line("invalid-argument", str(exc)), file=sys.stderr)
        return 2
    doc, text, status = result if len(result) == 3 else (*result, 0)
    payload = json.dumps({"schema": SCHEMA, "command": args.command, **jsonable(doc)}, indent=2)
    if args.json:
        Path(args.json).write_text(payload + "\n")
    else:
        print(payload)
    print(text, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
