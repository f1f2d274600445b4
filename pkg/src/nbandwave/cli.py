"""Command-line entry point: ``python -m nbandwave <command>``.

Exit codes: 0 success, 1 verification failure, 2 bad input or
parameters, 3 numerical failure in the cascade eigenproblem.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import presets
from .cascade import DEFAULT_DEPTH, CascadeError, cascade_table
from .construct import (
    ConstructionError,
    FilterBank,
    default_degrees,
    design_n2,
    family_n2,
    family_n3,
    general_design,
)
from .transform import Decomposition, TransformError, analyze, synthesize
from .verify import support_length, verify_bank

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3
FORMAT_TAG = "nbandwave-bank"


class InputError(ValueError):
    pass


# -- bank documents ----------------------------------------------------

def _clean(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.generic):
        return _clean(obj.item())
    return obj


def bank_to_document(bank: FilterBank, with_report: bool = True) -> dict:
    doc = {
        "format": FORMAT_TAG,
        "version": 1,
        "scale": bank.scale,
        "offset": bank.offset,
        "h": [float(v) for v in bank.h],
        "g": [[float(v) for v in g] for g in bank.g],
        "provenance": _clean(bank.provenance),
    }
    if with_report:
        doc["verification"] = _clean(verify_bank(bank).to_dict())
    return doc


def dumps_bank(bank: FilterBank) -> str:
    # float repr is the shortest string that round-trips bit-exactly
    return json.dumps(bank_to_document(bank), indent=2) + "\n"


def document_to_bank(doc: dict) -> FilterBank:
    try:
        if doc.get("format") != FORMAT_TAG:
            raise InputError(f"not a bank document (format tag {doc.get('format')!r})")
        scale = int(doc["scale"])
        h = np.array(doc["h"], dtype=float)
        g = tuple(np.array(x, dtype=float) for x in doc["g"])
        return FilterBank(scale, h, g, int(doc.get("offset", 0)), dict(doc.get("provenance") or {}))
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed bank document: {exc}") from exc


def load_bank(path) -> FilterBank:
    try:
        text = Path(path).read_text()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read bank document {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("malformed bank document: top level must be an object")
    return document_to_bank(doc)


def save_bank(bank: FilterBank, path) -> None:
    Path(path).write_text(dumps_bank(bank))


# -- CSV helpers -------------------------------------------------------

def _fmt(v) -> str:
    return format(float(v), ".17g")


def _write_csv(path, header, rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    with open(path, "w", newline="") as fh:
        fh.write(buf.getvalue())


def read_signal(path) -> np.ndarray:
    values = []
    try:
        with open(path, newline="") as fh:
            for i, row in enumerate(csv.reader(fh)):
                if not row or not row[0].strip():
                    continue
                try:
                    values.append(float(row[-1]))
                except ValueError:
                    if i == 0:
                        continue  # header
                    raise InputError(f"{path}: line {i + 1} is not a number: {row!r}")
    except OSError as exc:
        raise InputError(f"cannot read signal {path}: {exc}") from exc
    if not values:
        raise InputError(f"{path}: no samples")
    return np.array(values)


def write_signal(path, x) -> None:
    _write_csv(path, ["value"], [[_fmt(v)] for v in x])


def write_coefficients(path, d: Decomposition) -> None:
    rows = [[d.levels, 0, i, _fmt(v)] for i, v in enumerate(d.approx)]
    for pos, bands in enumerate(d.details):
        level = d.levels - pos
        for k, band in enumerate(bands, start=1):
            rows.extend([level, k, i, _fmt(v)] for i, v in enumerate(band))
    _write_csv(path, ["level", "band", "index", "value"], rows)


def read_coefficients(path, scale: int) -> Decomposition:
    groups: dict[tuple[int, int], dict[int, float]] = {}
    try:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            for row in reader:
                key = (int(row["level"]), int(row["band"]))
                groups.setdefault(key, {})[int(row["index"])] = float(row["value"])
    except OSError as exc:
        raise InputError(f"cannot read coefficients {path}: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed coefficient file {path}: {exc}") from exc
    if not groups:
        raise InputError(f"{path}: no coefficients")
    levels = max(lvl for lvl, _ in groups)

    def band(level, k):
        if (level, k) not in groups:
            raise InputError(f"{path}: missing level {level} band {k}")
        entries = groups[(level, k)]
        if sorted(entries) != list(range(len(entries))):
            raise InputError(f"{path}: level {level} band {k} has gaps in its indices")
        return np.array([entries[i] for i in range(len(entries))])

    approx = band(levels, 0)
    details = tuple(tuple(band(lvl, k) for k in range(1, scale)) for lvl in range(levels, 0, -1))
    return Decomposition(scale, approx, details)


# -- argument parsing ----------------------------------------------------

def _pi_fraction(text: str) -> float:
    try:
        return float(Fraction(text)) * math.pi
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected <num>/<den>, got {text!r}") from exc


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nbandwave", description="Orthogonal N-band wavelet filter banks.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("design", help="construct a bank and write its document")
    d.add_argument("--scale", type=int, default=None, help="number of bands N >= 2")
    t = d.add_mutually_exclusive_group()
    t.add_argument("--t", type=float, help="family parameter t (radians)")
    t.add_argument("--t-pi", type=_pi_fraction, dest="t_pi", metavar="NUM/DEN", help="t as a fraction of pi")
    u = d.add_mutually_exclusive_group()
    u.add_argument("--u", type=float, help="second two-band parameter u (radians)")
    u.add_argument("--u-pi", type=_pi_fraction, dest="u_pi", metavar="NUM/DEN", help="u as a fraction of pi")
    d.add_argument("--angles", type=_float_list, help="comma-separated Givens angles (radians)")
    d.add_argument("--degrees", type=_int_list, help="comma-separated degree vector k")
    d.add_argument("--reflect", action="store_true", help="use the determinant -1 rotation block")
    d.add_argument("--preset", help="build a named preset instead")
    d.add_argument("--out", "-o", help="output path (default: stdout)")

    v = sub.add_parser("verify", help="run the verification suite on a bank document")
    v.add_argument("bank")
    v.add_argument("--json", dest="json_out", help="also write the machine-readable report here ('-' for stdout)")
    v.add_argument("--tol", type=float, default=1e-10)

    c = sub.add_parser("cascade", help="sample phi and the wavelets on an N-adic grid")
    c.add_argument("bank")
    c.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    c.add_argument("--out", "-o", required=True)

    w = sub.add_parser("dwt", help="periodic analysis of a signal")
    w.add_argument("bank")
    w.add_argument("signal")
    w.add_argument("--levels", type=int, default=1)
    w.add_argument("--out", "-o", required=True)

    iw = sub.add_parser("idwt", help="periodic synthesis from a coefficient file")
    iw.add_argument("bank")
    iw.add_argument("coefficients")
    iw.add_argument("--out", "-o", required=True)

    sub.add_parser("presets", help="list the built-in presets")
    return p


def _design(args) -> FilterBank:
    if args.preset:
        try:
            return presets.lookup(args.preset).build()
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    n = args.scale
    if n is None:
        raise InputError("--scale is required unless --preset is given")
    if n < 2:
        raise InputError("--scale must be at least 2")
    t = args.t if args.t is not None else args.t_pi
    u = args.u if args.u is not None else args.u_pi
    degrees = tuple(args.degrees) if args.degrees is not None else None
    if degrees is not None and len(degrees) != n:
        raise InputError(f"--degrees needs {n} entries")

    if n == 2 and args.angles is None and not args.reflect:
        if degrees in (None, (0, 1)):
            return family_n2(t or 0.0, u)
        return design_n2(t or 0.0, u, degrees)
    if u is not None:
        raise InputError("--u only applies to the two-band family")
    if n == 3 and args.angles is None and t is not None:
        if degrees in (None, default_degrees(3)) and not args.reflect:
            return family_n3(t)
        return general_design(3, [t], degrees, reflect=args.reflect)
    if t is not None:
        raise InputError("--t applies to N=2 and N=3; use --angles for larger N")
    return general_design(n, args.angles, degrees, reflect=args.reflect)


def cmd_design(args, out, err) -> int:
    try:
        bank = _design(args)
    except ConstructionError as exc:
        err.write(f"error: {exc}\n")
        if exc.residual is not None:
            err.write(f"residual: {np.array2string(np.atleast_1d(exc.residual), precision=17)}\n")
        return EXIT_INPUT
    text = dumps_bank(bank)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    report = verify_bank(bank)
    (err if not args.out else out).write(report.to_table() + "\n")
    return EXIT_OK if report.overall else EXIT_VERIFY


def cmd_verify(args, out, err) -> int:
    bank = load_bank(args.bank)
    report = verify_bank(bank, tol=args.tol)
    out.write(report.to_table() + "\n")
    try:
        out.write(f"support length L = {support_length(bank)}\n")
    except ValueError:
        pass
    if args.json_out:
        text = json.dumps(_clean(report.to_dict()), indent=2) + "\n"
        if args.json_out == "-":
            out.write(text)
        else:
            Path(args.json_out).write_text(text)
    return EXIT_OK if report.overall else EXIT_VERIFY


def cmd_cascade(args, out, err) -> int:
    bank = load_bank(args.bank)
    if args.depth < 1:
        raise InputError("--depth must be >= 1")
    xs, cols = cascade_table(bank, args.depth)
    names = list(cols)
    rows = ([_fmt(x)] + [_fmt(cols[c][i]) for c in names] for i, x in enumerate(xs))
    _write_csv(args.out, ["x"] + names, rows)
    out.write(f"wrote {len(xs)} rows to {args.out}\n")
    return EXIT_OK


def cmd_dwt(args, out, err) -> int:
    bank = load_bank(args.bank)
    x = read_signal(args.signal)
    d = analyze(bank, x, args.levels)
    write_coefficients(args.out, d)
    out.write(f"wrote {d.length} coefficients ({d.levels} levels) to {args.out}\n")
    return EXIT_OK


def cmd_idwt(args, out, err) -> int:
    bank = load_bank(args.bank)
    d = read_coefficients(args.coefficients, bank.scale)
    x = synthesize(bank, d)
    write_signal(args.out, x)
    out.write(f"wrote {len(x)} samples to {args.out}\n")
    return EXIT_OK


def cmd_presets(args, out, err) -> int:
    for e in presets.enumerate_presets():
        par = f"t={e.t:+.6f}" + (f" u={e.u:+.6f}" if e.u is not None else "")
        out.write(f"{e.name:<20} N={e.scale}  {par}  {e.note}\n")
    return EXIT_OK


COMMANDS = {
    "design": cmd_design,
    "verify": cmd_verify,
    "cascade": cmd_cascade,
    "dwt": cmd_dwt,
    "idwt": cmd_idwt,
    "presets": cmd_presets,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out, err)
    except (InputError, TransformError, ConstructionError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except CascadeError as exc:
        err.write(f"numerical failure ({exc.reason}): {exc}\n")
        return EXIT_NUMERIC
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
