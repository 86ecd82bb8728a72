"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 validation error,
3 disconnected graph, 4 matrix cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import defaultdict

from . import closed_forms as cf
from .distance_spectra import (
    diameter,
    distance_energy,
    distance_first_row,
    distance_spectrum,
    wiener_index,
)
from .errors import CapExceeded, Disconnected, IcgError, ValidationError
from .icg_core import (
    DEFAULT_ORACLE_CAP,
    IcgSpec,
    adjacency_spectrum,
    all_divisor_sets,
    symbol_set,
)
from .oracle import (
    full_distance_matrix,
    pairwise_distance_sum,
    verify_circulant,
    verify_spectrum_by_moments,
)

EXIT_OK, EXIT_MISMATCH, EXIT_VALIDATION, EXIT_DISCONNECTED, EXIT_CAP = range(5)


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for tok in text.split(","):
        try:
            p, q = tok.split(":")
            pairs.append((int(p), int(q)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected p:q pairs, got {tok!r}")
    return pairs


def record(spec: IcgSpec, quantity: str, **payload) -> dict:
    return {"n": spec.n, "divisors": list(spec.divisors), "quantity": quantity, **payload}


def spectrum_record(spec: IcgSpec, quantity: str, spectrum) -> dict:
    return record(
        spec,
        quantity,
        indexed=list(spectrum.values),
        multiset=[[v, m] for v, m in spectrum.multiset],
    )


# -- rendering ---------------------------------------------------------------


def _plain(rec: dict) -> str:
    head = f"ICG_{rec['n']}({','.join(map(str, rec['divisors']))}) {rec['quantity']}"
    if "multiset" in rec:
        ms = " ".join(f"{v}^{m}" for v, m in rec["multiset"])
        return f"{head}\n  indexed: {' '.join(map(str, rec['indexed']))}\n  multiset: {ms}"
    return f"{head}: {rec['value']}"


def _csv(rec: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "indexed" in rec:
        w.writerow(["r", "value"])
        w.writerows(enumerate(rec["indexed"]))
    else:
        w.writerow(["quantity", "value"])
        w.writerow([rec["quantity"], rec["value"]])
    return buf.getvalue().rstrip("\n")


def render(rec: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec)
    if fmt == "csv":
        return _csv(rec)
    return _plain(rec)


class Output:
    """Collects lines for stdout and, when --out is given, the same payload
    for a file."""

    def __init__(self, path: str | None):
        self.path = path
        self.lines: list[str] = []

    def emit(self, text: str) -> None:
        print(text)
        self.lines.append(text)

    def close(self) -> None:
        if self.path:
            with open(self.path, "w") as fh:
                fh.write("\n".join(self.lines) + "\n")


# -- commands ----------------------------------------------------------------


def _spec(args) -> IcgSpec:
    return IcgSpec(args.n, tuple(args.divisors))


def cmd_spectrum(args, out: Output) -> int:
    spec = _spec(args)
    if args.adjacency:
        rec = spectrum_record(spec, "adjacency_spectrum", adjacency_spectrum(spec))
    else:
        rec = spectrum_record(spec, "distance_spectrum", distance_spectrum(spec))
    out.emit(render(rec, args.format))
    return EXIT_OK


def _scalar_command(quantity, fn):
    def run(args, out: Output) -> int:
        spec = _spec(args)
        out.emit(render(record(spec, quantity, value=fn(spec)), args.format))
        return EXIT_OK

    return run


cmd_energy = _scalar_command("distance_energy", distance_energy)
cmd_wiener = _scalar_command("wiener_index", wiener_index)
cmd_diameter = _scalar_command("diameter", diameter)


def cmd_matrix(args, out: Output) -> int:
    spec = _spec(args)
    if args.full:
        m = full_distance_matrix(spec, cap=args.cap)
        rows = [[int(x) for x in row] for row in m]
    else:
        rows = [list(distance_first_row(spec))]
    if args.format == "json":
        out.emit(json.dumps(record(spec, "distance_matrix" if args.full else "first_row", rows=rows)))
    else:
        sep = "," if args.format == "csv" else " "
        for row in rows:
            out.emit(sep.join(map(str, row)))
    return EXIT_OK


def verify_spec(spec: IcgSpec, cap: int = DEFAULT_ORACLE_CAP) -> dict:
    """Run every oracle cross-check for one spec; returns a JSON-ready dict."""
    m = full_distance_matrix(spec, cap=cap)
    spectrum = distance_spectrum(spec)
    report = verify_spectrum_by_moments(m, spectrum.multiset, cap=cap)
    brute_w = pairwise_distance_sum(m)
    checks = {
        "circulant": verify_circulant(m),
        "first_row": [int(x) for x in m[0]] == list(distance_first_row(spec)),
        "moments": report.matched,
        "wiener": brute_w == wiener_index(spec),
    }
    return {
        "matched": all(checks.values()),
        "checks": checks,
        "checked_moments": report.checked_moments,
        "first_mismatch": list(report.first_mismatch) if report.first_mismatch else None,
        "wiener_brute": brute_w,
    }


def cmd_verify(args, out: Output) -> int:
    spec = _spec(args)
    result = verify_spec(spec, cap=args.cap)
    if args.format == "json":
        out.emit(json.dumps(record(spec, "verification", verification=result)))
    else:
        status = "matched" if result["matched"] else "MISMATCH"
        out.emit(f"{spec}: {status} ({result['checked_moments']} moments)")
        for name, ok in result["checks"].items():
            out.emit(f"  {name}: {'ok' if ok else 'FAIL'}")
        if result["first_mismatch"]:
            k, tr, pred = result["first_mismatch"]
            out.emit(f"  first mismatch at k={k}: trace {tr} != predicted {pred}")
    return EXIT_OK if result["matched"] else EXIT_MISMATCH


def family_summary(pair: cf.FamilyPair) -> dict:
    left_spec, right_spec = pair.left, pair.right
    left, right = distance_spectrum(left_spec), distance_spectrum(right_spec)
    e_left, e_right = left.energy, right.energy
    return {
        "n": left_spec.n,
        "left": list(left_spec.divisors),
        "right": list(right_spec.divisors),
        "energies": [e_left, e_right],
        "predicted_energy": pair.predicted_energy,
        "equienergetic": e_left == e_right == pair.predicted_energy,
        "cospectral": left.multiset == right.multiset,
        "diameters": [diameter(left_spec), diameter(right_spec)],
        "left_subgraph_of_right": symbol_set(left_spec) <= symbol_set(right_spec),
    }


def cmd_families(args, out: Output) -> int:
    if args.kind == "3p":
        if not args.p:
            raise argparse.ArgumentTypeError("--kind 3p needs --p")
        pairs = [cf.family_3p(p) for p in args.p]
    else:
        if not args.pairs:
            raise argparse.ArgumentTypeError("--kind 2pq needs --pairs")
        pairs = [cf.family_2pq(p, q) for p, q in args.pairs]
    for pair in pairs:
        s = family_summary(pair)
        if args.format == "json":
            out.emit(json.dumps(s))
        else:
            out.emit(
                f"n={s['n']} ({','.join(map(str, s['left']))}) vs ({','.join(map(str, s['right']))}): "
                f"energies {s['energies'][0]} = {s['energies'][1]} (predicted {s['predicted_energy']}), "
                f"{'cospectral' if s['cospectral'] else 'non-cospectral'}, "
                f"diameters {s['diameters'][0]},{s['diameters'][1]}"
            )
    return EXIT_OK


def scan_modulus(n: int) -> list[dict]:
    """Groups of connected ICG_n(D) with equal distance energy and at least
    two distinct spectra. Cospectral specs are merged into one spectrum
    class so no group contains two equal multisets."""
    by_energy: dict[int, dict[tuple, list[list[int]]]] = defaultdict(dict)
    for spec in all_divisor_sets(n, connected_only=True):
        spectrum = distance_spectrum(spec)
        by_energy[spectrum.energy].setdefault(spectrum.multiset, []).append(list(spec.divisors))
    groups = []
    for energy in sorted(by_energy):
        classes = by_energy[energy]
        if len(classes) < 2:
            continue
        members = sorted(classes.values())
        groups.append(
            {
                "n": n,
                "energy": energy,
                "classes": [
                    {"divisor_sets": specs, "multiset": [list(vm) for vm in ms]}
                    for ms, specs in sorted(classes.items(), key=lambda kv: kv[1])
                ],
                "members": [ds for cls in members for ds in cls],
            }
        )
    return groups


def cmd_scan(args, out: Output) -> int:
    for n in range(2, args.max_n + 1):
        for g in scan_modulus(n):
            if args.format == "json":
                out.emit(json.dumps(g))
            else:
                classes = " | ".join(
                    " ~ ".join(f"({','.join(map(str, ds))})" for ds in c["divisor_sets"])
                    for c in g["classes"]
                )
                out.emit(f"n={g['n']} energy={g['energy']}: {classes}")
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icgdist", description="Distance spectra of integral circulant graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec=True):
        if spec:
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--divisors", type=parse_int_list, required=True)
        p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
        p.add_argument("--out", default=None, help="also write the output to this file")
        return p

    p = common(sub.add_parser("spectrum", help="distance (or adjacency) spectrum"))
    p.add_argument("--adjacency", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    for name, fn in (("energy", cmd_energy), ("wiener", cmd_wiener), ("diameter", cmd_diameter)):
        common(sub.add_parser(name)).set_defaults(func=fn)

    p = common(sub.add_parser("matrix", help="first row or full distance matrix"))
    p.add_argument("--full", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.set_defaults(func=cmd_matrix)

    p = common(sub.add_parser("verify", help="brute-force cross-check"))
    p.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("families", help="equienergetic families"), spec=False)
    p.add_argument("--kind", choices=["3p", "2pq"], required=True)
    p.add_argument("--p", type=parse_int_list)
    p.add_argument("--pairs", type=parse_pairs)
    p.set_defaults(func=cmd_families)

    p = common(sub.add_parser("scan", help="search for equienergetic groups"), spec=False)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument(
        "--connected-only",
        action="store_true",
        default=True,
        help="only connected graphs are scanned (always on; distance energy needs connectivity)",
    )
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.out)
    try:
        code = args.func(args, out)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Disconnected as exc:
        print(f"error: Disconnected: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except CapExceeded as exc:
        print(f"error: CapExceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except IcgError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    out.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
