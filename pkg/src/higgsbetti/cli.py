"""
Command-line interface.

    higgsbetti report --genus 2 --rank 2 --degree 1 --flavor GL --format json
    higgsbetti index --genus 2 --ranks 1,1 --degrees 1,0

Exit status: 0 on success, 1 on a typed domain error (a JSON error object is
written to stderr), 2 on malformed arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from math import gcd

from .betti import Flavor, ModuliSpec, higgs_poincare, rank2_components
from .curve import CurveContext, hitchin_base_dim, moduli_dim, stable_bundles_dim
from .errors import HiggsError, NonCoprime
from .polyalg import IntPolynomial
from .spectral import spectral_report
from .vhs import EXTRAPOLATED, PAPER_VERIFIED, VHSType, enumerate_line_chains, morse_index

SECTIONS = ("dims", "spectral", "fixed_points", "betti")
FORMATS = ("text", "json", "csv")

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class ReportRequest:
    genus: int
    rank: int
    degree: int
    flavor: Flavor = Flavor.GL
    format: str = "text"
    sections: tuple[str, ...] = SECTIONS

    def __post_init__(self):
        object.__setattr__(self, "flavor", Flavor.parse(self.flavor))
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        bad = [s for s in self.sections if s not in SECTIONS]
        if bad:
            raise ValueError(f"unknown sections {bad}")


# -- report assembly ---------------------------------------------------------


def _fixed_points(ctx: CurveContext, r: int, d: int) -> list[dict]:
    if gcd(r, d) != 1:
        raise NonCoprime(f"gcd({r}, {d}) != 1: fixed points are only listed for coprime (r, d)")
    if r == 1:
        return [{"ranks": [1], "degrees": [d], "index": 0, "provenance_flag": PAPER_VERIFIED}]
    if r == 2:
        return [
            {
                "ranks": list(c.vhs_type.ranks),
                "degrees": list(c.vhs_type.degrees),
                "index": c.morse_index,
                "provenance_flag": c.provenance_flag,
            }
            for c in rank2_components(ctx, d)
        ]
    # mixed-rank chains such as (2,1) are not enumerated
    types = [VHSType((r,), (d,))] + enumerate_line_chains(ctx, r, d)
    return [
        {
            "ranks": list(t.ranks),
            "degrees": list(t.degrees),
            "index": morse_index(ctx, t),
            "provenance_flag": EXTRAPOLATED,
        }
        for t in types
    ]


def _betti(spec: ModuliSpec) -> dict:
    rep = higgs_poincare(spec)
    return {
        "components": [
            {
                "ranks": list(c.vhs_type.ranks),
                "degrees": list(c.vhs_type.degrees),
                "index": c.morse_index,
                "poly": c.component_poly.to_list(),
                "description": c.description,
                "provenance_flag": c.provenance_flag,
            }
            for c in rep.components
        ],
        "total": rep.total.to_list(),
        "factorization": (
            [f.to_list() for f in rep.factorization] if rep.factorization else None
        ),
        "provenance_flag": rep.provenance_flag,
        "notes": list(rep.notes),
    }


def build_report(req: ReportRequest) -> dict:
    """Compute every requested section; typed errors propagate."""
    ctx = CurveContext(req.genus)
    r, d = req.rank, req.degree
    out: dict = {
        "spec": {"genus": req.genus, "rank": r, "degree": d, "flavor": req.flavor.value}
    }
    if "dims" in req.sections:
        out["dims"] = {
            "base": hitchin_base_dim(ctx, r),
            "total": moduli_dim(ctx, r),
            "stable_bundles": stable_bundles_dim(ctx, r),
        }
    if "spectral" in req.sections:
        sd = spectral_report(ctx, r, d)
        out["spectral"] = {
            "spectral_genus": sd.spectral_genus,
            "line_degree": sd.line_degree,
            "fibre_dim": sd.fibre_dim,
            "base_dim": sd.base_dim,
        }
    if "fixed_points" in req.sections:
        out["fixed_points"] = _fixed_points(ctx, r, d)
    if "betti" in req.sections:
        out["betti"] = _betti(ModuliSpec(req.genus, r, d, req.flavor))
    return out


# -- rendering ---------------------------------------------------------------


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _label(ranks, degrees) -> str:
    return str(VHSType(tuple(ranks), tuple(degrees)))


def _factored(report_betti: dict, genus: int) -> str:
    fac = report_betti["factorization"]
    if fac is None:
        return str(IntPolynomial(report_betti["total"]))
    rest = IntPolynomial(fac[1])
    head = f"(1+y)^{2 * genus}"
    if rest == IntPolynomial((1,)):
        return head
    return f"{head}({rest})"


def render_text(report: dict) -> str:
    s = report["spec"]
    lines = [
        f"Higgs moduli: genus {s['genus']}, rank {s['rank']}, degree {s['degree']}, "
        f"flavor {s['flavor']}"
    ]
    if "dims" in report:
        dm = report["dims"]
        lines.append(
            f"dims: base {dm['base']}, total {dm['total']}, "
            f"stable_bundles {dm['stable_bundles']}"
        )
    if "spectral" in report:
        sp = report["spectral"]
        lines.append(
            f"spectral: spectral_genus {sp['spectral_genus']}, "
            f"line_degree {sp['line_degree']}, fibre_dim {sp['fibre_dim']}"
        )
    if "fixed_points" in report:
        lines.append("fixed points:")
        for fp in report["fixed_points"]:
            lab = _label(fp["ranks"], fp["degrees"])
            lines.append(f"  {lab:<20} index {fp['index']:<4} [{fp['provenance_flag']}]")
    if "betti" in report:
        b = report["betti"]
        lines.append(f"betti [{b['provenance_flag']}]:")
        for c in b["components"]:
            lab = _label(c["ranks"], c["degrees"])
            poly = IntPolynomial(c["poly"])
            lines.append(f"  {lab:<20} y^{c['index']} * ({poly})  -- {c['description']}")
        lines.append(f"  P_y = {_factored(b, s['genus'])}")
        lines.append(f"  P_y = {IntPolynomial(b['total'])}")
        lines.append(f"  betti numbers: {b['total']}")
        for note in b["notes"]:
            lines.append(f"  note: {note}")
    return "\n".join(lines) + "\n"


def render_csv(report: dict) -> str:
    """Long format: one row per quantity, one row per fixed component."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["section", "item", "ranks", "degrees", "index", "value"])
    join = lambda xs: " ".join(map(str, xs))  # noqa: E731
    for sec in ("dims", "spectral"):
        for k, v in report.get(sec, {}).items():
            w.writerow([sec, k, "", "", "", v])
    for fp in report.get("fixed_points", []):
        w.writerow(["fixed_points", "component", join(fp["ranks"]), join(fp["degrees"]),
                    fp["index"], ""])
    if "betti" in report:
        b = report["betti"]
        for c in b["components"]:
            w.writerow(["betti", "component", join(c["ranks"]), join(c["degrees"]),
                        c["index"], join(c["poly"])])
        w.writerow(["betti", "total", "", "", "", join(b["total"])])
        w.writerow(["betti", "provenance_flag", "", "", "", b["provenance_flag"]])
    return buf.getvalue()


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


# -- argument parsing --------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _sections(text: str) -> tuple[str, ...]:
    if text == "all":
        return SECTIONS
    parts = tuple(p.strip() for p in text.split(",") if p.strip())
    bad = [p for p in parts if p not in SECTIONS]
    if bad or not parts:
        raise argparse.ArgumentTypeError(
            f"unknown sections {bad}; choose from {', '.join(SECTIONS)} or 'all'"
        )
    return parts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="higgsbetti",
        description="Dimensions, spectral data, fixed loci and Betti numbers of Higgs moduli spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="full report for one (genus, rank, degree)")
    rep.add_argument("--genus", type=int, required=True)
    rep.add_argument("--rank", type=int, required=True)
    rep.add_argument("--degree", type=int, required=True)
    rep.add_argument("--flavor", choices=[f.value for f in Flavor], default="GL")
    rep.add_argument("--format", choices=FORMATS, default="text")
    rep.add_argument("--sections", type=_sections, default=SECTIONS,
                     help="comma list from dims,spectral,fixed_points,betti (default: all)")

    idx = sub.add_parser("index", help="Morse index of one fixed-point type")
    idx.add_argument("--genus", type=int, required=True)
    idx.add_argument("--ranks", type=_int_list, required=True)
    idx.add_argument("--degrees", type=_int_list, required=True,
                     help="use --degrees=-1,0 when the list starts with a minus sign")
    return parser


def _fail(err: HiggsError, stream) -> int:
    payload = {"error": {"code": err.code, "message": str(err)}}
    stream.write(json.dumps(payload, sort_keys=True) + "\n")
    return EXIT_DOMAIN


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "index":
        if len(args.ranks) != len(args.degrees) or not args.ranks:
            stderr.write("error: --ranks and --degrees must be nonempty lists of equal length\n")
            return EXIT_USAGE
        if any(r < 1 for r in args.ranks):
            stderr.write("error: ranks must be positive\n")
            return EXIT_USAGE
        try:
            beta = morse_index(CurveContext(args.genus), VHSType(args.ranks, args.degrees))
        except HiggsError as err:
            return _fail(err, stderr)
        stdout.write(f"{beta}\n")
        return EXIT_OK

    if args.rank < 1:
        stderr.write("error: --rank must be >= 1\n")
        return EXIT_USAGE
    req = ReportRequest(args.genus, args.rank, args.degree, args.flavor, args.format, args.sections)
    try:
        report = build_report(req)
    except HiggsError as err:
        return _fail(err, stderr)
    stdout.write(RENDERERS[req.format](report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
