"""Command-line front end.

Subcommands: faces, polytope, strata, integrality, verify-numeric, verify-all.
Reports are emitted as text or as JSON with a stable field order, so a run is
byte-for-byte reproducible given the same configuration (including the seed).
Exit codes: 0 all verifications pass, 1 input error, 2 theorem-violation
diagnostic (an internal cross-check failed, i.e. a bug).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidInputError, TheoremViolationError
from .faces import classify_faces, parabolic_report
from .integrality import check_integral, induce_face_weight
from .linalg import frac_str
from .numeric import verify_face_numeric
from .polytope import DEFAULT_HULL_CAP
from .roots import build_root_system, chamber_point
from .strata import build_poset
from .weyl import DEFAULT_WEYL_CAP, build_weyl_group, weyl_orbit

COMMANDS = ("faces", "polytope", "strata", "integrality", "verify-numeric", "verify-all")


@dataclass
class RunConfig:
    command: str
    type_label: str
    rank: int
    point: tuple[str, ...]
    fmt: str = "text"
    out: str | None = None
    seed: int = 0
    numeric_seeds: int = 20
    numeric_faces: int = 5
    hull_cap: int = DEFAULT_HULL_CAP
    weyl_cap: int = DEFAULT_WEYL_CAP
    grad_tol: float = 1e-10
    value_tol: float = 1e-8
    crit_tol: float = 1e-8
    fd_tol: float = 1e-5


def _vec_strs(v) -> list[str]:
    return [frac_str(Fraction(c)) for c in v]


def build_report(config: RunConfig) -> dict:
    """Run the pipeline for one configuration and assemble the report dict.

    Field order is part of the contract; do not reorder keys.
    """
    rs = build_root_system(config.type_label, config.rank)
    try:
        coords = [Fraction(c) for c in config.point]
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError("bad point coordinate: %s" % exc) from None
    x = chamber_point(rs, coords)
    group = build_weyl_group(rs, cap=config.weyl_cap)

    report: dict = {
        "root_system": rs.name,
        "point": _vec_strs(x.coords),
    }

    if config.command == "polytope":
        from .polytope import hull
        orbit = weyl_orbit(group, x)
        poly = hull(orbit, gram=rs.killing_ambient_gram(),
                    origin_note="%s, x = (%s)" % (rs.name, ",".join(report["point"])),
                    cap=config.hull_cap)
        report["polytope"] = {
            "n_vertices": len(poly.vertices),
            "f_vector": list(poly.f_vector()),
            "vertices": [_vec_strs(v) for v in poly.vertices],
        }
        return report

    classification = classify_faces(rs, group, x, hull_cap=config.hull_cap)
    poly = classification.polytope
    poset = build_poset(classification)
    point_weight = check_integral(rs, x)

    report["polytope"] = {
        "n_vertices": len(poly.vertices),
        "f_vector": list(poly.f_vector()),
        "vertices": [_vec_strs(v) for v in poly.vertices],
    }

    face_rows = []
    face_weights = {}
    for idx, d in enumerate(classification.descriptors):
        if d.improper:
            sigma_class = list(d.sigma.vertex_indices)
            dim_stratum = None
            dim_base = None
            parabolic = None
        else:
            sigma_class = list(classification.matching[d.I])
            dim_stratum = poset.stratum_dims[idx]
            dim_base = poset.base_flag_dims[idx]
            parabolic = parabolic_report(classification, d)
        integral = None
        if d.I:
            fw = induce_face_weight(rs, x, d)
            face_weights[idx] = fw
            integral = fw.is_integral
        face_rows.append({
            "I": [rs.root_label(i) for i in d.I],
            "I_prime": [rs.root_label(i) for i in d.I_prime],
            "J": [rs.root_label(i) for i in d.J],
            "improper": d.improper,
            "dim_face": d.dim_face,
            "dim_stratum": dim_stratum,
            "dim_base": dim_base,
            "sigma_class": {"dim": d.sigma.dim, "vertices": sigma_class},
            "exposing_u": _vec_strs(d.exposing_u) if d.exposing_u is not None else None,
            "parabolic": parabolic,
            "integral": integral,
        })
    report["faces"] = face_rows
    report["bijection_verified"] = classification.bijection_verified
    report["poset_edges"] = [list(e) for e in poset.cover_edges]

    if config.command in ("integrality", "verify-all"):
        report["integrality"] = {
            "integral": point_weight.is_integral,
            "pairings": [{"root": _vec_strs(r.root), "knapp": frac_str(r.knapp),
                          "half": frac_str(r.half_display)}
                         for r in point_weight.pairings],
            "faces": [{"I": [rs.root_label(i) for i in fw.I],
                       "x1_prime": _vec_strs(fw.x1_prime),
                       "integral": fw.is_integral,
                       "pairings": [{"root": _vec_strs(r.root),
                                     "knapp": frac_str(r.knapp),
                                     "half": frac_str(r.half_display)}
                                    for r in fw.pairings]}
                      for idx, fw in sorted(face_weights.items())],
        }

    if config.command == "verify-all" and point_weight.is_integral:
        for d in classification.proper_descriptors:
            if d.I and not induce_face_weight(rs, x, d).is_integral:
                raise TheoremViolationError(
                    "integrality descent failed on face I=%s" % (d.I,))

    if config.command == "verify-numeric" or \
            (config.command == "verify-all" and rs.type_label == "A"):
        if rs.type_label != "A":
            raise InvalidInputError("numeric verification is realized for type A only")
        numeric_faces = []
        for d in classification.proper_descriptors[:config.numeric_faces]:
            numeric_faces.append(verify_face_numeric(
                classification, d, seeds=config.numeric_seeds,
                seed_base=config.seed, crit_tol=config.crit_tol,
                value_tol=config.value_tol, grad_tol=config.grad_tol,
                fd_tol=config.fd_tol))
        report["numeric"] = {
            "trace_killing_factor": int(rs.killing_ratio),
            "seed": config.seed,
            "faces": numeric_faces,
        }
    return report


def render_text(report: dict) -> str:
    lines = []
    lines.append("root system  %s" % report["root_system"])
    lines.append("point        (%s)" % ", ".join(report["point"]))
    poly = report.get("polytope")
    if poly:
        lines.append("polytope     %d vertices, f-vector %s"
                      % (poly["n_vertices"], tuple(poly["f_vector"])))
    faces = report.get("faces")
    if faces:
        lines.append("bijection    %s  (%d face classes, %d proper)"
                      % ("verified" if report["bijection_verified"] else "FAILED",
                         len(faces), sum(1 for f in faces if not f["improper"])))
        lines.append("")
        lines.append("face classes")
        for f in faces:
            tag = " (top)" if f["improper"] else ""
            levi = ""
            if f["parabolic"]:
                levi = "  levi=%s  ext=%s" % (f["parabolic"]["levi_type"],
                                              f["parabolic"]["ext_type"]["description"])
            integral = "" if f["integral"] is None else "  integral=%s" % f["integral"]
            stratum = "" if f["dim_stratum"] is None else "  dim_S=%d" % f["dim_stratum"]
            lines.append("  I={%s} J={%s}%s  dim_F=%d%s%s%s"
                          % (",".join(f["I"]), ",".join(f["J"]), tag,
                             f["dim_face"], stratum, levi, integral))
        if report.get("poset_edges") is not None:
            lines.append("poset cover edges: %s"
                          % (" ".join("%d<%d" % (a, b) for a, b in report["poset_edges"])
                             or "(none)"))
    integ = report.get("integrality")
    if integ:
        lines.append("point integral: %s" % integ["integral"])
        for fw in integ["faces"]:
            lines.append("  face I={%s}: integral=%s  x1'=(%s)"
                          % (",".join(fw["I"]), fw["integral"], ",".join(fw["x1_prime"])))
    numeric = report.get("numeric")
    if numeric:
        lines.append("numeric (trace = Killing / %d, seed %d)"
                      % (numeric["trace_killing_factor"], numeric["seed"]))
        for f in numeric["faces"]:
            lines.append("  I={%s}: %d/%d converged, value gap %.2e, crit %.2e, drift %.2e"
                          % (",".join(f["I"]), f["n_converged"], f["n_seeds"],
                             f["max_value_gap"], f["max_grad_norm"], f["max_step_drift"]))
    lines.append("verdict: PASS")
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    return render_text(report)


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one configuration; returns (exit status, rendered report)."""
    try:
        report = build_report(config)
        text = render(report, config.fmt)
    except TheoremViolationError as exc:
        return 2, "theorem violation: %s\n" % exc
    except InvalidInputError as exc:
        return 1, "error: %s\n" % exc
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text)
        return 0, ""
    return 0, text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInputError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="orbitope",
                     description="Face classification of coadjoint orbitopes, "
                                 "with exact convex-geometry verification.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--type", required=True, dest="type_label",
                        help="Cartan type letter A-G")
    parser.add_argument("--rank", required=True, type=int)
    parser.add_argument("--point", required=True,
                        help="fundamental-weight coordinates, e.g. 1,0,2 or 3/2,0,1")
    parser.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    parser.add_argument("--out", default=None, help="write the report to a file")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--numeric-seeds", type=int, default=20)
    parser.add_argument("--numeric-faces", type=int, default=5,
                        help="number of face classes to verify numerically")
    parser.add_argument("--orbit-cap", type=int, default=DEFAULT_HULL_CAP,
                        help="maximum Weyl orbit size fed to the hull")
    parser.add_argument("--weyl-cap", type=int, default=None,
                        help="maximum Weyl group order (default 2000 or $ORBITOPE_CAP)")
    parser.add_argument("--grad-tol", type=float, default=1e-10)
    parser.add_argument("--value-tol", type=float, default=1e-8)
    parser.add_argument("--crit-tol", type=float, default=1e-8)
    parser.add_argument("--fd-tol", type=float, default=1e-5)
    return parser


def parse_config(argv) -> RunConfig:
    args = _build_parser().parse_args(argv)
    weyl_cap = args.weyl_cap
    if weyl_cap is None:
        weyl_cap = int(os.environ.get("ORBITOPE_CAP", DEFAULT_WEYL_CAP))
    return RunConfig(
        command=args.command, type_label=args.type_label, rank=args.rank,
        point=tuple(s.strip() for s in args.point.split(",")),
        fmt=args.fmt, out=args.out, seed=args.seed,
        numeric_seeds=args.numeric_seeds, numeric_faces=args.numeric_faces,
        hull_cap=args.orbit_cap, weyl_cap=weyl_cap,
        grad_tol=args.grad_tol, value_tol=args.value_tol,
        crit_tol=args.crit_tol, fd_tol=args.fd_tol)


def main(argv=None) -> int:
    try:
        config = parse_config(argv)
    except InvalidInputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    code, text = run(config)
    if code == 0:
        if text:
            sys.stdout.write(text)
    else:
        sys.stderr.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
