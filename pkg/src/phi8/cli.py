"""Command line interface.

Subcommands:
  verify    run the matrix identity suite
  powers    show the power pattern for one exponent
  roots     enumerate roots of a Cartan-like matrix
  lattice   E8 lattice and Hamming code checks
  project   convex hull layer analysis of the signed root vertices
  dump      print a named or file-loaded matrix as a literal

Exit status: 0 all checks hold, 1 a check failed, 2 usage error.
Output is deterministic: no timestamps, sorted keys, fixed orderings.
Relative output file paths honor the PHI8_OUT_DIR environment variable.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import hulls, identities, lattice
from .constants import NAMED_MATRICES, resolve_matrix
from .field import sqrt5_form
from .roots import (
    MODES,
    EnumerationRule,
    emit_csv,
    emit_hasse_dot,
    enumerate_roots,
    summarize,
)


def _json_dump(obj: object) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _out_path(path: str) -> Path:
    base = os.environ.get("PHI8_OUT_DIR")
    p = Path(path)
    if base and not p.is_absolute():
        p = Path(base) / p
    if p.parent and not p.parent.exists():
        p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _report_lines(reports) -> tuple[list[str], bool]:
    lines = []
    ok = True
    for rep in reports:
        if rep.informational:
            status = "INFO"
            verdict = "holds" if rep.holds else "deviates"
            extra = ""
            if not rep.holds and "max_abs_residual" in rep.details:
                extra = f" (max residual {rep.details['max_abs_residual']:.6f})"
            lines.append(f"{status} {rep.name}: {verdict}{extra}")
            continue
        if rep.holds:
            lines.append(f"PASS {rep.name}")
        else:
            ok = False
            w = rep.witness
            where = f" at ({w.row},{w.col}) expected {w.expected} got {w.actual}" if w else ""
            lines.append(f"FAIL {rep.name}{where}")
    return lines, ok


def cmd_verify(args: argparse.Namespace) -> int:
    if args.only:
        reports = identities.run_group(args.only)
    else:
        reports = identities.run_all()
    if args.json:
        sys.stdout.write(_json_dump([r.to_dict() for r in reports]))
    else:
        lines, _ = _report_lines(reports)
        sys.stdout.write("\n".join(lines) + "\n")
    ok = all(r.holds for r in reports if not r.informational)
    return 0 if ok else 1


def cmd_powers(args: argparse.Namespace) -> int:
    pattern = identities.verify_power_pattern(args.n)
    if args.json:
        payload = {
            "n": pattern.n,
            "sum_scalar": sqrt5_form(pattern.sum_scalar),
            "diff_scalar": sqrt5_form(pattern.diff_scalar),
            "reports": [r.to_dict() for r in pattern.reports],
        }
        sys.stdout.write(_json_dump(payload))
    else:
        n = pattern.n
        sys.stdout.write(
            f"cmU^{n} + cmU^-{n} = ({sqrt5_form(pattern.sum_scalar)}) * I\n"
            f"cmU^{n} - cmU^-{n} = ({sqrt5_form(pattern.diff_scalar)}) * J\n"
        )
        lines, _ = _report_lines(pattern.reports)
        sys.stdout.write("\n".join(lines) + "\n")
    ok = all(r.holds for r in pattern.reports)
    return 0 if ok else 1


def cmd_roots(args: argparse.Namespace) -> int:
    matrix = resolve_matrix(args.matrix)
    rule = EnumerationRule(
        mode=args.mode, max_height=args.max_height, dedup=not args.no_dedup
    )
    records = enumerate_roots(matrix, rule)
    summary = summarize(records)
    if args.dot:
        _out_path(args.dot).write_text(emit_hasse_dot(records))
    if args.csv:
        _out_path(args.csv).write_text(emit_csv(records))
    if args.json:
        payload = dict(summary)
        payload["by_height"] = [[h, c] for h, c in sorted(summary["by_height"].items())]
        payload["cumulative"] = [[h, c] for h, c in sorted(summary["cumulative"].items())]
        payload["matrix"] = args.matrix
        payload["mode"] = args.mode
        payload["max_height"] = args.max_height
        sys.stdout.write(_json_dump(payload))
    else:
        lines = [
            f"matrix {args.matrix} mode {args.mode} max height {args.max_height}",
            "height counts: "
            + " ".join(f"{h}:{c}" for h, c in sorted(summary["by_height"].items())),
            f"{summary['total']} positive roots "
            f"(max height {summary['max_height']}, "
            f"through height 8: {summary['cumulative_through_8']})",
        ]
        if not summary["weights_all_integer"]:
            lines.append("weights include non-integer values")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


LATTICE_CHECKS = ("roots", "hamming", "construction-a", "hadamard-map", "vertex-coords")


def _lattice_results(which: str) -> list[tuple[str, bool, dict]]:
    results: list[tuple[str, bool, dict]] = []
    if which in ("roots", "all"):
        roots = lattice.gen_e8_roots()
        norms_two = all(lattice.norm_sq(v) == 2 for v in roots)
        pairs = lattice.count_contact_pairs(roots)
        results.append(
            (
                "root_count_240",
                len(roots) == 240,
                {"count": len(roots)},
            )
        )
        results.append(("root_norms_two", norms_two, {}))
        results.append(
            ("contact_pairs_6720", pairs == 6720, {"count": pairs})
        )
    if which in ("hamming", "all"):
        code = lattice.hamming84()
        we = code.weight_enumerator()
        results.append(
            (
                "hamming_weight_enumerator",
                we == {0: 1, 4: 14, 8: 1},
                {"enumerator": {str(k): v for k, v in sorted(we.items())}},
            )
        )
        results.append(("hamming_min_distance_4", code.min_distance() == 4, {}))
        results.append(("hamming_self_dual", code.is_self_dual(), {}))
        results.append(("hamming_doubly_even", code.is_doubly_even(), {}))
    if which in ("construction-a", "all"):
        rep = lattice.construction_a()
        results.append(("lattice_even", rep.is_even, {}))
        results.append(
            ("lattice_unimodular", rep.gram_det == 1, {"det": str(rep.gram_det)})
        )
        results.append(("lattice_positive_definite", rep.is_positive_definite, {}))
        results.append(
            (
                "lattice_minimal_vectors_240",
                rep.minimal_vector_count == 240,
                {"count": rep.minimal_vector_count},
            )
        )
    if which in ("hadamard-map", "all"):
        corr = lattice.hadamard_code_correspondence()
        results.append(
            ("hadamard_weight_enumerator_match", corr.weight_enumerator_matches, {})
        )
        results.append(
            (
                "hadamard_column_permutation",
                corr.holds,
                {"permutation": list(corr.permutation) if corr.permutation else None},
            )
        )
    if which in ("vertex-coords", "all"):
        check = lattice.check_vertex_coords()
        results.append(
            ("vertex_count_240", check.coord_count == 240, {"count": check.coord_count})
        )
        results.append(("vertex_norms_two", check.norms_all_two, {}))
        results.append(("vertex_set_matches_roots", check.set_matches_roots, {}))
        results.append(
            ("vertex_inner_histogram_matches", check.inner_histogram_matches, {})
        )
    return results


def cmd_lattice(args: argparse.Namespace) -> int:
    results = _lattice_results(args.check)
    if args.json:
        payload = [
            {"name": name, "holds": holds, "details": details}
            for name, holds, details in results
        ]
        sys.stdout.write(_json_dump(payload))
    else:
        lines = [
            f"{'PASS' if holds else 'FAIL'} {name}" for name, holds, _ in results
        ]
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if all(h for _, h, _ in results) else 1


def _parse_dims(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse dims {text!r}; expected like 2,3,4") from exc
    if len(parts) != 3:
        raise ValueError("dims must name exactly three coordinates")
    return parts  # range/distinctness checked by project()


def cmd_project(args: argparse.Namespace) -> int:
    vset = hulls.build_vertices(basis=args.basis)
    if args.all:
        reports = hulls.tally_all(vset)
    else:
        reports = [hulls.analyze(vset, _parse_dims(args.dims))]
    if args.csv:
        rows = ["dims,point_count,signature"]
        for rep in reports:
            rows.append(
                "\"{}\",{},\"{}\"".format(
                    " ".join(str(d) for d in rep.dims), rep.point_count, rep.signature
                )
            )
        _out_path(args.csv).write_text("\n".join(rows) + "\n")
    if args.obj:
        base = _out_path(args.obj)
        base.mkdir(parents=True, exist_ok=True)
        for rep in reports:
            tag = "".join(str(d) for d in rep.dims)
            for k, layer in enumerate(rep.layers):
                if not layer.faces:
                    continue
                name = f"dims{tag}_layer{k}"
                (base / f"{name}.obj").write_text(hulls.emit_layer_obj(layer, name))
    if args.json:
        payload = {
            "basis": args.basis,
            "vertex_count": len(vset.points),
            "positive_root_count": vset.positive_root_count,
            "reports": [rep.to_dict() for rep in reports],
        }
        if args.all:
            payload["signature_groups"] = {
                sig: [list(d) for d in dims]
                for sig, dims in hulls.group_by_signature(reports).items()
            }
        sys.stdout.write(_json_dump(payload))
    else:
        lines = [
            f"basis {args.basis}: {len(vset.points)} vertices from "
            f"{vset.positive_root_count} positive roots"
        ]
        for rep in reports:
            dims_txt = ",".join(str(d) for d in rep.dims)
            lines.append(f"dims ({dims_txt}) -> {rep.point_count} points: {rep.signature}")
        if args.all:
            lines.append(f"{len(reports)} coordinate triples, "
                         f"{len(hulls.group_by_signature(reports))} distinct signatures")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_dump(args: argparse.Namespace) -> int:
    matrix = resolve_matrix(args.name)
    sys.stdout.write(matrix.to_literal() + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phi8",
        description="Golden-ratio matrix identities, root enumeration, "
        "E8 lattice checks and hull projections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument(
        "--only", choices=sorted(identities.VERIFIER_GROUPS), help="run one group"
    )
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_powers = sub.add_parser("powers", help="power pattern for one exponent")
    p_powers.add_argument("-n", type=int, required=True, help="exponent, n >= 1")
    p_powers.add_argument("--json", action="store_true")
    p_powers.set_defaults(func=cmd_powers)

    p_roots = sub.add_parser("roots", help="enumerate roots layer by layer")
    p_roots.add_argument(
        "--matrix",
        default="cmE8",
        help="named matrix (%s) or a file path" % ", ".join(sorted(NAMED_MATRICES)),
    )
    p_roots.add_argument("--mode", choices=MODES, default="normalized-pairing")
    p_roots.add_argument("--max-height", type=int, default=10)
    p_roots.add_argument(
        "--no-dedup", action="store_true", help="keep one record per acceptance event"
    )
    p_roots.add_argument("--json", action="store_true")
    p_roots.add_argument("--dot", metavar="PATH", help="write Hasse diagram DOT")
    p_roots.add_argument("--csv", metavar="PATH", help="write root listing CSV")
    p_roots.set_defaults(func=cmd_roots)

    p_lattice = sub.add_parser("lattice", help="E8 lattice and code checks")
    p_lattice.add_argument(
        "--check", choices=LATTICE_CHECKS + ("all",), default="all"
    )
    p_lattice.add_argument("--json", action="store_true")
    p_lattice.set_defaults(func=cmd_lattice)

    p_project = sub.add_parser("project", help="hull layers of projected vertices")
    group = p_project.add_mutually_exclusive_group(required=True)
    group.add_argument("--dims", help="three 1-based coordinates, like 2,3,4")
    group.add_argument("--all", action="store_true", help="every 3-coordinate choice")
    p_project.add_argument("--basis", choices=sorted(hulls.BASIS_BUILDERS), default="U")
    p_project.add_argument("--json", action="store_true")
    p_project.add_argument("--csv", metavar="PATH", help="write signature CSV")
    p_project.add_argument("--obj", metavar="DIR", help="write per-layer OBJ meshes")
    p_project.set_defaults(func=cmd_project)

    p_dump = sub.add_parser("dump", help="print a matrix literal")
    p_dump.add_argument("name", help="named matrix or file path")
    p_dump.set_defaults(func=cmd_dump)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
