"""Command-line front end.

Subcommands: classify, detect, molecule, activate, thresholds,
paper-experiments.  Reports are deterministic for identical inputs; the
machine format mirrors the text report field by field.  Exit codes:
0 = analysis completed (whatever the verdict), 2 = parse or validation
error, 3 = capacity exceeded.
"""

import argparse
import hashlib
import sys
from pathlib import Path

from . import classify as classify_mod
from . import io
from .activation import scenario_survey
from .datasets import DATASET_NAMES, dataset_text, load_dataset
from .detect import (
    detect,
    fidelity_threshold_best_case,
    fidelity_threshold_worst_case,
    white_noise_analysis,
)
from .family import depolarize, n_sectors, pure_ghz
from .molecules import verify_molecule
from .partitions import chain_string
from .qlinalg import DEFAULT_MAX_QUBITS, TOL_PSD, CapacityError


def _digest(data):
    return hashlib.sha256(data.encode() if isinstance(data, str) else data).hexdigest()


def _file_input(path):
    raw = Path(path).read_bytes()
    return {"path": str(path), "sha256": _digest(raw)}


def _echo(args):
    return " ".join(args.command_echo)


def cmd_classify(args):
    doc = io.load_document(args.input)
    kind = io.detect_kind(doc)
    notes = []
    if kind == "density-matrix":
        rho = io.parse_density_matrix(doc, max_qubits=args.max_qubits)
        state = depolarize(rho)
        notes.append(
            "input was depolarized onto the GHZ-diagonal family; the projection "
            "never creates entanglement, so all verdicts are lower bounds"
        )
        if state.relabeled:
            notes.append("extraction swapped the +- labels to keep delta >= 0")
    elif kind == "coefficients":
        state = io.parse_coefficients(doc)
    else:
        raise io.FormatError(
            f"classify expects a coefficients or density-matrix file, got {kind!r}"
        )
    cls = classify_mod.classify(state)
    payload = {
        "command": _echo(args),
        "input": dict(_file_input(args.input), kind=kind),
        "report": classify_mod.report_payload(state, cls),
        "notes": notes,
    }
    lines = [f"ghzkit classify — {state.n_parties} parties ({kind})"]
    lines += [f"note: {n}" for n in notes]
    lines.append("")
    lines += classify_mod.report_lines(state, cls, lower_bound=bool(notes))
    return payload, lines


def _resolve_measured(name_or_path):
    if name_or_path in DATASET_NAMES:
        text = dataset_text(name_or_path)
        return (
            load_dataset(name_or_path),
            {"dataset": name_or_path, "sha256": _digest(text)},
        )
    doc = io.load_document(name_or_path)
    kind = io.detect_kind(doc)
    if kind != "measured-coefficients":
        raise io.FormatError(f"detect expects measured-coefficients data, got {kind!r}")
    return io.parse_measured(doc), dict(_file_input(name_or_path), kind=kind)


def cmd_detect(args):
    measured, input_info = _resolve_measured(args.input)
    n = measured.n_parties
    verdict = detect(measured)
    noise = white_noise_analysis(measured)
    one, zero, undetermined = verdict.counts()
    payload = {
        "command": _echo(args),
        "input": input_info,
        "n_parties": n,
        "delta": [verdict.delta.lo, verdict.delta.hi],
        "sectors": [
            {
                "chain": chain_string(k, n),
                "two_lambda": [
                    measured.two_lambda_bounds(k).lo,
                    measured.two_lambda_bounds(k).hi,
                ],
                "certified": verdict.certified[k].value,
                "margin": verdict.margins[k],
            }
            for k in sorted(verdict.certified)
        ],
        "ghz_distillable_certified": verdict.ghz_distillable_certified,
        "fidelity_thresholds": {
            "worst_case": fidelity_threshold_worst_case(),
            "best_case": fidelity_threshold_best_case(n),
        },
        "white_noise": {
            "threshold": noise.threshold,
            "fidelity_at_threshold": noise.fidelity_at_threshold,
            "f0": noise.f0,
            "note": noise.note,
        },
        "notes": list(verdict.notes),
    }
    lines = [f"ghzkit detect — {n} parties"]
    lines.append(f"Delta = [{verdict.delta.lo:.4f}, {verdict.delta.hi:.4f}]")
    for entry in payload["sectors"]:
        lines.append(
            f"s_{entry['chain']}: {entry['certified']:12s}"
            f" 2*lambda in [{entry['two_lambda'][0]:.4f}, {entry['two_lambda'][1]:.4f}],"
            f" margin {entry['margin']:+.4f}"
        )
    lines.append(
        f"certified: {one} x s_k=1, {zero} x s_k=0, {undetermined} undetermined"
    )
    lines.append(
        f"GHZ distillability certified: {'YES' if verdict.ghz_distillable_certified else 'no'}"
    )
    for note in verdict.notes:
        lines.append(f"note: {note}")
    lines.append(
        f"fidelity thresholds: worst-case 1/2 = 0.5, best-case 1/(2^N-1) = "
        f"{payload['fidelity_thresholds']['best_case']:.6f}"
    )
    if noise.threshold is not None:
        lines.append(
            f"white-noise robustness (endpoint arithmetic): certified for x > "
            f"{noise.threshold:.5f}, i.e. fidelity > {noise.fidelity_at_threshold:.5f}"
        )
    else:
        lines.append(f"white-noise robustness: {noise.note}")
    published = measured.meta.get("published_white_noise")
    if published:
        lines.append(
            f"published robustness analysis: x > {published['x_threshold']}, "
            f"fidelity > {published['fidelity_threshold']}"
        )
    return payload, lines


def cmd_molecule(args):
    doc = io.load_document(args.input)
    if io.detect_kind(doc) != "molecule":
        raise io.FormatError("molecule expects a molecule spec file")
    spec = io.parse_molecule(doc)
    report = verify_molecule(spec, max_qubits=args.max_qubits, tol=args.tolerance)
    payload = {
        "command": _echo(args),
        "input": _file_input(args.input),
        "n_parties": spec.n_parties,
        "pairs": [
            {
                "pair": list(pair),
                "requested_distillable": pair in spec.pairs,
                "npt": verdict.npt,
                "min_pt_eigenvalue": verdict.min_pt_eigenvalue,
                "bell_fidelity": verdict.bell_fidelity,
                "witness_conclusive": verdict.witness_conclusive,
            }
            for pair, verdict in sorted(report.verdicts.items())
        ],
        "matches_request": report.matches,
        "mismatches": [list(p) for p in report.mismatches],
    }
    lines = [f"ghzkit molecule — {spec.n_parties} parties, |I| = {len(spec.pairs)}"]
    for entry in payload["pairs"]:
        i, j = entry["pair"]
        lines.append(
            f"pair (A{i},A{j}): {'NPT (distillable)' if entry['npt'] else 'PPT (separable)':18s}"
            f" min PT eigenvalue {entry['min_pt_eigenvalue']:+.6f},"
            f" Bell fidelity {entry['bell_fidelity']:.4f}"
            f" ({'witness conclusive' if entry['witness_conclusive'] else 'witness inconclusive, PPT conclusive'})"
        )
    lines.append(
        "requested pair structure realized: "
        + ("YES" if report.matches else "NO, mismatches: " + ", ".join(str(p) for p in report.mismatches))
    )
    return payload, lines


def cmd_activate(args):
    doc = io.load_document(args.input)
    if io.detect_kind(doc) != "scenario":
        raise io.FormatError("activate expects a scenario file")
    scenario = io.parse_scenario(doc, Path(args.input).parent)
    survey = scenario_survey(scenario)
    payload = {
        "command": _echo(args),
        "input": _file_input(args.input),
        "survey": survey,
    }
    lines = [f"ghzkit activate — {survey['n_parties']} parties, {len(scenario.states)} states"]
    lines.append("")
    lines.append("mixtures of state subsets (uniform mixing):")
    for entry in survey["subsets"]:
        pairs = ", ".join(f"A{i}-A{j}" for i, j in entry["distillable_pairs"]) or "none"
        flags = []
        if entry["ghz_distillable"]:
            flags.append("GHZ-distillable")
        if entry["bound_entangled"]:
            flags.append("bound entangled")
        if entry["fully_separable"]:
            flags.append("fully separable")
        lines.append(
            f"  {{{', '.join(entry['labels'])}}}: {'; '.join(flags) or 'entangled'}"
            f" — distillable pairs: {pairs}"
        )
    if survey["groupings"]:
        lines.append("")
        lines.append("full mixture under every grouping (>= 2 groups):")
        for entry in survey["groupings"]:
            pairs = ", ".join(f"G{i}-G{j}" for i, j in entry["distillable_group_pairs"]) or "none"
            ghz = "GHZ-distillable" if entry["ghz_distillable"] else "not GHZ-distillable"
            lines.append(f"  {entry['grouping']}: {ghz} — distillable group pairs: {pairs}")
    if survey["fixed_grouping"]:
        entry = survey["fixed_grouping"]
        lines.append("")
        pairs = ", ".join(f"G{i}-G{j}" for i, j in entry["distillable_group_pairs"]) or "none"
        lines.append(
            f"scenario grouping {entry['grouping']}: "
            + ("GHZ-distillable" if entry["ghz_distillable"] else "not GHZ-distillable")
            + f" — distillable group pairs: {pairs}"
        )
    return payload, lines


def cmd_thresholds(args):
    n = args.n_parties
    if n < 2:
        raise ValueError("n_parties must be at least 2")
    noise = white_noise_analysis(pure_ghz(n))
    payload = {
        "command": _echo(args),
        "n_parties": n,
        "worst_case_fidelity": fidelity_threshold_worst_case(),
        "best_case_fidelity": fidelity_threshold_best_case(n),
        "white_noise_ghz": {
            "x_threshold": noise.threshold,
            "fidelity_at_threshold": noise.fidelity_at_threshold,
        },
    }
    lines = [
        f"ghzkit thresholds — {n} parties",
        f"worst-case fidelity witness:        F > 1/2 = 0.5",
        f"best-case fidelity bound:           F > 1/(2^{n}-1) = "
        f"{payload['best_case_fidelity']:.6f}",
        f"white-noise GHZ threshold:          x > {noise.threshold:.6f}"
        f" (fidelity > {noise.fidelity_at_threshold:.6f})",
    ]
    return payload, lines


def _experiment_checks(name):
    worst = load_dataset(name)
    point = load_dataset(name, point=True)
    verdict_worst = detect(worst)
    verdict_point = detect(point)
    checks = []
    if name == "sackett2000":
        delta = verdict_worst.delta
        checks.append(
            ("delta = 0.43 +/- 0.02 (endpoint arithmetic)",
             abs(delta.mid - 0.43) <= 1e-12 and abs(0.5 * delta.width - 0.02) <= 1e-12)
        )
        one, _, _ = verdict_point.counts()
        checks.append(("all 7 s_k certified 1 from point values", one == 7))
        checks.append(
            ("4-party GHZ distillability certified", verdict_point.ghz_distillable_certified)
        )
        published = worst.meta["published_white_noise"]
        noise = white_noise_analysis(worst)
        fidelity_at_published = noise.fidelity(published["x_threshold"])
        checks.append(
            (f"fidelity map F({published['x_threshold']}) = "
             f"{fidelity_at_published:.6f} within 0.0005 of {published['fidelity_threshold']}",
             abs(fidelity_at_published - published["fidelity_threshold"]) <= 5e-4)
        )
        extras = [
            f"endpoint-arithmetic robustness threshold: x > {noise.threshold:.5f}"
            f" (published analysis: x > {published['x_threshold']})",
        ]
    else:
        margins = verdict_point.margins
        expected = {1: 0.14, 2: 0.125, 3: 0.152}
        ok = all(abs(margins[k] - expected[k]) <= 1e-12 for k in expected)
        checks.append(("point-value margins delta - 2*lambda_k = 0.14, 0.125, 0.152", ok))
        checks.append(
            ("3-party GHZ distillability certified from point values",
             verdict_point.ghz_distillable_certified)
        )
        checks.append(
            ("worst-case fidelity test inconclusive (F = 0.43 < 1/2)",
             point.fidelity.hi < fidelity_threshold_worst_case())
        )
        checks.append(
            ("certification still holds with worst-case error propagation",
             verdict_worst.ghz_distillable_certified)
        )
        extras = []
    return checks, extras


def cmd_paper_experiments(args):
    payload = {"command": _echo(args), "experiments": {}}
    lines = ["ghzkit paper-experiments — embedded published datasets"]
    all_ok = True
    for name in ("sackett2000", "rauschenbeutel2000"):
        checks, extras = _experiment_checks(name)
        payload["experiments"][name] = {
            "checks": [{"description": d, "passed": ok} for d, ok in checks],
            "notes": extras,
        }
        lines.append("")
        lines.append(f"== {name} ==")
        for description, ok in checks:
            all_ok &= ok
            lines.append(f"  [{'PASS' if ok else 'FAIL'}] {description}")
        lines += [f"  {extra}" for extra in extras]
    payload["all_passed"] = all_ok
    lines.append("")
    lines.append(f"overall: {'PASS' if all_ok else 'FAIL'}")
    return payload, lines


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "machine"), default="text",
        help="report format (machine = JSON)",
    )
    common.add_argument(
        "--tolerance", type=float, default=TOL_PSD,
        help="eigenvalue tolerance for numerical positivity verdicts",
    )
    common.add_argument(
        "--max-qubits", type=int, default=DEFAULT_MAX_QUBITS,
        help="capacity limit for dense matrices",
    )
    parser = argparse.ArgumentParser(
        prog="ghzkit",
        description="Multiparticle entanglement classification for GHZ-diagonal states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="classify a coefficient or density-matrix file")
    p.add_argument("input")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("detect", parents=[common],
                       help="run the detection recipe on measured data "
                            f"(file path or one of: {', '.join(DATASET_NAMES)})")
    p.add_argument("input")
    p.set_defaults(handler=cmd_detect)

    p = sub.add_parser("molecule", parents=[common],
                       help="verify the pair structure of a molecule spec")
    p.add_argument("input")
    p.set_defaults(handler=cmd_molecule)

    p = sub.add_parser("activate", parents=[common],
                       help="survey mixing and grouping activation for a scenario")
    p.add_argument("input")
    p.set_defaults(handler=cmd_activate)

    p = sub.add_parser("thresholds", parents=[common],
                       help="print the detection thresholds for N parties")
    p.add_argument("n_parties", type=int)
    p.set_defaults(handler=cmd_thresholds)

    p = sub.add_parser("paper-experiments", parents=[common],
                       help="reproduce the analyses of both embedded experiments")
    p.set_defaults(handler=cmd_paper_experiments)
    return parser


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.command_echo = ["ghzkit"] + argv
    try:
        payload, lines = args.handler(args)
    except CapacityError as exc:
        print(f"ghzkit: capacity exceeded: {exc}", file=sys.stderr)
        return 3
    except (io.FormatError, ValueError) as exc:
        print(f"ghzkit: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ghzkit: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "machine":
        sys.stdout.write(io.dumps(payload))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
