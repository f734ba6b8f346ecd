"""Command-line interface.

Two subcommands: ``solve`` runs the requested loci of the stability problem
and prints either the banner-style text report or a deterministic
machine-readable JSON document; ``support`` only computes the weight support
of a representation.

Exit codes: 0 success, 2 parse/usage errors (including non-dominant weights
and invalid group names), 3 resource-guard overruns, 1 any other library
error. Resource guards can be tuned with the environment variables
GITLOCI_SUPPORT_GUARD, GITLOCI_CELL_GUARD and GITLOCI_WEYL_GUARD.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import (
    GitLociError,
    InvalidRankError,
    ParseError,
    ResourceGuardError,
)
from .exactgeom import DEFAULT_CELL_GUARD, primitive_vector
from .gitsolver import (
    GITProblem,
    solve_all,
)
from .repsupport import (
    DEFAULT_SUPPORT_GUARD,
    parse_highest_weight,
    support_from_weights,
    weight_support,
)
from .rootdata import DEFAULT_WEYL_GUARD, convert_coordinates, make_group

_LOCI_TEXT = {
    "nonstable": (
        "SOLUTION TO GIT PROBLEM: NONSTABLE LOCI",
        "Set of maximal non-stable states:",
        "Maximal nonstable state=",
    ),
    "unstable": (
        "SOLUTION TO GIT PROBLEM: UNSTABLE LOCI",
        "Set of maximal unstable states:",
        "Maximal unstable state=",
    ),
    "polystable": (
        "SOLUTION TO GIT PROBLEM: STRICTLY POLYSTABLE LOCI",
        "Set of strictly polystable states:",
        "Strictly polystable state=",
    ),
}

_SOLUTION_FIELD = {
    "nonstable": "nonstable",
    "unstable": "unstable",
    "polystable": "strictly_polystable",
}


def _guard_from_env(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"environment variable {name} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ParseError(f"environment variable {name} must be positive, got {value}")
    return value


def _format_vector(values):
    return "(" + ", ".join(str(v) for v in values) + ")"


def _natural_trace(hw_coeffs):
    return sum((i + 1) * c for i, c in enumerate(hw_coeffs))


class _Display:
    """Coordinate choices for one run's report: L-forms for type A runs
    generated from a highest weight, fundamental coefficients otherwise."""

    def __init__(self, group, highest):
        self.group = group
        self.highest = highest
        self.use_l_coords = group.dynkin.letter == "A" and highest is not None
        self._trace = _natural_trace(highest.coeffs) if self.use_l_coords else None

    @property
    def weight_coords(self):
        return "L" if self.use_l_coords else "fundamental"

    def weight(self, w):
        if self.use_l_coords:
            return convert_coordinates(
                self.group, w.coeffs, "fundamental-weight", "L", trace=self._trace
            )
        return w.coeffs

    def witness(self, lam):
        if self.group.dynkin.letter == "A":
            h_form = convert_coordinates(
                self.group, lam.coeffs, "fundamental-coweight", "H"
            )
            return primitive_vector(h_form)
        return primitive_vector(lam.coeffs)

    def representation_name(self, support):
        if self.highest is None:
            return f"{self.group.name}[custom support of {len(support)} weights]"
        if self.use_l_coords:
            hw = convert_coordinates(
                self.group, self.highest.coeffs, "fundamental-weight", "L", trace=self._trace
            )
        else:
            hw = self.highest.coeffs
        return f"{self.group.name}({','.join(str(x) for x in hw)})"


def _render_text(solution, loci, display):
    lines = []
    for locus in loci:
        title, set_header, state_label = _LOCI_TEXT[locus]
        states = getattr(solution, _SOLUTION_FIELD[locus])
        lines.append("*" * len(title))
        lines.append(title)
        lines.append("*" * len(title))
        lines.append(f"Group: {solution.group.name}")
        lines.append(f"Representation: {display.representation_name(solution.support)}")
        lines.append(set_header)
        if not states:
            lines.append("(none)")
        for index, state in enumerate(states, start=1):
            if locus == "polystable":
                lines.append(f"({index}) A state with {state.size} characters")
            else:
                witness = _format_vector(display.witness(state.witness))
                lines.append(
                    f"({index}) 1-PS = {witness} yields a state with {state.size} characters"
                )
            members = ", ".join(
                _format_vector(display.weight(w)) for w in state.weights
            )
            lines.append(f"{state_label}{{{members}}}")
        lines.append("")
    return "\n".join(lines)


def _state_document(state, display):
    doc = {
        "size": state.size,
        "weights": [list(display.weight(w)) for w in state.weights],
    }
    witness = {"coweight": list(primitive_vector(state.witness.coeffs))}
    if display.group.dynkin.letter == "A":
        witness["H"] = list(display.witness(state.witness))
    doc["witness"] = witness
    return doc


def _render_structured(solution, loci, display):
    group = solution.group
    representation = {
        "source": "highest-weight" if display.highest is not None else "weights-file",
        "display": display.representation_name(solution.support),
        "highest_weight_fundamental": (
            list(display.highest.coeffs) if display.highest is not None else None
        ),
    }
    if display.use_l_coords:
        representation["highest_weight_L"] = list(
            convert_coordinates(
                group, display.highest.coeffs, "fundamental-weight", "L",
                trace=_natural_trace(display.highest.coeffs),
            )
        )
    doc = {
        "format": "gitloci/1",
        "group": {"letter": group.dynkin.letter, "rank": group.rank, "name": group.name},
        "options": {"weyl_optimisation": solution.weyl_optimisation},
        "representation": representation,
        "support_size": len(solution.support),
        "weight_coords": display.weight_coords,
        "loci": {
            locus: {
                "count": len(getattr(solution, _SOLUTION_FIELD[locus])),
                "states": [
                    _state_document(state, display)
                    for state in getattr(solution, _SOLUTION_FIELD[locus])
                ],
            }
            for locus in loci
        },
        "warnings": list(group.warnings),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _parse_loci(text):
    names = [p.strip().lower() for p in str(text).split(",") if p.strip()]
    if not names:
        raise ParseError("no loci requested")
    ordered = []
    for name in names:
        if name not in _LOCI_TEXT:
            raise ParseError(
                f"unknown locus {name!r}; expected any of nonstable, unstable, polystable"
            )
        if name not in ordered:
            ordered.append(name)
    return ordered


def _read_weights_file(path, rank):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read weights file {path}: {exc}") from None
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = [p for p in body.replace(",", " ").split() if p]
        try:
            row = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"{path}:{line_no}: cannot parse weight line {line!r}") from None
        if len(row) != rank:
            raise ParseError(
                f"{path}:{line_no}: weight has {len(row)} coefficients; expected {rank}"
            )
        rows.append(row)
    if not rows:
        raise ParseError(f"weights file {path} contains no weights")
    return rows


def _emit(report, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(report)
        print(f"wrote {out_path}", file=sys.stderr)
    else:
        sys.stdout.write(report)


def _warn(group):
    for message in group.warnings:
        print(f"warning: {message}", file=sys.stderr)


def _run_solve(args):
    group = make_group(args.group)
    _warn(group)
    loci = _parse_loci(args.loci)
    support_guard = _guard_from_env("GITLOCI_SUPPORT_GUARD", DEFAULT_SUPPORT_GUARD)
    cell_guard = _guard_from_env("GITLOCI_CELL_GUARD", DEFAULT_CELL_GUARD)
    weyl_guard = _guard_from_env("GITLOCI_WEYL_GUARD", DEFAULT_WEYL_GUARD)
    if args.weights_file:
        rows = _read_weights_file(args.weights_file, group.rank)
        support = support_from_weights(group, rows)
        highest = None
    else:
        highest = parse_highest_weight(group, args.weight)
        support = weight_support(group, highest, guard=support_guard)
    problem = GITProblem(
        group,
        support,
        weyl_optimisation=args.weyl_opt,
        cell_guard=cell_guard,
        weyl_guard=weyl_guard,
    )
    solution = solve_all(problem, loci)
    display = _Display(group, highest)
    if args.format == "json-like":
        report = _render_structured(solution, loci, display)
    else:
        report = _render_text(solution, loci, display)
    _emit(report, args.out)
    return 0


def _run_support(args):
    group = make_group(args.group)
    _warn(group)
    support_guard = _guard_from_env("GITLOCI_SUPPORT_GUARD", DEFAULT_SUPPORT_GUARD)
    highest = parse_highest_weight(group, args.weight)
    support = weight_support(group, highest, guard=support_guard)
    display = _Display(group, highest)
    lines = [
        f"Group: {group.name}",
        f"Representation: {display.representation_name(support)}",
        f"Number of weights: {len(support)}",
    ]
    if args.list_weights:
        lines.append("Weights:")
        lines.extend(_format_vector(display.weight(w)) for w in support.weights)
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gitloci",
        description=(
            "Solve GIT stability problems for simple groups acting on"
            " projectivized irreducible representations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute stability loci")
    solve.add_argument("group", help="Dynkin name, e.g. A2 or B3")
    source = solve.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--weight",
        help="highest weight: fundamental coefficients '3,0', L-coordinates"
        " '3,0,0' (type A), or 'd*w<i>'",
    )
    source.add_argument(
        "--weights-file",
        help="path to a file with one weight per line (fundamental"
        " coefficients); bypasses the highest-weight construction",
    )
    solve.add_argument(
        "--loci",
        default="nonstable,unstable,polystable",
        help="comma-separated subset of nonstable,unstable,polystable",
    )
    solve.add_argument(
        "--weyl-opt",
        action="store_true",
        help="deduplicate Weyl-equivalent nonstable/unstable states",
    )
    solve.add_argument("--format", choices=("text", "json-like"), default="text")
    solve.add_argument("--out", help="write the report to this path instead of stdout")
    solve.set_defaults(func=_run_solve)

    support = sub.add_parser("support", help="compute only the weight support")
    support.add_argument("group", help="Dynkin name, e.g. A2 or B3")
    support.add_argument("--weight", required=True, help="highest weight specification")
    support.add_argument(
        "--list-weights", action="store_true", help="also list the sorted weights"
    )
    support.add_argument("--out", help="write the report to this path instead of stdout")
    support.set_defaults(func=_run_support)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidRankError) as exc:
        print(f"gitloci: error: {exc}", file=sys.stderr)
        return 2
    except ResourceGuardError as exc:
        print(f"gitloci: resource guard: {exc}", file=sys.stderr)
        return 3
    except GitLociError as exc:
        print(f"gitloci: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
