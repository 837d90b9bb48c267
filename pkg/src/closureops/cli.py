"""Command-line interface: one subcommand per construction, JSON in, JSON out.

Every invocation reads one or two JSON documents (formats in
:mod:`closureops.jsonio`), writes exactly one report to stdout (or ``--out``),
and exits with:

* 0 — success;
* 1 — a mathematical check failed (axioms violated, table not a closure
  operator, preference not respecting the operator); the report naming the
  witnesses is still emitted;
* 2 — malformed input (unreadable file, bad JSON, schema violation, unknown
  flags).

Diagnostics go to stderr; stdout carries only the report.  Output is
deterministic: equal inputs produce byte-equal output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import jsonio
from .complexity import complexity_profile
from .core import ClosureOperator, validate_closure
from .errors import (
    AxiomsViolated,
    BadEndpoints,
    DoesNotRespect,
    ForeignMask,
    GroundSetMismatch,
    GroundSetTooLarge,
    InvalidClosureTable,
    InvalidOrderRelation,
    MissingEntry,
    MissingTopBottom,
    NotAChain,
    NotClosed,
    NotIntersectionClosed,
    SchemaError,
)
from .generators import check_generation, intersect_generate
from .labeling import canonical_labeling, minimal_labeling
from .menus import additive_representation, kreps_operator, kreps_representation
from .poset import FinitePoset, to_dot

__all__ = ["main", "build_parser"]

_MALFORMED = (
    SchemaError,
    ForeignMask,
    MissingEntry,
    GroundSetTooLarge,
    GroundSetMismatch,
)
_MATH_FAILURE = (
    NotIntersectionClosed,
    MissingTopBottom,
    NotClosed,
    NotAChain,
    BadEndpoints,
    InvalidOrderRelation,
)


def _load(path: str) -> Any:
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def _operator_from_path(path: str) -> ClosureOperator:
    """Read an operator from either an operator-table or a topology document."""
    doc = _load(path)
    if isinstance(doc, dict) and "map" in doc:
        ground, table = jsonio.operator_table_from(doc)
        return ClosureOperator.from_table(ground, table)
    if isinstance(doc, dict) and "closed_sets" in doc:
        return jsonio.topology_from(doc).operator()
    raise SchemaError(
        f'{path} holds neither an operator table ("map") nor a topology '
        f'("closed_sets")'
    )


def _run_validate(args: argparse.Namespace) -> tuple[Any, int]:
    ground, table = jsonio.operator_table_from(_load(args.table))
    report = validate_closure(ground, table)
    if not report.ok:
        print("validation failed: " + "; ".join(report.summary()), file=sys.stderr)
    return jsonio.validation_doc(report), 0 if report.ok else 1


def _run_topology(args: argparse.Namespace) -> tuple[Any, int]:
    if args.from_table:
        ground, table = jsonio.operator_table_from(_load(args.from_table))
        operator = ClosureOperator.from_table(ground, table)
    elif args.from_labels:
        operator = jsonio.labeling_from(_load(args.from_labels)).classifier()
    else:
        ground, weak_orders, binary = jsonio.generators_from(
            _load(args.from_generators)
        )
        operators = [w.operator() for w in weak_orders]
        operators += [b.operator() for b in binary]
        operator = intersect_generate(ground, operators)
    return jsonio.topology_doc(operator.closed_sets()), 0


def _run_complexity(args: argparse.Namespace) -> tuple[Any, int]:
    operator = jsonio.topology_from(_load(args.topology)).operator()
    return jsonio.profile_doc(complexity_profile(operator)), 0


def _run_decompose(args: argparse.Namespace) -> tuple[Any, int]:
    operator = jsonio.topology_from(_load(args.topology)).operator()
    profile = complexity_profile(operator)
    if args.kind == "weak-orders":
        generators = profile.weak_order_witness
        documents = [jsonio.weak_order_doc(w) for w in generators]
    else:
        generators = profile.binary_witness
        documents = [jsonio.binary_doc(b) for b in generators]
    report = check_generation(operator, [g.operator() for g in generators])
    return {
        "elements": list(operator.ground.elements),
        "kind": args.kind,
        "count": len(documents),
        "generators": documents,
        "verification": jsonio.generation_doc(report),
    }, 0


def _run_labels(args: argparse.Namespace) -> tuple[Any, int]:
    operator = jsonio.topology_from(_load(args.topology)).operator()
    labeling = minimal_labeling(operator) if args.minimal else canonical_labeling(operator)
    return jsonio.labeling_doc(labeling), 0


def _run_menu_rep(args: argparse.Namespace) -> tuple[Any, int]:
    preference = jsonio.preference_from(_load(args.preference))
    menus_checked = preference.ground.full_bits
    if args.style == "kreps":
        if args.operator:
            raise SchemaError("--operator only applies to --style additive")
        representation = kreps_representation(preference)
        document = jsonio.kreps_doc(representation)
        document["verification"] = {
            "axioms_ok": True,
            "signature_sound": True,
            "represents_preference": True,
            "menus_checked": menus_checked,
        }
        return document, 0
    if args.operator:
        operator = _operator_from_path(args.operator)
    else:
        operator = kreps_operator(preference)
    representation = additive_representation(preference, operator)
    document = jsonio.additive_doc(representation)
    document["verification"] = {
        "respects_operator": True,
        "exact_reproduction": True,
        "menus_checked": menus_checked,
    }
    return document, 0


def _run_mobius(args: argparse.Namespace) -> tuple[Any, int]:
    topology = jsonio.topology_from(_load(args.topology))
    table = FinitePoset.from_topology(topology).mobius()
    return jsonio.mobius_doc(topology, table), 0


def _run_hasse(args: argparse.Namespace) -> tuple[Any, int]:
    topology = jsonio.topology_from(_load(args.topology))
    poset = FinitePoset.from_topology(topology)
    if args.dot:
        return to_dot(poset), 0
    return jsonio.hasse_doc(topology, poset.hasse()), 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="closureops",
        description="Finite closure operators: validation, topologies, "
        "decompositions, complexity, labelings, menu representations.",
    )
    parser.add_argument(
        "--out", metavar="FILE", help="write the report here instead of stdout"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("validate", help="check a table against the closure axioms")
    sub.add_argument("--table", required=True, metavar="F")
    sub.set_defaults(run=_run_validate)

    sub = commands.add_parser("topology", help="closed sets of an operator")
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--from-table", metavar="F")
    source.add_argument("--from-labels", metavar="F")
    source.add_argument("--from-generators", metavar="F")
    sub.set_defaults(run=_run_topology)

    sub = commands.add_parser("complexity", help="complexity profile of a topology")
    sub.add_argument("--topology", required=True, metavar="F")
    sub.set_defaults(run=_run_complexity)

    sub = commands.add_parser("decompose", help="optimal generator decomposition")
    sub.add_argument("--topology", required=True, metavar="F")
    sub.add_argument("--kind", required=True, choices=["weak-orders", "binary"])
    sub.set_defaults(run=_run_decompose)

    sub = commands.add_parser("labels", help="labeling correspondence inducing a topology")
    sub.add_argument("--topology", required=True, metavar="F")
    mode = sub.add_mutually_exclusive_group(required=True)
    mode.add_argument("--canonical", action="store_true")
    mode.add_argument("--minimal", action="store_true")
    sub.set_defaults(run=_run_labels)

    sub = commands.add_parser("menu-rep", help="state-space representation of a preference")
    sub.add_argument("--preference", required=True, metavar="F")
    sub.add_argument("--style", required=True, choices=["kreps", "additive"])
    sub.add_argument(
        "--operator",
        metavar="G",
        help="operator table or topology file (additive style only; defaults "
        "to the preference's own Kreps operator)",
    )
    sub.set_defaults(run=_run_menu_rep)

    sub = commands.add_parser("mobius", help="Möbius table of a topology's inclusion order")
    sub.add_argument("--topology", required=True, metavar="F")
    sub.set_defaults(run=_run_mobius)

    sub = commands.add_parser("hasse", help="Hasse diagram of a topology")
    sub.add_argument("--topology", required=True, metavar="F")
    sub.add_argument("--dot", action="store_true", help="emit Graphviz DOT text")
    sub.set_defaults(run=_run_hasse)

    return parser


def _write(payload: Any, out: str | None) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.run(args)
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _MALFORMED as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidClosureTable as exc:
        print(f"error: {exc}", file=sys.stderr)
        _write(jsonio.validation_doc(exc.report), args.out)
        return 1
    except AxiomsViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        _write(jsonio.axioms_doc(exc.report), args.out)
        return 1
    except DoesNotRespect as exc:
        print(f"error: {exc}", file=sys.stderr)
        _write(
            {"error": str(exc), "witness": jsonio.subset_doc(exc.witness)}, args.out
        )
        return 1
    except _MATH_FAILURE as exc:
        print(f"error: {exc}", file=sys.stderr)
        _write({"error": str(exc)}, args.out)
        return 1
    _write(payload, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
