"""Command line interface.

Graph and instance arguments accept either a path to a JSON file or a name:
graphs take pentagon, complete(n), empty(n), g13, h(n), or ldg13; instances
take f_tilde, g_tilde, h_tilde, or pentagon_equality. Representation
arguments take c5bar, g13bar, hbar(n), ldg13bar, or a JSON file exported by
``rep``; files are bound to their exact target graph by hash.

Exit codes: 0 success, 2 invalid input, 3 solver budget exhausted (the
certified bracket is still printed), 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict
from fractions import Fraction

from .errors import InputError, SolverTimeout, StructureViolation, VerificationFailure
from .graphs import (
    Graph,
    bidirect,
    build_graph,
    complement,
    digraph_to_dot,
    directed_line_graph,
    graph_from_json_dict,
    graph_to_dot,
    graph_to_json_dict,
    named_graph,
    or_product,
    power,
    strong_product,
)
from .instances import (
    build_confusion_graph,
    build_m_instance_graph,
    builtin_instance,
    classify_nonedges,
    construct_or_instance,
    construct_strong_instance,
    instance_from_json_dict,
    instance_to_json_dict,
    predict_product_collapse,
)
from .invariants import (
    b_fold_chromatic,
    chromatic_bracket,
    clique_number,
    edge_chromatic_directed,
    fractional_chromatic,
    independence_number,
    verify_g13_structure,
    xi_bounds,
)
from .protocol import build_and_verify_protocol, sample_protocol
from .rates import advantage_report, casebook, classification_table
from .reps import (
    builtin_representation,
    coloring_to_representation,
    rep_from_json_dict,
    rep_to_json_dict,
    tensor_representation,
    verify_representation,
)
from .theta import lovasz_theta

_BUILTIN_REPS = ("c5bar", "g13bar", "ldg13bar")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_graph(ref: str) -> Graph:
    if os.path.exists(ref):
        return graph_from_json_dict(_load_json(ref))
    if ref == "ldg13":
        return directed_line_graph(bidirect(named_graph("g13")))
    return named_graph(ref)


def _load_instance(ref: str):
    if os.path.exists(ref):
        return instance_from_json_dict(_load_json(ref))
    return builtin_instance(ref)


def _load_rep(ref: str, target: Graph | None):
    if ref in _BUILTIN_REPS or (ref.startswith("hbar(") and ref.endswith(")")):
        return builtin_representation(ref)
    if not os.path.exists(ref):
        raise InputError(
            f"{ref!r} is neither a builtin representation nor an existing file"
        )
    if target is None:
        raise InputError("representation files need the target graph for validation")
    return rep_from_json_dict(_load_json(ref), target)


def _emit(args, text: str) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _emit_graph(args, g: Graph) -> None:
    if getattr(args, "dot", False):
        _emit(args, graph_to_dot(g))
    else:
        _emit(args, _dumps(graph_to_json_dict(g)))


# ---------------------------------------------------------------------------
# graph


def _cmd_graph_named(args) -> int:
    _emit_graph(args, _load_graph(args.name))
    return 0


def _cmd_graph_build(args) -> int:
    if args.from_json:
        g = graph_from_json_dict(_load_json(args.from_json))
    else:
        if not args.labels:
            raise InputError("either --from-json or --labels/--edges is required")
        labels = args.labels.split(",")
        edges = []
        if args.edges:
            for part in args.edges.split(","):
                if part.count("-") != 1:
                    raise InputError(f"edge {part!r} is not of the form u-v")
                u, v = part.split("-")
                edges.append((u, v))
        g = build_graph(labels, edges)
    _emit_graph(args, g)
    return 0


def _cmd_graph_product(args) -> int:
    g, h = _load_graph(args.graph), _load_graph(args.graph2)
    prod = strong_product(g, h) if args.kind == "strong" else or_product(g, h)
    _emit_graph(args, prod)
    return 0


def _cmd_graph_power(args) -> int:
    _emit_graph(args, power(_load_graph(args.graph), args.m, args.kind))
    return 0


def _cmd_graph_complement(args) -> int:
    _emit_graph(args, complement(_load_graph(args.graph)))
    return 0


def _cmd_graph_linegraph(args) -> int:
    d = bidirect(_load_graph(args.graph))
    if args.dot:
        _emit(args, digraph_to_dot(d))
        return 0
    _emit_graph(args, directed_line_graph(d))
    return 0


# ---------------------------------------------------------------------------
# instance


def _cmd_instance_builtin(args) -> int:
    _emit(args, _dumps(instance_to_json_dict(builtin_instance(args.name))))
    return 0


def _cmd_instance_build(args) -> int:
    inst = instance_from_json_dict(_load_json(args.from_json))
    _emit(args, _dumps(instance_to_json_dict(inst)))
    return 0


def _cmd_instance_from_graph(args) -> int:
    g = _load_graph(args.graph)
    inst = construct_strong_instance(g) if args.mode == "strong" else construct_or_instance(g)
    _emit(args, _dumps(instance_to_json_dict(inst)))
    return 0


# ---------------------------------------------------------------------------
# confusion


def _cmd_confusion_single(args) -> int:
    _emit_graph(args, build_confusion_graph(_load_instance(args.instance)))
    return 0


def _cmd_confusion_power(args) -> int:
    _emit_graph(args, build_m_instance_graph(_load_instance(args.instance), args.m))
    return 0


def _cmd_confusion_classify(args) -> int:
    cls = classify_nonedges(_load_instance(args.instance))
    _emit(
        args,
        _dumps(
            {
                "c1_pairs": [list(p) for p in cls.c1_pairs],
                "c2_pairs": [list(p) for p in cls.c2_pairs],
                "all_c1": cls.all_c1,
                "all_c2": cls.all_c2,
            }
        ),
    )
    return 0


def _cmd_confusion_predict(args) -> int:
    verdict = predict_product_collapse(_load_instance(args.instance))
    _emit(args, _dumps({"collapse": verdict.value}))
    return 0


# ---------------------------------------------------------------------------
# invariant


def _cmd_invariant(args) -> int:
    g = _load_graph(args.graph)
    kind = args.kind
    if kind == "alpha":
        out = {"alpha": independence_number(g)}
    elif kind == "omega":
        out = {"omega": clique_number(g)}
    elif kind == "chi":
        res = chromatic_bracket(g, args.budget_seconds)
        if not res.optimal and not args.bracket:
            raise SolverTimeout(
                f"chromatic budget of {args.budget_seconds}s exhausted",
                (res.lower, res.upper),
            )
        out = {"lower": res.lower, "upper": res.upper, "optimal": res.optimal}
        if res.optimal:
            out["chi"] = res.upper
    elif kind == "chif":
        out = {"chif": str(fractional_chromatic(g, args.budget_seconds))}
    elif kind == "bfold":
        out = {"b": args.b, "value": b_fold_chromatic(g, args.b, args.budget_seconds)}
    elif kind == "theta":
        th = lovasz_theta(g)
        out = {"lower": th.lower, "upper": th.upper}
    elif kind == "xi":
        cert = _load_rep(args.cert, g) if args.cert else None
        lo, hi = xi_bounds(g, cert, args.budget_seconds)
        out = {"lower": lo, "upper": hi}
    elif kind == "edgechrom":
        out = {"value": edge_chromatic_directed(bidirect(g), args.budget_seconds)}
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown invariant {kind!r}")
    _emit(args, _dumps(out))
    return 0


# ---------------------------------------------------------------------------
# rep


def _cmd_rep_builtin(args) -> int:
    _emit(args, _dumps(rep_to_json_dict(builtin_representation(args.name))))
    return 0


def _cmd_rep_verify(args) -> int:
    g = _load_graph(args.graph)
    rep = _load_rep(args.rep, g)
    verify_representation(rep, g)
    _emit(args, _dumps({"valid": True, "dim": rep.dim, "mode": rep.mode}))
    return 0


def _cmd_rep_tensor(args) -> int:
    r1 = _load_rep(args.rep, _load_graph(args.graph) if args.graph else None)
    r2 = _load_rep(args.rep2, _load_graph(args.graph2) if args.graph2 else None)
    _emit(args, _dumps(rep_to_json_dict(tensor_representation(r1, r2))))
    return 0


def _cmd_rep_from_coloring(args) -> int:
    g = _load_graph(args.graph)
    colors = {}
    for part in args.colors.split(","):
        if part.count("=") != 1:
            raise InputError(f"color assignment {part!r} is not of the form vertex=color")
        lab, c = part.split("=")
        colors[lab] = int(c)
    rep = coloring_to_representation(g, colors)
    _emit(args, _dumps(rep_to_json_dict(rep)))
    return 0


# ---------------------------------------------------------------------------
# protocol


def _protocol_rep(args, inst):
    m = args.m
    target = complement(build_m_instance_graph(inst, m))
    if os.path.exists(args.rep):
        return rep_from_json_dict(_load_json(args.rep), target)
    rep = _load_rep(args.rep, None)
    if args.tensor and m > 1:
        out = rep
        for _ in range(m - 1):
            out = tensor_representation(out, rep)
        return out
    return rep


def _cmd_protocol_verify(args) -> int:
    inst = _load_instance(args.instance)
    rep = _protocol_rep(args, inst)
    tr = build_and_verify_protocol(inst, args.m, rep)
    out = {
        "m": tr.m,
        "dim": tr.dim,
        "mode": tr.mode,
        "verified": tr.verified,
        "rate_bits_per_instance": tr.rate_bits_per_instance,
        "entries": [
            {
                "y": list(e.y_block),
                "x": list(e.x_block),
                "decoded": list(e.decoded),
                "certain": e.certain,
            }
            for e in tr.entries
        ],
    }
    _emit(args, _dumps(out))
    return 0


def _cmd_protocol_sample(args) -> int:
    inst = _load_instance(args.instance)
    rep = _protocol_rep(args, inst)
    s = sample_protocol(inst, args.m, rep, shots=args.shots, seed=args.seed)
    _emit(args, _dumps({"shots": s.shots, "correct": s.correct, "accuracy": s.accuracy}))
    return 0


# ---------------------------------------------------------------------------
# rates


def _report_dict(rep) -> dict:
    d = asdict(rep)
    d["kind"] = "rates" if hasattr(rep, "collapse") else "family"
    return d


def _cmd_rates_report(args) -> int:
    inst = _load_instance(args.instance)
    certs = ()
    if args.cert:
        g = complement(build_confusion_graph(inst))
        certs = (_load_rep(args.cert, g),)
    pinned = None
    if args.pinned_quantum_lower:
        pinned = (
            Fraction(args.pinned_quantum_lower),
            "externally pinned quantum lower bound",
        )
    rep = advantage_report(
        inst,
        name=args.name,
        m_max=args.m_max,
        certificates=certs,
        budget_seconds=args.budget_seconds,
        pinned_quantum_lower=pinned,
    )
    _emit(args, _dumps(_report_dict(rep)))
    return 0


def _cmd_rates_casebook(args) -> int:
    _emit(args, _dumps(_report_dict(casebook(args.name, args.budget_seconds))))
    return 0


def _cmd_rates_classification(args) -> int:
    table = classification_table(args.budget_seconds)
    if args.json:
        out = {
            "rows": [asdict(r) | {"agrees": r.agrees} for r in table.rows],
            "all_agree": table.all_agree,
        }
        _emit(args, _dumps(out))
    else:
        _emit(args, table.markdown)
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify_g13(args) -> int:
    rows = verify_g13_structure()
    _emit(args, _dumps({"rows": rows, "consistent": True}))
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("-o", "--output", help="write the result to a file instead of stdout")


def _add_dot(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--budget-seconds",
        type=float,
        default=300.0,
        help="per-solver time budget (default 300)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerorate",
        description="Zero-error rates for function computation with side information.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    # graph
    graph = top.add_parser("graph", help="build and transform graphs").add_subparsers(
        dest="sub", required=True
    )
    p = graph.add_parser("named", help="emit a named graph")
    p.add_argument("--name", required=True)
    _add_dot(p), _add_output(p)
    p.set_defaults(func=_cmd_graph_named)
    p = graph.add_parser("build", help="build a graph from labels and edges or JSON")
    p.add_argument("--from-json")
    p.add_argument("--labels", help="comma-separated vertex labels")
    p.add_argument("--edges", default="", help="comma-separated u-v pairs")
    _add_dot(p), _add_output(p)
    p.set_defaults(func=_cmd_graph_build)
    p = graph.add_parser("product", help="strong or OR product of two graphs")
    p.add_argument("--kind", choices=("strong", "or"), required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--graph2", required=True)
    _add_dot(p), _add_output(p)
    p.set_defaults(func=_cmd_graph_product)
    p = graph.add_parser("power", help="m-fold product power")
    p.add_argument("--graph", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kind", choices=("strong", "or"), required=True)
    _add_dot(p), _add_output(p)
    p.set_defaults(func=_cmd_graph_power)
    p = graph.add_parser("complement", help="complement graph")
    p.add_argument("--graph", required=True)
    _add_dot(p), _add_output(p)
    p.set_defaults(func=_cmd_graph_complement)
    p = graph.add_parser(
        "linegraph", help="directed line graph of the bidirected input"
    )
    p.add_argument("--graph", required=True)
    _add_dot(p), _add_output(p)
    p.set_defaults(func=_cmd_graph_linegraph)

    # instance
    instance = top.add_parser("instance", help="function instances").add_subparsers(
        dest="sub", required=True
    )
    p = instance.add_parser("builtin", help="emit a built-in instance")
    p.add_argument("--name", required=True)
    _add_output(p)
    p.set_defaults(func=_cmd_instance_builtin)
    p = instance.add_parser("build", help="validate and canonicalize an instance JSON")
    p.add_argument("--from-json", required=True)
    _add_output(p)
    p.set_defaults(func=_cmd_instance_build)
    p = instance.add_parser(
        "from-graph", help="instance whose confusion graph is the given graph"
    )
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", choices=("strong", "or"), required=True)
    _add_output(p)
    p.set_defaults(func=_cmd_instance_from_graph)

    # confusion
    confusion = top.add_parser("confusion", help="confusion graphs").add_subparsers(
        dest="sub", required=True
    )
    p = confusion.add_parser("single", help="confusion graph of one instance")
    p.add_argument("--instance", required=True)
    _add_dot(p), _add_output(p)
    p.set_defaults(func=_cmd_confusion_single)
    p = confusion.add_parser("power", help="m-instance confusion graph")
    p.add_argument("--instance", required=True)
    p.add_argument("--m", type=int, required=True)
    _add_dot(p), _add_output(p)
    p.set_defaults(func=_cmd_confusion_power)
    p = confusion.add_parser("classify", help="split non-edges into C1 and C2")
    p.add_argument("--instance", required=True)
    _add_output(p)
    p.set_defaults(func=_cmd_confusion_classify)
    p = confusion.add_parser("predict", help="predict the product collapse")
    p.add_argument("--instance", required=True)
    _add_output(p)
    p.set_defaults(func=_cmd_confusion_predict)

    # invariant
    p = top.add_parser("invariant", help="graph invariants")
    p.add_argument(
        "kind",
        choices=("alpha", "omega", "chi", "chif", "bfold", "theta", "xi", "edgechrom"),
    )
    p.add_argument("--graph", required=True)
    p.add_argument("--b", type=int, default=2, help="fold count for bfold")
    p.add_argument("--cert", help="representation certificate for xi")
    p.add_argument(
        "--bracket",
        action="store_true",
        help="for chi: emit the certified bracket instead of failing on timeout",
    )
    _add_budget(p), _add_output(p)
    p.set_defaults(func=_cmd_invariant)

    # rep
    rep = top.add_parser("rep", help="orthogonal representations").add_subparsers(
        dest="sub", required=True
    )
    p = rep.add_parser("builtin", help="emit a built-in representation")
    p.add_argument("--name", required=True)
    _add_output(p)
    p.set_defaults(func=_cmd_rep_builtin)
    p = rep.add_parser("verify", help="validate a representation against a graph")
    p.add_argument("--rep", required=True)
    p.add_argument("--graph", required=True)
    _add_output(p)
    p.set_defaults(func=_cmd_rep_verify)
    p = rep.add_parser("tensor", help="tensor two representations")
    p.add_argument("--rep", required=True)
    p.add_argument("--rep2", required=True)
    p.add_argument("--graph", help="target of --rep when it is a file")
    p.add_argument("--graph2", help="target of --rep2 when it is a file")
    _add_output(p)
    p.set_defaults(func=_cmd_rep_tensor)
    p = rep.add_parser("from-coloring", help="basis representation from a coloring")
    p.add_argument("--graph", required=True)
    p.add_argument("--colors", required=True, help="comma-separated vertex=color pairs")
    _add_output(p)
    p.set_defaults(func=_cmd_rep_from_coloring)

    # protocol
    protocol = top.add_parser("protocol", help="zero-error protocols").add_subparsers(
        dest="sub", required=True
    )
    p = protocol.add_parser("verify", help="verify a protocol and print its transcript")
    p.add_argument("--instance", required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--rep", required=True)
    p.add_argument(
        "--tensor",
        action="store_true",
        help="tensor a builtin single-instance representation up to m",
    )
    _add_output(p)
    p.set_defaults(func=_cmd_protocol_verify)
    p = protocol.add_parser("sample", help="Monte Carlo decode of a verified protocol")
    p.add_argument("--instance", required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--rep", required=True)
    p.add_argument("--tensor", action="store_true")
    p.add_argument("--shots", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    _add_output(p)
    p.set_defaults(func=_cmd_protocol_sample)

    # rates
    rates = top.add_parser("rates", help="rate intervals and verdicts").add_subparsers(
        dest="sub", required=True
    )
    p = rates.add_parser("report", help="certified rate report for an instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--name", default="instance")
    p.add_argument("--m-max", type=int, default=2)
    p.add_argument("--cert", help="representation of the confusion complement")
    p.add_argument(
        "--pinned-quantum-lower",
        help="rational lower bound on the quantum rate base, e.g. 5/2",
    )
    _add_budget(p), _add_output(p)
    p.set_defaults(func=_cmd_rates_report)
    p = rates.add_parser("casebook", help="worked cases with bundled certificates")
    p.add_argument("--name", required=True)
    _add_budget(p), _add_output(p)
    p.set_defaults(func=_cmd_rates_casebook)
    p = rates.add_parser(
        "classification", help="recompute the advantage classification table"
    )
    p.add_argument("--json", action="store_true", help="emit JSON instead of Markdown")
    _add_budget(p), _add_output(p)
    p.set_defaults(func=_cmd_rates_classification)

    # verify
    verify = top.add_parser("verify", help="structural self-checks").add_subparsers(
        dest="sub", required=True
    )
    p = verify.add_parser(
        "g13-structure", help="check the triple/common-vertex structure rows"
    )
    _add_output(p)
    p.set_defaults(func=_cmd_verify_g13)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SolverTimeout as exc:
        lo, hi = exc.bracket
        print(_dumps({"timeout": str(exc), "bracket": [repr(lo), repr(hi)]}))
        print(f"solver budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (VerificationFailure, StructureViolation) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 4
    except InputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
