"""Command line front end.

Exit codes: 0 success (and verify-equal), 1 verification mismatch, 2 no
certificate found, 64 usage or argument error.  Paths may be '-' for
stdin/stdout.  All randomness comes from an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .constructions import cycle_witness, grid_witness, path_witness
from .graphs import Graph, make_cycle, make_grid, make_path
from .obstruction import interleaving_certificate
from .search import (
    MODE_EXHAUSTIVE,
    MODE_RANDOM,
    SearchConfig,
    format_search_report,
    search_report,
)
from .stars import Witness, verify

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_NO_CERTIFICATE = 2
EXIT_USAGE = 64

FAMILIES = ("cycle", "path", "grid")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want 64
        raise _UsageError(message)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_json(path: str, what: str):
    try:
        return json.loads(_read_text(path))
    except (OSError, json.JSONDecodeError) as exc:
        raise _UsageError(f"cannot read {what} from {path}: {exc}") from exc


def _family_graph(family: str, params: list[int]) -> Graph:
    if family == "cycle":
        if len(params) != 1:
            raise _UsageError("cycle takes exactly one size parameter")
        return make_cycle(params[0])
    if family == "path":
        if len(params) != 1:
            raise _UsageError("path takes exactly one size parameter")
        return make_path(params[0])
    if family == "grid":
        if not params:
            raise _UsageError("grid takes one or more dimension sizes")
        return make_grid(params)
    raise _UsageError(f"unknown family {family!r}")


def _family_witness(family: str, params: list[int]) -> dict:
    """Witness JSON for a supported family, tagged with its construction."""
    if family == "cycle":
        if len(params) != 1:
            raise _UsageError("cycle takes exactly one size parameter")
        n = params[0]
        wit = cycle_witness(n)
        name = "cycle-even" if n % 2 == 0 else "cycle-odd"
        extra: dict = {"n": n}
    elif family == "path":
        if len(params) != 1:
            raise _UsageError("path takes exactly one size parameter")
        n = params[0]
        wit = path_witness(n)
        name, extra = "path", {"n": n}
    elif family == "grid":
        if len(params) != 2:
            raise _UsageError("witness generation supports grids with exactly two dimensions")
        n1, n2 = params
        wit = grid_witness(n1, n2)
        extra = {"n1": n1, "n2": n2}
        if min(n1, n2) == 1:
            name = "path"
        elif min(n1, n2) == 2:
            name = "grid-two-columns"
        elif n1 == n2:
            name, extra = "grid-square", {"h": n1, **extra}
        else:
            name, extra = "grid-square-restricted", {"h": max(n1, n2), **extra}
    else:
        raise _UsageError(f"unknown family {family!r}")
    return {"construction": name, **extra, "k": wit.k, **wit.to_dict()}


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


def _cmd_generate(args) -> int:
    graph = _family_graph(args.family, args.params)
    text = graph.to_dot() if args.dot else _dump(graph.to_dict())
    _write_text(args.output, text)
    return EXIT_OK


def _cmd_witness(args) -> int:
    _write_text(args.output, _dump(_family_witness(args.family, args.params)))
    return EXIT_OK


def _cmd_verify(args) -> int:
    graph = Graph.from_dict(_load_json(args.graph, "graph"))
    witness = Witness.from_dict(_load_json(args.witness, "witness"))
    report = verify(witness, graph)
    _write_text(args.output, _dump(report.to_dict()))
    return EXIT_OK if report.equal else EXIT_MISMATCH


def _load_weights(path: str) -> list[int]:
    obj = _load_json(path, "weights")
    if isinstance(obj, dict) and "weights" in obj:
        obj = obj["weights"]
    if not isinstance(obj, list):
        raise _UsageError("weights JSON must be a list or contain a 'weights' list")
    return obj


def _cmd_obstruct(args) -> int:
    graph = Graph.from_dict(_load_json(args.graph, "graph"))
    weights = _load_weights(args.weights)
    cert = interleaving_certificate(graph, weights, args.k)
    if cert is None:
        _write_text(args.output, "none\n")
        return EXIT_NO_CERTIFICATE
    _write_text(args.output, _dump(cert.to_dict()))
    return EXIT_OK


def _cmd_mink(args) -> int:
    target = args.target
    if target[0] in FAMILIES:
        graph = _family_graph(target[0], _int_params(target[1:]))
    elif len(target) == 1:
        graph = Graph.from_dict(_load_json(target[0], "graph"))
    else:
        raise _UsageError("mink expects a graph file, '-', or a family with sizes")
    cfg = SearchConfig(
        max_weight=args.max_weight,
        mode=args.mode,
        trials=args.trials,
        rng_seed=args.seed,
        target_k=args.target_k,
        jobs=args.jobs,
        prune_symmetry=args.prune_symmetry,
    )
    report = search_report(graph, cfg)
    text = format_search_report(report) if args.human else _dump(report)
    _write_text(args.output, text)
    return EXIT_OK


def _int_params(raw: Sequence[str]) -> list[int]:
    out = []
    for item in raw:
        try:
            out.append(int(item))
        except ValueError:
            raise _UsageError(f"expected an integer size, got {item!r}") from None
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="starpcg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a graph as JSON or DOT")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="+")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("witness", help="emit a construction witness for a family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="+")
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("verify", help="check that a witness realizes a graph")
    p.add_argument("graph")
    p.add_argument("witness")
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("obstruct", help="search for an interleaving certificate")
    p.add_argument("graph")
    p.add_argument("weights")
    p.add_argument("k", type=int)
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("mink", help="search weight vectors for the fewest intervals")
    p.add_argument("target", nargs="+", help="graph file, '-', or family with sizes")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--mode", choices=(MODE_EXHAUSTIVE, MODE_RANDOM), default=MODE_EXHAUSTIVE)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--target-k", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--prune-symmetry", action="store_true")
    p.add_argument("--human", action="store_true", help="render a text summary instead of JSON")
    p.add_argument("-o", "--output", default="-")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        if args.command in ("generate", "witness"):
            args.params = _int_params(args.params)
        handler = {
            "generate": _cmd_generate,
            "witness": _cmd_witness,
            "verify": _cmd_verify,
            "obstruct": _cmd_obstruct,
            "mink": _cmd_mink,
        }[args.command]
        return handler(args)
    except _UsageError as exc:
        print(f"starpcg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # domain errors (bad sizes, malformed JSON payloads, oversized search)
        print(f"starpcg: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
