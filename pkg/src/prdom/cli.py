"""Command-line front end.

Five subcommands: ``solve`` (domination number, optional witness and
forced-zero set), ``stable`` (deletion deltas), ``recognize`` (family
membership with an optional certificate file), ``generate`` (random
construction walks or the full family at one order, as graph6 lines), and
``verify`` (the exhaustive sweeps).

Reports are stable JSON: identical inputs and flags reproduce the payload
byte for byte, with wall-clock timing carried in a separate key that the
determinism contract excludes.

Exit codes: 0 success, 1 a verify suite failed, 2 unparseable or unusable
input, 3 size limit, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time

from . import __version__
from .canonical import canonical_form
from .family import (
    InvalidStepError,
    enumerate_family,
    grow,
    parse_certificate,
    recognize,
    replay_certificate,
    serialize_certificate,
)
from .graph6 import emit_graph6, parse_graph6
from .graphs import Forest, Graph, ParseError, Tree, make_path, parse_edge_list
from .solver import SizeLimitError, forced_zero_set, optimal_assignment, prd_number
from .stability import stability_report
from .sweeps import (
    attachment_delta_sweep,
    characterization_sweep,
    optima_structure_sweep,
)

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_SIZE_LIMIT = 3
EXIT_INTERNAL = 4


class _UsageError(ValueError):
    pass


def _read_text(args: argparse.Namespace) -> str:
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _parse_input(args: argparse.Namespace) -> Graph:
    text = _read_text(args)
    if args.format == "graph6":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise ParseError("empty graph6 input")
        if len(lines) > 1:
            raise ParseError("expected a single graph6 line")
        return parse_graph6(lines[0].strip())
    return parse_edge_list(text)


def _as_forest(g: Graph) -> Forest:
    try:
        return Forest(g)
    except ValueError as exc:
        raise _UsageError(f"input is not a forest: {exc}") from None


def _as_tree(g: Graph) -> Tree:
    try:
        return Tree(g)
    except ValueError as exc:
        raise _UsageError(f"input is not a tree: {exc}") from None


def _digest(forest: Forest) -> str:
    forms = sorted(canonical_form(t) for t, _ in forest.component_trees())
    return "sha256:" + hashlib.sha256(b"|".join(forms)).hexdigest()


def _write_output(args: argparse.Namespace, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(args: argparse.Namespace, command: str, options: dict, input_info: dict | None,
            result: dict, started: float) -> None:
    payload = {
        "command": command,
        "options": options,
        "input": input_info,
        "result": result,
        "version": __version__,
        "timing": {"seconds": round(time.perf_counter() - started, 6)},
    }
    _write_output(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _input_info(forest: Forest) -> dict:
    return {
        "digest": _digest(forest),
        "n": forest.n,
        "edges": forest.graph.m,
        "components": forest.ncomponents,
    }


def _cmd_solve(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    forest = _as_forest(_parse_input(args))
    result: dict = {"number": prd_number(forest)}
    if args.witness:
        values = [0] * forest.n
        for tree, labels in forest.component_trees():
            part = optimal_assignment(tree)
            for local, value in enumerate(part.values):
                values[labels[local]] = value
        result["witness"] = values
    if args.wset:
        forced: list[int] = []
        for tree, labels in forest.component_trees():
            forced.extend(labels[v] for v in forced_zero_set(tree))
        result["forced_zero"] = sorted(forced)
    _report(
        args,
        "solve",
        {"format": args.format, "witness": args.witness, "wset": args.wset},
        _input_info(forest),
        result,
        started,
    )
    return EXIT_OK


def _cmd_stable(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    tree = _as_tree(_parse_input(args))
    report = stability_report(tree)
    _report(
        args,
        "stable",
        {"format": args.format},
        _input_info(Forest(tree.graph)),
        {"base": report.base, "deltas": list(report.deltas), "stable": report.stable},
        started,
    )
    return EXIT_OK


def _cmd_recognize(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    tree = _as_tree(_parse_input(args))
    outcome = recognize(tree)
    result = {
        "accepted": outcome.accepted,
        "order": tree.n,
        "steps": len(outcome.certificate.steps) if outcome.certificate else None,
        "reason": outcome.reason,
    }
    if args.emit_certificate:
        if outcome.accepted:
            with open(args.emit_certificate, "w", encoding="utf-8") as fh:
                fh.write(serialize_certificate(outcome.certificate))
            result["certificate_path"] = args.emit_certificate
        else:
            result["certificate_path"] = None
    _report(
        args,
        "recognize",
        {"format": args.format},
        _input_info(Forest(tree.graph)),
        result,
        started,
    )
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace) -> int:
    lines = []
    if args.all is not None:
        if args.all < 3 or args.all % 3 != 0:
            raise _UsageError(f"--all takes a positive multiple of 3, got {args.all}")
        index = enumerate_family(args.all)
        for key in index.members:
            tree = replay_certificate(index.members[key], check_stability=False)
            lines.append(emit_graph6(tree.graph).decode("ascii"))
    else:
        if args.steps < 0:
            raise _UsageError(f"--steps must be non-negative, got {args.steps}")
        rng = random.Random(args.seed)
        tree = make_path(3)
        for _ in range(args.steps):
            forced = sorted(forced_zero_set(tree))
            if not forced:
                raise AssertionError("construction reached a tree with no forced-zero vertex")
            tree = grow(tree, rng.choice(forced))
        lines.append(emit_graph6(tree.graph).decode("ascii"))
    _write_output(args, "".join(line + "\n" for line in lines))
    return EXIT_OK


def _cmd_verify_certificate(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    with open(args.certificate, "r", encoding="utf-8") as fh:
        text = fh.read()
    result: dict = {"certificate_path": args.certificate}
    matches = None
    try:
        cert = parse_certificate(text)
        rebuilt = replay_certificate(cert)
    except InvalidStepError as exc:
        result.update({"valid": False, "error": str(exc)})
        _report(args, "verify", {"certificate": True}, None, result, started)
        return EXIT_PROPERTY_FAILURE
    result.update({"valid": True, "steps": len(cert.steps), "order": rebuilt.n})
    if args.input:
        tree = _as_tree(_parse_input(args))
        matches = canonical_form(tree) == canonical_form(rebuilt)
        result["matches_input"] = matches
    _report(args, "verify", {"certificate": True, "format": args.format}, None, result, started)
    return EXIT_OK if matches in (None, True) else EXIT_PROPERTY_FAILURE


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.certificate:
        return _cmd_verify_certificate(args)
    started = time.perf_counter()
    suites = ("theorem", "lemmas", "observation") if args.suite == "all" else (args.suite,)
    caps = {"theorem": 15, "lemmas": 15, "observation": 12}
    results: dict = {}
    for suite in suites:
        # an explicitly requested suite keeps its hard cap (size-limit error);
        # under "all" each suite clamps to its own cap instead
        max_n = min(args.max_n, caps[suite]) if args.suite == "all" else args.max_n
        if suite == "theorem":
            results["theorem"] = characterization_sweep(max_n).payload()
        elif suite == "lemmas":
            results["lemmas"] = attachment_delta_sweep(max_n=max_n, seed=args.seed).payload()
        else:
            results["observation"] = optima_structure_sweep(max_n).payload()
    all_passed = all(r["passed"] for r in results.values())
    _report(
        args,
        "verify",
        {"suite": args.suite, "max_n": args.max_n, "seed": args.seed},
        None,
        {"suites": results, "passed": all_passed},
        started,
    )
    return EXIT_OK if all_passed else EXIT_PROPERTY_FAILURE


def _add_io_arguments(sub: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        sub.add_argument("--input", help="read from this file instead of stdin")
        sub.add_argument(
            "--format",
            choices=("edgelist", "graph6"),
            default="edgelist",
            help="input format (default: edgelist)",
        )
    sub.add_argument("--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prdom",
        description="Perfect Roman domination on trees: solve, stability, "
        "family recognition and generation, exhaustive verification.",
    )
    parser.add_argument("--version", action="version", version=f"prdom {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="domination number of a tree or forest")
    _add_io_arguments(solve)
    solve.add_argument("--witness", action="store_true", help="include one optimal labeling")
    solve.add_argument("--wset", action="store_true", help="include the forced-zero vertex set")
    solve.set_defaults(func=_cmd_solve)

    stable = commands.add_parser("stable", help="deletion stability of a tree")
    _add_io_arguments(stable)
    stable.set_defaults(func=_cmd_stable)

    rec = commands.add_parser("recognize", help="family membership of a tree")
    _add_io_arguments(rec)
    rec.add_argument("--emit-certificate", metavar="PATH", help="write the build certificate here")
    rec.set_defaults(func=_cmd_recognize)

    gen = commands.add_parser("generate", help="emit family members as graph6 lines")
    group = gen.add_mutually_exclusive_group()
    group.add_argument("--steps", type=int, default=0, help="random construction steps from P3")
    group.add_argument("--all", type=int, help="every member of this order instead")
    gen.add_argument("--seed", type=int, default=0, help="random walk seed (default 0)")
    _add_io_arguments(gen, with_input=False)
    gen.set_defaults(func=_cmd_generate)

    verify = commands.add_parser(
        "verify", help="run exhaustive verification sweeps, or replay a certificate"
    )
    verify.add_argument(
        "--suite",
        choices=("theorem", "lemmas", "observation", "all"),
        default="all",
        help="which sweep to run (default: all)",
    )
    verify.add_argument("--max-n", type=int, default=10, help="largest tree order (default 10)")
    verify.add_argument("--seed", type=int, default=0, help="seed for randomized parts")
    verify.add_argument(
        "--certificate",
        metavar="PATH",
        help="replay and validate this certificate file instead of sweeping; "
        "with --input, also require the rebuilt tree to match",
    )
    _add_io_arguments(verify)
    verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"prdom: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except _UsageError as exc:
        print(f"prdom: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except SizeLimitError as exc:
        print(f"prdom: size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE_LIMIT
    except OSError as exc:
        print(f"prdom: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (InvalidStepError, AssertionError) as exc:
        print(f"prdom: internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
