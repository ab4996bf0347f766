"""Command line entry point: ``deletion-order <verb> ...``.

Exit codes: 0 success, 2 bad input, 3 resource cap hit, 4 a computed result
contradicts a proved property.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import coxeter
from .artinian import artinian_all_orders
from .bruhat import bruhat_compare
from .cayley import build_cayley, export, stream_in_deletion_order, successor_label
from .coxeter import CoxeterMatrix, build_system, load_system
from .duality import duality_report
from .errors import DeletionOrderError, InputError, InvariantViolation
from .normal_forms import element_key, nf_delta_oracle, nf_rlex
from .words import compare_deletion, format_word, parse_word

log = logging.getLogger("deletion_order")


def _parse_order(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise InputError(f"bad --order {text!r}; expected e.g. 2,1,3") from exc


def _system(args) -> coxeter.CoxeterSystem:
    for cap in ("cap_elements", "cap_wordlen"):
        if getattr(args, cap) <= 0:
            raise InputError(f"--{cap.replace('_', '-')} must be positive")
    return load_system(args.system, _parse_order(args.order),
                       element_cap=args.cap_elements, word_cap=args.cap_wordlen)


def _write(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _verified_labeling(system):
    """Successor labelling, checked against the comparator order."""
    graph = build_cayley(system)
    labeling = successor_label(graph)
    if labeling.order != sorted(system.elements(), key=element_key(system)):
        raise InvariantViolation(f"successor labelling of {system.name} differs from the deletion order")
    return graph, labeling


def cmd_compare(args) -> int:
    u = parse_word(args.u, args.n)
    v = parse_word(args.v, args.n)
    print(compare_deletion(u, v, args.n).name.lower())
    return 0


def _oracle_chunk(payload):
    matrix_json, word_cap, words = payload
    system = build_system(CoxeterMatrix.from_json(matrix_json), word_cap=word_cap)
    return [nf_delta_oracle(system, system.element(w), cap=word_cap) for w in words]


def cmd_nf(args) -> int:
    system = _system(args)
    if args.all:
        elements = system.elements()
    elif args.word is not None:
        elements = [system.element(parse_word(args.word, system.rank))]
    else:
        raise InputError("nf needs a WORD or --all")
    rlex = [nf_rlex(system, g) for g in elements]
    if args.jobs > 1 and len(rlex) > 1:
        chunks = [rlex[i::args.jobs] for i in range(args.jobs)]
        payloads = [(system.matrix.to_json(), args.cap_wordlen, c) for c in chunks]
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_oracle_chunk, payloads))
        delta = [None] * len(rlex)
        for i, res in enumerate(results):
            delta[i::args.jobs] = res
    else:
        delta = [nf_delta_oracle(system, g, cap=args.cap_wordlen) for g in elements]
    mismatches = 0
    for r, d in zip(rlex, delta):
        flag = "" if r == d else "  MISMATCH"
        mismatches += r != d
        if not args.all or flag:
            print(f"rlex {format_word(r, 's')}  delta {format_word(d, 's')}{flag}")
    if args.all:
        print(f"{len(rlex)} elements, {mismatches} mismatches")
    if mismatches:
        raise InvariantViolation(f"{mismatches} normal-form mismatches")
    return 0


def cmd_order_table(args) -> int:
    system = _system(args)
    graph, labeling = _verified_labeling(system)
    _write(export(system, graph, labeling, args.format), args.out)
    return 0


def cmd_label(args) -> int:
    system = _system(args)
    graph, labeling = _verified_labeling(system)
    if args.dot:
        Path(args.dot).write_text(export(system, graph, labeling, "dot"))
    _write(export(system, graph, labeling, args.format), args.out)
    return 0


def cmd_export(args) -> int:
    system = _system(args)
    graph = build_cayley(system)
    labeling = successor_label(graph)
    _write(export(system, graph, labeling, args.format), args.out)
    return 0


def cmd_stream(args) -> int:
    system = _system(args)
    if args.count <= 0:
        raise InputError("-n/--count must be positive")
    for k, g in enumerate(stream_in_deletion_order(system, args.count), start=1):
        print(f"{k} {format_word(nf_rlex(system, g), 's')}")
    return 0


def cmd_bruhat(args) -> int:
    system = _system(args)
    u = system.element(parse_word(args.u, system.rank))
    v = system.element(parse_word(args.v, system.rank))
    print(bruhat_compare(system, u, v))
    return 0


def cmd_artinian(args) -> int:
    report = artinian_all_orders(_system(args))
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=1))
    else:
        print(report)
    return 0


def cmd_duality(args) -> int:
    report = duality_report(_system(args), method=args.method)
    if args.format == "json":
        print(json.dumps(report.to_dict(args.defects_only), indent=1))
    else:
        sys.stdout.write(report.format(args.defects_only))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deletion-order",
                                     description="Deletion order on words and Coxeter groups.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def system_cmd(name, func, help_, formats=None, default_format=None):
        p = sub.add_parser(name, help=help_)
        p.add_argument("system", help="preset name (A3, B3, D5, I2(7), Atilde2, ...) or matrix JSON file")
        p.add_argument("--order", help="generator order override, least first, e.g. 2,1,3")
        p.add_argument("--cap-elements", type=int, default=coxeter.DEFAULT_ELEMENT_CAP)
        p.add_argument("--cap-wordlen", type=int, default=coxeter.DEFAULT_WORD_CAP)
        p.add_argument("--jobs", type=int, default=1)
        if formats:
            p.add_argument("--format", choices=formats, default=default_format)
        p.set_defaults(func=func)
        return p

    p = sub.add_parser("compare", help="compare two words in the deletion order")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("-n", type=int, default=None, help="alphabet size")
    p.set_defaults(func=cmd_compare)

    p = system_cmd("nf", cmd_nf, "both normal forms of an element (or of all elements)")
    p.add_argument("word", nargs="?")
    p.add_argument("--all", action="store_true")

    p = system_cmd("order-table", cmd_order_table, "elements in deletion order with L and NF",
                   ["text", "csv", "json"], "text")
    p.add_argument("--out")

    p = system_cmd("label", cmd_label, "run the successor algorithm",
                   ["csv", "text", "json"], "csv")
    p.add_argument("--out")
    p.add_argument("--dot")

    p = system_cmd("export", cmd_export, "export the labelled Cayley graph",
                   ["dot", "json", "csv", "text"], "dot")
    p.add_argument("--out")

    p = system_cmd("stream", cmd_stream, "first K elements in deletion order")
    p.add_argument("-n", "--count", type=int, default=10)

    p = system_cmd("bruhat", cmd_bruhat, "Bruhat comparison of two elements")
    p.add_argument("u")
    p.add_argument("v")

    system_cmd("artinian", cmd_artinian, "Artinian verdicts per generator order",
               ["text", "json"], "text")

    p = system_cmd("duality", cmd_duality, "check L(w) + L(w0 w) = |W| + 1",
                   ["text", "json"], "text")
    p.add_argument("--defects-only", action="store_true")
    p.add_argument("--method", choices=["auto", "graph", "sort"], default="auto")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except DeletionOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
