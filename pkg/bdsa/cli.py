"""Command-line front end.

Exit status separates the verdict from the run: 0 whenever the analysis
completed (whatever the verdict), 2 for invalid input or an analysis that
cannot be performed, 3 when two routes that must agree did not.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from colorama import Fore, Style
from dotenv import load_dotenv

from .bds import render_word
from .boolcore import PrincipalIdeal, parse_element, render_element
from .config import Config
from .errors import AnalysisError, CrossCheckMismatch, InputError
from .ideals import (
    LATTICE,
    LATTICE_MODES,
    SATURATED,
    enumerate_lattice,
    gauge_pairs,
    is_minimal,
    is_simple,
    minimality_witness,
    quotient_instance,
)
from .instance_io import load_instance, render_instance
from .log_setup import setup_logging
from .oracle import (
    brute_condition_L,
    brute_minimality_45,
    random_instance,
    run_corpus,
)
from .props import QUOTIENT_L, check_condition_K, check_condition_L, enumerate_maximal_tails
from .relgen import to_generalized
from .report import build_report, tail_report
from .schemas.color import verdict_color
from .schemas.generator import GeneratorParams
from .topograph import build_graph, dom_r_size, loops_without_entrances, to_dot, vertex_classes
from .utils.common_utils import to_json
from .utils.env_utils import get_env_flag

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3

PROPERTIES = ("l", "k", "minimal", "simple")
METHODS = ("main", "all")


def _emit(line: str, verdict=None):
    if verdict is not None and sys.stdout.isatty() and not get_env_flag("BDSA_NO_COLOR"):
        line = f"{getattr(Fore, verdict_color(verdict).name)}{line}{Style.RESET_ALL}"
    print(line)


def _holds(flag: bool) -> str:
    return "HOLDS" if flag else "FAILS"


def _yes(flag: bool) -> str:
    return "YES" if flag else "NO"


def _oracle_applies(inst) -> bool:
    return inst.n <= Config.get_limits_oracle_max_atoms()


""" subcommands """


def cmd_validate(args) -> int:
    inst = load_instance(args.file)
    _emit(f"valid: {inst.n} atoms, {len(inst.labels)} labels")
    return EXIT_OK


def _check_l(inst, method):
    holds, witness = check_condition_L(inst)
    if method == "all":
        verdicts = {"trajectory": holds, "topological": not loops_without_entrances(build_graph(inst))}
        if _oracle_applies(inst):
            verdicts["literal"] = brute_condition_L(inst, max_len=2 ** inst.n)
        if len(set(verdicts.values())) != 1:
            raise CrossCheckMismatch("Condition (L)", verdicts)
    line = f"Condition (L): {_holds(holds)}"
    if witness is not None:
        line += (
            f"; cycle word={render_word(inst, witness.word)} "
            f"base={inst.universe.names[witness.atom]}"
        )
    _emit(line, holds)


def _check_k(inst, method):
    holds = check_condition_K(inst, route=QUOTIENT_L if method == "main" else "all")
    _emit(f"Condition (K): {_holds(holds)}", holds)


def _check_minimal(inst, method):
    minimal = is_minimal(inst, route=LATTICE if method == "main" else "all")
    if method == "all" and _oracle_applies(inst):
        item4, item5 = brute_minimality_45(inst)
        if not item4 == item5 == minimal:
            raise CrossCheckMismatch(
                "minimality", {"lattice": minimal, "item4": item4, "item5": item5}
            )
    line = f"minimal: {_yes(minimal)}"
    if not minimal:
        top = minimality_witness(inst)
        line += f" (saturated hereditary ideal top={render_element(inst.universe, top)})"
    _emit(line, minimal)


def _check_simple(inst, method):
    simple, explanation = is_simple(inst)
    _emit(f"simple: {_yes(simple)} ({explanation})", simple)


_CHECKS = {"l": _check_l, "k": _check_k, "minimal": _check_minimal, "simple": _check_simple}


def cmd_check(args) -> int:
    inst = load_instance(args.file)
    _CHECKS[args.property](inst, args.method)
    return EXIT_OK


def cmd_ideals(args) -> int:
    inst = load_instance(args.file)
    entries = enumerate_lattice(inst, args.mode)
    for e in entries:
        _emit(
            f"{render_element(inst.universe, e.top)} hereditary={e.hereditary} "
            f"saturated={e.saturated} jSaturated={e.j_saturated}"
        )
    _emit(f"{len(entries)} {args.mode} hereditary ideals")
    return EXIT_OK


def cmd_gauge_ideals(args) -> int:
    inst = load_instance(args.file)
    pairs = gauge_pairs(inst)
    for p in pairs:
        _emit(f"H={render_element(inst.universe, p.h_top)} S={render_element(inst.universe, p.s_top)}")
    _emit(f"{len(pairs)} gauge-invariant ideals")
    return EXIT_OK


def cmd_tails(args) -> int:
    inst = load_instance(args.file)
    tails = enumerate_maximal_tails(inst)
    for t in tails:
        r = tail_report(inst, t)
        line = f"D={r.complement} cyclic={r.cyclic}"
        if r.cyclic:
            line += f" base={r.base} beta={r.beta}"
        _emit(line)
    _emit(f"{len(tails)} maximal tails")
    return EXIT_OK


def cmd_graph(args) -> int:
    inst = load_instance(args.file)
    g = build_graph(inst)
    if args.dot:
        text = to_dot(inst, g)
        if args.dot == "-":
            sys.stdout.write(text)
            return EXIT_OK
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(text)
    classes = vertex_classes(g)
    loops = loops_without_entrances(g)
    _emit(f"vertices: {g.vertex_count}; edges: {len(g.edges)}; dom(r): {dom_r_size(g)}")
    _emit(
        f"sources: {render_element(inst.universe, classes.sce)}; "
        f"regular: {render_element(inst.universe, classes.rg)}"
    )
    _emit(f"loops without entrances: {len(loops)}", not loops)
    return EXIT_OK


def cmd_quotient(args) -> int:
    inst = load_instance(args.file)
    top = parse_element(inst.universe, args.top)
    sys.stdout.write(render_instance(quotient_instance(inst, PrincipalIdeal(top=top))))
    return EXIT_OK


def cmd_bprime(args) -> int:
    inst = load_instance(args.file)
    prime = to_generalized(inst)
    names = prime.instance.universe.names
    comments = [
        f"{name}: {tag.kind} {inst.universe.names[tag.atom]}"
        for name, tag in zip(names, prime.tags)
    ]
    sys.stdout.write(render_instance(prime.instance, comments=comments))
    return EXIT_OK


def cmd_report(args) -> int:
    inst = load_instance(args.file)
    report = build_report(inst)
    if args.json:
        print(to_json(report, indent=Config.get_report_indent()))
        return EXIT_OK
    v = report.verdicts
    _emit(f"Condition (L): {_holds(v.condition_l)}", v.condition_l)
    _emit(f"Condition (K): {_holds(v.condition_k)}", v.condition_k)
    _emit(f"minimal: {_yes(v.minimal)}", v.minimal)
    if v.simple is None:
        _emit(f"simple: n/a ({v.simple_refusal})")
    else:
        _emit(f"simple: {_yes(v.simple)} ({v.simple_explanation})", v.simple)
    c = report.counts
    _emit(
        f"saturated hereditary ideals: {c.sat_hereditary_ideals}; maximal tails: "
        f"{c.maximal_tails} ({c.cyclic_tails} cyclic); gauge-invariant ideals: {c.gauge_pairs}"
    )
    for line in report.conclusions:
        _emit(f"  - {line}")
    return EXIT_OK


def cmd_gen(args) -> int:
    params = GeneratorParams(
        seed=args.seed,
        atom_count=args.atoms,
        label_count=args.labels,
        edge_density=args.density,
        ideal_slack=args.slack,
        j_shrink=args.shrink,
    )
    sys.stdout.write(render_instance(random_instance(params), comments=[f"seed {args.seed}"]))
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    result = run_corpus(
        first_seed=args.seed,
        count=args.count,
        workers=args.workers,
        digraphs=args.digraphs,
        progress=args.progress,
    )
    for entry in result.failures:
        _emit(f"{entry.kind} seed {entry.seed}: {'; '.join(entry.mismatches)}", False)
        sys.stdout.write(entry.instance_text)
    total = len(result.entries)
    _emit(f"{total - len(result.failures)}/{total} consistent", result.ok)
    return EXIT_OK if result.ok else EXIT_MISMATCH


""" parser """


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bdsa", description="Analyze finite Boolean dynamical systems."
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {Config.get_app_version()}"
    )
    parser.add_argument("--config", default="./config.json", help="JSON config file, if present.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def with_file(name, func, help_text):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("file", help="Instance file.")
        sub.set_defaults(func=func)
        return sub

    with_file("validate", cmd_validate, "Parse and validate an instance.")
    check = with_file("check", cmd_check, "Decide one property.")
    check.add_argument("--property", choices=PROPERTIES, default="l")
    check.add_argument("--method", choices=METHODS, default="main")
    ideals = with_file("ideals", cmd_ideals, "List hereditary saturated ideals.")
    ideals.add_argument("--mode", choices=LATTICE_MODES, default=SATURATED)
    with_file("gauge-ideals", cmd_gauge_ideals, "List gauge-invariant ideals as (H, S).")
    with_file("tails", cmd_tails, "List maximal tails.")
    graph = with_file("graph", cmd_graph, "Topological graph statistics.")
    graph.add_argument("--dot", metavar="PATH", help="Write Graphviz text; '-' for stdout.")
    quotient = with_file("quotient", cmd_quotient, "Print the quotient by a hereditary ideal.")
    quotient.add_argument("--top", required=True, help="Top of the ideal, e.g. '{a,b}'.")
    with_file("bprime", cmd_bprime, "Print the generalized system built from a relative one.")
    report = with_file("report", cmd_report, "Run every analysis.")
    report.add_argument("--json", action="store_true", help="Canonical JSON output.")

    gen = subparsers.add_parser("gen", help="Print a seeded random instance.")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--atoms", type=int, default=3)
    gen.add_argument("--labels", type=int, default=2)
    gen.add_argument("--density", type=float, default=0.5)
    gen.add_argument("--slack", type=float, default=0.0)
    gen.add_argument("--shrink", type=float, default=0.0)
    gen.set_defaults(func=cmd_gen)

    cross = subparsers.add_parser("crosscheck", help="Cross-check every route on a seeded corpus.")
    cross.add_argument("--seed", type=int, default=None, help="First seed.")
    cross.add_argument("--count", type=int, default=None)
    cross.add_argument("--workers", type=int, default=None)
    cross.add_argument("--digraphs", type=int, default=None, help="Random digraphs to import.")
    cross.add_argument("--progress", action="store_true")
    cross.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if os.path.exists(args.config):
        Config.load_from_json(args.config)
    load_dotenv(Config.get_env_path(), override=Config.get_env_is_override())
    setup_logging()
    try:
        return int(args.func(args))
    except (InputError, AnalysisError, ValueError) as e:
        print(str(e), file=sys.stderr)
        return EXIT_INPUT
    except CrossCheckMismatch as e:
        logger.error(str(e), extra={"color": Config.get_log_color_mismatch()})
        print(str(e), file=sys.stderr)
        return EXIT_MISMATCH
    except OSError as e:
        print(f"{type(e).__name__} {e}", file=sys.stderr)
        return EXIT_INPUT
