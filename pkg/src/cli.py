"""
Command-line front end.

Usage: python main.py <command> [options]

Commands: check, solve, enumerate, corpus (verify | list), probe.
Results are printed to stdout as JSON, or as plain text with --human.

Exit status: 0 holds / found / all pass, 1 violated / none / some fail,
2 usage or input error, 3 resource cap exceeded.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from config import Config

from .axioms import AxiomId, check
from .corpus import corpus_entries, corpus_entry, verify_corpus
from .election import ElectionClass, Outcome, TemporalElection
from .election_reader import ElectionReader
from .errors import ElectionError, PreconditionError, ResourceLimitError, ResourceLimits, RuleError
from .oracle import GeneratorParams, exists_satisfying, outcome_count, probe_implication
from .rules import RULES, RuleConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def build_parser(config=Config) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--human", action="store_true", help="plain-text output instead of JSON")
    common.add_argument("--max-work", type=int, default=config.MAX_WORK, help="work estimate cap")
    common.add_argument("--threads", type=int, default=config.THREADS, help="enumeration workers")

    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Proportionality checks and rules for temporal approval elections",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("check", parents=[common], help="decide an axiom on an outcome")
    p.add_argument("--election", required=True, type=Path)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--outcome", type=Path, help="outcome document")
    source.add_argument("--picks", help="comma-separated candidate names, one per round")
    p.add_argument("--axiom", required=True)
    p.add_argument("--witness", action=argparse.BooleanOptionalAction, default=True,
                   help="include the violation witness")

    p = commands.add_parser("solve", parents=[common], help="run a voting rule")
    p.add_argument("--election", required=True, type=Path)
    p.add_argument("--rule", required=True, choices=sorted(RULES))
    p.add_argument("--epsilon", help="lsPAV threshold as NUM/DEN")
    p.add_argument("--trace", action="store_true", help="include the rule trace")

    p = commands.add_parser("enumerate", parents=[common], help="search the outcome space")
    p.add_argument("--election", required=True, type=Path)
    p.add_argument("--axiom", required=True)
    p.add_argument("--restrict", action=argparse.BooleanOptionalAction, default=True,
                   help="only approved candidates per round")

    p = commands.add_parser("corpus", parents=[common], help="fixture corpus")
    p.add_argument("action", choices=["verify", "list"])
    p.add_argument("entry", nargs="?", help="verify only this entry")
    p.add_argument("--corpus-dir", type=Path, default=Path(config.CORPUS_DIR))

    p = commands.add_parser("probe", parents=[common], help="fuzz an implication A -> B")
    p.add_argument("--axiom", required=True, action="append", help="give twice: premise then conclusion")
    p.add_argument("--seed", type=int, default=config.SEED)
    p.add_argument("--trials", type=int, default=config.TRIALS)
    p.add_argument("--n", type=int, default=config.DEFAULT_GENERATOR["n"])
    p.add_argument("--ell", type=int, default=config.DEFAULT_GENERATOR["ell"])
    p.add_argument("--m", type=int, default=config.DEFAULT_GENERATOR["m"])
    p.add_argument("--density", type=float, default=config.DEFAULT_GENERATOR["density"])
    p.add_argument("--class", dest="election_class", choices=[c.value for c in ElectionClass])
    p.add_argument("--exact-sizes", action="store_true")
    p.add_argument("--inject", action="append", default=[], metavar="ENTRY",
                   help="corpus entry whose election and outcome are tried first")
    p.add_argument("--corpus-dir", type=Path, default=Path(config.CORPUS_DIR))
    return parser


def _emit(doc: dict, human_lines: Optional[List[str]], human: bool) -> None:
    if human and human_lines is not None:
        sys.stdout.write("\n".join(human_lines) + "\n")
    else:
        sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def _limits(args, config) -> ResourceLimits:
    return config.limits(args.max_work)


def _load_outcome(args, election: TemporalElection) -> Outcome:
    if args.outcome is not None:
        return ElectionReader.read_outcome_file(args.outcome, election)
    names = [name.strip() for name in args.picks.split(",")]
    if len(names) != election.ell:
        raise ElectionError(f"--picks names {len(names)} candidates, election has {election.ell} rounds")
    return election.outcome_from_names(names)


# -- commands -------------------------------------------------------------


def cmd_check(args, config) -> int:
    election = ElectionReader.read_file(args.election)
    outcome = _load_outcome(args, election)
    report = check(election, outcome, args.axiom, limits=_limits(args, config))
    doc = report.to_dict(election, include_witness=args.witness)

    lines = [f"{report.axiom.value}: {'holds' if report.holds else 'violated'}"]
    if args.witness and report.witness is not None:
        for key, value in report.witness.to_dict(election).items():
            lines.append(f"  {key}: {value}")
    _emit(doc, lines, args.human)
    return EXIT_OK if report.holds else EXIT_FAIL


def cmd_solve(args, config) -> int:
    election = ElectionReader.read_file(args.election)
    rule_type = RULES[args.rule]
    if args.rule == "lspav":
        epsilon = Fraction(args.epsilon) if args.epsilon else None
        rule = rule_type(RuleConfig(epsilon=epsilon))
    elif args.rule == "gcr":
        rule = rule_type(limits=_limits(args, config))
    else:
        rule = rule_type()
    outcome, trace = rule.solve(election)

    doc = {"rule": rule.get_rule_name(), "outcome": ElectionReader.outcome_document(outcome, election)}
    if args.trace:
        doc["trace"] = trace.to_dict(election)
    lines = [f"{rule.get_rule_name()}: {', '.join(outcome.names(election))}"]
    _emit(doc, lines, args.human)
    return EXIT_OK


def cmd_enumerate(args, config) -> int:
    election = ElectionReader.read_file(args.election)
    axiom = AxiomId.parse(args.axiom)
    found = exists_satisfying(
        election, axiom, restrict=args.restrict, threads=args.threads, limits=_limits(args, config),
    )
    doc = {
        "axiom": axiom.value,
        "restricted": args.restrict,
        "outcomes": outcome_count(election, args.restrict),
        "found": ElectionReader.outcome_document(found, election) if found is not None else None,
    }
    lines = [f"{axiom.value}: " + (", ".join(found.names(election)) if found is not None else "none")]
    _emit(doc, lines, args.human)
    return EXIT_OK if found is not None else EXIT_FAIL


def cmd_corpus(args, config) -> int:
    if args.action == "list":
        entries = corpus_entries(args.corpus_dir)
        doc = {"entries": [entry.name for entry in entries]}
        _emit(doc, [entry.name for entry in entries], args.human)
        return EXIT_OK

    report = verify_corpus(args.entry, args.corpus_dir, args.threads, _limits(args, config))
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.entry}  {r.expectation.axiom.value}"
        f"  ({r.expectation.mode.value}, expected {'holds' if r.expectation.holds else 'fails'})"
        for r in report.results
    ]
    _emit(report.to_dict(), lines, args.human)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_probe(args, config) -> int:
    if len(args.axiom) != 2:
        raise ValueError("probe needs --axiom twice: premise then conclusion")
    params = GeneratorParams(
        n=args.n,
        ell=args.ell,
        m=args.m,
        density=args.density,
        class_constraint=ElectionClass.parse(args.election_class) if args.election_class else None,
        seed=args.seed,
        exact_sizes=args.exact_sizes,
    )
    inject = []
    for name in args.inject:
        entry = corpus_entry(name, args.corpus_dir)
        if entry.outcome is None:
            raise ValueError(f"corpus entry {name} has no designated outcome")
        inject.append((entry.election, entry.outcome))

    report = probe_implication(args.axiom[0], args.axiom[1], params, args.trials, inject, _limits(args, config))
    a, b = report.arrow
    lines = [
        f"{a.value} -> {b.value}: "
        + ("no counterexample" if report.counterexample is None else "counterexample found")
        + f" ({report.trials} trials, seed {report.seed}, arrow expected: {report.expected})"
    ]
    _emit(report.to_dict(), lines, args.human)
    return EXIT_OK if report.counterexample is None else EXIT_FAIL


COMMANDS = {
    "check": cmd_check,
    "solve": cmd_solve,
    "enumerate": cmd_enumerate,
    "corpus": cmd_corpus,
    "probe": cmd_probe,
}


def run(argv: Optional[Sequence[str]] = None, config=None) -> int:
    """
    Parses argv and runs one command.

    Returns:
        The exit status
    """
    config = config or Config
    try:
        if hasattr(config, "validate"):
            config.validate()
    except ValueError as e:
        sys.stderr.write(f"Configuration error: {e}\n")
        return EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL, logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        return COMMANDS[args.command](args, config)
    except ResourceLimitError as e:
        sys.stderr.write(f"Resource limit: {e}\n")
        return EXIT_RESOURCE
    except RuleError as e:
        sys.stderr.write(f"Rule error: {e}\n")
        return EXIT_FAIL
    except PreconditionError as e:
        sys.stderr.write(f"Precondition violated: {e}\n")
        return EXIT_USAGE
    except (ValueError, KeyError, FileNotFoundError) as e:
        sys.stderr.write(f"Error: {e}\n")
        return EXIT_USAGE
