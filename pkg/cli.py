#!/usr/bin/env python3
"""
Command-line front end: encode, decode, normalize, verify, table, stats, convert.

Exit status: 0 ok, 1 verification failure, 2 input/parse/bounds error,
3 domain error (odd permutation where Alt_n is required).

Examples:
    python cli.py encode --group sym --n 4 "[2;4;1;3]"
    python cli.py decode --group alt --n 4 "u4^1"
    python cli.py verify --all --nmax 8
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import config
from alt_ogs import decode_alt, encode_alt, iter_alt_forms, normalize_alt, parse_alt_form
from errors import BudgetError, OGSError
from perm_core import (
    Permutation,
    descent_set,
    format_cycles,
    format_one_line,
    format_point_set,
    inversion_length,
    major_index,
    order,
    parity,
    parse_permutation,
    parse_word,
    support,
)
from sn_ogs import decode_sn, encode_sn, iter_sn_forms, normalize_sn, parse_sn_form
from verify_oracle import DEFAULT_SUITES, SUITES, SuiteOptions, VerificationReport, run_suites

logger = logging.getLogger(__name__)

VERBS = ("encode", "decode", "normalize", "verify", "table", "stats", "convert")
GROUPS = ("sym", "alt")
_NEEDS_GROUP = ("encode", "decode", "table")
_NEEDS_TEXT = ("encode", "decode", "normalize", "stats", "convert")
_MIN_DEGREE = {"sym": 2, "alt": 3}


@dataclass(frozen=True)
class Command:
    verb: str
    group: Optional[str] = None
    degree: Optional[int] = None
    text: Optional[str] = None
    options: Dict[str, object] = field(default_factory=dict)


def validate_command(data: dict) -> Tuple[bool, List[str]]:
    """
    Validates a command request (CLI arguments or API JSON body):
    1. verb is known.
    2. group is sym/alt where the verb needs one.
    3. degree is an integer, >= 2 for sym and >= 3 for alt.
    4. input text is present for verbs that read it.
    """
    errors = []

    verb = data.get("verb")
    if verb not in VERBS:
        errors.append(f"Invalid verb. Must be one of: {', '.join(VERBS)}.")
        return False, errors

    group = data.get("group")
    if verb in _NEEDS_GROUP and group is None:
        errors.append("A group (sym or alt) is required.")
    if group is not None and group not in GROUPS:
        errors.append(f"Invalid group. Must be one of: {', '.join(GROUPS)}.")
        group = None

    if verb != "verify":
        degree = data.get("degree")
        if degree is None:
            errors.append("A degree n is required.")
        elif not isinstance(degree, int) or isinstance(degree, bool):
            errors.append("Degree must be an integer.")
        else:
            minimum = _MIN_DEGREE.get(group or "sym", 2) if verb not in ("stats", "convert") else 1
            if degree < minimum:
                errors.append(f"Degree must be at least {minimum} for this command.")

    if verb in _NEEDS_TEXT:
        text = data.get("text")
        if not isinstance(text, str) or not text.strip():
            errors.append("Input text is required.")

    return not errors, errors


# --- Command implementations (shared with the HTTP API) ---


def cmd_encode(group: str, n: int, text: str) -> str:
    p = parse_permutation(text, n)
    form = encode_alt(p) if group == "alt" else encode_sn(p)
    return str(form)


def decode_form(group: str, n: int, text: str) -> Permutation:
    if group == "alt":
        return decode_alt(parse_alt_form(text, n))
    return decode_sn(parse_sn_form(text, n))


def cmd_decode(group: str, n: int, text: str) -> str:
    p = decode_form(group, n, text)
    return f"{format_one_line(p)} = {format_cycles(p)}"


def cmd_normalize(group: Optional[str], n: int, text: str) -> str:
    w = parse_word(text, n)
    form = normalize_alt(w) if group == "alt" else normalize_sn(w)
    return str(form)


def cmd_table(group: str, n: int, force: bool = False) -> str:
    if n > config.TABLE_BUDGET and not force:
        raise BudgetError(f"Degree {n} exceeds the table budget {config.TABLE_BUDGET}; use --force.")
    if group == "alt":
        forms, decode = iter_alt_forms(n), decode_alt
    else:
        forms, decode = iter_sn_forms(n), decode_sn
    lines = ["tuple\tone_line\tcycles\tmaj"]
    for c in forms:
        p = decode(c)
        exponents = "(" + ",".join(str(e) for e in c.exponents) + ")"
        lines.append(f"{exponents}\t{format_one_line(p)}\t{format_cycles(p)}\t{major_index(p)}")
    return "\n".join(lines)


def permutation_stats(p: Permutation) -> Dict[str, object]:
    return {
        "descents": sorted(descent_set(p)),
        "maj": major_index(p),
        "inversions": inversion_length(p),
        "parity": parity(p).value,
        "order": order(p),
        "support": sorted(support(p)),
    }


def cmd_stats(n: int, text: str) -> str:
    stats = permutation_stats(parse_permutation(text, n))
    stats["descents"] = format_point_set(stats["descents"])
    stats["support"] = format_point_set(stats["support"])
    return "\n".join(f"{key}\t{value}" for key, value in stats.items())


def cmd_convert(n: int, text: str) -> str:
    p = parse_permutation(text, n)
    if text.strip().startswith("["):
        return format_cycles(p)
    return format_one_line(p)


def cmd_verify(suites: Sequence[str], options: SuiteOptions, timing: bool = True) -> Tuple[str, int]:
    reports: List[VerificationReport] = run_suites(suites, options)
    output = "\n".join(report.to_tsv(timing) for report in reports)
    return output, 0 if all(report.ok for report in reports) else 1


# --- Entry point ---


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cli.py",
        description="OGS canonical forms for S_n and Alt_n.",
    )
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("text", nargs="?", help="permutation, form or word; read from stdin when omitted")
    parser.add_argument("--group", choices=GROUPS)
    parser.add_argument("--n", type=int, dest="degree")
    parser.add_argument("--nmax", type=int, help="largest degree for verify suites")
    parser.add_argument("--seed", type=int, default=config.SEED)
    parser.add_argument("--suite", action="append", choices=sorted(SUITES), help="repeatable")
    parser.add_argument("--all", action="store_true", help="run every default verify suite")
    parser.add_argument("--force", action="store_true", help="allow degrees above the configured budgets")
    parser.add_argument("--trials", type=int, default=config.FUZZ_TRIALS)
    parser.add_argument("--max-len", type=int, default=config.FUZZ_MAX_LEN)
    parser.add_argument("--workers", type=int, default=config.WORKERS)
    parser.add_argument("--no-timing", action="store_true", help="print 0 in the elapsed_ms column")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def run(command: Command) -> Tuple[str, int]:
    verb, group, n, text = command.verb, command.group, command.degree, command.text
    if verb == "encode":
        return cmd_encode(group, n, text), 0
    if verb == "decode":
        return cmd_decode(group, n, text), 0
    if verb == "normalize":
        return cmd_normalize(group, n, text), 0
    if verb == "table":
        return cmd_table(group, n, bool(command.options.get("force"))), 0
    if verb == "stats":
        return cmd_stats(n, text), 0
    if verb == "convert":
        return cmd_convert(n, text), 0
    opts = command.options
    suites = DEFAULT_SUITES if opts.get("all") or not opts.get("suites") else opts["suites"]
    options = SuiteOptions(
        n_max=opts.get("nmax"),
        group=group,
        seed=opts.get("seed", config.SEED),
        trials=opts.get("trials", config.FUZZ_TRIALS),
        max_len=opts.get("max_len", config.FUZZ_MAX_LEN),
        force=bool(opts.get("force")),
        workers=opts.get("workers", config.WORKERS),
    )
    return cmd_verify(suites, options, timing=not opts.get("no_timing"))


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    _configure_logging(args.verbose)

    text = args.text
    if text is None and args.verb in _NEEDS_TEXT:
        text = sys.stdin.read()

    data = {"verb": args.verb, "group": args.group, "degree": args.degree, "text": text}
    is_valid, errors = validate_command(data)
    if not is_valid:
        for message in errors:
            print(f"error: {message}", file=sys.stderr)
        return 2

    command = Command(
        verb=args.verb,
        group=args.group,
        degree=args.degree,
        text=text,
        options={
            "nmax": args.nmax,
            "seed": args.seed,
            "suites": args.suite,
            "all": args.all,
            "force": args.force,
            "trials": args.trials,
            "max_len": args.max_len,
            "workers": args.workers,
            "no_timing": args.no_timing,
        },
    )
    try:
        output, status = run(command)
    except OGSError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    print(output)
    return status


if __name__ == "__main__":
    if not os.getenv("PYTEST_CURRENT_TEST"):
        logger.debug("running %s", " ".join(sys.argv))
    sys.exit(main())
