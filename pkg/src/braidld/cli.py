"""Command line front end.

Exit codes: 0 ok, 1 negative answer, 2 parse error or bad arguments,
3 syllable cap exceeded, 4 a property or certificate check failed, 5 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .artin import DEFAULT_SYLLABLE_CAP, WordSizeError, apply, braid_eq
from .harness import PRNG_NAME, SUITE_NAMES, run_suite
from .ldalg import IrreflexivityCertificate, eval_term, star, verify_irreflexivity
from .textio import (
    ParseError,
    parse_braid_word,
    parse_free_word,
    parse_ld_term,
    print_braid_word,
    print_free_word,
    print_ld_term,
    read_fixture,
)

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_CAP, EXIT_CHECK, EXIT_USAGE = range(6)

CERTIFICATE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "IrreflexivityCertificate",
    "type": "object",
    "properties": {
        "alpha": {"type": "string"},
        "betas": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "result": {"type": "string"},
        "suffix": {"type": "string"},
        "sigma1_positive": {"type": "boolean"},
        "image_of_x1": {"type": "string"},
        "stripped": {"type": ["string", "null"]},
        "distinct_from_alpha": {"type": "boolean"},
        "passed": {"type": "boolean"},
    },
    "required": [
        "alpha",
        "betas",
        "result",
        "suffix",
        "sigma1_positive",
        "image_of_x1",
        "stripped",
        "distinct_from_alpha",
        "passed",
    ],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class CliConfig:
    seed: int = 0
    trials: int = 500
    max_index: int = 6
    max_len: int = 16
    syllable_cap: int = DEFAULT_SYLLABLE_CAP
    json: bool = False

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("--seed must fit in 64 unsigned bits")
        for name in ("trials", "max_index", "max_len", "syllable_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"--{name.replace('_', '-')} must be >= 1")
        if self.syllable_cap < self.max_len:
            raise ValueError("--cap must be at least --max-len")


def certificate_to_dict(cert: IrreflexivityCertificate) -> dict:
    return {
        "alpha": print_braid_word(cert.alpha),
        "betas": [print_braid_word(b) for b in cert.betas],
        "result": print_braid_word(cert.result),
        "suffix": print_braid_word(cert.suffix),
        "sigma1_positive": cert.sigma1_positive,
        "image_of_x1": print_free_word(cert.image_of_x1),
        "stripped": None if cert.stripped is None else print_free_word(cert.stripped),
        "distinct_from_alpha": cert.distinct_from_alpha,
        "passed": cert.passed,
    }


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def format_certificate(cert: IrreflexivityCertificate) -> str:
    d = certificate_to_dict(cert)
    rows = [
        ("alpha", d["alpha"]),
        ("betas", " | ".join(d["betas"])),
        ("result", d["result"]),
        ("suffix", d["suffix"]),
        ("suffix s1-positive", _yes(cert.sigma1_positive)),
        ("image of x1", d["image_of_x1"]),
        ("stripped (in W)", d["stripped"] if d["stripped"] is not None else "-"),
        ("distinct from alpha", _yes(cert.distinct_from_alpha)),
    ]
    lines = [f"{k + ':':<21}{v}" for k, v in rows]
    lines.append("PASS" if cert.passed else "FAIL")
    return "\n".join(lines)


def _emit(args, text: str, **fields) -> None:
    print(json.dumps(fields) if args.json else text)


def _cmd_act(args) -> int:
    b = parse_braid_word(args.braid)
    w = parse_free_word(args.word)
    image = print_free_word(apply(b, w, args.cap))
    _emit(args, image, braid=print_braid_word(b), word=print_free_word(w), image=image)
    return EXIT_OK


def _cmd_star(args) -> int:
    a, b = parse_braid_word(args.a), parse_braid_word(args.b)
    out = print_braid_word(star(a, b))
    _emit(args, out, a=print_braid_word(a), b=print_braid_word(b), star=out)
    return EXIT_OK


def _cmd_eq(args) -> int:
    a, b = parse_braid_word(args.a), parse_braid_word(args.b)
    same = braid_eq(a, b, args.cap)
    _emit(args, "equal" if same else "distinct", a=print_braid_word(a), b=print_braid_word(b), equal=same)
    return EXIT_OK if same else EXIT_NO


def _cmd_eval(args) -> int:
    t = parse_ld_term(args.term)
    base = parse_braid_word(args.base)
    out = print_braid_word(eval_term(t, base))
    _emit(args, out, term=print_ld_term(t), base=print_braid_word(base), braid=out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    alpha = parse_braid_word(args.alpha)
    betas = [parse_braid_word(b) for b in args.betas]
    if args.betas_file:
        betas += read_fixture(args.betas_file, "braid")
    if not betas:
        print("verify: at least one beta is required", file=sys.stderr)
        return EXIT_USAGE
    cert = verify_irreflexivity(alpha, betas, args.cap)
    if args.json:
        print(json.dumps(certificate_to_dict(cert)))
    else:
        print(format_certificate(cert))
    return EXIT_OK if cert.passed else EXIT_CHECK


def _cmd_prop(args) -> int:
    cfg = CliConfig(
        seed=args.seed,
        trials=args.trials,
        max_index=6 if args.max_index is None else args.max_index,
        max_len=16 if args.max_len is None else args.max_len,
        syllable_cap=args.cap,
        json=args.json,
    )
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports = [
        run_suite(n, cfg.seed, cfg.trials, args.max_index, args.max_len, cfg.syllable_cap, args.jobs)
        for n in names
    ]
    failed = sum(len(r.failures) for r in reports)
    overflowed = sum(len(r.overflows) for r in reports)
    if cfg.json:
        print(
            json.dumps(
                {
                    "seed": cfg.seed,
                    "prng": PRNG_NAME,
                    "trials": cfg.trials,
                    "suites": [r.as_dict() for r in reports],
                    "failures": failed,
                    "overflows": overflowed,
                }
            )
        )
    else:
        print(f"seed={cfg.seed} trials={cfg.trials} prng={PRNG_NAME}")
        for r in reports:
            print("\n".join(r.lines()))
        if failed or overflowed:
            extra = "".join(
                f" --{flag} {val}"
                for flag, val in (("max-index", args.max_index), ("max-len", args.max_len))
                if val is not None
            )
            print(f"reproduce: braidld prop {args.suite} --seed {cfg.seed} --trials {cfg.trials}{extra}")
    if failed:
        return EXIT_CHECK
    if overflowed:
        return EXIT_CAP
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_SYLLABLE_CAP, help="syllable cap for free words")
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    p = argparse.ArgumentParser(prog="braidld", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("act", parents=[common], help="apply a braid word to a free word")
    sp.add_argument("braid")
    sp.add_argument("word")
    sp.set_defaults(run=_cmd_act)

    sp = sub.add_parser("star", parents=[common], help="a * b = a s(b) s1 s(a^-1)")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(run=_cmd_star)

    sp = sub.add_parser("eq", parents=[common], help="equality of braids (exit 1 if distinct)")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(run=_cmd_eq)

    sp = sub.add_parser("eval", parents=[common], help="evaluate an LD term as a braid word")
    sp.add_argument("term")
    sp.add_argument("--base", default="1", help="braid word for the generator (default 1)")
    sp.set_defaults(run=_cmd_eval)

    sp = sub.add_parser("verify", parents=[common], help="irreflexivity certificate for alpha, betas")
    sp.add_argument("alpha")
    sp.add_argument("betas", nargs="*")
    sp.add_argument("--betas-file", help="fixture file with one beta per line")
    sp.set_defaults(run=_cmd_verify)

    sp = sub.add_parser("prop", parents=[common], help="run randomized property suites")
    sp.add_argument("suite", choices=SUITE_NAMES + ("all",), metavar="SUITE",
                    help="one of: " + ", ".join(SUITE_NAMES + ("all",)))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=500)
    sp.add_argument("--max-index", type=int, default=None, help="override the suite's index bound")
    sp.add_argument("--max-len", type=int, default=None, help="override the suite's length bound")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes (output is unchanged)")
    sp.set_defaults(run=_cmd_prop)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ParseError as exc:
        print(f"parse error: {exc}\n{exc.caret()}", file=sys.stderr)
        return EXIT_PARSE
    except WordSizeError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"usage: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
