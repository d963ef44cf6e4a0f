"""
Command-line front end.

Every verb reads signed-integer words (``"1 -2 -1"``, ``"e"`` for the empty
word).  When a verb takes a braid and then words, the two groups are split by
a bare ``--``: ``braidfree act --n 2 "1" -- "1"``.  Missing payloads are read
from standard input, one item per line.

Exit status: 0 for success or an affirmative answer, 1 for a negative
decision (``NOT PLANAR``, a failed suite, ...), 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence, TextIO

from .braids import apply_braid, format_braid, parse_braid, recover_braid_word, validate_tuple
from .cyclic import (
    format_torsion,
    parse_torsion,
    surface_check,
    tw_apply_braid,
    tw_recover_braid,
    wada_action,
)
from .dehornoy import classify_sigma1, compare, sigma1_nonpositive_form
from .ends import act_on_end, compare_ends, end_is_squarefree, format_end, parse_end, thurston_compare
from .errors import DomainError, NotPlanar
from .freewords import format_word, parse_word
from .planarity import emit_diagram, is_planar, orbit_reduce, tuple_orbit_witness
from .suites import SUITES, run_suite

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    """Bad flags or a missing payload."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # one-line diagnostic, exit 2
        raise UsageError(message)


class Output:
    """Collects text lines or JSON records, one per result."""

    def __init__(self, as_json: bool, verb: str) -> None:
        self.as_json = as_json
        self.verb = verb
        self.lines: list[str] = []

    def emit(self, text: str, **record: object) -> None:
        if self.as_json:
            self.lines.append(json.dumps({"verb": self.verb, **record}, sort_keys=True))
        else:
            self.lines.append(text)

    def flush(self, stream: TextIO) -> None:
        for line in self.lines:
            stream.write(line + "\n")


# ----------------------------------------------------------------------
# Payload helpers


def _need(items: Sequence[str], count: int | None, what: str) -> list[str]:
    items = list(items)
    if count is not None and len(items) != count:
        raise UsageError(f"expected {count} {what}, got {len(items)}")
    if not items:
        raise UsageError(f"expected at least one {what}")
    return items


def _rank(args: argparse.Namespace) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 1:
        raise UsageError("--n must be positive")
    return args.n


def _modulus(args: argparse.Namespace) -> int:
    if args.m is None:
        raise UsageError("--m is required")
    if args.m < 2:
        raise UsageError("--m must be at least 2")
    return args.m


def _braid_rank(n: int) -> int:
    if n < 2:
        raise UsageError("braids need --n of at least 2")
    return n


# ----------------------------------------------------------------------
# Verbs.  Each handler receives (args, first payload group, words after --, out)
# and returns an exit status.

Handler = Callable[[argparse.Namespace, list[str], list[str], Output], int]


def do_act(args, head, tail, out):
    n = _braid_rank(_rank(args))
    (b_text,) = _need(head, 1, "braid")
    b = parse_braid(b_text, n)
    for text in _need(tail, None, "word after --"):
        image = apply_braid(parse_word(text, n), b)
        out.emit(format_word(image), braid=format_braid(b), word=text, image=format_word(image))
    return EXIT_OK


def do_recover(args, head, tail, out):
    n = _braid_rank(_rank(args))
    images = [parse_word(t, n) for t in _need(head + tail, n, "images")]
    b = recover_braid_word(validate_tuple(images))
    out.emit(format_braid(b), images=[format_word(w) for w in images], braid=format_braid(b))
    return EXIT_OK


def do_classify(args, head, tail, out):
    n = _braid_rank(_rank(args))
    (text,) = _need(head + tail, 1, "braid")
    cls = classify_sigma1(parse_braid(text, n))
    out.emit(cls.name, braid=text, classification=cls.name)
    return EXIT_OK


def do_compare(args, head, tail, out):
    n = _braid_rank(_rank(args))
    x, y = (parse_braid(t, n) for t in _need(head + tail, 2, "braids"))
    order = compare(x, y)
    out.emit(order.name, x=format_braid(x), y=format_braid(y), order=order.name)
    return EXIT_OK


def do_neg_form(args, head, tail, out):
    n = _braid_rank(_rank(args))
    (text,) = _need(head + tail, 1, "braid")
    form = sigma1_nonpositive_form(parse_braid(text, n))
    out.emit(format_braid(form), braid=text, form=format_braid(form))
    return EXIT_OK


def do_ends_compare(args, head, tail, out):
    n = _rank(args)
    e1, e2 = (parse_end(t, n) for t in _need(head + tail, 2, "ends"))
    order = compare_ends(e1, e2)
    out.emit(order.name, first=format_end(e1), second=format_end(e2), order=order.name)
    return EXIT_OK


def do_ends_act(args, head, tail, out):
    n = _braid_rank(_rank(args))
    (b_text,) = _need(head, 1, "braid")
    b = parse_braid(b_text, n)
    for text in _need(tail, None, "end after --"):
        image = act_on_end(parse_end(text, n), b)
        out.emit(format_end(image), braid=format_braid(b), end=text, image=format_end(image))
    return EXIT_OK


def do_ends_squarefree(args, head, tail, out):
    n = _rank(args)
    status = EXIT_OK
    for text in _need(head + tail, None, "end"):
        ok = end_is_squarefree(parse_end(text, n))
        out.emit("SQUAREFREE" if ok else "NOT SQUAREFREE", end=text, squarefree=ok)
        status = max(status, EXIT_OK if ok else EXIT_NO)
    return status


def do_ends_thurston(args, head, tail, out):
    n = _braid_rank(_rank(args))
    x, y = (parse_braid(t, n) for t in _need(head + tail, 2, "braids"))
    order = thurston_compare(x, y)
    out.emit(order.name, x=format_braid(x), y=format_braid(y), order=order.name)
    return EXIT_OK


def do_cm_act(args, head, tail, out):
    n, m = _braid_rank(_rank(args)), _modulus(args)
    (b_text,) = _need(head, 1, "braid")
    b = parse_braid(b_text, n)
    for text in _need(tail, None, "torsion word after --"):
        image = tw_apply_braid(parse_torsion(text, m, n), b)
        out.emit(format_torsion(image), braid=format_braid(b), word=text, image=format_torsion(image))
    return EXIT_OK


def do_cm_recover(args, head, tail, out):
    n, m = _braid_rank(_rank(args)), _modulus(args)
    images = [parse_torsion(t, m, n) for t in _need(head + tail, n, "images")]
    b = tw_recover_braid(images)
    out.emit(format_braid(b), images=[format_torsion(w) for w in images], braid=format_braid(b))
    return EXIT_OK


def do_wada(args, head, tail, out):
    n = _rank(args)
    variant = args.variant if args.variant is not None else 1
    if variant not in (1, 2, 3, 4):
        raise UsageError("--variant must be 1, 2, 3 or 4")
    m = args.m if args.m is not None else 2
    strands = n if variant == 1 else n + 1
    (b_text,) = _need(head, 1, "braid")
    b = parse_braid(b_text, _braid_rank(strands))
    for text in _need(tail, None, "word after --"):
        image = wada_action(parse_word(text, n), b, variant, m)
        out.emit(format_word(image), variant=variant, braid=format_braid(b), word=text, image=format_word(image))
    return EXIT_OK


def do_surface_check(args, head, tail, out):
    if head or tail:
        raise UsageError("surface-check takes no payload")
    if args.g is None or args.g < 1:
        raise UsageError("--g (a positive genus) is required")
    report = surface_check(args.g)
    for check in report.checks:
        out.emit(f"{'PASS' if check.ok else 'FAIL'} {check.name}", check=check.name, ok=check.ok)
    return EXIT_OK if report.ok else EXIT_NO


def do_planar(args, head, tail, out):
    n = _rank(args)
    status = EXIT_OK
    for text in _need(head + tail, None, "word"):
        emb = is_planar(parse_word(text, n))
        if emb is None:
            out.emit("NOT PLANAR", word=text, planar=False)
            status = EXIT_NO
        else:
            perm = " ".join(str(p) for p in emb.perm)
            out.emit(f"PLANAR {perm}", word=text, planar=True, perm=list(emb.perm), points=[list(p) for p in emb.points])
    return status


def do_diagram(args, head, tail, out):
    n = _rank(args)
    if not args.out:
        raise UsageError("diagram needs --out FILE")
    (text,) = _need(head + tail, 1, "word")
    emb = is_planar(parse_word(text, n))
    if emb is None:
        out.emit("NOT PLANAR", word=text, planar=False)
        return EXIT_NO
    Path(args.out).write_text(emit_diagram(emb))
    out.emit(f"wrote {args.out}", word=text, planar=True, file=args.out, perm=list(emb.perm))
    return EXIT_OK


def do_orbit(args, head, tail, out):
    n = _rank(args)
    status = EXIT_OK
    for text in _need(head + tail, None, "word"):
        try:
            k, phi = orbit_reduce(parse_word(text, n))
        except NotPlanar:
            out.emit("NOT PLANAR", word=text, planar=False)
            status = EXIT_NO
            continue
        out.emit(f"{k} | {format_braid(phi)}", word=text, k=k, witness=format_braid(phi))
    return status


def do_orbit_tuple(args, head, tail, out):
    n = _rank(args)
    words = [parse_word(t, n) for t in _need(head + tail, None, "word")]
    phi = tuple_orbit_witness(words)
    texts = [format_word(w) for w in words]
    if phi is None:
        out.emit("NOT IN ORBIT", words=texts, witness=None)
        return EXIT_NO
    out.emit(format_braid(phi), words=texts, witness=format_braid(phi))
    return EXIT_OK


def do_verify(args, head, tail, out):
    if len(head) != 1 or tail:
        raise UsageError("verify takes exactly one suite name")
    name = head[0]
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    report = run_suite(name, seed=args.seed, trials=args.trials, max_len=args.max_len)
    for check in report.checks:
        out.emit(f"{'PASS' if check.ok else 'FAIL'} {check.name}", suite=name, check=check.name, ok=check.ok)
    out.emit("OK" if report.ok else "FAILED", suite=name, ok=report.ok, seed=args.seed, trials=args.trials)
    return EXIT_OK if report.ok else EXIT_NO


# ----------------------------------------------------------------------
# Argument parsing


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n", type=int, help="rank of the free group / number of strands")
    p.add_argument("--m", type=int, help="torsion order for cm verbs and the first basis-change variant")
    p.add_argument("--variant", type=int, help="free-basis variant 1..4")
    p.add_argument("--g", type=int, help="genus for surface-check")
    p.add_argument("--out", help="output file for diagram")
    p.add_argument("--json", action="store_true", help="emit one JSON record per result")
    p.add_argument("--seed", type=int, default=0, help="seed for verify suites")
    p.add_argument("--trials", type=int, default=200, help="trials for verify suites")
    p.add_argument("--max-len", type=int, default=10, help="maximum random braid length for verify suites")
    p.add_argument("payload", nargs="*", help="words, braids or ends")
    return p


VERBS: dict[str, Handler] = {
    "act": do_act,
    "recover": do_recover,
    "classify": do_classify,
    "compare": do_compare,
    "neg-form": do_neg_form,
    "wada": do_wada,
    "surface-check": do_surface_check,
    "planar": do_planar,
    "diagram": do_diagram,
    "orbit": do_orbit,
    "orbit-tuple": do_orbit_tuple,
    "verify": do_verify,
}

GROUPS: dict[str, dict[str, Handler]] = {
    "ends": {
        "compare": do_ends_compare,
        "act": do_ends_act,
        "squarefree": do_ends_squarefree,
        "thurston-compare": do_ends_thurston,
    },
    "cm": {"act": do_cm_act, "recover": do_cm_recover},
}

# Verbs whose payload naturally splits as "braid -- items".
_SPLIT = {"act", "wada", "ends act", "cm act"}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidfree", description="Braids acting on free groups.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    common = _common()
    for verb in VERBS:
        sub.add_parser(verb, parents=[common])
    for group, verbs in GROUPS.items():
        gp = sub.add_parser(group)
        gsub = gp.add_subparsers(dest="action", required=True, parser_class=_Parser)
        for action in verbs:
            gsub.add_parser(action, parents=[common])
    return parser


def _stdin_items(stdin: TextIO) -> list[str]:
    if stdin is None or stdin.isatty():
        return []
    return [line.strip() for line in stdin if line.strip()]


def run(argv: Sequence[str], stdout: TextIO | None = None, stdin: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stdin = stdin if stdin is not None else sys.stdin
    argv = list(argv)
    if "--" in argv:
        cut = argv.index("--")
        front, tail = argv[:cut], argv[cut + 1 :]
    else:
        front, tail = argv, []
    try:
        args = build_parser().parse_args(front)
        verb = args.verb if args.verb not in GROUPS else f"{args.verb} {args.action}"
        handler = VERBS.get(args.verb) or GROUPS[args.verb][args.action]
        head = list(args.payload)
        if verb in _SPLIT:
            if not tail and "--" not in argv:
                tail = _stdin_items(stdin)
        elif not head and not tail and verb not in ("surface-check",):
            head = _stdin_items(stdin)
        out = Output(args.json, verb)
        status = handler(args, head, tail, out)
    except (UsageError, DomainError) as exc:
        print(f"braidfree: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.flush(stdout)
    return status


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
