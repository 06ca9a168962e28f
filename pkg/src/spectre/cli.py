"""Command-line front end.

    spectre recognize [FILE] [--values 3 4 7] [--format json]
    spectre mu FILE
    spectre adgraph FILE [--dot out.dot] [--cap N]
    spectre oracle alt-mu N | psl2-mu Q | atoms FILE

Input is newline-separated decimal integers or a JSON array, read from FILE,
from --values, or from stdin.  Exit codes: 0 success, 1 Empty, 2 bad input,
3 atom cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import arith
from .atomic import TooMany, atomic_divisors_incremental, build_ad_graph, size_cap_C
from .oracle import alt_mu_oracle, atoms_oracle, psl2_mu_oracle
from .recognize import RecognizeConfig, recognize
from .spectra import MinSpec

EXIT_OK, EXIT_EMPTY, EXIT_INPUT, EXIT_TOOMANY = 0, 1, 2, 3


class InputError(ValueError):
    pass


def parse_integers(text: str) -> list:
    """Newline-separated integers (blank lines and # comments allowed) or a
    JSON array of integers / decimal strings."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise InputError("line %d: invalid JSON: %s" % (e.lineno, e.msg)) from None
        out = []
        for i, x in enumerate(data):
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise InputError("entry %d: not an integer: %r" % (i + 1, x))
            out.append(_to_int(str(x), "entry %d" % (i + 1)))
        if not out:
            raise InputError("empty input")
        return out
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(_to_int(line, "line %d" % lineno))
    if not out:
        raise InputError("empty input")
    return out


def _to_int(tok: str, where: str) -> int:
    tok = tok.strip()
    if not tok.isdigit():
        raise InputError("%s: not a positive decimal integer: %r" % (where, tok))
    v = int(tok)
    if v < 1:
        raise InputError("%s: integers must be >= 1" % where)
    return v


def _read_input(args) -> list:
    if getattr(args, "values", None):
        return parse_integers("\n".join(args.values))
    path = getattr(args, "input", None)
    if path and path != "-":
        p = Path(path)
        if not p.exists():
            raise InputError("no such file: %s" % path)
        return parse_integers(p.read_text())
    return parse_integers(sys.stdin.read())


def _emit_list(values, fmt) -> str:
    if fmt == "json":
        return json.dumps([str(v) for v in values])
    return " ".join(str(v) for v in values)


def _format_outcome(outcome, fmt) -> str:
    if fmt == "json":
        return json.dumps(outcome.to_json(), indent=2)
    lines = [str(outcome.result) if outcome.result is not None else "Empty"]
    if outcome.twin is not None:
        lines.append("twin: %s" % outcome.twin)
    for d in outcome.trail:
        vals = " ".join("%s=%s" % (k, ",".join(v) if isinstance(v, list) else v)
                        for k, v in d.values)
        lines.append("  %s/%s: %s %s" % (d.branch, d.step, d.verdict, vals))
    return "\n".join(line.rstrip() for line in lines)


def cmd_recognize(args) -> int:
    M = _read_input(args)
    config = RecognizeConfig(data_dir=args.data_dir, cap=args.cap, rounds=args.rounds,
                             threads=args.threads)
    outcome = recognize(M, config)
    print(_format_outcome(outcome, args.format))
    return EXIT_EMPTY if outcome.is_empty else EXIT_OK


def cmd_mu(args) -> int:
    print(_emit_list(MinSpec(_read_input(args)), args.format))
    return EXIT_OK


def cmd_adgraph(args) -> int:
    mu = MinSpec(_read_input(args))
    cap = args.cap or (size_cap_C(mu.max) if mu.max >= 2 else 1)
    adg = build_ad_graph(mu, cap)
    if isinstance(adg, TooMany):
        print("too many atomic divisors: %d > cap %d (after element %d)"
              % (adg.count, adg.cap, adg.stage + 1), file=sys.stderr)
        return EXIT_TOOMANY
    if args.format == "json":
        text = json.dumps({"vertices": [str(v) for v in sorted(adg.vertices)],
                           "edges": [[str(u), str(w)] for u, w in
                                     sorted(tuple(sorted(e)) for e in adg.graph.edges())]})
        text += "\n"
    else:
        text = adg.to_dot()
    if args.dot:
        Path(args.dot).write_text(adg.to_dot())
    sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.which == "alt-mu":
        vals = alt_mu_oracle(args.arg)
    elif args.which == "psl2-mu":
        vals = psl2_mu_oracle(args.arg)
    else:
        mu = MinSpec(_read_input(args))
        cap = args.cap or 10 ** 6
        res = atomic_divisors_incremental(mu, cap)
        if isinstance(res, TooMany):
            print("too many atomic divisors: cap %d" % cap, file=sys.stderr)
            return EXIT_TOOMANY
        vals = atoms_oracle(mu).atoms if len(mu) <= 12 else res.atoms
    print(_emit_list(vals, args.format))
    return EXIT_OK


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--data-dir", default=None,
                   help="fixture directory (default: $SPECTRE_DATA_DIR or bundled data)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap", type=int, default=None, help="override the atom cap")
    p.add_argument("--rounds", type=int, default=None,
                   help="Miller-Rabin rounds above the deterministic range")
    return p


def _with_input(p):
    p.add_argument("input", nargs="?", help="input file, '-' or omitted for stdin")
    p.add_argument("--values", nargs="+", help="inline integers instead of a file")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="spectre", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("recognize", parents=[common], help="name the group with this spectrum")
    _with_input(p)
    p.set_defaults(func=cmd_recognize)
    p = sub.add_parser("mu", parents=[common], help="minimal spectrum (divisibility antichain)")
    _with_input(p)
    p.set_defaults(func=cmd_mu)
    p = sub.add_parser("adgraph", parents=[common], help="AD-graph as DOT")
    _with_input(p)
    p.add_argument("--dot", default=None, help="also write DOT to this path")
    p.set_defaults(func=cmd_adgraph)
    p = sub.add_parser("oracle", help="brute-force reference values")
    osub = p.add_subparsers(dest="which", required=True)
    o = osub.add_parser("alt-mu", parents=[common])
    o.add_argument("arg", type=int)
    o = osub.add_parser("psl2-mu", parents=[common])
    o.add_argument("arg", type=int)
    o = osub.add_parser("atoms", parents=[common])
    _with_input(o)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.rounds is not None:
        arith.PRIMALITY_ROUNDS = args.rounds
    try:
        return args.func(args)
    except InputError as e:
        print("input error: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
