"""Command-line interface.

Thin client over the api layer: every subcommand parses its arguments,
calls one api function and prints either plain text (one labeled line per fact)
or JSON with --json.  Exit codes: 0 ok, 1 domain error (message on stderr),
2 argument parse error.
"""

import argparse
import json
import sys

from . import api
from .errors import NumericalSemigroupError

GEN_COMMANDS = ("info", "apery", "classify", "decompose", "over", "med",
                "free", "presentation", "betti", "factorize", "invariants")


def _int_list(text):
    parts = text.replace(",", " ").split()
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError("expected integers, got %r" % text)


def build_parser():
    top = argparse.ArgumentParser(prog="nsgps",
                                  description="numerical semigroup computations")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--limit", type=int, default=None,
                        help="resource cap for enumerations")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for interface compatibility; "
                             "computation is deterministic and sequential")
    gens = argparse.ArgumentParser(add_help=False)
    gens.add_argument("generators", nargs="*", type=int,
                      help="generators as trailing integers")
    gens.add_argument("--gens", type=_int_list, default=None,
                      help="generators as a comma-separated list")
    gens.add_argument("--input", default=None,
                      help="batch mode: file of newline-separated generator lists")

    sub = top.add_subparsers(dest="command", required=True)
    p = sub.add_parser("info", parents=[common, gens],
                       help="notable elements of the semigroup")
    p = sub.add_parser("apery", parents=[common, gens], help="Apery set")
    p.add_argument("n", type=int)
    sub.add_parser("classify", parents=[common, gens],
                   help="symmetry, irreducibility, MED, freeness")
    sub.add_parser("decompose", parents=[common, gens],
                   help="decomposition into irreducibles")
    sub.add_parser("over", parents=[common, gens], help="all oversemigroups")
    sub.add_parser("med", parents=[common, gens],
                   help="maximal embedding dimension closure")
    sub.add_parser("free", parents=[common, gens],
                   help="free / telescopic arrangements")
    sub.add_parser("presentation", parents=[common, gens],
                   help="minimal presentation")
    sub.add_parser("betti", parents=[common, gens], help="Betti elements")
    p = sub.add_parser("factorize", parents=[common, gens],
                       help="factorizations of an element")
    p.add_argument("element", type=int)
    p = sub.add_parser("invariants", parents=[common, gens],
                       help="factorization invariants")
    p.add_argument("--element", type=int, default=None)
    p = sub.add_parser("enumerate", parents=[common],
                       help="exhaustive enumerations")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--genus", type=int)
    g.add_argument("--frobenius", type=int)
    g.add_argument("--irreducible", type=int, metavar="F")
    g.add_argument("--free", type=int, metavar="F")
    g.add_argument("--delta", type=int, metavar="F")
    p.add_argument("--count", action="store_true", help="print only the count")
    p = sub.add_parser("curve", parents=[common],
                       help="plane branch characteristic sequences")
    p.add_argument("--from-r", dest="from_r", type=_int_list, required=True,
                   metavar="r0,r1,..")
    p.add_argument("--dual", action="store_true",
                   help="also compute the dual branch at infinity")
    return top


def _gen_lists(args):
    """Generator lists for a semigroup subcommand: positional, --gens, or
    one per line of --input."""
    if args.input:
        with open(args.input) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        return [_int_list(ln) for ln in lines]
    if args.gens is not None:
        return [args.gens]
    if args.generators:
        return [args.generators]
    raise NumericalSemigroupError("no generators given (use positional "
                                  "integers, --gens or --input)")


def _fmt_list(xs):
    return " ".join(str(x) for x in xs)


def _plain(command, doc, out):
    w = out.write
    if "generators" in doc:
        w("S = <%s>\n" % ", ".join(str(g) for g in doc["generators"]))
    if command == "info":
        w("Frobenius: %d\n" % doc["frobenius"])
        w("Conductor: %d\n" % doc["conductor"])
        w("Genus: %d\n" % doc["genus"])
        w("Gaps: %s\n" % _fmt_list(doc["gaps"]))
        w("Multiplicity: %d\n" % doc["multiplicity"])
        w("Embedding dimension: %d\n" % doc["embedding_dim"])
        w("Apery set: %s\n" % _fmt_list(doc["apery"]))
        w("Pseudo-Frobenius: %s\n" % _fmt_list(doc["pf"]))
        w("Type: %d\n" % doc["type"])
    elif command == "apery":
        w("Apery set wrt %d: %s\n" % (doc["n"], _fmt_list(doc["apery"])))
    elif command == "classify":
        for k, v in doc["classification"].items():
            w("%s: %s\n" % (k, v))
        w("pf: %s\n" % _fmt_list(doc["pf"]))
        w("special gaps: %s\n" % _fmt_list(doc["special_gaps"]))
    elif command == "decompose":
        for comp in doc["components"]:
            w("component: <%s>\n" % ", ".join(str(g) for g in comp["generators"]))
    elif command == "over":
        w("count: %d\n" % doc["count"])
        for gens in doc["oversemigroups"]:
            w("%s\n" % _fmt_list(gens))
    elif command == "med":
        w("med: %s\n" % doc["med"])
        w("closure: <%s>\n" % ", ".join(str(g) for g in doc["closure"]["generators"]))
    elif command == "free":
        w("telescopic: %s\n" % doc["telescopic"])
        w("free: %s\n" % doc["free"])
        for arr in doc.get("arrangements", []):
            w("arrangement: %s\n" % _fmt_list(arr))
    elif command == "presentation":
        w("betti: %s\n" % _fmt_list(doc["betti"]))
        for a, b in doc["presentation"]:
            w("%s = %s\n" % (tuple(a), tuple(b)))
        for s in doc["binomials"]:
            w("%s\n" % s)
    elif command == "betti":
        w("betti: %s\n" % _fmt_list(doc["betti"]))
    elif command == "factorize":
        for z in doc["factorizations"]:
            w("%s\n" % (tuple(z),))
        if "lengths" in doc:
            w("lengths: %s\n" % _fmt_list(doc["lengths"]))
    elif command == "invariants":
        for k, v in doc["invariants"].items():
            if isinstance(v, list):
                v = _fmt_list(v)
            w("%s: %s\n" % (k, v))
        w("betti: %s\n" % _fmt_list(doc["betti"]))
    elif command == "enumerate":
        if "delta_sequences" in doc:
            for s in doc["delta_sequences"]:
                w("%s\n" % _fmt_list(s))
        elif "semigroups" in doc:
            for gens in doc["semigroups"]:
                w("%s\n" % _fmt_list(gens))
        else:
            w("%d\n" % doc["count"])
    elif command == "curve":
        c = doc["curve"]
        w("r: %s\n" % _fmt_list(c["r"]))
        w("d: %s\n" % _fmt_list(c["d"]))
        w("e: %s\n" % _fmt_list(c["e"]))
        w("m: %s\n" % _fmt_list(c["m"]))
        w("conductor: %d\n" % c["conductor"])
        w("local branch: %s\n" % c["local_branch"])
        w("delta sequence: %s\n" % c["delta_sequence"])
        if "dual" in doc:
            w("dual r: %s\n" % _fmt_list(doc["dual"]["r"]))
            w("dual conductor: %d\n" % doc["dual"]["conductor"])
            w("conductor sum: %d\n" % doc["duality_sum"])


def _dispatch(args):
    """Result documents for one parsed command line."""
    cmd = args.command
    if cmd == "enumerate":
        if args.count and args.genus is not None:
            return [api.enumerate_semigroups(genus=args.genus, count_only=True)]
        doc = api.enumerate_semigroups(
            genus=args.genus, frobenius=args.frobenius,
            irreducible=args.irreducible, free_f=args.free, delta=args.delta,
            limit=args.limit)
        if args.count:
            doc = {k: v for k, v in doc.items() if k != "semigroups"}
        return [doc]
    if cmd == "curve":
        return [api.curve(args.from_r, dual=args.dual)]
    docs = []
    for gens in _gen_lists(args):
        S = api.semigroup(gens)
        if cmd == "info":
            docs.append(api.info(S))
        elif cmd == "apery":
            docs.append(api.apery(S, args.n))
        elif cmd == "classify":
            docs.append(api.classification(S))
        elif cmd == "decompose":
            docs.append(api.decompose(S))
        elif cmd == "over":
            docs.append(api.oversemigroups(S))
        elif cmd == "med":
            docs.append(api.med(S))
        elif cmd == "free":
            docs.append(api.free(S))
        elif cmd == "presentation":
            docs.append(api.presentation(S))
        elif cmd == "betti":
            docs.append(api.betti(S))
        elif cmd == "factorize":
            docs.append(api.factorize(S, args.element))
        elif cmd == "invariants":
            docs.append(api.invariant_report(S, args.element))
    return docs


def run(argv=None, out=None, err=None):
    """Parse argv, execute, print; returns the process exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        docs = _dispatch(args)
    except NumericalSemigroupError as exc:
        err.write("error: %s: %s\n" % (type(exc).__name__, exc))
        return 1
    except (ValueError, OSError) as exc:
        err.write("error: %s\n" % exc)
        return 1
    for doc in docs:
        if args.json:
            out.write(json.dumps(doc) + "\n")
        else:
            _plain(args.command, doc, out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
