"""Command-line front end: ``hyperconf <command> ...``.

Files use 1-based vertex ids. With ``--quiet`` nothing is printed and the exit
status carries the answer (0 for YES, 1 for NO, 2 for an error); otherwise a
successful run exits 0.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import generators, guards
from .conformality import is_conformal
from .dual_conformality import PATHS, Certificate, CertificateKind, Verdict, decide
from .dualize import dual
from .dual_conformality import dual_cooccurrence
from .hypergraph import Hypergraph
from .io import ParseError, emit_graph, emit_hg, read_graph, read_hg
from .transversal import is_minimal_transversal, is_subtransversal, is_transversal
from .uct import clique_hypergraph, k_uct

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _fmt(vs) -> str:
    return "{" + " ".join(str(v + 1) for v in vs) + "}"


def _parse_set(text: str) -> tuple[int, ...]:
    parts = text.replace(",", " ").split()
    try:
        ids = [int(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}") from exc
    if any(v < 1 for v in ids):
        raise argparse.ArgumentTypeError("vertex ids are 1-based")
    return tuple(v - 1 for v in ids)


def _load_hg(path: str) -> Hypergraph:
    if path == "-":
        from .io import parse_hg
        return parse_hg(sys.stdin.read())
    return read_hg(path)


class _Out:
    def __init__(self, quiet: bool):
        self.quiet = quiet

    def __call__(self, *lines):
        if not self.quiet:
            for line in lines:
                print(line)


def _answer(args, yes: bool) -> int:
    if args.quiet:
        return EXIT_YES if yes else EXIT_NO
    return 0


# -- commands ---------------------------------------------------------------

def cmd_conformal(args, out) -> int:
    h = _load_hg(args.file)
    ok, w = is_conformal(h)
    if ok:
        out("YES: conformal")
    elif w.uncovered is not None:
        out(f"NO: vertex {w.uncovered + 1} lies in no hyperedge")
    else:
        i, j, k = w.triple
        out(f"NO: hyperedges {_fmt(h.edges[i])} {_fmt(h.edges[j])} {_fmt(h.edges[k])}",
            f"pairwise intersections cover {_fmt(w.pair_union)}, which lies in no hyperedge")
    return _answer(args, ok)


def cmd_dual(args, out) -> int:
    h = _load_hg(args.file)
    d = dual(h, force=args.force)
    out(emit_hg(d).rstrip("\n"))
    return 0


def cmd_dual_cooccurrence(args, out) -> int:
    h = _load_hg(args.file)
    out(emit_graph(dual_cooccurrence(h, parallel=args.parallel)).rstrip("\n"))
    return 0


def _missed_edge(h: Hypergraph, c: Certificate):
    cm = 0
    for v in c.clique:
        cm |= 1 << v
    for e, em in zip(h.edges, h.edge_masks):
        if not em & cm:
            return e
    return None


def describe_certificate(h: Hypergraph, c: Certificate) -> str:
    if c.kind is CertificateKind.NON_TRANSVERSAL_CLIQUE:
        e = _missed_edge(h, c)
        return f"maximal clique {_fmt(c.clique)} misses hyperedge {_fmt(e)}"
    return (f"clique {_fmt(c.clique)} with vertex {c.vertex + 1}: every hyperedge "
            f"through {c.vertex + 1} meets the clique at least twice")


def verdict_record(v: Verdict, elapsed: float) -> dict:
    cert = None
    if v.certificate is not None:
        c = v.certificate
        cert = {
            "kind": c.kind.value,
            "clique": [x + 1 for x in c.clique],
            "vertex": None if c.vertex is None else c.vertex + 1,
        }
    return {
        "verdict": "YES" if v.dually_conformal else "NO",
        "path": v.path,
        "certificate": cert,
        "sperner_reduced": v.sperner_reduced,
        "timings": {"total_s": round(elapsed, 6)},
    }


def _run_decider(args, out, h: Hypergraph) -> int:
    t0 = time.perf_counter()
    if args.path == "auto":
        v = decide(h, parallel=args.parallel)
    else:
        v = PATHS[args.path](h, parallel=args.parallel)
    elapsed = time.perf_counter() - t0
    if args.json:
        out(json.dumps(verdict_record(v, elapsed), sort_keys=True))
    elif v.dually_conformal:
        out(f"YES: dually conformal (path {v.path})")
    else:
        out(f"NO: not dually conformal (path {v.path})",
            "certificate: " + describe_certificate(h, v.certificate))
    if v.sperner_reduced and not args.json:
        out("note: non-minimal hyperedges were dropped before deciding")
    return _answer(args, v.dually_conformal)


def cmd_dual_conformal(args, out) -> int:
    return _run_decider(args, out, _load_hg(args.file))


def cmd_cdc(args, out) -> int:
    g = read_graph(args.file)
    return _run_decider(args, out, clique_hypergraph(g))


def cmd_subtransversal(args, out) -> int:
    h = _load_hg(args.file)
    ok, w = is_subtransversal(h, args.S, force=args.force)
    if ok:
        sel = " ".join(f"{v + 1}:{_fmt(h.edges[i])}" for v, i in sorted(w.selection.items()))
        out(f"YES: {_fmt(w.s)} is a subtransversal", f"witness edges {sel}",
            f"uncovered union {_fmt(w.uncovered_union)}")
    else:
        out(f"NO: {_fmt(sorted(set(args.S)))} is not a subtransversal")
    return _answer(args, ok)


def cmd_transversal(args, out) -> int:
    h = _load_hg(args.file)
    test = is_minimal_transversal if args.minimal else is_transversal
    ok = test(h, args.S)
    what = "minimal transversal" if args.minimal else "transversal"
    out(f"{'YES' if ok else 'NO'}: {_fmt(sorted(set(args.S)))} "
        f"{'is' if ok else 'is not'} a {what}")
    return _answer(args, ok)


def cmd_uct(args, out) -> int:
    g = read_graph(args.file)
    ok, path = k_uct(g, args.k)
    out(f"{'YES' if ok else 'NO'}: upper clique transversal number "
        f"{'>=' if ok else '<'} {args.k} (path {path})")
    return _answer(args, ok)


def cmd_gen(args, out) -> int:
    spec = args.spec
    name = spec[0]
    try:
        if name in generators.FIXTURES and len(spec) == 1:
            h = generators.FIXTURES[name]()
        elif name == "gm" and len(spec) == 4:
            h = generators.gurvich_makino(*map(int, spec[1:]))
        elif name == "random" and len(spec) == 5:
            h = generators.random_hypergraph(*map(int, spec[1:]))
        else:
            raise ValueError(f"unknown generator {' '.join(spec)!r}; expected "
                             "c5 | ex33 | ex34 | ex35 | gm d k l | random n m k seed")
    except ValueError as exc:
        if "invalid literal" in str(exc):
            raise ValueError("generator parameters must be integers") from exc
        raise
    out(emit_hg(h, comment=" ".join(spec)).rstrip("\n"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", "-q", action="store_true",
                        help="print nothing; exit 0 for YES, 1 for NO, 2 on error")
    common.add_argument("--force", action="store_true", help="ignore size guards")
    common.add_argument("--parallel", action="store_true",
                        help="use worker threads where the result is order-independent")

    p = argparse.ArgumentParser(prog="hyperconf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help, file_help="hypergraph file ('-' for stdin)"):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("file", help=file_help)
        sp.set_defaults(func=fn)
        return sp

    add("conformal", cmd_conformal, "Gilmore conformality test")
    add("dual", cmd_dual, "print the dual hypergraph")
    add("dual-cooccurrence", cmd_dual_cooccurrence, "print the co-occurrence graph of the dual")
    for name, fn, fh in (("dual-conformal", cmd_dual_conformal, "hypergraph file ('-' for stdin)"),
                         ("cdc", cmd_cdc, "graph file; its clique hypergraph is tested")):
        sp = add(name, fn, "is the dual conformal?" if name == "dual-conformal"
                 else "is the clique hypergraph dually conformal?", fh)
        sp.add_argument("--path", choices=["auto", *PATHS], default="auto")
        sp.add_argument("--json", action="store_true", help="print a JSON record")
    sp = add("subtransversal", cmd_subtransversal, "is S inside some minimal transversal?")
    sp.add_argument("-S", type=_parse_set, required=True, help="1-based ids, e.g. 1,2")
    sp = add("transversal", cmd_transversal, "is S a (minimal) transversal?")
    sp.add_argument("-S", type=_parse_set, required=True, help="1-based ids, e.g. 1,2")
    sp.add_argument("--minimal", action="store_true")
    sp = add("uct", cmd_uct, "is the upper clique transversal number at least k?", "graph file")
    sp.add_argument("-k", type=int, required=True)
    sp = sub.add_parser("gen", parents=[common], help="emit a generated hypergraph")
    sp.add_argument("spec", nargs="+",
                    help="c5 | ex33 | ex34 | ex35 | gm d k l | random n m k seed")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    out = _Out(args.quiet)
    try:
        return args.func(args, out)
    except (ParseError, guards.GuardExceeded, ValueError, IndexError, OSError) as exc:
        if not args.quiet:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
