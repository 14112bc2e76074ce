"""Command line front end.

Usage examples
--------------
  nzcgraph stats --q 5 --n 1
  nzcgraph verify degrees --q 3 --n 2
  nzcgraph verify basis-iso --q 3 --n 2 --seed 7
  nzcgraph export --q 2 --n 2 --format dot
  nzcgraph iso --q 2 --n 2 --n2 3
  nzcgraph aut --q 5 --n 1

Exit codes: 0 success, 1 theorem discrepancy, 2 invalid input, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graph as G
from . import invariants as inv
from . import morphisms as mor
from .errors import CapExceeded, NZCError, TheoremDiscrepancy
from .ffield import field_new
from .vspace import EXPLICIT_CAP, load_basis, random_bases

EXIT_OK, EXIT_DISCREPANCY, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3

THEOREMS = (
    "degrees",
    "diameter",
    "complete",
    "domination",
    "minimal-dominating",
    "independence",
    "lin-ind",
    "basis-iso",
    "iso-dim",
    "aut-form",
    "vertex-transitivity",
)


class Outcome:
    """Collects PASS/FAIL lines for one verify run."""

    def __init__(self, out):
        self.out = out
        self.failed = False

    def line(self, ok: bool, name: str, detail: str, witness=None):
        self.out.write(f"{'PASS' if ok else 'FAIL'} {name}: {detail}\n")
        if not ok:
            self.failed = True
            if witness is not None:
                self.out.write(f"  witness: {witness}\n")

    def note(self, name: str, detail: str):
        self.out.write(f"N/A  {name}: {detail}\n")


def _field(args):
    return field_new(args.q)


def _graph(args, f, n=None, basis_path=None):
    n = args.n if n is None else n
    basis = load_basis(basis_path, f, n) if basis_path else None
    return G.explicit_graph(f, n, basis, cap=args.cap_explicit)


def _labels(g, ids):
    return [G.vertex_label(g, v) for v in ids]


def verify_degrees(args, out: Outcome):
    g = _graph(args, _field(args), basis_path=args.basis)
    bad = inv.degree_mismatch(g)
    detail = f"q={g.q} n={g.n}: {g.vertex_count} vertices checked against (q^k-1)q^(n-k)-1"
    witness = None
    if bad is not None:
        witness = f"{G.vertex_label(g, bad)} has degree {g.degree(bad)}"
    out.line(bad is None, "degrees", detail, witness)
    edges, expected = g.edge_count(), G.edge_count_formula(g.q, g.n)
    out.line(edges == expected, "handshake", f"{edges} edges, formula {expected}")


def verify_diameter(args, out: Outcome):
    g = _graph(args, _field(args), basis_path=args.basis)
    d = inv.diameter(g)
    if g.n == 1:
        out.note("diameter", f"n=1, diameter={d} (claim diam=2 needs n>=2)")
        out.line(d <= 1, "diameter", f"n=1 graph has diameter {d} <= 1")
    else:
        out.line(d == 2, "diameter", f"q={g.q} n={g.n}: diameter {d}")


def verify_complete(args, out: Outcome):
    g = _graph(args, _field(args), basis_path=args.basis)
    c = inv.is_complete(g)
    out.line(c == (g.n == 1), "complete", f"q={g.q} n={g.n}: complete={c}")


def verify_domination(args, out: Outcome):
    g = _graph(args, _field(args), basis_path=args.basis)
    gamma, hub = inv.domination_number(g)
    ok = gamma == 1 and inv.dominates(g, hub) and not inv.empty_set_dominates(g)
    out.line(ok, "domination", f"gamma={gamma}, witness {_labels(g, hub)}", hub)


def verify_minimal_dominating(args, out: Outcome):
    g = _graph(args, _field(args), basis_path=args.basis)
    best = inv.max_minimal_dominating_set(g, args.cap_domination)
    out.line(
        len(best) == g.n,
        "minimal-dominating",
        f"maximum = {len(best)}, witness {_labels(g, best)}",
        best,
    )


def verify_independence(args, out: Outcome):
    f = _field(args)
    g = _graph(args, f, basis_path=args.basis)
    mis = inv.maximum_independent_set(g, args.cap_independence)
    closed = inv.independence_number(G.class_graph(f, args.n))
    out.line(
        len(mis) == g.n == closed,
        "independence",
        f"exact {len(mis)}, class graph {closed}, witness {_labels(g, mis)}",
        mis,
    )


def verify_lin_ind(args, out: Outcome):
    g = _graph(args, _field(args), basis_path=args.basis)
    sets = inv.enumerate_independent_sets(g, cap=args.cap_enumeration)
    bad = inv.verify_independence_implies_linear(g, args.cap_enumeration)
    out.line(bad is None, "lin-ind", f"{len(sets)} independent sets have full rank", bad)


def verify_basis_iso(args, out: Outcome):
    f = _field(args)
    if args.basis:
        bases = [load_basis(args.basis, f, args.n)]
    else:
        bases = random_bases(f, args.n, args.count, args.seed)
    count = f.q ** args.n - 1
    if count > args.cap_explicit:
        raise CapExceeded("explicit", args.cap_explicit, count)
    failures = [(b.rows, w) for b in bases if (w := mor.basis_change_iso_check(f, args.n, b))]
    out.line(
        not failures,
        "basis-iso",
        f"{len(bases)} bases (seed {args.seed}) induce isomorphisms",
        failures[0] if failures else None,
    )


def verify_iso_dim(args, out: Outcome):
    f = _field(args)
    g1 = _graph(args, f)
    others = [args.n2] if args.n2 else range(1, args.n + 2)
    for n2 in others:
        if f.q ** n2 - 1 > args.cap_explicit:
            continue
        g2 = _graph(args, f, n=n2)
        try:
            res = mor.are_isomorphic(g1, g2, args.cap_iso)
        except TheoremDiscrepancy as exc:
            out.line(False, "iso-dim", str(exc), exc.witness)
            continue
        how = "search agrees" if res.searched else "dimension test"
        out.line(res.isomorphic == (args.n == n2), "iso-dim",
                 f"n={args.n} vs n={n2}: isomorphic={res.isomorphic} ({how})")


def verify_aut_form(args, out: Outcome):
    g = _graph(args, _field(args), basis_path=args.basis)
    autos = mor.automorphisms(g, args.cap_aut)
    bad = next((a for a in autos if not mor.check_automorphism_form(a, g)), None)
    linear = sum(a.is_linear for a in autos)
    out.line(
        bad is None,
        "aut-form",
        f"{len(autos)} automorphisms checked ({linear} linear)",
        None if bad is None else bad.mapping,
    )


def verify_vertex_transitivity(args, out: Outcome):
    g = _graph(args, _field(args), basis_path=args.basis)
    transitive, evidence = mor.vertex_transitivity(g, args.cap_aut)
    out.line(transitive == (g.n == 1), "vertex-transitivity",
             f"transitive={transitive} {json.dumps(evidence)}")


VERIFIERS = {
    "degrees": verify_degrees,
    "diameter": verify_diameter,
    "complete": verify_complete,
    "domination": verify_domination,
    "minimal-dominating": verify_minimal_dominating,
    "independence": verify_independence,
    "lin-ind": verify_lin_ind,
    "basis-iso": verify_basis_iso,
    "iso-dim": verify_iso_dim,
    "aut-form": verify_aut_form,
    "vertex-transitivity": verify_vertex_transitivity,
}


def cmd_stats(args, stdout) -> int:
    f = _field(args)
    basis = load_basis(args.basis, f, args.n) if args.basis else None
    report = inv.build_report(
        f,
        args.n,
        basis,
        explicit_cap=args.cap_explicit,
        independence_cap=args.cap_independence,
        domination_cap=args.cap_domination,
        enumeration_cap=args.cap_enumeration,
    )
    stdout.write(report.to_json() + "\n")
    if not report.ok:
        for name, witness in report.failures.items():
            sys.stderr.write(f"discrepancy in {name}: witness {witness!r}\n")
        return EXIT_DISCREPANCY
    return EXIT_OK


def cmd_verify(args, stdout) -> int:
    out = Outcome(stdout)
    selected = THEOREMS if args.theorem == "all" else [args.theorem]
    for name in selected:
        VERIFIERS[name](args, out)
    return EXIT_DISCREPANCY if out.failed else EXIT_OK


def cmd_export(args, stdout) -> int:
    g = _graph(args, _field(args), basis_path=args.basis)
    if args.format == "dot":
        stdout.write(G.to_dot(g))
    else:
        stdout.write(json.dumps(G.to_json_dict(g)) + "\n")
    return EXIT_OK


def cmd_iso(args, stdout) -> int:
    q2 = args.q2 or args.q
    n2 = args.n2 or args.n
    f1, f2 = field_new(args.q), field_new(q2)
    g1 = _maybe_explicit(f1, args.n, args.basis, args.cap_explicit)
    g2 = _maybe_explicit(f2, n2, args.basis2, args.cap_explicit)
    res = mor.are_isomorphic(g1, g2, args.cap_iso)
    doc = {
        "q": args.q,
        "n1": args.n,
        "n2": n2,
        "isomorphic": res.isomorphic,
        "searched": res.searched,
        "witness": None if res.witness is None else list(res.witness),
    }
    stdout.write(json.dumps(doc) + "\n")
    return EXIT_OK


def _maybe_explicit(f, n, basis_path, cap):
    if f.q ** n - 1 <= cap:
        basis = load_basis(basis_path, f, n) if basis_path else None
        return G.explicit_graph(f, n, basis, cap=cap)
    return G.class_graph(f, n)


def cmd_aut(args, stdout) -> int:
    g = _graph(args, _field(args), basis_path=args.basis)
    autos = mor.automorphisms(g, args.cap_aut)
    stdout.write(json.dumps([a.to_dict() for a in autos]) + "\n")
    bad = any(not mor.check_automorphism_form(a, g) for a in autos)
    return EXIT_DISCREPANCY if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nzcgraph",
        description="Non-zero component graphs of GF(q)^n: build, inspect, verify, export.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, required=True, help="field order (prime power <= 256)")
    common.add_argument("--n", type=int, required=True, help="dimension")
    common.add_argument("--basis", help="basis file: one comma-separated row per line")
    common.add_argument("--format", choices=("dot", "json"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--count", type=int, default=20, help="random bases for basis-iso")
    common.add_argument("--cap-explicit", type=int, default=EXPLICIT_CAP)
    common.add_argument("--cap-aut", type=int, default=mor.AUTOMORPHISM_CAP)
    common.add_argument("--cap-iso", type=int, default=mor.ISO_SEARCH_CAP)
    common.add_argument("--cap-domination", type=int, default=inv.DOMINATION_CAP)
    common.add_argument("--cap-independence", type=int, default=inv.INDEPENDENCE_CAP)
    common.add_argument("--cap-enumeration", type=int, default=inv.ENUMERATION_CAP)
    common.add_argument("--q2", type=int)
    common.add_argument("--n2", type=int)
    common.add_argument("--basis2", help="basis file for the second graph of iso")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("stats", parents=[common], help="invariant report as JSON")
    verify = sub.add_parser("verify", parents=[common], help="check one theorem")
    verify.add_argument("theorem", choices=THEOREMS + ("all",))
    sub.add_parser("export", parents=[common], help="DOT or JSON graph on stdout")
    sub.add_parser("iso", parents=[common], help="isomorphism of two graphs")
    sub.add_parser("aut", parents=[common], help="list automorphisms as JSON")
    return parser


COMMANDS = {
    "stats": cmd_stats,
    "verify": cmd_verify,
    "export": cmd_export,
    "iso": cmd_iso,
    "aut": cmd_aut,
}


def _validate(args):
    if args.n < 1 or (args.n2 is not None and args.n2 < 1):
        raise ValueError("dimension must be at least 1")
    caps = [v for k, v in vars(args).items() if k.startswith("cap_")] + [args.count]
    if any(c < 1 for c in caps):
        raise ValueError("caps and counts must be positive")


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        _validate(args)
        return COMMANDS[args.command](args, stdout)
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except TheoremDiscrepancy as exc:
        sys.stderr.write(f"discrepancy: {exc}\n")
        return EXIT_DISCREPANCY
    except (NZCError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
