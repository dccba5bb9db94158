"""Command-line front end: analyze groups, verify the catalog, emit JSON/DOT.

Commands:
  analyze SPEC     class table, spectrum, graphs and bound check for one group
  verify           run the full verification suite over the catalog
  catalog          list the catalog entries
  spec-check SPEC  parse a group spec and print its canonical form

Group specs use a small language: ``C7``, ``D(4)``, ``Dic(2)``, ``S5``,
``A7``, ``PSL2(9)``, ``SL2(5)``, ``Sz8``, ``SD(7,3,2)``,
``ESD(2,2;0,1,1,1;3)``, joined by ``x`` for (left-associative) direct
products, e.g. ``S3 x C2``. Whitespace is ignored.

Exit codes: 0 success / verification passed, 1 verification failure,
2 usage, parse or internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import __version__, construct
from .catalog import build_catalog
from .classes import decompose
from .errors import ClassGraphsError, SpecSyntaxError
from .graphs import ClassGraph, order_class_graph, prime_graph, size_class_graph
from .perm import DEFAULT_CAP, Group
from .verify import (
    EntryResult,
    SuiteResult,
    check_prime_bound,
    expected_discrepancies,
    run_full_suite,
)

GRAPH_KINDS = ("order", "size", "prime")


# ---------------------------------------------------------------------------
# the group-spec mini-language


@dataclass(frozen=True)
class _Atom:
    kind: str
    args: tuple

    def canonical(self) -> str:
        if self.kind in ("C", "S", "A"):
            return f"{self.kind}{self.args[0]}"
        if self.kind == "Sz8":
            return "Sz8"
        if self.kind == "ESD":
            p, d, rows, k = self.args
            flat = ",".join(str(x) for row in rows for x in row)
            return f"ESD({p},{d};{flat};{k})"
        return f"{self.kind}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class GroupSpec:
    """A parsed group spec: a list of atoms joined by direct product."""

    factors: tuple[_Atom, ...]

    def canonical(self) -> str:
        return " x ".join(a.canonical() for a in self.factors)

    def build(self, cap: int = DEFAULT_CAP) -> Group:
        group = _build_atom(self.factors[0], cap)
        for atom in self.factors[1:]:
            group = construct.direct_product(group, _build_atom(atom, cap), cap=cap)
        return group


def _build_atom(atom: _Atom, cap: int) -> Group:
    kind, args = atom.kind, atom.args
    if kind == "C":
        return construct.cyclic(args[0], cap=cap)
    if kind == "D":
        return construct.dihedral(args[0])
    if kind == "Dic":
        return construct.dicyclic(args[0])
    if kind == "S":
        return construct.symmetric(args[0], cap=cap)
    if kind == "A":
        return construct.alternating(args[0], cap=cap)
    if kind == "PSL2":
        return construct.psl2(args[0], cap=cap)
    if kind == "SL2":
        return construct.sl2(args[0], cap=cap)
    if kind == "Sz8":
        return construct.suzuki8(cap=cap)
    if kind == "SD":
        return construct.semidirect_cyclic(*args, cap=cap)
    if kind == "ESD":
        p, d, rows, k = args
        return construct.elementary_semidirect(p, d, rows, k, cap=cap)
    raise AssertionError(f"unhandled atom kind {kind!r}")


_TOKEN = re.compile(r"PSL2|SL2|Sz8|SD|ESD|Dic|[DSAC]|x|\d+|[(),;]")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise SpecSyntaxError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((match.group(), pos))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.at = 0

    def peek(self) -> str | None:
        return self.tokens[self.at][0] if self.at < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.at][1] if self.at < len(self.tokens) else len(self.text)

    def take(self, expected: str | None = None) -> str:
        if self.at >= len(self.tokens):
            raise SpecSyntaxError(
                f"unexpected end of spec, expected {expected or 'a token'}",
                len(self.text),
            )
        token, pos = self.tokens[self.at]
        if expected is not None and token != expected:
            raise SpecSyntaxError(f"expected {expected!r}, found {token!r}", pos)
        self.at += 1
        return token

    def int_(self) -> int:
        token = self.take()
        if not token.isdigit():
            raise SpecSyntaxError(f"expected an integer, found {token!r}",
                                  self.tokens[self.at - 1][1])
        return int(token)

    def int_list(self, stop: str) -> list[int]:
        out = [self.int_()]
        while self.peek() == ",":
            self.take(",")
            out.append(self.int_())
        self.take(stop)
        return out

    def atom(self) -> _Atom:
        token = self.take()
        if token in ("C", "S", "A"):
            n = self.int_()
            return _Atom(token, (n,))
        if token in ("D", "Dic", "PSL2", "SL2"):
            self.take("(")
            n = self.int_()
            self.take(")")
            return _Atom(token, (n,))
        if token == "Sz8":
            return _Atom("Sz8", ())
        if token == "SD":
            self.take("(")
            m = self.int_()
            self.take(",")
            k = self.int_()
            self.take(",")
            g = self.int_()
            self.take(")")
            return _Atom("SD", (m, k, g))
        if token == "ESD":
            self.take("(")
            p = self.int_()
            self.take(",")
            d = self.int_()
            self.take(";")
            flat = self.int_list(";")
            if len(flat) != d * d:
                raise SpecSyntaxError(
                    f"matrix needs {d * d} entries, found {len(flat)}", self.pos()
                )
            rows = tuple(tuple(flat[r * d + c] for c in range(d)) for r in range(d))
            k = self.int_()
            self.take(")")
            return _Atom("ESD", (p, d, rows, k))
        raise SpecSyntaxError(f"unknown group name {token!r}",
                              self.tokens[self.at - 1][1])

    def parse(self) -> GroupSpec:
        factors = [self.atom()]
        while self.peek() == "x":
            self.take("x")
            factors.append(self.atom())
        if self.at != len(self.tokens):
            raise SpecSyntaxError(f"trailing input {self.peek()!r}", self.pos())
        return GroupSpec(tuple(factors))


def parse_spec(text: str) -> GroupSpec:
    """Parse a group spec; raises SpecSyntaxError with a position on failure."""
    if not text.strip():
        raise SpecSyntaxError("empty spec", 0)
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# DOT output


def graph_to_dot(graph: ClassGraph, title: str) -> str:
    """Deterministic DOT for one graph; vertex order = decomposition order."""
    lines = [f'graph "{title}" {{']
    for i, label in enumerate(graph.labels):
        lines.append(f'  v{i} [label="{label}"];')
    for i, j in graph.edges():
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _graphs_for(group: Group, dec) -> dict[str, ClassGraph]:
    return {
        "order": order_class_graph(dec),
        "size": size_class_graph(dec),
        "prime": prime_graph(group),
    }


# ---------------------------------------------------------------------------
# JSON report


def _entry_json(result: EntryResult) -> dict:
    out: dict = {
        "id": result.entry_id,
        "clause": result.clause,
        "constructible": result.constructible,
    }
    if not result.constructible:
        out["reason"] = result.reason
        return out
    if result.error is not None:
        out["error"] = result.error
        return out
    assert result.bound_report is not None and result.group_fingerprint is not None
    order, sizes, orders = result.group_fingerprint
    out.update(
        {
            "order": result.order,
            "center": result.center_size,
            "class_count": result.class_count,
            "pn": {
                "satisfied": result.bound_report.satisfied,
                "per_prime_counts": {
                    str(p): c for p, c in result.bound_report.per_prime_counts.items()
                },
            },
            "lemma1_consistent": result.equivalence.consistent
            if result.equivalence
            else None,
            "fingerprint": {
                "order": order,
                "class_sizes": list(sizes),
                "spectrum": list(orders),
            },
            "span_class": result.span_class,
            "graphs": {
                kind: {
                    "vertices": s.vertices,
                    "edges": s.edges,
                    "max_clique": s.max_clique,
                }
                for kind, s in sorted(result.graph_summaries.items())
            },
        }
    )
    if result.bound_report.witness is not None:
        out["pn"]["witness"] = {
            "prime": result.bound_report.witness.prime,
            "class_indices": list(result.bound_report.witness.class_indices),
        }
    return out


def suite_to_json(suite: SuiteResult) -> dict:
    """Stable JSON document for a verification run (no volatile timing)."""
    report = suite.report
    return {
        "tool_version": __version__,
        "n": report.n,
        "entries": [_entry_json(r) for r in report.entries],
        "discrepancies": list(report.discrepancies),
        "checks": {
            "suzuki_class_profile": suite.suzuki_profile_ok,
            "suzuki_counts": {str(k): v for k, v in suite.suzuki_counts.items()},
            "psl2_power_classes": {str(q): ok for q, ok in suite.power_checks.items()},
            "inheritance": [
                {
                    "id": pair.entry_id,
                    "subgroup": pair.subgroup,
                    "group_satisfied": pair.result.group_report.satisfied,
                    "quotient_satisfied": pair.result.quotient_report.satisfied,
                    "implication_holds": pair.result.implication_holds,
                }
                for pair in suite.inheritance
            ],
        },
        "summary": {
            "entries": len(report.entries),
            "satisfied": sum(
                1
                for r in report.entries
                if r.bound_report is not None and r.bound_report.satisfied
            ),
            "violated": sum(
                1
                for r in report.entries
                if r.bound_report is not None and not r.bound_report.satisfied
            ),
            "discrepancies": len(report.discrepancies),
            "passed": suite.passed,
            "discrepancies_expected": suite.discrepancies_expected,
        },
    }


# ---------------------------------------------------------------------------
# commands


def _cmd_analyze(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    group = spec.build(cap=args.cap)
    dec = decompose(group)
    print(f"group: {spec.canonical()}")
    print(f"order: {group.order}")
    print(f"degree: {group.degree}")
    print(f"center: {dec.center_size}")
    orders = sorted({c.element_order for c in dec.classes})
    print(f"spectrum: {' '.join(str(o) for o in orders)}")
    print(f"classes ({dec.class_count}):")
    print("  idx  order  size  centralizer  representative")
    for i, cls in enumerate(dec.classes):
        rep = cls.representative.cycle_string()
        print(
            f"  {i:<3}  {cls.element_order:<5}  {cls.size:<4}  "
            f"{group.order // cls.size:<11}  {rep}"
        )
    if args.n is not None:
        report = check_prime_bound(dec, args.n)
        verdict = "satisfied" if report.satisfied else "violated"
        counts = ", ".join(f"{p}:{c}" for p, c in report.per_prime_counts.items())
        print(f"bound check (n={args.n}): {verdict}  [per-prime counts: {counts or '-'}]")
        if report.witness is not None:
            idx = " ".join(str(i) for i in report.witness.class_indices)
            print(f"  witness: prime {report.witness.prime}, classes {idx}")
    kinds = list(GRAPH_KINDS) if "all" in args.dot else args.dot
    if kinds:
        graphs = _graphs_for(group, dec)
        for kind in kinds:
            print()
            print(graph_to_dot(graphs[kind], f"{kind}:{spec.canonical()}"), end="")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    suite = run_full_suite(n=args.n, cap=args.cap, jobs=args.jobs)
    report = suite.report
    for result in report.entries:
        if not result.constructible:
            print(f"{result.entry_id:<8} ({result.clause}): unconstructible")
            continue
        if result.error is not None:
            print(f"{result.entry_id:<8} ({result.clause}): ERROR {result.error}")
            continue
        assert result.bound_report is not None
        verdict = "satisfies" if result.bound_report.satisfied else "violates"
        consistent = result.equivalence.consistent if result.equivalence else False
        print(
            f"{result.entry_id:<8} ({result.clause}): order {result.order:<6} "
            f"classes {result.class_count:<3} {verdict} bound  "
            f"clique-consistent={'yes' if consistent else 'NO'}"
        )
    print(f"suzuki class profile: {'ok' if suite.suzuki_profile_ok else 'FAILED'}")
    power = " ".join(f"q={q}:{'ok' if ok else 'FAIL'}" for q, ok in suite.power_checks.items())
    print(f"power-class checks: {power}")
    for pair in suite.inheritance:
        status = "ok" if pair.result.implication_holds else "FAILED"
        print(f"inheritance {pair.entry_id}/{pair.subgroup}: {status}")
    print("discrepancies:")
    for text in report.discrepancies:
        print(f"  - {text}")
    if args.json is not None:
        path = Path(args.json)
        path.write_text(json.dumps(suite_to_json(suite), indent=2, sort_keys=True) + "\n")
        print(f"wrote {path}")
    if args.dot is not None:
        out_dir = Path(args.dot)
        out_dir.mkdir(parents=True, exist_ok=True)
        count = 0
        for entry in build_catalog(args.cap):
            if not entry.constructible:
                continue
            group = entry.group(args.cap)
            dec = decompose(group)
            for kind, graph in _graphs_for(group, dec).items():
                path = out_dir / f"{entry.id}.{kind}.dot"
                path.write_text(graph_to_dot(graph, f"{kind}:{entry.id}"))
                count += 1
        print(f"wrote {count} dot files to {out_dir}")
    ok = suite.passed and suite.discrepancies_expected
    if suite.passed and not suite.discrepancies_expected:
        print("unexpected discrepancy list:")
        for text in expected_discrepancies(args.cap):
            print(f"  expected: {text}")
    print(f"result: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _cmd_catalog(args: argparse.Namespace) -> int:
    for entry in build_catalog(args.cap):
        order = str(entry.expected_order) if entry.expected_order else "-"
        spec = entry.spec_text or "-"
        status = "" if entry.constructible else "  [unconstructible]"
        print(f"{entry.id:<8} ({entry.clause:<14}) order {order:<6} "
              f"spec {spec:<22} {entry.description}{status}")
    return 0


def _cmd_spec_check(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    print(spec.canonical())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="classgraphs",
        description="Finite-group class structure, class graphs and catalog verification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze a single group")
    analyze.add_argument("spec", help="group spec, e.g. 'S3 x C2' or 'PSL2(9)'")
    analyze.add_argument("--n", type=int, default=None,
                         help="run the bound check at this n (>= 2)")
    analyze.add_argument("--dot", action="append", default=[],
                         choices=[*GRAPH_KINDS, "all"],
                         help="print this graph in DOT (repeatable)")
    analyze.add_argument("--cap", type=int, default=DEFAULT_CAP,
                         help="element-count safety limit")
    analyze.set_defaults(func=_cmd_analyze)

    verify = sub.add_parser("verify", help="run the catalog verification suite")
    verify.add_argument("--n", type=int, default=4, help="bound to verify (default 4)")
    verify.add_argument("--json", type=str, default=None,
                        help="write the JSON report to this path")
    verify.add_argument("--dot", type=str, default=None,
                        help="write per-entry DOT files into this directory")
    verify.add_argument("--jobs", type=int, default=1,
                        help="verify entries in parallel (same output)")
    verify.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="element-count safety limit")
    verify.set_defaults(func=_cmd_verify)

    catalog = sub.add_parser("catalog", help="list the catalog entries")
    catalog.add_argument("--cap", type=int, default=DEFAULT_CAP)
    catalog.set_defaults(func=_cmd_catalog)

    spec_check = sub.add_parser("spec-check", help="parse a spec and print it")
    spec_check.add_argument("spec")
    spec_check.set_defaults(func=_cmd_spec_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 2:
        print(f"error: --n must be >= 2, got {args.n}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ClassGraphsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # exit codes are pinned to 0/1/2
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
