"""Command-line front end: ``polychern {eval,table,expand,triangles,chamber,verify}``.

Exit codes: 0 success, 1 verification failure, 2 non-generic or malformed
lengths, 3 non-transversal product, 4 bad monomial or degree.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import checks
from .algebra import Ring, format_cocycle, format_term
from .classes import (
    MonomialSpec,
    chern_monomial,
    chern_monomial_cocycle,
    chern_table,
    euler_power_cocycle,
    euler_power_top,
    monomial_from_reps,
    parse_monomial,
    top_monomials,
)
from .errors import BadDegree, FreshIndexExhausted, NonGeneric, NonTransversal
from .lengths import (
    LengthVector,
    chamber_signature,
    chern_nonvanishing,
    format_rational,
    is_generic,
    parse_lengths,
    polygon_closes,
    resolve_lengths,
)
from .oracle import list_triangles

SCHEMA = "polychern/v1"

EXIT_OK, EXIT_VERIFY, EXIT_LENGTHS, EXIT_TRANSVERSAL, EXIT_MONOMIAL = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _lengths(text: str) -> tuple[str, LengthVector]:
    try:
        S = parse_lengths(text)
        return str(S), resolve_lengths(S)
    except (NonGeneric, ValueError) as exc:
        raise CliError(EXIT_LENGTHS, str(exc)) from None


def _monomial(text: str, ring: Ring) -> MonomialSpec:
    try:
        return parse_monomial(text, ring)
    except ValueError as exc:
        raise CliError(EXIT_MONOMIAL, f"bad monomial {text!r}: {exc}") from None


def _reps(text: str) -> list[tuple[int, int]]:
    pairs = []
    for tok in text.split(","):
        i, sep, j = tok.partition("=")
        if not sep:
            raise CliError(EXIT_MONOMIAL, f"bad --reps entry {tok!r}; expected i=j")
        pairs.append((int(i), int(j)))
    return pairs


def _realized(L: LengthVector) -> list[str]:
    return [format_rational(v) for v in L.values]


def _emit(doc: dict, fmt: str, md: str, tsv: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=False)
    return md if fmt == "md" else tsv


def _md_table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(x) for x in row) + " |" for row in rows]
    return "\n".join(lines)


def _tsv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    return "\n".join("\t".join(str(x) for x in r) for r in [header, *rows])


def _value(L: LengthVector, m: MonomialSpec) -> int:
    if m.ring is Ring.Z2:
        if m.total != L.n - 3:
            raise BadDegree(f"Euler power {m.total} is not the top degree {L.n - 3}")
        return euler_power_top(L)
    return chern_monomial(L, m)


def cmd_eval(args) -> str:
    ring = Ring.parse(args.ring)
    given, L = _lengths(args.lengths)
    m = _monomial(args.monomial, ring)
    value = _value(L, m)
    doc = {"schema": SCHEMA, "command": "eval", "lengths": given, "realized": _realized(L),
           "ring": ring.value, "monomial": str(m), "value": value}
    md = _md_table(["lengths", "monomial", "ring", "value"], [[given, str(m), ring.value, value]])
    return _emit(doc, args.format or "tsv", md, str(value))


def cmd_table(args) -> str:
    given, L = _lengths(args.lengths)
    fmt = args.format or "md"
    if args.all:
        rows = [(str(m), chern_monomial(L, m)) for m in top_monomials(L.n)]
        doc = {"schema": SCHEMA, "command": "table", "lengths": given, "realized": _realized(L),
               "monomials": [{"monomial": m, "value": v} for m, v in rows]}
        return _emit(doc, fmt, _md_table(["monomial", "value"], rows), _tsv(["monomial", "value"], rows))
    if L.n != 5:
        raise CliError(EXIT_MONOMIAL, f"the pairwise table is top degree only for n = 5 (got {L.n}); use --all")
    table = chern_table(L)
    labels = [f"Ch({i})" for i in range(1, 6)]
    rows = [[labels[i], *table[i]] for i in range(5)]
    doc = {"schema": SCHEMA, "command": "table", "lengths": given, "realized": _realized(L),
           "labels": labels, "rows": table}
    return _emit(doc, fmt, _md_table(["", *labels], rows), _tsv(["", *labels], rows))


def cmd_expand(args) -> str:
    ring = Ring.parse(args.ring)
    given, L = _lengths(args.lengths)
    m = _monomial(args.monomial, ring)
    if m.total > L.n - 3:
        raise BadDegree(f"degree {m.total} exceeds top degree {L.n - 3}")
    if args.reps:
        pairs = _reps(args.reps)
        if ring is Ring.Z:
            pairs = _expand_reps(m, pairs)
        elif len(pairs) != m.total:
            raise CliError(EXIT_MONOMIAL, f"--reps gives {len(pairs)} Euler factors, monomial needs {m.total}")
        c = monomial_from_reps(L, pairs, ring)
    elif ring is Ring.Z2:
        c = euler_power_cocycle(L, m.total)
    else:
        c = chern_monomial_cocycle(L, m)
    text = format_cocycle(c)
    doc = {"schema": SCHEMA, "command": "expand", "lengths": given, "realized": _realized(L),
           "ring": ring.value, "monomial": str(m), "cocycle": text,
           "terms": [{"term": format_term(t), "coeff": k} for t, k in c.terms.items()]}
    rows = [(format_term(t), k) for t, k in c.terms.items()]
    return _emit(doc, args.format or "text", _md_table(["term", "coeff"], rows), text)


def _expand_reps(m: MonomialSpec, pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """One partner per class copy; a class given fewer partners reuses its last one."""
    given: dict[int, list[int]] = {}
    for i, j in pairs:
        given.setdefault(i, []).append(j)
    out = []
    for i, d in m.exponents:
        if i not in given:
            raise CliError(EXIT_MONOMIAL, f"--reps has no partner for class {i}")
        js = given[i]
        out += [(i, js[min(c, len(js) - 1)]) for c in range(d)]
    return out


def cmd_triangles(args) -> str:
    ring = Ring.parse(args.ring)
    given, L = _lengths(args.lengths)
    m = _monomial(args.monomial, ring)
    configs = list_triangles(L, m)
    value = sum(s for _, s in configs)
    if ring is Ring.Z2:
        value %= 2
    records = [cfg.to_record(s) for cfg, s in configs]
    doc = {"schema": SCHEMA, "command": "triangles", "lengths": given, "realized": _realized(L),
           "ring": ring.value, "monomial": str(m), "value": value, "triangles": records}

    def show(g):
        return "(" + " ".join([str(i) for i in g["I"]] + [f"{j}'" for j in g["J"]]) + ")"

    rows = [(" ".join(show(g) for g in r["groups"]), " ".join(r["sides"]), r["sign"]) for r in records]
    header = ["groups", "sides", "sign"]
    return _emit(doc, args.format or "json", _md_table(header, rows), _tsv(header, rows))


def cmd_chamber(args) -> str:
    given, L = _lengths(args.lengths)
    sig = chamber_signature(L)
    long_sets = [list(S) for S, s in sig.items() if s > 0]
    nonempty = polygon_closes(L.values)
    vanishing = {}
    if L.n >= 4:
        vanishing = {str(i): chern_nonvanishing(L, i).value for i in range(1, L.n + 1)}
    doc = {"schema": SCHEMA, "command": "chamber", "lengths": given, "realized": _realized(L),
           "generic": is_generic(L), "nonempty": nonempty,
           "signature": [{"subset": list(S), "sign": s} for S, s in sig.items()],
           "long_subsets": long_sets, "chern": vanishing}
    rows = [(" ".join(map(str, S)), "+" if s > 0 else "-") for S, s in sig.items()]
    header = ["subset containing 1", "sign"]
    summary = [f"lengths: {given}", f"realized: {', '.join(_realized(L))}",
               f"moduli space nonempty: {nonempty}"]
    summary += [f"Ch({i}): {v}" for i, v in vanishing.items()]
    md = "\n".join(summary) + "\n\n" + _md_table(header, rows)
    return _emit(doc, args.format or "md", md, _tsv(header, rows))


def cmd_verify(args) -> tuple[str, bool]:
    L = None
    given = None
    if args.lengths:
        given, L = _lengths(args.lengths)
    results = checks.run_all(args.trials, args.seed, args.nmax, L)
    ok = all(r.ok for r in results)
    doc = {"schema": SCHEMA, "command": "verify", "lengths": given,
           "realized": _realized(L) if L else None, "trials": args.trials, "seed": args.seed,
           "nmax": args.nmax, "ok": ok, "properties": [r.as_dict() for r in results]}
    rows = [("PASS" if r.ok else "FAIL", r.name, r.passed, r.failed, r.skipped) for r in results]
    header = ["status", "property", "passed", "failed", "skipped"]
    md = _md_table(header, rows) + f"\n\noverall: {'PASS' if ok else 'FAIL'}"
    for r in results:
        for f in r.failures:
            md += f"\n  {r.name}: {f}"
    return _emit(doc, args.format or "md", md, _tsv(header, rows)), ok


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polychern", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, monomial=False, ring=False):
        sp.add_argument("--lengths", required=True, help="e.g. 3,1,1,1,1 or 2,1,1,1,eps")
        if monomial:
            sp.add_argument("--monomial", required=True, help="e.g. 1:2,4:1 or e:3")
        if ring:
            sp.add_argument("--ring", default="z", choices=["z", "z2"])
        sp.add_argument("--format", choices=["json", "md", "tsv"])

    common(sub.add_parser("eval", help="intersection number of a top monomial"), True, True)
    t = sub.add_parser("table", help="pentagon table of Ch(i)Ch(j), or every top monomial")
    common(t)
    t.add_argument("--all", action="store_true")
    e = sub.add_parser("expand", help="pruned cocycle expansion of a monomial")
    common(e, True, True)
    e.add_argument("--reps", help="partners i=j overriding the default representatives")
    common(sub.add_parser("triangles", help="signed triangular configurations"), True, True)
    common(sub.add_parser("chamber", help="chamber signature and Chern vanishing"))
    v = sub.add_parser("verify", help="randomized consistency checks")
    v.add_argument("--lengths")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--nmax", type=int, default=8)
    v.add_argument("--format", choices=["json", "md", "tsv"])
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            out, ok = cmd_verify(args)
            print(out)
            return EXIT_OK if ok else EXIT_VERIFY
        handler = {"eval": cmd_eval, "table": cmd_table, "expand": cmd_expand,
                   "triangles": cmd_triangles, "chamber": cmd_chamber}[args.command]
        print(handler(args))
        return EXIT_OK
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NonGeneric as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LENGTHS
    except (NonTransversal, FreshIndexExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TRANSVERSAL
    except BadDegree as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MONOMIAL


if __name__ == "__main__":
    sys.exit(main())
