"""Command-line front end: report commands and verification suites.

Exit codes: 0 success or verification pass, 1 verification failure,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache as cache_mod
from .bring import BRing, congruence_d, from_marks, p_classes
from .errors import BurnsideError
from .exttor import (DegreeCell, ExtTorContext, ext_ranks, ext_report,
                     prime_factors, tor_report, verify_squarefree)
from .groups import parse_cycles, parse_group
from .marks import table_of_marks
from .modp import blocks_report
from .oracle import ORACLE_DEGREE_CAP, oracle_ext, oracle_tor
from .permgroup import are_conjugate, enumerate_elements, o_p, subgroup_classes
from .resolution import _block_cache


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except BurnsideError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burnside",
        description="Exact Burnside ring reports: marks, congruences, "
                    "mod-p blocks, and Ext/Tor of mark modules.")
    sub = parser.add_subparsers(dest="command")
    parser.set_defaults(command=None)

    def common(p):
        p.add_argument("--group", help="named group: Cn, Dn, Sn, An, Q8, V4")
        p.add_argument("--gens", help='generators in cycle notation, '
                                      'e.g. "(1 2 3)(4 5), (1 2)"')
        p.add_argument("--format", choices=["table", "json"], default="table")
        p.add_argument("--cache-dir", default=None,
                       help=f"marks cache directory (env: {cache_mod.ENV_VAR})")

    p_marks = sub.add_parser("marks", help="table of marks")
    common(p_marks)
    p_marks.set_defaults(func=cmd_marks)

    p_d = sub.add_parser("dmatrix", help="congruence numbers d(i, j) and "
                                         "the mod-p class partitions")
    common(p_d)
    p_d.set_defaults(func=cmd_dmatrix)

    p_blocks = sub.add_parser("blocks", help="mod-p block decomposition")
    common(p_blocks)
    p_blocks.add_argument("-p", type=int, required=True, dest="prime")
    p_blocks.set_defaults(func=cmd_blocks)

    for kind in ("ext", "tor"):
        p_e = sub.add_parser(kind, help=f"{kind} module report between two "
                                        f"mark modules")
        common(p_e)
        p_e.add_argument("--source", required=True, help="class label")
        p_e.add_argument("--target", required=True, help="class label")
        p_e.add_argument("--max-degree", type=int, default=6)
        p_e.add_argument("--oracle", action="store_true",
                         help=f"attach exact Smith-form values for degrees "
                              f"<= {ORACLE_DEGREE_CAP}")
        p_e.set_defaults(func=cmd_ext_tor, kind=kind)

    p_v = sub.add_parser("verify", help="run a verification suite")
    common(p_v)
    p_v.add_argument("--suite", required=True,
                     choices=["squarefree", "dress", "blocks", "oracle"])
    p_v.add_argument("--max-degree", type=int, default=None)
    p_v.set_defaults(func=cmd_verify)

    p_g = sub.add_parser("growth", help="p-rank growth of Ext between two "
                                        "mark modules")
    common(p_g)
    p_g.add_argument("-p", type=int, required=True, dest="prime")
    p_g.add_argument("--max-degree", type=int, default=8)
    p_g.add_argument("--source", default="1", help="class label (default 1)")
    p_g.add_argument("--target", default="1", help="class label (default 1)")
    p_g.set_defaults(func=cmd_growth)
    return parser


def _load_group(args):
    if bool(args.group) == bool(args.gens):
        raise BurnsideError("exactly one of --group or --gens is required")
    if args.group:
        return parse_group(args.group), args.group
    return enumerate_elements(parse_cycles(args.gens)), args.gens


def _marks_json(args) -> dict:
    group, name = _load_group(args)
    cache_dir = cache_mod.resolve_cache_dir(args.cache_dir)
    doc = cache_mod.load_marks_json(cache_dir, group)
    if doc is None:
        doc = table_of_marks(group).to_json(name)
        try:
            cache_mod.store_marks_json(cache_dir, group, doc)
        except OSError:
            pass  # cache is an optimization only
    return doc


def _context(args) -> ExtTorContext:
    doc = _marks_json(args)
    labels = [c["label"] for c in doc["classes"]]
    ring = BRing(labels, doc["matrix"])
    order = doc["matrix"][0][0]
    return ExtTorContext(ring, doc["group"], order)


def _label_index(ctx: ExtTorContext, label: str) -> int:
    try:
        return ctx.ring.index_of(label)
    except KeyError:
        raise BurnsideError(
            f"unknown class label {label!r}; known: "
            f"{', '.join(ctx.ring.labels)}") from None


def _emit(args, payload: dict, table: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(table)


def _render(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[c]) for r in rows)) if rows else len(h)
              for c, h in enumerate(headers)]
    def fmt(cells):
        return "  ".join(c.rjust(w) for c, w in zip(cells, widths))
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines.extend(fmt(r) for r in rows)
    return "\n".join(lines)


def cmd_marks(args) -> int:
    doc = _marks_json(args)
    labels = [c["label"] for c in doc["classes"]]
    rows = []
    for c, row in zip(doc["classes"], doc["matrix"]):
        rows.append([c["label"], str(c["order"])] + [str(v) for v in row])
    table = (f"table of marks for {doc['group']}\n"
             + _render(["class", "|H|"] + labels, rows))
    _emit(args, doc, table)
    return 0


def cmd_dmatrix(args) -> int:
    ctx = _context(args)
    labels = ctx.ring.labels
    n = ctx.ring.n
    dj = ctx.dmat.to_json()
    partitions = [p_classes(ctx.ring, p, ctx.dmat).to_json()
                  for p in ctx.primes()]
    payload = {"group": ctx.group_name, **dj, "partitions": partitions}
    rows = []
    for i in range(n):
        cells = [labels[i]]
        for j in range(n):
            cells.append("." if i == j else str(ctx.dmat.d(i, j)))
        rows.append(cells)
    lines = [f"congruence numbers d(i, j) for {ctx.group_name}",
             _render([""] + labels, rows)]
    for part in partitions:
        classes = " ".join("{" + " ".join(cls) + "}" for cls in part["classes"])
        lines.append(f"~{part['p']} classes: {classes}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_blocks(args) -> int:
    ctx = _context(args)
    report = blocks_report(ctx.algebra(args.prime))
    payload = {"group": ctx.group_name, **report}
    rows = [[" ".join(b["class"]), str(b["dim"]), str(b["m_mod_m2"]),
             str(b["socle"]), "yes" if b["symmetric"] else "no",
             "yes" if b["bounded"] else "no"]
            for b in report["blocks"]]
    table = (f"mod-{args.prime} blocks of {ctx.group_name}\n"
             + _render(["class", "dim", "m/m^2", "socle", "symmetric",
                        "bounded"], rows))
    _emit(args, payload, table)
    return 0


def cmd_ext_tor(args) -> int:
    ctx = _context(args)
    i = _label_index(ctx, args.source)
    j = _label_index(ctx, args.target)
    L = args.max_degree
    build = ext_report if args.kind == "ext" else tor_report
    report = build(ctx, i, j, L)
    if args.oracle:
        run = oracle_ext if args.kind == "ext" else oracle_tor
        exact = run(ctx, i, j, min(L, ORACLE_DEGREE_CAP))
        for l, module in enumerate(exact):
            cell = report.degrees[l]
            for pp in cell.p_parts:
                oracle_rank = sum(1 for d in module.invariants if d % pp.p == 0)
                if oracle_rank != pp.rank:
                    raise AssertionError(
                        f"oracle p-rank {oracle_rank} != report {pp.rank} "
                        f"at degree {l}, p = {pp.p}")
            if cell.module is not None and cell.module != module:
                raise AssertionError(
                    f"oracle module {module} != report {cell.module} "
                    f"at degree {l}")
            report.degrees[l] = DegreeCell(l, cell.p_parts, module, "oracle")
    name = "Ext^l" if args.kind == "ext" else "Tor_l"
    lines = [f"{name}(Z_{args.source}, Z_{args.target}) over "
             f"{ctx.group_name}, degrees 0..{L}"]
    for cell in report.degrees:
        parts = "; ".join(
            f"p={pp.p}: rank {pp.rank}, exp | {pp.exponent_bound}"
            for pp in cell.p_parts)
        module = str(cell.module) if cell.module is not None else "(rank data only)"
        suffix = f"  [{parts}]" if parts else ""
        lines.append(f"l={cell.l}: {module}{suffix}  ({cell.provenance})")
    _emit(args, report.to_json(), "\n".join(lines))
    return 0


def cmd_growth(args) -> int:
    ctx = _context(args)
    i = _label_index(ctx, args.source)
    j = _label_index(ctx, args.target)
    ranks = ext_ranks(ctx, i, j, args.prime, args.max_degree)
    algebra = ctx.algebra(args.prime)
    if algebra.partition.same_class(i, j):
        block = ctx.block_of(args.prime, i)
        bounded = block.invariants()["tor_bounded"]
    else:
        bounded = True
    verdict = "bounded" if bounded else "unbounded"
    payload = {"group": ctx.group_name, "p": args.prime,
               "source": args.source, "target": args.target,
               "ranks": ranks, "verdict": verdict}
    table = (f"p-ranks of Ext^l(Z_{args.source}, Z_{args.target}) at "
             f"p={args.prime}, l=1..{args.max_degree}\n"
             f"ranks {','.join(map(str, ranks))}\n"
             f"verdict: {verdict}")
    _emit(args, payload, table)
    return 0


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "squarefree":
        return _verify_squarefree(args)
    if suite == "dress":
        return _verify_dress(args)
    if suite == "blocks":
        return _verify_blocks(args)
    return _verify_oracle(args)


def _verify_squarefree(args) -> int:
    ctx = _context(args)
    L = args.max_degree or 18
    result = verify_squarefree(ctx, L)
    if not result.applicable:
        print(f"squarefree: not-applicable (|{ctx.group_name}| = "
              f"{ctx.group_order} is not square-free)")
        return 0
    if result.passed:
        print(f"squarefree: pass (all pairs, degrees 1..{L - 2} vs +2)")
        return 0
    print(f"squarefree: FAIL at {result.counterexample}")
    return 1


def _verify_dress(args) -> int:
    group, name = _load_group(args)
    class_table = subgroup_classes(group)
    ring = from_marks(table_of_marks(group, class_table))
    dmat = congruence_d(ring)
    ok = True
    for p in prime_factors(group.order):
        mismatches = 0
        checked = 0
        ops = [o_p(c.representative, p) for c in class_table]
        for i in range(len(class_table)):
            for j in range(i + 1, len(class_table)):
                checked += 1
                lhs = dmat.d(i, j) % p == 0
                rhs = are_conjugate(group, ops[i], ops[j])
                if lhs != rhs:
                    mismatches += 1
        status = "ok" if mismatches == 0 else f"{mismatches} MISMATCHES"
        print(f"dress p={p}: {status} ({checked} pairs) [{name}]")
        ok = ok and mismatches == 0
    return 0 if ok else 1


def _verify_blocks(args) -> int:
    ctx = _context(args)
    ok = True
    for p in prime_factors(ctx.group_order):
        algebra = ctx.algebra(p)
        bl = _block_cache(algebra)
        sizes = [len(c) for c in algebra.classes]
        good = (len(bl) == len(algebra.classes)
                and [b.dim for b in bl] == sizes)
        print(f"blocks p={p}: {'ok' if good else 'FAIL'} "
              f"(count {len(bl)}, dims {[b.dim for b in bl]})")
        ok = ok and good
    coprime = []
    q = 2
    while len(coprime) < 2:
        if _is_prime(q) and ctx.group_order % q != 0:
            coprime.append(q)
        q += 1
    for p in coprime:
        algebra = ctx.algebra(p)
        bl = _block_cache(algebra)
        good = all(b.dim == 1 for b in bl)
        print(f"blocks p={p} (coprime): "
              f"{'semisimple ok' if good else 'FAIL'}")
        ok = ok and good
    return 0 if ok else 1


def _is_prime(q: int) -> bool:
    from .permgroup import is_prime
    return is_prime(q)


def _verify_oracle(args) -> int:
    ctx = _context(args)
    L = min(args.max_degree or ORACLE_DEGREE_CAP, ORACLE_DEGREE_CAP)
    n = ctx.ring.n
    failures = 0
    cells = 0
    for i in range(n):
        for j in range(n):
            er = ext_report(ctx, i, j, L)
            tr = tor_report(ctx, i, j, L)
            oe = oracle_ext(ctx, i, j, L)
            ot = oracle_tor(ctx, i, j, L)
            for l in range(L + 1):
                cells += 2
                failures += not _cell_matches(er.degrees[l], oe[l])
                failures += not _cell_matches(tr.degrees[l], ot[l])
    status = "ok" if failures == 0 else f"{failures} FAILURES"
    print(f"oracle: {status} ({n * n} pairs, degrees 0..{L}, {cells} cells)")
    return 0 if failures == 0 else 1


def _cell_matches(cell: DegreeCell, module) -> bool:
    reported = {pp.p: pp.rank for pp in cell.p_parts}
    actual = {}
    for d in module.invariants:
        for p in prime_factors(d):
            actual[p] = actual.get(p, 0) + 1
    if cell.l == 0:
        if cell.module is not None and cell.module.free_rank != module.free_rank:
            return False
    if cell.l >= 1 and reported != actual:
        return False
    if cell.module is not None and cell.module != module:
        return False
    return True


if __name__ == "__main__":
    sys.exit(main())
