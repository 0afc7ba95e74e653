"""Command-line entry point: ``brookscolor <subcommand> [options] [INPUT]``.

Data goes to stdout as JSON (sorted keys), logs go to stderr.  Exit codes:
0 success, 1 domain failure, 2 usage or input error, 3 scale refusal.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import formats, oracle
from .alon_tarsi import at_certify_degree_choosable
from .brooks import color_brooks
from .choosability import find_independency_tree, gallai_bad_lists, is_independency_tree
from .errors import (BrooksColorError, InvariantViolation, ParseError, PreconditionError,
                     ScaleRefusal, ValidationError)
from .families import FAMILIES, FamilySpec, bounds_report, generate, unlabeled_graphs
from .graph import Graph, is_proper
from .paintability import (certificate_is_paintable, chi_paint_exact, degeneracy_orientation,
                           optimal_painter, paint_game_solve, painter_kernel_strategy, play)
from .report import STRATEGIES, brooks_bound
from .structure import StructureClass, classify, is_gallai_tree

log = logging.getLogger("brookscolor")

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_SCALE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _read_graph(args) -> Graph:
    if args.input in (None, "-"):
        data = sys.stdin.buffer.read()
    else:
        with open(args.input, "rb") as fh:
            data = fh.read()
    fmt = args.format or formats.sniff(data)
    log.info("reading %s input", fmt)
    return formats.parse(data, fmt)


# ------------------------------------------------------------------ commands


def cmd_color(args) -> int:
    g = _read_graph(args)
    rep = color_brooks(g, args.strategy)
    out = rep.to_json()
    if args.verify:
        out["verify"] = _verify_coloring(g, rep)
        if not out["verify"]["ok"]:
            _emit(out)
            return EXIT_DOMAIN
    _emit(out)
    return EXIT_OK if rep.outcome == "colored" else EXIT_DOMAIN


def _verify_coloring(g: Graph, rep) -> dict:
    if g.n > oracle.CHI_LIMIT:
        return {"checked": False, "ok": True, "reason": f"n > {oracle.CHI_LIMIT}"}
    chi, _ = oracle.chi_exact(g)
    bound = brooks_bound(g)
    if rep.outcome == "colored":
        ok = is_proper(g, rep.coloring) and rep.palette_size <= bound and chi <= rep.palette_size
    else:
        # exceptional graphs need Delta + 1 colors
        ok = chi == g.max_degree + 1 and is_proper(g, rep.coloring) and rep.palette_size == chi
    return {"checked": True, "ok": ok, "chi": chi, "bound": bound}


def cmd_oracle(args) -> int:
    g = _read_graph(args)
    _emit(oracle.oracle_report(g, choice=args.choice, paint=args.paint).to_json())
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _read_graph(args)
    sc = classify(g)
    gt = is_gallai_tree(g)
    tree = find_independency_tree(g)
    out = {"structure": sc.to_json(), "gallai_tree": gt.tag == "gallai_tree",
           "degree_choosable": gt.tag != "gallai_tree"}
    if isinstance(tree, StructureClass):
        out["independency_tree"] = None
        out["independency_obstruction"] = tree.to_json()
    else:
        out["independency_tree"] = tree.to_json()
        if args.verify and not is_independency_tree(g, tree):
            raise InvariantViolation("independency tree failed its check")
    if gt.tag == "gallai_tree":
        out["gallai_blocks"] = gt.witness["blocks"]
    _emit(out)
    return EXIT_OK


def cmd_lists(args) -> int:
    g = _read_graph(args)
    lists = gallai_bad_lists(g)
    out = {"lists": {str(v): sorted(x) for v, x in enumerate(lists)}}
    if args.verify:
        colorable = oracle.is_list_colorable(g, lists)[0]
        out["verify"] = {"checked": True, "ok": not colorable}
        if colorable:
            _emit(out)
            return EXIT_DOMAIN
    _emit(out)
    return EXIT_OK


def cmd_at_check(args) -> int:
    g = _read_graph(args)
    cert = at_certify_degree_choosable(g, args.chord_rule)
    out = cert.to_json()
    if args.verify:
        if g.n <= oracle.CHOOSE_LIMIT:
            ok = oracle.is_f_choosable(g, [g.degree(v) for v in range(g.n)])[0]
            out["verify"] = {"checked": True, "ok": ok,
                             "paintable": certificate_is_paintable(g, cert.orientation)}
        else:
            out["verify"] = {"checked": False, "ok": True,
                             "reason": f"n > {oracle.CHOOSE_LIMIT}"}
    _emit(out)
    return EXIT_OK if cert.certified else EXIT_DOMAIN


def _parse_tokens(text: str | None, g: Graph) -> list[int]:
    if text is None:
        return [chi_paint_exact(g)] * g.n
    parts = [p for p in text.split(",") if p.strip()]
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad --tokens value {text!r}") from None
    if len(vals) == 1:
        return vals * g.n
    if len(vals) != g.n:
        raise UsageError(f"--tokens needs 1 or {g.n} values, got {len(vals)}")
    return vals


def _parse_reveals(text: str) -> list[list[int]]:
    try:
        return [[int(x) for x in part.split(",") if x.strip()] for part in text.split(";")]
    except ValueError:
        raise UsageError(f"bad --reveals value {text!r}") from None


def cmd_paint(args) -> int:
    g = _read_graph(args)
    if args.mode == "play" and args.painter == "kernel":
        d = degeneracy_orientation(g)
        f = _parse_tokens(args.tokens or ",".join(str(d.outdegree(v) + 1) for v in range(g.n)), g)
        try:
            painter = painter_kernel_strategy(d, f)
        except ValueError as e:
            raise PreconditionError(f"kernel painter needs out-degree + 1 tokens: {e}") from None
    else:
        f = _parse_tokens(args.tokens, g)
    if args.mode == "solve":
        res = paint_game_solve(g, f, with_table=args.table)
        out = {"tokens": f, "winner": res.winner}
        if args.table:
            out["strategy"] = res.to_json()["strategy"]
        _emit(out)
        return EXIT_OK
    if args.reveals is not None:
        reveals = _parse_reveals(args.reveals)
        for r in reveals:
            if any(v < 0 or v >= g.n for v in r):
                raise UsageError(f"reveal {r} names a vertex outside 0..{g.n - 1}")
    else:
        rng = random.Random(args.seed)
        reveals = [[v for v in range(g.n) if rng.random() < 0.5] for _ in range(64 * max(g.n, 1))]
    if args.painter == "optimal":
        painter = optimal_painter(g, f)
    out = play(g, f, painter, reveals)
    out["tokens"] = f
    out["painter"] = args.painter
    _emit(out)
    return EXIT_OK if out["winner"] != "adversary" else EXIT_DOMAIN


def _parse_params(text: str | None) -> dict:
    out = {}
    for part in (text or "").split(","):
        if not part.strip():
            continue
        key, sep, val = part.partition("=")
        if not sep or key.strip() not in ("n", "m", "t", "seed"):
            raise UsageError(f"bad --params entry {part!r}; use n=..,m=..,t=..,seed=..")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer") from None
    return out


_REQUIRED = {"cycle": ("n",), "complete": ("n",), "complete_bipartite": ("n",), "join": ("m",),
             "catlin": ("t",), "gallai_random": ("n",)}


def cmd_gen(args) -> int:
    params = _parse_params(args.params)
    missing = [p for p in _REQUIRED.get(args.family, ()) if p not in params]
    if missing:
        raise UsageError(f"family {args.family} needs parameter(s) {', '.join(missing)}")
    g = generate(FamilySpec(args.family, **params), check=not args.no_check)
    data = formats.serialize(g, args.format or "graph6").decode()
    sys.stdout.write(data if data.endswith("\n") else data + "\n")
    return EXIT_OK


def _bounds_line(g: Graph) -> dict:
    out = bounds_report(g).to_json()
    out["graph6"] = formats.to_graph6(g).decode().strip()
    return out


def _pmap(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=64))


def _check_max_n(n: int) -> None:
    if n < 1:
        raise UsageError("--max-n must be at least 1")
    if n > 7:
        raise ScaleRefusal("graph enumeration", n, 7)


def cmd_check_conjectures(args) -> int:
    _check_max_n(args.max_n)
    graphs = list(unlabeled_graphs(args.max_n, connected=False))
    lines = _pmap(_bounds_line, graphs, args.jobs)
    findings = 0
    for line in lines:
        findings += len(line["findings"])
        _emit(line)
    tight = sum(1 for line in lines if line["chi"] == line["reed_bound"])
    _emit({"summary": {"graphs": len(lines), "findings": findings, "reed_tight": tight}})
    if findings:
        log.warning("conjecture findings: %d", findings)
    return EXIT_OK


def _bench_one(item):
    g, names = item
    row = {}
    for name in names:
        t0 = time.perf_counter()
        rep = color_brooks(g, name)
        row[name] = (rep.outcome, rep.palette_size if rep.outcome == "colored" else None,
                     time.perf_counter() - t0)
    return row


def cmd_bench(args) -> int:
    _check_max_n(args.max_n)
    if args.strategies == "all":
        names = list(STRATEGIES)
    else:
        names = [s.strip() for s in args.strategies.split(",") if s.strip()]
        bad = [s for s in names if s not in STRATEGIES]
        if bad or not names:
            raise UsageError(f"unknown strategies {bad}; choose from {', '.join(STRATEGIES)}")
    graphs = list(unlabeled_graphs(args.max_n))
    rows = _pmap(_bench_one, [(g, names) for g in graphs], args.jobs)
    stats = {n: {"colored": 0, "exceptional": 0, "over_bound": 0} for n in names}
    timing = {n: 0.0 for n in names}
    agree = {a: {b: 0 for b in names} for a in names}
    for g, row in zip(graphs, rows):
        bound = brooks_bound(g)
        ok = {}
        for n in names:
            outcome, size, secs = row[n]
            stats[n][outcome] += 1
            timing[n] += secs
            if outcome == "colored" and size > bound:
                stats[n]["over_bound"] += 1
            ok[n] = (outcome, outcome == "exceptional" or size <= bound)
        for a in names:
            for b in names:
                agree[a][b] += ok[a] == ok[b]
    total = all(v == len(graphs) for r in agree.values() for v in r.values())
    total = total and all(s["over_bound"] == 0 for s in stats.values())
    _emit({"graphs": len(graphs), "max_n": args.max_n, "strategies": stats,
           "agreement": agree, "total_agreement": total,
           "timing": {n: round(t, 6) for n, t in timing.items()}})
    return EXIT_OK if total else EXIT_DOMAIN


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="suppress log output on stderr")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")

    graph_in = _Parser(add_help=False)
    graph_in.add_argument("input", nargs="?", help="graph file (default: stdin)")
    graph_in.add_argument("--format", choices=formats.FORMATS, help="input format (default: sniff)")

    p = _Parser(prog="brookscolor", description="Brooks-type coloring toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("color", parents=[common, graph_in], help="color with a strategy")
    c.add_argument("--strategy", choices=STRATEGIES, default="lovasz")
    c.add_argument("--verify", action="store_true", help="cross-check with the exact oracle")
    c.set_defaults(func=cmd_color)

    o = sub.add_parser("oracle", parents=[common, graph_in], help="exact chi, omega, alpha")
    o.add_argument("--choice", action="store_true", help="also compute the choice number")
    o.add_argument("--paint", action="store_true", help="also compute the paint number")
    o.set_defaults(func=cmd_oracle)

    k = sub.add_parser("classify", parents=[common, graph_in], help="structure certificates")
    k.add_argument("--verify", action="store_true")
    k.set_defaults(func=cmd_classify)

    li = sub.add_parser("lists", parents=[common, graph_in], help="bad lists for a Gallai tree")
    li.add_argument("--verify", action="store_true")
    li.set_defaults(func=cmd_lists)

    a = sub.add_parser("at-check", parents=[common, graph_in], help="orientation certificate")
    a.add_argument("--chord-rule", choices=("as_cycle", "reversed"), default="as_cycle")
    a.add_argument("--verify", action="store_true")
    a.set_defaults(func=cmd_at_check)

    pt = sub.add_parser("paint", parents=[common, graph_in], help="the painting game")
    pt.add_argument("--mode", choices=("solve", "play"), default="solve")
    pt.add_argument("--tokens", help="one count for all vertices or a comma list")
    pt.add_argument("--table", action="store_true", help="include the winning strategy table")
    pt.add_argument("--reveals", help="scripted adversary, e.g. '0,1;2;3,4'")
    pt.add_argument("--seed", type=int, default=0, help="seed for the random adversary")
    pt.add_argument("--painter", choices=("kernel", "optimal"), default="kernel",
                    help="kernel painter on an acyclic orientation, or the exact solver")
    pt.set_defaults(func=cmd_paint)

    gn = sub.add_parser("gen", parents=[common], help="generate a named graph")
    gn.add_argument("--family", choices=FAMILIES, required=True)
    gn.add_argument("--params", help="comma list such as n=5,m=3,t=3,seed=1")
    gn.add_argument("--format", choices=formats.FORMATS, help="output format (default graph6)")
    gn.add_argument("--no-check", action="store_true", help="skip the parameter re-check")
    gn.set_defaults(func=cmd_gen)

    cc = sub.add_parser("check-conjectures", parents=[common], help="bound checks, JSON lines")
    cc.add_argument("--max-n", type=int, default=6)
    cc.set_defaults(func=cmd_check_conjectures)

    b = sub.add_parser("bench", parents=[common], help="time and compare strategies")
    b.add_argument("--strategies", default="all")
    b.add_argument("--max-n", type=int, default=6)
    b.set_defaults(func=cmd_bench)
    return p


def _error(kind: str, detail, code: int) -> int:
    _emit({"error": kind, "detail": detail})
    return code


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return _error("usage", str(e), EXIT_USAGE)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.INFO,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    if args.jobs < 1:
        return _error("usage", "--jobs must be at least 1", EXIT_USAGE)
    try:
        return args.func(args)
    except UsageError as e:
        return _error("usage", str(e), EXIT_USAGE)
    except (ParseError, ValidationError) as e:
        return _error(type(e).__name__, str(e), EXIT_USAGE)
    except ValueError as e:
        return _error("usage", str(e), EXIT_USAGE)
    except OSError as e:
        return _error("io", str(e), EXIT_USAGE)
    except ScaleRefusal as e:
        return _error("ScaleRefusal", {"message": str(e), "what": e.what, "size": e.size,
                                       "limit": e.limit}, EXIT_SCALE)
    except PreconditionError as e:
        return _error(type(e).__name__, {"message": str(e), "certificate": e.certificate},
                      EXIT_DOMAIN)
    except InvariantViolation as e:
        return _error("InvariantViolation", {"message": str(e), "trace": e.trace}, EXIT_DOMAIN)
    except BrooksColorError as e:
        return _error(type(e).__name__, str(e), EXIT_DOMAIN)


if __name__ == "__main__":
    sys.exit(main())
