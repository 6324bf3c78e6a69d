"""Command-line front door.

Subcommands: ``matroid`` (constructors), ``search``/``update`` (sweep search
into a JSON store), ``show`` (four-column sweep tables, optionally written
as CSV plus Hasse figures), ``verify`` (simplicial/polytopal/sweep checks),
``analyze`` (structure reports and pure-labeling verdicts per stored poset),
``export`` (DOT/JSON/PNG/CSV) and ``serve`` (local JSON API).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import matroid as matroid_mod
from .errors import MatroidSweepError
from .polytope import Functional
from .report import format_sweep_table, write_report
from .session import distinct_posets
from .shelling import is_polytopal_shelling, is_shelling, resolve_order, restriction_sets
from .sweep import ResultStore, SearchParams, run_search, validate_sweep


def _write_json(data: dict, out: str | None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_matroid(path: str) -> matroid_mod.Matroid:
    return matroid_mod.from_json(json.loads(Path(path).read_text()))


def _load_store(path: str) -> ResultStore:
    return ResultStore.from_json_file(path)


def _save_store(store: ResultStore, path: str) -> None:
    Path(path).write_text(store.dumps())


def _parse_elements(text: str) -> frozenset[int]:
    return frozenset(int(x) for x in text.replace(" ", "").split(",") if x != "")


def _parse_functional(text: str) -> Functional:
    return Functional.of([Fraction(tok) for tok in text.replace(" ", "").split(",") if tok])


def _params_from_args(args: argparse.Namespace) -> SearchParams:
    return SearchParams(
        vfav=_parse_elements(args.vfav),
        pivots=tuple(int(x) for x in args.pivots.split(",") if x) if args.pivots else (),
        limit=args.limit,
        misses=args.misses,
        w=Fraction(args.w),
        seed=args.seed,
        initial=_parse_functional(args.initial) if args.initial else None,
    )


def _add_search_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--vfav", required=True, help="base vertex, e.g. 0,1,2")
    sub.add_argument("--pivots", default="", help="1-indexed pivot positions, e.g. 1,3,4")
    sub.add_argument("--limit", type=int, default=3)
    sub.add_argument("--misses", type=int, default=50)
    sub.add_argument("--w", default="0", help="carry-over weight (rational, e.g. 5 or 5/2)")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--initial", default=None, help="initial functional, e.g. 1,2,3,4,5,6")
    sub.add_argument("--store", required=True, help="store file to write")


def cmd_matroid(args: argparse.Namespace) -> int:
    if args.kind == "uniform":
        m = matroid_mod.uniform(args.n, args.k)
    elif args.kind == "catalan":
        m = matroid_mod.catalan(args.rank)
    elif args.kind == "graphic":
        edges = []
        for tok in args.edges.replace(" ", "").split(","):
            if not tok:
                continue
            u, v = tok.split("-")
            edges.append((int(u), int(v)))
        m = matroid_mod.graphic(args.vertices, edges)
    else:  # from-bases
        m = matroid_mod.from_bases(args.n, json.loads(args.bases))
    _write_json(m.to_json(), args.out)
    return 0


def cmd_face_lattice(args: argparse.Namespace) -> int:
    from .polytope import face_lattice_oracle

    m = _load_matroid(args.matroid)
    _write_json(face_lattice_oracle(m).to_json(), args.out)
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    m = _load_matroid(args.matroid)
    params = _params_from_args(args)
    store = run_search(m, params)
    _save_store(store, args.store)
    print(f"stored {len(store.sweeps)} sweep(s) in {args.store}")
    return 0


def cmd_update(args: argparse.Namespace) -> int:
    store = _load_store(args.store)
    params = _params_from_args(args)
    before = len(store.sweeps)
    store = run_search(store.matroid, params, store)
    _save_store(store, args.store)
    print(f"added {len(store.sweeps) - before} sweep(s), store has {len(store.sweeps)}")
    return 0


def _check_sweep_index(store: ResultStore, index: int | None) -> None:
    if index is not None and not 0 <= index < len(store.sweeps):
        from .errors import BadParameters

        raise BadParameters(f"store has {len(store.sweeps)} sweep(s), no index {index}")


def cmd_show(args: argparse.Namespace) -> int:
    store = _load_store(args.store)
    _check_sweep_index(store, args.sweep)
    records = store.sweeps
    if args.sweep is not None:
        records = [store.sweeps[args.sweep]]
    for i, rec in enumerate(records):
        print(f"# sweep {args.sweep if args.sweep is not None else i}")
        print(format_sweep_table(store.matroid, rec))
        print()
    if args.out:
        entries = distinct_posets(store)
        paths = write_report(
            store.matroid,
            records,
            [(e.poset, e.labeling) for e in entries],
            args.out,
        )
        print(f"wrote {len(paths)} file(s) to {args.out}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.store:
        store = _load_store(args.store)
        _check_sweep_index(store, args.sweep)
        ids = [args.sweep] if args.sweep is not None else range(len(store.sweeps))
        bad = 0
        for i in ids:
            rec = store.sweeps[i]
            check = validate_sweep(store.matroid, rec.sweep)
            ok, step = is_shelling(store.matroid, rec.sweep.order)
            verdict = check.ok and ok
            extra = "" if verdict else f" ({check.violation or f'shelling fails at step {step}'})"
            print(f"sweep {i}: {'ok' if verdict else 'INVALID'}{extra}")
            bad += not verdict
        return 1 if bad else 0
    m = _load_matroid(args.matroid)
    order_data = json.loads(Path(args.order).read_text())
    order = resolve_order(m, order_data)
    if args.mode == "polytopal":
        ok = is_polytopal_shelling(m, order)
        print(f"polytopal shelling: {ok}")
        return 0 if ok else 1
    ok, step = is_shelling(m, order)
    if ok and len(order) == len(m.bases):
        rs = restriction_sets(m, order)
        hist = rs.size_histogram()
        print(f"simplicial shelling: True (restriction-size histogram {hist})")
    else:
        print(f"simplicial shelling: {ok}" + ("" if ok else f" (fails at step {step})"))
    return 0 if ok else 1


def cmd_analyze(args: argparse.Namespace) -> int:
    store = _load_store(args.store)
    entries = distinct_posets(store)
    payload = []
    for pid, e in enumerate(entries):
        lab = e.labeling_json()
        payload.append(
            {
                "poset": pid,
                "iso_class": e.iso_class,
                "sweeps": e.sweep_ids,
                "structure": e.structure.to_json(),
                "labeling": lab,
            }
        )
        s = e.structure
        print(
            f"poset {pid} (iso class {e.iso_class}, {len(e.sweep_ids)} sweep(s)): "
            f"graded={s.graded} greedoid={s.greedoid} lattice_after_top={s.lattice_after_top} "
            f"atoms_ok={s.atoms_ok} labeling={lab['status']}"
        )
    if args.json:
        _write_json({"posets": payload}, args.json if args.json != "-" else None)
    if args.out:
        write_report(store.matroid, [], [(e.poset, e.labeling) for e in entries], args.out)
        print(f"wrote figures to {args.out}")
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    store = _load_store(args.store)
    entries = distinct_posets(store)
    paths = write_report(
        store.matroid,
        store.sweeps,
        [(e.poset, e.labeling) for e in entries],
        args.out,
    )
    out = Path(args.out)
    for pid, e in enumerate(entries):
        (out / f"poset_{pid:03d}.json").write_text(
            json.dumps(
                {**e.poset.to_json(), "structure": e.structure.to_json(), "labeling": e.labeling_json()},
                indent=2,
                sort_keys=True,
            )
            + "\n"
        )
    print(f"exported store to {args.out} ({len(paths)} table/figure file(s))")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(args.store, matroid_path=args.matroid, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matroidsweep", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    pm = sub.add_parser("matroid", help="construct a matroid and print/write its JSON")
    pmk = pm.add_subparsers(dest="kind", required=True)
    u = pmk.add_parser("uniform")
    u.add_argument("n", type=int)
    u.add_argument("k", type=int)
    u.add_argument("-o", "--out")
    c = pmk.add_parser("catalan")
    c.add_argument("rank", type=int)
    c.add_argument("-o", "--out")
    g = pmk.add_parser("graphic")
    g.add_argument("--vertices", type=int, required=True)
    g.add_argument("--edges", required=True, help="comma list of u-v pairs, e.g. 0-1,1-2,2-0")
    g.add_argument("-o", "--out")
    fb = pmk.add_parser("from-bases")
    fb.add_argument("n", type=int)
    fb.add_argument("bases", help='JSON list of bases, e.g. "[[0,1],[0,2]]"')
    fb.add_argument("-o", "--out")
    pm.set_defaults(func=cmd_matroid)

    pf = sub.add_parser("face-lattice", help="export the polytope face lattice as JSON cover lists")
    pf.add_argument("--matroid", required=True)
    pf.add_argument("-o", "--out")
    pf.set_defaults(func=cmd_face_lattice)

    ps = sub.add_parser("search", help="run a sweep search into a fresh store")
    ps.add_argument("--matroid", required=True)
    _add_search_flags(ps)
    ps.set_defaults(func=cmd_search)

    pu = sub.add_parser("update", help="merge a further search into an existing store")
    pu.add_argument("--store", required=True)
    pu.add_argument("--vfav", required=True)
    pu.add_argument("--pivots", default="")
    pu.add_argument("--limit", type=int, default=3)
    pu.add_argument("--misses", type=int, default=50)
    pu.add_argument("--w", default="0")
    pu.add_argument("--seed", type=int, default=0)
    pu.add_argument("--initial", default=None)
    pu.set_defaults(func=cmd_update)

    psh = sub.add_parser("show", help="print sweep tables; optionally write CSV + figures")
    psh.add_argument("--store", required=True)
    psh.add_argument("--sweep", type=int, default=None)
    psh.add_argument("--out", default=None, help="directory for CSV tables and Hasse figures")
    psh.set_defaults(func=cmd_show)

    pv = sub.add_parser("verify", help="verify a facet order or stored sweeps")
    pv.add_argument("--matroid")
    pv.add_argument("--order", help="JSON file: list of bases or basis indices")
    pv.add_argument("--mode", choices=["simplicial", "polytopal"], default="simplicial")
    pv.add_argument("--store", help="verify stored sweeps instead")
    pv.add_argument("--sweep", type=int, default=None)
    pv.set_defaults(func=cmd_verify)

    pa = sub.add_parser("analyze", help="structure report + labeling per stored poset")
    pa.add_argument("--store", required=True)
    pa.add_argument("--json", default=None, help="write JSON report to file ('-' for stdout)")
    pa.add_argument("--out", default=None, help="directory for Hasse figures")
    pa.set_defaults(func=cmd_analyze)

    pe = sub.add_parser("export", help="export tables, DOT, JSON and figures")
    pe.add_argument("--store", required=True)
    pe.add_argument("--out", required=True)
    pe.set_defaults(func=cmd_export)

    pserve = sub.add_parser("serve", help="serve the local JSON API (and optional web UI)")
    pserve.add_argument("--store", required=True)
    pserve.add_argument("--matroid", default=None, help="matroid JSON to start an empty session when the store file does not exist")
    pserve.add_argument("--ui", default=None, help="directory with the built web UI to mount at /ui")
    pserve.add_argument("--port", type=int, default=8765)
    pserve.add_argument("--host", default="127.0.0.1")
    pserve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MatroidSweepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
