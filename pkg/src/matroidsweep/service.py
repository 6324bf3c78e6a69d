"""Local JSON API over a session store.

Store mutation is serialised behind a lock (single writer, many readers);
a second writer arriving while a search is in flight receives 409.  All
request and response bodies are JSON; invalid parameters yield 400.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import HTMLResponse

from .errors import MatroidSweepError
from .polytope import Functional
from .report import functional_decimal, rational_str, sweep_table_rows
from .session import distinct_posets
from .sweep import ResultStore, SearchParams, run_search, validate_sweep


def _parse_rational(value) -> Fraction:
    if isinstance(value, dict):
        return Fraction(int(value["num"]), int(value["den"]))
    if isinstance(value, bool):
        raise ValueError("not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    raise ValueError(f"cannot read rational from {value!r}")


def parse_params(data: dict) -> SearchParams:
    try:
        initial = data.get("initial")
        return SearchParams(
            vfav=frozenset(int(x) for x in data["vfav"]),
            pivots=tuple(int(x) for x in data.get("pivots", [])),
            limit=int(data.get("limit", 3)),
            misses=int(data.get("misses", 50)),
            w=_parse_rational(data.get("w", 0)),
            seed=int(data.get("seed", 0)),
            initial=None
            if initial in (None, [])
            else Functional.of([_parse_rational(x) for x in initial]),
        )
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise HTTPException(status_code=400, detail=f"invalid parameters: {exc}")


def create_app(
    store_path: str | Path,
    matroid_path: str | Path | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    store_path = Path(store_path)
    if not store_path.exists() and matroid_path is not None:
        import json as _json

        from .matroid import from_json as matroid_from_json

        m = matroid_from_json(_json.loads(Path(matroid_path).read_text()))
        store_path.write_text(ResultStore(matroid=m).dumps())
    app = FastAPI(title="matroidsweep")
    state = {"store": ResultStore.from_json_file(store_path)}
    write_lock = threading.Lock()

    def sweep_payload(sid: int) -> dict:
        store = state["store"]
        if not 0 <= sid < len(store.sweeps):
            raise HTTPException(status_code=404, detail=f"no sweep {sid}")
        rec = store.sweeps[sid]
        check = validate_sweep(store.matroid, rec.sweep)
        rows = []
        for row in sweep_table_rows(store.matroid, rec):
            rows.append(
                {
                    "vertex": list(row["vertex"]),
                    "order_swept": row["order_swept"],
                    "ip_set": row["ip_set"],
                    "functional_decimal": functional_decimal(row["functional"]),
                    "functional_exact": [rational_str(c) for c in row["functional"].coords],
                }
            )
        return {
            "id": sid,
            "rows": rows,
            "regions": list(rec.regions),
            "valid": check.ok,
            "generic": check.generic,
        }

    def run_and_save(params: SearchParams) -> dict:
        if not write_lock.acquire(timeout=0.25):
            raise HTTPException(status_code=409, detail="another search is in flight")
        try:
            store = state["store"]
            before = len(store.sweeps)
            try:
                run_search(store.matroid, params, store)
            except MatroidSweepError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            store_path.write_text(store.dumps())
            return {"added": len(store.sweeps) - before, "total": len(store.sweeps)}
        finally:
            write_lock.release()

    @app.get("/matroid")
    def get_matroid() -> dict:
        store = state["store"]
        return {
            **store.matroid.to_json(),
            "rank": store.matroid.r,
            "basis_count": len(store.matroid.bases),
        }

    @app.get("/store")
    def get_store() -> dict:
        return state["store"].to_json()

    @app.post("/search")
    def post_search(body: dict) -> dict:
        return run_and_save(parse_params(body))

    @app.post("/update")
    def post_update(body: dict) -> dict:
        return run_and_save(parse_params(body))

    @app.get("/sweeps")
    def get_sweeps() -> dict:
        store = state["store"]
        return {"count": len(store.sweeps), "ids": list(range(len(store.sweeps)))}

    @app.get("/sweep/{sid}")
    def get_sweep(sid: int) -> dict:
        return sweep_payload(sid)

    @app.get("/posets")
    def get_posets() -> dict:
        store = state["store"]
        entries = distinct_posets(store)
        return {
            "posets": [
                {
                    "id": pid,
                    "iso_class": e.iso_class,
                    "sweeps": e.sweep_ids,
                    "size": len(e.poset),
                    "structure": e.structure.to_json(),
                    "labeling_status": e.labeling_json()["status"],
                }
                for pid, e in enumerate(entries)
            ]
        }

    @app.get("/poset/{pid}")
    def get_poset(pid: int) -> dict:
        store = state["store"]
        entries = distinct_posets(store)
        if not 0 <= pid < len(entries):
            raise HTTPException(status_code=404, detail=f"no poset {pid}")
        e = entries[pid]
        return {
            "id": pid,
            "iso_class": e.iso_class,
            "sweeps": e.sweep_ids,
            **e.poset.to_json(),
            "structure": e.structure.to_json(),
            "labeling": e.labeling_json(),
        }

    if ui_dir is not None and Path(ui_dir).is_dir():
        from fastapi.responses import RedirectResponse
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

        @app.get("/")
        def index() -> RedirectResponse:
            return RedirectResponse(url="/ui/")

    else:

        @app.get("/", response_class=HTMLResponse)
        def index() -> str:
            return "<html><body><p>matroidsweep API. See /matroid, /store, /posets.</p></body></html>"

    return app
