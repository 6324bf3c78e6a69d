import json
import threading

import pytest
from fastapi.testclient import TestClient

from matroidsweep.cli import main
from matroidsweep.service import create_app

from conftest import (
    CATALAN3_BROKEN_WITNESSES,
    GRAPHIC13_BASES,
    GRAPHIC13_LINE_TABLE,
)


@pytest.fixture()
def graphic13_store(tmp_path):
    m_path = tmp_path / "g13.json"
    main(["matroid", "from-bases", "6", json.dumps(GRAPHIC13_BASES), "-o", str(m_path)])
    store = tmp_path / "store.json"
    main(
        [
            "search", "--matroid", str(m_path), "--vfav", "0,1,2",
            "--initial", "1,2,3,4,5,6", "--store", str(store),
        ]
    )
    return store


@pytest.fixture()
def catalan_store(tmp_path):
    m_path = tmp_path / "cat.json"
    main(["matroid", "catalan", "3", "-o", str(m_path)])
    store = tmp_path / "cstore.json"
    main(
        [
            "search", "--matroid", str(m_path), "--vfav", "0,1,2",
            "--initial", "1,2,3,4,5,6", "--store", str(store),
        ]
    )
    # ingest the published broken-line sweep by replaying its witnesses
    from matroidsweep import ResultStore, sweep_from_witness_segments
    from matroidsweep.sweep import SweepRecord, region_hashes, sweep_restriction_sets

    s = ResultStore.from_json_file(store)
    sweep = sweep_from_witness_segments(
        s.matroid,
        {0, 1, 2},
        [(pos, __import__("conftest").functional_of(coords)) for pos, coords in CATALAN3_BROKEN_WITNESSES],
    )
    s.sweeps.append(
        SweepRecord(
            sweep=sweep,
            rsets=sweep_restriction_sets(s.matroid, sweep),
            regions=region_hashes(s.matroid, sweep),
        )
    )
    store.write_text(s.dumps())
    return store


def test_matroid_and_store_endpoints(graphic13_store):
    client = TestClient(create_app(graphic13_store))
    m = client.get("/matroid").json()
    assert m["n"] == 6 and m["basis_count"] == 13 and m["rank"] == 3
    s = client.get("/store").json()
    assert s["schema"] == 1 and len(s["sweeps"]) == 1


def test_sweep_payload_matches_table(graphic13_store):
    client = TestClient(create_app(graphic13_store))
    payload = client.get("/sweep/0").json()
    assert payload["valid"] is True
    rows = payload["rows"]
    assert len(rows) == 13
    for row, (chi, ip) in zip(rows, GRAPHIC13_LINE_TABLE):
        assert tuple(row["vertex"]) == chi
        assert row["ip_set"] == ip
    assert rows[0]["functional_decimal"] == "(1.00, 2.00, 3.00, 4.00, 5.00, 6.00)"
    assert client.get("/sweep/99").status_code == 404


def test_search_endpoint_merges_line_shelling(graphic13_store):
    client = TestClient(create_app(graphic13_store))
    body = {
        "vfav": [0, 1, 2],
        "pivots": [],
        "limit": 3,
        "misses": 50,
        "w": 0,
        "seed": 1,
        "initial": [1, 2, 3, 4, 5, 6],
    }
    r = client.post("/search", json=body)
    assert r.status_code == 200 and r.json() == {"added": 0, "total": 1}
    r2 = client.post("/update", json={**body, "pivots": [1], "seed": 5, "w": "5"})
    assert r2.status_code == 200 and r2.json()["total"] >= 1
    # the store file was persisted
    data = json.loads(graphic13_store.read_text())
    assert len(data["sweeps"]) == r2.json()["total"]


def test_search_endpoint_validates(graphic13_store):
    client = TestClient(create_app(graphic13_store))
    r = client.post("/search", json={"vfav": [0, 1], "pivots": []})
    assert r.status_code == 400
    r = client.post("/search", json={"pivots": []})
    assert r.status_code == 400
    r = client.post("/search", json={"vfav": [0, 1, 2], "w": "1/0"})
    assert r.status_code == 400


def test_poset_endpoints(graphic13_store, catalan_store):
    client = TestClient(create_app(graphic13_store))
    listing = client.get("/posets").json()["posets"]
    assert len(listing) == 1 and listing[0]["labeling_status"] == "no_labeling"
    poset = client.get("/poset/0").json()
    assert poset["labeling"]["status"] == "no_labeling"
    assert poset["labeling"]["blocked"] == [9, 10, 11, 12]
    assert client.get("/poset/7").status_code == 404

    cat_client = TestClient(create_app(catalan_store))
    listing = cat_client.get("/posets").json()["posets"]
    assert len(listing) == 2
    labeled = [p for p in listing if p["labeling_status"] == "labeled"]
    assert len(labeled) == 1
    payload = cat_client.get(f"/poset/{labeled[0]['id']}").json()
    assert payload["labeling"]["status"] == "labeled"
    assert set(payload["labeling"]["monomials"].values()) >= {"1", "x3", "x4", "x5"}


def test_concurrent_write_conflict(graphic13_store):
    app = create_app(graphic13_store)
    client = TestClient(app)
    # simulate an in-flight search by making run_search block until released
    import matroidsweep.service as service_mod

    release = threading.Event()
    started = threading.Event()
    original = service_mod.run_search

    def slow_run_search(m, params, store=None):
        started.set()
        release.wait(timeout=5)
        return original(m, params, store)

    app_module_run = service_mod.run_search
    service_mod.run_search = slow_run_search
    try:
        body = {"vfav": [0, 1, 2], "pivots": [], "initial": [1, 2, 3, 4, 5, 6]}
        results = {}

        def first():
            results["first"] = client.post("/search", json=body).status_code

        t = threading.Thread(target=first)
        t.start()
        assert started.wait(timeout=5)
        second = client.post("/search", json=body)
        release.set()
        t.join(timeout=10)
        assert second.status_code == 409
        assert results["first"] == 200
    finally:
        service_mod.run_search = app_module_run
        release.set()
