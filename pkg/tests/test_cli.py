import json

import pytest

from matroidsweep.cli import main

from conftest import GRAPHIC13_BASES, GRAPHIC13_LINE_TABLE


@pytest.fixture()
def graphic13_file(tmp_path):
    path = tmp_path / "g13.json"
    rc = main(["matroid", "from-bases", "6", json.dumps(GRAPHIC13_BASES), "-o", str(path)])
    assert rc == 0
    return path


def test_matroid_constructors(tmp_path, capsys):
    assert main(["matroid", "uniform", "4", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 4 and len(data["bases"]) == 6

    assert main(["matroid", "catalan", "3", "-o", str(tmp_path / "c.json")]) == 0
    cat = json.loads((tmp_path / "c.json").read_text())
    assert len(cat["bases"]) == 14

    assert main(["matroid", "graphic", "--vertices", "3", "--edges", "0-1,1-2,2-0"]) == 0
    tri = json.loads(capsys.readouterr().out)
    assert len(tri["bases"]) == 3


def test_matroid_constructor_error(capsys):
    assert main(["matroid", "from-bases", "3", "[[0,1],[2]]"]) == 1
    assert "error" in capsys.readouterr().err


def test_search_show_roundtrip(tmp_path, graphic13_file, capsys):
    store = tmp_path / "store.json"
    rc = main(
        [
            "search", "--matroid", str(graphic13_file), "--vfav", "0,1,2",
            "--initial", "1,2,3,4,5,6", "--seed", "7", "--store", str(store),
        ]
    )
    assert rc == 0
    capsys.readouterr()
    assert main(["show", "--store", str(store)]) == 0
    out = capsys.readouterr().out
    for chi, ip in GRAPHIC13_LINE_TABLE:
        row = "(" + ", ".join(map(str, chi)) + ")"
        assert row in out
        assert "[" + ", ".join(map(str, ip)) + "]" in out
    assert "(1.00, 2.00, 3.00, 4.00, 5.00, 6.00)" in out


def test_search_determinism_bytes(tmp_path, graphic13_file):
    args = [
        "--matroid", str(graphic13_file), "--vfav", "0,1,2", "--pivots", "1,2",
        "--limit", "3", "--misses", "50", "--w", "5", "--seed", "7",
        "--initial", "1,2,3,4,5,6",
    ]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["search", *args, "--store", str(a)]) == 0
    assert main(["search", *args, "--store", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_update_never_removes(tmp_path, graphic13_file):
    store = tmp_path / "store.json"
    main(
        [
            "search", "--matroid", str(graphic13_file), "--vfav", "0,1,2",
            "--initial", "1,2,3,4,5,6", "--store", str(store),
        ]
    )
    before = json.loads(store.read_text())["sweeps"]
    rc = main(
        [
            "update", "--store", str(store), "--vfav", "0,1,2", "--pivots", "1",
            "--limit", "2", "--misses", "30", "--w", "5", "--seed", "3",
            "--initial", "1,2,3,4,5,6",
        ]
    )
    assert rc == 0
    after = json.loads(store.read_text())["sweeps"]
    assert after[: len(before)] == before and len(after) >= len(before)


def test_store_roundtrip_bit_identical(tmp_path, graphic13_file):
    store = tmp_path / "store.json"
    main(
        [
            "search", "--matroid", str(graphic13_file), "--vfav", "0,1,2",
            "--initial", "1,2,3,4,5,6", "--store", str(store),
        ]
    )
    from matroidsweep import ResultStore

    text = store.read_text()
    assert ResultStore.from_json(json.loads(text)).dumps() == text


def test_verify_simplicial_and_polytopal(tmp_path, capsys):
    m_path = tmp_path / "u42.json"
    main(["matroid", "uniform", "4", "2", "-o", str(m_path)])
    order_path = tmp_path / "order.json"
    order_path.write_text(json.dumps([[0, 1], [1, 2], [2, 3], [0, 3], [0, 2], [1, 3]]))
    assert main(["verify", "--matroid", str(m_path), "--order", str(order_path)]) == 0
    assert "True" in capsys.readouterr().out
    rc = main(["verify", "--matroid", str(m_path), "--order", str(order_path), "--mode", "polytopal"])
    assert rc == 1
    assert "False" in capsys.readouterr().out
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([[0, 1], [2, 3]]))
    assert main(["verify", "--matroid", str(m_path), "--order", str(bad)]) == 1


def test_verify_store_sweeps(tmp_path, graphic13_file, capsys):
    store = tmp_path / "store.json"
    main(
        [
            "search", "--matroid", str(graphic13_file), "--vfav", "0,1,2",
            "--initial", "1,2,3,4,5,6", "--store", str(store),
        ]
    )
    assert main(["verify", "--store", str(store)]) == 0
    assert "ok" in capsys.readouterr().out


def test_analyze_and_export(tmp_path, graphic13_file, capsys):
    store = tmp_path / "store.json"
    main(
        [
            "search", "--matroid", str(graphic13_file), "--vfav", "0,1,2",
            "--initial", "1,2,3,4,5,6", "--store", str(store),
        ]
    )
    report = tmp_path / "report.json"
    assert main(["analyze", "--store", str(store), "--json", str(report)]) == 0
    out = capsys.readouterr().out
    assert "greedoid=True" in out and "labeling=no_labeling" in out
    payload = json.loads(report.read_text())
    assert payload["posets"][0]["labeling"]["blocked"] == [9, 10, 11, 12]

    outdir = tmp_path / "exp"
    assert main(["export", "--store", str(store), "--out", str(outdir)]) == 0
    files = {p.name for p in outdir.iterdir()}
    assert "sweep_000.csv" in files and "poset_000.png" in files and "poset_000.dot" in files
    assert "poset_000.json" in files
    dot = (outdir / "poset_000.dot").read_text()
    assert "digraph" in dot and 'color="red"' in dot


def test_show_writes_report_files(tmp_path, graphic13_file):
    store = tmp_path / "store.json"
    main(
        [
            "search", "--matroid", str(graphic13_file), "--vfav", "0,1,2",
            "--initial", "1,2,3,4,5,6", "--store", str(store),
        ]
    )
    outdir = tmp_path / "figs"
    assert main(["show", "--store", str(store), "--out", str(outdir)]) == 0
    names = {p.name for p in outdir.iterdir()}
    assert "sweep_000.csv" in names and "poset_000.png" in names


def test_face_lattice_export(tmp_path, capsys):
    m_path = tmp_path / "u42.json"
    main(["matroid", "uniform", "4", "2", "-o", str(m_path)])
    assert main(["face-lattice", "--matroid", str(m_path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["faces"]) == 28  # empty + 6 + 12 + 8 + full
    assert len(data["covers"]) == 28
    empties = [f for f in data["faces"] if f == []]
    assert len(empties) == 1


def test_verify_accepts_basis_indices(tmp_path):
    m_path = tmp_path / "u42.json"
    main(["matroid", "uniform", "4", "2", "-o", str(m_path)])
    order_path = tmp_path / "order.json"
    order_path.write_text(json.dumps([0, 1, 2, 3, 4, 5]))
    assert main(["verify", "--matroid", str(m_path), "--order", str(order_path)]) == 0


def test_corrupt_store(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert main(["show", "--store", str(bad)]) == 1
    notjson = tmp_path / "notjson.json"
    notjson.write_text("{oops")
    assert main(["show", "--store", str(notjson)]) == 1
