import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from conftest import full_group, geometry
from gqkit.cli import main
from gqkit.documents import (
    ClaimedOrderError,
    DocumentError,
    GeometryDocument,
    GroupDocument,
    dumps,
    load_geometry,
    load_group,
    read_json,
    write_json,
)
from gqkit.geometry import verify_gq

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def w32_files(tmp_path, capsys):
    geo, grp = tmp_path / "w32.json", tmp_path / "w32-group.json"
    code, _, _ = run(capsys, "construct", "--family", "W3", "--q", 2, "-o", geo, "--group-output", grp)
    assert code == 0
    return geo, grp


@pytest.fixture(scope="module")
def gq35_files(tmp_path_factory):
    d = tmp_path_factory.mktemp("gq35")
    geo, grp = d / "gq35.json", d / "gq35-group.json"
    assert main(["construct", "--t2star", "--q", "4", "-o", str(geo), "--group-output", str(grp)]) == 0
    return geo, grp


# -- documents ---------------------------------------------------------------


@pytest.mark.parametrize("name", ["W3(2)", "W3(3)", "Q4(3)", "Qminus5(2)", "H3(2)", "GQ35"])
def test_geometry_round_trip(tmp_path, name):
    Q = geometry(name)
    doc = GeometryDocument.from_structure(Q)
    obj = doc.to_json()
    jsonschema.validate(obj, schema("geometry"))
    path = tmp_path / "g.json"
    write_json(path, obj)
    back = load_geometry(path)
    assert back.to_json() == obj
    R = verify_gq(back.structure())
    assert R.order == Q.order and R.lines == Q.lines
    assert dumps(back.to_json()) == path.read_text()


def test_group_round_trip(tmp_path):
    G = full_group("W3(2)")
    obj = GroupDocument.from_group(G).to_json()
    jsonschema.validate(obj, schema("group"))
    path = tmp_path / "grp.json"
    write_json(path, obj)
    H = load_group(path).group()
    assert H.order() == 720
    obj["order"] = 721
    with pytest.raises(ClaimedOrderError):
        GroupDocument.from_json(obj).group()


@pytest.mark.parametrize("bad", [
    [],
    {"points": 3, "lines": []},
    {"format_version": 2, "points": 3, "lines": []},
    {"format_version": 1, "points": "3", "lines": []},
    {"format_version": 1, "points": 3, "lines": [[0, "a"]]},
    {"format_version": 1, "points": 3, "lines": [], "order": [1]},
    {"format_version": 1, "kind": "group", "points": 3, "lines": []},
])
def test_geometry_document_rejects(bad):
    with pytest.raises(DocumentError):
        GeometryDocument.from_json(bad)


@pytest.mark.parametrize("bad", [
    {"format_version": 1, "degree": 3, "generators": [[0, 1]]},
    {"format_version": 1, "degree": 3, "generators": [[0, 0, 1]]},
    {"format_version": 1, "degree": 3, "generators": [], "order": 0},
    {"format_version": 1, "degree": True, "generators": []},
])
def test_group_document_rejects(bad):
    with pytest.raises(DocumentError):
        GroupDocument.from_json(bad)


def test_read_errors(tmp_path):
    with pytest.raises(DocumentError):
        read_json(tmp_path / "missing.json")
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(DocumentError, match="malformed JSON"):
        read_json(p)


# -- construct / verify --------------------------------------------------------


@pytest.mark.parametrize("argv,text", [
    (["--family", "W3", "--q", "3"], "W3(3): order (3,3), 40 points, 40 lines"),
    (["--t2star", "--q", "4"], "order (3,5), 64 points, 96 lines"),
    (["--family", "H4", "--q", "2"], "H4(2): order (4,8), 165 points, 297 lines"),
])
def test_construct(capsys, argv, text):
    code, out, _ = run(capsys, "construct", *argv)
    assert code == 0 and text in out


def test_construct_errors(capsys):
    code, _, err = run(capsys, "construct", "--family", "H4", "--q", 8)
    assert code == 1 and "cap" in err
    code, _, _ = run(capsys, "construct", "--family", "W3", "--q", 6)
    assert code == 1
    code, _, _ = run(capsys, "construct", "--t2star", "--q", 3)
    assert code == 1
    code, _, _ = run(capsys, "construct", "--family", "nope", "--q", 2)
    assert code == 2
    code, _, _ = run(capsys, "construct", "--family", "W3", "--q", 2, "-o", "/nonexistent-dir/x.json")
    assert code == 2


def test_construct_emit_parse_verify(tmp_path, capsys):
    for argv in (["--family", "W3", "--q", 2], ["--family", "Qminus5", "--q", 2], ["--t2star", "--q", 4]):
        path = tmp_path / "g.json"
        assert run(capsys, "construct", *argv, "-o", path)[0] == 0
        doc = json.loads(path.read_text())
        jsonschema.validate(doc, schema("geometry"))
        code, out, _ = run(capsys, "verify", path, "--json")
        assert code == 0
        rep = json.loads(out)
        assert rep["order"] == doc["order"] and rep["points"] == doc["points"] == rep["checks"][0]["expected"]
        assert rep["lines"] == len(doc["lines"]) == rep["checks"][1]["expected"]


def test_verify_text_and_failures(w32_files, tmp_path, capsys):
    geo, _ = w32_files
    code, out, _ = run(capsys, "verify", geo)
    assert code == 0 and out.startswith("(2,2), OK")
    doc = json.loads(geo.read_text())
    doc["lines"] = doc["lines"][1:]
    del doc["order"]
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", broken)
    assert code == 1
    detail = json.loads(err.split("\n", 1)[1])
    assert detail["code"] == "ANTIFLAG_NONE" and set(detail["witness"]) == {"point", "line"}
    bad = tmp_path / "bad.json"
    bad.write_text('{"format_version": 1, "points": ')
    assert run(capsys, "verify", bad)[0] == 2
    assert run(capsys, "verify", tmp_path / "absent.json")[0] == 2
    # a wrong claimed order is a validation failure
    doc = json.loads(geo.read_text())
    doc["order"] = [2, 3]
    claimed = tmp_path / "claimed.json"
    claimed.write_text(json.dumps(doc))
    assert run(capsys, "verify", claimed)[0] == 1


def test_verify_thin_grid(tmp_path, capsys):
    grid = {"format_version": 1, "points": 9,
            "lines": [[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7], [2, 5, 8]]}
    p = tmp_path / "grid.json"
    p.write_text(json.dumps(grid))
    assert run(capsys, "verify", p)[0] == 1
    code, out, _ = run(capsys, "verify", p, "--allow-thin")
    assert code == 0 and out.startswith("(2,1), OK")


# -- symmetry ------------------------------------------------------------------


def test_symmetry_gq35(gq35_files, capsys):
    geo, grp = gq35_files
    jsonschema.validate(json.loads(grp.read_text()), schema("group"))
    code, out, _ = run(capsys, "symmetry", geo, grp, "--test", "antiflag")
    assert code == 0 and "true (orbit 5760/5760)" in out
    code, out, _ = run(capsys, "symmetry", geo, grp, "--test", "local-arc=4", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["result"] is False and rep["group_order"] == 138240
    code, out, _ = run(capsys, "symmetry", geo, grp, "--test", "local-arc=3")
    assert code == 0 and "true" in out


def test_symmetry_w32(w32_files, capsys):
    geo, grp = w32_files
    code, out, _ = run(capsys, "symmetry", geo, grp, "--test", "local-arc=3")
    assert code == 0 and out.startswith("locally 3-arc-transitive: true")
    code, out, _ = run(capsys, "symmetry", geo, grp, "--test", "flag")
    assert code == 0 and "orbit 45/45" in out


def test_symmetry_errors(w32_files, gq35_files, tmp_path, capsys):
    geo, grp = w32_files
    assert run(capsys, "symmetry", geo, gq35_files[1], "--test", "flag")[0] == 1
    assert run(capsys, "symmetry", geo, grp, "--test", "local-arc=9")[0] == 2
    assert run(capsys, "symmetry", geo, grp, "--test", "orbit")[0] == 2
    doc = json.loads(grp.read_text())
    g = doc["generators"][0]
    g[0], g[1] = g[1], g[0]  # swap two points, leaving lines in place
    del doc["order"]
    bad = tmp_path / "bad-group.json"
    bad.write_text(json.dumps(doc))
    code, _, err = run(capsys, "symmetry", geo, bad, "--test", "flag")
    assert code == 1 and "generator 0" in err and "line" in err
    doc = json.loads(grp.read_text())
    doc["order"] = 1
    claimed = tmp_path / "claimed.json"
    claimed.write_text(json.dumps(doc))
    assert run(capsys, "symmetry", geo, claimed, "--test", "flag")[0] == 1


# -- sieve ---------------------------------------------------------------------


def test_sieve_tables(capsys):
    code, out, _ = run(capsys, "sieve", "--table", "Pi", "--json")
    rep = json.loads(out)
    jsonschema.validate(rep, schema("sieve-report"))
    assert code == 0 and len(rep["rows"]) == 11
    assert all(r["status"] == "MATCH" for r in rep["rows"])
    code, out, _ = run(capsys, "sieve", "--table", "tbl:discriminant")
    assert code == 3 and out.count("DISCREPANCY") >= 2
    assert run(capsys, "sieve", "--table", "PSU-1.2")[0] == 3
    assert run(capsys, "sieve", "--table", "C5")[0] == 0
    assert run(capsys, "sieve", "--table", "nope")[0] == 1


def test_sieve_text_and_json_agree(capsys):
    for tid in ("Pi", "C5", "PSU-1.2", "discriminant", "leftover2"):
        _, text, _ = run(capsys, "sieve", "--table", tid)
        _, js, _ = run(capsys, "sieve", "--table", tid, "--json")
        rep = json.loads(js)
        jsonschema.validate(rep, schema("sieve-report"))
        for row in rep["rows"]:
            assert row["label"] in text
        assert text.count("DISCREPANCY") >= rep["discrepancies"]


def test_sieve_order_and_pair(capsys):
    code, out, _ = run(capsys, "sieve", "--order", 57, "--t", 5)
    assert code == 0 and out.startswith("Δ=1156=34², s non-integral, no GQ")
    code, out, _ = run(capsys, "sieve", "--order", 15, "--t", 2, "--json")
    assert json.loads(out)["s"] == 2
    code, out, _ = run(capsys, "sieve", "--pair", "2,3")
    assert code == 0 and "infeasible" in out and "divisibility: FAIL" in out
    assert run(capsys, "sieve", "--order", 57)[0] == 1
    assert run(capsys, "sieve", "--pair", "2")[0] == 2
    assert run(capsys, "sieve", "--order", 57, "--t", 5, "--seed", -1)[0] == 2


# -- determinism and the installed entry point ---------------------------------


def test_outputs_byte_identical(tmp_path, capsys):
    outs = []
    for i in range(2):
        geo, grp = tmp_path / f"g{i}.json", tmp_path / f"G{i}.json"
        run(capsys, "construct", "--family", "Qminus5", "--q", 2, "-o", geo, "--group-output", grp)
        _, sym, _ = run(capsys, "symmetry", geo, grp, "--test", "local-arc=3", "--json", "--seed", 99)
        _, tbl, _ = run(capsys, "sieve", "--table", "leftover2", "--json")
        outs.append((geo.read_bytes(), grp.read_bytes(), sym, tbl))
    assert outs[0] == outs[1]
    assert b"\r\n" not in outs[0][0]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gqkit", "sieve", "--pair", "3,5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "feasible" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "gqkit", "--version"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("gqkit ")
