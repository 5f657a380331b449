"""Command-line interface: output shapes and exit codes."""

import json

from click.testing import CliRunner

from knots.cli import main


def _run(*args):
    return CliRunner().invoke(main, args)


def test_compute_conway_of_catalog_name():
    res = _run("compute", "trefoil-r", "--inv", "conway")
    assert res.exit_code == 0
    assert "1 + t^2" in res.output


def test_compute_literal_unknot():
    res = _run("compute", "()", "--inv", "conway")
    assert res.exit_code == 0
    assert res.output.splitlines()[-1].endswith("1")


def test_compute_defaults_cover_applicable_invariants():
    res = _run("compute", "fig8")
    assert res.exit_code == 0
    for key in ("conway", "casson", "arf", "colorings"):
        assert key in res.output
    res = _run("compute", "hopf+")
    assert "lk2" in res.output and "arf" not in res.output


def test_compute_json_schema():
    res = _run("compute", "hopf-", "--format", "json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["name"] == "hopf-"
    assert doc["code"] == "U1- O2- ; U2- O1-"
    assert doc["invariants"]["conway"]["coeffs"] == [0, -1]
    assert doc["invariants"]["lk"] == [[0, -1], [-1, 0]]


def test_compute_arf_of_link_is_domain_error():
    res = _run("compute", "hopf+", "--inv", "arf")
    assert res.exit_code == 3


def test_compute_parse_error():
    res = _run("compute", "O1+ U2")
    assert res.exit_code == 2


def test_compute_unknown_name():
    res = _run("compute", "granny")
    assert res.exit_code == 3


def test_fuzz_passes_on_catalog_knot():
    res = _run("fuzz", "trefoil-r", "--steps", "60", "--seed", "7")
    assert res.exit_code == 0
    assert "PASS" in res.output


def test_fuzz_break_hook_fails():
    res = _run("fuzz", "trefoil-r", "--steps", "5", "--break-invariant")
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_fuzz_json_reports_walk_shape():
    res = _run("fuzz", "hopf+", "--steps", "30", "--format", "json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["pass"] is True
    assert doc["steps"] == 30
    assert doc["mismatches"] == []


def test_geom_linked_triangles_trials():
    res = _run("geom", "linked-triangles", "--seed", "1", "--trials", "4")
    assert res.exit_code == 0
    assert res.output.count("trial") == 4
    assert "4 witnesses found" in res.output


def test_geom_k7_trials():
    res = _run("geom", "k7", "--seed", "1", "--trials", "2")
    assert res.exit_code == 0
    assert res.output.count("parity 1") == 2


def test_geom_k7_coplanar_file_degeneracy(tmp_path):
    pts = [[float(k % 3), float(k // 3), 0.0] for k in range(7)]
    f = tmp_path / "flat.json"
    f.write_text(json.dumps(pts))
    res = _run("geom", "k7", "--points", str(f))
    assert res.exit_code == 4


def test_geom_json_keys(tmp_path):
    res = _run("geom", "k7", "--seed", "2", "--trials", "1", "--format", "json")
    doc = json.loads(res.output)
    assert "witness" in doc and "parity" in doc


def test_catalog_listing():
    res = _run("catalog")
    assert res.exit_code == 0
    assert "trefoil-r" in res.output and "borromean" in res.output


def test_catalog_single_entry_shows_goldens():
    res = _run("catalog", "5_1")
    assert res.exit_code == 0
    assert "conway" in res.output and "[1, 0, 3, 0, 1]" in res.output


def test_catalog_json():
    res = _run("catalog", "whitehead", "--format", "json")
    doc = json.loads(res.output)
    assert doc["name"] == "whitehead"
    assert doc["invariants"]["conway"] == [0, 0, 0, -1]
