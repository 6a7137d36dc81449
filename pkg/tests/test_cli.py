import json
import os

import pytest

from gcat.cli import main

DEFS = os.path.join(os.path.dirname(__file__), os.pardir, "definitions")


def path(name):
    return os.path.join(DEFS, name)


@pytest.mark.parametrize("name", ["trivial.json", "c2_c4_central.json", "s3_c3.json",
                                  "a4_c3_twisted.json", "c2_trivial.json"])
def test_validate_corpus_exit_zero(name, capsys):
    assert main(["validate", path(name)]) == 0
    out = capsys.readouterr().out
    assert "all validators passed" in out


def test_validate_broken_file_exit_one(tmp_path, capsys):
    doc = {"groups": [{"id": "g", "table": [[0, 1], [1, 0]]}],
           "homs": [{"id": "bad", "dom": "g", "cod": "g", "map": [1, 0]}]}
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(doc))
    assert main(["validate", str(f)]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "hom.identity" in out


def test_parse_error_exit_two(tmp_path, capsys):
    f = tmp_path / "broken.json"
    f.write_text("{ nope")
    assert main(["validate", str(f)]) == 2


def test_missing_file_exit_two(capsys):
    assert main(["validate", "/nonexistent/x.json"]) == 2


def test_dangling_reference_exit_two(tmp_path, capsys):
    f = tmp_path / "dangling.json"
    f.write_text(json.dumps({"homs": [{"id": "f", "dom": "x", "cod": "x", "map": [0]}]}))
    assert main(["validate", str(f)]) == 2


def test_braiding_search_two_solutions(capsys):
    code = main(["braiding-search", path("c2_trivial.json"),
                 "--xmod", "c2_zero", "--grading", "trivial_grading"])
    assert code == 0
    out = capsys.readouterr().out
    assert "2 solutions" in out


def test_braiding_search_capacity_exit_three(capsys):
    code = main(["braiding-search", path("s3_c3.json"),
                 "--xmod", "c3_s3", "--grading", "sign_grading", "--bound", "10"])
    assert code == 3


def test_strictify_roundtrip_validates(tmp_path, capsys):
    out_file = tmp_path / "strict.json"
    code = main(["strictify", path("c2_trivial.json"), "--g-category", "c2_zero_cat",
                 "--output", str(out_file)])
    assert code == 0
    err = capsys.readouterr().err
    assert "strict action: yes" in err
    assert main(["validate", str(out_file)]) == 0
    emitted = json.loads(out_file.read_text())
    gc = emitted["g_categories"][0]
    cat = emitted["categories"][0]
    identities = cat["identities"]
    for plane in gc["psi"]:
        for row in plane:
            for m in row:
                assert m in identities
    for plane in gc["phi"]:
        for row in plane:
            for m in row:
                assert m in identities


def test_strictify_capacity_exit_three(capsys):
    code = main(["strictify", path("c2_trivial.json"), "--g-category", "c2_zero_cat",
                 "--enumerate-bound", "1"])
    assert code == 3


def test_transport_command(capsys):
    code = main(["transport", path("c2_trivial.json"), "--braiding", "twisted_swap"])
    assert code == 0
    out = capsys.readouterr().out
    assert "strict identities" in out and "FAIL" not in out


def test_extract_command(tmp_path, capsys):
    out_file = tmp_path / "extracted.json"
    code = main(["extract", path("s3_c3.json"), "--g-category", "c3_s3_cat",
                 "--output", str(out_file)])
    assert code == 0
    err = capsys.readouterr().err
    assert "isomorphic" in err
    assert main(["validate", str(out_file)]) == 0


def test_report_json_format(capsys):
    code = main(["report", path("c2_trivial.json"), "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert any(s["id"] == "twisted_swap" for s in payload["stanzas"])


def test_report_text_format(capsys):
    code = main(["report", path("s3_c3.json"), "--format", "text"])
    assert code == 0
    out = capsys.readouterr().out
    assert "sign_grading" in out


def test_unknown_g_category_exit_two(capsys):
    code = main(["strictify", path("c2_trivial.json"), "--g-category", "missing"])
    assert code == 2
