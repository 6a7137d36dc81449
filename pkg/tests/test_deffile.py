import json
import os

import pytest

from gcat import deffile
from gcat.deffile import (DanglingReferenceError, DefSyntaxError, DimensionError,
                          DuplicateIdError, InvalidStanzaError, parse)

DEFS = os.path.join(os.path.dirname(__file__), os.pardir, "definitions")


def corpus_path(name):
    return os.path.join(DEFS, name)


CORPUS = ["trivial.json", "c2_c4_central.json", "s3_c3.json",
          "a4_c3_twisted.json", "c2_trivial.json"]


def test_empty_document_is_valid():
    doc = parse("{}")
    assert doc.sections == {}
    assert doc.emit() == {}


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_parses_and_validates(name):
    doc = parse(corpus_path(name))
    for sid, path, rep in deffile.iter_validation(doc):
        assert rep.ok, f"{path}: {rep.summary()}"


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_roundtrip(name):
    doc = parse(corpus_path(name))
    again = parse(doc.emit())
    assert again == doc
    assert parse(doc.to_json()) == doc


def test_syntax_error_has_location():
    with pytest.raises(DefSyntaxError) as exc:
        parse("{ not json")
    assert "line" in str(exc.value)


def test_dangling_reference_names_the_id():
    with pytest.raises(DanglingReferenceError) as exc:
        parse(json.dumps({"homs": [{"id": "f", "dom": "nope", "cod": "nope",
                                    "map": [0]}]}))
    assert "nope" in str(exc.value)
    assert exc.value.path == "homs[0].dom"


def test_duplicate_id_rejected():
    text = json.dumps({"groups": [
        {"id": "g", "table": [[0]]},
        {"id": "g", "table": [[0]]}]})
    with pytest.raises(DuplicateIdError):
        parse(text)


def test_dimension_mismatch_distinct_class():
    text = json.dumps({"groups": [{"id": "g", "order": 3, "table": [[0]]}]})
    with pytest.raises(DimensionError):
        parse(text)


def test_invalid_group_table_reports():
    text = json.dumps({"groups": [{"id": "g", "table": [[0, 1], [0, 1]]}]})
    with pytest.raises(InvalidStanzaError) as exc:
        parse(text)
    assert exc.value.report is not None


def test_invalid_hom_caught_by_validation():
    text = json.dumps({
        "groups": [{"id": "c2", "table": [[0, 1], [1, 0]]}],
        "homs": [{"id": "bad", "dom": "c2", "cod": "c2", "map": [1, 0]}]})
    with pytest.raises(InvalidStanzaError):
        parse(text)
    doc = parse(text, validate=False)
    reports = {sid: rep for sid, _, rep in deffile.iter_validation(doc)}
    assert not reports["bad"].ok


def test_unknown_section_rejected():
    with pytest.raises(DefSyntaxError):
        parse(json.dumps({"gadgets": []}))


def test_g_category_from_weak_action_matches_manual():
    doc = parse(corpus_path("c2_trivial.json"))
    gc = doc.g_categories["c2_zero_cat"]
    from gcat.gaction import induced_g_action
    manual = induced_g_action(doc.weak_actions["twisted"])
    assert gc.act_obj == manual.act_obj
    assert gc.phi == manual.phi


def test_grading_without_weak_action_uses_trivial_one():
    doc = parse(corpus_path("c2_trivial.json"))
    raw = doc.emit()
    raw["gradings"].append({"id": "bare", "xmod": "c2_zero", "hom": "gr_trivial"})
    doc2 = parse(raw)
    bare = doc2.gradings["bare"]
    assert bare.weak_action.is_strict()
    assert bare.validate().ok
