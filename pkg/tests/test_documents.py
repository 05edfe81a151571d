import json

import pytest

from lietriple import documents as docs
from lietriple.cli import fixture_names, fixture_text
from lietriple.exactla import DimensionError
from lietriple.families import a2, nilpotent_extension, packaged_fixtures
from lietriple.lya import LYAlgebra, verify_ly


def test_packaged_fixtures_round_trip():
    objs = packaged_fixtures()
    assert sorted(objs) == fixture_names()
    for name, obj in objs.items():
        assert docs.parse(docs.render(obj)) == obj, name
        # files on disk are the canonical renders
        assert fixture_text(name) == docs.render(obj), name


def test_render_is_deterministic():
    e = nilpotent_extension()
    assert docs.render(e) == docs.render(nilpotent_extension())
    data = json.loads(docs.render(a2()))
    assert data["kind"] == "lya" and data["version"] == "1"
    assert data["payload"]["binary"] == [[[0, 1, 0], "1"], [[1, 0, 0], "-1"]]


def _doc(payload, kind="lya"):
    return {"kind": kind, "version": "1", "payload": payload}


def test_schema_errors_carry_a_path():
    cases = [
        ({"kind": "lya", "version": "1"}, "$", "payload"),
        ({"kind": "nope", "version": "1", "payload": {}}, "$.kind", "unknown kind"),
        ({"kind": "lya", "version": "2", "payload": {}}, "$.version", "unsupported"),
        (_doc({"dim": 2, "binary": [], "ternary": [], "extra": 1}), "$.payload", "extra"),
        (_doc({"dim": -1, "binary": [], "ternary": []}), "$.payload.dim", "integer"),
        (_doc({"dim": 2, "binary": [[[0, 1, 0], "x"]], "ternary": []}),
         "$.payload.binary[0][1]", "p/q"),
        (_doc({"dim": 2, "binary": [[[0, 1, 0], "1/0"]], "ternary": []}),
         "$.payload.binary[0][1]", "denominator"),
        (_doc({"dim": 2, "binary": [[[0, 1, 0], 0.5]], "ternary": []}),
         "$.payload.binary[0][1]", "p/q"),
        (_doc({"dim": 2, "binary": [[[0, 1, 0], "1"], [[0, 1, 0], "2"]], "ternary": []}),
         "$.payload.binary[1]", "repeated"),
    ]
    for doc, path, words in cases:
        with pytest.raises(docs.SchemaError) as info:
            docs.from_document(doc)
        assert info.value.path == path, doc
        assert words in str(info.value), doc


def test_index_errors_are_dimension_errors():
    with pytest.raises(DimensionError):
        docs.from_document(_doc({"dim": 2, "binary": [[[0, 2, 0], "1"]], "ternary": []}))
    with pytest.raises(DimensionError):
        docs.from_document(_doc({"dim": 2, "binary": [[[0, 1], "1"]], "ternary": []}))


def test_expected_kind_and_bad_json():
    text = docs.render(a2())
    assert docs.parse(text, expect="lya") == a2()
    with pytest.raises(docs.SchemaError):
        docs.parse(text, expect="rep")
    with pytest.raises(docs.SchemaError) as info:
        docs.parse("not json")
    assert info.value.path == "$"


def test_rational_strings():
    doc = _doc({"dim": 2, "binary": [[[0, 1, 0], "-3/6"], [[1, 0, 0], 1]], "ternary": []})
    a = docs.from_document(doc, expect="lya")
    assert str(a.binary[0, 1, 0]) == "-1/2"
    assert docs.render(a).count('"-1/2"') == 1


def test_axioms_are_left_to_verify():
    # loading does not check axioms, so broken inputs can still be reported on
    doc = _doc({"dim": 2, "binary": [[[0, 0, 1], "1"]], "ternary": []})
    e = verify_ly(docs.from_document(doc)).entry("LY1")
    assert not e.passed and e.witness == (0, 0)


def test_save_and_load(tmp_path):
    p = tmp_path / "x.json"
    docs.save(LYAlgebra(3), p)
    assert docs.load(p) == LYAlgebra(3)
