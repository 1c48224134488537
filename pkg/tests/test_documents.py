"""Tests for the JSON document layer: parsing, emission, bundled corpus."""

import json

import pytest
from gmpy2 import mpq

from splinedim.documents import (
    ComplexDocument,
    DocumentError,
    EdgeSpec,
    IdealDocument,
    bundled_names,
    emit_document,
    load_bundled,
    load_document,
    parse_document,
    to_ideal,
    to_star_complex,
)


def make_doc(**overrides):
    raw = {
        "version": 1,
        "edges": [{"curve": "x"}, {"curve": "y", "smoothness": 2}],
        "default_smoothness": 1,
        "vertex": [0, 0],
    }
    raw.update(overrides)
    return raw


class TestParsing:
    def test_minimal_complex(self):
        doc = parse_document(json.dumps({"version": 1,
                                         "edges": [{"curve": "x"},
                                                   {"curve": "y"}]}))
        assert isinstance(doc, ComplexDocument)
        assert doc.vertex == (mpq(0), mpq(0))
        assert doc.default_smoothness == 0
        assert doc.edges == (EdgeSpec("x"), EdgeSpec("y"))

    def test_minimal_ideal(self):
        doc = parse_document(json.dumps({"version": 1, "ideal": ["x^2", "y*z"]}))
        assert isinstance(doc, IdealDocument)
        assert doc.ideal == ("x^2", "y*z")

    def test_rational_vertex(self):
        doc = parse_document(json.dumps(make_doc(vertex=["1/2", -3])))
        assert doc.vertex == (mpq(1, 2), mpq(-3))

    def test_invalid_json(self):
        with pytest.raises(DocumentError, match="invalid JSON"):
            parse_document("{not json")

    def test_non_object(self):
        with pytest.raises(DocumentError, match="JSON object"):
            parse_document("[1, 2]")

    @pytest.mark.parametrize("version", [0, -1, "1", 1.0, True, None])
    def test_bad_version(self, version):
        raw = make_doc()
        raw["version"] = version
        with pytest.raises(DocumentError, match="version"):
            parse_document(json.dumps(raw))

    def test_future_version(self):
        raw = make_doc()
        raw["version"] = 99
        with pytest.raises(DocumentError, match="unsupported document version 99"):
            parse_document(json.dumps(raw))

    def test_both_edges_and_ideal(self):
        raw = make_doc()
        raw["ideal"] = ["x"]
        with pytest.raises(DocumentError, match="exactly one of"):
            parse_document(json.dumps(raw))

    def test_neither_edges_nor_ideal(self):
        with pytest.raises(DocumentError, match="exactly one of"):
            parse_document(json.dumps({"version": 1}))

    def test_unknown_top_level_key(self):
        with pytest.raises(DocumentError, match="unknown keys color"):
            parse_document(json.dumps(make_doc(color="red")))

    def test_unknown_edge_key(self):
        raw = make_doc(edges=[{"curve": "x", "weight": 3}, {"curve": "y"}])
        with pytest.raises(DocumentError, match="edge 1: unknown keys weight"):
            parse_document(json.dumps(raw))

    def test_single_edge_rejected(self):
        raw = make_doc(edges=[{"curve": "x"}])
        with pytest.raises(DocumentError, match="at least two"):
            parse_document(json.dumps(raw))

    def test_unparseable_curve_names_edge(self):
        raw = make_doc(edges=[{"curve": "x"}, {"curve": "y +"}])
        with pytest.raises(DocumentError, match="edge 2"):
            parse_document(json.dumps(raw))

    def test_curve_must_be_string(self):
        raw = make_doc(edges=[{"curve": "x"}, {"curve": 7}])
        with pytest.raises(DocumentError, match="edge 2: curve must be"):
            parse_document(json.dumps(raw))

    def test_float_vertex_rejected(self):
        raw = make_doc(vertex=[0.5, 0])
        with pytest.raises(DocumentError, match="integer or a rational string"):
            parse_document(json.dumps(raw))

    def test_bool_vertex_rejected(self):
        raw = make_doc(vertex=[True, 0])
        with pytest.raises(DocumentError, match="integer or a rational string"):
            parse_document(json.dumps(raw))

    def test_bad_rational_string(self):
        raw = make_doc(vertex=["1/0", 0])
        with pytest.raises(DocumentError, match="not an exact rational"):
            parse_document(json.dumps(raw))

    @pytest.mark.parametrize("sm", [-1, 1.5, "2", True])
    def test_bad_smoothness(self, sm):
        raw = make_doc(default_smoothness=sm)
        with pytest.raises(DocumentError, match="smoothness"):
            parse_document(json.dumps(raw))

    def test_inhomogeneous_ideal_generator(self):
        raw = {"version": 1, "ideal": ["x^2 + y"]}
        with pytest.raises(DocumentError, match="generator 1: must be homogeneous"):
            parse_document(json.dumps(raw))

    def test_ideal_generator_must_be_string(self):
        raw = {"version": 1, "ideal": [3]}
        with pytest.raises(DocumentError, match="generator 1: expected"):
            parse_document(json.dumps(raw))

    def test_empty_ideal_rejected(self):
        raw = {"version": 1, "ideal": []}
        with pytest.raises(DocumentError, match="nonempty"):
            parse_document(json.dumps(raw))


class TestSmoothnessList:
    def test_per_edge_with_default_fill(self):
        doc = parse_document(json.dumps(make_doc()))
        assert doc.smoothness_list() == (1, 2)

    def test_uniform_override(self):
        doc = parse_document(json.dumps(make_doc()))
        assert doc.smoothness_list(0) == (0, 0)
        assert doc.smoothness_list(4) == (4, 4)


class TestEmission:
    def test_round_trip_complex(self):
        doc = parse_document(json.dumps(make_doc(name="t", description="d",
                                                 vertex=["1/2", -3])))
        assert parse_document(emit_document(doc)) == doc

    def test_round_trip_ideal(self):
        doc = parse_document(json.dumps({"version": 1, "name": "i",
                                         "ideal": ["x^2", "y*z"]}))
        assert parse_document(emit_document(doc)) == doc

    def test_emission_is_deterministic(self):
        doc = parse_document(json.dumps(make_doc()))
        assert emit_document(doc) == emit_document(doc)

    def test_rational_vertex_serialized_as_string(self):
        doc = parse_document(json.dumps(make_doc(vertex=["1/2", 3])))
        raw = json.loads(emit_document(doc))
        assert raw["vertex"] == ["1/2", 3]

    def test_load_document_round_trip(self, tmp_path):
        doc = parse_document(json.dumps(make_doc()))
        path = tmp_path / "doc.json"
        path.write_text(emit_document(doc), encoding="utf-8")
        assert load_document(path) == doc


class TestBundled:
    def test_corpus_present(self):
        names = bundled_names()
        assert len(names) >= 19
        assert "line-two-circles" in names
        assert "sextics-tangent-cone-gap" in names

    def test_every_bundled_document_loads_and_converts(self):
        for name in bundled_names():
            doc = load_bundled(name)
            assert parse_document(emit_document(doc)) == doc
            if isinstance(doc, ComplexDocument):
                complex_ = to_star_complex(doc, 0)
                assert len(complex_.edges) >= 2
            else:
                ideal = to_ideal(doc)
                assert len(ideal.gens) >= 1

    def test_unknown_name_lists_available(self):
        with pytest.raises(DocumentError, match="no bundled document.*available:"):
            load_bundled("no-such-document")
