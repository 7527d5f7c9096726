import json
import re
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from parflex import gallery
from parflex.core import EXACT, Framework, Graph, ToleranceConfig
from parflex.errors import DocumentError
from parflex.io import (
    FrameworkDocument, document_to_dict, parse_document, read_document, serialize_document, write_document,
)
from parflex.symmetry import action_from_rotation


def same(a: Framework, b: Framework):
    assert a.graph == b.graph
    assert a.tolerance == b.tolerance
    assert dict(a.placement) == dict(b.placement)


@pytest.mark.parametrize("name", sorted(gallery.corpus()))
def test_corpus_round_trip(name):
    fw = gallery.corpus()[name]
    text = serialize_document(fw)
    back = parse_document(text).framework
    same(fw, back)
    assert serialize_document(back) == text


fractions = st.fractions(min_value=-100, max_value=100, max_denominator=50)


@given(st.lists(st.tuples(fractions, fractions), min_size=2, max_size=8, unique=True))
def test_exact_path_round_trip(points):
    n = len(points)
    fw = Framework(Graph([(i, i + 1) for i in range(n - 1)]), dict(enumerate(points)), EXACT)
    back = parse_document(serialize_document(fw)).framework
    same(fw, back)


def test_symmetry_block_round_trip():
    c4 = gallery.centered_square()
    action = action_from_rotation(c4, 4)
    doc = FrameworkDocument(c4, action, {"source": "test"})
    back = parse_document(serialize_document(doc))
    assert back.action.omega == action.omega and back.action.n == 4
    assert back.metadata == {"source": "test"}


def test_custom_eps_is_written():
    fw = Framework(Graph([(0, 1)]), {0: (0, 0), 1: (1, 0)}, ToleranceConfig(eps=1e-6))
    assert document_to_dict(FrameworkDocument(fw))["eps"] == 1e-6
    assert "eps" not in document_to_dict(FrameworkDocument(gallery.square()))


def test_rational_strings_accepted():
    text = json.dumps({"mode": "exact", "vertices": [{"id": 0, "x": "1/3", "y": 0}, {"id": 1, "x": "2/3", "y": "0"}],
                       "edges": [[0, 1]]})
    fw = parse_document(text).framework
    assert fw.placement[0] == (Fraction(1, 3), 0)


def base(**over):
    doc = {"format": "parflex-framework", "version": 1,
           "vertices": [{"id": 0, "x": 0, "y": 0}, {"id": 1, "x": 1, "y": 0}, {"id": 2, "x": 0, "y": 1}],
           "edges": [[0, 1], [1, 2]]}
    doc.update(over)
    return json.dumps(doc)


@pytest.mark.parametrize("text, where", [
    ("{not json", "line 1"),
    ("[]", "top level"),
    (base(format="other"), "format"),
    (base(version=7), "version"),
    (base(vertices=[{"id": 0, "x": 0}]), "vertices[0]"),
    (base(vertices=[{"id": 0, "x": "abc", "y": 0}]), "vertices[0].x"),
    (base(vertices=[{"id": 0, "x": True, "y": 0}]), "vertices[0].x"),
    (base(edges=[[0, 5]]), "edges[0][1]"),
    (base(edges=[[0]]), "edges[0]"),
    (base(symmetry={"n": 2, "omega": {"0": 1, "1": 1, "2": 2}}), "symmetry.omega"),
    (base(symmetry={"n": 2, "omega": {"0": 0, "1": 1}}), "symmetry.omega"),
    (base(symmetry={"n": 2, "omega": {"0": 0, "1": 1, "2": 2}, "rotation": "left"}), "symmetry.rotation"),
    (base(mode="fuzzy"), "mode"),
])
def test_errors_name_the_field(text, where):
    with pytest.raises(DocumentError, match=re.escape(where)):
        parse_document(text)


def test_files(tmp_path):
    path = tmp_path / "sq.json"
    write_document(gallery.square(), str(path))
    same(read_document(str(path)).framework, gallery.square())
    with pytest.raises(DocumentError, match="missing.json"):
        read_document(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    with pytest.raises(DocumentError, match="bad.json"):
        read_document(str(bad))
