import json
import random

import pytest

from qmut import Quiver, parse_quiver, quiver_to_document, serialize_quiver
from qmut.errors import NonpositiveWeightError, ParseError, UnknownVertexError

from conftest import random_quiver


def test_five_vertex_document(five_vertex):
    doc = quiver_to_document(five_vertex)
    assert [v["id"] for v in doc["vertices"]] == ["A", "B", "C", "D", "E"]
    assert all(v["frozen"] is False for v in doc["vertices"])
    assert len(doc["arrows"]) == 5
    assert sorted(a["weight"] for a in doc["arrows"]) == ["1", "1", "1", "2", "3"]


def test_round_trip_preserves_vertex_order(five_vertex):
    q2 = parse_quiver(serialize_quiver(five_vertex))
    assert q2 == five_vertex
    assert q2.names == five_vertex.names
    assert q2.frozen_flags == five_vertex.frozen_flags


def test_round_trip_random():
    rng = random.Random(3)
    for _ in range(50):
        q = random_quiver(rng)
        assert parse_quiver(serialize_quiver(q)) == q


def test_round_trip_forty_digit_weight():
    w = int("9" * 40)
    q = Quiver([("A", True), ("B", True)], [("A", "B", w)])
    out = serialize_quiver(q)
    assert '"' + "9" * 40 + '"' in out
    q2 = parse_quiver(out)
    assert q2 == q
    assert q2.multiplicity("A", "B") == w


def test_serialization_is_stable_bytes(five_vertex):
    assert serialize_quiver(five_vertex) == serialize_quiver(five_vertex)
    assert serialize_quiver(five_vertex).endswith("\n")
    doc = json.loads(serialize_quiver(five_vertex))
    assert list(doc) == ["vertices", "arrows"]


def test_weight_zero_rejected():
    doc = {
        "vertices": [{"id": "A", "frozen": False}, {"id": "B", "frozen": False}],
        "arrows": [{"from": "A", "to": "B", "weight": "0"}],
    }
    with pytest.raises(NonpositiveWeightError):
        parse_quiver(json.dumps(doc))


def test_parse_errors_carry_location():
    with pytest.raises(ParseError, match="line 1"):
        parse_quiver("{nope")
    with pytest.raises(ParseError, match=r"vertices\[0\]"):
        parse_quiver('{"vertices": ["A"], "arrows": []}')
    with pytest.raises(ParseError, match=r"arrows\[0\]\.weight"):
        parse_quiver(
            '{"vertices": [{"id": "A"}, {"id": "B"}],'
            ' "arrows": [{"from": "A", "to": "B", "weight": "x"}]}'
        )
    with pytest.raises(UnknownVertexError):
        parse_quiver(
            '{"vertices": [{"id": "A"}], "arrows": [{"from": "A", "to": "B", "weight": "1"}]}'
        )


def test_parse_accepts_bytes(five_vertex):
    data = serialize_quiver(five_vertex).encode()
    assert parse_quiver(data) == five_vertex
