import json

import pytest
from hypothesis import given, settings, strategies as st

from dycktri import (dyck, dyck_ensemble, dyck_heights, extend_skeleton, extended_dyck,
                     find_heights, flipped_extended_boundary, random_regular_triangulation,
                     restrict_to_face, restrict_to_skeleton, staircase)
from dycktri import io
from dycktri.errors import SchemaError


@pytest.mark.parametrize("obj", [
    dyck(3), extended_dyck(3), staircase(2, 5), restrict_to_face(dyck(4), [1, 3], [2, 3, 4]),
    dyck_ensemble(3), restrict_to_skeleton(staircase(4, 2), 3), flipped_extended_boundary(3),
    dyck_heights(4),
], ids=lambda o: type(o).__name__)
def test_round_trip(obj):
    text = io.dumps(obj)
    back = io.loads(text)
    assert back == obj
    assert io.dumps(back) == text


def test_rational_heights_are_strings():
    h = find_heights(staircase(2, 3))
    data = json.loads(io.dumps(h))
    assert data["kind"] == "rational"
    assert all(isinstance(v[2], str) and "/" in v[2] for v in data["values"])
    assert io.loads(io.dumps(h)) == h


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 4), st.integers(2, 3), st.integers(0, 10 ** 6))
def test_random_triangulations_round_trip(m, n, seed):
    T, h = random_regular_triangulation(m, n, seed, bound=100)
    assert io.loads(io.dumps(T)) == T
    assert io.loads(io.dumps(h)) == h


def test_output_is_sorted_and_stable():
    a = io.dumps(dyck(3))
    data = json.loads(a)
    assert data["simplices"] == sorted(data["simplices"])
    assert list(data) == ["m", "n", "rows", "cols", "simplices"]
    assert a.endswith("\n")


def test_witness_document():
    w = extend_skeleton(flipped_extended_boundary(3))
    data = json.loads(io.dumps(w))
    assert data["kind"] == "LA-failure"
    assert data["matching"] == [[1, 2], [2, 3], [3, 1]]
    assert data["vertex"] == {"side": "row", "index": 4}
    assert data["conflicting"] == [[1, 1], [2, 2], [4, 3]]


def test_parse_error_has_location():
    with pytest.raises(SchemaError, match="line 2 column"):
        io.loads('{"m": 2,\n ]')


@pytest.mark.parametrize("text,fragment", [
    ('[1, 2]', "expected a JSON object"),
    ('{"foo": 1}', "unrecognized"),
    ('{"m": 2, "simplices": []}', "missing key 'n'"),
    ('{"m": "2", "n": 2, "simplices": []}', "$.m: expected an integer"),
    ('{"m": 2, "n": 2, "simplices": [[[1, 1], [1]]]}', "$.simplices[0][1]"),
    ('{"m": 2, "n": 2, "simplices": [[[1, 3]]]}', "outside"),
    ('{"m": 2, "n": 2, "matchings": [{"I": [1], "J": [1], "edges": [[1, 1]]}, '
     '{"I": [1], "J": [1], "edges": [[1, 1]]}]}', "duplicate support"),
    ('{"kind": "rational", "values": [[1, 1, "x/y"]]}', "cannot parse rational"),
    ('{"kind": "symbolic", "values": [[1, 1, 1.5]]}', "must be an integer"),
    ('{"kind": "weird", "values": []}', "kind"),
])
def test_schema_errors(text, fragment):
    with pytest.raises(SchemaError) as info:
        io.loads(text)
    assert fragment in str(info.value)


def test_expected_kind():
    with pytest.raises(SchemaError, match="expected a skeleton"):
        io.loads(io.dumps(dyck(2)), "skeleton")
