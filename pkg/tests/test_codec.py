import io
import json

import networkx as nx
import numpy as np
import pytest

from outerspread.codec import Graph6Error, format_value, graph6_decode, graph6_encode, report_text, write_report
from outerspread.graph import complete, cycle, empty, fan, from_edges, path, random_outerplanar

from oracles import to_nx


def test_hand_encoded():
    assert graph6_encode(path(2)) == "A_"
    assert graph6_encode(complete(3)) == "Bw"
    assert graph6_encode(empty(1)) == "@"


@pytest.mark.parametrize("g", [path(7), cycle(9), fan(13), complete(6), empty(63), fan(70), cycle(200)])
def test_matches_networkx(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert graph6_encode(g) == ref
    assert graph6_decode(ref) == g


def test_large_n_length_field():
    g = fan(100)
    s = graph6_encode(g)
    assert s[0] == "~"
    assert graph6_decode(s) == g


def test_header_accepted():
    assert graph6_decode(">>graph6<<Bw\n") == complete(3)


def test_round_trip_random(rng):
    for _ in range(1000):
        g = random_outerplanar(int(rng.integers(1, 40)), rng)
        assert graph6_decode(graph6_encode(g)) == g


@pytest.mark.parametrize("bad", ["", "A", "A_x", "B\x7f", "Bx", "A`", "~??@", "~?", " "])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        graph6_decode(bad)


def test_nonzero_padding_rejected():
    # path(2) is bit 1 then five zero pad bits; set the last pad bit
    with pytest.raises(Graph6Error):
        graph6_decode("A" + chr(63 + 0b100001))


def test_format_value():
    assert format_value(6.0) == "6.000000000000"
    assert format_value(-0.0) == "0.000000000000"
    assert format_value(-1e-15) == "0.000000000000"
    assert format_value(True) == "true"
    assert format_value(None) == ""
    assert format_value(3) == "3"
    assert format_value(float("nan")) == "nan"
    assert format_value(float("-inf")) == "-inf"


def test_empty_csv_is_header_only():
    assert report_text([], "csv", ["n", "spread"]) == "n,spread\n"


def test_one_row_two_lines():
    text = report_text([{"n": 3, "spread": 3.0}])
    assert text == "n,spread\n3,3.000000000000\n"


def test_json_round_trip():
    row = {"n": 10, "graph6": "A_", "spread": 6.324858377737, "ok": True, "note": None}
    back = json.loads(report_text([row], "json"))
    assert back == [row]


def test_rows_must_share_columns():
    with pytest.raises(ValueError):
        report_text([{"a": 1}, {"b": 2}])
    with pytest.raises(ValueError):
        report_text([{"a": 1}], "xml")


def test_write_report_is_deterministic():
    rows = [{"n": n, "x": float(np.sqrt(n))} for n in range(1, 20)]
    a, b = io.StringIO(), io.StringIO()
    write_report(rows, "csv", a)
    write_report(list(rows), "csv", b)
    assert a.getvalue() == b.getvalue()
    assert "\r" not in a.getvalue()
