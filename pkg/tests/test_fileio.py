import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lsegments import fileio
from lsegments.fileio import FormatError, SegmentFile
from lsegments.gen import gen_named, gen_random
from lsegments.model import GridSegment
from lsegments.transform import transform_pow2


def test_lrep_round_trip():
    for rep in (gen_named("fig2-like"), gen_random(30, "mixed", 1), gen_random(7, "pure", 2)):
        assert fileio.loads(fileio.dumps(rep)) == rep


def test_lrep_document_shape():
    d = json.loads(fileio.dumps(gen_named("worked2")))
    assert d == {
        "format": "lrep/v1",
        "n": 2,
        "mode": "pure",
        "vertices": [
            {"id": "a", "orient": "TR", "l": 1, "b": 1, "r": 3, "t": 4},
            {"id": "c", "orient": "TR", "l": 2, "b": 2, "r": 4, "t": 3},
        ],
    }


def test_raw_coordinates_parse_as_non_canonical():
    doc = {"format": "lrep/v1", "n": 1, "mode": "pure", "vertices": [{"id": "a", "orient": "TR", "l": 0, "b": 0, "r": 10, "t": 7}]}
    rep = fileio.loads(json.dumps(doc))
    assert not rep.canonical


def test_segs_round_trip_beyond_64_bits():
    res = transform_pow2(gen_random(60, "pure", 4))
    sf = SegmentFile("pow2", 60, tuple(res.segments), res.dilation_exponent)
    assert sf.max_coord_bits > 64
    text = fileio.dumps(sf)
    back = fileio.loads(text)
    assert back == sf
    d = json.loads(text)
    assert all(isinstance(v["y1"], str) for v in d["vertices"])
    assert d["max_coord_bits"] == sf.max_coord_bits


big = st.integers(min_value=0, max_value=1 << 300)


@given(st.lists(st.tuples(big, big, big, big), max_size=5))
@settings(max_examples=200)
def test_segs_round_trip_property(rows):
    segs = tuple(GridSegment(f"s{i}", (a, b), (c, d)) for i, (a, b, c, d) in enumerate(rows))
    sf = SegmentFile("mixed", len(segs), segs, None)
    assert fileio.loads(fileio.dumps(sf)) == sf


@pytest.mark.parametrize(
    "text",
    [
        '{"format": "nope"}',
        '{"format": "lrep/v1", "n": 2, "vertices": [{"id": "a", "l": 1, "b": 1, "r": 2, "t": 2}]}',
        '{"format": "lrep/v1", "n": 1, "vertices": [{"id": "a", "l": 1, "b": 1, "r": 2}]}',
        '{"format": "segs/v1", "method": "pow2", "n": 1, "vertices": [{"id": "a", "x1": "x"}]}',
    ],
)
def test_malformed(text):
    with pytest.raises(FormatError):
        fileio.loads(text)
