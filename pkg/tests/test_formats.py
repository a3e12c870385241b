"""Cache CSV and b-file serialization: round-trips and validation."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binomthresh import CorruptCacheError, SequenceRecord, compute_range
from binomthresh.formats import (
    append_cache,
    load_bfile,
    load_cache,
    parse_bfile,
    parse_cache,
    render_bfile,
    render_cache,
    save_bfile,
    save_cache,
)
from .conftest import TABLE1


def _records(rows):
    return [SequenceRecord(*row) for row in rows]


class TestCacheFormat:
    def test_render_exact_bytes(self):
        text = render_cache(_records([(3, 1, 1), (4, 1, 2), (5, 2, 2)]))
        assert text == "n,f,L\n3,1,1\n4,1,2\n5,2,2\n"

    def test_round_trip_table1(self):
        records = _records(TABLE1)
        assert parse_cache(render_cache(records)) == records

    def test_header_only_is_valid_and_empty(self):
        assert parse_cache("n,f,L\n") == []

    def test_missing_trailing_newline_tolerated(self):
        assert parse_cache("n,f,L\n3,1,1") == _records([(3, 1, 1)])

    @pytest.mark.parametrize(
        "text",
        [
            "",  # no header
            "n;f;L\n",  # wrong delimiter in header
            "f,n,L\n",  # wrong column order
            "n,f,L\n3,1\n",  # field count
            "n,f,L\n3,one,1\n",  # non-integer
            "n,f,L\n3,1,1\n5,2,2\n",  # gap in n
            "n,f,L\n3,1,1\n3,1,1\n",  # duplicate n
            "n,f,L\n4,2,1\n",  # f > L
            "n,f,L\n10,2,4\n",  # L - f = 2
            "n,f,L\n2,1,1\n",  # n below domain
        ],
    )
    def test_corruption_rejected(self, text):
        with pytest.raises(CorruptCacheError):
            parse_cache(text)

    def test_save_load_append(self, tmp_path):
        path = tmp_path / "cache.csv"
        full = compute_range(3, 40)
        save_cache(path, full[:10])
        append_cache(path, full[10:])
        assert load_cache(path) == full
        append_cache(path, [])  # appending nothing is a no-op
        assert load_cache(path) == full

    @given(st.integers(3, 300), st.integers(0, 40))
    @settings(max_examples=25, deadline=None)
    def test_round_trip_of_real_ranges(self, start, span):
        records = compute_range(start, start + span)
        assert parse_cache(render_cache(records)) == records


class TestBFileFormat:
    def test_render_spec_examples(self):
        assert render_bfile([(3, 1), (4, 1), (5, 2)]) == "3 1\n4 1\n5 2\n"
        assert render_bfile([(19, 7), (20, 7), (21, 7)]) == "19 7\n20 7\n21 7\n"

    def test_round_trip(self):
        pairs = [(n, f) for n, f, _ in TABLE1]
        assert parse_bfile(render_bfile(pairs)) == pairs

    def test_save_load(self, tmp_path):
        path = tmp_path / "b.txt"
        pairs = [(n, l) for n, _, l in TABLE1]
        save_bfile(path, pairs)
        assert load_bfile(path) == pairs

    @pytest.mark.parametrize("text", ["3\n", "3 1 2\n", "3  1\n", "a b\n"])
    def test_malformed_rejected(self, text):
        with pytest.raises(ValueError):
            parse_bfile(text)

    @given(
        st.lists(
            st.tuples(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9)),
            max_size=50,
        )
    )
    def test_round_trip_arbitrary_pairs(self, pairs):
        assert parse_bfile(render_bfile(pairs)) == pairs
