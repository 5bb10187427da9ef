"""Aggregation-store tests against a linear-scan oracle."""

import csv
import io
import random

import pytest
from hypothesis import given, settings, strategies as st

from eventpulse.buckets import TimeBucketStore
from eventpulse.errors import OutOfRetention
from eventpulse.lexicon import EventType

TD = EventType.TOUCHDOWN
INT = EventType.INTERCEPTION
FG = EventType.FIELD_GOAL
FUM = EventType.FUMBLE


def scan_rate(rows, game_id, lo, hi):
    return sum(1 for sec, games, _ in rows if game_id in games and lo <= sec < hi)


def scan_keyword(rows, game_id, etype, lo, hi):
    return sum(
        events.get(etype, 0)
        for sec, games, events in rows
        if game_id in games and lo <= sec < hi
    )


def test_single_increment():
    store = TimeBucketStore()
    store.ingest(1000, {"G1"}, {TD: 1})
    assert store.rate("G1", 1000, 1001) == 1
    assert store.keyword_rate("G1", TD, 1000, 1001) == 1
    assert store.keyword_rate("G1", INT, 1000, 1001) == 0


def test_unattributable_changes_nothing_but_clock():
    store = TimeBucketStore()
    store.ingest(1000, set(), {TD: 1})
    assert store.game_ids() == ()
    assert store.now == 1000
    assert store.stream_start == 1000


def test_two_games_both_counted():
    store = TimeBucketStore()
    store.ingest(1000, {"G1", "G2"}, None)
    assert store.rate("G1", 1000, 1001) == 1
    assert store.rate("G2", 1000, 1001) == 1


def test_empty_interval_is_zero():
    store = TimeBucketStore()
    store.ingest(1000, {"G1"})
    assert store.rate("G1", 1000, 1000) == 0


def test_unknown_game_is_zero():
    store = TimeBucketStore()
    store.ingest(1000, {"G1"})
    assert store.rate("G9", 990, 1001) == 0


rows_strategy = st.lists(
    st.tuples(
        st.integers(min_value=5000, max_value=5299),
        st.sets(st.sampled_from(["G1", "G2"]), max_size=2),
        st.fixed_dictionaries(
            {},
            optional={
                TD: st.integers(1, 3),
                INT: st.integers(1, 2),
                FG: st.integers(1, 2),
                FUM: st.integers(1, 2),
            },
        ),
    ),
    max_size=120,
)


@settings(max_examples=150, deadline=None)
@given(rows=rows_strategy, seed=st.integers(0, 2**16))
def test_rate_matches_scan_any_order(rows, seed):
    shuffled = list(rows)
    random.Random(seed).shuffle(shuffled)
    store = TimeBucketStore()
    for sec, games, events in shuffled:
        store.ingest(sec, games, events)
    for lo, hi in [(5000, 5300), (5100, 5150), (5299, 5300), (5150, 5100)]:
        for gid in ("G1", "G2"):
            want = scan_rate(rows, gid, lo, hi)
            if lo >= hi:
                want = 0
            assert store.rate(gid, lo, hi) == want
            for etype in (TD, INT, FG, FUM):
                kw = scan_keyword(rows, gid, etype, lo, hi)
                if lo >= hi:
                    kw = 0
                assert store.keyword_rate(gid, etype, lo, hi) == kw


@settings(max_examples=60, deadline=None)
@given(rows=rows_strategy)
def test_totals_conserved(rows):
    store = TimeBucketStore()
    for sec, games, events in rows:
        store.ingest(sec, games, events)
    for gid in ("G1", "G2"):
        attributed = sum(1 for _, games, _ in rows if gid in games)
        snap = store.snapshot(gid)
        assert sum(r["total"] for r in snap) == attributed


def test_running_average_no_data():
    store = TimeBucketStore()
    assert store.running_average("G1", 1000) == 0.0


def test_running_average_constant_rate():
    store = TimeBucketStore(horizon_avg_s=600)
    for sec in range(2000, 2700):
        for _ in range(5):
            store.ingest(sec, {"G1"})
    assert store.running_average("G1", 2700) == pytest.approx(5.0)


def test_running_average_startup_divides_by_elapsed():
    store = TimeBucketStore(horizon_avg_s=600)
    store.ingest(1000, {"G1"})
    store.ingest(1001, {"G1"})
    store.ingest(1002, {"G1"})
    # three seconds elapsed since stream start, three tweets
    assert store.running_average("G1", 1003) == pytest.approx(1.0)
    # at the stream-start second itself there is no elapsed history
    assert store.running_average("G1", 1000) == 0.0


@settings(max_examples=60, deadline=None)
@given(rows=rows_strategy, at=st.integers(5001, 5301))
def test_running_average_matches_recomputation(rows, at):
    store = TimeBucketStore(horizon_avg_s=120)
    for sec, games, events in rows:
        store.ingest(sec, games, events)
    if store.stream_start is None:
        assert store.running_average("G1", at) == 0.0
        return
    d = min(at - store.stream_start, 120)
    want = 0.0 if d <= 0 else scan_rate(rows, "G1", at - d, at) / d
    assert store.running_average("G1", at) == pytest.approx(want, abs=1e-9)


def test_out_of_retention_raises():
    store = TimeBucketStore(horizon_s=100, horizon_avg_s=60)
    store.ingest(1000, {"G1"})
    store.ingest(1200, {"G1"})
    with pytest.raises(OutOfRetention):
        store.rate("G1", 1099, 1100)
    assert store.rate("G1", 1100, 1201) == 1


def test_late_arrival_dropped_and_counted():
    store = TimeBucketStore(horizon_s=100, horizon_avg_s=60)
    store.ingest(1000, {"G1"})
    store.ingest(880, {"G1"}, now=1000)
    assert store.metrics["late_dropped"] == 1
    assert store.rate("G1", 900, 1001) == 1


def test_future_timestamp_clamped_and_counted():
    store = TimeBucketStore(skew_tolerance_s=2)
    store.ingest(1000, {"G1"})
    store.ingest(1050, {"G1"}, now=1000)
    assert store.metrics["future_clamped"] == 1
    assert store.rate("G1", 1000, 1001) == 2
    # within tolerance is taken at face value
    store.ingest(1002, {"G1"}, now=1000)
    assert store.rate("G1", 1002, 1003) == 1
    assert store.metrics["future_clamped"] == 1


def test_long_stream_trims_but_stays_exact():
    store = TimeBucketStore(horizon_s=3600)
    for sec in range(10_000, 16_000, 2):
        store.ingest(sec, {"G1"})
    assert store.rate("G1", 15_000, 16_000) == 500
    with pytest.raises(OutOfRetention):
        store.rate("G1", 12_000, 12_100)


def test_snapshot_dense_and_csv_round_trip():
    store = TimeBucketStore()
    store.ingest(1000, {"G1"}, {TD: 2})
    store.ingest(1003, {"G1"}, {FG: 1})
    snap = store.snapshot("G1")
    assert [r["second"] for r in snap] == [1000, 1001, 1002, 1003]
    assert snap[0]["TD"] == 2 and snap[0]["total"] == 1
    assert snap[1]["total"] == 0
    assert snap[3]["FG"] == 1

    buf = io.StringIO()
    store.export_csv("G1", buf)
    parsed = list(csv.DictReader(io.StringIO(buf.getvalue())))
    assert len(parsed) == 4
    assert parsed[0]["TD"] == "2"
    assert parsed[3]["FG"] == "1"


def test_export_json(tmp_path):
    import json

    store = TimeBucketStore()
    store.ingest(1000, {"G1"}, {INT: 1})
    path = tmp_path / "g1.json"
    store.export_json("G1", path)
    doc = json.loads(path.read_text())
    assert doc["game_id"] == "G1"
    assert doc["buckets"][0]["INT"] == 1


def test_config_validation():
    with pytest.raises(ValueError):
        TimeBucketStore(horizon_s=100, horizon_avg_s=200)
