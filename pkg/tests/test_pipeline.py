"""Incremental engine: schedule, live-vs-batch equivalence, ingest rules."""

from eventpulse.detect import TWO_STAGE, UNIFIED, DetectorConfig
from eventpulse.lexicon import EventType, LexiconSet
from eventpulse.pipeline import (
    StreamPipeline,
    build_store_from_trace,
    evaluation_seconds,
    run_trace,
)
from eventpulse.simgen import (
    ApiProfile,
    Tweet,
    TweetTrace,
    TruthEvent,
    apply_api_constraints,
    generate,
)

from tests.test_lexicon import make_game
from tests.test_simgen import make_scenario

import pytest

TD = EventType.TOUCHDOWN


def tiny_trace(rows):
    """rows: (created, delivered, text) triples, in delivered order."""
    tweets = tuple(
        Tweet(id=i, created_second=c, delivered_second=d, text=text)
        for i, (c, d, text) in enumerate(rows)
    )
    return TweetTrace(tweets=tweets, truth=(), duration_s=max(
        (d for _, d, _ in rows), default=0) + 1, seed=0)


def test_evaluation_seconds_empty_and_basic():
    assert list(evaluation_seconds(tiny_trace([]))) == []
    trace = tiny_trace([(100, 101, "a"), (103, 104, "b")])
    assert list(evaluation_seconds(trace)) == list(range(102, 106))


def test_build_store_counts_attributed_tweets_only():
    trace = tiny_trace([
        (10, 10, "packers touchdown drive"),
        (10, 10, "lunch was amazing today"),        # english, no team
        (11, 11, "das spiel war unglaublich gut"),  # not english
        (12, 12, "steelers fumble on the snap"),
    ])
    store = build_store_from_trace(trace, [make_game()])
    assert store.rate("G1", 10, 13) == 2
    assert store.keyword_rate("G1", TD, 10, 13) == 1
    assert store.keyword_rate("G1", EventType.FUMBLE, 10, 13) == 1
    assert store.metrics["ingested"] == 2
    # every tweet, counted or not, advances the stream clock
    assert store.stream_start == 10
    assert store.now == 12


def test_feed_steps_before_ingesting_later_seconds():
    pipe = StreamPipeline([make_game()], solutions=())
    pipe.feed(Tweet(0, 5, 5, "here comes the packers kickoff"))
    assert pipe._last_step == 5
    pipe.feed(Tweet(1, 9, 9, "big yards for the packers"))
    assert pipe._last_step == 9
    pipe.finish()
    assert pipe._last_step == 10


def test_straggler_is_counted_but_not_restepped():
    pipe = StreamPipeline([make_game()], solutions=())
    pipe.feed(Tweet(0, 5, 5, "here comes the packers kickoff"))
    pipe.feed(Tweet(1, 9, 9, "big yards for the packers"))
    pipe.feed(Tweet(2, 3, 3, "the packers quarterback is on"))  # late arrival
    assert pipe._last_step == 9
    assert pipe.store.rate("G1", 3, 4) == 1


def test_unknown_solution_rejected():
    with pytest.raises(ValueError):
        StreamPipeline([make_game()], solutions=("magic",))


def scenario_with_events(seed=11, cap=None):
    events = [TruthEvent("G1", TD, 60, 25.0),
              TruthEvent("G1", EventType.FIELD_GOAL, 150, 20.0)]
    kw = {}
    if cap is not None:
        kw["api"] = ApiProfile(delivery_delay_s=1, cap_tweets_per_s=cap)
    return make_scenario(duration_s=240, baseline=4.0, events=events,
                         seed=seed, **kw)


def test_live_feed_matches_batch_run():
    scenario = scenario_with_events()
    trace = apply_api_constraints(generate(scenario), scenario.api)
    lexset = scenario.lexicon_set()

    batch = run_trace(trace, lexset, solutions=(TWO_STAGE, UNIFIED))

    pipe = StreamPipeline(lexset, solutions=(TWO_STAGE, UNIFIED))
    live = []
    for tweet in trace.tweets:
        live.extend(pipe.feed(tweet))
    live.extend(pipe.finish())

    assert [e for e in live if e.solution == TWO_STAGE] == batch[TWO_STAGE]
    assert [e for e in live if e.solution == UNIFIED] == batch[UNIFIED]
    assert pipe.events == live


def test_run_trace_emissions_are_time_ordered_per_solution():
    scenario = scenario_with_events(seed=23)
    trace = apply_api_constraints(generate(scenario), scenario.api)
    out = run_trace(trace, scenario.lexicon_set())
    assert set(out) == {TWO_STAGE, UNIFIED}
    for events in out.values():
        seconds = [ev.detected_at_second for ev in events]
        assert seconds == sorted(seconds)
        assert all(ev.keyword_count >= DetectorConfig().min_keyword_count
                   for ev in events)


def test_detects_a_clear_burst():
    scenario = scenario_with_events(seed=5)
    trace = apply_api_constraints(generate(scenario), scenario.api)
    out = run_trace(trace, scenario.lexicon_set())
    td_hits = [ev for ev in out[TWO_STAGE]
               if ev.event_type is TD and 60 <= ev.detected_at_second <= 150]
    assert td_hits, "two-stage missed an unambiguous touchdown burst"
    td_hits_u = [ev for ev in out[UNIFIED]
                 if ev.event_type is TD and 60 <= ev.detected_at_second <= 150]
    assert td_hits_u, "unified missed an unambiguous touchdown burst"


def test_multi_game_attribution_is_isolated():
    g1 = make_game()
    g2 = make_game("G2", teams=(("saints", "orleans"), ("colts", "indianapolis")))
    trace = tiny_trace([
        (10, 10, "packers touchdown"),
        (10, 10, "saints touchdown"),
        (11, 11, "colts interception"),
    ])
    store = build_store_from_trace(trace, LexiconSet([g1, g2]))
    assert store.rate("G1", 10, 12) == 1
    assert store.rate("G2", 10, 12) == 2
    assert store.keyword_rate("G2", EventType.INTERCEPTION, 10, 12) == 1
    assert store.keyword_rate("G1", EventType.INTERCEPTION, 10, 12) == 0
