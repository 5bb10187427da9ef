"""Incremental per-second analysis engine.

The engine consumes tweets in delivered order and evaluates detectors at
every fully elapsed second. The evaluation schedule is canonical: for a
trace whose tweets are delivered in [d0, D], detectors run at every
second in [d0 + 1, D + 1], each step strictly before ingesting the first
tweet of any later second. The brute-force oracle and the live service
follow the same schedule, which is what makes replay-vs-batch and
engine-vs-oracle comparisons exact.

A tweet enters the buckets only if it is English and attributable: its
team tokens pick the games, its keyword matches use each attributed
game's own lexicon. Every tweet, attributable or not, advances the
stream clock.
"""

from __future__ import annotations

from .buckets import TimeBucketStore
from .detect import (
    TWO_STAGE,
    UNIFIED,
    CooldownTracker,
    DetectedEvent,
    DetectorConfig,
    two_stage_step,
)
from .lexicon import LexiconSet, attribute_games, match_event_keywords, preprocess
from .simgen import Tweet, TweetTrace
from .unified import unified_step

SOLUTIONS = (TWO_STAGE, UNIFIED)


def evaluation_seconds(trace: TweetTrace) -> range:
    """The canonical schedule for a finite trace."""
    if not trace.tweets:
        return range(0)
    first = trace.tweets[0].delivered_second
    last = trace.tweets[-1].delivered_second
    return range(first + 1, last + 2)


class StreamPipeline:
    def __init__(self, lexicons: LexiconSet, cfg: DetectorConfig | None = None,
                 solutions=(TWO_STAGE,), store: TimeBucketStore | None = None):
        if isinstance(lexicons, LexiconSet):
            self.lexicons = lexicons
        else:
            self.lexicons = LexiconSet(lexicons)
        self.cfg = cfg or DetectorConfig()
        for sol in solutions:
            if sol not in SOLUTIONS:
                raise ValueError(f"unknown solution {sol!r}")
        self.solutions = tuple(solutions)
        self.store = store if store is not None else TimeBucketStore()
        self.events: list[DetectedEvent] = []
        self._cooldowns = {sol: CooldownTracker() for sol in self.solutions}
        self._last_step: int | None = None
        self._by_game = {g.game_id: g for g in self.lexicons}

    # ------------------------------------------------------------ stepping

    def _step(self, at_second: int) -> list[DetectedEvent]:
        emitted: list[DetectedEvent] = []
        for sol in self.solutions:
            cooldowns = self._cooldowns[sol]
            for lex in self.lexicons:
                if sol == TWO_STAGE:
                    emitted.extend(two_stage_step(
                        lex.game_id, at_second, self.store, lex, self.cfg,
                        cooldowns))
                else:
                    emitted.extend(unified_step(
                        lex.game_id, at_second, self.store, self.cfg,
                        cooldowns))
        self.events.extend(emitted)
        return emitted

    def _step_through(self, target_second: int) -> list[DetectedEvent]:
        if self._last_step is None:
            self._last_step = target_second
            return []
        emitted: list[DetectedEvent] = []
        while self._last_step < target_second:
            self._last_step += 1
            emitted.extend(self._step(self._last_step))
        return emitted

    # ------------------------------------------------------------- feeding

    def ingest_only(self, tweet: Tweet) -> None:
        """Count a tweet without running any detection steps."""
        self.store.observe(tweet.delivered_second)
        parsed = preprocess(tweet.text, self.lexicons, tweet.device_class)
        if not parsed.is_english:
            return
        for gid in attribute_games(parsed, self.lexicons):
            events = match_event_keywords(parsed, self._by_game[gid])
            self.store.ingest(tweet.delivered_second, {gid}, events)

    def feed(self, tweet: Tweet) -> list[DetectedEvent]:
        """Advance to the tweet's second, then count it.

        Returns whatever the advancing steps emitted. Tweets must arrive
        in non-decreasing delivered order for exact replay semantics;
        stragglers are still counted but their seconds are not re-run.
        """
        emitted = self._step_through(tweet.delivered_second)
        self.ingest_only(tweet)
        return emitted

    def finish(self) -> list[DetectedEvent]:
        """Evaluate the final second once the stream is known to be over."""
        if self._last_step is None:
            return []
        return self._step_through(self._last_step + 1)


def run_trace(trace: TweetTrace, lexicons, cfg: DetectorConfig | None = None,
              solutions=SOLUTIONS) -> dict[str, list[DetectedEvent]]:
    """Batch-run a trace; returns emissions grouped per solution."""
    pipe = StreamPipeline(lexicons, cfg, solutions)
    for tweet in trace.tweets:
        pipe.feed(tweet)
    pipe.finish()
    out: dict[str, list[DetectedEvent]] = {sol: [] for sol in pipe.solutions}
    for ev in pipe.events:
        out[ev.solution].append(ev)
    return out


def build_store_from_trace(trace: TweetTrace, lexicons,
                           store: TimeBucketStore | None = None
                           ) -> TimeBucketStore:
    """Aggregate a whole trace without running detection."""
    pipe = StreamPipeline(lexicons, solutions=(), store=store)
    for tweet in trace.tweets:
        pipe.ingest_only(tweet)
    return pipe.store
