"""Single-stage detection on per-keyword rate series.

Runs the same adaptive-window trigger as the two-stage solution, but on
each event keyword's own per-second series instead of the total
game-related rate. Because the keyword series sit far below any delivery
cap, a capped stream that pins the total flat leaves these series (and
therefore the emissions) untouched.

The running-average floor is keyword-local for the same reason: under a
cap the total-rate average says nothing about one keyword's baseline.
The min_keyword_count requirement is part of the per-window trigger
condition, so a window too small to collect enough keyword tweets
escalates to the next ladder size rather than giving up.
"""

from __future__ import annotations

import math

from .buckets import TimeBucketStore
from .detect import UNIFIED, CooldownTracker, DetectedEvent, DetectorConfig, TriggerWindow
from .lexicon import REAL_EVENT_TYPES, EventType


def keyword_trigger(game_id: str, event_type: EventType, at_second: int,
                    store: TimeBucketStore, cfg: DetectorConfig
                    ) -> tuple[TriggerWindow, int] | None:
    """Ladder scan over one keyword series; returns (window, second-half count)."""
    avg = store.keyword_running_average(game_id, event_type, at_second)
    floor = cfg.avg_floor_multiplier * avg
    for window_s in cfg.window_ladder:
        half = window_s // 2
        first = store.keyword_rate(game_id, event_type,
                                   at_second - window_s, at_second - half)
        second = store.keyword_rate(game_id, event_type,
                                    at_second - half, at_second)
        if second == 0:
            continue
        ratio = math.inf if first == 0 else second / first
        second_mean = second / half
        if (ratio >= cfg.ratio_threshold and second_mean > floor
                and second >= cfg.min_keyword_count):
            trigger = TriggerWindow(game_id, at_second, window_s, ratio,
                                    second_mean)
            return trigger, second
    return None


def unified_step(game_id: str, at_second: int, store: TimeBucketStore,
                 cfg: DetectorConfig, cooldown_state: CooldownTracker
                 ) -> list[DetectedEvent]:
    """Evaluate every keyword series at one second.

    Independent series, so simultaneous distinct events can both emit in
    the same call; the per-(game, type) cooldown still applies to each.
    """
    out = []
    for event_type in REAL_EVENT_TYPES:
        found = keyword_trigger(game_id, event_type, at_second, store, cfg)
        if found is None:
            continue
        trigger, count = found
        if not cooldown_state.ready(game_id, event_type, at_second,
                                    cfg.cooldown_s):
            continue
        cooldown_state.mark(game_id, event_type, at_second)
        out.append(DetectedEvent(
            game_id=game_id,
            event_type=event_type,
            detected_at_second=at_second,
            trigger=trigger,
            keyword_count=count,
            solution=UNIFIED,
        ))
    return out
