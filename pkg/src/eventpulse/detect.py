"""Two-stage detection: rate-burst trigger, then keyword recognition.

The trigger stage walks an increasing ladder of window sizes each second.
A window W ending at second t is split into halves [t-W, t-W/2) and
[t-W/2, t); it triggers when the second half grew by ratio_threshold over
the first AND the second-half mean rate clears the running-average floor.
An empty first half with a nonempty second half counts as infinite growth
(still subject to the floor, so near-silent games cannot trigger off a
couple of tweets).

The recognition stage ranks event-keyword counts inside the triggering
window's second half and emits the argmax if it reaches
min_keyword_count; anything weaker is treated as a non-event burst.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .buckets import TimeBucketStore
from .errors import ConfigError
from .lexicon import REAL_EVENT_TYPES, EventType, GameLexicon

TWO_STAGE = "two_stage"
UNIFIED = "unified"


@dataclass(frozen=True)
class DetectorConfig:
    window_ladder: tuple[int, ...] = (10, 20, 30, 60)
    ratio_threshold: float = 1.7
    avg_floor_multiplier: float = 1.0
    min_keyword_count: int = 3
    cooldown_s: int = 60

    def __post_init__(self):
        ladder = tuple(int(w) for w in self.window_ladder)
        object.__setattr__(self, "window_ladder", ladder)
        if not ladder:
            raise ConfigError("window_ladder must not be empty")
        if any(w <= 0 or w % 2 for w in ladder):
            raise ConfigError("window sizes must be positive and even")
        if any(a >= b for a, b in zip(ladder, ladder[1:])):
            raise ConfigError("window_ladder must be strictly increasing")
        if not self.ratio_threshold > 1:
            raise ConfigError("ratio_threshold must exceed 1")
        if self.avg_floor_multiplier < 0:
            raise ConfigError("avg_floor_multiplier must be non-negative")
        if self.min_keyword_count < 1:
            raise ConfigError("min_keyword_count must be at least 1")
        if self.cooldown_s < ladder[-1]:
            raise ConfigError("cooldown_s must cover the largest window")


@dataclass(frozen=True)
class TriggerWindow:
    game_id: str
    at_second: int
    window_s: int
    ratio: float  # math.inf when the first half was empty
    second_half_rate: float  # mean tweets/s over the second half


@dataclass(frozen=True)
class DetectedEvent:
    game_id: str
    event_type: EventType
    detected_at_second: int
    trigger: TriggerWindow
    keyword_count: int
    solution: str

    def to_doc(self) -> dict:
        ratio = self.trigger.ratio
        return {
            "game_id": self.game_id,
            "event_type": self.event_type.code,
            "detected_at_second": self.detected_at_second,
            "keyword_count": self.keyword_count,
            "solution": self.solution,
            "trigger": {
                "at_second": self.trigger.at_second,
                "window_s": self.trigger.window_s,
                "ratio": None if math.isinf(ratio) else ratio,
                "second_half_rate": self.trigger.second_half_rate,
            },
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "DetectedEvent":
        trig = doc["trigger"]
        ratio = trig["ratio"]
        return cls(
            game_id=doc["game_id"],
            event_type=EventType.from_code(doc["event_type"]),
            detected_at_second=int(doc["detected_at_second"]),
            trigger=TriggerWindow(
                game_id=doc["game_id"],
                at_second=int(trig["at_second"]),
                window_s=int(trig["window_s"]),
                ratio=math.inf if ratio is None else float(ratio),
                second_half_rate=float(trig["second_half_rate"]),
            ),
            keyword_count=int(doc["keyword_count"]),
            solution=doc["solution"],
        )


class CooldownTracker:
    """Last emission second per (game, event type); None means never."""

    def __init__(self):
        self._last: dict[tuple[str, EventType], int] = {}

    def ready(self, game_id: str, event_type: EventType, at_second: int,
              cooldown_s: int) -> bool:
        last = self._last.get((game_id, event_type))
        return last is None or at_second - last >= cooldown_s

    def mark(self, game_id: str, event_type: EventType, at_second: int) -> None:
        self._last[(game_id, event_type)] = at_second


def detect_step(game_id: str, at_second: int, store: TimeBucketStore,
                cfg: DetectorConfig) -> TriggerWindow | None:
    """Evaluate the window ladder at one fully elapsed second.

    Returns the smallest qualifying window, or None. Raises OutOfRetention
    if the largest window reaches past the store's horizon.
    """
    avg = store.running_average(game_id, at_second)
    floor = cfg.avg_floor_multiplier * avg
    for window_s in cfg.window_ladder:
        half = window_s // 2
        first = store.rate(game_id, at_second - window_s, at_second - half)
        second = store.rate(game_id, at_second - half, at_second)
        if second == 0:
            continue
        ratio = math.inf if first == 0 else second / first
        second_mean = second / half
        if ratio >= cfg.ratio_threshold and second_mean > floor:
            return TriggerWindow(game_id, at_second, window_s, ratio, second_mean)
    return None


def recognize(trigger: TriggerWindow, store: TimeBucketStore,
              lex: GameLexicon, cfg: DetectorConfig) -> DetectedEvent | None:
    """Pick the dominant event keyword inside the trigger's second half."""
    half = trigger.window_s // 2
    lo = trigger.at_second - half
    counts = {
        etype: store.keyword_rate(trigger.game_id, etype, lo, trigger.at_second)
        for etype in REAL_EVENT_TYPES
        if etype in lex.event_keywords
    }
    if not counts:
        return None
    best = max(counts, key=lambda e: (counts[e], -e.priority))
    if counts[best] < cfg.min_keyword_count:
        return None
    return DetectedEvent(
        game_id=trigger.game_id,
        event_type=best,
        detected_at_second=trigger.at_second,
        trigger=trigger,
        keyword_count=counts[best],
        solution=TWO_STAGE,
    )


def two_stage_step(game_id: str, at_second: int, store: TimeBucketStore,
                   lex: GameLexicon, cfg: DetectorConfig,
                   cooldown_state: CooldownTracker) -> list[DetectedEvent]:
    """One full two-stage evaluation; at most one event per call."""
    trigger = detect_step(game_id, at_second, store, cfg)
    if trigger is None:
        return []
    event = recognize(trigger, store, lex, cfg)
    if event is None:
        return []
    if not cooldown_state.ready(game_id, event.event_type, at_second,
                                cfg.cooldown_s):
        return []
    cooldown_state.mark(game_id, event.event_type, at_second)
    return [event]
