"""Per-second aggregation of game-attributed tweet counts.

One store holds every concurrently tracked game. The clock (``now``) is
owned by whoever drives the store: replay pipelines pass their schedule
second to ``ingest`` / ``observe``, the live service passes wall time.
Tweet timestamps themselves advance the clock too, so a bare sequence of
``ingest`` calls (as in tests) behaves sensibly without a driver.

Single-writer, multi-reader: one ingestion path mutates, any number of
readers may query. Readers that query the second currently being filled
see its partial count; detectors only evaluate fully elapsed seconds.
"""

from __future__ import annotations

import csv
import json

from .errors import OutOfRetention
from .lexicon import REAL_EVENT_TYPES, EventType

# rebase the per-game arrays once this many seconds have scrolled past the
# retention floor; keeps trims amortized instead of per-ingest
_TRIM_SLACK = 1024


class _PrefixSeries:
    """Append-mostly int series with a lazily maintained prefix sum."""

    __slots__ = ("values", "_prefix", "_valid")

    def __init__(self):
        self.values: list[int] = []
        self._prefix: list[int] = [0]
        self._valid = 0  # number of values the prefix currently covers

    def add(self, idx: int, n: int) -> None:
        if idx >= len(self.values):
            self.values.extend([0] * (idx + 1 - len(self.values)))
        self.values[idx] += n
        if idx < self._valid:
            self._valid = idx

    def range_sum(self, lo: int, hi: int) -> int:
        """Sum of values[lo:hi], indices clamped to the stored span."""
        n = len(self.values)
        lo = max(0, min(lo, n))
        hi = max(lo, min(hi, n))
        if hi > self._valid:
            p = self._prefix
            if len(p) < n + 1:
                p.extend([0] * (n + 1 - len(p)))
            acc = p[self._valid]
            vals = self.values
            for i in range(self._valid, hi):
                acc += vals[i]
                p[i + 1] = acc
            self._valid = hi
        return self._prefix[hi] - self._prefix[lo]

    def drop_front(self, k: int) -> None:
        del self.values[:k]
        self._prefix = [0]
        self._valid = 0


class _GameBuckets:
    __slots__ = ("base", "total", "events")

    def __init__(self, base: int):
        self.base = base
        self.total = _PrefixSeries()
        self.events = {etype: _PrefixSeries() for etype in REAL_EVENT_TYPES}

    def span(self) -> int:
        return len(self.total.values)

    def add(self, second: int, event_counts) -> None:
        if second < self.base:
            # retention already admitted it; extend the arrays backward
            shift = self.base - second
            for series in (self.total, *self.events.values()):
                series.values[:0] = [0] * shift
                series._prefix = [0]
                series._valid = 0
            self.base = second
        idx = second - self.base
        self.total.add(idx, 1)
        if event_counts:
            for etype, n in event_counts.items():
                if n and etype is not EventType.NULL:
                    self.events[etype].add(idx, n)

    def trim(self, floor_second: int) -> None:
        k = floor_second - self.base
        if k >= _TRIM_SLACK:
            k = min(k, self.span())
            self.total.drop_front(k)
            for series in self.events.values():
                series.drop_front(k)
            self.base += k


class TimeBucketStore:
    def __init__(self, horizon_s: int = 3600, horizon_avg_s: int = 600,
                 skew_tolerance_s: int = 2):
        if horizon_s <= 0 or horizon_avg_s <= 0 or horizon_avg_s > horizon_s:
            raise ValueError("need 0 < horizon_avg_s <= horizon_s")
        self.horizon_s = horizon_s
        self.horizon_avg_s = horizon_avg_s
        self.skew_tolerance_s = skew_tolerance_s
        self.now: int | None = None
        self.stream_start: int | None = None
        self._games: dict[str, _GameBuckets] = {}
        self.metrics = {"ingested": 0, "late_dropped": 0, "future_clamped": 0}

    def observe(self, second: int) -> None:
        """Advance the clock without counting anything."""
        if self.now is None or second > self.now:
            self.now = second
        if self.stream_start is None or second < self.stream_start:
            self.stream_start = second

    def ingest(self, tweet_second: int, game_ids, events=None,
               now: int | None = None) -> None:
        """Count one tweet toward every game in game_ids.

        ``events`` is a multiset (EventType -> count). When the driver
        passes its clock, stale stamps are dropped and far-future stamps
        clamped, both tallied in ``metrics``.
        """
        if now is not None:
            self.observe(now)
            if tweet_second < now - self.horizon_s:
                self.metrics["late_dropped"] += 1
                return
            if tweet_second > now + self.skew_tolerance_s:
                tweet_second = now
                self.metrics["future_clamped"] += 1
        self.observe(tweet_second)
        self.metrics["ingested"] += 1
        floor = self.now - self.horizon_s
        for gid in game_ids:
            bucket = self._games.get(gid)
            if bucket is None:
                bucket = self._games[gid] = _GameBuckets(tweet_second)
            bucket.add(tweet_second, events)
            bucket.trim(floor)

    def game_ids(self) -> tuple[str, ...]:
        return tuple(self._games)

    def _check_retention(self, from_second: int) -> None:
        if self.now is not None and from_second < self.now - self.horizon_s:
            raise OutOfRetention(
                f"second {from_second} is older than the {self.horizon_s}s horizon"
            )

    def rate(self, game_id: str, from_second: int, to_second: int) -> int:
        """Exact count of attributed tweets in [from_second, to_second)."""
        if from_second >= to_second:
            return 0
        self._check_retention(from_second)
        bucket = self._games.get(game_id)
        if bucket is None:
            return 0
        return bucket.total.range_sum(from_second - bucket.base,
                                      to_second - bucket.base)

    def keyword_rate(self, game_id: str, event_type: EventType,
                     from_second: int, to_second: int) -> int:
        if from_second >= to_second:
            return 0
        self._check_retention(from_second)
        bucket = self._games.get(game_id)
        if bucket is None:
            return 0
        return bucket.events[event_type].range_sum(from_second - bucket.base,
                                                   to_second - bucket.base)

    def _avg_divisor(self, at_second: int) -> int:
        """Seconds of history available to average over, capped at horizon_avg.

        Anchoring at the observed stream start keeps early averages honest:
        ten seconds into the stream the mean is over ten seconds, not over
        590 imaginary silent ones.
        """
        if self.stream_start is None:
            return 0
        return min(at_second - self.stream_start, self.horizon_avg_s)

    def running_average(self, game_id: str, at_second: int) -> float:
        d = self._avg_divisor(at_second)
        if d <= 0:
            return 0.0
        return self.rate(game_id, at_second - d, at_second) / d

    def keyword_running_average(self, game_id: str, event_type: EventType,
                                at_second: int) -> float:
        d = self._avg_divisor(at_second)
        if d <= 0:
            return 0.0
        return self.keyword_rate(game_id, event_type, at_second - d, at_second) / d

    # ------------------------------------------------------------- export

    def snapshot(self, game_id: str) -> list[dict]:
        """Dense per-second records from first retained second to now."""
        bucket = self._games.get(game_id)
        if bucket is None or self.now is None:
            return []
        lo = bucket.base
        if self.now - self.horizon_s > lo:
            lo = self.now - self.horizon_s
        rows = []
        for second in range(lo, self.now + 1):
            idx = second - bucket.base
            total = bucket.total.values[idx] if 0 <= idx < bucket.span() else 0
            row = {"second": second, "total": total}
            for etype in REAL_EVENT_TYPES:
                vals = bucket.events[etype].values
                row[etype.code] = vals[idx] if 0 <= idx < len(vals) else 0
            rows.append(row)
        return rows

    def export_csv(self, game_id: str, target) -> None:
        rows = self.snapshot(game_id)
        close = False
        if isinstance(target, (str, bytes)) or hasattr(target, "__fspath__"):
            target = open(target, "w", newline="", encoding="utf-8")
            close = True
        try:
            fieldnames = ["second", "total"] + [e.code for e in REAL_EVENT_TYPES]
            writer = csv.DictWriter(target, fieldnames=fieldnames)
            writer.writeheader()
            writer.writerows(rows)
        finally:
            if close:
                target.close()

    def export_json(self, game_id: str, target) -> None:
        rows = self.snapshot(game_id)
        doc = {"game_id": game_id, "buckets": rows}
        if isinstance(target, (str, bytes)) or hasattr(target, "__fspath__"):
            with open(target, "w", encoding="utf-8") as fh:
                json.dump(doc, fh)
                fh.write("\n")
        else:
            json.dump(doc, target)
