"""Evaluation harness: truth matching, confusion matrices, RoC sweeps,
window-size distribution, delay statistics, and the brute-force oracle.

Matching rule (declared, since none is inherited): detections are walked
in time order and each takes the earliest still-unmatched truth event of
the same game and type with 0 <= detected - true <= match_horizon_s.
Unmatched detections are false positives; unmatched truths are misses.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .detect import TWO_STAGE, UNIFIED, DetectedEvent, DetectorConfig, TriggerWindow
from .lexicon import REAL_EVENT_TYPES, EventType, LexiconSet, attribute_games, \
    match_event_keywords, preprocess
from .pipeline import build_store_from_trace, evaluation_seconds
from .simgen import TweetTrace, TruthEvent

DEFAULT_MATCH_HORIZON_S = 90


@dataclass(frozen=True)
class MatchedPair:
    detected: DetectedEvent
    truth: TruthEvent
    truth_index: int
    delay_s: int


@dataclass(frozen=True)
class Matching:
    pairs: tuple[MatchedPair, ...]
    unmatched_detections: tuple[DetectedEvent, ...]
    unmatched_truths: tuple[TruthEvent, ...]

    @property
    def true_positive_rate(self) -> float:
        total = len(self.pairs) + len(self.unmatched_truths)
        return len(self.pairs) / total if total else 0.0


def match_events(detected, truth, match_horizon_s: int = DEFAULT_MATCH_HORIZON_S
                 ) -> Matching:
    detections = sorted(detected, key=lambda ev: ev.detected_at_second)
    order = sorted(range(len(truth)), key=lambda i: truth[i].true_second)
    taken = [False] * len(truth)
    pairs = []
    false_positives = []
    for ev in detections:
        found = None
        for i in order:
            if taken[i]:
                continue
            tr = truth[i]
            if tr.game_id != ev.game_id or tr.event_type is not ev.event_type:
                continue
            delay = ev.detected_at_second - tr.true_second
            if 0 <= delay <= match_horizon_s:
                found = (i, delay)
                break
            if delay < 0:
                # truths are in time order; later ones start even later
                break
        if found is None:
            false_positives.append(ev)
        else:
            i, delay = found
            taken[i] = True
            pairs.append(MatchedPair(ev, truth[i], i, delay))
    missed = tuple(truth[i] for i in order if not taken[i])
    return Matching(tuple(pairs), tuple(false_positives), missed)


_AXIS = (*REAL_EVENT_TYPES, EventType.NULL)


@dataclass(frozen=True)
class ConfusionMatrix:
    """Rows = recognized, columns = actual; NULL row holds misses, NULL
    column holds false positives, and the NULL/NULL corner is undefined."""

    cells: dict = field(default_factory=Counter)

    @classmethod
    def from_matching(cls, matching: Matching) -> "ConfusionMatrix":
        cells: Counter = Counter()
        for pair in matching.pairs:
            cells[(pair.detected.event_type, pair.truth.event_type)] += 1
        for ev in matching.unmatched_detections:
            cells[(ev.event_type, EventType.NULL)] += 1
        for tr in matching.unmatched_truths:
            cells[(EventType.NULL, tr.event_type)] += 1
        return cls(cells)

    def cell(self, recognized: EventType, actual: EventType) -> int:
        if recognized is EventType.NULL and actual is EventType.NULL:
            raise ValueError("the NULL/NULL cell is undefined")
        return self.cells.get((recognized, actual), 0)

    def column_sum(self, actual: EventType) -> int:
        return sum(self.cell(rec, actual) for rec in _AXIS
                   if not (rec is EventType.NULL and actual is EventType.NULL))

    def tpr(self, event_type: EventType) -> float:
        total = self.column_sum(event_type)
        return self.cell(event_type, event_type) / total if total else 0.0

    def false_positives(self, event_type: EventType) -> int:
        return self.cell(event_type, EventType.NULL)

    def to_doc(self) -> dict:
        grid = {}
        for rec in _AXIS:
            row = {}
            for act in _AXIS:
                if rec is EventType.NULL and act is EventType.NULL:
                    row[act.code] = None
                else:
                    row[act.code] = self.cell(rec, act)
            grid[rec.code] = row
        return grid

    def render(self) -> str:
        codes = [e.code for e in _AXIS]
        width = 6
        lines = ["recognized \\ actual".ljust(22)
                 + "".join(c.rjust(width) for c in codes)]
        for rec in _AXIS:
            cells = []
            for act in _AXIS:
                if rec is EventType.NULL and act is EventType.NULL:
                    cells.append("".rjust(width))
                else:
                    cells.append(str(self.cell(rec, act)).rjust(width))
            lines.append(rec.code.ljust(22) + "".join(cells))
        return "\n".join(lines)


def confusion_matrix(matching: Matching) -> ConfusionMatrix:
    return ConfusionMatrix.from_matching(matching)


# -------------------------------------------------------------------- RoC

@dataclass(frozen=True)
class RocPoint:
    mode: str
    threshold: float
    tpr: float
    fpr: float
    triggers: int


def _mode_name(mode) -> str:
    return mode if mode == "adaptive" else f"fixed-{int(mode)}"


def roc_sweep(trace: TweetTrace, lexicons, truth, cfg_base: DetectorConfig,
              thresholds, window_modes=("adaptive", 10, 20, 30, 60),
              match_horizon_s: int = DEFAULT_MATCH_HORIZON_S,
              warmup_s: int | None = None) -> dict[str, list[RocPoint]]:
    """Detection-stage-only sweep over ratio thresholds.

    For every (game, second) the strongest floor-passing window ratio is
    recorded once; each threshold then classifies those strengths, which
    makes TPR and FPR monotone in the threshold by construction.
    Recognition and cooldown are deliberately out of the loop: the sweep
    measures the burst detector alone.

    The first warmup_s seconds (default: the largest ladder window) are
    excluded from measurement: until a full window of history exists,
    half-covered windows report inflated ratios that say nothing about
    steady-state behavior. The live engine tolerates that transient (its
    recognition stage filters it); a sensitivity sweep should not score it.
    """
    lexset = lexicons if isinstance(lexicons, LexiconSet) else LexiconSet(lexicons)
    store = build_store_from_trace(trace, lexset)
    if warmup_s is None:
        warmup_s = cfg_base.window_ladder[-1]
    full = evaluation_seconds(trace)
    schedule = range(min(full.start + warmup_s, full.stop), full.stop)
    games = [g.game_id for g in lexset]

    # per (game, second): window_s -> ratio, floor already applied
    ratios: dict[tuple[str, int], dict[int, float]] = {}
    for gid in games:
        for t in schedule:
            avg = store.running_average(gid, t)
            floor = cfg_base.avg_floor_multiplier * avg
            per_window = {}
            for w in cfg_base.window_ladder:
                half = w // 2
                second = store.rate(gid, t - half, t)
                if second == 0 or second / half <= floor:
                    continue
                first = store.rate(gid, t - w, t - half)
                per_window[w] = math.inf if first == 0 else second / first
            if per_window:
                ratios[(gid, t)] = per_window

    horizons: dict[str, list[tuple[int, int]]] = {gid: [] for gid in games}
    for tr in truth:
        horizons.setdefault(tr.game_id, []).append(
            (tr.true_second, tr.true_second + match_horizon_s))

    def in_horizon(gid: str, t: int) -> bool:
        return any(lo <= t <= hi for lo, hi in horizons.get(gid, ()))

    eventless_total = sum(
        1 for gid in games for t in schedule if not in_horizon(gid, t))

    out: dict[str, list[RocPoint]] = {}
    for mode in window_modes:
        name = _mode_name(mode)
        strengths: dict[tuple[str, int], float] = {}
        for key, per_window in ratios.items():
            if mode == "adaptive":
                strengths[key] = max(per_window.values())
            elif int(mode) in per_window:
                strengths[key] = per_window[int(mode)]
        points = []
        for threshold in sorted(thresholds):
            triggers = [key for key, s in strengths.items() if s >= threshold]
            hit = 0
            for tr in truth:
                if any(gid == tr.game_id
                       and tr.true_second <= t <= tr.true_second + match_horizon_s
                       for gid, t in triggers):
                    hit += 1
            false_seconds = sum(
                1 for gid, t in triggers if not in_horizon(gid, t))
            tpr = hit / len(truth) if truth else 0.0
            fpr = false_seconds / eventless_total if eventless_total else 0.0
            points.append(RocPoint(name, float(threshold), tpr, fpr,
                                   len(triggers)))
        out[name] = points
    return out


def adaptive_dominates(adaptive_points, fixed_points, tol: float = 1e-12) -> bool:
    """True if for every fixed-mode point some adaptive point is at least
    as good on both axes. The no-trigger corner (0, 0) always exists."""
    candidates = [(p.fpr, p.tpr) for p in adaptive_points] + [(0.0, 0.0)]
    for p in fixed_points:
        if not any(f <= p.fpr + tol and t >= p.tpr - tol
                   for f, t in candidates):
            return False
    return True


def write_roc_csv(points_by_mode: dict, target) -> None:
    import csv

    close = False
    if isinstance(target, (str, bytes)) or hasattr(target, "__fspath__"):
        target = open(target, "w", newline="", encoding="utf-8")
        close = True
    try:
        writer = csv.writer(target)
        writer.writerow(["mode", "threshold", "tpr", "fpr", "triggers"])
        for mode in points_by_mode:
            for p in points_by_mode[mode]:
                writer.writerow([p.mode, p.threshold, p.tpr, p.fpr, p.triggers])
    finally:
        if close:
            target.close()


# ------------------------------------------------------- window distribution

def window_size_distribution(detections) -> dict[int, int]:
    hist: Counter = Counter()
    for ev in detections:
        hist[ev.trigger.window_s] += 1
    return dict(hist)


# ------------------------------------------------------------- delay stats

@dataclass(frozen=True)
class DelayStats:
    count: int
    mean_s: float | None
    min_s: int | None
    max_s: int | None
    human_mean_s: float | None = None
    api_mean_s: float | None = None
    analysis_mean_s: float | None = None

    def to_doc(self) -> dict:
        return {
            "count": self.count,
            "mean_s": self.mean_s,
            "min_s": self.min_s,
            "max_s": self.max_s,
            "human_mean_s": self.human_mean_s,
            "api_mean_s": self.api_mean_s,
            "analysis_mean_s": self.analysis_mean_s,
        }


def delay_stats(matching: Matching, trace: TweetTrace | None = None,
                cfg: DetectorConfig | None = None) -> DelayStats:
    """Aggregate recognition delays; decompose when burst metadata exists.

    Decomposition per matched event: human = first reacting tweet's
    created second minus the true second; api = that tweet's delivery
    lag; analysis = detection second minus the second the
    min_keyword_count-th burst tweet was delivered (the earliest moment
    the evidence threshold was even satisfiable).
    """
    delays = [p.delay_s for p in matching.pairs]
    if not delays:
        return DelayStats(0, None, None, None)
    mean = sum(delays) / len(delays)
    stats = dict(count=len(delays), mean_s=mean, min_s=min(delays),
                 max_s=max(delays))
    if trace is not None:
        k = (cfg or DetectorConfig()).min_keyword_count
        by_event: dict[int, list] = {}
        for tw in trace.tweets:
            if tw.truth_event is not None:
                by_event.setdefault(tw.truth_event, []).append(tw)
        human, api, analysis = [], [], []
        for pair in matching.pairs:
            burst = by_event.get(pair.truth_index)
            if not burst:
                continue
            first = min(burst, key=lambda tw: tw.created_second)
            human.append(first.created_second - pair.truth.true_second)
            api.append(first.delivered_second - first.created_second)
            delivered = sorted(tw.delivered_second for tw in burst)
            evidence_at = delivered[min(k, len(delivered)) - 1]
            analysis.append(pair.detected.detected_at_second - evidence_at)
        if human:
            stats["human_mean_s"] = sum(human) / len(human)
            stats["api_mean_s"] = sum(api) / len(api)
            stats["analysis_mean_s"] = sum(analysis) / len(analysis)
    return DelayStats(**stats)


# ------------------------------------------------------- brute-force oracle

def brute_force_oracle(trace: TweetTrace, lexicons, cfg: DetectorConfig,
                       solution: str, horizon_avg_s: int = 600
                       ) -> list[DetectedEvent]:
    """Reference engine: re-aggregates and re-scans everything per second.

    Favors flat, obviously correct arithmetic (dict lookups and plain
    sums) over the incremental engine's prefix machinery; used to pin the
    engine's exact output.
    """
    if solution not in (TWO_STAGE, UNIFIED):
        raise ValueError(f"unknown solution {solution!r}")
    lexset = lexicons if isinstance(lexicons, LexiconSet) else LexiconSet(lexicons)
    if not trace.tweets:
        return []

    by_id = {g.game_id: g for g in lexset}
    totals: dict[str, Counter] = {gid: Counter() for gid in by_id}
    kw: dict[str, dict[EventType, Counter]] = {
        gid: {e: Counter() for e in REAL_EVENT_TYPES} for gid in by_id}
    for tweet in trace.tweets:
        parsed = preprocess(tweet.text, lexset, tweet.device_class)
        if not parsed.is_english:
            continue
        for gid in attribute_games(parsed, lexset):
            totals[gid][tweet.delivered_second] += 1
            for etype, n in match_event_keywords(parsed, by_id[gid]).items():
                kw[gid][etype][tweet.delivered_second] += n

    stream_start = trace.tweets[0].delivered_second
    stream_end = trace.tweets[-1].delivered_second + 2

    def make_span(series: Counter):
        # one plain forward pass; seconds outside [start, end) hold zero
        prefix = [0]
        total = 0
        for s in range(stream_start, stream_end):
            total += series.get(s, 0)
            prefix.append(total)

        def span_sum(lo: int, hi: int) -> int:
            lo = min(max(lo, stream_start), stream_end)
            hi = min(max(hi, stream_start), stream_end)
            if hi <= lo:
                return 0
            return prefix[hi - stream_start] - prefix[lo - stream_start]

        return span_sum

    def scan(span_sum, t: int, extra_gate=None):
        d = min(t - stream_start, horizon_avg_s)
        avg = span_sum(t - d, t) / d if d > 0 else 0.0
        for w in cfg.window_ladder:
            half = w // 2
            second = span_sum(t - half, t)
            if second == 0:
                continue
            if extra_gate is not None and second < extra_gate:
                continue
            first = span_sum(t - w, t - half)
            ratio = math.inf if first == 0 else second / first
            if ratio >= cfg.ratio_threshold and \
                    second / half > cfg.avg_floor_multiplier * avg:
                return w, ratio, second
        return None

    total_span = {gid: make_span(totals[gid]) for gid in by_id}
    kw_span = {gid: {e: make_span(kw[gid][e]) for e in REAL_EVENT_TYPES}
               for gid in by_id}

    last_emit: dict[tuple[str, EventType], int] = {}
    events: list[DetectedEvent] = []
    for t in evaluation_seconds(trace):
        for lex in lexset:
            gid = lex.game_id
            if solution == TWO_STAGE:
                found = scan(total_span[gid], t)
                if found is None:
                    continue
                w, ratio, second = found
                half = w // 2
                counts = {e: kw_span[gid][e](t - half, t)
                          for e in REAL_EVENT_TYPES if e in lex.event_keywords}
                if not counts:
                    continue
                best = min(counts, key=lambda e: (-counts[e], e.priority))
                if counts[best] < cfg.min_keyword_count:
                    continue
                key = (gid, best)
                if key in last_emit and t - last_emit[key] < cfg.cooldown_s:
                    continue
                last_emit[key] = t
                events.append(DetectedEvent(
                    gid, best, t,
                    TriggerWindow(gid, t, w, ratio, second / half),
                    counts[best], TWO_STAGE))
            else:
                for etype in REAL_EVENT_TYPES:
                    found = scan(kw_span[gid][etype], t,
                                 extra_gate=cfg.min_keyword_count)
                    if found is None:
                        continue
                    w, ratio, second = found
                    key = (gid, etype)
                    if key in last_emit and t - last_emit[key] < cfg.cooldown_s:
                        continue
                    last_emit[key] = t
                    events.append(DetectedEvent(
                        gid, etype, t,
                        TriggerWindow(gid, t, w, ratio, second / (w // 2)),
                        second, UNIFIED))
    return events


# ------------------------------------------------------------ full report

def evaluate_run(detected, truth, trace: TweetTrace | None = None,
                 cfg: DetectorConfig | None = None,
                 match_horizon_s: int = DEFAULT_MATCH_HORIZON_S,
                 solution: str | None = None) -> dict:
    matching = match_events(detected, truth, match_horizon_s)
    matrix = confusion_matrix(matching)
    stats = delay_stats(matching, trace, cfg)
    return {
        "solution": solution,
        "match_horizon_s": match_horizon_s,
        "truth_events": len(truth),
        "detections": len(list(detected)),
        "matched": len(matching.pairs),
        "missed": len(matching.unmatched_truths),
        "false_positives": len(matching.unmatched_detections),
        "true_positive_rate": matching.true_positive_rate,
        "confusion": matrix.to_doc(),
        "delays": stats.to_doc(),
        "window_distribution": {
            str(w): n for w, n in
            sorted(window_size_distribution(detected).items())
        },
    }
