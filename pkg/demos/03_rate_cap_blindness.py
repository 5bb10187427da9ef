"""Why a delivery cap blinds total-rate detection — and what fixes it.

The bundled championship scenario runs one enormous game: an 80 tweets/s
baseline squeezed through a 50 tweets/s delivery cap. Every delivered
second carries exactly 50 tweets, so the total-rate series is a flat
line: the two-stage solution (burst on the total rate, then recognize)
never sees a burst and emits nothing all game.

The unified solution runs the same window ladder directly on each
event-keyword rate series. Keyword tweets are thinned by the cap like
everything else, but their per-keyword series still bursts when an event
happens — the cap pins the sum, not the mix. Same thresholds, same
cooldowns, eleven events found.
"""

from collections import Counter

from eventpulse import (
    DetectorConfig,
    TWO_STAGE,
    UNIFIED,
    apply_api_constraints,
    generate,
    match_events,
    run_trace,
    superbowl,
)


def main() -> None:
    scenario = superbowl()
    raw = generate(scenario)
    trace = apply_api_constraints(raw, scenario.api)

    per_second = Counter(tw.delivered_second for tw in trace.tweets)
    event = scenario.events[0]
    print(f"created {len(raw.tweets)} tweets, delivered "
          f"{len(trace.tweets)} under the {scenario.api.cap_tweets_per_s}/s "
          f"cap")
    print(f"\ndelivered totals around the first {event.event_type.code} "
          f"at t={event.true_second} (flat — the cap hides the burst):")
    for second in range(event.true_second - 3, event.true_second + 30, 4):
        print(f"  t={second:3d}  {per_second[second]} tweets/s")

    results = run_trace(trace, scenario.lexicon_set(), DetectorConfig())
    print(f"\ntwo_stage detections: {len(results[TWO_STAGE])} "
          f"(rate detection is blind)")

    matching = match_events(results[UNIFIED], scenario.events,
                            match_horizon_s=90)
    print(f"unified detections : {len(results[UNIFIED])} — matched "
          f"{len(matching.pairs)}/{len(scenario.events)} truths, "
          f"{len(matching.unmatched_detections)} false positives")
    for pair in matching.pairs:
        ev = pair.detected
        print(f"  {ev.event_type.code:4s} true t={pair.truth.true_second:3d} "
              f"detected t={ev.detected_at_second:3d} "
              f"(+{pair.delay_s}s, window {ev.trigger.window_s}s, "
              f"{ev.keyword_count} keyword tweets)")


if __name__ == "__main__":
    main()
