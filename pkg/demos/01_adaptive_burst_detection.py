"""Adaptive sliding-window burst detection on a hand-built rate series.

The detector evaluates a ladder of window sizes (10, 20, 30, 60 s) every
second. A window ending at second t is split into halves; it triggers
when the second half out-rates the first by the ratio threshold (1.7)
while also clearing the long-run average floor. The smallest qualifying
window wins, so sharp bursts are caught in 10 s and slow swells escalate
to wider windows.

This script feeds three shapes into a bucket store — a sharp burst, a
slow swell, and a sub-threshold wobble — and prints what the ladder does
at each evaluation second.
"""

from eventpulse import DetectorConfig, TimeBucketStore, detect_step


def fill(store: TimeBucketStore, game_id: str, rates: dict[int, int],
         baseline: int, duration: int) -> None:
    for second in range(duration):
        for _ in range(rates.get(second, baseline)):
            store.ingest(second, {game_id})


def narrate(title: str, rates: dict[int, int], baseline: int = 10,
            duration: int = 400) -> None:
    store = TimeBucketStore()
    fill(store, "G1", rates, baseline, duration)
    cfg = DetectorConfig()
    print(f"\n=== {title} ===")
    fired = []
    for second in range(duration + 1):
        trigger = detect_step("G1", second, store, cfg)
        if trigger is not None:
            fired.append(trigger)
            print(f"  t={second:3d}  window={trigger.window_s:2d}s  "
                  f"ratio={trigger.ratio:5.2f}  "
                  f"second-half rate={trigger.second_half_rate:.1f}/s")
    if not fired:
        print("  no window ever triggered")


def main() -> None:
    baseline = 10

    # A sharp spike: 5x the baseline for six seconds starting at t=300.
    sharp = {second: 50 for second in range(300, 306)}
    narrate("sharp burst (5x for 6 s) -> caught by the 10 s window",
            sharp, baseline)

    # A slow swell: the rate creeps up over 40 seconds. Ten-second halves
    # never differ by 1.7x, but the 60 s window sees the full climb.
    swell = {300 + i: baseline + i for i in range(40)}
    swell.update({340 + i: 50 for i in range(10)})
    narrate("slow swell over 40 s -> needs a wide window", swell, baseline)

    # Background wobble: +40% for a few seconds never crosses 1.7x.
    wobble = {second: 14 for second in range(300, 310)}
    narrate("sub-threshold wobble (1.4x) -> silence", wobble, baseline)


if __name__ == "__main__":
    main()
