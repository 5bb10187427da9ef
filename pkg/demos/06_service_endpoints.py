"""The long-running service: replay a trace, poll the JSON endpoints.

The service consumes a stream source (here: a persisted trace replayed
as fast as possible), runs the analysis per delivered second, persists
append-only JSONL logs, and serves live state over HTTP:

    GET /games                       per-game hotness + rank
    GET /games/{id}/timeline?from&to per-second totals + detections
    GET /events?since=N              incremental detection cursor

Analysis is clocked by the stream's own seconds, never the wall clock,
so the persisted event log is byte-identical to the batch engine's
output on the same trace — shown at the end.
"""

import json
import tempfile
import urllib.request
from pathlib import Path

from eventpulse import (
    EventPulseService,
    ServiceConfig,
    SourceSpec,
    apply_api_constraints,
    batch_events,
    generate,
    regular_season,
    save_games,
    write_event_log,
    write_trace,
)


def get(svc: EventPulseService, path: str) -> dict:
    host, port = svc.address
    with urllib.request.urlopen(f"http://{host}:{port}{path}") as resp:
        return json.loads(resp.read())


def main() -> None:
    tmp = Path(tempfile.mkdtemp())
    scenario = regular_season()
    trace = apply_api_constraints(generate(scenario), scenario.api)
    write_trace(trace, tmp / "trace.jsonl")
    save_games(scenario.lexicon_set(), tmp / "games.json")

    svc = EventPulseService(ServiceConfig(
        source=SourceSpec(kind="replay", path=str(tmp / "trace.jsonl")),
        games=str(tmp / "games.json"),
        tweet_log=str(tmp / "tweets.jsonl"),
        event_log=str(tmp / "events.jsonl"),
    ))
    svc.start()
    svc.join_stream(timeout=300)

    hotness = get(svc, "/games")
    print(f"GET /games (at stream second {hotness['at_second']}):")
    for game in hotness["games"]:
        print(f"  #{game['rank']} {game['game_id']}  "
              f"{game['rate']:.2f} tweets/s over the last "
              f"{hotness['hotness_window_s']}s")

    events = get(svc, "/events?since=0")
    print(f"\nGET /events?since=0 -> {len(events['events'])} detections, "
          f"cursor {events['last_id']}")
    first = events["events"][0]
    print(f"  first: {first['solution']} {first['event_type']} in "
          f"{first['game_id']} at t={first['detected_at_second']}")
    tail = get(svc, f"/events?since={events['last_id'] - 2}")
    print(f"  incremental poll since={events['last_id'] - 2} -> "
          f"{len(tail['events'])} new")

    window = f"from={first['detected_at_second'] - 5}" \
             f"&to={first['detected_at_second'] + 5}"
    timeline = get(svc, f"/games/{first['game_id']}/timeline?{window}")
    print(f"\nGET /games/{first['game_id']}/timeline?{window}:")
    for row in timeline["seconds"][::2]:
        print(f"  t={row['second']:3d} total={row['total']:3d} "
              f"TD={row['TD']:2d} INT={row['INT']:2d}")
    print(f"  detections in range: {len(timeline['events'])}")

    svc.shutdown()

    reference = tmp / "batch.jsonl"
    write_event_log(batch_events(trace, scenario.lexicon_set()), reference)
    identical = (tmp / "events.jsonl").read_bytes() == reference.read_bytes()
    print(f"\npersisted event log == batch engine output: {identical}")
    print(f"logs in {tmp}")


if __name__ == "__main__":
    main()
