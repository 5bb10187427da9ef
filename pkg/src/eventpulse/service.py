"""Long-running detection service: stream sources, analysis, JSON endpoints.

The service wires the incremental engine to a stream source and exposes
live state over HTTP while persisting append-only JSONL logs. Analysis is
clocked by each tweet's ``delivered_second`` (logical time), never by the
wall clock, so replaying a persisted log at any speed produces an event
log byte-identical to the batch engine's output on the same trace. Wall
time only paces delivery when a source is configured with a nonzero
speed.

Two cooperating paths run inside the worker thread, in delivered order:
ingestion (source -> attribution -> buckets -> tweet log) and analysis
(one detector step per fully elapsed second per game per enabled
solution -> event log + live endpoint state). HTTP handlers are
read-only: they take the state lock just long enough to copy a snapshot.

Endpoints:
  GET /games
      Hotness of every configured game: post rate averaged over the
      last ``hotness_window_s`` seconds plus the game's rank (1 = hottest;
      ranks are a permutation of 1..n, ties broken by game id).
  GET /games/{id}/timeline?from=A&to=B
      Per-second attributed totals and keyword counts (the bucket
      snapshot rows) plus detections in range. 404 for unknown games,
      400 for malformed ranges; the range is capped to bucket retention.
  GET /events?since=N
      Detections with sequence id > N, oldest first, for incremental
      polling. The response's ``last_id`` is the cursor for the next poll.

Config file (JSON, or TOML with the same keys):

    {
      "source": {"kind": "replay", "path": "trace.jsonl", "speed": 0},
      "games": "games.json",
      "detector": {"ratio_threshold": 1.7},
      "solutions_enabled": ["two_stage", "unified"],
      "listen": {"host": "127.0.0.1", "port": 8080},
      "persistence": {"tweet_log": "tweets.jsonl",
                      "event_log": "events.jsonl"},
      "hotness_window_s": 60
    }

Source kinds:
  replay     {"path": trace.jsonl, "speed": multiplier} — speed 0 means
             as fast as possible, 1.0 means real time, 2.0 double speed.
  simulate   {"scenario": bundled name or scenario.json path,
              "seed": optional override, "speed": as above}
  external   {"adapter": registered name, "options": {...},
              "max_retries": 3, "retry_backoff_s": 1.0} — adapters are
             registered in-process via ``register_adapter``; none ship
             with the package. An adapter factory returns an iterable of
             ``RawMessage`` (timestamped raw text); mid-stream failures
             raise SourceError and the service reconnects with backoff,
             giving up (exit code 3) after ``max_retries`` attempts.

``games`` may be omitted for simulate sources (the scenario carries its
own lexicons); otherwise it names a JSON file made by ``save_games``.
"""

from __future__ import annotations

import dataclasses
import json
import logging
import re
import threading
import time
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlsplit

from .detect import TWO_STAGE, UNIFIED, DetectedEvent, DetectorConfig
from .errors import ConfigError, ParseError, SourceError
from .lexicon import GameLexicon, LexiconSet
from .pipeline import SOLUTIONS, StreamPipeline
from .simgen import (
    Scenario,
    Tweet,
    TweetTrace,
    apply_api_constraints,
    generate,
    load_scenario,
    read_trace,
)

log = logging.getLogger(__name__)

EVENT_LOG_FORMAT = "eventpulse-events"
GAMES_FORMAT = "eventpulse-games"
LOG_VERSION = 1

_TIMELINE_RE = re.compile(r"^/games/([^/]+)/timeline$")

# Published response schemas (JSON Schema draft 2020-12), one per endpoint.
# Tests validate every response against these; clients may import them.

_EVENT_RECORD_SCHEMA = {
    "type": "object",
    "required": ["id", "game_id", "event_type", "detected_at_second",
                 "keyword_count", "solution", "trigger"],
    "properties": {
        "id": {"type": "integer", "minimum": 1},
        "game_id": {"type": "string"},
        "event_type": {"type": "string"},
        "detected_at_second": {"type": "integer"},
        "keyword_count": {"type": "integer", "minimum": 0},
        "solution": {"enum": [TWO_STAGE, UNIFIED]},
        "trigger": {
            "type": "object",
            "required": ["at_second", "window_s", "ratio",
                         "second_half_rate"],
            "properties": {
                "at_second": {"type": "integer"},
                "window_s": {"type": "integer", "minimum": 2},
                "ratio": {"type": ["number", "null"]},  # null = infinite
                "second_half_rate": {"type": "number", "minimum": 0},
            },
        },
    },
}

GAMES_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["at_second", "hotness_window_s", "games"],
    "properties": {
        "at_second": {"type": ["integer", "null"]},
        "hotness_window_s": {"type": "integer", "minimum": 1},
        "games": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["game_id", "rate", "rank"],
                "properties": {
                    "game_id": {"type": "string"},
                    "rate": {"type": "number", "minimum": 0},
                    "rank": {"type": "integer", "minimum": 1},
                },
            },
        },
    },
}

TIMELINE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["game_id", "from", "to", "seconds", "events"],
    "properties": {
        "game_id": {"type": "string"},
        "from": {"type": "integer"},
        "to": {"type": "integer"},
        "seconds": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["second", "total"],
                "properties": {
                    "second": {"type": "integer"},
                    "total": {"type": "integer", "minimum": 0},
                },
                "additionalProperties": {"type": "integer", "minimum": 0},
            },
        },
        "events": {"type": "array", "items": _EVENT_RECORD_SCHEMA},
    },
}

EVENTS_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["events", "last_id"],
    "properties": {
        "events": {"type": "array", "items": _EVENT_RECORD_SCHEMA},
        "last_id": {"type": "integer", "minimum": 0},
    },
}


# --------------------------------------------------------------- games file

def save_games(lexicons, path) -> None:
    """Write a lexicon file loadable through ServiceConfig's ``games``."""
    games = lexicons.games if isinstance(lexicons, LexiconSet) else lexicons
    doc = {
        "format": GAMES_FORMAT,
        "version": LOG_VERSION,
        "games": [lex.to_doc() for lex in games],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, ensure_ascii=False)
        fh.write("\n")


def load_games(path) -> LexiconSet:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    entries = doc["games"] if isinstance(doc, dict) else doc
    return LexiconSet(GameLexicon.from_doc(g) for g in entries)


# ---------------------------------------------------------------- event log

def event_log_lines(events) -> list[str]:
    """The canonical serialized form shared by service and batch runs."""
    header = {"format": EVENT_LOG_FORMAT, "version": LOG_VERSION}
    return [json.dumps(header, ensure_ascii=False)] + [
        json.dumps(ev.to_doc(), ensure_ascii=False) for ev in events
    ]


def write_event_log(events, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for line in event_log_lines(events):
            fh.write(line + "\n")


def batch_events(trace: TweetTrace, lexicons,
                 cfg: DetectorConfig | None = None,
                 solutions=SOLUTIONS) -> list[DetectedEvent]:
    """The batch engine's output in emission order.

    This is the reference a replaying service must reproduce exactly:
    ``write_event_log(batch_events(trace, ...), path)`` yields a file
    byte-identical to the service's persisted event log for the same
    trace and config.
    """
    pipe = StreamPipeline(lexicons, cfg, solutions)
    for tweet in trace.tweets:
        pipe.feed(tweet)
    pipe.finish()
    return pipe.events


def read_event_log(path) -> list[DetectedEvent]:
    events: list[DetectedEvent] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                doc = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", line=lineno) from exc
            if lineno == 1 and doc.get("format") == EVENT_LOG_FORMAT:
                continue
            try:
                events.append(DetectedEvent.from_doc(doc))
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"bad event record: {exc}", line=lineno) from exc
    return events


# ------------------------------------------------------------------ sources

@dataclass(frozen=True)
class RawMessage:
    """What an external adapter delivers: a timestamped raw message."""

    delivered_second: int
    text: str
    device_class: str = "unknown"
    created_second: int | None = None


_ADAPTERS: dict[str, object] = {}


def register_adapter(name: str, factory) -> None:
    """Register an external stream adapter.

    ``factory(options: dict)`` must return an iterable of RawMessage in
    non-decreasing delivered order. A fresh iterable is requested after
    every SourceError, which is the reconnect.
    """
    _ADAPTERS[name] = factory


@dataclass(frozen=True)
class SourceSpec:
    kind: str  # replay | simulate | external
    path: str | None = None
    scenario: str | None = None
    seed: int | None = None
    speed: float = 0.0
    adapter: str | None = None
    options: dict = field(default_factory=dict)
    max_retries: int = 3
    retry_backoff_s: float = 1.0

    def __post_init__(self):
        if self.kind not in ("replay", "simulate", "external"):
            raise ConfigError(f"unknown source kind {self.kind!r}")
        if self.kind == "replay" and not self.path:
            raise ConfigError("replay source needs a trace path")
        if self.kind == "simulate" and not self.scenario:
            raise ConfigError("simulate source needs a scenario")
        if self.kind == "external" and not self.adapter:
            raise ConfigError("external source needs an adapter name")
        if self.speed < 0:
            raise ConfigError("speed must be >= 0 (0 = unpaced)")
        if self.max_retries < 0 or self.retry_backoff_s < 0:
            raise ConfigError("retries and backoff must be non-negative")


def resolve_scenario(ref: str, seed: int | None = None) -> Scenario:
    """A bundled scenario name or a scenario JSON path, optionally reseeded."""
    from . import scenarios

    bundled = {
        "superbowl": scenarios.superbowl,
        "regular_season": scenarios.regular_season,
    }
    if ref in bundled:
        scenario = bundled[ref]() if seed is None else bundled[ref](seed=seed)
        return scenario
    scenario = load_scenario(ref)
    if seed is not None:
        scenario = dataclasses.replace(scenario, seed=seed)
    return scenario


# ------------------------------------------------------------------- config

@dataclass(frozen=True)
class ServiceConfig:
    source: SourceSpec
    games: str | None = None  # lexicon file; optional for simulate sources
    detector: DetectorConfig = field(default_factory=DetectorConfig)
    solutions_enabled: tuple[str, ...] = SOLUTIONS
    host: str = "127.0.0.1"
    port: int = 0  # 0 picks an ephemeral port
    tweet_log: str | None = None
    event_log: str | None = None
    hotness_window_s: int = 60

    def __post_init__(self):
        if not self.solutions_enabled:
            raise ConfigError("at least one solution must be enabled")
        for sol in self.solutions_enabled:
            if sol not in (TWO_STAGE, UNIFIED):
                raise ConfigError(f"unknown solution {sol!r}")
        if self.hotness_window_s <= 0:
            raise ConfigError("hotness_window_s must be positive")
        if self.games is None and self.source.kind != "simulate":
            raise ConfigError(
                f"{self.source.kind} source needs a games lexicon file")


def service_config_from_doc(doc: dict) -> ServiceConfig:
    try:
        source = SourceSpec(**doc["source"])
    except KeyError as exc:
        raise ConfigError(f"service config missing field {exc}") from exc
    except TypeError as exc:
        raise ConfigError(f"bad source spec: {exc}") from exc
    listen = doc.get("listen", {})
    persistence = doc.get("persistence", {})
    try:
        detector = DetectorConfig(**{
            k: tuple(v) if isinstance(v, list) else v
            for k, v in doc.get("detector", {}).items()
        })
    except TypeError as exc:
        raise ConfigError(f"bad detector config: {exc}") from exc
    return ServiceConfig(
        source=source,
        games=doc.get("games"),
        detector=detector,
        solutions_enabled=tuple(doc.get("solutions_enabled", SOLUTIONS)),
        host=listen.get("host", "127.0.0.1"),
        port=int(listen.get("port", 0)),
        tweet_log=persistence.get("tweet_log"),
        event_log=persistence.get("event_log"),
        hotness_window_s=int(doc.get("hotness_window_s", 60)),
    )


def load_service_config(path) -> ServiceConfig:
    """Read a service config from a JSON or TOML file."""
    text = open(path, "rb").read()
    if str(path).endswith(".toml"):
        try:
            import tomllib
        except ModuleNotFoundError:  # Python < 3.11
            import tomli as tomllib
        try:
            doc = tomllib.loads(text.decode("utf-8"))
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"invalid TOML config: {exc}") from exc
    else:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON config: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("service config must be a JSON/TOML object")
    return service_config_from_doc(doc)


# ------------------------------------------------------------------ service

class EventPulseService:
    """One running instance: worker thread + HTTP server.

    Lifecycle: ``start()`` launches both; ``join_stream()`` blocks until
    the source is exhausted (or failed); ``shutdown()`` stops everything
    and flushes the logs. ``run()`` bundles the three for the CLI.
    """

    def __init__(self, config: ServiceConfig):
        self.config = config
        # Resolve everything that can be wrong about the config here, so
        # failures are fatal at startup and never surface mid-stream.
        self._trace: TweetTrace | None = None
        scenario: Scenario | None = None
        if config.source.kind == "replay":
            self._trace = read_trace(config.source.path)
        elif config.source.kind == "simulate":
            scenario = resolve_scenario(
                config.source.scenario, config.source.seed)
            self._trace = apply_api_constraints(generate(scenario),
                                                scenario.api)
        elif config.source.adapter not in _ADAPTERS:
            raise ConfigError(
                f"no adapter registered as {config.source.adapter!r}")
        if config.games is not None:
            self.lexicons = load_games(config.games)
        else:
            self.lexicons = scenario.lexicon_set()
        self._by_game = {lex.game_id: lex for lex in self.lexicons}
        self.pipeline = StreamPipeline(
            self.lexicons, config.detector, config.solutions_enabled)
        self._lock = threading.Lock()
        self._stop = threading.Event()
        self._stream_done = threading.Event()
        self.source_failed = False
        self._event_docs: list[dict] = []  # docs + "id", oldest first
        self._tweet_fh = None
        self._event_fh = None
        self._worker: threading.Thread | None = None
        self._httpd = ThreadingHTTPServer(
            (config.host, config.port), _make_handler(self))
        self._httpd.daemon_threads = True
        self._http_thread: threading.Thread | None = None

    # ---------------------------------------------------------- lifecycle

    @property
    def address(self) -> tuple[str, int]:
        """Bound listen address; the port is concrete even if 0 was asked."""
        return self._httpd.server_address[:2]

    def start(self) -> None:
        self._open_logs(self._trace if self._trace is not None
                        else TweetTrace((), (), 0, 0))
        self._http_thread = threading.Thread(
            target=self._httpd.serve_forever, name="eventpulse-http",
            daemon=True)
        self._http_thread.start()
        self._worker = threading.Thread(
            target=self._stream_loop, name="eventpulse-stream", daemon=True)
        self._worker.start()

    def join_stream(self, timeout: float | None = None) -> bool:
        """Wait for the source to drain; True once the stream is finished."""
        return self._stream_done.wait(timeout)

    def shutdown(self) -> None:
        """Stop streaming, flush and close the logs, stop the endpoints."""
        self._stop.set()
        if self._worker is not None:
            self._worker.join()
        with self._lock:
            for fh in (self._tweet_fh, self._event_fh):
                if fh is not None:
                    fh.flush()
                    fh.close()
            self._tweet_fh = self._event_fh = None
        self._httpd.shutdown()
        if self._http_thread is not None:
            self._http_thread.join()
        self._httpd.server_close()

    def run(self) -> int:
        """Start, stream to completion, shut down; the CLI's blocking body."""
        self.start()
        try:
            while not self.join_stream(timeout=0.2):
                pass
        except KeyboardInterrupt:
            log.info("interrupted; shutting down")
        finally:
            self.shutdown()
        return 3 if self.source_failed else 0

    # ------------------------------------------------------------ sources

    def _source_tweets(self):
        """Yield tweets in delivered order."""
        spec = self.config.source
        if self._trace is not None:
            yield from self._paced(self._trace.tweets, spec.speed)
        else:
            yield from self._external(spec)

    def _paced(self, tweets, speed: float):
        if not tweets:
            return
        if speed <= 0:
            yield from tweets
            return
        wall_start = time.monotonic()
        stream_start = tweets[0].delivered_second
        for tw in tweets:
            due = wall_start + (tw.delivered_second - stream_start) / speed
            while not self._stop.is_set():
                remaining = due - time.monotonic()
                if remaining <= 0:
                    break
                time.sleep(min(remaining, 0.05))
            if self._stop.is_set():
                return
            yield tw

    def _external(self, spec: SourceSpec):
        factory = _ADAPTERS[spec.adapter]  # presence checked at startup
        next_id = 0
        attempts = 0
        while True:
            try:
                for msg in factory(dict(spec.options)):
                    created = (msg.created_second
                               if msg.created_second is not None
                               else msg.delivered_second)
                    yield Tweet(id=next_id, created_second=created,
                                delivered_second=msg.delivered_second,
                                text=msg.text, device_class=msg.device_class)
                    next_id += 1
                return
            except SourceError as exc:
                attempts += 1
                if attempts > spec.max_retries:
                    raise
                log.warning("source error (%s); reconnect %d/%d",
                            exc, attempts, spec.max_retries)
                if self._stop.wait(spec.retry_backoff_s * attempts):
                    return

    # ---------------------------------------------------------- streaming

    def _open_logs(self, trace: TweetTrace) -> None:
        cfg = self.config
        if cfg.tweet_log is not None:
            self._tweet_fh = open(cfg.tweet_log, "w", encoding="utf-8")
            header = {
                "format": "eventpulse-trace",
                "version": LOG_VERSION,
                "seed": trace.seed,
                "duration_s": trace.duration_s,
                "truth": [ev.to_doc() for ev in trace.truth],
            }
            self._tweet_fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        if cfg.event_log is not None:
            self._event_fh = open(cfg.event_log, "w", encoding="utf-8")
            self._event_fh.write(event_log_lines(())[0] + "\n")

    def _record_events(self, emitted) -> None:
        for ev in emitted:
            doc = ev.to_doc()
            if self._event_fh is not None:
                self._event_fh.write(json.dumps(doc, ensure_ascii=False) + "\n")
            doc["id"] = len(self._event_docs) + 1
            self._event_docs.append(doc)

    def _stream_loop(self) -> None:
        try:
            source = self._source_tweets()
            for tweet in source:
                if self._stop.is_set():
                    break
                with self._lock:
                    emitted = self.pipeline.feed(tweet)
                    if self._tweet_fh is not None:
                        self._tweet_fh.write(
                            json.dumps(tweet.to_doc(), ensure_ascii=False)
                            + "\n")
                    self._record_events(emitted)
            else:
                # Source drained normally: the stream is over, so the
                # final second has fully elapsed and gets its step.
                with self._lock:
                    self._record_events(self.pipeline.finish())
        except SourceError as exc:
            log.error("source failed permanently: %s", exc)
            self.source_failed = True
        except Exception:
            log.exception("stream worker crashed")
            self.source_failed = True
        finally:
            with self._lock:  # stream over: logs are complete, make it so on disk
                for fh in (self._tweet_fh, self._event_fh):
                    if fh is not None:
                        fh.flush()
            self._stream_done.set()

    # ------------------------------------------------------ endpoint state

    def hotness(self) -> dict:
        window = self.config.hotness_window_s
        with self._lock:
            store = self.pipeline.store
            now = store.now
            rows = []
            for lex in self.lexicons:
                if now is None:
                    rate = 0.0
                else:
                    count = store.rate(lex.game_id, now + 1 - window, now + 1)
                    rate = count / window
                rows.append({"game_id": lex.game_id, "rate": rate})
        rows.sort(key=lambda r: (-r["rate"], r["game_id"]))
        for rank, row in enumerate(rows, start=1):
            row["rank"] = rank
        return {
            "at_second": now,
            "hotness_window_s": window,
            "games": rows,
        }

    def timeline(self, game_id: str, from_s: int | None,
                 to_s: int | None) -> dict:
        lex = self._by_game.get(game_id)
        if lex is None:
            raise KeyError(game_id)
        if from_s is not None and to_s is not None and from_s > to_s:
            raise ValueError("from > to")
        with self._lock:
            store = self.pipeline.store
            now = store.now
            if now is None:  # no traffic yet: nothing to report
                lo_avail, hi_avail = 0, -1
            else:
                lo_avail = max(store.stream_start, now - store.horizon_s)
                hi_avail = now
            lo = lo_avail if from_s is None else max(from_s, lo_avail)
            hi = hi_avail if to_s is None else min(to_s, hi_avail)
            seconds = []
            for s in range(lo, hi + 1):
                row = {"second": s,
                       "total": store.rate(game_id, s, s + 1)}
                for etype in lex.event_keywords:
                    row[etype.code] = store.keyword_rate(
                        game_id, etype, s, s + 1)
                seconds.append(row)
            events = [doc for doc in self._event_docs
                      if doc["game_id"] == game_id
                      and lo <= doc["detected_at_second"] <= hi]
        return {
            "game_id": game_id,
            "from": lo,
            "to": hi,
            "seconds": seconds,
            "events": events,
        }

    def events_since(self, since: int) -> dict:
        with self._lock:
            fresh = [doc for doc in self._event_docs if doc["id"] > since]
            last = self._event_docs[-1]["id"] if self._event_docs else 0
        return {"events": fresh, "last_id": last}


# --------------------------------------------------------------- HTTP layer

def _make_handler(service: EventPulseService):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # route to logging, not stderr
            log.debug("http: " + fmt, *args)

        def _send(self, status: int, doc: dict) -> None:
            body = json.dumps(doc, ensure_ascii=False).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def _error(self, status: int, message: str) -> None:
            self._send(status, {"error": message})

        def do_GET(self):  # noqa: N802 (http.server naming)
            try:
                url = urlsplit(self.path)
                query = parse_qs(url.query)
                self._route(url.path, query)
            except BrokenPipeError:
                pass
            except Exception as exc:  # defensive: never kill the server
                log.exception("endpoint failure")
                try:
                    self._error(500, f"internal error: {exc}")
                except Exception:
                    pass

        def _int_param(self, query, name) -> int | None:
            values = query.get(name)
            if not values:
                return None
            try:
                return int(values[0])
            except ValueError:
                raise ValueError(f"{name} must be an integer") from None

        def _route(self, path: str, query: dict) -> None:
            if path == "/games":
                self._send(200, service.hotness())
                return
            m = _TIMELINE_RE.match(path)
            if m:
                try:
                    from_s = self._int_param(query, "from")
                    to_s = self._int_param(query, "to")
                    doc = service.timeline(m.group(1), from_s, to_s)
                except ValueError as exc:
                    self._error(400, str(exc))
                except KeyError:
                    self._error(404, f"unknown game {m.group(1)!r}")
                else:
                    self._send(200, doc)
                return
            if path == "/events":
                try:
                    since = self._int_param(query, "since") or 0
                except ValueError as exc:
                    self._error(400, str(exc))
                    return
                self._send(200, service.events_since(since))
                return
            self._error(404, f"no such endpoint {path!r}")

    return Handler


def run(config: ServiceConfig | str) -> int:
    """Run a service to stream completion. Returns the process exit code:
    0 clean, 3 source failure after retries. Config errors raise
    ConfigError before anything starts (the CLI maps them to exit 2).
    """
    if not isinstance(config, ServiceConfig):
        config = load_service_config(config)
    return EventPulseService(config).run()
