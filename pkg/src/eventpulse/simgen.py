"""Deterministic tweet-stream generator and delivery-constraint emulator.

A Scenario fully determines the output: every random draw comes from
numpy generators seeded as [scenario seed, stream kind, stream index], so
each game's chatter, each event's burst, the noise, and the delivery drop
each own an independent substream. Regenerating with the same scenario is
byte-identical; editing one event never shifts another's draws.

Timeline model per injected event: the first reacting tweet is created at
true_second plus a triangular(13, 17, 27) human delay; non-mobile volume
ramps linearly to its peak over ramp_up_s then decays exponentially.
Mobile reactions start 3 to 5 seconds later and ramp over their own,
longer ramp. One tweet at the onset second is guaranteed so the sampled
delay is always realized in the trace.

``generate`` emits with delivered_second == created_second; realistic
delivery (fixed per-profile delay, optional per-second throughput cap
with seeded uniform dropping) is applied by ``apply_api_constraints``.
"""

from __future__ import annotations

import dataclasses
import json
import string
from dataclasses import dataclass, replace

import numpy as np

from .errors import ConfigError, ParseError
from .lexicon import EventType, GameLexicon, LexiconSet

TRACE_FORMAT = "eventpulse-trace"
TRACE_VERSION = 1

_STREAM_BASELINE = 0
_STREAM_EVENT = 1
_STREAM_NOISE = 2
_STREAM_DROP = 3

# default surface form used in burst text for each event type
EVENT_PHRASES = {
    EventType.TOUCHDOWN: ("touchdown",),
    EventType.INTERCEPTION: ("interception", "intercepted"),
    EventType.FIELD_GOAL: ("field goal",),
    EventType.FUMBLE: ("fumble", "fumbled"),
}

BASELINE_TEMPLATES = (
    "watching the {team} game with friends",
    "go {team} go",
    "the {team} offense looks sharp today",
    "{team} defense needs to wake up",
    "what a drive by the {team}",
    "third down again for the {team}",
    "the {team} coach is furious right now",
    "big {term} night for the {team}",
)

BASELINE_NO_TEAM_TEMPLATES = (
    "this {term} game is unreal",
    "best {term} sunday in years",
    "the refs are ruining this {term} game",
    "halftime already in the {term} game",
    "crowd is so loud at this {term} game",
    "this {term} matchup is so tense",
    "never a dull {term} sunday",
    "huge crowd for this {term} game",
)

BURST_TEMPLATES = (
    "{kw} {team}!!",
    "what a {kw} by the {team}",
    "{team} {kw} right now",
    "unbelievable {kw} by the {team}",
    "huge {kw} for the {team}",
    "the {team} with a {kw}, wow",
)

BURST_NO_TEAM_TEMPLATES = (
    "{kw}!!!",
    "omg {kw}",
    "no way, {kw}!",
    "did you see that {kw}",
    "{kw} changes everything",
    "that {kw} was incredible",
)

# Reaction chatter once the moment has passed: still clearly about the
# game, but no longer naming the event.
BURST_COMMENTARY_TEMPLATES = (
    "what a play by the {team}",
    "are you kidding me {team}",
    "the {team} bench is going crazy",
    "replay of that {team} play already",
    "this {team} game is absolutely wild",
    "cannot believe what the {team} just did",
    "that changes everything for the {team}",
    "the {team} crowd will not sit down",
)

BURST_COMMENTARY_NO_TEAM_TEMPLATES = (
    "what a play, this game is wild",
    "still shaking from that play",
    "no words for what just happened",
    "the replay looks even better",
    "this game keeps on delivering",
)

UNRELATED_TEMPLATES = (
    "just made the best pasta for dinner",
    "traffic on the bridge is terrible again",
    "new episode tonight, cannot wait",
    "my cat knocked over the plant again",
    "coffee first, questions later",
    "finally finished that book everyone loves",
    "rain all week, what a mood",
    "does anyone else just love mornings",
    "phone battery died at the worst time",
    "weekend plans: absolutely nothing",
)

FOREIGN_SNIPPETS = (
    "сегодня отличный матч смотрим всей семьей",
    "какая интересная игра сегодня вечером",
    "今日の試合は本当に素晴らしいですね",
    "すごい試合を見ています",
    "مباراة رائعة اليوم مع الأصدقاء",
    "το παιχνίδι απόψε είναι φανταστικό",
)


@dataclass(frozen=True)
class HumanDelayModel:
    first_tweet_delay_min_s: float = 13.0
    first_tweet_delay_mode_s: float = 17.0
    first_tweet_delay_max_s: float = 27.0
    mobile_extra_delay_min_s: float = 3.0
    mobile_extra_delay_max_s: float = 5.0
    mobile_fraction: float = 0.40
    ramp_up_s: int = 10
    ramp_up_mobile_s: int = 36
    decay_half_life_s: float = 30.0
    # Explicit event naming fades faster than the burst itself: once the
    # ramp peaks, reactions shift to commentary that no longer repeats
    # the keyword, so the keyword-carrying share halves on this clock.
    keyword_fade_half_life_s: float = 12.0

    def __post_init__(self):
        if not (0 < self.first_tweet_delay_min_s
                <= self.first_tweet_delay_mode_s
                <= self.first_tweet_delay_max_s):
            raise ConfigError("first-tweet delay must satisfy min <= mode <= max")
        if not 0 <= self.mobile_extra_delay_min_s <= self.mobile_extra_delay_max_s:
            raise ConfigError("mobile extra delay range invalid")
        if not 0.0 <= self.mobile_fraction <= 1.0:
            raise ConfigError("mobile_fraction must be within [0, 1]")
        if self.ramp_up_s < 1 or self.ramp_up_mobile_s < 1:
            raise ConfigError("ramp_up seconds must be >= 1")
        if self.decay_half_life_s <= 0:
            raise ConfigError("decay_half_life_s must be positive")
        if self.keyword_fade_half_life_s <= 0:
            raise ConfigError("keyword_fade_half_life_s must be positive")


@dataclass(frozen=True)
class ApiProfile:
    delivery_delay_s: int = 1
    cap_tweets_per_s: int | None = None

    def __post_init__(self):
        if self.delivery_delay_s < 0:
            raise ConfigError("delivery_delay_s must be >= 0")
        if self.cap_tweets_per_s is not None and self.cap_tweets_per_s < 1:
            raise ConfigError("cap_tweets_per_s must be >= 1 when set")

    @classmethod
    def popular_keyword(cls, cap: int | None = None) -> "ApiProfile":
        return cls(delivery_delay_s=1, cap_tweets_per_s=cap)

    @classmethod
    def custom_keyword(cls, cap: int | None = None) -> "ApiProfile":
        return cls(delivery_delay_s=30, cap_tweets_per_s=cap)


@dataclass(frozen=True)
class NoiseProfile:
    unrelated_rate: float = 0.0
    foreign_fraction: float = 0.0

    def __post_init__(self):
        if self.unrelated_rate < 0:
            raise ConfigError("unrelated_rate must be >= 0")
        if not 0.0 <= self.foreign_fraction <= 1.0:
            raise ConfigError("foreign_fraction must be within [0, 1]")


@dataclass(frozen=True)
class TextKnobs:
    team_mention_prob: float = 0.9
    misspelling_fraction: float = 0.0
    keyword_noise_rate: float = 0.0  # chance a baseline tweet drops a keyword

    def __post_init__(self):
        for name in ("team_mention_prob", "misspelling_fraction",
                     "keyword_noise_rate"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ConfigError(f"{name} must be within [0, 1]")


@dataclass(frozen=True)
class TruthEvent:
    game_id: str
    event_type: EventType
    true_second: int
    magnitude: float

    def to_doc(self) -> dict:
        return {
            "game_id": self.game_id,
            "event_type": self.event_type.code,
            "true_second": self.true_second,
            "magnitude": self.magnitude,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "TruthEvent":
        return cls(
            game_id=doc["game_id"],
            event_type=EventType.from_code(doc["event_type"]),
            true_second=int(doc["true_second"]),
            magnitude=float(doc["magnitude"]),
        )


@dataclass(frozen=True)
class GameScenario:
    lexicon: GameLexicon
    baseline_rate: float
    # surface strings used in generated text; the lexicon stores stems
    team_display: tuple[tuple[str, ...], tuple[str, ...]] | None = None
    event_phrases: dict | None = None

    def __post_init__(self):
        if self.baseline_rate < 0:
            raise ConfigError(
                f"{self.lexicon.game_id}: baseline_rate must be >= 0")

    def display_teams(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        if self.team_display is not None:
            return self.team_display
        return tuple(tuple(sorted(g)) for g in self.lexicon.team_groups)

    def phrases_for(self, event_type: EventType) -> tuple[str, ...]:
        if self.event_phrases and event_type in self.event_phrases:
            return tuple(self.event_phrases[event_type])
        return EVENT_PHRASES[event_type]


@dataclass(frozen=True)
class Scenario:
    games: tuple[GameScenario, ...]
    events: tuple[TruthEvent, ...]
    duration_s: int
    seed: int
    noise: NoiseProfile = NoiseProfile()
    delay_model: HumanDelayModel = HumanDelayModel()
    api: ApiProfile = ApiProfile()
    text: TextKnobs = TextKnobs()

    def __post_init__(self):
        if self.duration_s <= 0:
            raise ConfigError("duration_s must be positive")
        if not self.games:
            raise ConfigError("scenario needs at least one game")
        ids = {g.lexicon.game_id for g in self.games}
        # shared team tokens across concurrent games are a config error
        LexiconSet(g.lexicon for g in self.games)
        for ev in self.events:
            if ev.game_id not in ids:
                raise ConfigError(f"event references unknown game {ev.game_id!r}")
            if not 0 <= ev.true_second < self.duration_s:
                raise ConfigError(
                    f"event true_second {ev.true_second} outside [0, {self.duration_s})")
            if ev.magnitude <= 0:
                raise ConfigError("event magnitude must be > 0")

    def lexicon_set(self) -> LexiconSet:
        return LexiconSet(g.lexicon for g in self.games)


@dataclass(frozen=True)
class Tweet:
    id: int
    created_second: int
    delivered_second: int
    text: str
    device_class: str = "unknown"
    truth_event: int | None = None  # generator-private: index into trace truth

    def to_doc(self) -> dict:
        return {
            "id": self.id,
            "created": self.created_second,
            "delivered": self.delivered_second,
            "text": self.text,
            "device": self.device_class,
            "truth_event": self.truth_event,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "Tweet":
        return cls(
            id=int(doc["id"]),
            created_second=int(doc["created"]),
            delivered_second=int(doc["delivered"]),
            text=doc["text"],
            device_class=doc.get("device", "unknown"),
            truth_event=doc.get("truth_event"),
        )


@dataclass(frozen=True)
class TweetTrace:
    tweets: tuple[Tweet, ...]
    truth: tuple[TruthEvent, ...]
    duration_s: int
    seed: int

    def __post_init__(self):
        last = None
        for tw in self.tweets:
            if tw.delivered_second < tw.created_second:
                raise ConfigError(f"tweet {tw.id}: delivered before created")
            if last is not None and tw.delivered_second < last:
                raise ConfigError("trace not sorted by delivered_second")
            last = tw.delivered_second


def _misspell(word: str, rng) -> str:
    """One random character edit; inverse of the distance-1 normalizer."""
    if len(word) < 5:
        return word
    op = int(rng.integers(4))
    i = int(rng.integers(len(word) - 1))
    letters = string.ascii_lowercase
    if op == 0:  # transpose
        return word[:i] + word[i + 1] + word[i] + word[i + 2:]
    if op == 1:  # delete
        return word[:i] + word[i + 1:]
    if op == 2:  # substitute
        repl = letters[int(rng.integers(26))]
        return word[:i] + repl + word[i + 1:]
    return word[:i] + letters[int(rng.integers(26))] + word[i:]  # insert


def _misspell_phrase(phrase: str, rng) -> str:
    words = phrase.split()
    # pick the longest word; short ones cannot be recovered downstream
    target = max(range(len(words)), key=lambda k: len(words[k]))
    words[target] = _misspell(words[target], rng)
    return " ".join(words)


class _Emitter:
    """Collects tweets in deterministic assembly order."""

    def __init__(self):
        self.rows: list[tuple[int, str, str, int | None]] = []

    def add(self, created: int, text: str, device: str,
            truth_event: int | None = None) -> None:
        self.rows.append((created, text, device, truth_event))


def _pick(rng, seq):
    return seq[int(rng.integers(len(seq)))]


def _device(rng, mobile_fraction: float) -> str:
    return "mobile" if rng.random() < mobile_fraction else "non_mobile"


def _baseline_stream(out: _Emitter, rng, game: GameScenario, scenario: Scenario):
    teams = game.display_teams()
    team_words = [w for group in teams for w in group]
    terms = sorted(game.lexicon.game_terms) or ["football"]
    counts = rng.poisson(game.baseline_rate, scenario.duration_s)
    knobs = scenario.text
    for second in range(scenario.duration_s):
        for _ in range(int(counts[second])):
            if rng.random() < knobs.team_mention_prob:
                text = _pick(rng, BASELINE_TEMPLATES).format(
                    team=_pick(rng, team_words), term=_pick(rng, terms))
            else:
                text = _pick(rng, BASELINE_NO_TEAM_TEMPLATES).format(
                    term=_pick(rng, terms))
            if knobs.keyword_noise_rate and rng.random() < knobs.keyword_noise_rate:
                etype = _pick(rng, list(EVENT_PHRASES))
                text = text + " " + _pick(rng, game.phrases_for(etype))
            out.add(second, text, _device(rng, scenario.delay_model.mobile_fraction))


def _burst_counts(peak: float, ramp_up_s: int, half_life_s: float, rng,
                  guarantee_first: bool) -> list[int]:
    """Per-second Poisson draws along ramp-then-decay, truncated at the tail."""
    if peak <= 0:
        return []
    rates = []
    t = 0
    while True:
        if t < ramp_up_s:
            rate = peak * (t + 1) / ramp_up_s
        else:
            rate = peak * 0.5 ** ((t - ramp_up_s) / half_life_s)
            if rate < 0.05 and t > ramp_up_s:
                break
        rates.append(rate)
        t += 1
        if t > ramp_up_s + 20 * half_life_s:
            break
    counts = [int(n) for n in rng.poisson(rates)]
    if guarantee_first and counts and counts[0] == 0:
        counts[0] = 1
    return counts


def _event_stream(out: _Emitter, rng, index: int, event: TruthEvent,
                  game: GameScenario, scenario: Scenario):
    model = scenario.delay_model
    knobs = scenario.text
    onset_delay = int(round(rng.triangular(
        model.first_tweet_delay_min_s,
        model.first_tweet_delay_mode_s,
        model.first_tweet_delay_max_s,
    )))
    onset = event.true_second + onset_delay
    mobile_lag = int(round(rng.uniform(model.mobile_extra_delay_min_s,
                                       model.mobile_extra_delay_max_s)))

    nm_peak = event.magnitude * (1.0 - model.mobile_fraction)
    mob_peak = event.magnitude * model.mobile_fraction
    nm_counts = _burst_counts(nm_peak, model.ramp_up_s,
                              model.decay_half_life_s, rng,
                              guarantee_first=nm_peak > 0)
    mob_counts = _burst_counts(mob_peak, model.ramp_up_mobile_s,
                               model.decay_half_life_s, rng,
                               guarantee_first=nm_peak <= 0)

    teams = game.display_teams()
    team_words = [w for group in teams for w in group]
    phrases = game.phrases_for(event.event_type)

    def keyword_share(second: int) -> float:
        # Naming is universal through the initial surge, then fades on
        # the event clock (late reactions stop repeating the keyword,
        # whatever device they come from). Below 1/16 (four half-lives)
        # the naming phase is over outright: straggler reactions are
        # all commentary, so no keyword-bearing tweet is created after
        # onset + ramp_up_s + 4 * keyword_fade_half_life_s.
        age = second - onset - model.ramp_up_s
        if age <= 0:
            return 1.0
        share = 0.5 ** (age / model.keyword_fade_half_life_s)
        return share if share >= 0.0625 else 0.0

    def emit(second: int, device: str):
        mention_team = rng.random() < knobs.team_mention_prob
        if rng.random() < keyword_share(second):
            kw = _pick(rng, phrases)
            if knobs.misspelling_fraction and \
                    rng.random() < knobs.misspelling_fraction:
                kw = _misspell_phrase(kw, rng)
            if mention_team:
                text = _pick(rng, BURST_TEMPLATES).format(
                    kw=kw, team=_pick(rng, team_words))
            else:
                text = _pick(rng, BURST_NO_TEAM_TEMPLATES).format(kw=kw)
        elif mention_team:
            text = _pick(rng, BURST_COMMENTARY_TEMPLATES).format(
                team=_pick(rng, team_words))
        else:
            text = _pick(rng, BURST_COMMENTARY_NO_TEAM_TEMPLATES)
        out.add(second, text, device, truth_event=index)

    for offset, n in enumerate(nm_counts):
        for _ in range(n):
            emit(onset + offset, "non_mobile")
    for offset, n in enumerate(mob_counts):
        for _ in range(n):
            emit(onset + mobile_lag + offset, "mobile")


def _noise_stream(out: _Emitter, rng, scenario: Scenario):
    noise = scenario.noise
    if noise.unrelated_rate <= 0:
        return
    counts = rng.poisson(noise.unrelated_rate, scenario.duration_s)
    mobile_fraction = scenario.delay_model.mobile_fraction
    all_phrases = [p for ps in EVENT_PHRASES.values() for p in ps]
    for second in range(scenario.duration_s):
        for _ in range(int(counts[second])):
            if rng.random() < noise.foreign_fraction:
                text = _pick(rng, FOREIGN_SNIPPETS)
                # foreign chatter sometimes carries a keyword; the English
                # gate must keep it out of the buckets
                if rng.random() < 0.3:
                    text = text + " " + _pick(rng, all_phrases)
            else:
                text = _pick(rng, UNRELATED_TEMPLATES)
            out.add(second, text, _device(rng, mobile_fraction))


def generate(scenario: Scenario) -> TweetTrace:
    """Produce the full creation-ordered trace; delivery is the identity."""
    out = _Emitter()
    for gi, game in enumerate(scenario.games):
        rng = np.random.default_rng([scenario.seed, _STREAM_BASELINE, gi])
        _baseline_stream(out, rng, game, scenario)
    by_game = {g.lexicon.game_id: g for g in scenario.games}
    for ei, event in enumerate(scenario.events):
        rng = np.random.default_rng([scenario.seed, _STREAM_EVENT, ei])
        _event_stream(out, rng, ei, event, by_game[event.game_id], scenario)
    rng = np.random.default_rng([scenario.seed, _STREAM_NOISE, 0])
    _noise_stream(out, rng, scenario)

    rows = sorted(out.rows, key=lambda r: r[0])  # stable: assembly order ties
    tweets = tuple(
        Tweet(id=i, created_second=created, delivered_second=created,
              text=text, device_class=device, truth_event=truth)
        for i, (created, text, device, truth) in enumerate(rows)
    )
    return TweetTrace(tweets=tweets, truth=tuple(scenario.events),
                      duration_s=scenario.duration_s, seed=scenario.seed)


def apply_api_constraints(trace: TweetTrace, api: ApiProfile) -> TweetTrace:
    """Delay every tweet by the profile's constant, then enforce the cap.

    Within an over-full delivered second, survivors are chosen uniformly
    at random from a substream seeded by the trace seed, so a capped
    trace is as reproducible as the raw one.
    """
    delayed = [
        replace(tw, delivered_second=tw.created_second + api.delivery_delay_s)
        for tw in trace.tweets
    ]
    if api.cap_tweets_per_s is not None:
        rng = np.random.default_rng([trace.seed, _STREAM_DROP, 0])
        by_second: dict[int, list[Tweet]] = {}
        for tw in delayed:
            by_second.setdefault(tw.delivered_second, []).append(tw)
        kept: list[Tweet] = []
        cap = api.cap_tweets_per_s
        for second in sorted(by_second):
            group = by_second[second]
            if len(group) > cap:
                idx = rng.choice(len(group), size=cap, replace=False)
                group = [group[i] for i in sorted(idx)]
            kept.extend(group)
        delayed = kept
    delayed.sort(key=lambda tw: (tw.delivered_second, tw.id))
    return TweetTrace(tweets=tuple(delayed), truth=trace.truth,
                      duration_s=trace.duration_s, seed=trace.seed)


# ----------------------------------------------------------------- file I/O

def write_trace(trace: TweetTrace, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        header = {
            "format": TRACE_FORMAT,
            "version": TRACE_VERSION,
            "seed": trace.seed,
            "duration_s": trace.duration_s,
            "truth": [ev.to_doc() for ev in trace.truth],
        }
        fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        for tw in trace.tweets:
            fh.write(json.dumps(tw.to_doc(), ensure_ascii=False) + "\n")


def read_trace(path) -> TweetTrace:
    tweets = []
    header = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                doc = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", line=lineno) from exc
            if header is None:
                if doc.get("format") != TRACE_FORMAT:
                    raise ParseError("missing trace header", line=lineno)
                header = doc
                continue
            try:
                tweets.append(Tweet.from_doc(doc))
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"bad tweet record: {exc}", line=lineno) from exc
    if header is None:
        return TweetTrace(tweets=(), truth=(), duration_s=0, seed=0)
    try:
        truth = tuple(TruthEvent.from_doc(d) for d in header.get("truth", []))
        trace = TweetTrace(
            tweets=tuple(tweets),
            truth=truth,
            duration_s=int(header["duration_s"]),
            seed=int(header["seed"]),
        )
    except (KeyError, TypeError, ValueError, ConfigError) as exc:
        raise ParseError(f"bad trace header or ordering: {exc}", line=1) from exc
    return trace


def load_scenario(path) -> Scenario:
    """Read the single-document JSON scenario schema."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    return scenario_from_doc(doc)


def scenario_from_doc(doc: dict) -> Scenario:
    try:
        games = []
        for g in doc["games"]:
            phrases = None
            if "event_phrases" in g:
                phrases = {
                    EventType.from_code(code): tuple(v)
                    for code, v in g["event_phrases"].items()
                }
            games.append(GameScenario(
                lexicon=GameLexicon.from_doc(g["lexicon"]),
                baseline_rate=float(g["baseline_rate"]),
                team_display=(tuple(map(tuple, g["team_display"]))
                              if "team_display" in g else None),
                event_phrases=phrases,
            ))
        events = tuple(TruthEvent.from_doc(e) for e in doc.get("events", []))
        return Scenario(
            games=tuple(games),
            events=events,
            duration_s=int(doc["duration_s"]),
            seed=int(doc["seed"]),
            noise=NoiseProfile(**doc.get("noise", {})),
            delay_model=HumanDelayModel(**doc.get("delay_model", {})),
            api=ApiProfile(**doc.get("api", {})),
            text=TextKnobs(**doc.get("text", {})),
        )
    except KeyError as exc:
        raise ConfigError(f"scenario document missing field {exc}") from exc
    except TypeError as exc:
        raise ConfigError(f"scenario document malformed: {exc}") from exc


def scenario_to_doc(scenario: Scenario) -> dict:
    games = []
    for g in scenario.games:
        entry = {
            "lexicon": g.lexicon.to_doc(),
            "baseline_rate": g.baseline_rate,
        }
        if g.team_display is not None:
            entry["team_display"] = [list(t) for t in g.team_display]
        if g.event_phrases is not None:
            entry["event_phrases"] = {
                etype.code: list(v) for etype, v in g.event_phrases.items()
            }
        games.append(entry)
    return {
        "format": "eventpulse-scenario",
        "version": 1,
        "seed": scenario.seed,
        "duration_s": scenario.duration_s,
        "games": games,
        "events": [ev.to_doc() for ev in scenario.events],
        "noise": dataclasses.asdict(scenario.noise),
        "delay_model": dataclasses.asdict(scenario.delay_model),
        "api": dataclasses.asdict(scenario.api),
        "text": dataclasses.asdict(scenario.text),
    }


def save_scenario(scenario: Scenario, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scenario_to_doc(scenario), fh, indent=2, ensure_ascii=False)
        fh.write("\n")
