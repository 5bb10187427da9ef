"""Bundled scenarios: the capped championship game, an uncapped
regular-season suite, seeded random scenarios for equivalence testing,
and a labeled message corpus for lexicon regression.

Every constructor is deterministic in its seed; the numbers quoted in
docstrings (baseline rates, caps, event inventories) are the ones the
acceptance suite pins.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lexicon import EventType, GameLexicon, LexiconSet
from .simgen import (
    ApiProfile,
    GameScenario,
    HumanDelayModel,
    NoiseProfile,
    Scenario,
    TextKnobs,
    TruthEvent,
    _misspell_phrase,
)

TD = EventType.TOUCHDOWN
INT = EventType.INTERCEPTION
FG = EventType.FIELD_GOAL
FUM = EventType.FUMBLE

DEFAULT_EVENT_KEYWORDS = {
    "TD": ["touchdown", "td"],
    "INT": ["interception", "picked off"],
    "FG": ["field goal", "fg"],
    "FUM": ["fumble"],
}

DEFAULT_GAME_TERMS = ["nfl", "kickoff", "quarterback", "yards", "endzone"]

# Disjoint team vocabularies so concurrent games attribute cleanly.
_TEAM_POOL = (
    (("packers", "green bay"), ("steelers", "pittsburgh")),
    (("saints", "orleans"), ("colts", "indianapolis")),
    (("bears", "chicago"), ("ravens", "baltimore")),
    (("cowboys", "dallas"), ("eagles", "philadelphia")),
)


def standard_game(game_id: str, teams) -> GameLexicon:
    return GameLexicon.build(
        game_id=game_id,
        teams=teams,
        game_terms=DEFAULT_GAME_TERMS,
        event_keywords=DEFAULT_EVENT_KEYWORDS,
    )


def default_games(count: int = 4, baselines=(6.0, 5.0, 7.0, 4.0)
                  ) -> tuple[GameScenario, ...]:
    if not 1 <= count <= len(_TEAM_POOL):
        raise ValueError(f"count must be in [1, {len(_TEAM_POOL)}]")
    return tuple(
        GameScenario(
            lexicon=standard_game(f"G{i + 1}", _TEAM_POOL[i]),
            baseline_rate=float(baselines[i]),
            team_display=_TEAM_POOL[i],
        )
        for i in range(count)
    )


def superbowl(seed: int = 2010) -> Scenario:
    """Championship-shaped capped stream: 80 tweets/s baseline, delivery
    cap 50/s, 11 events (7 TD, 2 INT, 1 FUM, 1 FG).

    The binding cap pins every delivered second at 50 tweets, which
    flattens the total-rate series and blinds rate-based detection; the
    per-keyword series keep their bursts because event tweets are only
    thinned, never pinned. Event magnitudes are sized so the expected
    post-cap keyword rate still clears min_keyword_count within a
    10-second window.
    """
    game = GameScenario(
        lexicon=standard_game("G1", _TEAM_POOL[0]),
        baseline_rate=80.0,
        team_display=_TEAM_POOL[0],
    )
    inventory = (TD, TD, INT, TD, FG, TD, FUM, TD, INT, TD, TD)
    events = tuple(
        TruthEvent("G1", etype, 100 + 70 * i, magnitude)
        for i, (etype, magnitude) in enumerate(
            zip(inventory, (55, 48, 42, 60, 40, 52, 45, 58, 44, 50, 56)))
    )
    return Scenario(
        games=(game,),
        events=events,
        duration_s=900,
        seed=seed,
        api=ApiProfile(delivery_delay_s=1, cap_tweets_per_s=50),
        # Naming dies out within ~42 s of onset (8 s half-life, floor at
        # four half-lives), so by the time a detection's cooldown expires
        # even the widest window's lookback finds no keyword tail to
        # re-trigger on: repeat detections of one event are impossible,
        # not merely rare.
        delay_model=HumanDelayModel(keyword_fade_half_life_s=8.0),
    )


def regular_season(seed: int = 2011) -> Scenario:
    """Uncapped suite: 4 concurrent games, 24 events, popular-keyword
    delivery (1 s delay, no cap).

    Baselines are high enough that ten-second-window rate ratios on
    quiet seconds stay well under 2 (Poisson wobble shrinks with volume),
    while every event at least triples its game's rate, so genuine
    bursts and background wobble are separable by strength alone. The
    slow first-reaction delay keeps end-to-end detection latency in the
    realistic tens of seconds even though the bursts themselves are
    sharp.
    """
    games = default_games(4, baselines=(20.0, 19.0, 21.0, 18.0))
    per_game_types = (TD, INT, TD, FG, FUM, TD)
    events = []
    for gi, game in enumerate(games):
        base = game.baseline_rate
        for ei, etype in enumerate(per_game_types):
            true_second = 120 + 130 * ei + 30 * gi
            factor = 5.5 if etype is TD else 5.0
            events.append(TruthEvent(game.lexicon.game_id, etype,
                                     true_second, round(base * factor, 1)))
    return Scenario(
        games=games,
        events=tuple(events),
        duration_s=900,
        seed=seed,
        api=ApiProfile.popular_keyword(),
        noise=NoiseProfile(unrelated_rate=2.0, foreign_fraction=0.15),
        delay_model=HumanDelayModel(
            first_tweet_delay_min_s=22.0,
            first_tweet_delay_mode_s=30.0,
            first_tweet_delay_max_s=42.0,
            # A tight mobile ramp and faster decay keep each reaction
            # burst a single well-separated hump, so one event's tail
            # has died away before the next event's comparison windows
            # reach back into it.
            ramp_up_mobile_s=14,
            decay_half_life_s=24.0,
        ),
    )


def random_scenario(seed: int) -> Scenario:
    """Arbitrary small scenario for engine/oracle equivalence sweeps.

    Durations span 60–900 s; 0–10 events with unconstrained overlap;
    occasional caps and slow custom-keyword delivery so the equivalence
    corpus also covers the degraded delivery regimes.
    """
    rng = np.random.default_rng([int(seed), 97])
    duration = int(rng.integers(60, 901))
    n_games = int(rng.integers(1, 3))
    baselines = rng.uniform(2.0, 8.0, size=n_games)
    games = tuple(
        GameScenario(
            lexicon=standard_game(f"G{i + 1}", _TEAM_POOL[i]),
            baseline_rate=round(float(baselines[i]), 2),
            team_display=_TEAM_POOL[i],
        )
        for i in range(n_games)
    )
    n_events = int(rng.integers(0, 11))
    etypes = (TD, INT, FG, FUM)
    events = []
    for _ in range(n_events):
        gid = f"G{int(rng.integers(1, n_games + 1))}"
        etype = etypes[int(rng.integers(0, 4))]
        latest = max(duration - 40, 31)
        true_second = int(rng.integers(30, latest))
        magnitude = round(float(rng.uniform(6.0, 35.0)), 1)
        events.append(TruthEvent(gid, etype, true_second, magnitude))
    if rng.random() < 0.25:
        api = ApiProfile(delivery_delay_s=1,
                         cap_tweets_per_s=int(rng.integers(8, 40)))
    elif rng.random() < 0.15:
        api = ApiProfile.custom_keyword()
    else:
        api = ApiProfile.popular_keyword()
    return Scenario(
        games=games,
        events=tuple(events),
        duration_s=duration,
        seed=int(rng.integers(0, 2**31)),
        api=api,
        noise=NoiseProfile(unrelated_rate=float(rng.uniform(0.0, 2.0)),
                           foreign_fraction=float(rng.uniform(0.0, 0.4))),
        text=TextKnobs(misspelling_fraction=float(rng.uniform(0.0, 0.2))),
    )


ROC_THRESHOLDS = (1.2, 1.4, 1.7, 2.0, 2.5, 3.0, 4.0)


# ------------------------------------------------------------ labeled corpus

@dataclass(frozen=True)
class LabeledMessage:
    text: str
    expected: frozenset  # EventType members the extractor should report


@dataclass(frozen=True)
class LabeledCorpus:
    messages: tuple[LabeledMessage, ...]
    lexicons: LexiconSet

    def __len__(self):
        return len(self.messages)


_CLEAN_TEMPLATES = (
    "{kw} for the {team}, what a play",
    "huge {kw} by the {team} right now",
    "that was a {kw} and the crowd is going wild",
    "{team} with the {kw}, this game is crazy",
    "no way, {kw} again by the {team}",
    "did you see that {kw}? unbelievable",
    "the {team} just got a {kw} late in the game",
    "{kw}!!! {team} are rolling tonight",
)

_FRAGMENT_TEMPLATES = (
    "{kw}!!!",
    "omg {kw}",
    "{kw} {team}",
    "{kw}... wow",
    "yes! {kw}",
    "{team} {kw} !!",
)

_UNRELATED_POOL = (
    "dinner with friends was amazing tonight",
    "cannot believe how cold it is outside",
    "my coffee order was wrong again this morning",
    "weekend plans are finally coming together",
    "this new album is on repeat all day",
    "traffic on the bridge was brutal today",
    "just finished a great book before bed",
    "the bakery downtown sells the best bread",
)

_CHATTER_TEMPLATES = (
    "the {team} are looking sharp tonight",
    "watching the {team} with the whole family",
    "big night for {team} fans everywhere",
    "the {team} defense is holding up so far",
)

_FOREIGN_CARRIERS = (
    "невероятный {kw} сейчас было очень круто",
    "これはすごい {kw} 信じられない試合だ",
    "증말 대단한 {kw} 경기가 미쳤다",
    "ما هذا الـ {kw} مباراة مجنونة",
    "τι {kw} ήταν αυτό απίστευτο παιχνίδι",
)


def labeled_corpus(seed: int = 2012, size: int = 2400) -> LabeledCorpus:
    """Labeled synthetic messages for keyword-extraction regression.

    Mix (fractions of size): 40% clean keyword sentences, 12% keyword
    sentences with one character-level misspelling, 8% sentence
    fragments carrying a keyword, 12% foreign-language keyword carriers
    (expected: no extraction — the English gate must hold), 20%
    unrelated English, 8% team chatter without event keywords.

    A message's label is the set of event types a correct extractor
    reports for it. Misspellings are the intended false-negative budget;
    foreign carriers are the intended false-positive pressure.
    """
    lex = standard_game("G1", _TEAM_POOL[0])
    lexset = LexiconSet([lex])
    rng = np.random.default_rng([int(seed), 613])
    phrases = {
        TD: ("touchdown", "td"),
        INT: ("interception", "picked off"),
        FG: ("field goal", "fg"),
        FUM: ("fumble",),
    }
    etypes = (TD, INT, FG, FUM)
    teams = ("packers", "steelers")

    def pick(pool):
        return pool[int(rng.integers(0, len(pool)))]

    def keyword_for(etype):
        return pick(phrases[etype])

    counts = {
        "clean": int(size * 0.40),
        "misspelled": int(size * 0.12),
        "fragment": int(size * 0.08),
        "foreign": int(size * 0.12),
        "unrelated": int(size * 0.20),
    }
    counts["chatter"] = size - sum(counts.values())

    messages = []
    for _ in range(counts["clean"]):
        etype = pick(etypes)
        text = pick(_CLEAN_TEMPLATES).format(kw=keyword_for(etype),
                                             team=pick(teams))
        messages.append(LabeledMessage(text, frozenset({etype})))
    for _ in range(counts["misspelled"]):
        etype = pick(etypes)
        kw = _misspell_phrase(keyword_for(etype), rng)
        text = pick(_CLEAN_TEMPLATES).format(kw=kw, team=pick(teams))
        messages.append(LabeledMessage(text, frozenset({etype})))
    for _ in range(counts["fragment"]):
        etype = pick(etypes)
        text = pick(_FRAGMENT_TEMPLATES).format(kw=keyword_for(etype),
                                                team=pick(teams))
        messages.append(LabeledMessage(text, frozenset({etype})))
    for _ in range(counts["foreign"]):
        etype = pick(etypes)
        text = pick(_FOREIGN_CARRIERS).format(kw=keyword_for(etype))
        messages.append(LabeledMessage(text, frozenset()))
    for _ in range(counts["unrelated"]):
        messages.append(LabeledMessage(pick(_UNRELATED_POOL), frozenset()))
    for _ in range(counts["chatter"]):
        text = pick(_CHATTER_TEMPLATES).format(team=pick(teams))
        messages.append(LabeledMessage(text, frozenset()))

    order = rng.permutation(len(messages))
    return LabeledCorpus(tuple(messages[i] for i in order), lexset)


def corpus_metrics(corpus: LabeledCorpus) -> dict:
    """Score keyword extraction over a labeled corpus.

    A message is a false positive when extraction reports any event type
    outside its label set (rate over all messages), and a false negative
    when any labeled type goes unreported (rate over labeled messages).
    Non-English messages must extract nothing, so a foreign keyword
    carrier that slips through the language gate lands in the FP bucket.
    """
    from .lexicon import match_event_keywords, preprocess

    lex = corpus.lexicons.games[0]
    false_pos = false_neg = labeled = 0
    for msg in corpus.messages:
        parsed = preprocess(msg.text, corpus.lexicons)
        if parsed.is_english:
            got = frozenset(etype for etype, count
                            in match_event_keywords(parsed, lex).items()
                            if count)
        else:
            got = frozenset()
        if got - msg.expected:
            false_pos += 1
        if msg.expected:
            labeled += 1
            if msg.expected - got:
                false_neg += 1
    return {
        "messages": len(corpus.messages),
        "labeled": labeled,
        "false_positives": false_pos,
        "false_negatives": false_neg,
        "fp_rate": false_pos / len(corpus.messages) if corpus.messages else 0.0,
        "fn_rate": false_neg / labeled if labeled else 0.0,
    }
