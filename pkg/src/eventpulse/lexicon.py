"""Text preprocessing, game attribution, and event-keyword matching.

The normalization pipeline, in order: URL removal, @mention removal,
emoticon removal, lowercasing, tokenization on [a-z0-9]+ runs, stopword
removal, stemming (to a fixpoint, so reprocessing emitted tokens is a
no-op), removal of tokens whose stem lands on a stopword, and finally
edit-distance-1 spelling normalization against the lexicon keyword stems.

Multiword keywords ("field goal") are stored as token tuples and match
adjacent token pairs only; no gap is allowed between the two words.
"""

from __future__ import annotations

import enum
import functools
import json
import re
from collections import Counter
from dataclasses import dataclass, field

from .errors import ConfigError
from .porter import stem_fixpoint
from .words import COMMON_WORDS, EMOTICONS, STOPWORDS


class EventType(enum.Enum):
    """The recognized event categories plus the non-event label.

    Null is an evaluation label only; recognizers never emit it as a
    positive detection. Priority breaks ties when one trigger window
    contains several keyword categories at the same count.
    """

    TOUCHDOWN = ("TD", 0)
    INTERCEPTION = ("INT", 1)
    FIELD_GOAL = ("FG", 2)
    FUMBLE = ("FUM", 3)
    NULL = ("NULL", 4)

    def __init__(self, code: str, priority: int):
        self.code = code
        self.priority = priority

    @classmethod
    def from_code(cls, code: str) -> "EventType":
        for member in cls:
            if member.code == code:
                return member
        raise ConfigError(f"unknown event type code: {code!r}")


REAL_EVENT_TYPES = tuple(e for e in EventType if e is not EventType.NULL)

DEVICE_CLASSES = ("mobile", "non_mobile", "unknown")

_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_MENTION_RE = re.compile(r"@\w+")
_TOKEN_RE = re.compile(r"[a-z0-9]+")

# lowercased (cleaning happens after case folding, so "Xd" and "xD" strip
# identically) and longest first so ":-))" loses its ":-)" prefix before
# ":)" is tried
_EMOTICONS_BY_LENGTH = sorted({e.lower() for e in EMOTICONS},
                              key=len, reverse=True)


@dataclass(frozen=True)
class TokenizedTweet:
    tokens: tuple[str, ...]
    is_english: bool
    device_class: str = "unknown"


def _normalize_token(token: str) -> str | None:
    """Stopword-drop and stem one raw token; None means discarded."""
    if token in STOPWORDS:
        return None
    stemmed = stem_fixpoint(token)
    if not stemmed or stemmed in STOPWORDS:
        return None
    return stemmed


_normalize_token = functools.lru_cache(maxsize=65536)(_normalize_token)


def _within_one_edit(a: str, b: str) -> bool:
    """Damerau edit distance <= 1 (substitution, indel, or adjacent swap)."""
    la, lb = len(a), len(b)
    if abs(la - lb) > 1:
        return False
    if la == lb:
        diffs = [i for i in range(la) if a[i] != b[i]]
        if len(diffs) == 0 or len(diffs) == 1:
            return True
        if len(diffs) == 2:
            i, j = diffs
            return j == i + 1 and a[i] == b[j] and a[j] == b[i]
        return False
    if la > lb:
        a, b = b, a
        la, lb = lb, la
    # b is one char longer; one deletion from b must yield a
    i = 0
    while i < la and a[i] == b[i]:
        i += 1
    return a[i:] == b[i + 1 :]


def _tokenize_phrase(phrase: str) -> tuple[str, ...]:
    """Lowercase, tokenize, and stem a lexicon phrase to its stored form.

    Runs the exact token rule messages go through (stopword drop + stem),
    so a stored phrase can always be produced by a message: "picked off"
    stores as the unigram ("pick",) because "off" never survives message
    normalization, while "field goal" stays a bigram.
    """
    parts = []
    for raw in _TOKEN_RE.findall(phrase.lower()):
        stemmed = _normalize_token(raw)
        if stemmed is not None:
            parts.append(stemmed)
    return tuple(parts)


@dataclass(frozen=True)
class GameLexicon:
    """Per-game matching vocabulary, built once and never mutated.

    team_names is the union over both teams; team_groups keeps the two
    teams separate so disjointness can be validated and the file format
    round-trips.
    """

    game_id: str
    team_names: frozenset[str]
    game_terms: frozenset[str]
    event_keywords: dict[EventType, frozenset[tuple[str, ...]]]
    team_groups: tuple[frozenset[str], frozenset[str]] = field(repr=False, default=None)  # type: ignore[assignment]

    @classmethod
    def build(
        cls,
        game_id: str,
        teams: tuple,
        game_terms,
        event_keywords: dict,
    ) -> "GameLexicon":
        """Normalize raw phrases into stem space and validate invariants."""
        if len(teams) != 2:
            raise ConfigError(f"{game_id}: exactly two teams required")
        groups = []
        for team in teams:
            # stem space, so "packers" in a lexicon matches "packers" in a
            # tweet after both collapse to "packer"
            tokens = set()
            for name in team:
                for tok in _tokenize_phrase(str(name)):
                    if tok not in STOPWORDS:
                        tokens.add(tok)
            if not tokens:
                raise ConfigError(f"{game_id}: team with no usable name tokens")
            groups.append(frozenset(tokens))
        if groups[0] & groups[1]:
            raise ConfigError(
                f"{game_id}: teams share name tokens: {sorted(groups[0] & groups[1])}"
            )

        terms = frozenset(
            t for phrase in game_terms for t in _tokenize_phrase(str(phrase))
        )

        keywords: dict[EventType, frozenset[tuple[str, ...]]] = {}
        for key, phrases in event_keywords.items():
            etype = key if isinstance(key, EventType) else EventType.from_code(str(key))
            if etype is EventType.NULL:
                raise ConfigError(f"{game_id}: NULL cannot carry keywords")
            entries = set()
            for phrase in phrases:
                parts = _tokenize_phrase(str(phrase))
                if not parts:
                    raise ConfigError(f"{game_id}: empty keyword phrase {phrase!r}")
                if len(parts) > 2:
                    raise ConfigError(
                        f"{game_id}: keyword {phrase!r} longer than two words"
                    )
                entries.add(parts)
            keywords[etype] = frozenset(entries)
        for etype in REAL_EVENT_TYPES:
            if not keywords.get(etype):
                raise ConfigError(f"{game_id}: no keywords for {etype.code}")

        return cls(
            game_id=str(game_id),
            team_names=groups[0] | groups[1],
            game_terms=terms,
            event_keywords=keywords,
            team_groups=(groups[0], groups[1]),
        )

    @functools.cached_property
    def keyword_stems(self) -> frozenset[str]:
        """Every token appearing in any keyword, unigram or bigram part."""
        return frozenset(
            tok for entries in self.event_keywords.values()
            for entry in entries for tok in entry
        )

    @functools.cached_property
    def _unigram_events(self) -> dict[str, tuple[EventType, ...]]:
        out: dict[str, list[EventType]] = {}
        for etype, entries in self.event_keywords.items():
            for entry in entries:
                if len(entry) == 1:
                    out.setdefault(entry[0], []).append(etype)
        return {tok: tuple(sorted(v, key=lambda e: e.priority)) for tok, v in out.items()}

    @functools.cached_property
    def _bigram_events(self) -> dict[tuple[str, str], tuple[EventType, ...]]:
        out: dict[tuple[str, str], list[EventType]] = {}
        for etype, entries in self.event_keywords.items():
            for entry in entries:
                if len(entry) == 2:
                    out.setdefault((entry[0], entry[1]), []).append(etype)
        return {k: tuple(sorted(v, key=lambda e: e.priority)) for k, v in out.items()}

    @functools.cached_property
    def _related_unigrams(self) -> frozenset[str]:
        return frozenset(self.game_terms | self.team_names | set(self._unigram_events))

    def to_doc(self) -> dict:
        return {
            "game_id": self.game_id,
            "team_names": [sorted(g) for g in self.team_groups],
            "game_terms": sorted(self.game_terms),
            "event_keywords": {
                etype.code: sorted(" ".join(entry) for entry in entries)
                for etype, entries in sorted(
                    self.event_keywords.items(), key=lambda kv: kv[0].priority
                )
            },
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "GameLexicon":
        try:
            return cls.build(
                game_id=doc["game_id"],
                teams=tuple(doc["team_names"]),
                game_terms=doc["game_terms"],
                event_keywords=doc["event_keywords"],
            )
        except KeyError as exc:
            raise ConfigError(f"lexicon document missing field {exc}") from exc


class LexiconSet:
    """All concurrently scheduled games, validated for disjoint team names.

    Holds the preprocessing caches; everything here is read-only after
    construction, so concurrent readers are safe.
    """

    def __init__(self, games):
        self.games: tuple[GameLexicon, ...] = tuple(games)
        seen: dict[str, str] = {}
        ids = set()
        for lex in self.games:
            if lex.game_id in ids:
                raise ConfigError(f"duplicate game_id {lex.game_id!r}")
            ids.add(lex.game_id)
            for tok in lex.team_names:
                if tok in seen and seen[tok] != lex.game_id:
                    raise ConfigError(
                        f"team token {tok!r} shared by games "
                        f"{seen[tok]!r} and {lex.game_id!r}"
                    )
                seen[tok] = lex.game_id
        self._team_index = seen
        self.keyword_stems: frozenset[str] = frozenset(
            tok for lex in self.games for tok in lex.keyword_stems
        )
        self._spell_cache: dict[str, str] = {}
        self._preprocess_cache: dict[str, tuple[tuple[str, ...], bool]] = {}

    def __iter__(self):
        return iter(self.games)

    def __len__(self):
        return len(self.games)

    def game_ids_for_token(self, token: str) -> str | None:
        return self._team_index.get(token)

    def spell_normalize(self, token: str) -> str:
        """Map a near-miss token onto the unique keyword stem one edit away.

        Tokens shorter than 5 characters are left alone (too many false
        hits), as are tokens one edit from several distinct stems.
        """
        if token in self.keyword_stems or len(token) < 5:
            return token
        cached = self._spell_cache.get(token)
        if cached is not None:
            return cached
        candidates = [k for k in self.keyword_stems if _within_one_edit(token, k)]
        result = candidates[0] if len(candidates) == 1 else token
        self._spell_cache[token] = result
        return result


EMPTY_LEXICONS = LexiconSet(())


def _clean_text(raw_text: str) -> str:
    text = _URL_RE.sub(" ", raw_text.lower())
    text = _MENTION_RE.sub(" ", text)
    for emo in _EMOTICONS_BY_LENGTH:
        if emo in text:
            text = text.replace(emo, " ")
    return text


def _ascii_ratio(text: str) -> float:
    chars = [c for c in text if not c.isspace()]
    if not chars:
        return 0.0
    return sum(c.isascii() for c in chars) / len(chars)


def preprocess(
    raw_text: str,
    lexicons: "LexiconSet | tuple" = EMPTY_LEXICONS,
    device_class: str = "unknown",
) -> TokenizedTweet:
    """Normalize one message into matchable tokens.

    The lexicon set supplies keyword stems for spelling normalization and
    for the keyword clause of the English heuristic; without it both
    simply never fire. Degenerate input yields an empty token list and
    is_english false.
    """
    if not isinstance(lexicons, LexiconSet):
        lexicons = LexiconSet(lexicons) if lexicons else EMPTY_LEXICONS
    if device_class not in DEVICE_CLASSES:
        device_class = "unknown"

    cached = lexicons._preprocess_cache.get(raw_text)
    if cached is not None:
        tokens, is_english = cached
        return TokenizedTweet(tokens, is_english, device_class)

    cleaned = _clean_text(raw_text)
    raw_tokens = _TOKEN_RE.findall(cleaned)

    normalized = []
    for tok in raw_tokens:
        stemmed = _normalize_token(tok)
        if stemmed is not None:
            normalized.append(lexicons.spell_normalize(stemmed))
    tokens = tuple(normalized)

    is_english = False
    if _ascii_ratio(cleaned) >= 0.9:
        if any(tok in COMMON_WORDS for tok in raw_tokens):
            is_english = True
        elif lexicons.keyword_stems and any(
            tok in lexicons.keyword_stems for tok in tokens
        ):
            is_english = True

    if len(lexicons._preprocess_cache) < 200_000:
        lexicons._preprocess_cache[raw_text] = (tokens, is_english)
    return TokenizedTweet(tokens, is_english, device_class)


def is_game_related(t: TokenizedTweet, lex: GameLexicon) -> bool:
    """True iff the tweet is English and mentions any game vocabulary."""
    if not t.is_english or not t.tokens:
        return False
    related = lex._related_unigrams
    if any(tok in related for tok in t.tokens):
        return True
    bigrams = lex._bigram_events
    if bigrams:
        return any(
            (t.tokens[i], t.tokens[i + 1]) in bigrams
            for i in range(len(t.tokens) - 1)
        )
    return False


def attribute_games(t: TokenizedTweet, games) -> set[str]:
    """Game ids whose team names appear; empty when unattributable."""
    lexset = games if isinstance(games, LexiconSet) else LexiconSet(games)
    out = set()
    for tok in t.tokens:
        gid = lexset.game_ids_for_token(tok)
        if gid is not None:
            out.add(gid)
    return out


def match_event_keywords(t: TokenizedTweet, lex: GameLexicon) -> Counter:
    """Count keyword occurrences per event type.

    Every matching token (and every matching adjacent pair for two-word
    keywords) contributes one entry; a tweet may therefore contribute
    several counts, to the same or different event types.
    """
    counts: Counter = Counter()
    unigrams = lex._unigram_events
    for tok in t.tokens:
        for etype in unigrams.get(tok, ()):
            counts[etype] += 1
    bigrams = lex._bigram_events
    if bigrams:
        for i in range(len(t.tokens) - 1):
            for etype in bigrams.get((t.tokens[i], t.tokens[i + 1]), ()):
                counts[etype] += 1
    return counts


def save_lexicons(lexicons, path) -> None:
    games = lexicons.games if isinstance(lexicons, LexiconSet) else tuple(lexicons)
    docs = [lex.to_doc() for lex in games]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(docs, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_lexicons(path) -> LexiconSet:
    with open(path, encoding="utf-8") as fh:
        docs = json.load(fh)
    if isinstance(docs, dict):
        docs = [docs]
    return LexiconSet(GameLexicon.from_doc(doc) for doc in docs)
