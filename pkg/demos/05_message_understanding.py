"""From raw message to game attribution and event keywords.

Every tweet goes through the same pipeline: strip URLs/emoticons,
tokenize, drop stopwords, stem, gate out non-English, attribute to games
by team mentions, then count event-keyword hits (exact, and
one-edit-tolerant for typos) against each attributed game's lexicon.

The walkthrough below shows what each stage makes of assorted messages —
clean reports, typos, fragments, foreign carriers, chatter — and then
scores the whole bundled labeled corpus against its error budget.
"""

from eventpulse import (
    LexiconSet,
    attribute_games,
    corpus_metrics,
    default_games,
    labeled_corpus,
    match_event_keywords,
    preprocess,
)

SAMPLES = [
    "TOUCHDOWN Packers!!! that drive was unreal",
    "what a touchdwon by green bay",          # one-edit typo still counts
    "picked off... steelers cannot believe it",
    "fild goal is good, 3 points pittsburgh",  # typo inside a bigram
    "omg fumble",                              # fragment, no team mention
    "невероятный touchdown сейчас",            # foreign: gated out
    "the colts defense is holding up so far",  # chatter: a game, no event
    "check this out http://bit.ly/x touchdown packers :-)",
]


def main() -> None:
    games = default_games(2)
    lexicons = LexiconSet(g.lexicon for g in games)
    by_id = {g.lexicon.game_id: g.lexicon for g in games}

    for text in SAMPLES:
        parsed = preprocess(text, lexicons)
        print(f"\n  {text!r}")
        print(f"    tokens : {list(parsed.tokens)}")
        if not parsed.is_english:
            print("    gate   : not English -> ignored")
            continue
        game_ids = attribute_games(parsed, lexicons)
        print(f"    games  : {sorted(game_ids) or '(none)'}")
        for gid in sorted(game_ids):
            hits = {etype.code: n
                    for etype, n in match_event_keywords(
                        parsed, by_id[gid]).items() if n}
            print(f"    events : {gid} -> {hits or '(none)'}")

    corpus = labeled_corpus()
    metrics = corpus_metrics(corpus)
    print(f"\nlabeled corpus: {metrics['messages']} messages "
          f"({metrics['labeled']} carry an event label)")
    print(f"  false positives: {metrics['false_positives']} "
          f"({metrics['fp_rate']:.2%}, budget 5%)")
    print(f"  false negatives: {metrics['false_negatives']} "
          f"({metrics['fn_rate']:.2%}, budget 9%) — "
          f"misspellings beyond one edit are the intended misses")


if __name__ == "__main__":
    main()
