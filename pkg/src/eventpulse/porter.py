"""Suffix-stripping stemmer (classic Porter rule set, original 1980 variant).

``stem`` is a pure single-pass application of the rules. A handful of words
strip differently on a second pass; callers that need a normalization-stable
token (the preprocessing pipeline does) should use ``stem_fixpoint``, which
iterates to convergence. ``EXCEPTIONS`` pins words whose single-pass output
we override outright; it is consulted before any rule runs.
"""

_VOWELS = frozenset("aeiou")

# Word -> stem overrides, applied before the rules. Kept deliberately small;
# normalization stability is achieved by stem_fixpoint, not by enumerating
# every non-idempotent word here.
EXCEPTIONS: dict[str, str] = {}


def _is_cons(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return i == 0 or not _is_cons(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Count VC sequences (the m of the rule conditions)."""
    m = 0
    i = 0
    n = len(stem)
    while i < n and _is_cons(stem, i):
        i += 1
    while i < n:
        while i < n and not _is_cons(stem, i):
            i += 1
        if i >= n:
            break
        m += 1
        while i < n and _is_cons(stem, i):
            i += 1
    return m


def _has_vowel(stem: str) -> bool:
    return any(not _is_cons(stem, i) for i in range(len(stem)))


def _ends_double_cons(word: str) -> bool:
    return len(word) >= 2 and word[-1] == word[-2] and _is_cons(word, len(word) - 1)


def _ends_cvc(word: str) -> bool:
    if len(word) < 3:
        return False
    if word[-1] in "wxy":
        return False
    return (
        _is_cons(word, len(word) - 3)
        and not _is_cons(word, len(word) - 2)
        and _is_cons(word, len(word) - 1)
    )


def _step1a(w: str) -> str:
    if w.endswith("sses") or w.endswith("ies"):
        return w[:-2]
    if w.endswith("ss"):
        return w
    if w.endswith("s"):
        return w[:-1]
    return w


def _step1b(w: str) -> str:
    if w.endswith("eed"):
        if _measure(w[:-3]) > 0:
            return w[:-1]
        return w
    stripped = None
    if w.endswith("ed") and _has_vowel(w[:-2]):
        stripped = w[:-2]
    elif w.endswith("ing") and _has_vowel(w[:-3]):
        stripped = w[:-3]
    if stripped is None:
        return w
    if stripped.endswith(("at", "bl", "iz")):
        return stripped + "e"
    if _ends_double_cons(stripped) and stripped[-1] not in "lsz":
        return stripped[:-1]
    if _measure(stripped) == 1 and _ends_cvc(stripped):
        return stripped + "e"
    return stripped


def _step1c(w: str) -> str:
    if w.endswith("y") and _has_vowel(w[:-1]):
        return w[:-1] + "i"
    return w


_STEP2 = (
    ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"), ("abli", "able"), ("alli", "al"), ("entli", "ent"),
    ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
    ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
    ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
)

_STEP3 = (
    ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""), ("ness", ""),
)

_STEP4 = (
    "ement", "ance", "ence", "able", "ible", "ment", "ion", "ant", "ent",
    "ism", "ate", "iti", "ous", "ive", "ize", "al", "er", "ic", "ou",
)


def _longest_rule(w: str, rules) -> tuple[str, str] | None:
    best = None
    for suffix, repl in rules:
        if w.endswith(suffix) and (best is None or len(suffix) > len(best[0])):
            best = (suffix, repl)
    return best


def _step2(w: str) -> str:
    rule = _longest_rule(w, _STEP2)
    if rule is not None:
        suffix, repl = rule
        stem = w[: len(w) - len(suffix)]
        if _measure(stem) > 0:
            return stem + repl
    return w


def _step3(w: str) -> str:
    rule = _longest_rule(w, _STEP3)
    if rule is not None:
        suffix, repl = rule
        stem = w[: len(w) - len(suffix)]
        if _measure(stem) > 0:
            return stem + repl
    return w


def _step4(w: str) -> str:
    for suffix in sorted(_STEP4, key=len, reverse=True):
        if not w.endswith(suffix):
            continue
        stem = w[: len(w) - len(suffix)]
        if suffix == "ion" and (not stem or stem[-1] not in "st"):
            continue
        if _measure(stem) > 1:
            return stem
        return w
    return w


def _step5a(w: str) -> str:
    if w.endswith("e"):
        stem = w[:-1]
        m = _measure(stem)
        if m > 1 or (m == 1 and not _ends_cvc(stem)):
            return stem
    return w


def _step5b(w: str) -> str:
    if _measure(w) > 1 and _ends_double_cons(w) and w.endswith("l"):
        return w[:-1]
    return w


def stem(word: str) -> str:
    """Stem one lowercase token. Words of length <= 2 pass through."""
    if word in EXCEPTIONS:
        return EXCEPTIONS[word]
    if len(word) <= 2:
        return word
    w = _step1a(word)
    w = _step1b(w)
    w = _step1c(w)
    w = _step2(w)
    w = _step3(w)
    w = _step4(w)
    w = _step5a(w)
    return _step5b(w)


def stem_fixpoint(word: str, max_rounds: int = 4) -> str:
    """Iterate ``stem`` until the output stops changing.

    Converges in one extra round for every word we have scanned; the bound
    is a safety net, not an expected path.
    """
    w = word
    for _ in range(max_rounds):
        nxt = stem(w)
        if nxt == w:
            return w
        w = nxt
    return w
