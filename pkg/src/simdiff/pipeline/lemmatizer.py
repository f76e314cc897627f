"""Dictionary-form lemmatizer.

An exception lexicon handles irregular forms; regular inflections are removed
with the inflectional part of the Porter algorithm (steps 1a and 1b), adapted
so that the output stays a readable word ("theories" -> "theory", not
"theori").  Derivational suffixes are never touched, so "relativity" and
"physics" survive unchanged.

Rules are applied until a fixpoint is reached, which makes ``lemmatize``
idempotent.
"""
from __future__ import annotations

from typing import Dict, Mapping, Optional

from ..errors import PipelineError
from .types import Pos

IRREGULAR: Dict[str, str] = {
    # be / have / do
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be", "'s": "'s", "'re": "be", "'m": "be",
    "has": "have", "had": "have", "having": "have", "'ve": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do", "n't": "not",
    # irregular verbs
    "went": "go", "gone": "go", "goes": "go", "made": "make", "making": "make",
    "said": "say", "says": "say", "took": "take", "taken": "take",
    "taking": "take", "gave": "give", "given": "give", "giving": "give",
    "came": "come", "coming": "come", "became": "become", "becoming": "become",
    "won": "win", "winning": "win", "wrote": "write", "written": "write",
    "writing": "write", "began": "begin", "begun": "begin", "left": "leave",
    "found": "find", "held": "hold", "led": "lead", "saw": "see", "seen": "see",
    "knew": "know", "known": "know", "thought": "think", "brought": "bring",
    "told": "tell", "got": "get", "gotten": "get", "kept": "keep", "met": "meet",
    "ran": "run", "paid": "pay", "sold": "sell", "spent": "spend",
    "stood": "stand", "understood": "understand", "taught": "teach",
    "fought": "fight", "built": "build", "lost": "lose", "felt": "feel",
    "grew": "grow", "grown": "grow", "drew": "draw", "drawn": "draw",
    "chose": "choose", "chosen": "choose", "spoke": "speak", "spoken": "speak",
    "broke": "break", "broken": "break", "fell": "fall", "fallen": "fall",
    "sent": "send", "heard": "hear", "meant": "mean", "sat": "sit",
    "bought": "buy", "caught": "catch", "sought": "seek", "struck": "strike",
    "threw": "throw", "thrown": "throw", "wore": "wear", "worn": "wear",
    "rose": "rise", "risen": "rise", "flew": "fly", "flown": "fly",
    "ate": "eat", "eaten": "eat", "drove": "drive", "driven": "drive",
    "hid": "hide", "hidden": "hide", "shot": "shoot", "slept": "sleep",
    "lay": "lie", "lain": "lie", "lying": "lie", "dying": "die", "tied": "tie",
    "used": "use", "using": "use", "uses": "use", "caused": "cause",
    "based": "base", "moved": "move", "lived": "live", "loved": "love",
    "received": "receive", "released": "release", "married": "marry",
    "played": "play", "scored": "score", "scoring": "score",
    "studied": "study", "died": "die", "produced": "produce",
    "continued": "continue", "believed": "believe", "achieved": "achieve",
    "argued": "argue", "issued": "issue", "named": "name", "placed": "place",
    "refused": "refuse", "included": "include", "including": "include",
    "involved": "involve", "increased": "increase", "described": "describe",
    "proposed": "propose", "purchased": "purchase", "announced": "announce",
    "featured": "feature", "managed": "manage", "changed": "change",
    "completed": "complete", "promoted": "promote", "retired": "retire",
    # irregular and tricky plurals
    "men": "man", "women": "woman", "children": "child", "feet": "foot",
    "teeth": "tooth", "mice": "mouse", "geese": "goose", "lives": "life",
    "wives": "wife", "knives": "knife", "halves": "half", "wolves": "wolf",
    "shelves": "shelf", "selves": "self", "thieves": "thief",
    "leaves": "leaf", "heroes": "hero", "potatoes": "potato",
    "tomatoes": "tomato", "echoes": "echo", "vetoes": "veto",
    "movies": "movie", "cookies": "cookie", "series": "series",
    "species": "species", "ties": "tie", "lies": "lie", "pies": "pie",
    "dies": "die",
    # comparatives
    "better": "good", "best": "good", "worse": "bad", "worst": "bad",
    "more": "more", "most": "most", "less": "less", "least": "least",
}

# Nouns ending in -s that are not plurals.
_UNINFLECTED = frozenset(
    """
    physics mathematics economics politics athletics statistics ethics
    genetics linguistics electronics acoustics optics dynamics logistics
    thermodynamics aerodynamics gymnastics news means headquarters
    whereabouts crossroads lens atlas bias gas alias canvas chaos cosmos
    ethos pathos thesis basis crisis analysis diagnosis hypothesis
    synthesis emphasis oasis genesis axis tennis chassis always perhaps
    towards afterwards sometimes besides has was is us this its his hers
    ours yours theirs whereas thus plus minus bonus campus census virus
    status focus genius chorus corpus fungus nucleus radius stimulus
    terminus apparatus consensus octopus citrus circus walrus
    """.split()
)

_VOWELS = frozenset("aeiou")


def _is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Porter's m: number of VC sequences in ``stem``."""
    m = 0
    prev_vowel = False
    for i in range(len(stem)):
        cons = _is_consonant(stem, i)
        if cons and prev_vowel:
            m += 1
        prev_vowel = not cons
    return m


def _has_vowel(stem: str) -> bool:
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _ends_double_consonant(word: str) -> bool:
    return (len(word) >= 2 and word[-1] == word[-2]
            and _is_consonant(word, len(word) - 1))


def _ends_cvc(word: str) -> bool:
    if len(word) < 3:
        return False
    return (_is_consonant(word, len(word) - 3)
            and not _is_consonant(word, len(word) - 2)
            and _is_consonant(word, len(word) - 1)
            and word[-1] not in "wxy")


def _strip_plural(word: str) -> str:
    """Porter step 1a, adapted to produce dictionary forms."""
    if word in _UNINFLECTED or len(word) <= 3:
        return word
    if word.endswith(("ss", "us", "is", "'s", "’s")):
        return word
    if word.endswith("ies"):
        return word[:-3] + ("ie" if len(word) <= 4 else "y")
    if word.endswith("sses") or word.endswith(("xes", "zzes", "ches", "shes")):
        return word[:-2]
    if word.endswith("s"):
        return word[:-1]
    return word


def _strip_verbal(word: str) -> str:
    """Porter step 1b: -ed / -ing removal with e-restoration."""
    if word.endswith("eed"):
        return word[:-1] if _measure(word[:-3]) > 0 else word
    for suffix in ("ing", "ed"):
        if word.endswith(suffix):
            stem = word[: -len(suffix)]
            if not _has_vowel(stem) or len(stem) < 2:
                return word
            break
    else:
        return _strip_plural(word) if word.endswith("s") and not word.endswith("ss") else word
    if suffix == "ed" and stem.endswith("i"):
        return stem[:-1] + "y"  # studied -> study
    if stem.endswith(("at", "bl", "iz")):
        return stem + "e"
    if _ends_double_consonant(stem) and stem[-1] not in "lsz":
        return stem[:-1]
    if _measure(stem) == 1 and _ends_cvc(stem):
        return stem + "e"
    return stem


_OPEN_RULES = {
    Pos.NOUN: _strip_plural,
    Pos.VERB: _strip_verbal,
}


def _step(word: str, pos: Pos, exceptions: Mapping[str, str]) -> str:
    if word in exceptions:
        return exceptions[word]
    if word in IRREGULAR:
        return IRREGULAR[word]
    rule = _OPEN_RULES.get(pos)
    if rule is None or not word.isalpha():
        return word
    return rule(word)


def lemmatize(surface: str, pos: Pos = Pos.NOUN,
              exceptions: Optional[Mapping[str, str]] = None) -> str:
    """Return the lowercase dictionary form of ``surface``.

    Proper nouns, adjectives and closed-class words are only lowercased (plus
    lexicon lookup); nouns lose plural endings; verbs lose -s/-ed/-ing.
    """
    pos = Pos(pos)
    word = surface.lower()
    if pos is Pos.PUNCT or pos is Pos.NUM:
        return word
    if pos is Pos.PROPN:
        return (exceptions or {}).get(word, word)
    exceptions = exceptions or {}
    for _ in range(8):
        nxt = _step(word, pos, exceptions)
        if nxt == word:
            break
        word = nxt
    return word or surface.lower()


def load_exceptions(path) -> Dict[str, str]:
    """Read a ``surface<TAB>lemma`` exception file."""
    table = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise PipelineError(f"{path}:{lineno}: expected 'surface<TAB>lemma'")
            table[parts[0].lower()] = parts[1].lower()
    return table
