"""Lexicon and suffix-rule part-of-speech tagger.

Closed-class words come from fixed word lists.  Open-class words are tagged
by capitalization and suffix, with NOUN as the fallback.
"""
from __future__ import annotations

from typing import AbstractSet, Dict, List, Sequence

from .types import Pos


def _words(s: str) -> frozenset:
    return frozenset(s.split())


DETERMINERS = _words(
    "the a an this that these those each every either neither some any no "
    "all both another such what which whose"
)
ADPOSITIONS = _words(
    "of in on at by for with about against between into through during "
    "before after above below to from up down out off over under again "
    "within without toward towards upon across along around behind beside "
    "besides beyond inside outside throughout among amongst until till via "
    "near despite per since including following onto unlike like than"
)
PRONOUNS = _words(
    "i me my mine myself you your yours yourself yourselves he him his "
    "himself she her hers herself it its itself we us our ours ourselves "
    "they them their theirs themselves who whom whoever whatever whichever "
    "someone somebody something anyone anybody anything everyone everybody "
    "everything nobody nothing none one oneself"
)
AUXILIARIES = _words(
    "be am is are was were been being have has had having do does did done "
    "will would shall should can could may might must ought 's 're 'm 've "
    "'d 'll"
)
OTHER_WORDS = _words(
    "and or but nor yet so if then because although though while whereas "
    "whether unless not n't also very too just only even still already "
    "always never ever often sometimes now here there when where why how "
    "however thus hence therefore moreover furthermore indeed quite rather "
    "almost again once twice perhaps soon later yes no well as"
)
NUMBER_WORDS = _words(
    "zero one two three four five six seven eight nine ten eleven twelve "
    "thirteen fourteen fifteen sixteen seventeen eighteen nineteen twenty "
    "thirty forty fifty sixty seventy eighty ninety hundred thousand "
    "million billion trillion"
)
ADJECTIVES = _words(
    "black white red green blue yellow brown grey gray dark bright new old "
    "young great good bad big small large little long short high low early "
    "late first last next many much few several other same different own "
    "major minor main full free true false real whole certain strong weak "
    "hot cold warm cool rich poor famous best better worse worst top "
    "quantum modern ancient special public private social human local "
    "popular likely possible important american british french german "
    "jewish swiss english european international professional"
)
# -al / -ive / -ing words that are nouns
NOUN_EXCEPTIONS = _words(
    "animal capital festival journal signal hospital trial criminal "
    "individual material metal total interval arrival approval proposal "
    "rival principal original official international potential cardinal "
    "manual portal royal terminal tribunal ritual sequel crystal pedal "
    "thing king ring spring string wing morning evening building wedding "
    "ceiling meeting beginning ending feeling painting setting training "
    "funding recording reading writing opening offering marriage "
    "objective motive detective relative executive representative "
    "initiative alternative native narrative archive"
)
# irregular past forms that suffix rules would miss
VERB_FORMS = _words(
    "went gone made said took taken gave given came became won wrote "
    "written began begun left found held led saw seen knew known thought "
    "brought told got kept met ran paid sold spent stood taught fought "
    "built lost felt grew grown drew chose spoke broke fell sent heard "
    "meant bought caught sought struck threw wore rose flew ate drove born"
)

_CLOSED: Dict[str, Pos] = {}
for _pos, _lex in ((Pos.OTHER, OTHER_WORDS), (Pos.VERB, AUXILIARIES),
                   (Pos.ADP, ADPOSITIONS), (Pos.PRON, PRONOUNS),
                   (Pos.DET, DETERMINERS)):
    for _w in _lex:
        _CLOSED[_w] = _pos
for _w in ("that", "what", "which"):
    _CLOSED[_w] = Pos.DET
_CLOSED["one"] = Pos.NUM

_ADJ_SUFFIXES = ("ous", "ful", "al", "ive", "able", "ible", "less", "ish",
                 "ical", "ian", "ese")


def is_punct(surface: str) -> bool:
    return not any(ch.isalnum() for ch in surface)


def tag_word(word: str) -> Pos:
    """Tag a lowercase word out of context (closed class, then suffix rules)."""
    if is_punct(word):
        return Pos.PUNCT
    if word[0].isdigit() or word in NUMBER_WORDS:
        return Pos.NUM
    if word in _CLOSED:
        return _CLOSED[word]
    if word in ADJECTIVES:
        return Pos.ADJ
    if word in NOUN_EXCEPTIONS:
        return Pos.NOUN
    if word in VERB_FORMS:
        return Pos.VERB
    if len(word) > 4 and word.endswith("ly"):
        return Pos.OTHER
    if (len(word) > 4 and word.endswith("ing")) or (len(word) > 3 and word.endswith("ed")):
        return Pos.VERB
    if any(word.endswith(sfx) and len(word) - len(sfx) >= 3 for sfx in _ADJ_SUFFIXES):
        return Pos.ADJ
    return Pos.NOUN


def _is_capitalized(surface: str) -> bool:
    return surface[:1].isupper()


def _is_acronym(surface: str) -> bool:
    letters = [ch for ch in surface if ch.isalpha()]
    return len(letters) >= 2 and all(ch.isupper() for ch in letters)


def pos_tag(words: Sequence[str], sentence_initial: bool = True,
            proper_vocab: AbstractSet[str] = frozenset()) -> List[Pos]:
    """Assign one coarse tag to every word of a sentence.

    ``sentence_initial`` says whether ``words[0]`` starts the sentence.
    ``proper_vocab`` holds lowercased words seen capitalized mid-sentence and
    never lowercase elsewhere in the document; a capitalized sentence-initial
    word from this set is tagged PROPN.
    """
    tags = []
    for i, surface in enumerate(words):
        lower = surface.lower()
        initial = i == 0 and sentence_initial
        if is_punct(surface):
            tags.append(Pos.PUNCT)
        elif _is_acronym(surface) and lower not in ("i",) and not initial:
            tags.append(Pos.PROPN)
        elif lower in _CLOSED or surface[0].isdigit() or lower in NUMBER_WORDS:
            tags.append(tag_word(lower))
        elif _is_capitalized(surface) and (not initial or lower in proper_vocab):
            tags.append(Pos.PROPN)
        elif (initial and _is_capitalized(surface) and i + 1 < len(words)
              and _is_capitalized(words[i + 1])
              and words[i + 1].lower() not in _CLOSED
              and tag_word(lower) is Pos.NOUN):
            # "Albert Einstein ..." at the start of a sentence
            tags.append(Pos.PROPN)
        else:
            tags.append(tag_word(lower))
    return tags
