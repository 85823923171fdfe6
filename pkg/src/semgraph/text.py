"""Sentence -> disambiguated content tokens.

Tokenize, drop stopwords, lemmatize with suffix rules, keep nouns and verbs,
then pick one sense per token by max-similarity disambiguation.

Part of speech is decided from the lexicon alone: each POS the token can
belong to is scored by WordNet's tagged frequency for the lemma, and the
score of the POS suggested by the preceding word (a determiner suggests a
noun, "to" or a pronoun suggests a verb) is multiplied by ``CONTEXT_BOOST``.
Ties go to noun, then verb.

Adjectives and adverbs stay in the token list without a sense: they take
no part in disambiguation and contribute 0 to every similarity, but they do
count towards sentence length.  Senses are chosen with the plain path
measure ``1 / (1 + l)``, as the max-similarity disambiguator does by default.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from semgraph.similarity import DEFAULT_PARAMS, SimilarityParams, path_similarity, synset_similarity
from semgraph.wordnet import Pos, SynsetId, TaxonomyIndex, synsets_for

PUNCTUATION = ".,;:!?\"'()"

CONTEXT_BOOST = 5.0
TIE_EPS = 1e-12
_TIE_ORDER = (Pos.NOUN, Pos.VERB, Pos.ADJECTIVE, Pos.ADVERB)
CONTENT_POS = frozenset((Pos.NOUN, Pos.VERB))

NOUN_CUES = frozenset(
    """a an the this these those some any every each no such all both another other
    my your his her its our their of in on at by for with from about into onto over
    under above below between among through during before after against without
    within along across around upon as and or""".split()
)
VERB_CUES = frozenset(
    """to i you we they he she it who which that not can could will would shall
    should may might must do does did am is are was were be been being also""".split()
)

NOUN_RULES = (("s", ""), ("ses", "s"), ("xes", "x"), ("zes", "z"), ("ches", "ch"), ("shes", "sh"),
              ("men", "man"), ("ies", "y"))
VERB_RULES = (("s", ""), ("ies", "y"), ("es", "e"), ("es", ""), ("ied", "y"), ("ed", "e"), ("ed", ""),
              ("ing", "e"), ("ing", ""))
ADJ_RULES = (("er", ""), ("est", ""), ("er", "e"), ("est", "e"))
_RULES = {Pos.NOUN: NOUN_RULES, Pos.VERB: VERB_RULES, Pos.ADJECTIVE: ADJ_RULES, Pos.ADVERB: ()}


class NoContentError(ValueError):
    """Neither sentence has a noun or verb that the lexicon knows."""


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    lemma: str
    pos: Pos
    position: int
    sense: SynsetId | None = None

    @property
    def is_content(self) -> bool:
        return self.pos in CONTENT_POS


def _read_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def load_stoplist(path=None) -> frozenset[str]:
    """Stop words, one per line.  ``None`` loads the built-in list."""
    if path is None:
        text = resources.files("semgraph.data").joinpath("stopwords.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return frozenset(w.lower() for w in _read_lines(text))


def load_exceptions(path=None) -> dict[str, str]:
    """Irregular ``surface<TAB>lemma`` pairs.  ``None`` loads the built-in table."""
    if path is None:
        text = resources.files("semgraph.data").joinpath("lemma_exceptions.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    table = {}
    for n, line in enumerate(_read_lines(text), 1):
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path or 'lemma_exceptions.txt'}: bad exception entry {n}: {line!r}")
        table[parts[0].lower()] = parts[1].lower()
    return table


DEFAULT_STOPLIST = load_stoplist()
DEFAULT_EXCEPTIONS = load_exceptions()


def tokenize(text: str) -> list[str]:
    tokens = []
    for chunk in text.split():
        word = chunk.strip(PUNCTUATION).lower()
        if word:
            tokens.append(word)
    return tokens


def lemma_candidates(word: str, pos: Pos, exceptions: Mapping[str, str] = DEFAULT_EXCEPTIONS) -> list[str]:
    """Possible base forms of ``word`` for ``pos``, most literal first."""
    out = [word]
    if word in exceptions:
        out.append(exceptions[word])
    for suffix, ending in _RULES[pos]:
        if word.endswith(suffix) and len(word) > len(suffix):
            out.append(word[: -len(suffix)] + ending)
    return list(dict.fromkeys(out))


def lemmatize(word: str, pos: Pos, index: TaxonomyIndex, exceptions: Mapping[str, str] = DEFAULT_EXCEPTIONS):
    """Known base form of ``word`` for ``pos``, else ``None``.

    A noun with several known forms ("things" and "thing") takes the one
    with the higher tagged frequency, the more literal form winning ties.
    Verbs keep the literal form when it is known, so "bed" never becomes "be".
    """
    if pos is Pos.VERB and (word, pos) in index.lemma_index:
        return word
    best = None
    for cand in lemma_candidates(word, pos, exceptions):
        if (cand, pos) not in index.lemma_index:
            continue
        count = index.lemma_tag_counts.get((cand, pos), 0)
        if best is None or count > best[0]:
            best = (count, cand)
    return None if best is None else best[1]


def _cue(prev: str | None, prev_pos: Pos | None) -> Pos | None:
    if prev is None:
        return Pos.NOUN
    if prev in VERB_CUES:
        return Pos.VERB
    if prev in NOUN_CUES or prev_pos is Pos.ADJECTIVE:
        return Pos.NOUN
    if prev_pos is Pos.ADVERB:
        return Pos.VERB
    return None


def choose_pos(word: str, prev: str | None, prev_pos: Pos | None, index: TaxonomyIndex,
               exceptions: Mapping[str, str] = DEFAULT_EXCEPTIONS) -> tuple[Pos, str] | None:
    """Most likely ``(pos, lemma)`` for ``word`` given the word before it."""
    options = {}
    for pos in _TIE_ORDER:
        lemma = lemmatize(word, pos, index, exceptions)
        if lemma is not None:
            options[pos] = lemma
    if not options:
        return None
    cue = _cue(prev, prev_pos)
    best = None
    for pos in _TIE_ORDER:
        if pos not in options:
            continue
        score = index.lemma_tag_counts.get((options[pos], pos), 0) + 1.0
        if pos is cue:
            score *= CONTEXT_BOOST
        if best is None or score > best[0]:
            best = (score, pos)
    return best[1], options[best[1]]


def pos_filter(tokens: Sequence[str], index: TaxonomyIndex, stops: Iterable[str] = DEFAULT_STOPLIST,
               exceptions: Mapping[str, str] = DEFAULT_EXCEPTIONS) -> list[TaggedToken]:
    """Drop stopwords and unknown words and tag the rest, numbered from 1.

    Only nouns and verbs are content tokens; adjectives and adverbs are kept as
    sense-less placeholders.
    """
    stops = stops if isinstance(stops, (set, frozenset)) else frozenset(stops)
    out = []
    prev, prev_pos = None, None
    for word in tokens:
        if word in stops:
            prev, prev_pos = word, None
            continue
        choice = choose_pos(word, prev, prev_pos, index, exceptions)
        prev = word
        if choice is None:
            prev_pos = None
            continue
        pos, lemma = choice
        prev_pos = pos
        out.append(TaggedToken(word, lemma, pos, len(out) + 1))
    return out


def candidates(token: TaggedToken, index: TaxonomyIndex) -> list[SynsetId]:
    if not token.is_content:
        return []
    return synsets_for(token.lemma, token.pos, index)


def sense_scores(
    tokens: Sequence[TaggedToken],
    i: int,
    index: TaxonomyIndex,
    params: SimilarityParams = DEFAULT_PARAMS,
    prior=None,
    ic_lambda: float = 0.0,
    measure=path_similarity,
) -> list[tuple[SynsetId, float]]:
    """Score every candidate sense of ``tokens[i]`` against all other tokens."""
    others = [candidates(t, index) for j, t in enumerate(tokens) if j != i]
    token = tokens[i]
    scored = []
    for cand in candidates(token, index):
        total = _context_score(cand, others, index, params, measure)
        if prior is not None and ic_lambda:
            total += ic_lambda * prior(cand, token)
        scored.append((cand, total))
    return scored


def _context_score(cand, others, index, params, measure) -> float:
    total = 0.0
    for senses in others:
        total += max((measure(s, cand, index, params) for s in senses), default=0.0)
    return total


def disambiguate(
    tokens: Sequence[TaggedToken],
    index: TaxonomyIndex,
    params: SimilarityParams = DEFAULT_PARAMS,
    table=None,
    ic_lambda: float = 0.0,
    measure=path_similarity,
) -> list[TaggedToken]:
    """Assign each content token the sense with the highest summed best-match similarity.

    ``measure(a, b, index, params)`` scores sense pairs.  Exact ties go to the
    candidate scoring higher under the depth-aware ``synset_similarity``, then
    to the higher prior from ``table`` (if given), then to sense order.  With
    ``ic_lambda > 0`` the prior is also added to every score.
    """
    prior = None
    if table is not None:
        from semgraph.corpus import sense_prior

        def prior(cand, token):
            return sense_prior(cand, token.lemma, token.pos, table, index)

    n_content = sum(1 for t in tokens if t.is_content)
    out = []
    for i, token in enumerate(tokens):
        senses = candidates(token, index)
        if len(senses) <= 1 or n_content == 1:
            out.append(replace(token, sense=senses[0] if senses else None))
            continue
        scored = sense_scores(tokens, i, index, params, prior, ic_lambda, measure)
        top = max(score for _, score in scored)
        tied = [cand for cand, score in scored if score >= top - TIE_EPS]
        if len(tied) > 1 and measure is not synset_similarity:
            others = [candidates(t, index) for j, t in enumerate(tokens) if j != i]
            tied = _best(tied, lambda c: _context_score(c, others, index, params, synset_similarity))
        if len(tied) > 1 and prior is not None:
            tied = _best(tied, lambda c: prior(c, token))
        out.append(replace(token, sense=tied[0]))
    return out


def _best(cands: list[SynsetId], key) -> list[SynsetId]:
    """Candidates within ``TIE_EPS`` of the best ``key``, in their original order."""
    values = [key(c) for c in cands]
    top = max(values)
    return [c for c, v in zip(cands, values) if v >= top - TIE_EPS]


def tag_sentence(
    text: str,
    index: TaxonomyIndex,
    params: SimilarityParams = DEFAULT_PARAMS,
    stops: Iterable[str] = DEFAULT_STOPLIST,
    exceptions: Mapping[str, str] = DEFAULT_EXCEPTIONS,
    table=None,
    ic_lambda: float = 0.0,
    measure=path_similarity,
) -> list[TaggedToken]:
    """tokenize -> pos_filter -> disambiguate."""
    tokens = pos_filter(tokenize(text), index, stops, exceptions)
    return disambiguate(tokens, index, params, table, ic_lambda, measure)
