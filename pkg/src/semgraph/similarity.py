"""Edge-based word similarity: exp(-alpha * l) * tanh(beta * h)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from semgraph.taxonomy import depth, shortest_path
from semgraph.wordnet import Pos, SynsetId, TaxonomyIndex, synsets_for


@dataclass(frozen=True)
class SimilarityParams:
    alpha: float = 0.2
    beta: float = 0.45

    def __post_init__(self):
        if not self.alpha > 0 or not self.beta > 0:
            raise ValueError(f"alpha and beta must be positive, got {self.alpha}, {self.beta}")


DEFAULT_PARAMS = SimilarityParams()


def path_factor(length: int, params: SimilarityParams = DEFAULT_PARAMS) -> float:
    if length < 0:
        raise ValueError("path length must be non-negative")
    return math.exp(-params.alpha * length)


def depth_factor(h: int, params: SimilarityParams = DEFAULT_PARAMS) -> float:
    if h < 0:
        raise ValueError("depth must be non-negative")
    return math.tanh(params.beta * h)


def synset_similarity(
    a: SynsetId, b: SynsetId, index: TaxonomyIndex, params: SimilarityParams = DEFAULT_PARAMS
) -> float:
    """Similarity of two senses; 0 across parts of speech."""
    if a.pos is not b.pos:
        index.synset(a), index.synset(b)
        return 0.0
    key = (params, a, b) if a.sort_key() <= b.sort_key() else (params, b, a)
    cache = index._cache.setdefault("similarity", {})
    hit = cache.get(key)
    if hit is not None:
        return hit
    path = shortest_path(a, b, index)
    value = path_factor(path.length, params) * depth_factor(path.subsumer_depth, params)
    cache[key] = value
    return value


def path_similarity(a: SynsetId, b: SynsetId, index: TaxonomyIndex, params=None) -> float:
    """``1 / (1 + l)``; the measure used to pick senses, 0 across parts of speech."""
    if a.pos is not b.pos:
        return 0.0
    return 1.0 / (1 + shortest_path(a, b, index).length)


def best_synset_pair(
    w1: str, w2: str, pos1: Pos, pos2: Pos, index: TaxonomyIndex, params: SimilarityParams = DEFAULT_PARAMS
) -> tuple[float, SynsetId | None, SynsetId | None]:
    """Highest-scoring sense pair for two words; the first pair in sense order wins ties."""
    best = (0.0, None, None)
    if pos1 is not pos2:
        return best
    for s1, s2 in product(synsets_for(w1, pos1, index), synsets_for(w2, pos2, index)):
        value = synset_similarity(s1, s2, index, params)
        if best[1] is None or value > best[0]:
            best = (value, s1, s2)
    return best


def word_similarity(
    w1: str,
    w2: str,
    pos1: Pos,
    pos2: Pos,
    index: TaxonomyIndex,
    params: SimilarityParams = DEFAULT_PARAMS,
) -> float:
    """Max over all sense pairs; 0 for unknown words or mismatched POS."""
    return best_synset_pair(w1, w2, pos1, pos2, index, params)[0]


def similarity_trace(a: SynsetId, b: SynsetId, index: TaxonomyIndex, params: SimilarityParams = DEFAULT_PARAMS):
    """``(l, subsumer, h, score)`` for a same-POS pair, for diagnostics."""
    path = shortest_path(a, b, index)
    return path.length, path.subsumer, path.subsumer_depth, synset_similarity(a, b, index, params)


def self_similarity(sid: SynsetId, index: TaxonomyIndex, params: SimilarityParams = DEFAULT_PARAMS) -> float:
    return depth_factor(depth(sid, index), params)
