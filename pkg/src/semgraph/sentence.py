"""Sentence similarity from per-sentence semantic vectors.

Each content word of one sentence gets the similarity of its best match in
the other sentence.  The two vectors give ``S = |V1| * |V2|``, which is
divided by a normalizer ``zeta`` that grows with the number of strong
matches (cells above the synonymy threshold).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from semgraph.similarity import DEFAULT_PARAMS, SimilarityParams, synset_similarity
from semgraph.text import NoContentError, TaggedToken, tag_sentence, tokenize
from semgraph.wordnet import TaxonomyIndex


@dataclass(frozen=True)
class ZetaParams:
    gamma: float = 1.8
    benchmark_threshold: float = 0.8025

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if not 0 < self.benchmark_threshold < 1:
            raise ValueError(f"threshold must lie in (0, 1), got {self.benchmark_threshold}")


DEFAULT_ZETA = ZetaParams()


@dataclass(frozen=True)
class SemanticVector:
    values: tuple[float, ...]
    label: str = ""

    def __len__(self):
        return len(self.values)

    def norm(self) -> float:
        return math.sqrt(sum(v * v for v in self.values))

    def count_above(self, threshold: float) -> int:
        return sum(1 for v in self.values if v > threshold)


@dataclass(frozen=True)
class OrderOptions:
    enabled: bool = False


@dataclass
class SentenceResult:
    """Every intermediate quantity of one sentence comparison."""

    tokens1: list[TaggedToken]
    tokens2: list[TaggedToken]
    v1: SemanticVector
    v2: SemanticVector
    s: float
    c1: int
    c2: int
    zeta: float
    semantic: float
    word_order: float | None = None
    score: float = 0.0
    notes: list[str] = field(default_factory=list)


def build_semantic_vectors(
    t1: Sequence[TaggedToken],
    t2: Sequence[TaggedToken],
    index: TaxonomyIndex,
    params: SimilarityParams = DEFAULT_PARAMS,
) -> tuple[SemanticVector, SemanticVector]:
    """Best-match vectors for two disambiguated token lists, zero-padded to equal length."""
    if all(t.sense is None for t in t1) and all(t.sense is None for t in t2):
        raise NoContentError("no content tokens")
    n = max(len(t1), len(t2))

    def best(tokens, others):
        vals = []
        for tok in tokens:
            if tok.sense is None:
                vals.append(0.0)
                continue
            vals.append(max((synset_similarity(tok.sense, o.sense, index, params)
                             for o in others if o.sense is not None), default=0.0))
        return tuple(vals) + (0.0,) * (n - len(vals))

    return SemanticVector(best(t1, t2), "V1"), SemanticVector(best(t2, t1), "V2")


def zeta_counts(v1: SemanticVector, v2: SemanticVector, p: ZetaParams = DEFAULT_ZETA) -> tuple[int, int, float]:
    """``(C1, C2, zeta)``; zeta falls back to ``n / 2`` when nothing clears the threshold."""
    if len(v1) != len(v2) or len(v1) == 0:
        raise ValueError("semantic vectors must have the same non-zero length")
    c1 = v1.count_above(p.benchmark_threshold)
    c2 = v2.count_above(p.benchmark_threshold)
    if c1 + c2 == 0:
        return c1, c2, len(v1) / 2
    return c1, c2, (c1 + c2) / p.gamma


def zeta(v1: SemanticVector, v2: SemanticVector, p: ZetaParams = DEFAULT_ZETA) -> float:
    return zeta_counts(v1, v2, p)[2]


def vector_similarity(v1: SemanticVector, v2: SemanticVector, p: ZetaParams = DEFAULT_ZETA) -> tuple[float, float]:
    """``(S, S / zeta)`` for two semantic vectors, unclamped."""
    s = v1.norm() * v2.norm()
    return s, s / zeta(v1, v2, p)


def order_vectors(words1: Sequence[str], words2: Sequence[str]) -> tuple[list[int], list[int]]:
    """Index vectors for two word sequences.

    The longer sequence is the reference and is numbered ``1..n``.  Each word
    of the other sequence takes the reference index of an identical word
    (its own position if that matches, else the first occurrence), or its own
    index when absent.  Positions past the end of the shorter sequence keep
    their own index.
    """
    if not words1 or not words2:
        raise ValueError("word order needs two non-empty sequences")
    ref, other = (words1, words2) if len(words1) >= len(words2) else (words2, words1)
    first = {}
    for i, w in enumerate(ref, 1):
        first.setdefault(w, i)
    v1 = list(range(1, len(ref) + 1))
    v2 = []
    for i, w in enumerate(other, 1):
        if i <= len(ref) and ref[i - 1] == w:
            v2.append(i)
        else:
            v2.append(first.get(w, i))
    v2.extend(range(len(other) + 1, len(ref) + 1))
    return v1, v2


def order_similarity_from_vectors(v1: Sequence[float], v2: Sequence[float]) -> float:
    """``|V1 - V2| / |V1 * V2|`` with ``*`` taken element-wise."""
    if len(v1) != len(v2) or not v1:
        raise ValueError("order vectors must have the same non-zero length")
    diff = math.sqrt(sum((a - b) ** 2 for a, b in zip(v1, v2)))
    prod = math.sqrt(sum((a * b) ** 2 for a, b in zip(v1, v2)))
    return diff / prod


def word_order_similarity(t1, t2) -> float:
    """Word order distance between two token lists (strings or TaggedTokens)."""
    w1 = [t.lemma if isinstance(t, TaggedToken) else t for t in t1]
    w2 = [t.lemma if isinstance(t, TaggedToken) else t for t in t2]
    return order_similarity_from_vectors(*order_vectors(w1, w2))


def compare_sentences(
    s1: str,
    s2: str,
    index: TaxonomyIndex,
    params: SimilarityParams = DEFAULT_PARAMS,
    zeta_params: ZetaParams = DEFAULT_ZETA,
    order_opts: OrderOptions = OrderOptions(),
    table=None,
    ic_lambda: float = 0.0,
) -> SentenceResult:
    t1 = tag_sentence(s1, index, params, table=table, ic_lambda=ic_lambda)
    t2 = tag_sentence(s2, index, params, table=table, ic_lambda=ic_lambda)
    if not any(t.is_content for t in t1) or not any(t.is_content for t in t2):
        empty = "second" if any(t.is_content for t in t1) else "first"
        raise NoContentError(f"no content tokens in {empty} sentence")
    v1, v2 = build_semantic_vectors(t1, t2, index, params)
    c1, c2, z = zeta_counts(v1, v2, zeta_params)
    s = v1.norm() * v2.norm()
    semantic = min(1.0, max(0.0, s / z))
    result = SentenceResult(t1, t2, v1, v2, s, c1, c2, z, semantic, score=semantic)
    if order_opts.enabled:
        ws = word_order_similarity(tokenize(s1), tokenize(s2))
        result.word_order = ws
        result.score = min(1.0, max(0.0, semantic * (1.0 - ws)))
    return result


def sentence_similarity(
    s1: str,
    s2: str,
    index: TaxonomyIndex,
    params: SimilarityParams = DEFAULT_PARAMS,
    zeta_params: ZetaParams = DEFAULT_ZETA,
    order_opts: OrderOptions = OrderOptions(),
    table=None,
    ic_lambda: float = 0.0,
) -> float:
    """Similarity of two sentences in [0, 1]."""
    return compare_sentences(s1, s2, index, params, zeta_params, order_opts, table, ic_lambda).score
