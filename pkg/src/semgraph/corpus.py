"""Sense-frequency tables.

A table counts how often each synset was chosen when a corpus was run
through the tagging pipeline.  Its smoothed relative frequencies act as a
per-word sense prior during disambiguation.  WordNet's own tag counts give
the built-in table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from semgraph.similarity import DEFAULT_PARAMS, SimilarityParams
from semgraph.wordnet import Pos, SynsetId, TaxonomyIndex, synsets_for

HEADER = "semgraph-sft v1"
BUILTIN = "builtin"

_SENTENCE_END = re.compile(r"(?<=[.!?])\s+")


@dataclass(frozen=True)
class SenseFrequencyTable:
    counts: Mapping[SynsetId, int] = field(default_factory=dict)
    total: int = 0
    source: str = ""

    def __post_init__(self):
        if any(c < 0 for c in self.counts.values()):
            raise ValueError("sense counts must be non-negative")
        if self.total != sum(self.counts.values()):
            raise ValueError(f"total {self.total} does not match the counts")

    @classmethod
    def from_counts(cls, counts: Mapping[SynsetId, int], source: str = "") -> "SenseFrequencyTable":
        kept = {sid: int(c) for sid, c in counts.items() if c}
        return cls(MappingProxyType(kept), sum(kept.values()), source)

    def count(self, sid: SynsetId) -> int:
        return self.counts.get(sid, 0)

    def __len__(self):
        return len(self.counts)


def split_sentences(text: str) -> list[str]:
    return [s.strip() for s in _SENTENCE_END.split(text) if s.strip()]


def build_from_corpus(
    corpus: Iterable[str] | str,
    index: TaxonomyIndex,
    params: SimilarityParams = DEFAULT_PARAMS,
    source: str = "",
) -> SenseFrequencyTable:
    """Disambiguate every sentence of ``corpus`` and count the chosen senses.

    ``corpus`` is a string or any iterable of text chunks (an open file works).
    """
    from semgraph.text import tag_sentence

    text = corpus if isinstance(corpus, str) else "".join(corpus)
    counts: dict[SynsetId, int] = {}
    for sentence in split_sentences(text):
        for token in tag_sentence(sentence, index, params):
            if token.sense is not None:
                counts[token.sense] = counts.get(token.sense, 0) + 1
    return SenseFrequencyTable.from_counts(counts, source)


def builtin_table(index: TaxonomyIndex) -> SenseFrequencyTable:
    """Table from the dictionary's own tagged-sense counts."""
    return SenseFrequencyTable.from_counts(
        {sid: syn.tag_count for sid, syn in index.synsets.items()}, BUILTIN
    )


def sense_prior(sid: SynsetId, lemma: str, pos: Pos, table: SenseFrequencyTable, index: TaxonomyIndex) -> float:
    """Add-one smoothed share of ``sid`` among the senses of ``lemma``."""
    senses = synsets_for(lemma, pos, index)
    if sid not in senses:
        raise ValueError(f"{sid} is not a sense of {lemma!r} ({pos.value})")
    denom = sum(table.count(s) + 1 for s in senses)
    return (table.count(sid) + 1) / denom


def save_table(table: SenseFrequencyTable, path) -> None:
    lines = [HEADER]
    for sid in sorted(table.counts, key=SynsetId.sort_key):
        lines.append(f"{sid}\t{table.counts[sid]}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_table(path) -> SenseFrequencyTable:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise ValueError(f"{path}: missing '{HEADER}' header")
    counts = {}
    for n, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        try:
            key, value = line.split("\t")
            sid = SynsetId.parse(key)
            count = int(value)
        except ValueError:
            raise ValueError(f"{path}:{n}: bad row {line!r}") from None
        if count < 0:
            raise ValueError(f"{path}:{n}: negative count")
        if sid in counts:
            raise ValueError(f"{path}:{n}: duplicate synset {sid}")
        counts[sid] = count
    return SenseFrequencyTable.from_counts(counts, str(path))
