"""Word and sentence similarity over the WordNet noun and verb hierarchies."""

from semgraph.sentence import OrderOptions, ZetaParams, compare_sentences, sentence_similarity
from semgraph.similarity import SimilarityParams, synset_similarity, word_similarity
from semgraph.text import NoContentError, tag_sentence
from semgraph.wordnet import Pos, SynsetId, TaxonomyIndex, WordNetError, load_database

__version__ = "0.1.0"

__all__ = [
    "NoContentError",
    "OrderOptions",
    "Pos",
    "SimilarityParams",
    "SynsetId",
    "TaxonomyIndex",
    "WordNetError",
    "ZetaParams",
    "compare_sentences",
    "load_database",
    "sentence_similarity",
    "synset_similarity",
    "tag_sentence",
    "word_similarity",
]
