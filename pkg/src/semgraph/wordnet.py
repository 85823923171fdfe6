"""Reader for the WordNet 3.0 ``dict`` directory format.

Only the plain-text database files are used: ``index.<pos>`` for the
lemma -> sense lists, ``data.<pos>`` for the synset records and the optional
``index.sense`` for tagged sense counts.
"""

from __future__ import annotations

import enum
import os
import threading
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterator, Mapping, NamedTuple

ENV_DICT_DIR = "SEMGRAPH_WN_DIR"

VIRTUAL_ROOT_OFFSET = 0
VIRTUAL_ROOT_LEMMA = "*root*"
VIRTUAL_ROOT_GLOSS = "synthetic root"

HYPERNYM = "@"
INSTANCE_HYPERNYM = "@i"
HYPONYM = "~"
INSTANCE_HYPONYM = "~i"

_UPWARD = (HYPERNYM, INSTANCE_HYPERNYM)
_INVERSE = {
    HYPERNYM: HYPONYM,
    INSTANCE_HYPERNYM: INSTANCE_HYPONYM,
    HYPONYM: HYPERNYM,
    INSTANCE_HYPONYM: INSTANCE_HYPERNYM,
}


class WordNetError(Exception):
    """Raised when a dictionary directory cannot be loaded."""


class MalformedRecordError(WordNetError):
    def __init__(self, path, byte_offset, reason):
        self.path = str(path)
        self.byte_offset = byte_offset
        super().__init__(f"{path}: malformed record at byte {byte_offset}: {reason}")


class Pos(enum.Enum):
    NOUN = "n"
    VERB = "v"
    ADJECTIVE = "a"
    ADVERB = "r"

    # members are singletons; the default enum hash is a slow Python-level call
    __hash__ = object.__hash__

    @classmethod
    def from_code(cls, code: str) -> "Pos":
        try:
            return _FROM_CODE[code]
        except KeyError:
            raise ValueError(f"{code!r} is not a part-of-speech code") from None

    @property
    def file_suffix(self) -> str:
        return _FILE_SUFFIX[self]

    def __repr__(self):
        return f"Pos.{self.name}"


# adjective satellites ("s") share the adjective files
_FROM_CODE = {"n": Pos.NOUN, "v": Pos.VERB, "a": Pos.ADJECTIVE, "s": Pos.ADJECTIVE, "r": Pos.ADVERB}
_FILE_SUFFIX = {Pos.NOUN: "noun", Pos.VERB: "verb", Pos.ADJECTIVE: "adj", Pos.ADVERB: "adv"}
_SENSE_KEY_POS = {"1": Pos.NOUN, "2": Pos.VERB, "3": Pos.ADJECTIVE, "4": Pos.ADVERB, "5": Pos.ADJECTIVE}

SIMILARITY_POS = (Pos.NOUN, Pos.VERB)
REQUIRED_POS = (Pos.NOUN, Pos.VERB)


class SynsetId(NamedTuple):
    pos: Pos
    offset: int

    def __str__(self):
        return f"{self.pos.value}:{self.offset:08d}"

    @classmethod
    def parse(cls, text: str) -> "SynsetId":
        """Inverse of ``str()``: ``"n:09411430"``."""
        code, _, offset = text.partition(":")
        return cls(Pos.from_code(code), int(offset))

    def sort_key(self):
        return (self.pos.value, self.offset)


@dataclass(frozen=True)
class Synset:
    id: SynsetId
    lemmas: tuple[str, ...]
    gloss: str
    pointers: tuple[tuple[str, SynsetId], ...] = ()
    tag_count: int = 0

    @property
    def pos(self) -> Pos:
        return self.id.pos

    def targets(self, *symbols: str) -> list[SynsetId]:
        return [target for symbol, target in self.pointers if symbol in symbols]


def normalize_lemma(word: str) -> str:
    return "_".join(word.strip().lower().split())


@dataclass(frozen=True, eq=False)
class TaxonomyIndex:
    """Immutable in-memory view of a loaded dictionary.

    ``hypernym_edges`` holds the upward adjacency actually used for path
    search: hypernym and instance-hypernym pointers, plus an edge to the
    per-POS virtual root for every synset that has no hypernym.
    """

    synsets: Mapping[SynsetId, Synset]
    lemma_index: Mapping[tuple[str, Pos], tuple[SynsetId, ...]]
    virtual_roots: Mapping[Pos, SynsetId]
    hypernym_edges: Mapping[SynsetId, tuple[SynsetId, ...]]
    # summed corpus tag counts per (lemma, POS); empty without index.sense
    lemma_tag_counts: Mapping[tuple[str, Pos], int] = field(default_factory=dict)
    source: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __len__(self):
        return len(self.synsets)

    @property
    def loaded_pos(self) -> tuple[Pos, ...]:
        return tuple(self.virtual_roots)

    def synset(self, ref) -> Synset:
        """Return a synset by id or by ``lemma.pos.NN`` name."""
        if isinstance(ref, str):
            ref = self.lookup(ref)
        try:
            return self.synsets[ref]
        except KeyError:
            raise KeyError(f"unknown synset {ref}") from None

    def synset_count(self, include_virtual: bool = False) -> int:
        if include_virtual:
            return len(self.synsets)
        return len(self.synsets) - len(self.virtual_roots)

    def is_virtual_root(self, sid: SynsetId) -> bool:
        return sid.offset == VIRTUAL_ROOT_OFFSET

    def hypernyms(self, sid: SynsetId) -> tuple[SynsetId, ...]:
        if sid not in self.synsets:
            raise KeyError(f"unknown synset {sid}")
        return self.hypernym_edges.get(sid, ())

    def hyponyms(self, sid: SynsetId) -> list[SynsetId]:
        syn = self.synset(sid)
        return syn.targets(HYPONYM, INSTANCE_HYPONYM)

    def name_of(self, sid: SynsetId) -> str:
        """``lemma.pos.NN`` style name, numbered by the first lemma's sense order."""
        syn = self.synset(sid)
        if self.is_virtual_root(sid):
            return f"{VIRTUAL_ROOT_LEMMA}.{sid.pos.value}.00"
        lemma = syn.lemmas[0]
        senses = self.lemma_index.get((lemma, sid.pos), ())
        number = senses.index(sid) + 1 if sid in senses else 0
        return f"{lemma}.{sid.pos.value}.{number:02d}"

    def lookup(self, name: str) -> SynsetId:
        """Resolve ``lemma.pos.NN`` (e.g. ``bank.n.09``) to a synset id."""
        try:
            lemma, code, number = name.rsplit(".", 2)
            pos = Pos.from_code(code)
            n = int(number)
        except ValueError:
            raise KeyError(f"bad synset name {name!r}") from None
        if lemma == VIRTUAL_ROOT_LEMMA and pos in self.virtual_roots:
            return self.virtual_roots[pos]
        senses = self.lemma_index.get((normalize_lemma(lemma), pos), ())
        if not 1 <= n <= len(senses):
            raise KeyError(f"unknown synset {name!r}")
        return senses[n - 1]


def synsets_for(lemma: str, pos: Pos, index: TaxonomyIndex) -> list[SynsetId]:
    """Senses of ``lemma`` in index-file order; empty when unknown."""
    return list(index.lemma_index.get((normalize_lemma(lemma), pos), ()))


def gloss_of(sid: SynsetId, index: TaxonomyIndex) -> str:
    return index.synset(sid).gloss


def default_dict_dir() -> str | None:
    return os.environ.get(ENV_DICT_DIR) or None


def _iter_records(path: Path) -> Iterator[tuple[int, str]]:
    """Yield ``(byte_offset, line)`` for every non-header line."""
    offset = 0
    with open(path, "rb") as fh:
        for raw in fh:
            start = offset
            offset += len(raw)
            if raw.startswith(b"  "):
                continue
            line = raw.decode("utf-8", errors="replace").rstrip("\r\n")
            if line.strip():
                yield start, line


def _parse_data_line(path: Path, byte_offset: int, line: str, check_offset: bool = True):
    body, sep, gloss = line.partition("|")
    if not sep:
        raise MalformedRecordError(path, byte_offset, "missing gloss separator '|'")
    fields = body.split()
    try:
        offset = int(fields[0])
        pos = Pos.from_code(fields[2])
        w_cnt = int(fields[3], 16)
        i = 4
        lemmas = []
        for _ in range(w_cnt):
            word = fields[i].lower()
            # adjective position markers: "(a)", "(p)", "(ip)"
            if word.endswith(")") and "(" in word:
                word = word[: word.index("(")]
            lemmas.append(word)
            i += 2
        p_cnt = int(fields[i])
        i += 1
        pointers = []
        for _ in range(p_cnt):
            symbol, target, target_pos = fields[i], int(fields[i + 1]), fields[i + 2]
            int(fields[i + 3], 16)
            pointers.append((symbol, SynsetId(Pos.from_code(target_pos), target)))
            i += 4
    except (IndexError, ValueError) as exc:
        raise MalformedRecordError(path, byte_offset, str(exc)) from None
    if check_offset and offset != byte_offset:
        raise MalformedRecordError(path, byte_offset, f"declared offset {offset:08d} does not match")
    if not lemmas:
        raise MalformedRecordError(path, byte_offset, "synset has no lemmas")
    return SynsetId(pos, offset), tuple(lemmas), tuple(pointers), gloss.strip()


def _parse_index_line(path: Path, byte_offset: int, line: str, pos: Pos):
    fields = line.split()
    try:
        lemma = fields[0].lower()
        synset_cnt = int(fields[2])
        p_cnt = int(fields[3])
        i = 4 + p_cnt
        sense_cnt = int(fields[i])
        int(fields[i + 1])  # tagsense_cnt
        offsets = [int(x) for x in fields[i + 2 : i + 2 + synset_cnt]]
    except (IndexError, ValueError) as exc:
        raise MalformedRecordError(path, byte_offset, str(exc)) from None
    if len(offsets) != synset_cnt or sense_cnt != synset_cnt:
        raise MalformedRecordError(path, byte_offset, "sense count mismatch")
    return lemma, [SynsetId(pos, off) for off in offsets]


def _parse_sense_line(path: Path, byte_offset: int, line: str):
    fields = line.split()
    try:
        key = fields[0]
        lemma, _, rest = key.partition("%")
        pos = _SENSE_KEY_POS[rest[0]]
        offset = int(fields[1])
        count = int(fields[3])
    except (IndexError, ValueError, KeyError) as exc:
        raise MalformedRecordError(path, byte_offset, f"bad sense line: {exc}") from None
    return lemma.lower(), SynsetId(pos, offset), count


def _attach_cycles(pos: Pos, vroot: SynsetId, edges: dict[SynsetId, tuple[SynsetId, ...]]) -> list[SynsetId]:
    """Link hypernym cycles (e.g. restrain.v.01 <-> inhibit.v.04) to the virtual root.

    Returns the synsets that received a root edge; ``edges`` is updated in place.
    """
    down: dict[SynsetId, list[SynsetId]] = {}
    for child, parents in edges.items():
        if child.pos is pos:
            for p in parents:
                down.setdefault(p, []).append(child)

    reached = {vroot}
    stack = [vroot]

    def sweep():
        while stack:
            for child in down.get(stack.pop(), ()):
                if child not in reached:
                    reached.add(child)
                    stack.append(child)

    sweep()
    attached = []
    for sid in sorted((s for s in edges if s.pos is pos), key=SynsetId.sort_key):
        if sid in reached:
            continue
        # every unreached synset has parents, so climbing must loop
        path, node = [], sid
        while node not in path:
            path.append(node)
            node = min(edges[node], key=SynsetId.sort_key)
        top = min(path[path.index(node):], key=SynsetId.sort_key)
        edges[top] = edges[top] + (vroot,)
        down.setdefault(vroot, []).append(top)
        attached.append(top)
        reached.add(top)
        stack.append(top)
        sweep()
    return attached


def load_database(dict_dir, check_offsets: bool = True) -> TaxonomyIndex:
    """Load a WordNet 3.0 ``dict`` directory into a :class:`TaxonomyIndex`.

    ``index.noun``/``data.noun`` are required.  Verb, adjective and adverb
    files are loaded when present; a missing POS simply has no senses.
    """
    root = Path(dict_dir)
    if not root.is_dir():
        raise WordNetError(f"dictionary directory not found: {root}")
    for suffix in ("noun",):
        for kind in ("index", "data"):
            if not (root / f"{kind}.{suffix}").is_file():
                raise WordNetError(f"missing required file: {root / f'{kind}.{suffix}'}")

    present = []
    for pos in Pos:
        idx, dat = root / f"index.{pos.file_suffix}", root / f"data.{pos.file_suffix}"
        if idx.is_file() and dat.is_file():
            present.append(pos)
        elif idx.is_file() or dat.is_file():
            missing = dat if idx.is_file() else idx
            raise WordNetError(f"missing required file: {missing}")

    raw: dict[SynsetId, tuple] = {}
    lemma_index: dict[tuple[str, Pos], tuple[SynsetId, ...]] = {}
    lemma_tags: dict[tuple[str, Pos], int] = {}
    for pos in present:
        path = root / f"data.{pos.file_suffix}"
        for byte_offset, line in _iter_records(path):
            sid, lemmas, pointers, gloss = _parse_data_line(path, byte_offset, line, check_offsets)
            if sid.offset == VIRTUAL_ROOT_OFFSET:
                raise MalformedRecordError(path, byte_offset, "offset 0 is reserved for the virtual root")
            if sid.pos != pos:
                sid = SynsetId(pos, sid.offset)
            raw[sid] = (lemmas, pointers, gloss)
        path = root / f"index.{pos.file_suffix}"
        for byte_offset, line in _iter_records(path):
            lemma, senses = _parse_index_line(path, byte_offset, line, pos)
            for sid in senses:
                if sid not in raw:
                    raise WordNetError(f"{path}: lemma {lemma!r} points to unknown synset {sid}")
            lemma_index[(lemma, pos)] = tuple(senses)

    tag_counts: dict[SynsetId, int] = {}
    sense_path = root / "index.sense"
    if sense_path.is_file():
        for byte_offset, line in _iter_records(sense_path):
            lemma, sid, count = _parse_sense_line(sense_path, byte_offset, line)
            if sid in raw:
                tag_counts[sid] = tag_counts.get(sid, 0) + count
                key = (lemma, sid.pos)
                lemma_tags[key] = lemma_tags.get(key, 0) + count

    loaded = set(present)
    for sid, (_, pointers, _) in raw.items():
        for symbol, target in pointers:
            if target.pos in loaded and target not in raw:
                raise WordNetError(
                    f"dangling pointer {symbol!r} from {sid} to {target} in data.{sid.pos.file_suffix}"
                )

    synsets: dict[SynsetId, Synset] = {}
    for sid, (lemmas, pointers, gloss) in raw.items():
        synsets[sid] = Synset(sid, lemmas, gloss, pointers, tag_counts.get(sid, 0))

    virtual_roots = {}
    hypernym_edges: dict[SynsetId, tuple[SynsetId, ...]] = {}
    for pos in present:
        vroot = SynsetId(pos, VIRTUAL_ROOT_OFFSET)
        virtual_roots[pos] = vroot
        tops = []
        for sid, syn in synsets.items():
            if sid.pos is not pos:
                continue
            ups = tuple(dict.fromkeys(t for t in syn.targets(*_UPWARD) if t.pos is pos))
            if not ups:
                tops.append(sid)
                ups = (vroot,)
            hypernym_edges[sid] = ups
        tops.extend(_attach_cycles(pos, vroot, hypernym_edges))
        tops.sort(key=SynsetId.sort_key)
        synsets[vroot] = Synset(
            vroot,
            (VIRTUAL_ROOT_LEMMA,),
            VIRTUAL_ROOT_GLOSS,
            tuple((HYPONYM, t) for t in tops),
            0,
        )
        hypernym_edges[vroot] = ()

    return TaxonomyIndex(
        synsets=MappingProxyType(synsets),
        lemma_index=MappingProxyType(lemma_index),
        virtual_roots=MappingProxyType(virtual_roots),
        hypernym_edges=MappingProxyType(hypernym_edges),
        lemma_tag_counts=MappingProxyType(lemma_tags),
        source=str(root),
    )


def inverse_symbol(symbol: str) -> str | None:
    return _INVERSE.get(symbol)
