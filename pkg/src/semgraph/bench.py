"""Benchmark harness: R&G word pairs and definition-sentence pairs.

Both datasets are tab-separated with a header row naming at least
``id item1 item2 reference``; an optional ``published`` column carries the
published score for side-by-side reports.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

from scipy import stats

from semgraph.sentence import DEFAULT_ZETA, OrderOptions, ZetaParams, sentence_similarity
from semgraph.similarity import DEFAULT_PARAMS, SimilarityParams, word_similarity
from semgraph.text import NoContentError
from semgraph.wordnet import Pos, TaxonomyIndex, normalize_lemma, synsets_for

# R&G pair numbers left out of the sentence correlation
DEFAULT_EXCLUSIONS = frozenset({17, 24, 30, 33, 39})
BUNDLED = {"words": "rg65_words.tsv", "sentences": "stss_sentences.tsv"}
REQUIRED_COLUMNS = ("id", "item1", "item2", "reference")


class DatasetError(ValueError):
    pass


@dataclass(frozen=True)
class BenchmarkPair:
    id: int
    item1: str
    item2: str
    reference: float
    published: float | None = None


@dataclass
class PairScore:
    id: int
    item1: str
    item2: str
    reference: float
    score: float
    published: float | None = None
    included: bool = True
    note: str = ""


@dataclass
class EvalReport:
    kind: str
    pairs: list[PairScore]
    pearson_r: float
    slope: float
    intercept: float
    stderr: float
    excluded_ids: list[int] = field(default_factory=list)
    seconds: float = 0.0

    def included(self) -> list[PairScore]:
        return [p for p in self.pairs if p.included]

    def to_dict(self) -> dict:
        return asdict(self)

    def write_json(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")

    def format_table(self) -> str:
        rows = [f"{'id':>3}  {'item1':<24} {'item2':<24} {'ref':>7} {'score':>7} {'publ':>7}"]
        for p in self.pairs:
            published = "" if p.published is None else f"{p.published:.4f}"
            flag = "" if p.included else "  (excluded)"
            if p.note:
                flag += f"  [{p.note}]"
            rows.append(f"{p.id:>3}  {_clip(p.item1):<24} {_clip(p.item2):<24} "
                        f"{p.reference:7.4f} {p.score:7.4f} {published:>7}{flag}")
        rows.append("")
        rows.append(f"pairs used {len(self.included())} of {len(self.pairs)}")
        rows.append(f"pearson r  {self.pearson_r:.4f}")
        rows.append(f"slope      {self.slope:.4f}")
        rows.append(f"intercept  {self.intercept:.4f}")
        rows.append(f"stderr     {self.stderr:.4f}")
        return "\n".join(rows)


def _clip(text: str, width: int = 24) -> str:
    return text if len(text) <= width else text[: width - 3] + "..."


def bundled_path(name: str) -> Path:
    """Path of a dataset shipped with the package: ``words`` or ``sentences``."""
    try:
        filename = BUNDLED[name]
    except KeyError:
        raise DatasetError(f"no bundled dataset {name!r}; choose from {sorted(BUNDLED)}") from None
    return Path(str(resources.files("semgraph.data").joinpath(filename)))


def load_dataset(path) -> list[BenchmarkPair]:
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise DatasetError(f"{path}: {exc.strerror or exc}") from None
    if not lines:
        raise DatasetError(f"{path}: empty dataset")
    header = lines[0].rstrip("\n").split("\t")
    missing = [c for c in REQUIRED_COLUMNS if c not in header]
    if missing:
        raise DatasetError(f"{path}:1: missing column(s) {', '.join(missing)}")
    col = {name: i for i, name in enumerate(header)}
    pairs, seen = [], set()
    for n, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        cells = line.split("\t")
        if len(cells) != len(header):
            raise DatasetError(f"{path}:{n}: expected {len(header)} fields, got {len(cells)}")
        try:
            pid = int(cells[col["id"]])
            reference = float(cells[col["reference"]])
            published = None
            if "published" in col and cells[col["published"]].strip():
                published = float(cells[col["published"]])
        except ValueError as exc:
            raise DatasetError(f"{path}:{n}: {exc}") from None
        if pid in seen:
            raise DatasetError(f"{path}:{n}: duplicate id {pid}")
        seen.add(pid)
        pairs.append(BenchmarkPair(pid, cells[col["item1"]], cells[col["item2"]], reference, published))
    return pairs


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Sample Pearson correlation."""
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 2:
        raise ValueError("need at least two points")
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    sxy = math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    syy = math.fsum((y - my) ** 2 for y in ys)
    if sxx == 0 or syy == 0:
        raise ValueError("zero variance")
    r = sxy / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def linear_fit(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float, float]:
    """Least-squares ``y = slope * x + intercept``; returns ``(slope, intercept, stderr)``."""
    pearson(xs, ys)  # same preconditions
    fit = stats.linregress(xs, ys)
    return float(fit.slope), float(fit.intercept), float(fit.stderr)


def _report(kind, scored: list[PairScore], excluded, started) -> EvalReport:
    used = [p for p in scored if p.included]
    xs = [p.reference for p in used]
    ys = [p.score for p in used]
    r = pearson(xs, ys)
    slope, intercept, stderr = linear_fit(xs, ys)
    return EvalReport(kind, scored, r, slope, intercept, stderr, sorted(excluded), time.perf_counter() - started)


def run_word_benchmark(
    dataset: Sequence[BenchmarkPair],
    index: TaxonomyIndex,
    params: SimilarityParams = DEFAULT_PARAMS,
    exclusions=(),
) -> EvalReport:
    """Noun similarity for each pair; unknown words score 0 and are flagged."""
    started = time.perf_counter()
    excluded = set(exclusions)
    scored = []
    for pair in dataset:
        w1, w2 = normalize_lemma(pair.item1), normalize_lemma(pair.item2)
        oov = [w for w in (w1, w2) if not synsets_for(w, Pos.NOUN, index)]
        score = word_similarity(w1, w2, Pos.NOUN, Pos.NOUN, index, params)
        note = "oov: " + ", ".join(oov) if oov else ""
        scored.append(PairScore(pair.id, pair.item1, pair.item2, pair.reference, score,
                                pair.published, pair.id not in excluded, note))
    return _report("words", scored, excluded, started)


def run_sentence_benchmark(
    dataset: Sequence[BenchmarkPair],
    index: TaxonomyIndex,
    params: SimilarityParams = DEFAULT_PARAMS,
    zeta_params: ZetaParams = DEFAULT_ZETA,
    exclusions=DEFAULT_EXCLUSIONS,
    order_opts: OrderOptions = OrderOptions(),
    table=None,
    ic_lambda: float = 0.0,
) -> EvalReport:
    """Sentence similarity per pair; excluded ids are scored but left out of r."""
    started = time.perf_counter()
    excluded = set(exclusions)
    scored = []
    for pair in dataset:
        note = ""
        try:
            score = sentence_similarity(pair.item1, pair.item2, index, params, zeta_params,
                                        order_opts, table, ic_lambda)
        except NoContentError as exc:
            score, note = 0.0, str(exc)
        scored.append(PairScore(pair.id, pair.item1, pair.item2, pair.reference, score,
                                pair.published, pair.id not in excluded, note))
    return _report("sentences", scored, excluded, started)
