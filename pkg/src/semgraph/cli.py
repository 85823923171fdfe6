"""semgraph command line.

    semgraph word gem jewel
    semgraph sentence "A gem is a jewel." "A jewel is a precious stone." -v
    semgraph wsd "The river bank was muddy."
    semgraph bench sentences --out report.json
    semgraph build-corpus corpus.txt table.sft

Exit codes: 0 ok, 1 usage, 2 data or load error, 3 degenerate input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from itertools import product

from semgraph import bench, corpus
from semgraph.sentence import OrderOptions, ZetaParams, compare_sentences, order_vectors
from semgraph.similarity import SimilarityParams, best_synset_pair, similarity_trace
from semgraph.text import NoContentError, tag_sentence, tokenize
from semgraph.wordnet import ENV_DICT_DIR, Pos, WordNetError, default_dict_dir, load_database, normalize_lemma, synsets_for

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_DEGENERATE = 0, 1, 2, 3

log = logging.getLogger("semgraph")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class CliConfig:
    dict_dir: str | None
    params: SimilarityParams
    zeta: ZetaParams
    word_order: bool = False
    ic_lambda: float = 0.0
    output: str = "text"
    verbose: int = 0


def _positive(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _non_negative(text):
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return value


def _unit_open(text):
    value = float(text)
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(f"must lie in (0, 1), got {text}")
    return value


def _pos(text):
    try:
        return Pos.from_code(text)
    except (ValueError, KeyError):
        raise argparse.ArgumentTypeError(f"unknown part of speech {text!r} (use n or v)") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dict-dir", help=f"WordNet dict directory (default: ${ENV_DICT_DIR})")
    common.add_argument("--alpha", type=_positive, default=0.2, help="path-length decay (default 0.2)")
    common.add_argument("--beta", type=_positive, default=0.45, help="depth scaling (default 0.45)")
    common.add_argument("--gamma", type=_positive, default=1.8, help="zeta divisor (default 1.8)")
    common.add_argument("--threshold", type=_unit_open, default=0.8025,
                        help="strong-match threshold for zeta (default 0.8025)")
    common.add_argument("--word-order", action="store_true", help="multiply in word order similarity")
    common.add_argument("--ic-lambda", type=_non_negative, default=0.0,
                        help="weight of the sense prior during disambiguation (default 0)")
    common.add_argument("--table", help="sense-frequency table file, or 'builtin'")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = _Parser(prog="semgraph", description="Taxonomy-based word and sentence similarity.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("word", parents=[common], help="similarity of two words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--pos", type=_pos, default=Pos.NOUN, help="part of speech of both words (n or v)")
    p.add_argument("--senses", action="store_true", help="list every sense pair")

    p = sub.add_parser("sentence", parents=[common], help="similarity of two sentences")
    p.add_argument("sentence1")
    p.add_argument("sentence2")

    p = sub.add_parser("wsd", parents=[common], help="show tagged and disambiguated tokens")
    p.add_argument("sentence")

    p = sub.add_parser("bench", parents=[common], help="run a benchmark")
    p.add_argument("kind", choices=["words", "sentences"])
    p.add_argument("--dataset", help="TSV file (default: the bundled dataset)")
    p.add_argument("--exclude", help="comma-separated pair ids to leave out of r "
                                     "(sentences default: 17,24,30,33,39)")
    p.add_argument("--out", help="write the JSON report here")

    p = sub.add_parser("build-corpus", parents=[common], help="count senses in a text corpus")
    p.add_argument("corpus")
    p.add_argument("output")
    return parser


def _config(args) -> CliConfig:
    return CliConfig(
        dict_dir=args.dict_dir or default_dict_dir(),
        params=SimilarityParams(args.alpha, args.beta),
        zeta=ZetaParams(args.gamma, args.threshold),
        word_order=args.word_order,
        ic_lambda=args.ic_lambda,
        output="json" if args.json else "text",
        verbose=args.verbose,
    )


def _load(cfg: CliConfig):
    if not cfg.dict_dir:
        raise UsageError(f"no dictionary directory: pass --dict-dir or set {ENV_DICT_DIR}")
    log.info("loading %s", cfg.dict_dir)
    return load_database(cfg.dict_dir)


def _table(args, index):
    if not args.table:
        return None
    if args.table == corpus.BUILTIN:
        return corpus.builtin_table(index)
    return corpus.load_table(args.table)


def _emit(cfg: CliConfig, payload: dict, text: str) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_word(args, cfg: CliConfig) -> int:
    index = _load(cfg)
    w1, w2 = normalize_lemma(args.word1), normalize_lemma(args.word2)
    for w in (w1, w2):
        if not synsets_for(w, args.pos, index):
            log.warning("%r has no %s senses; it scores 0", w, args.pos.name.lower())
    score, s1, s2 = best_synset_pair(w1, w2, args.pos, args.pos, index, cfg.params)
    payload = {"word1": w1, "word2": w2, "pos": args.pos.value, "score": score}
    lines = [f"{score:.6f}"]
    if s1 is not None and (cfg.verbose or args.senses):
        l, sub, h, _ = similarity_trace(s1, s2, index, cfg.params)
        payload["best"] = {"sense1": index.name_of(s1), "sense2": index.name_of(s2),
                           "length": l, "subsumer": index.name_of(sub), "depth": h}
        lines.append(f"best: {index.name_of(s1)} ~ {index.name_of(s2)}  l={l} subsumer={index.name_of(sub)} h={h}")
    if args.senses:
        rows = []
        for a, b in product(synsets_for(w1, args.pos, index), synsets_for(w2, args.pos, index)):
            l, sub, h, value = similarity_trace(a, b, index, cfg.params)
            rows.append({"sense1": index.name_of(a), "sense2": index.name_of(b), "length": l,
                         "subsumer": index.name_of(sub), "depth": h, "score": value})
            lines.append(f"  {index.name_of(a):<24} {index.name_of(b):<24} l={l:<3} h={h:<3} "
                         f"{value:.6f}  via {index.name_of(sub)}")
        payload["senses"] = rows
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def _token_rows(tokens, index):
    return [{"surface": t.surface, "lemma": t.lemma, "pos": t.pos.value,
             "sense": None if t.sense is None else index.name_of(t.sense)} for t in tokens]


def _token_line(tokens, index) -> str:
    parts = []
    for t in tokens:
        sense = "-" if t.sense is None else index.name_of(t.sense)
        parts.append(f"({t.surface!r}, {sense})")
    return "[" + ", ".join(parts) + "]"


def cmd_sentence(args, cfg: CliConfig) -> int:
    index = _load(cfg)
    result = compare_sentences(args.sentence1, args.sentence2, index, cfg.params, cfg.zeta,
                               OrderOptions(cfg.word_order), _table(args, index), cfg.ic_lambda)
    payload = {
        "score": result.score, "semantic": result.semantic, "word_order": result.word_order,
        "s": result.s, "c1": result.c1, "c2": result.c2, "zeta": result.zeta,
        "v1": list(result.v1.values), "v2": list(result.v2.values),
        "tokens1": _token_rows(result.tokens1, index), "tokens2": _token_rows(result.tokens2, index),
    }
    lines = [f"{result.score:.6f}"]
    if cfg.verbose:
        lines += [
            f"L1: {_token_line(result.tokens1, index)}",
            f"L2: {_token_line(result.tokens2, index)}",
            "V1: [" + ", ".join(f"{v:.8f}" for v in result.v1.values) + "]",
            "V2: [" + ", ".join(f"{v:.8f}" for v in result.v2.values) + "]",
            f"S = {result.s:.8f}  C1 = {result.c1}  C2 = {result.c2}  zeta = {result.zeta:.6f}",
            f"semantic = {result.semantic:.6f}",
        ]
        if result.word_order is not None:
            v1, v2 = order_vectors(tokenize(args.sentence1), tokenize(args.sentence2))
            lines.append(f"order vectors {v1} {v2}  W_s = {result.word_order:.6f}")
    elif result.word_order is not None:
        lines.append(f"W_s = {result.word_order:.6f}")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def cmd_wsd(args, cfg: CliConfig) -> int:
    index = _load(cfg)
    tokens = tag_sentence(args.sentence, index, cfg.params, table=_table(args, index), ic_lambda=cfg.ic_lambda)
    lines = []
    for t in tokens:
        if t.sense is None:
            lines.append(f"{t.position:>3} {t.surface:<16} {t.lemma:<16} {t.pos.value}  -")
            continue
        gloss = index.synset(t.sense).gloss if cfg.verbose else ""
        lines.append(f"{t.position:>3} {t.surface:<16} {t.lemma:<16} {t.pos.value}  "
                     f"{index.name_of(t.sense)}  {gloss}".rstrip())
    _emit(cfg, {"tokens": _token_rows(tokens, index)}, "\n".join(lines) if lines else "(no content words)")
    return EXIT_OK


def _parse_ids(text):
    try:
        return {int(x) for x in text.split(",") if x.strip()}
    except ValueError:
        raise UsageError(f"--exclude expects comma-separated integers, got {text!r}") from None


def cmd_bench(args, cfg: CliConfig) -> int:
    path = args.dataset or bench.bundled_path(args.kind)
    dataset = bench.load_dataset(path)
    index = _load(cfg)
    if args.kind == "words":
        excluded = _parse_ids(args.exclude) if args.exclude else set()
        report = bench.run_word_benchmark(dataset, index, cfg.params, excluded)
    else:
        excluded = _parse_ids(args.exclude) if args.exclude is not None else bench.DEFAULT_EXCLUSIONS
        report = bench.run_sentence_benchmark(dataset, index, cfg.params, cfg.zeta, excluded,
                                              OrderOptions(cfg.word_order), _table(args, index), cfg.ic_lambda)
    if args.out:
        report.write_json(args.out)
        log.info("report written to %s", args.out)
    _emit(cfg, report.to_dict(), report.format_table())
    return EXIT_OK


def cmd_build_corpus(args, cfg: CliConfig) -> int:
    index = _load(cfg)
    with open(args.corpus, encoding="utf-8") as fh:
        table = corpus.build_from_corpus(fh, index, cfg.params, source=args.corpus)
    if table.total == 0:
        log.warning("%s produced no sense counts", args.corpus)
    corpus.save_table(table, args.output)
    _emit(cfg, {"output": args.output, "synsets": len(table), "total": table.total},
          f"{len(table)} synsets, {table.total} occurrences -> {args.output}")
    return EXIT_OK


COMMANDS = {"word": cmd_word, "sentence": cmd_sentence, "wsd": cmd_wsd,
            "bench": cmd_bench, "build-corpus": cmd_build_corpus}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 1),
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    cfg = _config(args)
    try:
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"semgraph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoContentError as exc:
        print(f"semgraph: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (WordNetError, bench.DatasetError, OSError, ValueError) as exc:
        print(f"semgraph: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
