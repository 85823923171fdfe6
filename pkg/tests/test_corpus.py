import io
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from semgraph.corpus import (
    BUILTIN,
    HEADER,
    SenseFrequencyTable,
    build_from_corpus,
    builtin_table,
    load_table,
    save_table,
    sense_prior,
    split_sentences,
)
from semgraph.wordnet import Pos, SynsetId, load_database, synsets_for

from conftest import FIXTURES
from wnfixture import write_dict


def test_split_sentences():
    assert split_sentences("One. Two!  Three?\nFour") == ["One.", "Two!", "Three?", "Four"]
    assert split_sentences("   ") == []


def test_empty_corpus(mini):
    table = build_from_corpus("", mini)
    assert table.total == 0 and len(table) == 0
    assert build_from_corpus(io.StringIO(""), mini).total == 0


def test_counts_fixture(mini):
    table = build_from_corpus("A gem is a stone. The jewel rolls.", mini, source="x.txt")
    gem, stone, roll = mini.lookup("gem.n.01"), mini.lookup("stone.n.01"), mini.lookup("roll.v.01")
    assert table.count(gem) == 2 and table.count(stone) == 1 and table.count(roll) == 1
    assert table.total == 4 and table.source == "x.txt"
    assert table.count(mini.lookup("thing.n.01")) == 0


def test_table_invariants():
    a = SynsetId(Pos.NOUN, 10)
    with pytest.raises(ValueError):
        SenseFrequencyTable({a: -1}, -1)
    with pytest.raises(ValueError):
        SenseFrequencyTable({a: 2}, 3)
    table = SenseFrequencyTable.from_counts({a: 2, SynsetId(Pos.NOUN, 20): 0})
    assert len(table) == 1 and table.total == 2
    with pytest.raises(TypeError):
        table.counts[a] = 5


def test_builtin_from_hand_set_counts(mini):
    table = builtin_table(mini)
    stone = synsets_for("stone", Pos.NOUN, mini)
    # fixture tag counts: stone -> mid 3, stone -> leaf2 1, move -> move 5
    assert table.count(stone[0]) == 3 and table.count(stone[1]) == 1
    assert table.source == BUILTIN
    assert table.count(mini.lookup("gem.n.01")) == 0


def test_builtin_two_sense_fixture(tmp_path):
    nodes = [
        {"key": "a", "pos": "n", "lemmas": ["bass"]},
        {"key": "b", "pos": "n", "lemmas": ["bass"]},
        {"key": "v", "pos": "v", "lemmas": ["go"]},
    ]
    ids = write_dict(tmp_path, nodes, tag_counts={("bass", "a"): 3, ("bass", "b"): 1})
    index = load_database(tmp_path)
    table = builtin_table(index)
    assert table.total == 4
    assert sense_prior(ids["a"], "bass", Pos.NOUN, table, index) == pytest.approx(4 / 6)
    assert sense_prior(ids["b"], "bass", Pos.NOUN, table, index) == pytest.approx(2 / 6)
    empty = SenseFrequencyTable.from_counts({})
    assert sense_prior(ids["a"], "bass", Pos.NOUN, empty, index) == 0.5
    assert sense_prior(ids["v"], "go", Pos.VERB, table, index) == 1.0


def test_prior_contract(mini):
    table = builtin_table(mini)
    with pytest.raises(ValueError, match="not a sense"):
        sense_prior(mini.lookup("gem.n.01"), "stone", Pos.NOUN, table, mini)


@pytest.fixture(scope="module")
def twelve_senses(tmp_path_factory):
    root = tmp_path_factory.mktemp("twelve")
    ids = write_dict(root, [{"key": f"s{i}", "pos": "n", "lemmas": ["w"]} for i in range(12)])
    return [ids[f"s{i}"] for i in range(12)], load_database(root)


@settings(max_examples=200)
@given(counts=st.lists(st.integers(0, 10**6), min_size=12, max_size=12), used=st.integers(1, 12))
def test_priors_sum_to_one(twelve_senses, counts, used):
    senses, index = twelve_senses
    # only the first ``used`` senses carry counts; the rest stay at zero
    table = SenseFrequencyTable.from_counts(dict(zip(senses[:used], counts)))
    priors = [sense_prior(s, "w", Pos.NOUN, table, index) for s in senses]
    assert abs(sum(priors) - 1.0) <= 1e-12
    full = counts[:used] + [0] * (12 - used)
    exact = [Fraction(c + 1, sum(full) + 12) for c in full]
    assert priors == pytest.approx([float(x) for x in exact], rel=1e-12)


def test_save_load_round_trip(tmp_path, mini):
    table = build_from_corpus("A gem is a stone. The jewel rolls.", mini)
    save_table(table, tmp_path / "t.sft")
    text = (tmp_path / "t.sft").read_text()
    assert text.splitlines()[0] == HEADER
    again = load_table(tmp_path / "t.sft")
    assert dict(again.counts) == dict(table.counts) and again.total == table.total


@pytest.mark.parametrize("body, message", [
    ("", "header"),
    ("wrong\n", "header"),
    (HEADER + "\nn:00000010\t1\nn:00000010\t2\n", ":3: duplicate"),
    (HEADER + "\nn:00000010\t-1\n", ":2: negative"),
    (HEADER + "\nn:00000010 1\n", ":2: bad row"),
    (HEADER + "\nq:00000010\t1\n", ":2: bad row"),
])
def test_load_errors(tmp_path, body, message):
    (tmp_path / "bad.sft").write_text(body)
    with pytest.raises(ValueError, match=message):
        load_table(tmp_path / "bad.sft")


# ---- genuine WordNet 3.0 ------------------------------------------------------

def test_gem_jewel_corpus(wn, syn):
    table = build_from_corpus("A gem is a jewel.", wn)
    assert dict(table.counts) == {syn("jewel.n.01"): 2}


def test_chemistry_golden(wn, tmp_path):
    with open(FIXTURES / "chemistry.txt", encoding="utf-8") as fh:
        table = build_from_corpus(fh, wn)
    save_table(table, tmp_path / "out.sft")
    assert (tmp_path / "out.sft").read_text() == (FIXTURES / "chemistry.sft").read_text()
    assert table.total == 53


def test_builtin_real(wn, syn):
    table = builtin_table(wn)
    assert table.total > 0
    assert table.count(syn("bank.n.01")) > 0
    # no tagged occurrences of this sense in the concordance
    assert table.count(syn("jewel.n.02")) == 0


def test_bank_domain_effect(wn, syn):
    corpus = "The river bank was muddy. Fish swam near the bank of the stream."
    table = build_from_corpus(corpus, wn)
    bank = synsets_for("bank", Pos.NOUN, wn)
    assert table.count(syn("bank.n.01")) == 2 and all(table.count(s) == 0 for s in bank[1:])
    prior = {s: sense_prior(s, "bank", Pos.NOUN, table, wn) for s in bank}
    assert all(prior[syn("bank.n.01")] > p for s, p in prior.items() if s != syn("bank.n.01"))


def test_rebuild_is_deterministic(wn):
    text = (FIXTURES / "chemistry.txt").read_text()
    assert build_from_corpus(text, wn).counts == build_from_corpus(text, wn).counts
