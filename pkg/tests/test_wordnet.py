import random
import shutil

import pytest

from semgraph.wordnet import (
    MalformedRecordError,
    Pos,
    SynsetId,
    WordNetError,
    inverse_symbol,
    load_database,
    normalize_lemma,
    synsets_for,
)

from conftest import FIXTURES
from wnfixture import MINI, write_dict


def test_mini_counts(mini):
    assert mini.synset_count() == 6
    assert mini.synset_count(include_virtual=True) == 8
    assert set(mini.loaded_pos) == {Pos.NOUN, Pos.VERB}


def test_header_lines_skipped_and_offsets_real(mini):
    raw = (FIXTURES / "mini_dict" / "data.noun").read_bytes()
    for sid in mini.synsets:
        if sid.pos is Pos.NOUN and not mini.is_virtual_root(sid):
            assert raw[sid.offset:sid.offset + 8].decode() == f"{sid.offset:08d}"


def test_lemmas_glosses_and_sense_order(mini):
    stone = synsets_for("stone", Pos.NOUN, mini)
    assert [mini.synset(s).gloss for s in stone] == ["a piece of rock", "a small stone"]
    assert mini.synset(stone[0]).lemmas == ("stone", "rock")
    assert synsets_for("Stone", Pos.NOUN, mini) == stone
    assert synsets_for("stone", Pos.VERB, mini) == []
    assert synsets_for("qzxv", Pos.NOUN, mini) == []


def test_names_round_trip(mini):
    for sid in mini.synsets:
        assert mini.lookup(mini.name_of(sid)) == sid
    assert mini.name_of(mini.lookup("stone.n.02")) == "pebble.n.01"
    with pytest.raises(KeyError):
        mini.lookup("stone.n.03")
    with pytest.raises(KeyError):
        mini.lookup("nonsense")


def test_synset_id_text_form():
    sid = SynsetId(Pos.NOUN, 9411430)
    assert str(sid) == "n:09411430"
    assert SynsetId.parse("n:09411430") == sid
    assert SynsetId.parse("s:00001740").pos is Pos.ADJECTIVE


def test_tag_counts(mini):
    stone = synsets_for("stone", Pos.NOUN, mini)
    assert [mini.synset(s).tag_count for s in stone] == [3, 1]
    assert mini.lemma_tag_counts[("stone", Pos.NOUN)] == 4
    assert mini.lemma_tag_counts.get(("gem", Pos.NOUN), 0) == 0


def test_virtual_roots(mini):
    vroot = mini.virtual_roots[Pos.NOUN]
    assert vroot.offset == 0
    thing = mini.lookup("thing.n.01")
    assert mini.hypernyms(thing) == (vroot,)
    assert mini.hyponyms(vroot) == [thing]
    assert mini.hypernyms(vroot) == ()


def test_pointer_symmetry_mini(mini):
    for sid, syn in mini.synsets.items():
        if mini.is_virtual_root(sid):
            continue
        for symbol, target in syn.pointers:
            back = inverse_symbol(symbol)
            assert (back, sid) in mini.synset(target).pointers


def test_normalize_lemma():
    assert normalize_lemma("  Motor  Vehicle ") == "motor_vehicle"


def test_missing_directory(tmp_path):
    with pytest.raises(WordNetError, match="not found"):
        load_database(tmp_path / "absent")


def test_missing_noun_files(tmp_path):
    with pytest.raises(WordNetError, match="index.noun"):
        load_database(tmp_path)


def test_half_present_pos(tmp_path):
    shutil.copytree(FIXTURES / "mini_dict", tmp_path / "d")
    (tmp_path / "d" / "data.verb").unlink()
    with pytest.raises(WordNetError, match="data.verb"):
        load_database(tmp_path / "d")


def test_verb_files_optional(tmp_path):
    shutil.copytree(FIXTURES / "mini_dict", tmp_path / "d")
    (tmp_path / "d" / "data.verb").unlink()
    (tmp_path / "d" / "index.verb").unlink()
    index = load_database(tmp_path / "d")
    assert index.loaded_pos == (Pos.NOUN,)
    assert synsets_for("move", Pos.VERB, index) == []


def test_offset_mismatch_reports_byte_offset(tmp_path):
    shutil.copytree(FIXTURES / "mini_dict", tmp_path / "d")
    path = tmp_path / "d" / "data.noun"
    text = path.read_text()
    first = text.index("\n") + 1
    path.write_text(text[:first] + "x" + text[first:])
    with pytest.raises(MalformedRecordError) as err:
        load_database(tmp_path / "d")
    assert err.value.byte_offset == first
    assert "data.noun" in err.value.path


def test_offset_check_can_be_disabled(tmp_path):
    shutil.copytree(FIXTURES / "mini_dict", tmp_path / "d")
    path = tmp_path / "d" / "data.verb"
    text = path.read_text()
    # pad the header so every record shifts while pointers keep their old values
    path.write_text(text.replace("distribution.", "distribution. ", 1))
    with pytest.raises(MalformedRecordError):
        load_database(tmp_path / "d")
    index = load_database(tmp_path / "d", check_offsets=False)
    assert len(synsets_for("move", Pos.VERB, index)) == 2


def test_missing_gloss_separator(tmp_path):
    shutil.copytree(FIXTURES / "mini_dict", tmp_path / "d")
    path = tmp_path / "d" / "data.verb"
    path.write_text(path.read_text().replace("| change position", " change position"))
    with pytest.raises(MalformedRecordError, match="gloss"):
        load_database(tmp_path / "d")


def test_dangling_pointer(tmp_path):
    nodes = [dict(n) for n in MINI]
    write_dict(tmp_path / "d", nodes)
    path = tmp_path / "d" / "data.noun"
    lines = path.read_text().splitlines(keepends=True)
    # retarget the gem -> stone hypernym at an offset that holds no synset (same width)
    lines[3] = lines[3].replace("@ 00000124", "@ 00000125")
    path.write_text("".join(lines))
    with pytest.raises(WordNetError, match="dangling"):
        load_database(tmp_path / "d")


def test_index_points_to_unknown_synset(tmp_path):
    shutil.copytree(FIXTURES / "mini_dict", tmp_path / "d")
    path = tmp_path / "d" / "index.noun"
    path.write_text(path.read_text().replace("gem n 1 1 @ 1 0 00000234", "gem n 1 1 @ 1 0 00000235"))
    with pytest.raises(WordNetError, match="unknown synset"):
        load_database(tmp_path / "d")


def test_record_at_offset_zero_rejected(tmp_path):
    shutil.copytree(FIXTURES / "mini_dict", tmp_path / "d")
    path = tmp_path / "d" / "data.noun"
    text = path.read_text()
    path.write_text(text[text.index("\n") + 1:])
    with pytest.raises(MalformedRecordError):
        load_database(tmp_path / "d")


def test_hypernym_cycle_is_attached_to_root(tmp_path):
    nodes = [
        {"key": "top", "pos": "v", "lemmas": ["act"]},
        {"key": "a", "pos": "v", "lemmas": ["restrain"], "hypernyms": ["b"]},
        {"key": "b", "pos": "v", "lemmas": ["inhibit"], "hypernyms": ["a"]},
        {"key": "c", "pos": "v", "lemmas": ["curb"], "hypernyms": ["b"]},
        {"key": "noun", "pos": "n", "lemmas": ["thing"]},
    ]
    ids = write_dict(tmp_path / "d", nodes)
    index = load_database(tmp_path / "d")
    from semgraph.taxonomy import depth, shortest_path
    vroot = index.virtual_roots[Pos.VERB]
    assert vroot in index.hypernyms(ids["a"])
    assert depth(ids["a"], index) == 1 and depth(ids["b"], index) == 2 and depth(ids["c"], index) == 3
    assert shortest_path(ids["c"], ids["top"], index).subsumer == vroot


# ---- genuine WordNet 3.0 ------------------------------------------------------

def test_full_synset_count(wn):
    assert 115000 <= wn.synset_count() <= 120000


def test_full_pointer_symmetry_sample(wn):
    rng = random.Random(1234)
    ids = sorted((s for s in wn.synsets if not wn.is_virtual_root(s)), key=SynsetId.sort_key)
    for sid in rng.sample(ids, 1000):
        for symbol, target in wn.synset(sid).pointers:
            back = inverse_symbol(symbol)
            if back is not None:
                assert (back, sid) in wn.synset(target).pointers, (sid, symbol, target)


def test_full_known_synsets(wn):
    assert wn.synset("river.n.01").gloss.startswith("a large natural stream of water")
    assert wn.synset("bank.n.01").gloss.startswith("sloping land")
    assert wn.name_of(wn.lookup("bank.n.09")) == "bank.n.09"
    assert wn.synset("bank.n.09").gloss.startswith("a building in which the business of banking transacted")
    assert [wn.name_of(s) for s in synsets_for("gem", Pos.NOUN, wn)][-1] == "jewel.n.01"
