from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simdiff.errors import (DictError, DictFileNotFoundError, DictParseError,
                            DictTooSmallError, EmptyCorpusError)
from simdiff.freqdict import (Composition, FrequencyDictionary, baseline_freq,
                              build_dictionary, count_corpus, count_text,
                              load_dictionary)
from simdiff.pipeline import lemma_of_word


class TestLoad:
    def test_normalization(self, make_dict_file):
        path = make_dict_file({"the": 50, "dog": 10}, filler=1000)
        d = load_dictionary(path)
        total = 50 + 10 + 1000
        assert d.unigram_freq["the"] == pytest.approx(50 / total)
        assert d.unigram_freq["dog"] == pytest.approx(10 / total)
        assert sum(d.unigram_freq.values()) == pytest.approx(1.0, abs=1e-6)

    def test_duplicates_merge_by_lemma(self, make_dict_file):
        path = make_dict_file({"run": 5, "running": 3}, filler=1000)
        d = load_dictionary(path)
        # recompute with the same lemmatizer
        expected = Counter()
        for tok, c in {"run": 5, "running": 3}.items():
            expected[lemma_of_word(tok)] += c
        assert expected == {"run": 8}
        assert d.unigram_freq["run"] == pytest.approx(8 / 1008)
        assert "running" not in d.unigram_freq

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_dictionary(tmp_path / "nope.tsv")
        with pytest.raises(DictFileNotFoundError):
            load_dictionary(tmp_path / "nope.tsv")

    def test_too_small(self, make_dict_file):
        with pytest.raises(DictTooSmallError):
            load_dictionary(make_dict_file({"a": 1}, filler=998))
        load_dictionary(make_dict_file({"a": 1}, filler=999))

    @pytest.mark.parametrize("bad, lineno", [("dog 10", 3), ("dog\tten", 3), ("dog\t-1", 3),
                                             ("\t4", 3), ("a\tb\tc", 3)])
    def test_parse_errors_report_line(self, tmp_path, bad, lineno):
        p = tmp_path / "d.tsv"
        p.write_text("# header\nthe\t5\n" + bad + "\n", encoding="utf-8")
        with pytest.raises(DictParseError) as info:
            load_dictionary(p)
        assert info.value.lineno == lineno

    def test_epsilon_must_not_exceed_min(self, make_dict_file):
        path = make_dict_file({"the": 50})
        with pytest.raises(DictError):
            load_dictionary(path, epsilon_floor=0.5)
        with pytest.raises(DictError):
            load_dictionary(path, epsilon_floor=0)

    def test_bundled_default(self, english):
        assert len(english.unigram_freq) > 1000
        assert all(0 < f < 1 for f in english.unigram_freq.values())
        assert sum(english.unigram_freq.values()) <= 1 + 1e-6
        assert english.epsilon_floor <= min(english.unigram_freq.values())
        assert english.unigram("the") > 100 * english.unigram("relativity")
        assert english.describe()["sha256"]


class TestBaseline:
    @pytest.fixture
    def d(self):
        return FrequencyDictionary({"the": 0.05, "black": 1e-4, "hole": 2e-5}, epsilon_floor=1e-9)

    def test_lookup(self, d):
        assert baseline_freq(("the",), d) == 0.05

    def test_oov(self, d):
        assert baseline_freq(("xqzt",), d) == 1e-9

    def test_product(self, d):
        assert baseline_freq(("black", "hole"), d) == pytest.approx(2e-9, rel=1e-12)

    def test_min(self, d):
        dm = FrequencyDictionary(d.unigram_freq, 1e-9, Composition.MIN)
        assert baseline_freq(("black", "hole"), dm) == 2e-5
        assert baseline_freq(("black", "xqzt"), dm) == 1e-9

    def test_composition_aliases(self):
        assert Composition.parse("independence_product") is Composition.PRODUCT
        assert Composition.parse("min_unigram") is Composition.MIN

    @settings(max_examples=300)
    @given(st.lists(st.sampled_from(["the", "black", "hole", "zz", "qq"]), min_size=1, max_size=3),
           st.sampled_from(list(Composition)))
    def test_positive_and_bounded(self, gram, comp):
        d = FrequencyDictionary({"the": 0.05, "black": 1e-4, "hole": 2e-5}, 1e-9, comp)
        fe = baseline_freq(tuple(gram), d)
        assert fe > 0
        if comp is Composition.PRODUCT:
            assert fe <= min(d.unigram(w) for w in gram)


class TestBuild:
    def test_single_file(self, tmp_path):
        corpus = tmp_path / "c"
        corpus.mkdir()
        (corpus / "one.txt").write_text("a a b", encoding="utf-8")
        counts = build_dictionary(corpus, tmp_path / "out.tsv")
        assert counts == {"a": 2, "b": 1}
        lines = (tmp_path / "out.tsv").read_text(encoding="utf-8").splitlines()
        assert lines[1:] == ["a\t2", "b\t1"]

    def test_empty_dir(self, tmp_path):
        (tmp_path / "empty").mkdir()
        with pytest.raises(EmptyCorpusError):
            build_dictionary(tmp_path / "empty", tmp_path / "out.tsv")
        assert not (tmp_path / "out.tsv").exists()

    def test_sum_of_files(self, tmp_path):
        corpus = tmp_path / "c"
        corpus.mkdir()
        texts = ["The black holes evaporate.", "A black hole is dark. Holes!",
                 "Running, the runner runs."]
        for i, t in enumerate(texts):
            (corpus / f"f{i}.txt").write_text(t, encoding="utf-8")
        expected = Counter()
        for t in texts:
            expected += count_text(t)
        assert count_corpus(corpus) == expected
        assert expected["hole"] == 3 and expected["run"] >= 2

    def test_round_trip_proportional(self, tmp_path):
        corpus = tmp_path / "c"
        corpus.mkdir()
        words = [f"word{i}" for i in range(1200)]
        text = " ".join(w for i, w in enumerate(words) for _ in range(1 + i % 7))
        (corpus / "big.txt").write_text(text, encoding="utf-8")
        counts = build_dictionary(corpus, tmp_path / "d.tsv")
        d = load_dictionary(tmp_path / "d.tsv")
        total = sum(counts.values())
        for w in ("word0", "word5", "word1199"):
            assert d.unigram_freq[w] == pytest.approx(counts[w] / total, rel=1e-12)

    def test_rebuild_is_byte_identical(self, tmp_path):
        corpus = tmp_path / "c"
        corpus.mkdir()
        (corpus / "x.txt").write_text("b a c a b a", encoding="utf-8")
        build_dictionary(corpus, tmp_path / "1.tsv")
        build_dictionary(corpus, tmp_path / "2.tsv")
        assert (tmp_path / "1.tsv").read_bytes() == (tmp_path / "2.tsv").read_bytes()
