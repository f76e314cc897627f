
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simdiff.errors import OrderError, WeightDomainError
from simdiff.freqdict import FrequencyDictionary
from simdiff.ngrams import NGramFlags, NGramTable
from simdiff.weighting import (SchemeKind, WeightScheme, base_multiplier,
                               score_common, weight_basic, weight_final,
                               weight_log, weight_threshold)

from oracles import exact_basic, exact_final, precise_log, precise_threshold

freq = st.floats(min_value=1e-7, max_value=0.5, allow_nan=False)


class TestBasic:
    def test_zero_difference(self):
        assert weight_basic(0.01, 0.01, 0.01) == 0.0

    def test_value(self):
        expected = float(exact_basic(0.01, 0.02, 0.001))  # 2.9241e-8
        assert weight_basic(0.01, 0.02, 0.001) == pytest.approx(expected, rel=1e-9)

    def test_symmetric(self):
        assert weight_basic(0.01, 0.02, 0.001) == weight_basic(0.02, 0.01, 0.001)

    @pytest.mark.parametrize("args", [(0, 0.1, 0.1), (0.1, 1.5, 0.1), (0.1, 0.1, -1e-3),
                                      (float("nan"), 0.1, 0.1)])
    def test_domain(self, args):
        with pytest.raises(WeightDomainError):
            weight_basic(*args)


class TestLog:
    def test_log_of_one(self):
        assert weight_log(0.003, 0.003, 0.003) == 0.0

    def test_value(self):
        expected = float(precise_log(0.01, 0.01, 0.001))
        assert weight_log(0.01, 0.01, 0.001) == pytest.approx(expected, rel=1e-9)
        assert weight_log(0.01, 0.01, 0.001) == pytest.approx(0.04605, abs=1e-5)

    def test_clamp(self):
        fe = 0.01
        assert weight_log(fe / 2, fe / 2, fe, clamp=False) < 0
        assert weight_log(fe / 2, fe / 2, fe) == 0.0

    @settings(max_examples=300)
    @given(freq, freq, freq)
    def test_matches_oracle(self, f1, f2, fe):
        expected = max(float(precise_log(f1, f2, fe)), 0.0)
        assert weight_log(f1, f2, fe) == pytest.approx(expected, rel=1e-9, abs=1e-15)


class TestThreshold:
    def test_zeroing(self):
        assert weight_threshold(0.01, 0.02, 0.05) == 0.0

    def test_value(self):
        expected = float(precise_threshold(0.004, 0.003, 0.001))
        got = weight_threshold(0.004, 0.003, 0.001)
        assert got == pytest.approx(expected, rel=1e-9)
        assert got == pytest.approx(0.003882, abs=1e-6)

    def test_boundary_is_strict(self):
        assert weight_threshold(0.02, 0.01, 0.01) > 0

    def test_not_symmetric(self):
        assert weight_threshold(0.3, 0.1, 0.01) != pytest.approx(weight_threshold(0.1, 0.3, 0.01))

    @settings(max_examples=300)
    @given(freq, freq, freq)
    def test_matches_oracle(self, f1, f2, fe):
        expected = float(precise_threshold(f1, f2, fe))
        assert weight_threshold(f1, f2, fe) == pytest.approx(expected, rel=1e-9, abs=0)


class TestFinal:
    def test_full_boost(self):
        assert base_multiplier(True, True) == 1.5
        assert base_multiplier(True, False) == base_multiplier(False, True) == 1.25
        assert base_multiplier(False, False) == 1.0

    def test_zero_difference(self):
        assert weight_final(0.02, 0.02, 0.02, True, True) == 0.0

    def test_value(self):
        expected = float(exact_final(0.01, 0.02, 0.001, False, False, 10**6))
        assert expected == 442.0
        assert weight_final(0.01, 0.02, 0.001, nf=1e6) == pytest.approx(expected, rel=1e-9)

    def test_presence_override(self):
        assert weight_final(0.02, 0.02, 0.01, True, True, nf=1, entity_presence=1,
                            chunk_presence=1) == pytest.approx(2 * weight_final(0.02, 0.02, 0.01, nf=1))

    def test_bad_nf(self):
        with pytest.raises(WeightDomainError):
            weight_final(0.1, 0.1, 0.01, nf=0)
        with pytest.raises(WeightDomainError):
            WeightScheme("final", nf=-1)

    @settings(max_examples=300)
    @given(freq, freq, freq, st.booleans(), st.booleans(),
           st.floats(min_value=1e-3, max_value=1e9))
    def test_matches_oracle(self, f1, f2, fe, e, c, nf):
        expected = float(exact_final(f1, f2, fe, e, c, nf))
        assert weight_final(f1, f2, fe, e, c, nf) == pytest.approx(expected, rel=1e-9, abs=1e-300)


def _table(doc, counts, flags=None, n=1):
    return NGramTable(doc, n, counts, flags or {})


@pytest.fixture
def small_dict():
    return FrequencyDictionary({"a": 0.01, "b": 0.002, "c": 0.0005, "d": 0.3}, epsilon_floor=1e-6)


class TestScoreCommon:
    def test_empty(self, small_dict):
        t1 = _table("x", {("a",): 1})
        t2 = _table("y", {("b",): 1})
        assert score_common(t1, t2, small_dict, WeightScheme("log")) == []

    def test_single(self, small_dict):
        t1 = _table("x", {("a",): 2, ("b",): 2})
        t2 = _table("y", {("a",): 1, ("c",): 3})
        [w] = score_common(t1, t2, small_dict, WeightScheme("basic"))
        assert w.gram == ("a",)
        assert (w.f1, w.f2, w.fe) == (0.5, 0.25, 0.01)
        assert w.weight == weight_basic(0.5, 0.25, 0.01)

    def test_flags_are_ored(self, small_dict):
        t1 = _table("x", {("a",): 1}, {("a",): NGramFlags(True, False)})
        t2 = _table("y", {("a",): 1}, {("a",): NGramFlags(False, True)})
        [w] = score_common(t1, t2, small_dict, WeightScheme("final", nf=1))
        assert w.is_entity and w.is_noun_chunk
        assert w.weight == pytest.approx(1.5 * ((1 - 0.01) ** 2) * 2)

    @pytest.mark.parametrize("kind", list(SchemeKind))
    def test_ordering_matches_recompute(self, small_dict, kind):
        t1 = _table("x", {("a",): 3, ("b",): 5, ("c",): 2, ("d",): 1, ("z",): 9})
        t2 = _table("y", {("a",): 1, ("b",): 1, ("c",): 4, ("d",): 2})
        scheme = WeightScheme(kind)
        got = score_common(t1, t2, small_dict, scheme)
        recomputed = []
        for g in ["a", "b", "c", "d"]:
            f1 = t1.counts[(g,)] / 20
            f2 = t2.counts[(g,)] / 8
            fe = small_dict.unigram_freq[g]
            recomputed.append((-scheme.score(f1, f2, fe), (g,)))
        assert [w.gram for w in got] == [g for _, g in sorted(recomputed)]

    def test_ties_lexicographic(self, small_dict):
        t1 = _table("x", {("b",): 1, ("a",): 1})
        t2 = _table("y", {("a",): 1, ("b",): 1})
        d = FrequencyDictionary({"a": 0.01, "b": 0.01})
        assert [w.gram for w in score_common(t1, t2, d, WeightScheme("log"))] == [("a",), ("b",)]

    def test_order_mismatch(self, small_dict):
        with pytest.raises(OrderError):
            score_common(_table("x", {}, n=1), _table("y", {}, n=2), small_dict, WeightScheme())
