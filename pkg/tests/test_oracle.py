import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altcodes import oracle
from altcodes.errors import NotFinite, TooLarge
from langs import R, W, Z1, Z2_REGEX

small_codes = st.frozensets(st.text(alphabet="ab", min_size=1, max_size=3), min_size=1, max_size=4)


def test_factorizations():
    assert len(oracle.brute_factorizations({"a", "ab", "ba"}, "aba")) == 2
    assert oracle.brute_factorizations({"a"}, "aaa").factorizations == (("a", "a", "a"),)
    assert len(oracle.brute_factorizations({"ab"}, "a")) == 0


def test_oracles_reject_infinite_languages():
    with pytest.raises(NotFinite):
        oracle.brute_factorizations(R("a*b"), "ab")


def test_brute_is_code():
    verdict = oracle.brute_is_code({"a", "ab", "ba"}, 3)
    assert not verdict.code and verdict.witness == "aba"
    assert oracle.brute_is_code(set(Z1), 12).code
    assert oracle.brute_is_code({"b"}, 5).code


@given(small_codes, st.text(alphabet="ab", max_size=7))
def test_code_oracle_consistent_with_factorizations(words, w):
    verdict = oracle.brute_is_code(words, 7)
    if verdict.code:
        assert len(oracle.brute_factorizations(words, w)) <= 1
    else:
        assert len(oracle.brute_factorizations(words, verdict.witness)) >= 2


def test_alt_factorizations():
    rep = oracle.brute_alt_factorizations({"a"}, {"b"}, "abab")
    assert [tuple(p for p, _ in f) for f in rep.factorizations] == [("a", "b", "a", "b")]
    assert not rep.has_similar_pair
    rep = oracle.brute_alt_factorizations({"a", "ab"}, {"b", "bb"}, "abb")
    assert rep.similar[("X", "Y")]
    assert not oracle.brute_alt_factorizations({"ab"}, {"ba"}, "ab").factorizations


def test_sai_decompositions():
    assert (frozenset({"aa", "baa"}), frozenset({"b", "ba"})) in oracle.brute_sai_decompositions(Z1)
    assert (frozenset({"a"}), frozenset({"b"})) in oracle.brute_sai_decompositions({"ab"})


def test_sai_decompositions_on_a_slice():
    # n <= 2 slice of {a^n b^2, a^n b^2 ab}; the slice itself splits as {a, aa}·{bb, bbab}
    slice_ = {"abb", "aabb", "abbab", "aabbab"}
    found = oracle.brute_sai_decompositions(slice_)
    assert (frozenset({"a", "aa"}), frozenset({"bb", "bbab"})) not in found  # {a, aa} is not prefix
    for xs, ys in found:
        assert {u + v for u in xs for v in ys} == slice_


def test_sai_decompositions_size_limit():
    big = {"a" * i + "b" for i in range(1, 20)}
    with pytest.raises(TooLarge):
        oracle.brute_sai_decompositions(big)


def _naive_sai(z):
    """Every subset pair, no pruning at all."""
    pref = sorted({w[:i] for w in z for i in range(1, len(w))})
    suff = sorted({w[i:] for w in z for i in range(1, len(w))})
    out = set()
    for r in range(1, len(pref) + 1):
        for xs in itertools.combinations(pref, r):
            if any(u != v and v.startswith(u) for u in xs for v in xs):
                continue
            for s in range(1, len(suff) + 1):
                for ys in itertools.combinations(suff, s):
                    if any(u != v and v.endswith(u) for u in ys for v in ys):
                        continue
                    if {u + v for u in xs for v in ys} == set(z):
                        out.add((frozenset(xs), frozenset(ys)))
    return out


@given(st.frozensets(st.text(alphabet="ab", min_size=2, max_size=3), min_size=1, max_size=3))
def test_sai_decompositions_match_naive_search(z):
    assert set(oracle.brute_sai_decompositions(z)) == _naive_sai(z)


def test_maximality_oracle():
    assert oracle.brute_maximality(W("a", "ba"), "prefix", 2) == ["bb"]
    assert oracle.brute_maximality(W("a", "b"), "prefix", 4) == []


def test_bifix_maximality_oracle_under_approximates():
    addable = oracle.brute_maximality(W("a", "bb"), "bifix", 4)
    assert "bab" in addable
    assert not any(w.startswith("b") and set(w[1:]) <= {"a"} for w in addable)  # nothing from ba*


def test_slice_of_anbb_code():
    assert oracle.finite_words(W("abb", "aabb")) == {"abb", "aabb"}
    assert not R(Z2_REGEX).is_finite
