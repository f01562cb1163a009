import pytest

from altcodes import ops
from altcodes.embed import embed_strong
from altcodes.errors import ClassViolation, NotFoundWithinBound
from altcodes.maximal import BOUNDED_SEARCH, FIXPOINT, TREE_FILL, VERIFIED_CANDIDATE
from langs import ABC, R, W


def test_prefix_class_with_candidate():
    res = embed_strong((R("(aa)*b"), R("ab*ab")), "prefix", (None, R("ba+bb+ab*a(a+b)")))
    assert res.pair == (R("a*b"), R("ba+bb+ab*a(a+b)"))
    assert res.y.method == VERIFIED_CANDIDATE


def test_suffix_class_with_candidates():
    res = embed_strong((R("b+a(bb)*a"), R("a+ab")), "suffix", (R("b+ab*a"), R("a+ab+bb")))
    assert res.pair == (R("b+ab*a"), R("a+ab+bb"))


def test_bifix_class_with_candidates():
    res = embed_strong(
        (R("a+c", ABC), R("c(a+b)*c", ABC)), "bifix", (R("a+b+c", ABC), R("a+b+c(a+b)*c", ABC))
    )
    assert res.pair == (R("a+b+c", ABC), R("a+b+c(a+b)*c", ABC))


def test_finite_witness_uses_tree_fill_and_bounded_search():
    res = embed_strong((W("a", "ba"), W("a")), "prefix")
    assert res.x.container == W("a", "ba", "bb") and res.x.method == TREE_FILL
    assert res.y.container == W("a", "b") and res.y.method == BOUNDED_SEARCH


def test_maximal_bifix_side_is_a_fixpoint():
    res = embed_strong((R("(aa)*b"), R("b+ab*a")), "prefix")
    assert res.y.method == FIXPOINT and res.y.container == R("b+ab*a")


def test_finite_code_with_infinite_container():
    # {a, bb} has no finite maximal bifix container; the regular candidate a + ba*b works
    with pytest.raises(NotFoundWithinBound):
        embed_strong((W("a", "ba"), W("a", "bb")), "prefix", bound=6)
    res = embed_strong((W("a", "ba"), W("a", "bb")), "prefix", (None, R("a+ba*b")))
    assert res.pair == (W("a", "ba", "bb"), R("a+ba*b"))
    assert ops.subset(ops.concat(W("a", "ba"), W("a", "bb")), ops.concat(*res.pair))


def test_wrong_class_is_rejected():
    with pytest.raises(ClassViolation):
        embed_strong((R("(aa)*b"), R("ab*ab")), "suffix")


def test_bad_candidate_is_rejected():
    with pytest.raises(ClassViolation):
        embed_strong((R("(aa)*b"), R("ab*ab")), "prefix", (R("(aa)*b"), None))
    with pytest.raises(ClassViolation):
        embed_strong((R("(aa)*b"), R("ab*ab")), "prefix", (None, R("ab*ab+b")))


def test_infinite_bifix_side_without_candidate():
    with pytest.raises(NotFoundWithinBound):
        embed_strong((R("(aa)*b"), R("ab*ab")), "prefix")
