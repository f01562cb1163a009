"""Acceptance criteria, one test per criterion.

Each test is pinned to the stated tolerance (exact results, wall-clock
limits).  A per-criterion PASS/FAIL line is printed in the terminal summary.
"""
import math
import random
import statistics
import time

import pytest

from altcodes import ops, oracle
from altcodes.altinduced import ACCEPT, REJECT_Y, in_class, product_compose, rsic, subclass_characterize, verify_witness
from altcodes.bifix import complete_bifix_bounded, verify_bifix_container
from altcodes.codes import is_code
from altcodes.embed import embed_strong
from altcodes.errors import NotFoundWithinBound
from altcodes.language import Language
from altcodes.maximal import complete_prefix_finite, complete_prefix_regular, is_maximal_suffix
from altcodes.validation import class_flag_grid, rsic_grid, rsic_grid_instances, scaling_code, unambiguity_grid
from langs import AB, ABC, R, W, Z1, Z2_REGEX, Z3_REGEX

MEASURED: dict = {}


def criterion(number):
    def mark(fn):
        fn.criterion = number
        return pytest.mark.acceptance(fn)

    return mark


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@criterion(1)
def test_c01_rsic_four_word_code():
    """Z = {aab, aaba, baab, baaba}: StrongAltInduced, witness ({aa, baa}, {b, ba}), u=a rejected, u=aa accepted"""
    with Clock() as clock:
        res = rsic(W(*Z1))
    steps = [(s.u, s.outcome) for s in res.trace]
    MEASURED[1] = f"got witness ({res.x}, {res.y}), trace {steps}, {clock.seconds:.3f}s"
    assert clock.seconds < 1
    assert res.verdict == "StrongAltInduced"
    assert (res.x, res.y) == (W("aa", "baa"), W("b", "ba"))
    assert steps[0][0] == "a" and steps[0][1] != ACCEPT
    assert steps[1] == ("aa", ACCEPT)


@criterion(2)
def test_c02_rsic_rejects_anbb_code():
    """Z = a+bb + a+bbab: NotStrongAltInduced, both prefixes rejected by YY^-1 != {eps}"""
    with Clock() as clock:
        res = rsic(R(Z2_REGEX))
    steps = [(s.u, s.outcome) for s in res.trace]
    MEASURED[2] = f"trace {steps}, {clock.seconds:.3f}s"
    assert clock.seconds < 1
    assert res.verdict == "NotStrongAltInduced"
    assert steps == [("a", REJECT_Y), ("ab", REJECT_Y)]


@criterion(3)
def test_c03_rsic_bnaabma_code():
    """Z = b+aab+a: StrongAltInduced, witness (b+a, ab+a) by automaton equality, u=ba accepted"""
    with Clock() as clock:
        res = rsic(R(Z3_REGEX))
    steps = [(s.u, s.outcome) for s in res.trace]
    MEASURED[3] = f"trace {steps}, {clock.seconds:.3f}s"
    assert clock.seconds < 1
    assert res.verdict == "StrongAltInduced"
    assert res.x.dfa == R("bb*a").dfa and res.y.dfa == R("abb*a").dfa
    assert steps[-1] == ("ba", ACCEPT)


@criterion(4)
def test_c04_prefix_embedding():
    """(aa)*b completes to a*b; ab*ab sits in ba+bb+ab*a(a+b); embed_strong verifies the pair"""
    with Clock() as clock:
        completed = complete_prefix_regular(R("(aa)*b")).container
        container_ok = verify_bifix_container(R("ab*ab"), R("ba+bb+ab*a(a+b)"))
        res = embed_strong((R("(aa)*b"), R("ab*ab")), "prefix", (None, R("ba+bb+ab*a(a+b)")))
    MEASURED[4] = f"{clock.seconds:.3f}s"
    assert clock.seconds < 1
    assert completed == R("a*b")
    assert container_ok
    assert res.pair == (R("a*b"), R("ba+bb+ab*a(a+b)"))
    assert subclass_characterize(*res.pair).holds("maximal-prefix-SAI")


@criterion(5)
def test_c05_suffix_and_bifix_containers():
    """(b+ab*a, a+ab+bb) and (A, a+b+c(a+b)*c) verify as maximal suffix / bifix SAI containers"""
    with Clock() as clock:
        suffix = embed_strong((R("b+a(bb)*a"), R("a+ab")), "suffix", (R("b+ab*a"), R("a+ab+bb")))
        bifix = embed_strong(
            (R("a+c", ABC), R("c(a+b)*c", ABC)), "bifix", (R("a+b+c", ABC), R("a+b+c(a+b)*c", ABC))
        )
    MEASURED[5] = f"{clock.seconds:.3f}s"
    assert clock.seconds < 1
    assert subclass_characterize(*suffix.pair).holds("maximal-suffix-SAI")
    assert subclass_characterize(*bifix.pair).holds("maximal-bifix-SAI")
    assert ops.subset(R("(b+a(bb)*a)(a+ab)"), ops.concat(*suffix.pair))
    assert ops.subset(R("(a+c)c(a+b)*c", ABC), ops.concat(*bifix.pair))


@criterion(6)
def test_c06_finite_completions():
    """{a,ba} -> {a,ba,bb}; {a} -> {a,b}; {a}+ba*b contains {a,bb}; {a,bb} has no container for bounds <= 8"""
    with Clock() as clock:
        prefix = complete_prefix_finite(W("a", "ba"))
        single = complete_bifix_bounded(W("a"), 6)
        container_ok = verify_bifix_container(W("a", "bb"), R("a+ba*b"))
        failures = 0
        for bound in range(1, 9):
            try:
                complete_bifix_bounded(W("a", "bb"), bound)
            except NotFoundWithinBound:
                failures += 1
    MEASURED[6] = f"{clock.seconds:.3f}s"
    assert clock.seconds < 10
    assert prefix.container == W("a", "ba", "bb") and prefix.preserved_maxlen
    assert single.container == W("a", "b")
    assert container_ok
    assert failures == 8


@criterion(7)
def test_c07_finite_suffix_and_regular_bifix_containers():
    """{aa,ca,aba,bba,cba,b,c} is a maximal suffix container; a+ba*ba*b and b+ab*a are bifix containers"""
    with Clock() as clock:
        my = Language.from_words(ABC, ["aa", "ca", "aba", "bba", "cba", "b", "c"])
        y = Language.from_words(ABC, ["aa", "aba", "bba", "b", "c"])
        suffix_ok = ops.subset(y, my) and is_maximal_suffix(my)
        first = verify_bifix_container(R("a+bbb"), R("a+ba*ba*b"))
        second = verify_bifix_container(R("b+aa"), R("b+ab*a"))
    MEASURED[7] = f"{clock.seconds:.3f}s"
    assert clock.seconds < 1
    assert suffix_ok and my.is_finite
    assert first and second


@criterion(8)
def test_c08_rsic_completeness_grid():
    """RSIC matches exhaustive decomposition search on every code Z = XY, |X|,|Y| <= 3, length <= 3"""
    with Clock() as clock:
        tally = rsic_grid(AB, max_size=3, max_len=3)
    MEASURED[8] = f"{tally.instances} instances, {len(tally.disagreements)} disagreements, {clock.seconds:.1f}s"
    assert tally.instances >= 5000
    assert tally.disagreements == []
    assert clock.seconds < 300


@criterion(9)
def test_c09_derived_criteria_grids():
    """Unambiguity, quotient prefix/suffix tests and infix constructions match oracles on >= 10^4 instances"""
    with Clock() as clock:
        flags = class_flag_grid(AB, max_size=4, max_len=4)
        product = unambiguity_grid(AB, max_size=4, max_len=3, limit=10_000)
    tallies = flags + [product]
    MEASURED[9] = (
        f"{min(t.instances for t in tallies)}+ instances per check, "
        f"{sum(len(t.disagreements) for t in tallies)} disagreements, {clock.seconds:.1f}s"
    )
    for t in tallies:
        assert t.instances >= 10_000, t.name
        assert t.disagreements == [], t.as_dict()
    assert clock.seconds < 600


@criterion(10)
def test_c10_complexity_smoke():
    """RSIC on codes with 25/50/100/200-state minimal automata: each < 30 s, low-order polynomial growth"""
    sizes, seconds = [], []
    for m in (25, 50, 100, 200):
        z, _ = scaling_code(m)
        assert z.size == m
        with Clock() as clock:
            res = rsic(z)
        assert res.strong
        assert clock.seconds < 30
        sizes.append(m)
        seconds.append(clock.seconds)
    slope, _ = statistics.linear_regression([math.log(m) for m in sizes], [math.log(s) for s in seconds])
    MEASURED[10] = ", ".join(f"m={m}: {s:.3f}s" for m, s in zip(sizes, seconds)) + f"; fitted exponent {slope:.2f}"
    assert slope <= 4


@criterion(11)
def test_c11_product_closure():
    """product_compose on 100 random pairs of prefix-SAI grid witnesses: all verify and stay prefix"""
    with Clock() as clock:
        rng = random.Random(20261015)
        instances = rsic_grid_instances(AB, 3, 3)
        witnesses = []
        for z in rng.sample(instances, len(instances)):
            res = rsic(Language.from_words(AB, z), check_code=False)
            if res.strong and subclass_characterize(res.x, res.y).holds("prefix-SAI"):
                witnesses.append(res.witness)
            if len(witnesses) == 60:
                break
        failures = 0
        for _ in range(100):
            first, second = rng.choice(witnesses), rng.choice(witnesses)
            nx, ny = product_compose(first, second, "prefix")
            zz = ops.concat(ops.concat(*first), ops.concat(*second))
            if not (verify_witness(nx, ny, zz).valid and in_class(zz, "prefix")):
                failures += 1
    MEASURED[11] = f"100 compositions, {failures} failures, {clock.seconds:.1f}s"
    assert failures == 0
    assert clock.seconds < 60


def test_grid_witnesses_are_codes():
    # guard for criterion 8: the filter used to build the grid agrees with the automaton test
    sample = rsic_grid_instances(AB, 2, 2)
    assert all(is_code(Language.from_words(AB, z)).code for z in sample[:: max(1, len(sample) // 200)])
    assert oracle.brute_is_code(sample[0], 10).code
