from altcodes import validation
from langs import AB


def test_finite_is_code():
    assert validation.finite_is_code({"aab", "aaba", "baab", "baaba"})
    assert not validation.finite_is_code({"a", "ab", "ba"})
    assert validation.finite_is_code({"a", "ab"})


def test_grid_sizes():
    assert len(validation.grid_words(AB, 3)) == 14
    assert len(list(validation.grid_sets(validation.grid_words(AB, 3), 4))) == 1470


def test_small_grids_agree():
    tallies = [validation.rsic_grid(AB, 2, 2), validation.code_grid(AB, 3, 3)]
    tallies += validation.class_flag_grid(AB, 3, 3)
    tallies.append(validation.unambiguity_grid(AB, 2, 2, limit=2000))
    for t in tallies:
        assert t.instances > 0 and t.ok, t.as_dict()


def test_spread_is_deterministic_and_bounded():
    items = list(range(1000))
    picked = validation._spread(items, 10)
    assert picked == validation._spread(items, 10)
    assert len(picked) == 10 and picked[0] == 0
    assert validation._spread(items, None) == items


def test_scaling_code_hits_requested_size():
    for m in (12, 25, 40):
        lang, params = validation.scaling_code(m)
        assert lang.size == m and params["r"] == m // 4
