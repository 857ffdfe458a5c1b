import pytest

from nsgps import classify, core, enumeration
from nsgps.errors import ResourceLimit

CENSUS_20 = [1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693,
             2857, 4806, 8045, 13467, 22464, 37396]


def test_census_up_to_genus_20():
    assert enumeration.count_by_genus(20) == CENSUS_20


def test_with_genus_matches_counts():
    for g in range(1, 9):
        got = enumeration.with_genus(g)
        assert len(got) == CENSUS_20[g - 1]
        for S in got:
            assert core.genus(S) == g


def test_with_genus_zero():
    got = enumeration.with_genus(0)
    assert len(got) == 1 and got[0].generators == (1,)


def test_with_frobenius_16():
    got = enumeration.with_frobenius(16)
    assert len(got) == 205
    for S in got:
        assert S.frobenius == 16
    type2 = [S for S in got if core.type_of(S) == 2]
    assert len(type2) == 14
    ps = [S for S in got if classify.is_pseudo_symmetric(S)]
    assert len(ps) == 7
    diff = [list(S.generators) for S in type2 if not classify.is_pseudo_symmetric(S)]
    assert sorted(diff) == [[3, 14, 19], [3, 17, 19], [5, 7, 18],
                            [5, 9, 12], [6, 7, 11], [6, 9, 11, 13],
                            [7, 10, 11, 12, 13]]


def test_with_frobenius_conventions():
    got = enumeration.with_frobenius(-1)
    assert len(got) == 1 and got[0].generators == (1,)
    assert enumeration.with_frobenius(0) == []
    got = enumeration.with_frobenius(1)
    assert [list(S.generators) for S in got] == [[2, 3]]


def test_frobenius_vs_genus_tree():
    # both enumerations describe the same universe of semigroups
    by_f = {}
    for F in range(-1, 13):
        for S in enumeration.with_frobenius(F):
            by_f[S.generators] = S
    by_g = {}
    for g in range(0, 13):
        for S in enumeration.with_genus(g):
            if S.frobenius <= 12:
                by_g[S.generators] = S
    assert set(by_f) == set(by_g)


def test_irreducible_with_frobenius():
    for F in range(1, 17):
        got = enumeration.irreducible_with_frobenius(F)
        want = [S for S in enumeration.with_frobenius(F)
                if classify.is_irreducible(S)]
        assert sorted(S.generators for S in got) == \
            sorted(S.generators for S in want)


def test_free_and_irreducible_counts_odd_frobenius():
    pairs = [[len(enumeration.free_with_frobenius(F)),
              len(enumeration.irreducible_with_frobenius(F))]
             for F in range(1, 52, 2)]
    assert pairs == [[1, 1], [1, 1], [2, 2], [3, 3], [2, 3], [4, 6],
                     [5, 8], [3, 7], [7, 15], [8, 20], [5, 18], [11, 36],
                     [11, 44], [9, 45], [14, 83], [17, 109], [12, 101],
                     [18, 174], [24, 246], [16, 227], [27, 420], [31, 546],
                     [21, 498], [35, 926], [38, 1182], [27, 1121]]


def test_free_subset_of_irreducible():
    for F in (10, 15, 21):
        free = {S.generators for S in enumeration.free_with_frobenius(F)}
        irr = {S.generators for S in enumeration.irreducible_with_frobenius(F)}
        assert free <= irr
        for S in enumeration.free_with_frobenius(F):
            assert classify.is_free(S)


def test_resource_limits():
    with pytest.raises(ResourceLimit):
        enumeration.count_by_genus(enumeration.MAX_GENUS + 1)
    with pytest.raises(ResourceLimit):
        enumeration.with_frobenius(enumeration.MAX_FROBENIUS + 1)
    with pytest.raises(ResourceLimit):
        enumeration.irreducible_with_frobenius(enumeration.MAX_FROBENIUS + 1)
