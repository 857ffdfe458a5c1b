import pytest

from nsgps import core, presentations as pres
from nsgps.errors import NotMember


def S5_7_11_13():
    return core.from_generators([5, 7, 11, 13])


def test_factorizations_50():
    S = S5_7_11_13()
    facts = pres.factorizations(S, 50)
    assert len(facts) == 10
    assert facts[0] == (10, 0, 0, 0)  # descending lex
    assert all(sum(f[i] * g for i, g in enumerate([5, 7, 11, 13])) == 50
               for f in facts)
    assert len(pres.r_classes(S, 50)) == 1


def test_factorizations_empty_outside():
    S = S5_7_11_13()
    assert pres.factorizations(S, 6) == []
    assert pres.factorizations(S, -3) == []
    assert pres.factorizations(S, 0) == [(0, 0, 0, 0)]


def test_r_classes_26():
    S = S5_7_11_13()
    classes = pres.r_classes(S, 26)
    assert classes == [[(0, 0, 0, 2)], [(1, 3, 0, 0), (3, 0, 1, 0)]]
    with pytest.raises(NotMember):
        pres.r_classes(S, 6)


def test_betti_elements():
    assert pres.betti_elements(S5_7_11_13()) == [18, 20, 21, 22, 24, 26]
    assert pres.betti_elements(core.from_generators([10, 11, 17, 23])) == \
        [33, 34, 40, 69]
    assert pres.betti_elements(core.from_generators([2, 3])) == [6]
    assert pres.betti_elements(core.from_generators([3, 5, 7])) == [10, 12, 14]
    assert pres.betti_elements(core.N()) == []


def test_minimal_presentation_5_7_11_13():
    rels = pres.minimal_presentation(S5_7_11_13())
    assert rels == [
        ((0, 1, 1, 0), (1, 0, 0, 1)),
        ((0, 3, 0, 0), (2, 0, 1, 0)),
        ((1, 3, 0, 0), (0, 0, 0, 2)),
        ((2, 2, 0, 0), (0, 0, 1, 1)),
        ((3, 1, 0, 0), (0, 0, 2, 0)),
        ((4, 0, 0, 0), (0, 1, 0, 1)),
    ]
    assert len(rels) == 6


def test_minimal_presentation_3_5_7():
    rels = {frozenset(r) for r in pres.minimal_presentation(
        core.from_generators([3, 5, 7]))}
    assert rels == {
        frozenset({(0, 2, 0), (1, 0, 1)}),
        frozenset({(3, 1, 0), (0, 0, 2)}),
        frozenset({(4, 0, 0), (0, 1, 1)}),
    }


def test_minimal_presentation_2_3():
    assert pres.minimal_presentation(core.from_generators([2, 3])) == \
        [((3, 0), (0, 2))]
    assert pres.minimal_presentation(core.N()) == []


def test_presentation_cardinality_matches_r_classes():
    for gens in [[5, 7, 11, 13], [10, 11, 17, 23], [3, 5, 7], [4, 6, 9]]:
        S = core.from_generators(gens)
        expected = sum(len(pres.r_classes(S, b)) - 1
                       for b in pres.betti_elements(S))
        assert len(pres.minimal_presentation(S)) == expected


def test_presentation_relations_hold():
    for gens in [[5, 7, 11, 13], [10, 11, 17, 23], [3, 5, 7]]:
        S = core.from_generators(gens)
        for a, b in pres.minimal_presentation(S):
            va = sum(x * g for x, g in zip(a, S.generators))
            vb = sum(x * g for x, g in zip(b, S.generators))
            assert va == vb


def test_binomials_text():
    assert pres.binomials_text(core.from_generators([3, 5, 7])) == [
        "x2^2 - x1*x3", "x1^3*x2 - x3^2", "x1^4 - x2*x3"]
    assert pres.binomials_text(core.from_generators([2, 3])) == ["x1^3 - x2^2"]


def test_kernel_reachability():
    for gens in [[5, 7, 11, 13], [3, 5, 7], [2, 3], [10, 11, 17, 23]]:
        S = core.from_generators(gens)
        rels = pres.minimal_presentation(S)
        hi = S.conductor + 2 * S.generators[-1]
        for s in range(hi + 1):
            if core.contains(S, s):
                assert pres.kernel_reachability_check(S, rels, s), (gens, s)


def test_kernel_fails_without_any_relation():
    for gens in [[5, 7, 11, 13], [3, 5, 7], [2, 3]]:
        S = core.from_generators(gens)
        rels = pres.minimal_presentation(S)
        hi = S.conductor + 2 * S.generators[-1]
        for i in range(len(rels)):
            pruned = rels[:i] + rels[i + 1:]
            assert not all(pres.kernel_reachability_check(S, pruned, s)
                           for s in range(hi + 1) if core.contains(S, s)), \
                (gens, i)


def test_betti_candidates_cover():
    # every Betti element is n_i + w for some i >= 2 and Apery element w
    S = core.from_generators([10, 11, 17, 23])
    ap = set(core.apery(S, 10))
    for b in pres.betti_elements(S):
        assert any(b - n in ap for n in S.generators[1:])
