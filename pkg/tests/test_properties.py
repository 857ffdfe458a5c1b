"""Randomized cross-checks of the main algorithms against slower,
independent computations."""

import random
from fractions import Fraction
from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st

from nsgps import classify, core, invariants as inv, presentations as pres


def random_generators(rng, max_p=5, max_gen=80):
    while True:
        p = rng.randint(2, max_p)
        gens = sorted(rng.sample(range(2, max_gen + 1), p))
        g = 0
        for x in gens:
            g = gcd(g, x)
        if g == 1:
            return gens


def membership_mask(gens, upto):
    """Bitmask DP: bit x set iff x is a sum of the generators."""
    mask = 1
    full = (1 << (upto + 1)) - 1
    changed = True
    while changed:
        changed = False
        for g in gens:
            nxt = (mask | (mask << g)) & full
            if nxt != mask:
                mask = nxt
                changed = True
    return mask


gen_lists = st.builds(lambda seed: random_generators(random.Random(seed)),
                      st.integers(0, 10 ** 6))


@settings(max_examples=60, deadline=None)
@given(gen_lists)
def test_membership_matches_dp(gens):
    S = core.from_generators(gens)
    upto = S.conductor + 2 * max(gens)
    mask = membership_mask(gens, upto)
    for x in range(upto + 1):
        assert core.contains(S, x) == bool(mask >> x & 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 60), st.integers(2, 40))
def test_two_generator_formulas(a, k):
    # <a, a+1, ..., 2a-1> and <a, b> closed forms
    b = a + k
    if gcd(a, b) != 1:
        return
    S = core.from_generators([a, b])
    assert S.frobenius == a * b - a - b
    assert core.genus(S) == (a - 1) * (b - 1) // 2
    T = core.from_generators(list(range(a, 2 * a)))
    assert T.frobenius == a - 1


@settings(max_examples=30, deadline=None)
@given(gen_lists, st.integers(0, 10 ** 6))
def test_arithmetic_progression_apery(gens, seed):
    # Apery set of S with respect to a member n: the n smallest elements
    # in distinct residue classes mod n
    S = core.from_generators(gens)
    rng = random.Random(seed)
    n = S.multiplicity * rng.randint(1, 3)
    ap = core.apery_wrt_integer(S, n)
    seen = {}
    x = 0
    while len(seen) < n:
        if core.contains(S, x):
            seen.setdefault(x % n, x)
        x += 1
    assert sorted(ap) == sorted(seen.values())


@settings(max_examples=40, deadline=None)
@given(gen_lists)
def test_pseudo_frobenius_two_routes(gens):
    S = core.from_generators(gens)
    via_apery = core.pseudo_frobenius(S)
    brute = [x for x in core.gaps(S)
             if all(core.contains(S, x + g) for g in S.generators)]
    assert via_apery == brute


@settings(max_examples=25, deadline=None)
@given(gen_lists)
def test_decomposition_intersects_to_s(gens):
    S = core.from_generators(gens)
    parts = classify.decompose_into_irreducibles(S)
    top = S.conductor + S.multiplicity
    for x in range(top):
        assert core.contains(S, x) == all(core.contains(T, x) for T in parts)
    for T in parts:
        assert classify.is_irreducible(T)


@settings(max_examples=25, deadline=None)
@given(gen_lists)
def test_factorization_lengths(gens):
    S = core.from_generators(gens)
    rng = random.Random(sum(gens))
    elems = [x for x in range(S.conductor + 20) if core.contains(S, x)]
    for s in rng.sample(elems, min(4, len(elems))):
        zs = pres.factorizations(S, s)
        assert all(sum(c * g for c, g in zip(z, S.generators)) == s
                   for z in zs)
        ls = inv.lengths(S, s)
        assert ls == sorted({sum(z) for z in zs})
        if s:
            assert inv.elasticity_of(S, s) == Fraction(max(ls), min(ls))
            assert inv.elasticity_of(S, s) <= inv.elasticity(S)


@settings(max_examples=20, deadline=None)
@given(gen_lists)
def test_distance_axioms(gens):
    S = core.from_generators(gens)
    rng = random.Random(len(gens))
    elems = [x for x in range(2, S.conductor + 15) if core.contains(S, x)]
    s = rng.choice(elems)
    zs = pres.factorizations(S, s)
    for a in zs:
        for b in zs:
            d = inv.distance(a, b)
            assert d == inv.distance(b, a)
            assert (d == 0) == (a == b)
            # lower bound: distance at least the length gap
            assert d >= abs(sum(a) - sum(b))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_omega_matches_dominance_scan(seed):
    # omega(S, g) = longest bounded factorization among elements x with
    # x - g in S, scanning a small window directly
    rng = random.Random(seed)
    gens = random_generators(rng, max_p=4, max_gen=25)
    S = core.from_generators(gens)
    for g in S.generators:
        best = 1
        # a minimal x in g + S has x - n_i - g outside S for some used
        # generator n_i, so x <= F + g + max(gens)
        for x in range(g, S.frobenius + g + max(S.generators) + 1):
            if not core.contains(S, x - g):
                continue
            for z in pres.factorizations(S, x):
                # z counts iff it is minimal in the divisibility order:
                # dropping any generator copy must leave g + S
                minimal = True
                for i in range(len(z)):
                    if z[i] and core.contains(S, x - S.generators[i] - g):
                        minimal = False
                        break
                if minimal:
                    best = max(best, sum(z))
        assert inv.omega_of(S, g) == best


@settings(max_examples=25, deadline=None)
@given(gen_lists)
def test_selmer_shift_and_scale(gens):
    S = core.from_generators(gens)
    m = S.multiplicity
    rng = random.Random(m + len(gens))
    for _ in range(3):
        n = rng.randrange(S.conductor, S.conductor + 3 * m)
        if not core.contains(S, n):
            continue
        ap = core.apery_wrt_integer(S, n)
        assert core.genus(S) == sum(ap) // n - (n - 1) // 2
        assert S.frobenius == max(ap) - n


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_free_apery_product(seed):
    # for a free arrangement, Apery wrt the first generator is every
    # product sum(lam_k * a_k) with 0 <= lam_k < e_k
    rng = random.Random(seed)
    while True:
        gens = random_generators(rng, max_p=4, max_gen=40)
        S = core.from_generators(gens)
        if len(S.generators) <= 6:
            arrs = classify.free_arrangements(S)
            if arrs:
                break
    seq = arrs[0]
    rep = classify.arrangement_report(core.from_generators(list(seq)), seq)
    prods = [0]
    for k in range(1, len(seq)):
        e = rep.e[k]
        prods = [p + lam * seq[k] for p in prods for lam in range(e)]
    assert sorted(prods) == sorted(core.apery_wrt_integer(S, seq[0]))
