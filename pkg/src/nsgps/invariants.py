"""Non-unique factorization invariants: elasticity, Delta sets, catenary
degree and omega-primality."""

from fractions import Fraction
from math import gcd

from . import core
from . import presentations
from .errors import DiagnosticOverflow, DimensionMismatch, HalfFactorial, NotMember


def lengths(S, s):
    """Sorted factorization lengths of s (the length set L(s))."""
    if not core.contains(S, s):
        raise NotMember("%d is not in the semigroup" % s)
    return sorted({sum(z) for z in presentations.factorizations(S, s)})


def elasticity_of(S, s):
    """max L(s) / min L(s); 1 for s = 0 by convention."""
    ls = lengths(S, s)
    if ls[0] == 0:
        return Fraction(1)
    return Fraction(ls[-1], ls[0])


def elasticity(S):
    """Supremum of elasticity_of over S: largest generator / multiplicity."""
    return Fraction(S.generators[-1], S.generators[0])


def delta_of(S, s):
    """Differences between consecutive factorization lengths of s."""
    ls = lengths(S, s)
    return {ls[i + 1] - ls[i] for i in range(len(ls) - 1)}


def delta_min(S):
    """min of the Delta set: the gcd of the length drops across a minimal
    presentation.  Raises HalfFactorial when the Delta set is empty (which
    only happens for the monoid of all naturals)."""
    d = 0
    for a, b in presentations.minimal_presentation(S):
        d = gcd(d, abs(sum(a) - sum(b)))
    if d == 0:
        raise HalfFactorial("Delta set is empty")
    return d


def delta_max(S):
    """max of the Delta set, attained at a Betti element."""
    best = 0
    for b in presentations.betti_elements(S):
        for d in delta_of(S, b):
            best = max(best, d)
    if best == 0:
        raise HalfFactorial("Delta set is empty")
    return best


def delta_up_to(S, bound):
    """Union of delta_of(s) over the elements s <= bound."""
    out = set()
    for s in range(bound + 1):
        if core.contains(S, s):
            out |= delta_of(S, s)
    return out


def distance(x, y):
    """d(x, y) = max(|x - x^y|, |y - x^y|) with ^ the componentwise min."""
    if len(x) != len(y):
        raise DimensionMismatch("factorization vectors of lengths %d and %d"
                                % (len(x), len(y)))
    a = b = 0
    for xi, yi in zip(x, y):
        m = min(xi, yi)
        a += xi - m
        b += yi - m
    return max(a, b)


def catenary_of(S, s):
    """Catenary degree of s: the least N such that any two factorizations
    are joined by a chain with consecutive distances <= N.  Computed as the
    bottleneck (max edge) of a minimum spanning tree on Z(s)."""
    if not core.contains(S, s):
        raise NotMember("%d is not in the semigroup" % s)
    facts = presentations.factorizations(S, s)
    n = len(facts)
    if n <= 1:
        return 0
    # Prim's algorithm; the largest edge pulled in is the bottleneck
    in_tree = [False] * n
    best = [None] * n
    best[0] = 0
    bottleneck = 0
    for _ in range(n):
        i = min((j for j in range(n) if not in_tree[j] and best[j] is not None),
                key=lambda j: best[j])
        in_tree[i] = True
        bottleneck = max(bottleneck, best[i])
        for j in range(n):
            if not in_tree[j]:
                d = distance(facts[i], facts[j])
                if best[j] is None or d < best[j]:
                    best[j] = d
    return bottleneck


def catenary(S):
    """Catenary degree of S: max over the Betti elements (0 for <1>)."""
    return max((catenary_of(S, b) for b in presentations.betti_elements(S)),
               default=0)


def _minimal_factorizations_of_shifted(S, s, cap=1000000):
    """Minimal elements (under componentwise <=) of Z(s + S), the exponent
    vectors whose image lies in s + S.

    Z(s + S) is upward closed, so a breadth-first walk from the origin that
    only expands vectors outside the set visits every minimal member; a
    member is minimal iff all its immediate predecessors are outside.
    """
    gens = S.generators
    p = len(gens)

    def in_set(v):
        return core.contains(S, sum(c * g for c, g in zip(v, gens)) - s)

    zero = (0,) * p
    minimals = []
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(p):
                w = v[:i] + (v[i] + 1,) + v[i + 1:]
                if w in seen:
                    continue
                seen.add(w)
                if len(seen) > cap:
                    raise DiagnosticOverflow("omega search frontier exceeded %d" % cap)
                if in_set(w):
                    if all(w[j] == 0 or not in_set(w[:j] + (w[j] - 1,) + w[j + 1:])
                           for j in range(p)):
                        minimals.append(w)
                else:
                    nxt.append(w)
        frontier = nxt
    return minimals


def omega_of(S, s, cap=1000000):
    """Omega-primality of s: the largest total length of a minimal element
    of Z(s + S)."""
    if not core.contains(S, s) or s <= 0:
        raise NotMember("%d is not a nonzero element of the semigroup" % s)
    return max(sum(v) for v in _minimal_factorizations_of_shifted(S, s, cap))


def omega(S, cap=1000000):
    """Omega-primality of S: max over the minimal generators (1 for <1>)."""
    return max(omega_of(S, n, cap) for n in S.generators)


def invariant_report(S):
    """Summary record of the factorization invariants of S."""
    rep = {
        "elasticity": elasticity(S),
        "catenary": catenary(S),
        "omega": omega(S),
        "betti": presentations.betti_elements(S),
    }
    try:
        rep["delta_min"] = delta_min(S)
        rep["delta_max"] = delta_max(S)
    except HalfFactorial:
        rep["delta_min"] = None
        rep["delta_max"] = None
    return rep
