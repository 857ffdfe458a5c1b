"""Core numerical semigroup arithmetic.

A numerical semigroup S is a cofinite submonoid of the nonnegative integers.
It is stored as its sorted minimal generating set plus the Apery set with
respect to the multiplicity, which gives O(1) membership tests:

    x in S  <=>  x >= 0 and x >= apery[x % m]

where m is the multiplicity (smallest nonzero element).
"""

import heapq
from math import gcd

from .errors import EmptyInput, NotMember, NotNumerical, Underdetermined


class NumericalSemigroup:
    """A numerical semigroup, normalized to its minimal generating set.

    Use from_generators() to build one; the constructor assumes its inputs
    are already validated and consistent.
    """

    def __init__(self, generators, apery_mult, anchor=None):
        self.generators = tuple(generators)       # minimal system, sorted
        self.multiplicity = self.generators[0]
        self._apery_mult = tuple(apery_mult)      # Apery set wrt multiplicity
        self.frobenius = max(self._apery_mult) - self.multiplicity
        self.conductor = self.frobenius + 1
        self.embedding_dim = len(self.generators)
        # which generator johnson_reduce singles out (last one as given)
        self._anchor = anchor if anchor is not None else self.generators[-1]

    def __contains__(self, x):
        return contains(self, x)

    def __eq__(self, other):
        return (isinstance(other, NumericalSemigroup)
                and self.generators == other.generators)

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return "NumericalSemigroup(%s)" % (list(self.generators),)


def _apery_shortest_path(n, gens):
    """Apery set of <gens> with respect to n: per residue class mod n, the
    least element of the semigroup in that class.  Dijkstra on the residue
    graph (edge i -> (i+g) mod n of weight g for each generator g)."""
    INF = None
    dist = [INF] * n
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for g in gens:
            r2 = (r + g) % n
            d2 = d + g
            if dist[r2] is None or d2 < dist[r2]:
                dist[r2] = d2
                heapq.heappush(heap, (d2, r2))
    return dist


def _minimal_generators(cands, ap, m):
    """Filter a candidate generator list down to the minimal system.

    Any minimal generator other than m is an Apery element of m (otherwise
    subtracting m decomposes it), and an Apery element is non-minimal
    exactly when it is the sum of two nonzero Apery elements.
    """
    nonzero = [w for w in ap if w]
    sums = set()
    for i, a in enumerate(nonzero):
        for b in nonzero[i:]:
            sums.add(a + b)
    out = []
    for g in cands:
        if g == m:
            out.append(g)
        elif ap[g % m] == g and g not in sums:
            out.append(g)
    return out


def from_generators(gens, reduce_gcd=False):
    """Build the numerical semigroup generated by gens.

    gens: nonempty iterable of positive integers with gcd 1.  Non-minimal
    generators are discarded.  With reduce_gcd=True a generating set with
    gcd d > 1 is divided through by d (the quotient is isomorphic to a
    numerical semigroup); by default that case raises NotNumerical.
    """
    gens = list(gens)
    if not gens:
        raise EmptyInput("no generators given")
    for g in gens:
        if not isinstance(g, int) or g <= 0:
            raise NotNumerical("generators must be positive integers, got %r" % (g,))
    d = 0
    for g in gens:
        d = gcd(d, g)
    if d != 1:
        if not reduce_gcd:
            raise NotNumerical("gcd of generators is %d, not 1" % d)
        gens = [g // d for g in gens]
    given = gens
    gens = sorted(set(gens))
    if gens[0] == 1:
        gens = [1]
    m = gens[0]
    ap = _apery_shortest_path(m, gens)
    minimal = _minimal_generators(gens, ap, m)
    anchor = None
    for g in reversed(given):
        if g in minimal:
            anchor = g
            break
    return NumericalSemigroup(minimal, ap, anchor)


def contains(S, x):
    """x in S, by the Apery membership criterion."""
    if x < 0:
        return False
    return x >= S._apery_mult[x % S.multiplicity]


def from_elements(elements, conductor):
    """Rebuild a semigroup from its set of elements below its conductor.

    elements: a set containing every member < conductor (0 included);
    everything >= conductor is a member.  Used when a semigroup is given by
    gap manipulation rather than by generators.
    """
    def member(x):
        return x >= conductor or (x >= 0 and x in elements)
    if conductor <= 0:
        return N()
    m = next(x for x in range(1, conductor + 1) if member(x))
    # Apery set of m by scanning each residue class upward
    ap = []
    for r in range(m):
        x = r
        while not member(x):
            x += m
        ap.append(x)
    cands = sorted({m} | {w for w in ap if w})
    return from_generators(_minimal_generators(cands, ap, m))


def N():
    """The full monoid of nonnegative integers, <1>."""
    return from_generators([1])


def small_elements(S):
    """Sorted members of S up to and including the conductor."""
    return [x for x in range(S.conductor + 1) if contains(S, x)] if S.conductor > 0 else [0]


def gaps(S):
    """Sorted list of positive integers not in S."""
    return [x for x in range(1, S.conductor) if not contains(S, x)]


def genus(S):
    """Number of gaps."""
    return len(gaps(S))


def apery(S, n):
    """Apery set of S with respect to n, a nonzero element of S.

    Returned indexed by residue: entry i is the least s in S with
    s = i (mod n).  Entry 0 is always 0 and there are exactly n entries.
    """
    if n <= 0 or not contains(S, n):
        raise NotMember("%d is not a nonzero element of the semigroup" % n)
    if n == S.multiplicity:
        return list(S._apery_mult)
    return _apery_shortest_path(n, S.generators)


def apery_wrt_integer(S, n):
    """{s in S : s - n not in S} for an arbitrary positive integer n.

    Coincides with the classical Apery set when n is in S, but may have
    more than n elements otherwise.  Returned sorted.
    """
    if n <= 0:
        raise NotMember("n must be positive, got %d" % n)
    out = []
    for s in range(S.conductor + n):
        if contains(S, s) and not contains(S, s - n):
            out.append(s)
    return out


def notable_elements(S):
    """One-stop record of the classical invariants."""
    gp = gaps(S)
    return {
        "frobenius": S.frobenius,
        "conductor": S.conductor,
        "genus": len(gp),
        "gaps": gp,
        "multiplicity": S.multiplicity,
        "embedding_dim": S.embedding_dim,
        "sporadic_count": S.frobenius + 1 - len(gp),
    }


def le_s(S, a, b):
    """The partial order induced by S: a <=_S b iff b - a in S."""
    return contains(S, b - a)


def pseudo_frobenius(S):
    """Sorted pseudo-Frobenius numbers: x not in S with x + s in S for all
    nonzero s in S.  Computed as the maximal elements of the Apery set of
    the multiplicity under <=_S, shifted down by the multiplicity."""
    if S.generators == (1,):
        return []
    m = S.multiplicity
    ap = S._apery_mult
    out = []
    for w in ap:
        if any(v != w and le_s(S, w, v) for v in ap):
            continue
        out.append(w - m)
    return sorted(out)


def type_of(S):
    """Number of pseudo-Frobenius numbers (0 for the full monoid)."""
    return len(pseudo_frobenius(S))


def johnson_reduce(S):
    """Strip the common factor of all minimal generators but one.

    Writes S = <n_1, ..., n_p> with n_p the distinguished generator (the
    last one in the order the semigroup was created with), d the gcd of the
    others, and returns (d, T) with T = <n_1/d, ..., n_{p-1}/d, n_p>.  Then
    F(S) = d*F(T) + (d-1)*n_p and g(S) = d*g(T) + (d-1)*(n_p - 1)/2.
    """
    if S.embedding_dim < 2:
        raise Underdetermined("need at least two minimal generators")
    np_ = S._anchor
    rest = [g for g in S.generators if g != np_]
    d = 0
    for g in rest:
        d = gcd(d, g)
    T = from_generators([g // d for g in rest] + [np_])
    return d, T


def wilf_check(S):
    """conductor <= embedding_dim * (number of members below the conductor)."""
    n = S.frobenius + 1 - genus(S)
    return S.conductor <= S.embedding_dim * n
