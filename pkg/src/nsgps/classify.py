"""Irreducibility, oversemigroups, maximal embedding dimension, freeness.

A numerical semigroup is irreducible when it is not the intersection of two
strictly larger numerical semigroups; equivalently it is symmetric (odd
Frobenius number, genus (F+1)/2) or pseudo-symmetric (even Frobenius number,
genus (F+2)/2).
"""

from itertools import count
from math import gcd

from . import core
from .errors import (NotAPermutation, NotFree, NotMember, NotMinimalGenerator,
                     NotSpecialGap, ResourceLimit, TooManyGenerators)


def special_gaps(S):
    """Pseudo-Frobenius numbers x with 2x in S: exactly the gaps whose
    adjunction S u {x} is again a numerical semigroup."""
    return [x for x in core.pseudo_frobenius(S) if core.contains(S, 2 * x)]


def add_special_gap(S, x):
    """The semigroup S u {x}; x must be a special gap of S."""
    if x not in special_gaps(S):
        raise NotSpecialGap("%d is not a special gap" % x)
    elems = set(core.small_elements(S))
    elems.add(x)
    return core.from_elements(elems, S.conductor)


def remove_minimal_generator(S, g):
    """The semigroup S \\ {g}; g must be a minimal generator of S."""
    if g not in S.generators:
        raise NotMinimalGenerator("%d is not a minimal generator" % g)
    conductor = max(S.conductor, g + 1)
    elems = set(x for x in range(conductor) if core.contains(S, x))
    elems.discard(g)
    return core.from_elements(elems, conductor)


def is_symmetric(S):
    """genus = (F+1)/2; the full monoid counts as symmetric."""
    if S.generators == (1,):
        return True
    return 2 * core.genus(S) == S.frobenius + 1


def is_pseudo_symmetric(S):
    """genus = (F+2)/2, equivalently PF = {F/2, F}."""
    if S.generators == (1,):
        return False
    return 2 * core.genus(S) == S.frobenius + 2


def is_irreducible(S):
    """Not an intersection of two strictly larger semigroups."""
    return is_symmetric(S) or is_pseudo_symmetric(S)


def oversemigroups(S):
    """All numerical semigroups containing S, the full monoid included.

    Walks upward: every strict oversemigroup of T arises by adding a special
    gap of some intermediate semigroup, so a breadth-first closure starting
    at S finds them all.  Sorted by genus, then by generators, so the full
    monoid comes first and S itself last.
    """
    seen = {S.generators: S}
    frontier = [S]
    while frontier:
        nxt = []
        for T in frontier:
            for x in special_gaps(T):
                U = add_special_gap(T, x)
                if U.generators not in seen:
                    seen[U.generators] = U
                    nxt.append(U)
        frontier = nxt
    out = list(seen.values())
    out.sort(key=lambda T: (core.genus(T), T.generators))
    return out


def _saturate_irreducible(S, f):
    """The irreducible semigroup with Frobenius number f obtained by growing
    S u [f+1, oo) until no gap can be added without swallowing f.

    f must be a gap of S.  At each step the largest gap h with f - h also a
    gap (and h != f/2) joins the semigroup; when no such gap remains the
    semigroup is symmetric or pseudo-symmetric with Frobenius number f.
    """
    elems = set(x for x in range(f) if core.contains(S, x))
    # one downward sweep: adjoining the current largest candidate never
    # re-qualifies a larger gap, since qualification only asks that x and
    # f - x both stay outside
    for x in range(f - 1, 0, -1):
        if x not in elems and 2 * x != f and (f - x) not in elems:
            elems.add(x)
    return core.from_elements(elems, f + 1)


def decompose_into_irreducibles(S, exhaustive=False):
    """Write S as an intersection of finitely many irreducible semigroups.

    For each special gap h the saturation of S u (h, oo) gives an
    irreducible oversemigroup excluding h; redundant components are then
    dropped.  With exhaustive=True a minimum-cardinality decomposition is
    searched among all irreducible oversemigroups instead (only viable for
    small gap sets; guarded at 20 special gaps).
    """
    if is_irreducible(S):
        return [S]
    sg = special_gaps(S)
    if exhaustive:
        if len(sg) > 20:
            raise ResourceLimit("exhaustive decomposition capped at 20 special gaps")
        cands = [T for T in oversemigroups(S)
                 if T.generators != S.generators and is_irreducible(T)]
        covers = [frozenset(h for h in sg if not core.contains(T, h)) for T in cands]
        target = frozenset(sg)
        from itertools import combinations
        for k in range(1, len(sg) + 1):
            best = None
            for idx in combinations(range(len(cands)), k):
                u = frozenset().union(*(covers[i] for i in idx))
                if u == target:
                    key = sorted(cands[i].generators for i in idx)
                    if best is None or key < best[0]:
                        best = (key, idx)
            if best is not None:
                return sorted((cands[i] for i in best[1]),
                              key=lambda T: T.generators)
        raise ResourceLimit("no cover found")  # pragma: no cover
    comps = [_saturate_irreducible(S, h) for h in sg]
    # drop components whose excluded special gaps are covered by the rest
    keep = list(range(len(comps)))
    for i in range(len(comps)):
        if i not in keep:
            continue
        others = [j for j in keep if j != i]
        if all(any(not core.contains(comps[j], h) for j in others)
               for h in sg if not core.contains(comps[i], h)):
            keep = others
    comps = [comps[i] for i in keep]
    comps.sort(key=lambda T: T.generators)
    return comps


def is_med(S):
    """Maximal embedding dimension: e(S) = m(S)."""
    return S.embedding_dim == S.multiplicity


def med_closure(S, n):
    """The smallest MED semigroup containing {n} u (n + S), for n a nonzero
    element of S: generated by n together with n + (Ap(S, n) \\ {0})."""
    if n <= 0 or not core.contains(S, n):
        raise NotMember("%d is not a nonzero element" % n)
    ap = core.apery(S, n)
    return core.from_generators([n] + [n + w for w in ap if w != 0])


class ArrangementReport:
    """Gcd chain data of an ordered generating sequence a_0, ..., a_h.

    d[k] = gcd(a_0, ..., a_{k-1}) (1-indexed, d[1] = a_0), e[k] = d[k]/d[k+1].
    The arrangement is free when every e_k > 1 and e_k * a_k lies in the
    monoid generated by a_0, ..., a_{k-1}.
    """

    def __init__(self, seq):
        seq = list(seq)
        self.sequence = tuple(seq)
        d = [0, seq[0]]
        for a in seq[1:]:
            d.append(gcd(d[-1], a))
        self.d = d  # d[k] for k = 1 .. h+1 (index 0 unused)
        self.e = [0] + [d[k] // d[k + 1] for k in range(1, len(seq))]
        self.free = d[-1] == 1
        if self.free:
            for k in range(1, len(seq)):
                if self.e[k] == 1:
                    self.free = False
                    break
                # membership of e_k * a_k in <a_0 .. a_{k-1}>: scale by the
                # common factor d_k and test in a numerical semigroup
                val = self.e[k] * seq[k]
                dk = d[k]
                if val % dk != 0:
                    self.free = False
                    break
                T = core.from_generators([a // dk for a in seq[:k]])
                if not core.contains(T, val // dk):
                    self.free = False
                    break

    def __repr__(self):
        return "ArrangementReport(%s, free=%s)" % (list(self.sequence), self.free)


def arrangement_report(S, seq):
    """Analyze one ordering of the minimal generators of S."""
    if sorted(seq) != list(S.generators):
        raise NotAPermutation("%s is not an ordering of %s"
                              % (list(seq), list(S.generators)))
    return ArrangementReport(seq)


def is_telescopic(S):
    """Free for the increasing arrangement of the minimal generators."""
    if S.generators == (1,):
        return True
    return ArrangementReport(S.generators).free


def is_free(S):
    """Free for some arrangement of the minimal generators.

    Backtracking over prefixes; a prefix is viable only while its gcd chain
    strictly decreases.  Refuses more than 12 generators.
    """
    if S.generators == (1,):
        return True
    p = S.embedding_dim
    if p > 12:
        raise TooManyGenerators("freeness search capped at 12 generators")
    gens = S.generators

    def extend(seq, remaining, dk):
        if not remaining:
            return dk == 1 and ArrangementReport(seq).free
        for i, a in enumerate(remaining):
            d2 = gcd(dk, a)
            if dk != 0 and d2 == dk:
                continue  # e_k = 1 is never free
            if extend(seq + [a], remaining[:i] + remaining[i + 1:], d2):
                return True
        return False

    return extend([], list(gens), 0)


def free_arrangements(S):
    """All free arrangements of the minimal generators (exhaustive scan)."""
    if S.embedding_dim > 12:
        raise TooManyGenerators("freeness search capped at 12 generators")
    from itertools import permutations
    out = []
    for seq in permutations(S.generators):
        r = ArrangementReport(seq)
        if r.free:
            out.append(list(seq))
    return out


def standard_representation(report, x):
    """Coefficients lambda_0 .. lambda_h with x = sum lambda_k a_k,
    0 <= lambda_k < e_k for k >= 1 and lambda_0 an arbitrary integer.

    Every integer has exactly one such representation over a free
    arrangement; x is in the semigroup iff lambda_0 >= 0.
    """
    if not report.free:
        raise NotFree("arrangement %s is not free" % (list(report.sequence),))
    seq = report.sequence
    h = len(seq) - 1
    lam = [0] * (h + 1)
    rest = x
    for k in range(h, 0, -1):
        dk, dk1 = report.d[k], report.d[k + 1]
        ek = report.e[k]
        # solve lambda_k * a_k = rest (mod d_k) with 0 <= lambda_k < e_k
        a = (seq[k] // dk1) % ek
        r = rest // dk1
        if rest % dk1 != 0:
            raise NotFree("no standard representation")  # pragma: no cover
        lam[k] = (r * pow(a, -1, ek)) % ek
        rest -= lam[k] * seq[k]
    if rest % seq[0] != 0:
        raise NotFree("no standard representation")  # pragma: no cover
    lam[0] = rest // seq[0]
    return lam
