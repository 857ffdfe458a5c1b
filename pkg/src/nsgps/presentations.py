"""Factorizations, Betti elements and minimal presentations.

The factorization map phi sends an exponent vector (a_1, ..., a_p) over the
minimal generators to sum a_i * n_i.  Z(s) = phi^{-1}(s) is the set of
factorizations of s; the graph nabla_s joins two factorizations when their
supports meet, and s is a Betti element when nabla_s is disconnected.  A
minimal presentation is built by patching together the connected components
at every Betti element.
"""

from . import core
from .errors import NotMember


def factorizations(S, s):
    """All exponent vectors over the minimal generators summing to s,
    in descending lexicographic order.  Empty when s is not in S."""
    gens = S.generators
    p = len(gens)
    out = []
    vec = [0] * p

    def rec(i, rest):
        if i == p - 1:
            if rest % gens[i] == 0:
                vec[i] = rest // gens[i]
                out.append(tuple(vec))
                vec[i] = 0
            return
        g = gens[i]
        for k in range(rest // g, -1, -1):
            vec[i] = k
            rec(i + 1, rest - k * g)
        vec[i] = 0

    if s >= 0:
        rec(0, s)
    out.sort(reverse=True)
    return out


def _connected_classes(facts):
    """Partition of a factorization list into R-classes: the transitive
    closure of 'supports intersect'.  Union-find keyed by coordinate."""
    parent = list(range(len(facts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner = {}  # coordinate -> representative factorization index
    for i, f in enumerate(facts):
        for c, e in enumerate(f):
            if e == 0:
                continue
            if c in owner:
                ri, rj = find(i), find(owner[c])
                if ri != rj:
                    parent[ri] = rj
            else:
                owner[c] = i
    groups = {}
    for i in range(len(facts)):
        groups.setdefault(find(i), []).append(facts[i])
    classes = [sorted(g) for g in groups.values()]
    classes.sort(key=lambda g: g[0])
    return classes


def r_classes(S, s):
    """The R-classes of Z(s), sorted by their least member."""
    if not core.contains(S, s):
        raise NotMember("%d is not in the semigroup" % s)
    return _connected_classes(factorizations(S, s))


def betti_elements(S):
    """Elements whose factorization graph is disconnected.

    Every Betti element has the form n_i + w with i >= 2 and w in the Apery
    set of the multiplicity, so only those candidates are examined.
    """
    if S.embedding_dim < 2:
        return []
    ap = core.apery(S, S.multiplicity)
    cands = sorted({n + w for n in S.generators[1:] for w in ap})
    return [b for b in cands
            if len(_connected_classes(factorizations(S, b))) > 1]


def _total(v):
    return sum(v)


def _degrevlex_greater(a, b):
    """Graded reverse lexicographic order on exponent vectors."""
    ta, tb = sum(a), sum(b)
    if ta != tb:
        return ta > tb
    for i in range(len(a) - 1, -1, -1):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


def _orient(a, b):
    return (a, b) if _degrevlex_greater(a, b) else (b, a)


def minimal_presentation(S):
    """A minimal generating system of the kernel congruence of phi.

    At each Betti element the R-classes are starred together: the class
    holding the overall lex-least factorization is the hub, and one relation
    joins the lex-least member of every other class to the hub's lex-least
    member.  Pairs are oriented with the graded-reverse-lex larger vector
    first and the list is sorted; the total count is
    sum over Betti elements of (number of R-classes - 1).
    """
    rels = []
    for b in betti_elements(S):
        classes = _connected_classes(factorizations(S, b))
        # classes come sorted by least member, so the hub is the first
        hub = classes[0][0]
        for cls in classes[1:]:
            rels.append(_orient(hub, cls[0]))
    rels.sort()
    return rels


def kernel_reachability_check(S, relations, s):
    """Can every factorization of s be reached from every other by moves
    that trade one side of a relation for the other inside a factorization?

    True exactly when the relations generate the kernel congruence at s.
    """
    if not core.contains(S, s):
        raise NotMember("%d is not in the semigroup" % s)
    facts = factorizations(S, s)
    if len(facts) <= 1:
        return True
    p = len(S.generators)
    moves = []
    for a, b in relations:
        moves.append((a, b))
        moves.append((b, a))
    target = set(facts)
    seen = {facts[0]}
    frontier = [facts[0]]
    while frontier:
        nxt = []
        for z in frontier:
            for a, b in moves:
                if all(z[i] >= a[i] for i in range(p)):
                    z2 = tuple(z[i] - a[i] + b[i] for i in range(p))
                    if z2 not in seen:
                        seen.add(z2)
                        nxt.append(z2)
        frontier = nxt
    return target <= seen


def _term(v):
    parts = []
    for i, e in enumerate(v):
        if e == 1:
            parts.append("x%d" % (i + 1))
        elif e > 1:
            parts.append("x%d^%d" % (i + 1, e))
    return "*".join(parts) if parts else "1"


def binomials_text(S):
    """The minimal presentation rendered as binomial strings, one relation
    (a, b) becoming 'X^a - X^b' in variables x1..xp."""
    return ["%s - %s" % (_term(a), _term(b)) for a, b in minimal_presentation(S)]
