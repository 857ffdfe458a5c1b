"""Exhaustive enumeration of numerical semigroups.

Three engines:
  * the semigroup tree, rooted at <1>, where the children of S are the
    S \\ {g} for minimal generators g above the Frobenius number (each child
    has genus one higher, and every semigroup appears exactly once);
  * membership-vector search for a fixed Frobenius number, deciding the
    elements 1..F-1 with closure propagation;
  * the symmetric variant of that search, which only decides the lower half
    and uses the duality x in S <=> F-x not in S to enumerate irreducibles.
"""

from math import gcd

from . import classify
from . import core
from .errors import ResourceLimit

MAX_GENUS = 40
MAX_FROBENIUS = 64


def _tree_nodes(gmax):
    """Depth-first walk of the semigroup tree down to genus gmax.

    Yields (genus, frobenius, mingens) triples.  A semigroup is held as a
    bitmask of its elements on [0, B) with every bit above the conductor
    set, which keeps the incremental minimal-generator update cheap.
    """
    B = 3 * gmax + 8
    full = (1 << B) - 1
    # node: (mask, frobenius, genus, mingens)
    stack = [(full, -1, 0, (1,))]
    while stack:
        mask, frob, g, gens = stack.pop()
        yield g, frob, gens
        if g == gmax:
            continue
        for gen in gens:
            if gen <= frob:
                continue
            child = mask & ~(1 << gen)
            # minimal generators of T = S \ {gen}: everything in gens \ {gen}
            # stays minimal, and a new minimal generator must read gen + s
            # with s a nonzero element of S at most the new multiplicity
            rest = tuple(x for x in gens if x != gen)
            if gen == gens[0]:
                # the multiplicity was removed; the next element takes over
                mt = next(x for x in range(gen + 1, B) if (child >> x) & 1)
                cands = (2 * gen, gen + mt)
            else:
                mt = gens[0]
                cands = (gen + mt,)
            extra = []
            for x in cands:
                if x in rest:
                    continue
                ok = True
                a = mt
                while 2 * a <= x:
                    if (child >> a) & 1 and (child >> (x - a)) & 1:
                        ok = False
                        break
                    a += 1
                if ok:
                    extra.append(x)
            new_gens = tuple(sorted(set(rest) | set(extra)))
            stack.append((child, gen, g + 1, new_gens))


def with_genus(g, max_genus=MAX_GENUS):
    """All numerical semigroups of genus g, sorted by generating set."""
    if g > max_genus:
        raise ResourceLimit("genus enumeration capped at %d" % max_genus)
    out = [core.from_generators(list(gens))
           for gg, _f, gens in _tree_nodes(g) if gg == g]
    out.sort(key=lambda S: S.generators)
    return out


def count_by_genus(gmax, max_genus=MAX_GENUS):
    """[n_1, ..., n_gmax]: how many numerical semigroups of each genus."""
    if gmax > max_genus:
        raise ResourceLimit("genus enumeration capped at %d" % max_genus)
    counts = [0] * (gmax + 1)
    for g, _f, _gens in _tree_nodes(gmax):
        counts[g] += 1
    return counts[1:]


def _closed_subsets_with_frobenius(F):
    """Yield membership masks over [0, F] of all numerical semigroups with
    Frobenius number exactly F (elements above F are implicit)."""
    status = [0] * (F + 1)  # 0 unknown, 1 in, 2 out
    status[0] = 1
    status[F] = 2

    def assign(x, val, trail):
        """Set status[x] and propagate closure; False on conflict."""
        queue = [(x, val)]
        while queue:
            u, v = queue.pop()
            if status[u] == v:
                continue
            if status[u] != 0:
                return False
            status[u] = v
            trail.append(u)
            if v == 1:
                for a in range(1, F):
                    if status[a] == 1:
                        s = u + a
                        if s > F:
                            continue
                        if s == F or status[s] == 2:
                            return False
                        if status[s] == 0:
                            queue.append((s, 1))
            else:
                # u is out: no pair of members may sum to u
                for a in range(1, u):
                    if status[a] == 1 and status[u - a] == 1:
                        return False
        return True

    def rec(x):
        while x < F and status[x] != 0:
            x += 1
        if x >= F:
            mask = 1
            for i in range(1, F):
                if status[i] == 1:
                    mask |= 1 << i
            yield mask
            return
        for val in (1, 2):
            trail = []
            if assign(x, val, trail):
                yield from rec(x + 1)
            for u in trail:
                status[u] = 0

    yield from rec(1)


def _record_from_mask(mask, conductor):
    elems = {i for i in range(conductor) if (mask >> i) & 1}
    return core.from_elements(elems, conductor)


def with_frobenius(F, max_frobenius=MAX_FROBENIUS):
    """All numerical semigroups with Frobenius number F, sorted by
    generating set.  F = -1 gives [<1>]; there is none with F = 0."""
    if F == -1:
        return [core.N()]
    if F == 0:
        return []
    if F < -1 or F > max_frobenius:
        raise ResourceLimit("Frobenius enumeration capped at %d" % max_frobenius)
    out = [_record_from_mask(mask, F + 1)
           for mask in _closed_subsets_with_frobenius(F)]
    out.sort(key=lambda S: S.generators)
    return out


def _irreducible_masks(F):
    """Membership masks (over [0, F]) of the irreducible numerical
    semigroups with Frobenius number F, via the half-set search: decide
    x in S only for 1 <= x <= h, the rest follows from the duality
    x in S <=> F - x not in S (with F/2 always out when F is even).
    """
    if F % 2 == 1:
        h = (F - 1) // 2
        half = F  # unused sentinel
    else:
        h = F // 2 - 1
        half = F // 2
    status = [0] * (h + 1)  # decisions on 1..h

    def is_in(x):
        """Membership of 1 <= x <= F-1 given the low-half decisions
        (0 when still unknown)."""
        if x == half:
            return 2
        if x <= h:
            return status[x]
        d = status[F - x]
        return 0 if d == 0 else 3 - d

    def assign(x, val, trail):
        queue = [(x, val)]
        while queue:
            u, v = queue.pop()
            if status[u] == v:
                continue
            if status[u] != 0:
                return False
            status[u] = v
            trail.append(u)
            if v == 1:
                # closure for sums with every decided member (low or high)
                for a in range(1, F):
                    if is_in(a) != 1:
                        continue
                    s = u + a
                    if s >= F:
                        continue
                    if s == half:
                        return False
                    st = is_in(s)
                    if st == 2:
                        return False
                    if st == 0:
                        if s <= h:
                            queue.append((s, 1))
                        else:
                            queue.append((F - s, 2))
            else:
                # u out (so F - u in): no two members may sum to u, and
                # member + u' pairs are handled from the member side
                for a in range(1, u):
                    if is_in(a) == 1 and is_in(u - a) == 1:
                        return False
                # F - u just became a member: run its closure
                fu = F - u
                for a in range(1, F):
                    if is_in(a) != 1 or a == fu:
                        continue
                    s = fu + a
                    if s >= F:
                        continue
                    if s == half:
                        return False
                    st = is_in(s)
                    if st == 2:
                        return False
                    if st == 0:
                        if s <= h:
                            queue.append((s, 1))
                        else:
                            queue.append((F - s, 2))
        return True

    def emit():
        mask = 1
        for i in range(1, F):
            if is_in(i) == 1:
                mask |= 1 << i
        # closure sanity: the propagation above is complete, but cheap to
        # recheck sums of low members landing in the high range
        return mask

    def rec(x):
        while x <= h and status[x] != 0:
            x += 1
        if x > h:
            yield emit()
            return
        for val in (1, 2):
            trail = []
            if assign(x, val, trail):
                yield from rec(x + 1)
            for u in trail:
                status[u] = 0

    if F == 1:
        yield 1  # <2, 3>: no decisions to make
        return
    yield from rec(1)


def irreducible_with_frobenius(F, max_frobenius=MAX_FROBENIUS):
    """All irreducible (symmetric or pseudo-symmetric) numerical semigroups
    with Frobenius number F, sorted by generating set."""
    if F == -1:
        return [core.N()]
    if F in (0,):
        return []
    if F < -1 or F > max_frobenius:
        raise ResourceLimit("Frobenius enumeration capped at %d" % max_frobenius)
    out = [_record_from_mask(mask, F + 1) for mask in _irreducible_masks(F)]
    out.sort(key=lambda S: S.generators)
    return out


def free_with_frobenius(F, max_frobenius=MAX_FROBENIUS):
    """All free numerical semigroups with Frobenius number F.

    Free semigroups are symmetric, so the irreducible enumeration is
    filtered; embedding dimension above log2(multiplicity) + 1 rules
    freeness out before any arrangement search.
    """
    out = []
    for S in irreducible_with_frobenius(F, max_frobenius):
        if S.embedding_dim > S.multiplicity.bit_length():
            continue
        if classify.is_free(S):
            out.append(S)
    return out
