"""Integer layer of plane branch curves.

A branch is summarized by its characteristic sequences: the Newton-Puiseux
exponents m_k, the gcd chain d_k (d_1 = n, d_{k+1} = gcd(d_k, m_k)) with
quotients e_k = d_k / d_{k+1}, and the intersection values r_k defined by
r_0 = n, r_1 = m_1 and r_{k+1} = r_k e_k + m_{k+1} - m_k.

Local branches have r_k d_k strictly increasing; curves with one place at
infinity have it strictly decreasing (their r-sequence is a delta-sequence).
Either way the semigroup generated by r_0, ..., r_h is free for that
arrangement and its conductor is sum (e_k - 1) r_k - r_0 + 1.
"""

from math import gcd

from . import core
from .errors import GcdNotOne, NonIncreasing, NotDeltaSequence, ResourceLimit

MAX_FROBENIUS = 64


class CharSequences:
    """Characteristic sequence bundle (n; m; d; e; r) of a plane branch.

    m is (m_1..m_h), r is (r_0..r_h), d is (d_1..d_{h+1}) and e is
    (e_1..e_h); attributes keep that 1-based indexing shifted down to 0.
    """

    def __init__(self, n, m, d, e, r):
        self.n = n
        self.m = tuple(m)
        self.d = tuple(d)
        self.e = tuple(e)
        self.r = tuple(r)

    def __eq__(self, other):
        return isinstance(other, CharSequences) and self.r == other.r

    def __repr__(self):
        return "CharSequences(r=%s)" % (list(self.r),)


def _chain(n, seq, kind):
    """gcd chain over n followed by seq; every step must strictly decrease
    and the chain must end at 1."""
    d = [n]
    for x in seq:
        d2 = gcd(d[-1], x)
        if d2 == d[-1] and len(d) <= len(seq):
            raise NonIncreasing("gcd chain stalls at %d (%s divides %s)"
                                % (d2, d2, x))
        d.append(d2)
    if d[-1] != 1:
        raise GcdNotOne("%s sequence has gcd %d, not 1" % (kind, d[-1]))
    e = [d[k] // d[k + 1] for k in range(len(seq))]
    return d, e


def char_from_m(n, m_seq):
    """Characteristic sequences from the multiplicity n and the exponent
    sequence m_1..m_h."""
    if n <= 0:
        raise GcdNotOne("n must be positive")
    m = list(m_seq)
    if n == 1:
        if m:
            raise NonIncreasing("n = 1 admits no further exponents")
        return CharSequences(1, [], [1], [], [1])
    if not m:
        raise GcdNotOne("m sequence empty but n = %d > 1" % n)
    d, e = _chain(n, m, "m")
    r = [n, m[0]]
    for k in range(1, len(m)):
        r.append(r[k] * e[k - 1] + m[k] - m[k - 1])
    return CharSequences(n, m, d, e, r)


def char_from_r(r_seq):
    """Characteristic sequences recovered from the r-sequence r_0..r_h."""
    r = list(r_seq)
    if not r or r[0] <= 0:
        raise GcdNotOne("r sequence must start with a positive n")
    n = r[0]
    if n == 1:
        if len(r) > 1:
            raise NonIncreasing("n = 1 admits no further values")
        return CharSequences(1, [], [1], [], [1])
    if len(r) == 1:
        raise GcdNotOne("r sequence has gcd %d, not 1" % n)
    d, e = _chain(n, r[1:], "r")
    m = [r[1]]
    for k in range(1, len(r) - 1):
        m.append(r[k + 1] - r[k] * e[k - 1] + m[k - 1])
    return CharSequences(n, m, d, e, r)


def _is_free_sequence(c):
    """e_k * r_k in <r_0, ..., r_{k-1}> for every k >= 1."""
    for k in range(1, len(c.r)):
        dk = c.d[k - 1]
        val = c.e[k - 1] * c.r[k]
        if val % dk != 0:
            return False
        T = core.from_generators([a // dk for a in c.r[:k]])
        if not core.contains(T, val // dk):
            return False
    return True


def is_local_branch(c):
    """Is c realized by a local plane branch?  Needs the free condition and
    r_k d_k strictly increasing."""
    if c.n == 1:
        return True
    if not _is_free_sequence(c):
        return False
    h = len(c.r) - 1
    return all(c.r[k] * c.d[k - 1] < c.r[k + 1] * c.d[k]
               for k in range(1, h))


def is_delta_sequence(c):
    """Is c the r-sequence of a curve with one place at infinity?  Needs
    r_1 < r_0 with r_1 not dividing r_0 (else a coordinate change would
    shrink the sequence), the free condition, and r_k d_k strictly
    decreasing."""
    if c.n == 1:
        return False
    if c.r[1] >= c.r[0] or c.r[0] % c.r[1] == 0:
        return False
    if not _is_free_sequence(c):
        return False
    h = len(c.r) - 1
    return all(c.r[k] * c.d[k - 1] > c.r[k + 1] * c.d[k]
               for k in range(1, h))


def semigroup_of(c):
    """The numerical semigroup generated by the r-sequence."""
    return core.from_generators(list(c.r))


def conductor_of(c):
    """Conductor of the branch semigroup: sum (e_k - 1) r_k - n + 1."""
    return sum((e - 1) * r for e, r in zip(c.e, c.r[1:])) - c.n + 1


def infinity_dual(c):
    """From the delta-sequence of a curve with one place at infinity to the
    r-sequence of the dual local branch: rbar_k = n * (n / d_k) - r_k.

    The conductors of the two sides add up to (n - 1) * (n - 2).
    """
    if not is_delta_sequence(c):
        raise NotDeltaSequence("%s is not a delta-sequence" % (list(c.r),))
    n = c.n
    rbar = [n] + [n * (n // c.d[k - 1]) - c.r[k] for k in range(1, len(c.r))]
    return char_from_r(rbar)


def is_coordinate_like(c):
    """r_k = d_{k+1} for all k >= 1 (the curve is a coordinate)."""
    return all(c.r[k] == c.d[k] for k in range(1, len(c.r)))


def is_minimal_int(c):
    """r_k = 2 d_{k+1} for all k >= 1."""
    return all(c.r[k] == 2 * c.d[k] for k in range(1, len(c.r)))


def delta_sequences_with_frobenius(F, max_frobenius=MAX_FROBENIUS):
    """All delta-sequences whose semigroup has Frobenius number F, sorted
    lexicographically.  Sequences, not semigroups: several sequences may
    generate the same semigroup, and r_0 need not be a minimal generator."""
    if F > max_frobenius:
        raise ResourceLimit("delta-sequence search capped at F = %d" % max_frobenius)
    out = []

    def extend(seq, ds, total):
        # seq = [r_0 .. r_{k-1}], ds = matching gcd chain [d_1 .. d_k],
        # total = running sum of (e_j - 1) r_j; a finished sequence has
        # Frobenius number total - r_0
        d = ds[-1]
        if len(seq) == 1:
            bound = seq[0] - 1              # r_1 < r_0
        else:
            bound = (seq[-1] * ds[-2] - 1) // d   # r_k d_k < r_{k-1} d_{k-1}
        for r in range(1, bound + 1):
            if len(seq) == 1 and seq[0] % r == 0:
                continue  # r_1 dividing r_0 is a disguised shorter sequence
            d2 = gcd(d, r)
            if d2 == d:
                continue
            e = d // d2
            # free condition: e * r in <seq>, tested after dividing by d
            T = core.from_generators([a // d for a in seq])
            if (e * r) % d != 0 or not core.contains(T, e * r // d):
                continue
            total2 = total + (e - 1) * r
            if total2 - seq[0] > F:
                continue
            if d2 == 1:
                if total2 - seq[0] == F:
                    out.append(seq + [r])
            else:
                extend(seq + [r], ds + [d2], total2)

    for n in range(2, F + 3):
        extend([n], [n], 0)
    out.sort()
    return out
