"""Plain-dict result builders shared by the HTTP service and the CLI.

Every function takes ordinary Python values and returns JSON-ready dicts
using a stable key vocabulary: generators, frobenius, conductor, genus,
gaps, apery, pf, type, special_gaps, classification, betti, presentation,
invariants, curve.
"""

from . import classify
from . import core
from . import curves
from . import enumeration
from . import invariants as inv
from . import presentations as pres


def semigroup(gens):
    """Parse a generator list into a semigroup."""
    return core.from_generators(list(gens))


def record(S):
    """The basic serialization of a semigroup."""
    return {
        "generators": list(S.generators),
        "frobenius": S.frobenius,
        "conductor": S.conductor,
        "genus": core.genus(S),
        "gaps": core.gaps(S),
    }


def from_json(doc):
    """Rebuild a semigroup from any dict carrying a 'generators' key."""
    return core.from_generators(list(doc["generators"]))


def info(S):
    out = record(S)
    ne = core.notable_elements(S)
    out["multiplicity"] = ne["multiplicity"]
    out["embedding_dim"] = ne["embedding_dim"]
    out["sporadic_count"] = ne["sporadic_count"]
    out["apery"] = core.apery(S, S.multiplicity)
    out["pf"] = core.pseudo_frobenius(S)
    out["type"] = core.type_of(S)
    return out


def apery(S, n):
    return {
        "generators": list(S.generators),
        "apery": core.apery(S, n) if core.contains(S, n) and n > 0
        else core.apery_wrt_integer(S, n),
        "n": n,
    }


def classification(S):
    return {
        "generators": list(S.generators),
        "classification": {
            "symmetric": classify.is_symmetric(S),
            "pseudo_symmetric": classify.is_pseudo_symmetric(S),
            "irreducible": classify.is_irreducible(S),
            "med": classify.is_med(S),
            "telescopic": classify.is_telescopic(S),
            "free": classify.is_free(S) if S.embedding_dim <= 12 else None,
        },
        "pf": core.pseudo_frobenius(S),
        "type": core.type_of(S),
        "special_gaps": classify.special_gaps(S),
    }


def decompose(S):
    comps = classify.decompose_into_irreducibles(S)
    return {
        "generators": list(S.generators),
        "special_gaps": classify.special_gaps(S),
        "components": [record(T) for T in comps],
    }


def oversemigroups(S):
    over = classify.oversemigroups(S)
    return {
        "generators": list(S.generators),
        "count": len(over),
        "oversemigroups": [list(T.generators) for T in over],
    }


def med(S):
    T = classify.med_closure(S, S.multiplicity)
    return {
        "generators": list(S.generators),
        "med": classify.is_med(S),
        "closure": record(T),
    }


def free(S):
    out = {
        "generators": list(S.generators),
        "telescopic": classify.is_telescopic(S),
        "free": classify.is_free(S),
    }
    if out["free"]:
        out["arrangements"] = classify.free_arrangements(S)
    return out


def presentation(S):
    rels = pres.minimal_presentation(S)
    return {
        "generators": list(S.generators),
        "betti": pres.betti_elements(S),
        "presentation": [[list(a), list(b)] for a, b in rels],
        "binomials": pres.binomials_text(S),
    }


def betti(S):
    return {"generators": list(S.generators), "betti": pres.betti_elements(S)}


def factorize(S, s):
    facts = pres.factorizations(S, s)
    out = {
        "generators": list(S.generators),
        "element": s,
        "factorizations": [list(z) for z in facts],
        "r_classes": [[list(z) for z in cls] for cls in pres.r_classes(S, s)]
        if core.contains(S, s) else [],
    }
    if facts:
        out["lengths"] = sorted({sum(z) for z in facts})
        out["delta"] = sorted(inv.delta_of(S, s))
        out["elasticity"] = str(inv.elasticity_of(S, s))
    return out


def invariant_report(S, s=None):
    rep = inv.invariant_report(S)
    out = {
        "generators": list(S.generators),
        "invariants": {
            "elasticity": str(rep["elasticity"]),
            "delta_min": rep["delta_min"],
            "delta_max": rep["delta_max"],
            "catenary": rep["catenary"],
            "omega": rep["omega"],
        },
        "betti": rep["betti"],
    }
    if s is not None:
        out["element"] = s
        out["invariants"]["lengths"] = inv.lengths(S, s)
        out["invariants"]["delta"] = sorted(inv.delta_of(S, s))
        out["invariants"]["elasticity_of_element"] = str(inv.elasticity_of(S, s))
        out["invariants"]["catenary_of_element"] = inv.catenary_of(S, s)
        out["invariants"]["omega_of_element"] = inv.omega_of(S, s)
    return out


def enumerate_semigroups(genus=None, frobenius=None, irreducible=None,
                         free_f=None, delta=None, count_only=False, limit=None):
    """Dispatch for the enumeration flavors; exactly one selector is set."""
    chosen = [x for x in (genus, frobenius, irreducible, free_f, delta)
              if x is not None]
    if len(chosen) != 1:
        raise ValueError("exactly one of genus/frobenius/irreducible/free/delta")
    if genus is not None:
        if count_only:
            return {"genus": genus, "count": enumeration.count_by_genus(genus)[-1]
                    if genus > 0 else 1}
        items = enumeration.with_genus(genus)
        key = {"genus": genus}
    elif frobenius is not None:
        items = enumeration.with_frobenius(frobenius)
        key = {"frobenius": frobenius}
    elif irreducible is not None:
        items = enumeration.irreducible_with_frobenius(irreducible)
        key = {"frobenius": irreducible, "irreducible": True}
    elif free_f is not None:
        items = enumeration.free_with_frobenius(free_f)
        key = {"frobenius": free_f, "free": True}
    else:
        seqs = curves.delta_sequences_with_frobenius(delta)
        out = {"frobenius": delta, "delta_sequences": seqs,
               "count": len(seqs)}
        return out
    if limit is not None:
        items = items[:limit]
    out = dict(key)
    out["count"] = len(items)
    if not count_only:
        out["semigroups"] = [list(S.generators) for S in items]
    return out


def curve(r_seq, dual=False):
    c = curves.char_from_r(list(r_seq))
    S = curves.semigroup_of(c)

    def pack(cc):
        return {
            "r": list(cc.r),
            "m": list(cc.m),
            "d": list(cc.d),
            "e": list(cc.e),
            "n": cc.n,
            "local_branch": curves.is_local_branch(cc),
            "delta_sequence": curves.is_delta_sequence(cc),
            "conductor": curves.conductor_of(cc),
        }

    out = {
        "generators": list(S.generators),
        "frobenius": S.frobenius,
        "curve": pack(c),
    }
    if dual:
        d = curves.infinity_dual(c)
        out["dual"] = pack(d)
        out["duality_sum"] = curves.conductor_of(c) + curves.conductor_of(d)
    return out
