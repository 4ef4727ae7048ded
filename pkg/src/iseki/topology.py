"""Spectra of distinguished ideal classes and their coarse lower topology.

A spectrum is the ordered set of proper ideals of one semiring satisfying
a class predicate (prime, maximal, radical, ...).  Its Iseki space is the
topology whose closed sets are generated, as a closed subbasis, by the
up-sets

    up(a) = { x in points | a is a subset of x }

with a running over all ideals.  Point sets are bitmasks over point
indices, so everything here is exhaustive and exact: the full closed-set
lattice is materialized once per (semiring, class) pair and every
separation/connectedness property is decided by direct search, with
witnesses for every negative verdict.
"""

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import HypothesisUnmet, NoUnitDecomposition, SpectrumTooLarge
from .ideals import (
    Ideal,
    _ideal_masks_all,
    classified_ideals,
    ideal_from_mask,
    intersect_ideals,
    jacobson_radical,
    maximal_ideal_masks,
    product_ideals,
    radical,
    sum_ideals,
)

CLASS_TAGS = (
    "proper",
    "prime",
    "maximal",
    "primary",
    "irreducible",
    "strongly-irreducible",
    "radical",
    "principal",
)

DEFAULT_POINT_CAP = 20


@dataclass(frozen=True)
class SpectrumClass:
    """A decidable, deterministic predicate selecting proper ideals.

    Built-in tags are listed in CLASS_TAGS; ``fg`` takes the generator
    bound ``k``; ``custom`` carries a user predicate of signature
    ``(semiring, ideal, classification) -> bool`` which must be
    deterministic.
    """

    tag: str
    k: int = -1
    name: str = ""
    predicate: object = None

    def display(self):
        if self.tag == "fg":
            return f"fg({self.k})"
        if self.tag == "custom":
            return self.name or "custom"
        return self.tag

    def accepts(self, s, ideal, classification):
        tag = self.tag
        if tag == "proper":
            return True
        if tag == "prime":
            return classification.prime
        if tag == "maximal":
            return classification.maximal
        if tag == "primary":
            return classification.primary
        if tag == "irreducible":
            return classification.irreducible
        if tag == "strongly-irreducible":
            return classification.strongly_irreducible
        if tag == "radical":
            return classification.radical_ideal
        if tag == "principal":
            return classification.principal
        if tag == "fg":
            return classification.min_generators <= self.k
        if tag == "custom":
            return bool(self.predicate(s, ideal, classification))
        raise ValueError(f"unknown spectrum class tag {tag!r}")


def parse_class(text):
    """Parse a class tag like 'prime' or 'fg(2)' / 'fg:2'."""
    text = text.strip()
    if text in CLASS_TAGS:
        return SpectrumClass(tag=text)
    for open_, close in (("(", ")"), (":", "")):
        if text.startswith("fg" + open_) and text.endswith(close):
            body = text[3:-1] if open_ == "(" else text[3:]
            try:
                return SpectrumClass(tag="fg", k=int(body))
            except ValueError:
                break
    raise ValueError(f"unknown spectrum class {text!r}")


@dataclass(frozen=True)
class Spectrum:
    semiring: str
    class_tag: str
    points: tuple

    @property
    def size(self):
        return len(self.points)

    @property
    def full_point_set(self):
        return (1 << len(self.points)) - 1

    def point_masks(self):
        return tuple(p.mask for p in self.points)

    def to_json(self):
        return {
            "semiring": self.semiring,
            "class": self.class_tag,
            "points": [list(p.members) for p in self.points],
        }


def spectrum(s, cls):
    """Points of the class, ascending by ideal bitset; the whole semiring
    is never a point."""
    if isinstance(cls, str):
        cls = parse_class(cls)
    points = tuple(
        ideal
        for ideal, classification in classified_ideals(s)
        if cls.accepts(s, ideal, classification)
    )
    return Spectrum(semiring=s.id, class_tag=cls.display(), points=points)


def up_set(spec, ideal):
    """Point-set bitmask of the points containing the given ideal.

    Accepts an Ideal or a raw element bitmask; improper ideals give the
    empty set since no proper point can contain them.
    """
    mask = ideal.mask if isinstance(ideal, Ideal) else int(ideal)
    out = 0
    for i, p in enumerate(spec.points):
        if (p.mask & mask) == mask:
            out |= 1 << i
    return out


def _point_cap():
    cap = os.environ.get("ISEKI_SIZE_CAP", "").strip()
    if cap:
        try:
            return int(cap)
        except ValueError:
            pass
    return DEFAULT_POINT_CAP


class ClosedFamily:
    """The complete closed-set lattice of one Iseki space.

    ``closed`` lists every closed point-set ascending; ``subbasis`` maps
    each ideal mask of the semiring to its up-set.  Everything is exact:
    both closure operators were iterated to a fixpoint.
    """

    def __init__(self, spec, subbasis, closed):
        self.spectrum = spec
        self.subbasis = subbasis
        self.closed = closed
        self._closed_set = frozenset(closed)
        self.full = spec.full_point_set
        self._irreducible = None

    def is_closed(self, point_set):
        return point_set in self._closed_set

    def closure(self, point_set):
        out = self.full
        for k in self.closed:
            if (k & point_set) == point_set:
                out &= k
        return out

    def point_closure(self, index):
        return self.closure(1 << index)

    def irreducible_closed_sets(self):
        """Nonempty closed sets that are not unions of two proper closed subsets."""
        if self._irreducible is None:
            out = []
            for k in self.closed:
                if k == 0:
                    continue
                subs = [c for c in self.closed if c != k and (c & k) == c]
                if not any(
                    (c1 | c2) == k for i, c1 in enumerate(subs) for c2 in subs[i:]
                ):
                    out.append(k)
            self._irreducible = tuple(out)
        return self._irreducible

    def to_json(self):
        return {
            "points": [list(p.members) for p in self.spectrum.points],
            "closed_set_count": len(self.closed),
        }


def _union_closure(seeds):
    family = set(seeds)
    family.add(0)
    frontier = list(family)
    while frontier:
        new = []
        for a in frontier:
            for b in family:
                u = a | b
                if u not in family:
                    new.append(u)
        for u in new:
            family.add(u)
        frontier = new
    return family


def _intersection_closure(family, full):
    family = set(family)
    family.add(full)
    frontier = list(family)
    while frontier:
        new = []
        for a in frontier:
            for b in family:
                u = a & b
                if u not in family:
                    new.append(u)
        for u in new:
            family.add(u)
        frontier = new
    return family


@lru_cache(maxsize=None)
def _closed_family_cached(s, spec, cap):
    if spec.size > cap:
        raise SpectrumTooLarge(
            f"{spec.size} points exceeds the cap of {cap}"
            " (raise ISEKI_SIZE_CAP to override)"
        )
    subbasis = {m: up_set(spec, m) for m in _ideal_masks_all(s)}
    unions = _union_closure(subbasis.values())
    closed = _intersection_closure(unions, spec.full_point_set)
    return ClosedFamily(spec, subbasis, tuple(sorted(closed)))


def closed_family(s, spec, cap=None):
    """Build (or fetch) the full closed-set lattice for a spectrum."""
    return _closed_family_cached(s, spec, cap if cap is not None else _point_cap())


def closure(s, spec, point_set):
    """Smallest closed superset of a point-set."""
    return closed_family(s, spec).closure(point_set)


def point_set_members(spec, point_set):
    return [list(spec.points[i].members) for i in range(spec.size) if (point_set >> i) & 1]


# ---------------------------------------------------------------------------
# Separation / compactness / connectedness checks; every report is a plain
# dict ready for JSON and every negative verdict carries a witness.
# ---------------------------------------------------------------------------

def check_t0(s, spec):
    fam = closed_family(s, spec)
    closures = [fam.point_closure(i) for i in range(spec.size)]
    for i in range(spec.size):
        for j in range(i + 1, spec.size):
            if closures[i] == closures[j]:
                return {
                    "holds": False,
                    "witness": [
                        list(spec.points[i].members),
                        list(spec.points[j].members),
                    ],
                }
    return {"holds": True, "witness": None}


def check_t1(s, spec):
    """Singleton-closure T1 test plus the all-maximal-ideals predicate.

    The two booleans must agree for every built-in class; both are
    reported so disagreements are visible rather than asserted away.
    """
    fam = closed_family(s, spec)
    t1 = True
    witness = None
    for i in range(spec.size):
        if fam.point_closure(i) != (1 << i):
            t1 = False
            witness = list(spec.points[i].members)
            break
    maximal_set = set(maximal_ideal_masks(s))
    predicate = set(spec.point_masks()) == maximal_set
    return {
        "t1": t1,
        "t1_predicate": predicate,
        "agree": t1 == predicate,
        "witness": witness,
        "degenerate": spec.size == 0,
    }


def check_sober(s, spec):
    """Direct sobriety versus the generic-point criterion.

    Direct: every nonempty irreducible closed set is the closure of
    exactly one point.  Criterion: whenever an ideal has a nonempty
    irreducible up-set, the intersection of all points containing the
    ideal is itself a point.  The theorem says the two agree.
    """
    fam = closed_family(s, spec)
    sober = True
    witness = None
    for k in fam.irreducible_closed_sets():
        generics = [i for i in range(spec.size) if fam.point_closure(i) == k]
        if len(generics) != 1:
            sober = False
            witness = point_set_members(spec, k)
            break

    criterion = True
    criterion_witness = None
    irr = set(fam.irreducible_closed_sets())
    point_mask_set = set(spec.point_masks())
    for m in _ideal_masks_all(s):
        u = fam.subbasis[m]
        if u == 0 or u not in irr:
            continue
        inter = s.full_mask
        for i in range(spec.size):
            if (u >> i) & 1:
                inter &= spec.points[i].mask
        if inter not in point_mask_set:
            criterion = False
            criterion_witness = [i for i in range(s.n) if (m >> i) & 1]
            break

    return {
        "sober": sober,
        "criterion": criterion,
        "agree": sober == criterion,
        "witness": witness,
        "criterion_witness": criterion_witness,
    }


def check_quasi_compact(s, spec, family_size_cap=3):
    """Finite spaces are quasi-compact; the value is the proof mechanism.

    For every ideal family up to the size cap, the intersection of the
    up-sets must equal the up-set of the ideal sum; and when the spectrum
    contains every maximal ideal, an empty up-set intersection forces the
    sum to be improper.
    """
    fam = closed_family(s, spec)
    ideals = [ideal_from_mask(s, m) for m in _ideal_masks_all(s)]
    maximals_present = all(
        m in set(spec.point_masks()) for m in maximal_ideal_masks(s)
    )
    identity_ok = True
    maximal_ok = True
    witness = None
    empty_families = 0
    for size in range(1, family_size_cap + 1):
        for family in combinations(ideals, size):
            inter = fam.full
            for a in family:
                inter &= fam.subbasis[a.mask]
            total = sum_ideals(s, family)
            if fam.subbasis[total.mask] != inter:
                identity_ok = False
                witness = [list(a.members) for a in family]
            if inter == 0:
                empty_families += 1
                if maximals_present and total.is_proper:
                    maximal_ok = False
                    witness = [list(a.members) for a in family]
        if not (identity_ok and maximal_ok):
            break
    return {
        "quasi_compact": True,
        "sum_identity": identity_ok,
        "maximals_in_spectrum": maximals_present,
        "empty_intersection_families": empty_families,
        "empty_intersection_implies_improper_sum": maximal_ok,
        "witness": witness,
    }


def check_fg_spectrum_maximals(s, k):
    """Presence of each maximal ideal in the k-generated spectrum.

    In a finite semiring every ideal is finitely generated, so this
    reports the generator count of each maximal ideal against ``k``
    rather than asserting a theorem.
    """
    spec = spectrum(s, SpectrumClass(tag="fg", k=k))
    rows = []
    all_present = True
    by_mask = {ideal.mask: c for ideal, c in classified_ideals(s)}
    for m in maximal_ideal_masks(s):
        gens = by_mask[m].min_generators
        present = gens <= k
        all_present = all_present and present
        rows.append(
            {
                "maximal": [i for i in range(s.n) if (m >> i) & 1],
                "min_generators": gens,
                "present": present,
            }
        )
    return {
        "k": k,
        "quasi_compact": True,
        "all_maximals_present": all_present,
        "maximals": rows,
        "degenerate": spec.size == 0,
    }


def check_connected(s, spec):
    """Connectivity by exhaustive clopen search; empty spectra are degenerate."""
    if spec.size == 0:
        return {
            "connected": "degenerate",
            "witness": None,
            "zero_ideal_in_points": False,
        }
    fam = closed_family(s, spec)
    witness = None
    for k in fam.closed:
        if k not in (0, fam.full) and fam.is_closed(fam.full ^ k):
            witness = point_set_members(spec, k)
            break
    return {
        "connected": witness is None,
        "witness": witness,
        "zero_ideal_in_points": any(p.mask == 1 for p in spec.points),
    }


def check_irreducible_upsets(s, spec):
    """Each point's up-set must equal the closure of the point and be irreducible."""
    fam = closed_family(s, spec)
    irr = set(fam.irreducible_closed_sets())
    for i, p in enumerate(spec.points):
        u = fam.subbasis[p.mask]
        if fam.point_closure(i) != u or u not in irr:
            return {"holds": False, "witness": list(p.members)}
    return {"holds": True, "witness": None}


def strong_disconnection_witness(s, spec):
    """Two nonempty families of subbasic closed sets whose unions partition
    the space, or None.

    Each side is returned as a list of ideals (the lowest-mask ideal per
    distinct up-set); a side collapses to a single ideal whenever the
    side's union is itself an up-set.
    """
    fam = closed_family(s, spec)
    if spec.size == 0:
        return None
    lowest_ideal_for = {}
    for m in sorted(fam.subbasis):
        u = fam.subbasis[m]
        if u and u not in lowest_ideal_for:
            lowest_ideal_for[u] = m
    unions = sorted(_union_closure(lowest_ideal_for.keys()))
    union_set = set(unions)
    for alpha in unions:
        if alpha in (0, fam.full):
            continue
        beta = fam.full ^ alpha
        if beta in union_set:
            def side(mask):
                if mask in lowest_ideal_for:
                    return [ideal_from_mask(s, lowest_ideal_for[mask])]
                return [
                    ideal_from_mask(s, m)
                    for u, m in sorted(lowest_ideal_for.items())
                    if (u & mask) == u
                ]

            return side(alpha), side(beta)
    return None


def idempotent_from_disconnection(s, spec, witness):
    """Extract a nontrivial idempotent from a strong disconnection.

    Requires the witness, the spectrum to contain every maximal ideal,
    and a zero Jacobson radical.  Reduces the witness families to a
    single ideal per side by taking ideal products, decomposes 1 = u + v
    across the two sides, and returns the verified idempotent u.
    """
    if witness is None:
        raise HypothesisUnmet("witness", "no strong disconnection witness")
    left, right = witness
    if not left or not right:
        raise HypothesisUnmet("witness", "a side of the witness is empty")
    left_union = 0
    for a in left:
        left_union |= up_set(spec, a)
    right_union = 0
    for b in right:
        right_union |= up_set(spec, b)
    if (
        left_union == 0
        or right_union == 0
        or (left_union & right_union) != 0
        or (left_union | right_union) != spec.full_point_set
    ):
        raise HypothesisUnmet("witness", "sides do not partition the spectrum")
    point_mask_set = set(spec.point_masks())
    if not all(m in point_mask_set for m in maximal_ideal_masks(s)):
        raise HypothesisUnmet(
            "maximal-containment", "spectrum misses a maximal ideal"
        )
    if jacobson_radical(s).mask != 1:
        raise HypothesisUnmet("jacobson", "Jacobson radical is not zero")

    x = left[0]
    for a in left[1:]:
        x = product_ideals(s, x, a)
    y = right[0]
    for b in right[1:]:
        y = product_ideals(s, y, b)
    if sum_ideals(s, [x, y]).is_proper:
        raise NoUnitDecomposition("reduced ideals do not sum to the whole semiring")
    if product_ideals(s, x, y).mask != 1:
        raise NoUnitDecomposition("reduced ideal product is not the zero ideal")
    for u in x.members:
        for v in y.members:
            if int(s.add[u, v]) == s.one:
                if int(s.mul[u, u]) != u or u == 0 or u == s.one:
                    raise NoUnitDecomposition(
                        f"decomposition 1 = {u} + {v} fails idempotence"
                    )
                return u
    raise NoUnitDecomposition("no decomposition of 1 across the two sides")


def verify_upset_laws(s, spec, family_size_cap=3):
    """Exhaustively verify the order/lattice laws of the up-set map.

    Laws: (1) antitone, with the zero ideal mapping to the full space and
    the whole semiring to the empty set; (2) up(a) | up(b) inside
    up(a&b) inside up(ab); (3) intersections of up-sets equal the up-set
    of the ideal sum, for families up to the size cap; (4) up(a) contains
    up(radical(a)); (5) every point is a radical ideal if and only if
    up(a) = up(radical(a)) for every ideal a.
    """
    fam = closed_family(s, spec)
    ideals = [ideal_from_mask(s, m) for m in _ideal_masks_all(s)]
    up = fam.subbasis

    zero_up = up.get(1, up_set(spec, 1))
    if zero_up != fam.full:
        return {"holds": False, "law": "zero-full", "witness": None}
    if up.get(s.full_mask, 0) != 0 and s.n > 1:
        return {"holds": False, "law": "improper-empty", "witness": None}

    for a in ideals:
        for b in ideals:
            if (a.mask & b.mask) == a.mask and (up[a.mask] & up[b.mask]) != up[b.mask]:
                return {
                    "holds": False,
                    "law": "antitone",
                    "witness": [list(a.members), list(b.members)],
                }

    for a in ideals:
        for b in ideals:
            inter = intersect_ideals(s, [a, b])
            prod = product_ideals(s, a, b)
            union = up[a.mask] | up[b.mask]
            if (union & up[inter.mask]) != union:
                return {
                    "holds": False,
                    "law": "union-inside-intersection",
                    "witness": [list(a.members), list(b.members)],
                }
            if (up[inter.mask] & up[prod.mask]) != up[inter.mask]:
                return {
                    "holds": False,
                    "law": "intersection-inside-product",
                    "witness": [list(a.members), list(b.members)],
                }

    for size in range(1, family_size_cap + 1):
        for family in combinations(ideals, size):
            inter = fam.full
            for a in family:
                inter &= up[a.mask]
            if up[sum_ideals(s, family).mask] != inter:
                return {
                    "holds": False,
                    "law": "sum-identity",
                    "witness": [list(a.members) for a in family],
                }

    for a in ideals:
        r = radical(s, a)
        if (up[r.mask] & up[a.mask]) != up[r.mask]:
            return {
                "holds": False,
                "law": "radical-up-shrinks",
                "witness": list(a.members),
            }

    all_points_radical = all(
        radical(s, p).mask == p.mask for p in spec.points
    )
    ups_stable = all(up[radical(s, a).mask] == up[a.mask] for a in ideals)
    if all_points_radical != ups_stable:
        return {
            "holds": False,
            "law": "radical-spectrum-equivalence",
            "witness": {
                "all_points_radical": all_points_radical,
                "upsets_radical_stable": ups_stable,
            },
        }

    return {"holds": True, "law": None, "witness": None}
