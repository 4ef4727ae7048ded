import pytest

from iseki.errors import ContractionFails, NotSurjective
from iseki.ideals import all_ideals, ideal_from_members
from iseki.morphisms import (
    check_contraction,
    check_density,
    check_quotient_homeomorphism,
    compose,
    contract_ideal,
    enumerate_homomorphisms,
    extend_ideal,
    induced_map,
    kernel,
)
from iseki.semiring import Homomorphism, bourne_quotient
from iseki.topology import spectrum, up_set


def hom_by_map(s, t, mapping):
    for h in enumerate_homomorphisms(s, t):
        if h.map == tuple(mapping):
            return h
    raise AssertionError(f"no hom {mapping} from {s.id} to {t.id}")


def test_enumeration_examples(boolean, z2, c3):
    assert [h.map for h in enumerate_homomorphisms(boolean, boolean)] == [(0, 1)]
    assert enumerate_homomorphisms(z2, boolean) == []
    assert (0, 1, 2) in {h.map for h in enumerate_homomorphisms(c3, c3)}


def test_identity_always_present(catalog_semirings):
    for s in catalog_semirings:
        if s.n > 4:
            continue
        maps = {h.map for h in enumerate_homomorphisms(s, s)}
        assert tuple(range(s.n)) in maps


def test_kernel_examples(bb, boolean, z4, z2):
    proj = hom_by_map(bb, boolean, (0, 0, 1, 1))  # first-coordinate projection
    assert kernel(bb, boolean, proj).members == (0, 1)  # {0} x B
    ident = hom_by_map(boolean, boolean, (0, 1))
    assert kernel(boolean, boolean, ident).members == (0,)
    mod2 = hom_by_map(z4, z2, (0, 1, 0, 1))
    assert kernel(z4, z2, mod2).members == (0, 2)


def test_contract_and_extend(z4, z2):
    mod2 = hom_by_map(z4, z2, (0, 1, 0, 1))
    zero_t = ideal_from_members(z2, [0])
    assert contract_ideal(z4, z2, mod2, zero_t).members == (0, 2)
    m = ideal_from_members(z4, [0, 2])
    assert extend_ideal(z4, z2, mod2, m).members == (0,)
    zero_s = ideal_from_members(z4, [0])
    assert extend_ideal(z4, z2, mod2, zero_s).members == (0,)


def test_extend_can_be_improper(c3, boolean):
    collapse = hom_by_map(c3, boolean, (0, 1, 1))
    low = ideal_from_members(c3, [0, 1])
    assert not extend_ideal(c3, boolean, collapse, low).is_proper


def test_prime_contraction_universal(catalog_semirings):
    small = [s for s in catalog_semirings if s.n <= 3]
    for s in small:
        for t in small:
            for hom in enumerate_homomorphisms(s, t):
                assert check_contraction(s, t, hom, "prime")["holds"]


def test_maximal_contraction_can_fail(c3, c4):
    jump = hom_by_map(c3, c4, (0, 3, 3))
    rep = check_contraction(c3, c4, jump, "maximal")
    assert not rep["holds"]
    # The maximal ideal {0,1,2} of C4 pulls back to {0}, not maximal in C3.
    assert rep["witness"]["preimage"] == [0]


def test_induced_map_examples(z4, z2, bb, boolean):
    mod2 = hom_by_map(z4, z2, (0, 1, 0, 1))
    ind = induced_map(z4, z2, mod2, "prime")
    assert [p.members for p in ind.source_spectrum.points] == [(0,)]
    assert ind.target_spectrum.points[ind.map[0]].members == (0, 2)
    proj = hom_by_map(bb, boolean, (0, 0, 1, 1))  # first-coordinate projection
    ind = induced_map(bb, boolean, proj, "prime")
    assert ind.target_spectrum.points[ind.map[0]].members == (0, 1)  # {0} x B


def test_induced_map_requires_contraction(c3, c4):
    jump = hom_by_map(c3, c4, (0, 3, 3))
    with pytest.raises(ContractionFails):
        induced_map(c3, c4, jump, "maximal")


def test_quotient_homeomorphism_examples(bb, z4, z2, catalog_semirings):
    ideal = ideal_from_members(bb, [0, 2])
    quotient, qmap = bourne_quotient(bb, ideal)
    rep = check_quotient_homeomorphism(bb, quotient, qmap, "prime")
    assert rep["homeomorphism_onto_kernel_upset"]
    mod2 = hom_by_map(z4, z2, (0, 1, 0, 1))
    rep = check_quotient_homeomorphism(z4, z2, mod2, "prime")
    assert rep["homeomorphism_onto_kernel_upset"]
    assert rep["kernel"] == [0, 2]


def test_quotient_homeomorphism_requires_surjective(boolean, bb):
    diag = hom_by_map(boolean, bb, (0, 3))
    with pytest.raises(NotSurjective):
        check_quotient_homeomorphism(boolean, bb, diag, "prime")


def test_known_gap_surjection_image_smaller_than_kernel_upset(c3, boolean):
    """Pinned counterexample: the collapse C3 -> B with map (0, 1, 1) is a
    surjective homomorphism whose induced image is a proper subset of the
    kernel up-set, so no homeomorphism onto the kernel up-set exists.
    (A ring-style prime correspondence for arbitrary semiring surjections
    is genuinely false; only the closure of the image equals the kernel
    up-set.)"""
    collapse = hom_by_map(c3, boolean, (0, 1, 1))
    rep = check_quotient_homeomorphism(c3, boolean, collapse, "prime")
    assert rep["injective"]
    assert rep["homeomorphism_onto_image"]
    assert not rep["image_equals_kernel_upset"]
    assert not rep["homeomorphism_onto_kernel_upset"]
    density = check_density(c3, boolean, collapse, "prime")
    assert density["closure_image_equals_kernel_upset"]
    assert density["biconditional"]


def test_known_gap_quotient_ideal_upset_form(collapsing3):
    """Pinned counterexample: quotienting by {0,1} collapses the whole
    semiring, so the quotient spectrum is empty while the ideal's up-set
    is not; the kernel form of the embedding still holds."""
    x = ideal_from_members(collapsing3, [0, 1])
    quotient, qmap = bourne_quotient(collapsing3, x)
    assert quotient.n == 1
    rep = check_quotient_homeomorphism(collapsing3, quotient, qmap, "prime")
    assert rep["homeomorphism_onto_kernel_upset"]  # both sides empty
    assert not rep["kernel_proper"]
    ind = induced_map(collapsing3, quotient, qmap, "prime")
    assert ind.image_point_set() == 0
    assert up_set(ind.target_spectrum, x.mask) != 0


def test_density_examples(z4, z2, c3, boolean):
    mod2 = hom_by_map(z4, z2, (0, 1, 0, 1))
    rep = check_density(z4, z2, mod2, "prime")
    assert rep["dense"] and rep["density_rhs"] and rep["biconditional"]
    ident = hom_by_map(c3, c3, (0, 1, 2))
    rep = check_density(c3, c3, ident, "prime")
    assert rep["dense"] and rep["biconditional"]


def test_density_biconditional_on_small_corpus(catalog_semirings):
    small = [s for s in catalog_semirings if s.n <= 3]
    for s in small:
        for t in small:
            for hom in enumerate_homomorphisms(s, t):
                rep = check_density(s, t, hom, "prime")
                assert rep["biconditional"], (s.id, t.id, hom.map)
                assert rep["closure_image_equals_kernel_upset"]
                assert rep["radical_equality_matches_density"]


def test_functoriality_of_induced_maps(z4, z2, boolean, c3):
    """Composition of homomorphisms induces the composite spectrum map."""
    pairs = []
    for s, t, u in ((c3, boolean, boolean), (z4, z2, z2)):
        for first in enumerate_homomorphisms(s, t):
            for second in enumerate_homomorphisms(t, u):
                pairs.append((s, t, u, first, second))
    assert pairs
    for s, t, u, first, second in pairs:
        comp = compose(s, t, u, first, second)
        ind_first = induced_map(s, t, first, "prime")
        ind_second = induced_map(t, u, second, "prime")
        ind_comp = induced_map(s, u, comp, "prime")
        for j in range(ind_comp.source_spectrum.size):
            assert ind_comp.map[j] == ind_first.map[ind_second.map[j]]


def test_quotient_corollary_kernel_form_on_catalog(catalog_semirings):
    for s in catalog_semirings:
        if s.n > 4:
            continue
        for ideal in all_ideals(s, proper_only=True):
            quotient, qmap = bourne_quotient(s, ideal)
            for cls in ("prime", "proper"):
                rep = check_quotient_homeomorphism(s, quotient, qmap, cls)
                assert rep["homeomorphism_onto_kernel_upset"], (
                    s.id,
                    ideal.members,
                    cls,
                )


def test_homomorphism_roundtrip_serialization(z4, z2):
    mod2 = hom_by_map(z4, z2, (0, 1, 0, 1))
    assert mod2 == Homomorphism(source="Z4", target="Z2", map=(0, 1, 0, 1))


def test_hom_search_cap(chain6):
    import numpy as np

    from iseki.errors import SizeLimitExceeded
    from iseki.semiring import validate_semiring

    rng = np.arange(16)
    c16 = validate_semiring(
        np.maximum.outer(rng, rng), np.minimum.outer(rng, rng), 15, id="C16"
    )
    with pytest.raises(SizeLimitExceeded):
        enumerate_homomorphisms(chain6, c16)  # 16^6 raw maps exceeds the cap
