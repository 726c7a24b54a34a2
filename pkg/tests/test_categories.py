from fractions import Fraction

import pytest

from elabcat import categories as cg
from elabcat.elabs import enumerate_elabs
from elabcat.errors import (CatalogMismatch, NotMaximal, SizeGuardExceeded)
from elabcat.groups import close_generators, conjugate

A4_GENS = [(1, 0, 3, 2), (2, 0, 1, 3)]


def a4():
    return close_generators(4, A4_GENS, name="a4")


def a4_catalog():
    return enumerate_elabs(a4(), 2)


class TestKinds:
    def test_labels_roundtrip(self):
        for kind in (cg.A, cg.APRIME, cg.CREG, cg.aprime_d(2), cg.a_n(3)):
            assert cg.CategoryKind.parse(kind.label()) == kind

    def test_parse_rejects_garbage(self):
        for text in ("B", "An()", "An(-1)", "AprimeD(0)", "Aprime(2)"):
            with pytest.raises(ValueError):
                cg.CategoryKind.parse(text)

    def test_aprime_is_an1(self):
        cat = a4_catalog()
        V = cat.subgroups[4]
        assert cg.hom_matrices(cg.APRIME, V, V) == cg.hom_matrices(cg.a_n(1), V, V)

    def test_aprime_d_requires_divisor(self):
        with pytest.raises(ValueError):
            cg.aprime_d(0)
        # d must divide p - 1 at hom time
        cat = a4_catalog()
        V = cat.subgroups[4]
        with pytest.raises(ValueError):
            cg.hom_matrices(cg.aprime_d(3), V, V)


class TestLinearHom:
    def test_validates_shape_and_rank(self):
        cat = a4_catalog()
        V = cat.subgroups[4]
        E1 = cat.subgroups[1]
        with pytest.raises(ValueError):
            cg.LinearHom(V, V, ((1, 0),))
        with pytest.raises(ValueError):
            cg.LinearHom(V, V, ((1, 1), (1, 1)))
        h = cg.LinearHom(E1, V, ((1,), (1,)))
        assert not h.is_bijective()
        k = cg.LinearHom(V, V, ((0, 1), (1, 0)))
        assert k.is_bijective()
        assert k.inverse_hom().matrix == ((0, 1), (1, 0))

    def test_apply_tracks_matrix(self):
        cat = a4_catalog()
        G = cat.group
        V = cat.subgroups[4]
        h = cg.LinearHom(V, V, ((0, 1), (1, 0)))
        for i in V.elements:
            vec = V.vector_of_index(i)
            img = h.apply_index(i)
            want = tuple(sum(h.matrix[r][c] * vec[c] for c in range(2)) % 2
                         for r in range(2))
            assert V.vector_of_index(img) == want
        # composition in diagram order
        hh = h.compose_with(h)
        assert hh.matrix == ((1, 0), (0, 1))


class TestHomSets:
    def test_a4_counts(self):
        cat = a4_catalog()
        V = cat.subgroups[4]
        E1 = cat.subgroups[1]
        assert len(cg.hom_matrices(cg.A, V, V)) == 3
        assert len(cg.hom_matrices(cg.APRIME, V, V)) == 6
        assert len(cg.hom_matrices(cg.CREG, V, V)) == 6
        assert len(cg.hom_matrices(cg.a_n(2), V, V)) == 3
        assert len(cg.hom_matrices(cg.A, E1, V)) == 3
        assert len(cg.hom_matrices(cg.A, V, E1)) == 0

    def test_a_homs_have_single_witness(self):
        cat = a4_catalog()
        G = cat.group
        V = cat.subgroups[4]
        for M in cg.hom_matrices(cg.A, V, V):
            h = cg.LinearHom(V, V, M)
            witnesses = [g for g in range(G.order)
                         if all(G.index(conjugate(G.element(g), G.element(i)))
                                == h.apply_index(i)
                                for i in V.elements)]
            assert witnesses

    def test_aprime_homs_elementwise_conjugate(self):
        cat = a4_catalog()
        G = cat.group
        table = G.conjugacy
        V = cat.subgroups[4]
        for M in cg.hom_matrices(cg.APRIME, V, V):
            h = cg.LinearHom(V, V, M)
            for i in V.elements:
                assert table.class_of[i] == table.class_of[h.apply_index(i)]

    def test_hom_in_kind(self):
        cat = a4_catalog()
        V = cat.subgroups[4]
        swap = cg.LinearHom(V, V, ((0, 1), (1, 0)))
        assert cg.hom_in_kind(cg.APRIME, swap)
        assert not cg.hom_in_kind(cg.A, swap)

    def test_standalone_requires_same_ambient(self):
        cat = a4_catalog()
        other = enumerate_elabs(close_generators(4, A4_GENS, name="b"), 2)
        with pytest.raises(CatalogMismatch):
            cg.hom_matrices(cg.A, cat.subgroups[4], other.subgroups[4])

    def test_trivial_domain_single_hom(self):
        cat = a4_catalog()
        one = cat.subgroups[0]
        V = cat.subgroups[4]
        assert cg.hom_matrices(cg.A, one, V) == (((), ()),)
        assert cg.hom_matrices(cg.A, one, one) == ((),)


class TestCategory:
    def test_lazy_and_materialized_agree(self):
        cat = a4_catalog()
        C = cg.build_category(cg.A, cat)
        lazy = {(i, j): C.hom(i, j) for i in range(5) for j in range(5)}
        C.materialize()
        for key, homs in C.hom_dict().items():
            assert lazy[key] == homs
        assert C.total_homs() == 26

    def test_hom_count_guard(self):
        cat = a4_catalog()
        C = cg.build_category(cg.CREG, cat)
        with pytest.raises(SizeGuardExceeded) as e:
            C.materialize(hom_count_cap=10)
        assert e.value.guard == "hom_count_cap"

    def test_provenance_tags(self):
        cat = a4_catalog()
        assert cg.build_category(cg.A, cat).provenance == "A"
        homs = {(0, 0): ((),)}
        assert cg.explicit_category(cat, homs).provenance == "explicit"

    def test_maximal_objects_and_components(self):
        cat = a4_catalog()
        assert cg.maximal_objects(cg.build_category(cg.A, cat)) == [[4]]
        assert cg.maximal_objects(cg.build_category(cg.APRIME, cat)) == [[4]]
        assert cg.minimal_prime_count(cg.A, cat) == 1

    def test_categories_equal_verdict(self):
        cat = a4_catalog()
        same = cg.categories_equal(cg.A, cg.a_n(2), cat)
        assert same.equal and bool(same)
        diff = cg.categories_equal(cg.A, cg.APRIME, cat)
        assert not diff.equal and not bool(diff)
        assert diff.only_in == "Aprime"
        assert diff.domain_class == 2 and diff.codomain_class == 2
        assert diff.matrix == ((0, 1), (1, 0))

    def test_generic_fibre_index(self):
        cat = a4_catalog()
        V = cat.subgroups[4]
        assert cg.generic_fibre_index(cat, V) == Fraction(2)
        with pytest.raises(NotMaximal):
            cg.generic_fibre_index(cat, cat.subgroups[1])

    def test_weyl_image_matches_a_homs(self):
        cat = a4_catalog()
        G = cat.group
        V = cat.subgroups[4]
        assert set(cg.weyl_image(G, V)) == set(cg.hom_matrices(cg.A, V, V))


class TestInclusions:
    def test_chain_on_a4(self):
        cat = a4_catalog()
        reps = cat.class_reps
        for i in reps:
            for j in reps:
                E, F = cat.subgroups[i], cat.subgroups[j]
                a = set(cg.hom_matrices(cg.A, E, F))
                an2 = set(cg.hom_matrices(cg.a_n(2), E, F))
                an1 = set(cg.hom_matrices(cg.a_n(1), E, F))
                ap = set(cg.hom_matrices(cg.APRIME, E, F))
                reg = set(cg.hom_matrices(cg.CREG, E, F))
                assert a <= an2 <= an1 <= reg
                assert an1 == ap
                # p-rank of A_4 at p=2 is 2, so the rank-2 kind is A
                assert an2 == a
