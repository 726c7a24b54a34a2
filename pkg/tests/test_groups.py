import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elabcat.errors import CapExceeded, InvalidPermutation
from elabcat.groups import (centralizer, close_generators, compose,
                            conjugacy_classes, conjugate, from_elements,
                            identity_perm, inverse, normalizer, perm_order,
                            perm_power, transporter)

A4_GENS = [(1, 0, 3, 2), (2, 0, 1, 3)]


def a4():
    return close_generators(4, A4_GENS, name="a4")


def perms(degree):
    return st.permutations(range(degree)).map(tuple)


class TestPerms:
    def test_identity(self):
        assert identity_perm(4) == (0, 1, 2, 3)

    def test_compose_applies_left_then_right(self):
        p = (1, 2, 0)
        q = (0, 2, 1)
        # x -> p[x] -> q[p[x]]
        assert compose(p, q) == tuple(q[p[x]] for x in range(3))

    def test_bad_perm_rejected(self):
        with pytest.raises(InvalidPermutation):
            close_generators(3, [(0, 0, 1)])

    @given(perms(5), perms(5), perms(5))
    @settings(max_examples=60, deadline=None)
    def test_compose_associative(self, p, q, r):
        assert compose(compose(p, q), r) == compose(p, compose(q, r))

    @given(perms(5))
    @settings(max_examples=60, deadline=None)
    def test_inverse(self, p):
        assert compose(p, inverse(p)) == identity_perm(5)
        assert compose(inverse(p), p) == identity_perm(5)

    @given(perms(5), perms(5), perms(5))
    @settings(max_examples=60, deadline=None)
    def test_conjugate_is_right_action(self, g, h, e):
        one_step = conjugate(compose(g, h), e)
        two_step = conjugate(h, conjugate(g, e))
        assert one_step == two_step

    def test_perm_order_and_power(self):
        c3 = (1, 2, 0)
        assert perm_order(c3) == 3
        assert perm_power(c3, 3) == identity_perm(3)
        assert perm_power(c3, -1) == inverse(c3)


class TestFiniteGroup:
    def test_a4_order(self):
        G = a4()
        assert G.order == 12
        assert G.element(0) == identity_perm(4)

    def test_elements_sorted_and_indexed(self):
        G = a4()
        assert list(G.elements) == sorted(G.elements)
        for i, e in enumerate(G.elements):
            assert G.index(e) == i

    def test_element_orders(self):
        G = a4()
        orders = sorted(G.element_orders)
        assert orders == [1] + [2] * 3 + [3] * 8

    def test_conjugacy_class_sizes(self):
        G = a4()
        table = G.conjugacy
        assert sorted(table.sizes) == [1, 3, 4, 4]
        # the witness stored for each element conjugates its class
        # representative onto it
        for i in range(G.order):
            c = table.class_of[i]
            w = G.element(table.witness[i])
            assert conjugate(w, G.element(table.reps[c])) == G.element(i)

    def test_transporter_is_centralizer_coset(self):
        G = a4()
        table = G.conjugacy
        a = next(i for i in range(G.order) if G.element_orders[i] == 2)
        b = next(i for i in range(a + 1, G.order)
                 if G.element_orders[i] == 2 and table.class_of[i] == table.class_of[a])
        T = transporter(G, G.element(a), G.element(b))
        assert len(T) == len(G.centralizer_indices(a))
        for g in T:
            assert conjugate(g, G.element(a)) == G.element(b)

    def test_transporter_empty_across_classes(self):
        G = a4()
        two = next(i for i in range(G.order) if G.element_orders[i] == 2)
        three = next(i for i in range(G.order) if G.element_orders[i] == 3)
        assert transporter(G, G.element(two), G.element(three)) == []

    def test_centralizer_and_normalizer(self):
        G = a4()
        v = [i for i in range(G.order) if G.element_orders[i] in (1, 2)]
        C = centralizer(G, [G.element(i) for i in v])
        assert C.order == 4
        N = normalizer(G, [G.element(i) for i in v])
        assert N.order == 12

    def test_conjugacy_classes_wrapper(self):
        G = a4()
        assert sorted(conjugacy_classes(G).sizes) == [1, 3, 4, 4]

    def test_element_cap(self):
        with pytest.raises(CapExceeded) as e:
            close_generators(5, [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)],
                             element_cap=30)
        assert e.value.guard == "element_cap"

    def test_from_elements_roundtrip(self):
        G = a4()
        H = from_elements(4, list(G.elements), name="again")
        assert H.elements == G.elements

    def test_inverse_indices(self):
        G = a4()
        inv = G.inverse_indices
        for i in range(G.order):
            assert compose(G.element(i), G.element(inv[i])) == identity_perm(4)

    def test_conjugate_indices_batch(self):
        G = a4()
        targets = np.arange(G.order)
        for g in range(G.order):
            got = G.conjugate_indices(g, targets)
            for i in range(G.order):
                want = G.index(conjugate(G.element(g), G.element(i)))
                assert got[i] == want
