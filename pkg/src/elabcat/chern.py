"""Total Chern classes of abelian character lists, mod p.

A weight is a character of (Z/p)^n, written as its exponent vector; its
first Chern class is the corresponding linear form in n variables.  The
total Chern class of a list of weights is the product of (1 + form) over
the list, with Whitney multiplicativity by construction.  The regular
weight list (every character once) produces the Dickson invariants, whose
nonzero degrees are p^n - p^j for 0 <= j < n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .elabs import ElabCatalog
from .errors import CatalogMismatch
from .fpmat import gl_generators
from .fppoly import FpPolynomial
from .groups import FiniteGroup

Weight = tuple[int, ...]


@dataclass(frozen=True)
class WeightList:
    """A finite multiset of characters of (Z/p)^rank, order preserved."""

    prime: int
    rank: int
    weights: tuple[Weight, ...]

    def __post_init__(self):
        for w in self.weights:
            if len(w) != self.rank:
                raise ValueError(f"weight {w} has length != {self.rank}")
            if any(not 0 <= x < self.prime for x in w):
                raise ValueError(f"weight {w} not reduced mod {self.prime}")

    def __len__(self) -> int:
        return len(self.weights)

    def repeat(self, k: int) -> "WeightList":
        return WeightList(self.prime, self.rank, self.weights * k)

    def concat(self, other: "WeightList") -> "WeightList":
        if other.prime != self.prime or other.rank != self.rank:
            raise ValueError("weight lists over different groups")
        return WeightList(self.prime, self.rank, self.weights + other.weights)


def make_weights(p: int, rank: int, rows: Sequence[Sequence[int]]) -> WeightList:
    return WeightList(p, rank, tuple(tuple(int(x) % p for x in r) for r in rows))


def regular_weights(p: int, n: int) -> WeightList:
    """Every character of (Z/p)^n exactly once, in lex order."""
    return WeightList(p, n, tuple(itertools.product(range(p), repeat=n)))


def total_chern(weights: WeightList) -> FpPolynomial:
    """Product of (1 + linear form of w) over the weight list."""
    p, n = weights.prime, weights.rank
    out = FpPolynomial.one(p, n)
    for w in weights.weights:
        out = out * (FpPolynomial.one(p, n) + FpPolynomial.linear_form(p, w))
    return out


def chern_class(weights: WeightList, i: int) -> FpPolynomial:
    return total_chern(weights).homogeneous_part(i)


@dataclass(frozen=True)
class DicksonReport:
    prime: int
    rank: int
    expected_degrees: tuple[int, ...]
    found_degrees: tuple[int, ...]
    degrees_ok: bool
    invariant_ok: bool
    total: FpPolynomial

    @property
    def ok(self) -> bool:
        return self.degrees_ok and self.invariant_ok


def dickson_check(p: int, n: int) -> DicksonReport:
    """Total Chern class of the regular weight list, with two checks:
    the positive degrees present are exactly {p^n - p^j : 0 <= j < n},
    and the polynomial is invariant under generators of GL_n(F_p).
    """
    D = total_chern(regular_weights(p, n))
    expected = tuple(sorted(p ** n - p ** j for j in range(n)))
    found = tuple(d for d in D.degrees() if d > 0)
    invariant = all(D.substitute_linear(g) == D for g in gl_generators(p, n))
    return DicksonReport(p, n, expected, found, found == expected, invariant, D)


def frobenius_identity_check(weights: WeightList, m: int) -> bool:
    """Does the (p*m)-fold total Chern equal the m-fold one to the p-th power."""
    p = weights.prime
    lhs = total_chern(weights.repeat(p * m))
    rhs = total_chern(weights.repeat(m)) ** p
    return lhs == rhs


def whitney_product_check(w1: WeightList, w2: WeightList) -> bool:
    """Does concatenation multiply total Chern classes."""
    return total_chern(w1.concat(w2)) == total_chern(w1) * total_chern(w2)


def regular_rep_product(p: int, n: int) -> FpPolynomial:
    """Product over variables of (1 + t_i + ... + t_i^(p-1)).

    Expanding it enumerates every exponent vector in {0,...,p-1}^n once,
    so this is the multiplicative form of the regular character list; it
    is symmetric and reduces to the elementary symmetric basis.
    """
    out = FpPolynomial.one(p, n)
    for i in range(n):
        factor = FpPolynomial.zero(p, n)
        for k in range(p):
            factor = factor + FpPolynomial.variable(p, n, i) ** k
        out = out * factor
    return out


# -- characters and p-regularity --------------------------------------


@dataclass(frozen=True)
class CharacterVector:
    """Integer class function on a fully enumerated group.

    values[c] is the value on conjugacy class c, in the group's canonical
    class order, so constancy on classes holds by construction.
    """

    group: FiniteGroup
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.group.conjugacy.class_count():
            raise ValueError("one value per conjugacy class required")

    def at_element(self, i: int) -> int:
        return self.values[self.group.conjugacy.class_of[i]]

    @property
    def degree_value(self) -> int:
        return self.at_element(self.group.identity_index)


def regular_character(G: FiniteGroup) -> CharacterVector:
    ident = G.identity_index
    values = tuple(len(G) if rep == ident else 0
                   for rep in G.conjugacy.reps)
    return CharacterVector(G, values)


def permutation_character(G: FiniteGroup) -> CharacterVector:
    values = tuple(sum(1 for x, y in enumerate(G.element(rep)) if x == y)
                   for rep in G.conjugacy.reps)
    return CharacterVector(G, values)


def trivial_character(G: FiniteGroup) -> CharacterVector:
    return CharacterVector(G, (1,) * G.conjugacy.class_count())


def p_regular_failures(G: FiniteGroup, p: int, chi: CharacterVector,
                       catalog: ElabCatalog) -> list[str]:
    """Reasons chi fails the p-regularity test; empty when it passes.

    The conditions: positive degree, vanishing on every element of order
    p, and degree divisible by the order of every maximal elementary
    abelian p-subgroup.  Together these say each maximal subgroup sees
    chi as a multiple of its regular character.
    """
    if chi.group is not G:
        raise CatalogMismatch("character belongs to a different group")
    if catalog.group is not G or catalog.prime != p:
        raise CatalogMismatch("catalog belongs to a different group or prime")
    failures = []
    deg = chi.degree_value
    if deg <= 0:
        failures.append(f"degree {deg} is not positive")
    orders = G.element_orders
    for c, rep in enumerate(G.conjugacy.reps):
        if orders[rep] == p and chi.values[c] != 0:
            failures.append(
                f"value {chi.values[c]} on class {c} of order-{p} elements")
    for c in catalog.maximal_class_indices():
        E = catalog.subgroups[catalog.class_reps[c]]
        if E.order > 0 and deg % E.order != 0:
            failures.append(
                f"degree {deg} not divisible by maximal subgroup order {E.order}")
    return failures


def p_regular_check(G: FiniteGroup, p: int, chi: CharacterVector,
                    catalog: ElabCatalog) -> bool:
    return not p_regular_failures(G, p, chi, catalog)
