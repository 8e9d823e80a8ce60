import itertools
import math
import random
from fractions import Fraction

import pytest

from turankit import (
    ExpansionVector,
    Flag,
    Hypergraph,
    binomial,
    catalog_flags,
    chain_lift,
    disjoint_union,
    enumerate_all,
    extension_density,
    flag_code,
    induced_density,
    linear_expansion,
    nonedge_core_size,
    pair_density,
    square_expansion,
    type_embeddings,
    typed_code,
)


def complete_flag(m, k):
    """Complete m-vertex flag whose first m-1 vertices form the type."""
    return Flag(
        Hypergraph.complete(m, k),
        tuple(range(m - 1)),
        Hypergraph.complete(m - 1, k),
    )


def test_flag_validation():
    cat = catalog_flags()
    assert cat.l_a.size == 4 and cat.l_a.type_size == 2
    with pytest.raises(ValueError):
        # host restricted to the typed vertices has an edge, type is edgeless
        Flag(Hypergraph.from_edges(4, 3, [(0, 1, 2)]), (0, 1, 2), Hypergraph.empty(3, 3))
    with pytest.raises(ValueError):
        Flag(Hypergraph.empty(4, 3), (0, 0), Hypergraph.empty(2, 3))


def test_type_embeddings_counts():
    cat = catalog_flags()
    rng = random.Random(3)
    for _ in range(5):
        H = Hypergraph(6, 3, rng.getrandbits(20))
        assert len(type_embeddings(cat.p1, H)) == 6
    assert type_embeddings(cat.p3, Hypergraph.complete(6, 3)) == []


def test_type_embeddings_q4_brute_force():
    cat = catalog_flags()
    two = disjoint_union(Hypergraph.complete(3, 3), Hypergraph.complete(3, 3))
    fast = type_embeddings(cat.q4, two)
    slow = []
    for theta in itertools.permutations(range(6), 4):
        ok = True
        for sub in itertools.combinations(range(4), 3):
            want = cat.q4.is_edge(sub)
            have = two.is_edge(tuple(theta[i] for i in sub))
            if want != have:
                ok = False
                break
        if ok:
            slow.append(theta)
    assert fast == slow
    assert len(fast) == 36


def test_pair_density_trivial_hosts():
    cat = catalog_flags()
    e6 = Hypergraph.empty(6, 3)
    k6 = Hypergraph.complete(6, 3)
    theta = (0,)
    assert pair_density(cat.e3_p1, cat.e3_p1, e6, theta) == 1
    assert pair_density(cat.e3_p1, cat.e3_p1, k6, theta) == 0
    with pytest.raises(ValueError):
        pair_density(cat.e3_p1, cat.e3_p1, Hypergraph.empty(4, 3), (0,))


def test_averaged_pair_density_matches_core_formula(h5_classes):
    # averaging the squared complete flag recovers the weighted class sum
    # with weights C(core, 2)/C(m+1, 2), here for m = 4
    F = complete_flag(4, 3)
    for H in h5_classes:
        total = Fraction(0)
        hits = 0
        for theta in itertools.permutations(range(5), 3):
            if H.restrict(theta).is_complete():
                total += pair_density(F, F, H, theta)
                hits += 1
        avg = total / math.perm(5, 3)
        assert avg == Fraction(binomial(nonedge_core_size(H), 2), binomial(5, 2))


def test_square_expansion_spot_values():
    cat = catalog_flags()
    k6 = Hypergraph.complete(6, 3)
    e6 = Hypergraph.empty(6, 3)
    term1 = square_expansion(cat.p1, ((Fraction(1), cat.e3_p1),), Fraction(3, 4), 6)
    assert term1.coefficient(k6.edges) == Fraction(9, 16)
    assert term1.coefficient(e6.edges) == Fraction(1, 16)
    m_square = square_expansion(
        cat.p3,
        (
            (Fraction(1), cat.m_a),
            (Fraction(1), cat.m_b),
            (Fraction(1), cat.m_c),
        ),
        Fraction(1, 2),
        6,
    )
    assert m_square.coefficient(k6.edges) == 0  # no edgeless typed triple exists


def test_square_expansion_unit_law():
    # no flags: the square is the constant-squared indicator average
    cat = catalog_flags()
    vec = square_expansion(cat.p1, (), Fraction(2, 5), 6)
    for rep in enumerate_all(6, 3):
        assert vec.coefficient(rep.edges) == Fraction(4, 25)


def test_linear_average_of_complete_flag_is_clique_indicator():
    for m in (3, 4):
        F = complete_flag(m, 3)
        vec = linear_expansion(F.sigma, ((Fraction(1), F),), Fraction(0), m)
        for rep in enumerate_all(m, 3):
            expected = Fraction(1) if rep.is_complete() else Fraction(0)
            assert vec.coefficient(rep.edges) == expected


def test_squared_complete_flag_coefficients(h4_classes, h5_classes):
    # coefficients of the squared complete flag equal C(core,2)/C(m+1,2)
    for m, classes in ((3, h4_classes), (4, h5_classes)):
        F = complete_flag(m, 3)
        vec = square_expansion(F.sigma, ((Fraction(1), F),), Fraction(0), m + 1)
        for H in classes:
            expected = Fraction(binomial(nonedge_core_size(H), 2), binomial(m + 1, 2))
            assert vec.coefficient(H.edges) == expected


def test_chain_lift_singleton_is_density():
    e4 = Hypergraph.empty(4, 3)
    vec = ExpansionVector(3, 4, {e4.edges: Fraction(1)})
    lifted = chain_lift(vec, 6)
    for rep in enumerate_all(6, 3)[:300]:
        assert lifted.coefficient(rep.edges) == induced_density(e4, rep)


def test_chain_lift_preserves_all_ones():
    ones = ExpansionVector(
        3, 4, {rep.edges: Fraction(1) for rep in enumerate_all(4, 3)}
    )
    lifted = chain_lift(ones, 6)
    assert all(v == 1 for v in lifted.coeffs.values())


def test_lift_then_evaluate_agrees_on_larger_hosts():
    cat = catalog_flags()
    base = square_expansion(cat.p1, ((Fraction(1), cat.e3_p1),), Fraction(3, 4), 5)
    lifted = chain_lift(base, 6)
    rng = random.Random(17)
    for _ in range(20):
        G = Hypergraph(8, 3, rng.getrandbits(56))
        assert base.value_at(G) == lifted.value_at(G)


def test_evaluation_consistency_lift_vs_direct():
    # size-5 expansion lifted to 6 equals the direct size-6 expansion
    cat = catalog_flags()
    args = (cat.p1, ((Fraction(1), cat.e3_p1),), Fraction(3, 4))
    lifted = chain_lift(square_expansion(*args, 5), 6)
    direct = square_expansion(*args, 6)
    for rep in enumerate_all(6, 3):
        assert lifted.coefficient(rep.edges) == direct.coefficient(rep.edges)


def test_type_label_swap_mirrors_l_flags():
    cat = catalog_flags()
    # reversing the typed pair turns each L flag into the other
    l_a_swapped = Flag(cat.l_a.host, (1, 0), cat.p2)
    assert flag_code(l_a_swapped) == flag_code(cat.l_b)
    l_b_swapped = Flag(cat.l_b.host, (1, 0), cat.p2)
    assert flag_code(l_b_swapped) == flag_code(cat.l_a)
    # hence the antisymmetric square is invariant under the swap
    orig = square_expansion(
        cat.p2, ((Fraction(1), cat.l_a), (Fraction(-1), cat.l_b)), Fraction(0), 6
    )
    swapped = square_expansion(
        cat.p2, ((Fraction(1), l_a_swapped), (Fraction(-1), l_b_swapped)), Fraction(0), 6
    )
    assert orig.coeffs == swapped.coeffs


def test_extension_density_and_typed_code():
    cat = catalog_flags()
    two = disjoint_union(Hypergraph.complete(3, 3), Hypergraph.complete(3, 3))
    theta = (0, 1)  # same part
    assert extension_density(cat.l_a, two, theta) == 0
    theta = (0, 3)  # across parts: exactly one of six pairs completes each part
    assert extension_density(cat.l_a, two, theta) == Fraction(1, 6)
    assert extension_density(cat.l_b, two, theta) == Fraction(1, 6)
    assert typed_code(two, (0, 3), (1, 2)) == flag_code(cat.l_a)


def test_square_expansion_rejects_size_mismatch():
    cat = catalog_flags()
    with pytest.raises(ValueError):
        square_expansion(
            cat.p1, ((Fraction(1), cat.e3_p1),), Fraction(0), 4
        )  # needs 2t-s = 5
    with pytest.raises(ValueError):
        square_expansion(
            cat.p2, ((Fraction(1), cat.l_a), (Fraction(1), cat.e3_p1)), Fraction(0), 6
        )  # mixed types
