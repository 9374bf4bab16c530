import itertools
import math
import random
from collections import Counter

import pytest

from chaingroup.census import enumerate_labeled_forests
from chaingroup.classify import (
    GroupClass,
    abelian_invariants,
    chain_generators,
    chain_group,
    classify_forest,
    contains_full_cycle,
    full_cycle_certificate,
    identify,
    invariants_from_counts,
    is_dihedral,
    is_full_cycle,
    max_abelian_order,
)
from chaingroup.errors import CapExceeded, NotAbelian
from chaingroup.forest import (
    FamilySpec,
    antenna,
    components,
    disjoint_union,
    make_family,
    parse_forest,
    path_graph,
    spider,
    star,
)
from chaingroup.perm import PermGroup, Permutation, perm_from_cycles

from .helpers import record_group

F1 = parse_forest("n 5\ne 1 2\ne 2 3\ne 4 5")
F2 = parse_forest("n 5\ne 1 2\ne 2 3\ne 3 4\ne 3 5")


def P(cycles, n):
    return perm_from_cycles(cycles, n)


def G(cycle_lists, n):
    return PermGroup([P(c, n) for c in cycle_lists], n)


def cyclic_product_invariants(sizes):
    """Invariant factors of Z_{a_1} x ... x Z_{a_k}, via prime-power parts."""
    powers = {}
    for a in sizes:
        m, p = a, 2
        while m > 1:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e:
                powers.setdefault(p, []).append(p ** e)
            p += 1
    width = max((len(v) for v in powers.values()), default=0)
    cols = [sorted(v, reverse=True) + [1] * (width - len(v)) for v in powers.values()]
    return sorted(math.prod(c[i] for c in cols) for i in range(width))


def dihedral_oracle(g, m):
    """Order statistics: order 2m, an element of order m, m + [m even] involutions."""
    if g.order != 2 * m:
        return False
    orders = Counter(x.order() for x in g.enumerate_elements())
    if m == 1:
        return True
    if m == 2:
        return orders[2] == 3
    return orders[m] > 0 and orders[2] == m + (m % 2 == 0)


# worked examples


def test_two_path_forest():
    g = chain_group(F1)
    assert [str(x) for x in g.generators] == ["(1 2 3)", "(4 5)"]
    cls = identify(g)
    assert g.order == 6
    assert cls.tag == "ProductOfCyclics" and cls.invariant_factors() == [6]
    assert abelian_invariants(g) == [6]


def test_three_path_tree():
    g = chain_group(F2)
    assert [str(x) for x in g.generators] == ["(1 2 3 4)", "(1 2 3 5)", "(3 5 4)"]
    assert identify(g).label == "Symmetric(5)"
    assert g.contains(P([(3, 5)], 5))


def test_star_six():
    cls = classify_forest(star(6))
    assert cls.label == "Alternating(6)" and cls.order == 360


# identify


@pytest.mark.parametrize("n", range(2, 13))
def test_path_is_cyclic(n):
    cls = classify_forest(path_graph(n))
    assert cls.label == f"Cyclic({n})" and cls.order == n


def test_full_cycle_group_is_cyclic():
    g = G([[tuple(range(1, 8))]], 7)
    assert identify(g).label == "Cyclic(7)"


def test_klein_four_on_disjoint_supports():
    cls = identify(G([[(1, 2)], [(3, 4)]], 4))
    assert cls.label == "ProductOfCyclics[2,2]"


@pytest.mark.parametrize("n", range(3, 10))
def test_star_is_alternating(n):
    cls = classify_forest(star(n))
    assert cls.label == ("Cyclic(3)" if n == 3 else f"Alternating({n})")
    assert cls.order == math.factorial(n) // 2


@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_odd_antenna_is_symmetric(n):
    assert classify_forest(antenna(n)).label == f"Symmetric({n})"


def test_trivial():
    cls = identify(PermGroup([], 3))
    assert cls.label == "Trivial" and cls.order == 1 and cls.invariant_factors() == []


def test_support_not_degree_decides_symmetric():
    padded = disjoint_union([F2, path_graph(1), path_graph(1)])
    assert classify_forest(padded).label == "Symmetric(5)"
    assert classify_forest(disjoint_union([star(5), path_graph(1)])).label == "Alternating(5)"


def test_small_overlaps_resolve_once():
    # S_2 = Z_2, A_3 = Z_3, D_6 = S_3, D_4 = V_4
    assert identify(G([[(1, 2)]], 2)).label == "Cyclic(2)"
    assert identify(G([[(1, 2, 3)]], 3)).label == "Cyclic(3)"
    assert identify(G([[(1, 2)], [(1, 2, 3)]], 3)).label == "Symmetric(3)"
    assert identify(G([[(1, 2), (3, 4)], [(1, 3), (2, 4)]], 4)).tag == "ProductOfCyclics"


def test_dihedral_and_other():
    d8 = G([[(1, 2, 3, 4)], [(1, 3)]], 4)
    assert identify(d8).label == "Dihedral(8)"
    cls = identify(G([[(1, 2, 3)], [(4, 5, 6)], [(1, 4), (2, 5), (3, 6)]], 6))
    assert cls.tag == "Other" and cls.order == 18
    assert cls.label == "Other(order=18,abelian=false,transitive=true)"


@pytest.mark.parametrize("n", range(1, 7))
def test_class_order_consistent_over_census(n):
    for f in enumerate_labeled_forests(n):
        g = chain_group(f)
        cls = identify(g)
        assert cls.order == g.order
        expected = cls.expected_order()
        assert expected is None or expected == g.order
        if cls.tag == "ProductOfCyclics":
            fs = cls.params
            assert all(b % a == 0 for a, b in zip(fs, fs[1:])) and min(fs) >= 2
        record_group(g)


def test_group_class_json_round_trip():
    for cls in [identify(chain_group(F1)), classify_forest(star(6)), GroupClass("Other", (), 18, False, True)]:
        data = cls.to_json()
        assert isinstance(data["order"], str)
        assert GroupClass.from_json(data) == cls
    assert identify(chain_group(F1)).to_json() == {
        "tag": "ProductOfCyclics", "params": [6], "order": "6", "abelian": True, "transitive": False}


# abelian invariants


def test_abelian_invariant_examples():
    assert abelian_invariants(G([[(1, 2, 3)], [(4, 5)]], 5)) == [6]
    assert abelian_invariants(G([[(1, 2, 3)], [(4, 5, 6)]], 6)) == [3, 3]
    assert abelian_invariants(PermGroup([], 4)) == []


def test_abelian_invariants_rejects_nonabelian():
    with pytest.raises(NotAbelian):
        abelian_invariants(chain_group(F2))


@pytest.mark.parametrize("sizes", [
    [2, 2], [2, 4], [4, 4], [2, 3, 4], [3, 3, 3], [2, 2, 2, 2], [6, 4], [5, 2, 2], [8, 4, 2], [9, 3],
])
def test_abelian_invariants_both_routes(sizes):
    f = disjoint_union([path_graph(k) for k in sizes])
    g = chain_group(f)
    expected = cyclic_product_invariants(sizes)
    assert abelian_invariants(g) == expected  # enumeration route
    assert abelian_invariants(g, cap=1) == expected  # chain route


@pytest.mark.parametrize("n", range(1, 8))
def test_abelian_census_invariants(n):
    for f in enumerate_labeled_forests(n):
        g = chain_group(f)
        if not g.is_abelian():
            continue
        sizes = [len(c) for c in components(f) if len(c) > 1]
        expected = cyclic_product_invariants(sizes)
        assert identify(g).invariant_factors() == expected


def test_invariants_from_counts_direct():
    # Z_2 x Z_4: 4 elements with x^2 = 1 and 8 with x^4 = 1
    def kernel(p, k):
        return {1: 4, 2: 8}[k] if p == 2 else 1
    assert invariants_from_counts(8, kernel) == [2, 4]


# dihedral


def test_dihedral_examples():
    assert is_dihedral(G([[(1, 2, 3, 4)], [(1, 3)]], 4), 4)
    assert not is_dihedral(G([[(1, 2, 3)], [(4, 5)]], 5), 3)
    assert not is_dihedral(chain_group(F2), 5)
    assert is_dihedral(G([[(1, 2)]], 2), 1)
    assert is_dihedral(G([[(1, 2)], [(3, 4)]], 4), 2)
    assert not is_dihedral(G([[(1, 2, 3, 4)]], 4), 2)


def test_dihedral_cap():
    with pytest.raises(CapExceeded):
        is_dihedral(_polygon(20), 20, cap=10)


def _polygon(m):
    rot = tuple(range(1, m + 1))
    refl = [(i, m + 2 - i) for i in range(2, m + 1) if i < m + 2 - i]
    return G([[rot], refl], m)


def _quaternion():
    return G([[(1, 2, 4, 7), (3, 6, 8, 5)], [(1, 3, 4, 8), (2, 5, 7, 6)]], 8)


@pytest.mark.parametrize("m", range(3, 13))
def test_polygon_groups_are_dihedral(m):
    g = _polygon(m)
    assert g.order == 2 * m
    assert is_dihedral(g, m) and dihedral_oracle(g, m)


def test_quaternion_is_not_dihedral():
    q = _quaternion()
    assert q.order == 8 and not q.is_abelian()
    assert not is_dihedral(q, 4) and not dihedral_oracle(q, 4)


def _small_groups():
    rng = random.Random(808)
    groups = [_polygon(m) for m in range(3, 11)] + [_quaternion()]
    for n in range(1, 6):
        groups += [chain_group(f) for f in enumerate_labeled_forests(n)]
    while len(groups) < 700:
        n = rng.randint(3, 7)
        gens = []
        for _ in range(rng.randint(1, 2)):
            k = rng.randint(2, n)
            pts = rng.sample(range(1, n + 1), k)
            gens.append(P([tuple(pts[:k // 2 + 1])] + ([tuple(pts[k // 2 + 1:])] if k - k // 2 - 1 >= 2 else []), n))
        g = PermGroup(gens, n)
        if g.order <= 200:
            groups.append(g)
    return groups


def test_is_dihedral_matches_order_statistics():
    for g in _small_groups():
        if g.order > 200:
            continue
        for m in {1, 2, 3, g.order // 2, g.n}:
            if m >= 1:
                assert is_dihedral(g, m) == dihedral_oracle(g, m), (g, m)
        record_group(g)


# maximal abelian order


@pytest.mark.parametrize("n, order, count", [(1, 1, 1), (2, 2, 1), (3, 3, 1), (4, 4, 2), (6, 9, 1), (7, 12, 2), (8, 18, 1)])
def test_max_abelian_order_values(n, order, count):
    bound, witnesses = max_abelian_order(n)
    assert bound == order and len(witnesses) == count


@pytest.mark.parametrize("n", range(1, 13))
def test_max_abelian_witnesses_realize_bound(n):
    bound, witnesses = max_abelian_order(n)
    for spec in witnesses:
        g = chain_group(make_family(spec))
        assert g.is_abelian() and g.order == bound


def test_max_abelian_bound_brute_force_small():
    # largest abelian subgroup order of S_n via its elements, n <= 5
    for n in range(1, 6):
        pts = range(1, n + 1)
        elems = [Permutation(list(p)) for p in itertools.permutations(pts)]
        best = 1
        for i, a in enumerate(elems):
            for b in elems[i:]:
                if a.commutes_with(b):
                    best = max(best, PermGroup([a, b], n).order)
        # two commuting generators suffice for n <= 5 (the extremal groups are 2-generated)
        assert best == max_abelian_order(n)[0]


# full cycles


def test_full_cycle_from_antenna_paths():
    s1, s2 = P([(1, 3, 4, 5)], 5), P([(2, 3, 4, 5)], 5)
    assert is_full_cycle(s1 * s2)
    found, witness = contains_full_cycle(chain_group(antenna(5)), 5)
    assert found and is_full_cycle(witness)


def test_no_full_cycle_in_small_abelian():
    assert contains_full_cycle(G([[(1, 2, 3)], [(4, 5)]], 5), 5) == (False, None)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_full_cycle_generator_is_witness(n):
    c = P([tuple(range(1, n + 1))], n)
    assert contains_full_cycle(PermGroup([c], n), n) == (True, c)


def test_certificate_needs_even_distance_leaf():
    # legs 1, 2, 2: the leaves at distance 2 give a certificate
    cert = full_cycle_certificate(spider([1, 2, 2]))
    assert cert is not None and is_full_cycle(cert)
    # legs 1, 1, 3: every leaf is at odd distance
    assert full_cycle_certificate(spider([1, 1, 3])) is None
    assert full_cycle_certificate(star(6)) is None


def test_full_cycle_sampling_route():
    f = antenna(11)
    g = chain_group(f)
    found, w = contains_full_cycle(g, 11, cap=10, seed=1)
    assert found and is_full_cycle(w) and g.contains(w)


def test_full_cycle_cap_exceeded():
    # a large group with no n-cycle and odd n: only the sampler could answer
    f = disjoint_union([star(6), path_graph(3)])
    with pytest.raises(CapExceeded):
        contains_full_cycle(chain_group(f), 9, cap=10, samples=5)


def test_chain_generators_follow_path_order():
    f = F2
    assert [x.cycles()[0] for x in chain_generators(f)] == [(1, 2, 3, 4), (1, 2, 3, 5), (3, 5, 4)]
