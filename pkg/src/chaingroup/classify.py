"""From a forest to its chain group, and recognition of the group's class."""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass

from .errors import CapExceeded, NotAbelian
from .forest import FamilySpec, Forest, degree_profile, distances_from, maximal_paths, tree_path
from .perm import DEFAULT_CAP, PermGroup, Permutation, perm_from_cycles

TAGS = ("Trivial", "Cyclic", "ProductOfCyclics", "Alternating", "Symmetric", "Dihedral", "Other")


@dataclass(frozen=True)
class GroupClass:
    """Recognized isomorphism type of a permutation group.

    ``params`` holds ``[m]`` for Cyclic, the invariant factors for
    ProductOfCyclics, ``[k]`` for Alternating/Symmetric (k = support size),
    ``[2m]`` for Dihedral and nothing for Trivial/Other.  ``transitive`` means
    transitive on the support.
    """

    tag: str
    params: tuple[int, ...]
    order: int
    abelian: bool
    transitive: bool

    @property
    def label(self) -> str:
        if self.tag == "Trivial":
            return "Trivial"
        if self.tag == "ProductOfCyclics":
            return "ProductOfCyclics[" + ",".join(map(str, self.params)) + "]"
        if self.tag == "Other":
            return (
                f"Other(order={self.order},abelian={str(self.abelian).lower()},"
                f"transitive={str(self.transitive).lower()})"
            )
        return f"{self.tag}({self.params[0]})"

    def __str__(self):
        return self.label

    def invariant_factors(self) -> list[int] | None:
        """Invariant factors for the abelian tags, None otherwise."""
        if self.tag == "Trivial":
            return []
        if self.tag == "Cyclic":
            return [self.params[0]]
        if self.tag == "ProductOfCyclics":
            return list(self.params)
        return None

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "params": list(self.params),
            "order": str(self.order),
            "abelian": self.abelian,
            "transitive": self.transitive,
        }

    @classmethod
    def from_json(cls, data: dict) -> "GroupClass":
        return cls(data["tag"], tuple(data["params"]), int(data["order"]),
                   data["abelian"], data["transitive"])

    def expected_order(self) -> int | None:
        """Order implied by the tag alone (None for Other)."""
        if self.tag == "Trivial":
            return 1
        if self.tag in ("Cyclic", "ProductOfCyclics"):
            return math.prod(self.params)
        if self.tag == "Symmetric":
            return math.factorial(self.params[0])
        if self.tag == "Alternating":
            return math.factorial(self.params[0]) // 2
        if self.tag == "Dihedral":
            return self.params[0]
        return None


def path_cycle(path, n: int) -> Permutation:
    return perm_from_cycles([path], n)


def chain_generators(f: Forest) -> list[Permutation]:
    """One cycle per maximal path, in the canonical path order."""
    return [perm_from_cycles([p], f.n) for p in maximal_paths(f)]


def chain_group(f: Forest) -> PermGroup:
    return PermGroup(chain_generators(f), f.n)


# abelian invariants


def _prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def _valuation(x: int, p: int) -> int:
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def _ilog(x: int, p: int) -> int:
    e = 0
    while x > 1:
        x //= p
        e += 1
    return e


def invariants_from_counts(order: int, kernel_size) -> list[int]:
    """Invariant factors of an abelian group from its torsion counts.

    ``kernel_size(p, k)`` must return ``#{x : x^(p^k) = 1}``; for an abelian
    group with p-part exponents ``e_i`` this is ``p^(sum_i min(k, e_i))``.
    """
    exps_by_prime = {}
    for p in _prime_factors(order):
        top = _valuation(order, p)
        counts = [0]
        while counts[-1] < top:
            counts.append(_ilog(kernel_size(p, len(counts)), p))
        # number of cyclic p-factors of exponent >= k is counts[k] - counts[k-1]
        at_least = [counts[k] - counts[k - 1] for k in range(1, len(counts))]
        exps = []
        for k, c in enumerate(at_least, 1):
            nxt = at_least[k] if k < len(at_least) else 0
            exps.extend([k] * (c - nxt))
        exps_by_prime[p] = sorted(exps, reverse=True)
    width = max((len(e) for e in exps_by_prime.values()), default=0)
    factors = []
    for i in range(width):
        m = 1
        for p, exps in exps_by_prime.items():
            if i < len(exps):
                m *= p ** exps[i]
        factors.append(m)
    return sorted(factors)


def abelian_invariants(g: PermGroup, cap: int = DEFAULT_CAP) -> list[int]:
    """Invariant factors ``m_1 | m_2 | ... | m_k`` of an abelian group.

    Within ``cap`` the torsion counts come from the element-order multiset of
    the enumerated group.  Larger groups use ``|G| / |G^(p^k)|`` on the
    stabilizer chain, the same counts without enumeration.
    """
    if not g.is_abelian():
        raise NotAbelian("group is not abelian")
    order = g.order
    if order == 1:
        return []
    if order <= cap:
        orders = Counter(x.order() for x in g.enumerate_elements(cap))

        def kernel_size(p, k):
            q = p ** k
            return sum(c for o, c in orders.items() if q % o == 0)
    else:

        def kernel_size(p, k):
            q = p ** k
            return order // PermGroup([x ** q for x in g.generators], g.n).order

    return invariants_from_counts(order, kernel_size)


# dihedral recognition


def is_dihedral(g: PermGroup, m: int, cap: int = DEFAULT_CAP) -> bool:
    """Whether ``g`` is dihedral of order ``2m`` (Z2 for m = 1, Klein four for m = 2)."""
    if m < 1:
        raise ValueError("m must be positive")
    if g.order != 2 * m:
        return False
    if 2 * m > cap:
        raise CapExceeded(cap)
    elements = g.enumerate_elements(cap)
    if m == 1:
        return True
    if m == 2:
        return all(x.order() <= 2 for x in elements)
    if g.is_abelian():
        return False
    rotations = [x for x in elements if x.order() == m]
    involutions = [x for x in elements if x.order() == 2]
    for r in rotations:
        r_inv = r.inverse()
        powers = {r ** i for i in range(m)}
        for s in involutions:
            if s in powers or s * r * s != r_inv:
                continue
            if len(powers | {s * x for x in powers}) == 2 * m:
                return True
    return False


# recognition


def _three_cycles_present(g: PermGroup, support: list[int]) -> bool:
    a, b = support[0], support[1]
    return all(g.contains(perm_from_cycles([(a, b, c)], g.n)) for c in support[2:])


def identify(g: PermGroup, cap: int = DEFAULT_CAP) -> GroupClass:
    """Classify ``g`` in the fixed order Trivial, abelian, Symmetric, Alternating, Dihedral, Other."""
    order = g.order
    transitive = g.is_transitive_on_support()
    if order == 1:
        return GroupClass("Trivial", (), 1, True, transitive)
    abelian = g.is_abelian()
    if abelian:
        factors = abelian_invariants(g, cap)
        if len(factors) == 1 and transitive:
            return GroupClass("Cyclic", (factors[0],), order, True, transitive)
        return GroupClass("ProductOfCyclics", tuple(factors), order, True, transitive)
    support = sorted(g.support())
    k = len(support)
    if transitive:
        if order == math.factorial(k) and any(not x.is_even() for x in g.generators):
            return GroupClass("Symmetric", (k,), order, False, True)
        if (k >= 3 and 2 * order == math.factorial(k)
                and all(x.is_even() for x in g.generators)
                and _three_cycles_present(g, support)):
            return GroupClass("Alternating", (k,), order, False, True)
    if order % 2 == 0 and order // 2 >= 3 and order <= cap and is_dihedral(g, order // 2, cap):
        return GroupClass("Dihedral", (order,), order, False, transitive)
    return GroupClass("Other", (), order, abelian, transitive)


def classify_forest(f: Forest, cap: int = DEFAULT_CAP) -> GroupClass:
    return identify(chain_group(f), cap)


# maximum-order abelian subgroups


def max_abelian_order(n: int) -> tuple[int, list[FamilySpec]]:
    """Largest order of an abelian subgroup of S_n, with witness forests."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1, [FamilySpec("path", (1,))]
    k, r = divmod(n, 3)
    if r == 0:
        return 3 ** k, [FamilySpec("maxabelian", (n,))]
    if r == 2:
        return 2 * 3 ** k, [FamilySpec("maxabelian", (n,))]
    return 4 * 3 ** (k - 1), [FamilySpec("maxabelian", (n, "A")), FamilySpec("maxabelian", (n, "B"))]


# full cycles


def is_full_cycle(p: Permutation) -> bool:
    return p.n >= 1 and p.cycle_type() == ([p.n] if p.n > 1 else [])


def full_cycle_certificate(f: Forest) -> Permutation | None:
    """The explicit n-cycle candidate for a tree with one degree-3 hub.

    A leaf ``w1`` whose path to the hub has even length is shared by two
    maximal paths ``w1 .. w2`` and ``w1 .. w3``; the product of their cycles
    (first ``w1 .. w3``, then ``w1 .. w2``) interleaves the two paths into
    one n-cycle.  Returns None when the tree has no such leaf, or is not a
    tree with exactly three leaves and one degree-3 vertex.
    """
    prof = degree_profile(f)
    if len(prof.branch_vertices) != 1 or len(prof.leaves) != 3 or len(f.edges) != f.n - 1:
        return None
    (hub,) = prof.branch_vertices
    if prof.degrees[hub] != 3:
        return None
    dist = distances_from(f, hub)
    leaves = sorted(prof.leaves)
    even = [w for w in leaves if dist[w] % 2 == 0]
    if not even:
        return None
    w1 = even[0]
    w2, w3 = [w for w in leaves if w != w1]
    outer = perm_from_cycles([tree_path(f, w1, w2)], f.n)
    inner = perm_from_cycles([tree_path(f, w1, w3)], f.n)
    return outer * inner


def contains_full_cycle(
    g: PermGroup,
    n: int,
    structure: Forest | None = None,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    samples: int | None = None,
) -> tuple[bool, Permutation | None]:
    """Whether ``g`` has an element that is an n-cycle, plus a witness.

    Tries, in order: the explicit certificate of ``structure``; the parity
    obstruction (even n with only even generators); full enumeration within
    ``cap``; seeded uniform sampling from the stabilizer chain.
    """
    if g.n != n:
        raise ValueError(f"group degree {g.n} differs from n = {n}")
    if structure is not None:
        cert = full_cycle_certificate(structure)
        if cert is not None and is_full_cycle(cert) and g.contains(cert):
            return True, cert
    if n == 1:
        return True, Permutation.identity(1)
    if n % 2 == 0 and all(x.is_even() for x in g.generators):
        return False, None
    if g.order <= cap:
        for x in g.enumerate_elements(cap):
            if is_full_cycle(x):
                return True, x
        return False, None
    rng = random.Random(seed)
    for _ in range(samples if samples is not None else 50 * n):
        x = g.random_element(rng)
        if is_full_cycle(x):
            return True, x
    raise CapExceeded(cap, f"no n-cycle sampled and order {g.order} exceeds cap {cap}")
