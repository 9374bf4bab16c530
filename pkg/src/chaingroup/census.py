"""Exhaustive labeled-forest enumeration, group censuses and theorem checkers."""

from __future__ import annotations

import math
import os
import random
import time
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from multiprocessing import Pool
from typing import Callable, Iterator

from .classify import (
    GroupClass,
    TAGS,
    chain_generators,
    chain_group,
    contains_full_cycle,
    full_cycle_certificate,
    identify,
    is_dihedral,
    is_full_cycle,
    max_abelian_order,
)
from .errors import InvalidSpec, LimitExceeded, UnknownTheorem
from .forest import (
    Forest,
    antenna,
    components,
    degree_profile,
    disjoint_union,
    distances_from,
    format_forest,
    is_extended_subforest,
    make_family,
    maximal_paths,
    odd_distance_tree,
    path_graph,
    path_subforest,
    induced_subforest,
    relabel,
    spider,
    star,
)
from .perm import DEFAULT_CAP, PermGroup, Permutation, perm_from_cycles

DEFAULT_MAX_N = 7
HARD_MAX_N = 8
DEFAULT_SEED = 0xC41A1  # "chain"
PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"

# Length-two tree on 12 vertices: a hub with one four-leaf arm and two single-leaf arms.
# Two copies plus a 17-vertex antenna make the 41-vertex forest.
CONSTRUCTED_ARMS = ((1, 4), (1, 1), (1, 1))


def census_limit() -> int:
    """Largest n allowed for exhaustive work; CHAINGROUP_MAX_N may raise it to 8."""
    raw = os.environ.get("CHAINGROUP_MAX_N")
    if not raw:
        return DEFAULT_MAX_N
    return min(int(raw), HARD_MAX_N)


def _check_limit(n: int, max_n: int | None):
    limit = census_limit() if max_n is None else max_n
    if n < 1:
        raise LimitExceeded(f"n must be positive, got {n}")
    if n > limit:
        raise LimitExceeded(f"n = {n} exceeds the census limit {limit}")


# enumeration


def enumerate_labeled_forests(n: int, max_n: int = HARD_MAX_N) -> Iterator[Forest]:
    """Every acyclic edge subset of K_n exactly once.

    Edges are decided in lexicographic order, "leave out" before "take", so
    the stream starts with the empty forest.  Components are tracked as a
    label array copied on each merge.
    """
    if n < 1 or n > max_n:
        raise LimitExceeded(f"n = {n} outside 1..{max_n}")
    edges = list(combinations(range(1, n + 1), 2))
    total = len(edges)
    chosen: list[tuple[int, int]] = []

    def walk(i, comp):
        if i == total:
            yield Forest._trusted(n, tuple(chosen))
            return
        yield from walk(i + 1, comp)
        u, v = edges[i]
        cu, cv = comp[u], comp[v]
        if cu != cv:
            merged = tuple(cu if c == cv else c for c in comp)
            chosen.append((u, v))
            yield from walk(i + 1, merged)
            chosen.pop()

    yield from walk(0, tuple(range(n + 1)))


def prufer_tree(seq, n: int) -> Forest:
    """Decode a Prüfer sequence of length n - 2 into a labeled tree on 1..n."""
    if n == 1:
        return Forest._trusted(1, ())
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1, 1)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[leaf] -= 1
        degree[x] -= 1
    u = degree.index(1, 1)
    v = degree.index(1, u + 1)
    edges.append((u, v))
    edges.sort()
    return Forest._trusted(n, tuple(edges))


def enumerate_labeled_trees(n: int) -> Iterator[Forest]:
    """All n^(n-2) labeled trees on 1..n, in Prüfer-sequence order."""
    if n < 1:
        raise LimitExceeded("n must be positive")
    if n <= 2:
        yield Forest._trusted(n, ((1, 2),) if n == 2 else ())
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield prufer_tree(seq, n)


# census


def _class_key(c: GroupClass):
    return (TAGS.index(c.tag), c.params, c.order, c.abelian, c.transitive)


@dataclass(frozen=True)
class CensusRecord:
    n: int
    edges: tuple[tuple[int, int], ...]
    order: int
    group_class: GroupClass
    component_sizes: tuple[int, ...]
    abelian: bool

    @property
    def forest(self) -> Forest:
        return Forest._trusted(self.n, self.edges)


def census_record(f: Forest, cap: int = DEFAULT_CAP) -> CensusRecord:
    g = chain_group(f)
    cls = identify(g, cap)
    sizes = tuple(sorted((len(c) for c in components(f)), reverse=True))
    return CensusRecord(f.n, f.edges, g.order, cls, sizes, cls.abelian)


@dataclass
class CensusReport:
    n: int
    total: int
    tally: dict[GroupClass, int]
    examples: dict[GroupClass, tuple[tuple[int, int], ...]]
    cap: int = DEFAULT_CAP
    records: list[CensusRecord] | None = field(default=None, repr=False, compare=False)

    def rows(self) -> list[tuple[GroupClass, int, tuple[tuple[int, int], ...]]]:
        return [(c, self.tally[c], self.examples[c]) for c in sorted(self.tally, key=_class_key)]


def _census_part(args):
    n, offset, stride, cap, keep = args
    tally: dict[GroupClass, int] = {}
    first: dict[GroupClass, tuple[int, tuple]] = {}
    records = []
    for idx, f in enumerate(enumerate_labeled_forests(n)):
        if idx % stride != offset:
            continue
        rec = census_record(f, cap)
        c = rec.group_class
        tally[c] = tally.get(c, 0) + 1
        if c not in first:
            first[c] = (idx, f.edges)
        if keep:
            records.append((idx, rec))
    return tally, first, records


def run_census(
    n: int,
    parallelism: int = 1,
    cap: int = DEFAULT_CAP,
    keep_records: bool = False,
    max_n: int | None = None,
) -> CensusReport:
    """Tally chain-group classes over all labeled forests on ``[n]``.

    The forest stream is dealt round-robin to ``parallelism`` workers and the
    partial tallies merged; the result does not depend on ``parallelism``.
    """
    _check_limit(n, max_n)
    parallelism = max(1, int(parallelism))
    jobs = [(n, i, parallelism, cap, keep_records) for i in range(parallelism)]
    if parallelism == 1:
        parts = [_census_part(jobs[0])]
    else:
        with Pool(parallelism) as pool:
            parts = pool.map(_census_part, jobs)
    tally: Counter = Counter()
    first: dict[GroupClass, tuple[int, tuple]] = {}
    indexed = []
    for part_tally, part_first, part_records in parts:
        tally.update(part_tally)
        for c, entry in part_first.items():
            if c not in first or entry[0] < first[c][0]:
                first[c] = entry
        indexed.extend(part_records)
    indexed.sort(key=lambda t: t[0])
    ordered = sorted(tally, key=_class_key)
    return CensusReport(
        n=n,
        total=sum(tally.values()),
        tally={c: tally[c] for c in ordered},
        examples={c: first[c][1] for c in ordered},
        cap=cap,
        records=[r for _, r in indexed] if keep_records else None,
    )


@lru_cache(maxsize=None)
def _cached_records(n: int, cap: int) -> tuple[CensusRecord, ...]:
    return tuple(census_record(f, cap) for f in enumerate_labeled_forests(n))


def census_records(n: int, cap: int = DEFAULT_CAP, max_n: int | None = None) -> tuple[CensusRecord, ...]:
    """All census records on ``[n]`` (memoized per process)."""
    _check_limit(n, max_n)
    return _cached_records(n, cap)


# structural predicates used by the checkers


def is_disjoint_union_of_paths(f: Forest) -> bool:
    return all(len(f.adjacency[v]) <= 2 for v in range(1, f.n + 1))


def length_two_hubs(f: Forest) -> list[int]:
    """Hubs ``v`` of a tree meeting the odd-distance hypothesis.

    ``v`` carries exactly two leaves ``l1, l2`` (so ``l1 v l2`` is a maximal
    path of length two), has degree >= 3, and every other leaf lies at even
    distance from ``v``, i.e. at odd distance from ``l1`` and ``l2``.
    """
    if f.n < 4 or len(f.edges) != f.n - 1:
        return []
    adj = f.adjacency
    leaves = [v for v in range(1, f.n + 1) if len(adj[v]) == 1]
    hubs = []
    for v in range(1, f.n + 1):
        if len(adj[v]) < 3:
            continue
        pendant = [w for w in adj[v] if len(adj[w]) == 1]
        if len(pendant) != 2:
            continue
        dist = distances_from(f, v)
        if all(dist[w] % 2 == 0 for w in leaves if w not in pendant):
            hubs.append(v)
    return hubs


def constructed_length_two_tree() -> Forest:
    return odd_distance_tree(CONSTRUCTED_ARMS)


def three_component_forest() -> Forest:
    """Two 12-vertex length-two trees and a 17-vertex antenna; chain group S12 x S12 x S17."""
    t = constructed_length_two_tree()
    return disjoint_union([t, t, antenna(17)])


def _lemma61_holds(f: Forest) -> bool:
    """Some leaf-to-leaf path misses at least three vertices."""
    adj = f.adjacency
    n = f.n
    leaves = [v for v in range(1, n + 1) if len(adj[v]) == 1]
    for a in leaves:
        # nearest other leaf from a gives the shortest maximal path through a
        dist = {a: 0}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            if v != a and len(adj[v]) == 1:
                if n - (dist[v] + 1) >= 3:
                    return True
                break
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
    return False


def _branch_count(seq) -> int:
    return sum(1 for c in Counter(seq).values() if c >= 2)


# verification harness


@dataclass
class VerificationResult:
    theorem: str
    params: dict
    status: str
    instances: int
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == PASS


def _forest_payload(f: Forest) -> dict:
    return {"n": f.n, "edges": [list(e) for e in f.edges], "text": format_forest(f)}


def _cx(f: Forest, expected, actual, **extra) -> dict:
    out = {"forest": _forest_payload(f), "expected": expected, "actual": actual}
    out.update(extra)
    return out


def check_abelian(n: int, max_n: int | None = None):
    """Chain group abelian iff every component is a path."""
    _check_limit(n, max_n)
    count = 0
    for f in enumerate_labeled_forests(n):
        count += 1
        abelian = chain_group(f).is_abelian()
        paths = is_disjoint_union_of_paths(f)
        if abelian != paths:
            return FAIL, count, _cx(f, f"abelian={paths}", f"abelian={abelian}"), {}
    return PASS, count, None, {}


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def elementary_witness(p: int, r: int, n: int) -> Forest:
    """r paths on p vertices plus n - rp isolated vertices."""
    return disjoint_union([path_graph(p)] * r + [path_graph(1)] * (n - r * p))


def check_elementary(p: int, r: int, n: int, cap: int = DEFAULT_CAP, max_n: int | None = None):
    """(Z/p)^r is a chain group on [n] iff rp <= n."""
    if not _is_prime(p) or r < 1 or n < 1:
        return SKIPPED, 0, None, {"reason": "needs prime p, r >= 1, n >= 1"}
    target = [p] * r
    if r * p <= n:
        f = elementary_witness(p, r, n)
        cls = identify(chain_group(f), cap)
        if cls.invariant_factors() != target:
            return FAIL, 1, _cx(f, f"invariant factors {target}", cls.label), {}
        return PASS, 1, None, {"class": cls.label}
    _check_limit(n, max_n)
    recs = census_records(n, cap, max_n=max_n)
    for rec in recs:
        if rec.group_class.invariant_factors() == target:
            return FAIL, len(recs), _cx(rec.forest, "no such class", rec.group_class.label), {}
    return PASS, len(recs), None, {}


def check_maxabelian(n: int, cap: int = DEFAULT_CAP, max_n: int | None = None):
    """Witness forests realize the maximal abelian order; nothing abelian beats it."""
    bound, witnesses = max_abelian_order(n)
    checked = 0
    for spec in witnesses:
        f = make_family(spec)
        g = chain_group(f)
        checked += 1
        if not g.is_abelian() or g.order != bound:
            return FAIL, checked, _cx(f, f"abelian of order {bound}",
                                      f"abelian={g.is_abelian()} order={g.order}", witness=str(spec)), {}
    details = {"bound": str(bound), "witnesses": [str(s) for s in witnesses]}
    limit = census_limit() if max_n is None else max_n
    if n <= limit:
        recs = census_records(n, cap, max_n=limit)
        best = 0
        for rec in recs:
            if rec.abelian:
                best = max(best, rec.order)
                if rec.order > bound:
                    return FAIL, checked + len(recs), _cx(rec.forest, f"order <= {bound}", str(rec.order)), details
        checked += len(recs)
        details["census_max_abelian_order"] = str(best)
    return PASS, checked, None, details


def check_star(n: int, cap: int = DEFAULT_CAP):
    """The star K_{1,n-1} has chain group A_n (Z_3 when n = 3)."""
    if n < 3:
        return SKIPPED, 0, None, {"reason": "claim starts at n = 3"}
    f = star(n)
    cls = identify(chain_group(f), cap)
    ok = cls.label == "Cyclic(3)" if n == 3 else cls.label == f"Alternating({n})"
    expected = "Cyclic(3)" if n == 3 else f"Alternating({n})"
    if not ok or cls.order != math.factorial(n) // 2:
        return FAIL, 1, _cx(f, expected, cls.label), {}
    return PASS, 1, None, {"class": cls.label, "order": str(cls.order)}


def antenna_identities(n: int) -> dict:
    """The three products behind the odd-antenna argument, on the standard labeling."""
    sigma = perm_from_cycles([(1, 3, 2)], n)
    sigma1 = perm_from_cycles([(1, *range(3, n + 1))], n)
    sigma2 = perm_from_cycles([tuple(range(2, n + 1))], n)
    full = sigma1 * sigma2
    mixed = sigma * sigma2.inverse()
    power = mixed ** (n - 2)
    return {"full": full, "mixed": mixed, "power": power}


def check_antenna(n: int, cap: int = DEFAULT_CAP):
    """Odd antennas have chain group S_n."""
    if n < 5 or n % 2 == 0:
        return SKIPPED, 0, None, {"reason": "claim covers odd n >= 5 only"}
    f = antenna(n)
    cls = identify(chain_group(f), cap)
    ids = antenna_identities(n)
    facts = {
        "class": cls.label,
        "full_cycle": str(ids["full"]),
        "mixed_cycle_type": ids["mixed"].cycle_type(),
        "power": str(ids["power"]),
    }
    problems = []
    if cls.label != f"Symmetric({n})":
        problems.append(f"class {cls.label}")
    if not is_full_cycle(ids["full"]):
        problems.append("sigma1*sigma2 is not an n-cycle")
    if ids["mixed"].cycle_type() != sorted([2, n - 2]):
        problems.append(f"sigma*sigma2^-1 has cycle type {ids['mixed'].cycle_type()}")
    if ids["power"].cycle_type() != [2]:
        problems.append("power is not a transposition")
    if problems:
        return FAIL, 1, _cx(f, f"Symmetric({n}) with all identities", "; ".join(problems)), facts
    return PASS, 1, None, facts


def groups_equal(a: PermGroup, b: PermGroup) -> bool:
    return (
        a.order == b.order
        and all(b.contains(x) for x in a.generators)
        and all(a.contains(x) for x in b.generators)
    )


def check_relabel(n: int, seed: int = DEFAULT_SEED, samples: int = 2, max_n: int | None = None):
    """Relabeling by pi conjugates the chain group by pi."""
    _check_limit(n, max_n)
    rng = random.Random(f"T-RELABEL:{seed}:{n}")
    count = 0
    for f in enumerate_labeled_forests(n):
        g = chain_group(f)
        for _ in range(samples):
            images = list(range(1, n + 1))
            rng.shuffle(images)
            pi = Permutation(images)
            count += 1
            lhs = chain_group(relabel(f, pi))
            rhs = g.conjugate(pi)
            if not groups_equal(lhs, rhs):
                return FAIL, count, _cx(f, "conjugate groups", f"differ under {pi}", pi=str(pi)), {}
    return PASS, count, None, {"seed": seed, "samples_per_forest": samples}


def check_union(n: int, seed: int = DEFAULT_SEED, samples: int = 20, max_n: int | None = None):
    """Disjoint union multiplies orders and keeps the factors' supports apart."""
    _check_limit(n, max_n)
    rng = random.Random(f"T-UNION:{seed}:{n}")
    count = 0
    pools = {k: list(enumerate_labeled_forests(k)) for k in range(1, n)}
    for n1 in range(1, n):
        n2 = n - n1
        for _ in range(samples):
            f1 = rng.choice(pools[n1])
            f2 = rng.choice(pools[n2])
            u = disjoint_union([f1, f2])
            count += 1
            g1, g2, gu = chain_group(f1), chain_group(f2), chain_group(u)
            s1 = g1.support()
            s2 = frozenset(x + n1 for x in g2.support())
            left = [x for x in gu.generators if x.support() <= frozenset(range(1, n1 + 1))]
            right = [x for x in gu.generators if x.support() <= frozenset(range(n1 + 1, n + 1))]
            problems = []
            if gu.order != g1.order * g2.order:
                problems.append(f"order {gu.order} != {g1.order} * {g2.order}")
            if s1 & s2 or gu.support() != s1 | s2:
                problems.append("supports overlap or differ")
            if len(left) + len(right) != len(gu.generators):
                problems.append("a generator straddles both parts")
            if problems:
                return FAIL, count, _cx(u, "direct product", "; ".join(problems), split=[n1, n2]), {}
    return PASS, count, None, {"seed": seed, "samples_per_split": samples}


def check_extended(n: int, max_n: int | None = None):
    """Components and leaf-to-leaf paths are extended subforests whose generators lie in the group."""
    _check_limit(n, max_n)
    count = 0
    for f in enumerate_labeled_forests(n):
        g = chain_group(f)
        subs = [induced_subforest(f, comp) for comp in components(f)]
        subs += [path_subforest(p) for p in maximal_paths(f)]
        for sub, emb in subs:
            count += 1
            if not is_extended_subforest(sub, f, emb):
                return FAIL, count, _cx(f, "extended subforest", f"not extended: {sorted(emb.values())}"), {}
            pi_images = [emb[v] for v in range(1, sub.n + 1)]
            for p in maximal_paths(sub):
                x = perm_from_cycles([[pi_images[v - 1] for v in p]], n)
                if not g.contains(x):
                    return FAIL, count, _cx(f, "subgroup", f"{x} not in chain group"), {}
    return PASS, count, None, {}


def check_length_two(n: int | None = None, constructed: bool = False, cap: int = DEFAULT_CAP,
                     max_tree_n: int = 9):
    """Trees with a length-two maximal path and odd leaf distances have chain group S_n."""
    if constructed:
        f = constructed_length_two_tree()
        cls = identify(chain_group(f), cap)
        if cls.label != f"Symmetric({f.n})":
            return FAIL, 1, _cx(f, f"Symmetric({f.n})", cls.label), {}
        return PASS, 1, None, {"class": cls.label, "n": f.n}
    if n is None or n < 4:
        return SKIPPED, 0, None, {"reason": "needs n >= 4"}
    if n > max_tree_n:
        raise LimitExceeded(f"exhaustive tree search limited to n <= {max_tree_n}")
    count = 0
    for f in enumerate_labeled_trees(n):
        if not length_two_hubs(f):
            continue
        count += 1
        g = chain_group(f)
        if g.order != math.factorial(n):
            cls = identify(g, cap)
            return FAIL, count, _cx(f, f"Symmetric({n})", cls.label), {}
    return PASS, count, None, {}


def ncycle_spiders(n: int) -> list[list[int]]:
    return [[1, a, n - 2 - a] for a in range(1, n - 2) if a <= n - 2 - a]


def check_ncycle(n: int, cap: int = DEFAULT_CAP, hypothesis: str = "odd", seed: int = DEFAULT_SEED):
    """Spiders [1, a, b] on n vertices with a leaf at odd (or even) hub distance contain an n-cycle.

    ``hypothesis="odd"`` is the claim as stated; ``"even"`` is the variant
    under which the explicit product is well formed.
    """
    if hypothesis not in ("odd", "even"):
        raise InvalidSpec(f"hypothesis must be 'odd' or 'even', got {hypothesis!r}")
    want = 1 if hypothesis == "odd" else 0
    count = 0
    for legs in ncycle_spiders(n):
        f = spider(legs)
        if not any(d % 2 == want for d in legs):
            continue
        count += 1
        g = chain_group(f)
        cert = full_cycle_certificate(f)
        found, witness = contains_full_cycle(g, n, structure=f, cap=cap, seed=seed)
        if cert is None or not is_full_cycle(cert) or not found:
            actual = {
                "legs": legs,
                "certificate": None if cert is None else str(cert),
                "contains_full_cycle": found,
                "all_generators_even": all(x.is_even() for x in g.generators),
            }
            return FAIL, count, _cx(f, "explicit product is an n-cycle", actual, legs=legs), {}
    return PASS, count, None, {"hypothesis": hypothesis}


def check_lemma61(n: int, max_tree_n: int = 9):
    """Trees with two branch vertices have a maximal path missing >= 3 vertices."""
    if n > max_tree_n:
        raise LimitExceeded(f"exhaustive tree search limited to n <= {max_tree_n}")
    if n < 6:
        # two branch vertices need at least six vertices
        return PASS, 0, None, {"note": "no tree on fewer than 6 vertices has two branch vertices"}
    count = 0
    for seq in product(range(1, n + 1), repeat=n - 2):
        if _branch_count(seq) < 2:
            continue
        count += 1
        f = prufer_tree(seq, n)
        if not _lemma61_holds(f):
            return FAIL, count, _cx(f, "maximal path C with n - |C| >= 3", "none"), {}
    return PASS, count, None, {}


def check_dihedral(n: int, cap: int = DEFAULT_CAP, max_n: int | None = None):
    """No chain group on [n] is dihedral of order 2n."""
    _check_limit(n, max_n)
    count = 0
    for f in enumerate_labeled_forests(n):
        count += 1
        g = chain_group(f)
        if is_dihedral(g, n, cap):
            return FAIL, count, _cx(f, f"not D_{2 * n}", identify(g, cap).label), {}
    return PASS, count, None, {}


@dataclass(frozen=True)
class Checker:
    func: Callable
    defaults: tuple[dict, ...]
    claim: str


def _range_params(lo, hi, **extra):
    return tuple(dict(n=k, **extra) for k in range(lo, hi + 1))


REGISTRY: dict[str, Checker] = {
    "T-ABELIAN": Checker(check_abelian, _range_params(1, 7),
                         "chain group abelian iff the forest is a disjoint union of paths"),
    "T-ELEMENTARY": Checker(
        check_elementary,
        tuple(dict(p=p, r=r, n=n) for p in (2, 3, 5) for n in range(1, 8) for r in range(1, 7 // p + 2)),
        "(Z/p)^r is a chain group on [n] iff rp <= n"),
    "T-MAXABELIAN": Checker(check_maxabelian, _range_params(1, 12),
                            "maximum-order abelian subgroups of S_n are chain groups"),
    "T-STAR": Checker(check_star, _range_params(3, 9), "the star on n vertices has chain group A_n"),
    "T-ANTENNA": Checker(check_antenna, tuple(dict(n=k) for k in (5, 7, 9, 11)),
                         "odd antennas have chain group S_n"),
    "T-RELABEL": Checker(check_relabel, _range_params(1, 6),
                         "relabeling conjugates the chain group"),
    "T-UNION": Checker(check_union, _range_params(2, 6),
                       "disjoint union gives the direct product"),
    "T-EXTENDED": Checker(check_extended, _range_params(1, 7),
                          "extended subforests give subgroups"),
    "T-LENGTH2": Checker(check_length_two, _range_params(4, 9) + (dict(constructed=True),),
                         "length-two trees with odd leaf distances have chain group S_n"),
    "T-NCYCLE": Checker(check_ncycle, _range_params(5, 11),
                        "spiders [1,a,b] with a leaf at odd hub distance contain an n-cycle"),
    "T-LEMMA61": Checker(check_lemma61, _range_params(6, 9),
                         "two branch vertices force a maximal path missing >= 3 vertices"),
    "T-DIHEDRAL": Checker(check_dihedral, _range_params(1, 7),
                          "D_2n is never the chain group of an n-vertex forest"),
}


def verify_theorem(theorem: str, **params) -> VerificationResult:
    try:
        checker = REGISTRY[theorem]
    except KeyError:
        raise UnknownTheorem(f"unknown theorem {theorem!r}; known: {', '.join(REGISTRY)}") from None
    start = time.perf_counter()
    status, instances, cx, details = checker.func(**params)
    elapsed = time.perf_counter() - start
    return VerificationResult(theorem, dict(params), status, instances, cx, details, elapsed)


def verify_defaults(theorem: str, **overrides) -> list[VerificationResult]:
    """Run a checker over its registered default parameter sets."""
    if theorem not in REGISTRY:
        raise UnknownTheorem(f"unknown theorem {theorem!r}; known: {', '.join(REGISTRY)}")
    return [verify_theorem(theorem, **{**p, **overrides}) for p in REGISTRY[theorem].defaults]


def recheck_counterexample(cx: dict, cap: int = DEFAULT_CAP) -> GroupClass:
    """Recompute the class of a counterexample forest from its payload alone."""
    f = Forest(cx["forest"]["n"], tuple(tuple(e) for e in cx["forest"]["edges"]))
    return identify(chain_group(f), cap)


__all__ = [
    "CensusRecord", "CensusReport", "VerificationResult", "REGISTRY", "PASS", "FAIL", "SKIPPED",
    "enumerate_labeled_forests", "enumerate_labeled_trees", "prufer_tree", "run_census",
    "census_records", "verify_theorem", "verify_defaults", "three_component_forest",
    "constructed_length_two_tree", "length_two_hubs", "chain_generators",
]
