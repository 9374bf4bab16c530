"""Brute-force oracles shared by the test modules.

Nothing here goes through the stabilizer chain or the library's own path
enumeration, so agreement with the library is a genuine cross-check.
"""

from itertools import permutations

from chaingroup.perm import Permutation

ORACLE_ORDER_LIMIT = 10_000


def all_perms(n):
    return [Permutation(list(p)) for p in permutations(range(1, n + 1))]


def bfs_closure_size(gens, limit=ORACLE_ORDER_LIMIT):
    """Size of the closure of ``gens`` under composition, or None past ``limit``."""
    gens = [tuple(g.images) for g in gens]
    if not gens:
        return 1
    n = len(gens[0])
    ident = tuple(range(1, n + 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(x[g[i] - 1] for i in range(n))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        return None
        frontier = nxt
    return len(seen)


def record_group(g, cap=ORACLE_ORDER_LIMIT):
    """Assert chain order == brute-force count for a group of order <= cap."""
    if g.order > cap:
        return
    size = bfs_closure_size(g.generators, cap)
    assert size == g.order, (g, size, g.order)
    assert len(g.enumerate_elements(cap)) == g.order


def simple_paths(f):
    """Every simple path of ``f`` with at least one vertex, as vertex tuples."""
    adj = {v: set(f.adjacency[v]) for v in range(1, f.n + 1)}
    out = []

    def extend(path):
        out.append(tuple(path))
        for w in adj[path[-1]]:
            if w not in path:
                path.append(w)
                extend(path)
                path.pop()

    for v in range(1, f.n + 1):
        extend([v])
    return out


def maximal_paths_oracle(f):
    """Simple paths that cannot be extended at either end, smaller end first.

    Each path is found once per orientation; only the canonical one is kept.
    Lone vertices are dropped since they contribute no generator.
    """
    adj = {v: set(f.adjacency[v]) for v in range(1, f.n + 1)}
    keep = set()
    for p in simple_paths(f):
        if len(p) < 2:
            continue
        head_free = any(w not in p for w in adj[p[0]])
        tail_free = any(w not in p for w in adj[p[-1]])
        if head_free or tail_free:
            continue
        keep.add(p if p[0] < p[-1] else p[::-1])
    return sorted(keep)
