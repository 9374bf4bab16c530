"""Labeled forests: parsing, structure, maximal paths and named families.

Vertices are ``1..n``.  A forest is immutable; edges are stored as sorted
pairs ``(u, v)`` with ``u < v``, in lexicographic order.

File format::

    # comment
    n 5
    e 1 2
    e 2 3
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    CycleDetected,
    DuplicateEdge,
    InvalidSpec,
    LabelOutOfRange,
    NotASubgraph,
    ParseError,
    SelfLoop,
    SizeMismatch,
)
from .perm import Permutation

Path = tuple[int, ...]


@dataclass(frozen=True)
class Forest:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise LabelOutOfRange(f"vertex count must be positive, got {self.n}")
        norm = []
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 1 <= x <= self.n:
                    raise LabelOutOfRange(f"vertex {x} outside 1..{self.n}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise DuplicateEdge(f"edge {a[0]} {a[1]} listed twice")
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in norm:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise CycleDetected(f"edge {u} {v} closes a cycle")
            parent[ru] = rv
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def _trusted(cls, n: int, edges: tuple[tuple[int, int], ...]) -> "Forest":
        # edges already normalized, sorted and acyclic
        obj = cls.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "edges", edges)
        return obj

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """``adjacency[v]`` is the sorted neighbor tuple of ``v``; index 0 unused."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def __str__(self):
        return format_forest(self).rstrip("\n")


@dataclass(frozen=True)
class DegreeProfile:
    degrees: dict[int, int]
    leaves: frozenset[int]
    branch_vertices: frozenset[int]


def parse_forest(text: str) -> Forest:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts[1:]]
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field in {raw!r}") from None
        if n is None:
            if parts[0] != "n" or len(nums) != 1:
                raise ParseError(f"line {lineno}: expected 'n <N>', got {raw!r}")
            n = nums[0]
            if n < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
        elif parts[0] == "e" and len(nums) == 2:
            edges.append((nums[0], nums[1]))
        else:
            raise ParseError(f"line {lineno}: expected 'e <u> <v>', got {raw!r}")
    if n is None:
        raise ParseError("missing 'n <N>' line")
    return Forest(n, tuple(edges))


def format_forest(f: Forest) -> str:
    lines = [f"n {f.n}"] + [f"e {u} {v}" for u, v in f.edges]
    return "\n".join(lines) + "\n"


def components(f: Forest) -> list[frozenset[int]]:
    """Connected components, each a vertex set, sorted by least vertex."""
    adj = f.adjacency
    seen = [False] * (f.n + 1)
    out = []
    for s in range(1, f.n + 1):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def degree_profile(f: Forest) -> DegreeProfile:
    degrees = {v: len(f.adjacency[v]) for v in range(1, f.n + 1)}
    return DegreeProfile(
        degrees,
        frozenset(v for v, d in degrees.items() if d == 1),
        frozenset(v for v, d in degrees.items() if d >= 3),
    )


def _parents_from(f: Forest, root: int) -> list[int]:
    adj = f.adjacency
    parent = [0] * (f.n + 1)
    parent[root] = -1
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if parent[w] == 0 and w != root:
                parent[w] = v
                queue.append(w)
    return parent


def tree_path(f: Forest, u: int, v: int) -> Path:
    """The unique path from ``u`` to ``v``; raises ValueError if disconnected."""
    parent = _parents_from(f, v)
    if u != v and parent[u] == 0:
        raise ValueError(f"vertices {u} and {v} are not connected")
    path = [u]
    while path[-1] != v:
        path.append(parent[path[-1]])
    return tuple(path)


def distances_from(f: Forest, source: int) -> dict[int, int]:
    adj = f.adjacency
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def maximal_paths(f: Forest) -> list[Path]:
    """One path per unordered leaf pair within each component.

    Paths run from the smaller endpoint to the larger one and are sorted
    lexicographically.  Isolated vertices contribute nothing.
    """
    adj = f.adjacency
    leaves = [v for v in range(1, f.n + 1) if len(adj[v]) == 1]
    out = []
    for i, a in enumerate(leaves):
        rest = leaves[i + 1:]
        if not rest:
            break
        parent = _parents_from(f, a)
        for b in rest:
            if parent[b] == 0:
                continue
            path = [b]
            while path[-1] != a:
                path.append(parent[path[-1]])
            path.reverse()
            out.append(tuple(path))
    out.sort()
    return out


def relabel(f: Forest, pi: Permutation) -> Forest:
    """Move every vertex ``v`` to ``pi(v)``."""
    if pi.n != f.n:
        raise SizeMismatch(f"relabeling of degree {pi.n} for a forest on {f.n} vertices")
    return Forest(f.n, tuple((pi(u), pi(v)) for u, v in f.edges))


def disjoint_union(forests: Sequence[Forest]) -> Forest:
    """Concatenate forests, shifting each one's labels past the previous ones."""
    if not forests:
        raise ValueError("disjoint union of no forests")
    shift = 0
    edges = []
    for f in forests:
        edges.extend((u + shift, v + shift) for u, v in f.edges)
        shift += f.n
    return Forest(shift, tuple(edges))


def is_extended_subforest(
    sub: Forest, sup: Forest, embedding: Mapping[int, int] | Sequence[int] | None = None
) -> bool:
    """True iff every leaf of ``sub`` lands on a leaf of ``sup``.

    ``embedding`` maps each vertex of ``sub`` to a vertex of ``sup``; a
    sequence is read as ``embedding[v - 1]``.  ``None`` means the identity.
    """
    phi = _embedding_map(sub, sup, embedding)
    for u, v in sub.edges:
        if not sup.has_edge(phi[u], phi[v]):
            raise NotASubgraph(f"edge {u} {v} maps to non-edge {phi[u]} {phi[v]}")
    return all(sup.degree(phi[v]) == 1 for v in range(1, sub.n + 1) if sub.degree(v) == 1)


def _embedding_map(sub, sup, embedding) -> dict[int, int]:
    if embedding is None:
        phi = {v: v for v in range(1, sub.n + 1)}
    elif isinstance(embedding, Mapping):
        phi = dict(embedding)
    else:
        phi = {i + 1: w for i, w in enumerate(embedding)}
    if set(phi) != set(range(1, sub.n + 1)):
        raise NotASubgraph("embedding must be defined on every vertex of the subforest")
    images = list(phi.values())
    if len(set(images)) != len(images) or not all(1 <= w <= sup.n for w in images):
        raise NotASubgraph("embedding must be injective into the ambient vertex set")
    return phi


def induced_subforest(f: Forest, vertices: Iterable[int]) -> tuple[Forest, dict[int, int]]:
    """Induced subgraph on ``vertices`` relabeled ``1..k`` in increasing order.

    Returns the subforest and its embedding (new label -> original label).
    """
    vs = sorted(set(vertices))
    index = {v: i + 1 for i, v in enumerate(vs)}
    edges = tuple((index[u], index[v]) for u, v in f.edges if u in index and v in index)
    return Forest(len(vs), edges), {i: v for v, i in index.items()}


def path_subforest(path: Sequence[int]) -> tuple[Forest, dict[int, int]]:
    """A path viewed as a forest ``1 - 2 - ... - k`` plus its embedding."""
    k = len(path)
    return Forest(k, tuple((i, i + 1) for i in range(1, k))), {i + 1: v for i, v in enumerate(path)}


# named families

FAMILY_KINDS = ("path", "star", "antenna", "spider", "maxabelian", "odd-distance", "union")


@dataclass(frozen=True)
class FamilySpec:
    """A named forest family and its parameters.

    ========== ==========================================================
    kind       params
    ========== ==========================================================
    path       ``(n,)``
    star       ``(n,)``, center 1
    antenna    ``(n,)``, ``n >= 4``
    spider     leg lengths ``(l1, ..., lk)``, each ``>= 1``
    maxabelian ``(n,)`` or ``(n, "A"|"B")``; the variant only for n = 1 mod 3
    odd-distance arms ``((stem, leaves), ...)`` with odd stem lengths
    union      member ``FamilySpec`` values
    ========== ==========================================================
    """

    kind: str
    params: tuple = field(default=())

    def __str__(self):
        if self.kind == "union":
            return "union(" + ", ".join(map(str, self.params)) + ")"
        if self.kind == "odd-distance":
            return "odd-distance " + " ".join(f"{s}:{c}" for s, c in self.params)
        return " ".join([self.kind, *map(str, self.params)])


def path_graph(n: int) -> Forest:
    return Forest._trusted(n, tuple((i, i + 1) for i in range(1, n)))


def star(n: int) -> Forest:
    return Forest._trusted(n, tuple((1, i) for i in range(2, n + 1)))


def antenna(n: int) -> Forest:
    """Hub 3 joined to leaves 1 and 2 and to the tail 3 - 4 - ... - n."""
    return Forest(n, ((1, 3), (2, 3)) + tuple((i, i + 1) for i in range(3, n)))


def spider(legs: Sequence[int]) -> Forest:
    """Hub 1 with pendant paths of the given lengths, labeled leg by leg."""
    edges = []
    nxt = 2
    for length in legs:
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Forest(nxt - 1, tuple(edges))


def odd_distance_tree(arms: Sequence[tuple[int, int]]) -> Forest:
    """Leaves 1, 2 on hub 3, then one arm per ``(stem, leaves)`` pair.

    An arm is a path of ``stem`` vertices hanging from the hub whose last
    vertex carries ``leaves`` pendant leaves, so those leaves sit at distance
    ``stem + 1`` (even) from the hub.
    """
    edges = [(1, 3), (2, 3)]
    nxt = 4
    for stem, leaves in arms:
        prev = 3
        for _ in range(stem):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        for _ in range(leaves):
            edges.append((prev, nxt))
            nxt += 1
    return Forest(nxt - 1, tuple(edges))


def max_abelian_witness(n: int, variant: str | None = None) -> Forest:
    k, r = divmod(n, 3)
    if n == 1:
        parts = [1]
    elif r == 0:
        parts = [3] * k
    elif r == 2:
        parts = [3] * k + [2]
    elif variant == "A":
        parts = [3] * (k - 1) + [4]
    elif variant == "B":
        parts = [3] * (k - 1) + [2, 2]
    else:
        raise InvalidSpec(f"maxabelian {n} needs variant A or B")
    if variant is not None and (r != 1 or n == 1):
        raise InvalidSpec(f"maxabelian variants apply only to n = 1 mod 3 with n >= 4, got {n}")
    return disjoint_union([path_graph(p) for p in parts])


def make_family(spec: FamilySpec) -> Forest:
    kind, params = spec.kind, tuple(spec.params)

    def single_int(minimum):
        if len(params) != 1 or not isinstance(params[0], int):
            raise InvalidSpec(f"{kind} takes one integer parameter, got {params!r}")
        if params[0] < minimum:
            raise InvalidSpec(f"{kind} requires n >= {minimum}, got {params[0]}")
        return params[0]

    if kind == "path":
        return path_graph(single_int(1))
    if kind == "star":
        return star(single_int(2))
    if kind == "antenna":
        return antenna(single_int(4))
    if kind == "spider":
        if not params or any(not isinstance(x, int) or x < 1 for x in params):
            raise InvalidSpec(f"spider legs must be positive integers, got {params!r}")
        return spider(params)
    if kind == "maxabelian":
        if len(params) not in (1, 2) or not isinstance(params[0], int) or params[0] < 1:
            raise InvalidSpec(f"maxabelian takes n >= 1 and an optional variant, got {params!r}")
        variant = params[1] if len(params) == 2 else None
        if variant not in (None, "A", "B"):
            raise InvalidSpec(f"unknown maxabelian variant {variant!r}")
        return max_abelian_witness(params[0], variant)
    if kind == "odd-distance":
        if not params:
            raise InvalidSpec("odd-distance needs at least one arm")
        for arm in params:
            if len(arm) != 2 or arm[0] < 1 or arm[0] % 2 == 0 or arm[1] < 1:
                raise InvalidSpec(f"arm {arm!r} needs an odd stem >= 1 and >= 1 leaves")
        return odd_distance_tree(params)
    if kind == "union":
        if not params or not all(isinstance(p, FamilySpec) for p in params):
            raise InvalidSpec("union takes one or more FamilySpec members")
        return disjoint_union([make_family(p) for p in params])
    raise InvalidSpec(f"unknown family {kind!r}; expected one of {', '.join(FAMILY_KINDS)}")


def parse_family(tokens: Sequence[str]) -> FamilySpec:
    """Build a FamilySpec from command-line style tokens, e.g. ``["spider", "1", "2", "3"]``.

    A union is written ``union <spec> + <spec> + ...``.
    """
    if not tokens:
        raise InvalidSpec("empty family specification")
    kind, rest = tokens[0], list(tokens[1:])
    if kind == "union":
        members, current = [], []
        for tok in rest:
            if tok == "+":
                members.append(current)
                current = []
            else:
                current.extend(tok.split())
        members.append(current)
        return FamilySpec("union", tuple(parse_family(m) for m in members))
    try:
        if kind == "odd-distance":
            arms = []
            for tok in rest:
                stem, _, leaves = tok.partition(":")
                arms.append((int(stem), int(leaves)))
            return FamilySpec(kind, tuple(arms))
        if kind == "maxabelian" and len(rest) == 2:
            return FamilySpec(kind, (int(rest[0]), rest[1].upper()))
        return FamilySpec(kind, tuple(int(t) for t in rest))
    except ValueError:
        raise InvalidSpec(f"bad parameters for {kind}: {' '.join(rest)!r}") from None
