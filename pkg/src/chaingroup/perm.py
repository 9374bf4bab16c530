"""Exact permutation arithmetic and stabilizer-chain permutation groups.

Points are the integers ``1..n``.  Composition is right-to-left: ``p * q``
applies ``q`` first, then ``p``, so that

>>> p = perm_from_cycles([(1, 2, 3, 4)], 5) * perm_from_cycles([(1, 2, 3, 5)], 5)
>>> str(p)
'(1 3 5 2 4)'

Groups are built with a deterministic Schreier-Sims procedure.  Internally
every permutation is a 0-based tuple of images; the public classes wrap that
representation and translate to 1-based points at the boundary.
"""

from __future__ import annotations

import math
import random
import re
from collections import deque
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .errors import CapExceeded, ParseError, PointOutOfRange, RepeatedPoint, SizeMismatch

DEFAULT_CAP = 20_000

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _compose(p, q):
    return tuple(map(p.__getitem__, q))


def _inverse(p):
    return tuple(sorted(range(len(p)), key=p.__getitem__))


def _cycles0(a):
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            continue
        cyc = [i]
        seen[i] = True
        j = a[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = a[j]
        out.append(cyc)
    return out


class Permutation:
    """A bijection of ``{1, ..., n}`` with an explicit degree ``n``.

    ``images[i - 1]`` is the image of point ``i``.  Permutations of different
    degree never mix; operations between them raise :class:`SizeMismatch`.
    """

    __slots__ = ("_a", "_hash")

    def __init__(self, images: Sequence[int]):
        a = tuple(int(x) - 1 for x in images)
        n = len(a)
        if sorted(a) != list(range(n)):
            raise ValueError(f"not a permutation of 1..{n}: {tuple(images)!r}")
        self._a = a
        self._hash = None

    @classmethod
    def _raw(cls, a: tuple) -> "Permutation":
        obj = cls.__new__(cls)
        obj._a = a
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self._a)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self._a)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= len(self._a):
            raise PointOutOfRange(f"point {x} outside 1..{len(self._a)}")
        return self._a[x - 1] + 1

    def _check(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other._a) != len(self._a):
            raise SizeMismatch(f"degrees {len(self._a)} and {len(other._a)} differ")
        return None

    def __mul__(self, other: "Permutation") -> "Permutation":
        bad = self._check(other)
        if bad is NotImplemented:
            return bad
        return Permutation._raw(_compose(self._a, other._a))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = tuple(range(len(self._a)))
        a = base._a
        while k:
            if k & 1:
                result = _compose(result, a)
            a = _compose(a, a)
            k >>= 1
        return Permutation._raw(result)

    def inverse(self) -> "Permutation":
        return Permutation._raw(_inverse(self._a))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._a))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, least point first, sorted by least point."""
        return [tuple(x + 1 for x in c) for c in _cycles0(self._a)]

    def cycle_type(self) -> list[int]:
        return sorted(len(c) for c in _cycles0(self._a))

    def order(self) -> int:
        return reduce(math.lcm, self.cycle_type(), 1)

    def parity(self) -> int:
        """+1 for even permutations, -1 for odd ones."""
        swaps = sum(len(c) - 1 for c in _cycles0(self._a))
        return -1 if swaps % 2 else 1

    def is_even(self) -> bool:
        return self.parity() == 1

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, x in enumerate(self._a) if x != i)

    def commutes_with(self, other: "Permutation") -> bool:
        self._check(other)
        return _compose(self._a, other._a) == _compose(other._a, self._a)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._a == other._a

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._a)
        return self._hash

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation.from_cycles({str(self)!r}, {self.n})"

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Permutation":
        if isinstance(cycles, str):
            return parse_cycles(cycles, n)
        return perm_from_cycles(cycles, n)


def perm_from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Permutation:
    """Build the permutation of degree ``n`` with the given disjoint cycles."""
    a = list(range(n))
    seen = set()
    for cyc in cycles:
        cyc = [int(x) for x in cyc]
        for x in cyc:
            if not 1 <= x <= n:
                raise PointOutOfRange(f"point {x} outside 1..{n}")
            if x in seen:
                raise RepeatedPoint(f"point {x} listed twice")
            seen.add(x)
        for x, y in zip(cyc, cyc[1:] + cyc[:1]):
            a[x - 1] = y - 1
    return Permutation._raw(tuple(a))


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(1 2 4)(3 5)"``; ``"()"`` is the identity."""
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise ParseError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.replace(",", " ").split()
        try:
            cycles.append([int(t) for t in tokens])
        except ValueError:
            raise ParseError(f"malformed cycle notation: {text!r}") from None
    return perm_from_cycles([c for c in cycles if c], n)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p o q``: apply ``q`` first, then ``p``."""
    return p * q


class _Level:
    __slots__ = ("point", "gens", "trans", "tinv")

    def __init__(self, point, ident):
        self.point = point
        self.gens = []
        self.trans = {point: ident}
        self.tinv = {point: ident}


class PermGroup:
    """The subgroup of S_n generated by ``gens``.

    The stabilizer chain is built on first use of any chain-backed query and
    is read-only afterwards.  Base points are chosen as the smallest point
    moved by the generators (first level) or by the new strong generator
    (deeper levels).
    """

    def __init__(self, gens: Iterable[Permutation] = (), n: int | None = None):
        gens = list(gens)
        if n is None:
            if not gens:
                raise ValueError("degree required for an empty generating set")
            n = gens[0].n
        for g in gens:
            if g.n != n:
                raise SizeMismatch(f"generator of degree {g.n} in a group of degree {n}")
        self.n = n
        self.generators: tuple[Permutation, ...] = tuple(gens)

    def __repr__(self):
        gens = ", ".join(map(str, self.generators))
        return f"PermGroup([{gens}], n={self.n})"

    # stabilizer chain

    @cached_property
    def _levels(self) -> list[_Level]:
        n = self.n
        ident = tuple(range(n))
        levels: list[_Level] = []

        def member(h, k):
            for j in range(k, len(levels)):
                lv = levels[j]
                x = h[lv.point]
                if x == lv.point:
                    continue
                u = lv.tinv.get(x)
                if u is None:
                    return False
                h = _compose(u, h)
            return h == ident

        def add_gen(k, g):
            if k == len(levels):
                levels.append(_Level(next(i for i in range(n) if g[i] != i), ident))
            lv = levels[k]
            lv.gens.append(g)
            b = lv.point
            gens = lv.gens
            trans = lv.trans
            tinv = lv.tinv
            stack = [_compose(g, u) for u in list(trans.values())]
            while stack:
                p = stack.pop()
                x = p[b]
                u = tinv.get(x)
                if u is None:
                    trans[x] = p
                    tinv[x] = _inverse(p)
                    stack.extend(_compose(s, p) for s in gens)
                else:
                    h = _compose(u, p)
                    if h != ident and not member(h, k + 1):
                        add_gen(k + 1, h)

        raw = [g._a for g in self.generators if not g.is_identity()]
        if raw:
            first = min(i for g in raw for i in range(n) if g[i] != i)
            levels.append(_Level(first, ident))
            for g in raw:
                if not member(g, 0):
                    add_gen(0, g)
        return levels

    @property
    def base(self) -> list[int]:
        return [lv.point + 1 for lv in self._levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        out, seen = [], set()
        for lv in self._levels:
            for g in lv.gens:
                if g not in seen:
                    seen.add(g)
                    out.append(Permutation._raw(g))
        return out

    @property
    def transversals(self) -> list[dict[int, Permutation]]:
        """Per base point: orbit point -> coset representative mapping the base point there."""
        return [
            {x + 1: Permutation._raw(u) for x, u in sorted(lv.trans.items())}
            for lv in self._levels
        ]

    @property
    def orbit_sizes(self) -> list[int]:
        return [len(lv.trans) for lv in self._levels]

    @cached_property
    def order(self) -> int:
        return math.prod(self.orbit_sizes)

    def _sift(self, a):
        for lv in self._levels:
            x = a[lv.point]
            if x == lv.point:
                continue
            u = lv.tinv.get(x)
            if u is None:
                return a
            a = _compose(u, a)
        return a

    def sift(self, p: Permutation) -> Permutation:
        """Residue of ``p`` after stripping through the chain (identity iff member)."""
        self._same_degree(p)
        return Permutation._raw(self._sift(p._a))

    def contains(self, p: Permutation) -> bool:
        self._same_degree(p)
        res = self._sift(p._a)
        return all(i == x for i, x in enumerate(res))

    __contains__ = contains

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniformly random element, as a product of random coset representatives."""
        a = tuple(range(self.n))
        for lv in self._levels:
            keys = sorted(lv.trans)
            a = _compose(a, lv.trans[keys[rng.randrange(len(keys))]])
        return Permutation._raw(a)

    # generator-level queries

    def _same_degree(self, p: Permutation):
        if p.n != self.n:
            raise SizeMismatch(f"permutation of degree {p.n} against group of degree {self.n}")

    def is_abelian(self) -> bool:
        gens = [g._a for g in self.generators]
        for i, g in enumerate(gens):
            for h in gens[i + 1:]:
                if _compose(g, h) != _compose(h, g):
                    return False
        return True

    @cached_property
    def _orbits(self) -> tuple[frozenset[int], ...]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, x in enumerate(g._a):
                ri, rx = find(i), find(x)
                if ri != rx:
                    parent[max(ri, rx)] = min(ri, rx)
        groups: dict[int, set[int]] = {}
        for i in range(self.n):
            groups.setdefault(find(i), set()).add(i + 1)
        return tuple(frozenset(s) for _, s in sorted(groups.items()))

    def orbits(self) -> list[frozenset[int]]:
        """Orbit partition of ``1..n``, sorted by least point."""
        return list(self._orbits)

    def support(self) -> frozenset[int]:
        return frozenset().union(*(o for o in self._orbits if len(o) > 1))

    def is_transitive_on_support(self) -> bool:
        """True iff exactly one orbit is non-trivial (false for the trivial group)."""
        return sum(1 for o in self._orbits if len(o) > 1) == 1

    def is_transitive(self) -> bool:
        return len(self._orbits) == 1

    def enumerate_elements(self, cap: int = DEFAULT_CAP) -> list[Permutation]:
        """All elements by breadth-first closure under right multiplication.

        Independent of the stabilizer chain; raises :class:`CapExceeded` as
        soon as more than ``cap`` elements have been found.
        """
        if cap < 1:
            raise ValueError("cap must be at least 1")
        ident = tuple(range(self.n))
        gens = [g._a for g in self.generators]
        seen = {ident}
        out = [ident]
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = _compose(x, g)
                if y not in seen:
                    if len(out) >= cap:
                        raise CapExceeded(cap)
                    seen.add(y)
                    out.append(y)
                    queue.append(y)
        return [Permutation._raw(a) for a in out]

    def conjugate(self, pi: Permutation) -> "PermGroup":
        """The group generated by ``pi * g * pi^-1`` for each generator ``g``."""
        self._same_degree(pi)
        inv = pi.inverse()
        return PermGroup([pi * g * inv for g in self.generators], self.n)


def generate_group(gens: Iterable[Permutation], n: int | None = None) -> PermGroup:
    group = PermGroup(gens, n)
    group._levels  # noqa: B018 - force the chain
    return group


def group_order(group: PermGroup) -> int:
    return group.order


def contains(group: PermGroup, p: Permutation) -> bool:
    return group.contains(p)


def conjugate_group(group: PermGroup, pi: Permutation) -> PermGroup:
    return group.conjugate(pi)


def enumerate_elements(group: PermGroup, cap: int = DEFAULT_CAP) -> list[Permutation]:
    return group.enumerate_elements(cap)
