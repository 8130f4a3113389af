"""Finite semigroups given by Cayley tables, and their monogenic structure.

Elements are the dense ids ``0..n-1``; row ``x``, column ``y`` of the table
holds ``x*y``.  Subsets of a semigroup are :class:`ElementSet` bitsets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    EmptyGeneratorSet,
    InconsistentFormulations,
    MalformedTable,
    NotAssociative,
    NotClosed,
    NotIdempotent,
    OutOfRangeEntry,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power_base(n: int) -> int | None:
    """Return ``p`` if ``n == p**k`` with ``k >= 1``, 1 if ``n == 1``, else None."""
    if n < 1:
        return None
    if n == 1:
        return 1
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def is_prime_power(n: int) -> bool:
    """True for ``p**k`` with ``k >= 0``; 1 counts as ``p**0``."""
    return prime_power_base(n) is not None


class ElementSet:
    """Immutable subset of ``0..order-1`` stored as an int bitmask."""

    __slots__ = ("order", "mask")

    def __init__(self, order: int, mask: int = 0):
        if mask >> order:
            raise ValueError(f"mask {mask:#x} has ids >= {order}")
        self.order = order
        self.mask = mask

    @classmethod
    def of(cls, order: int, ids: Iterable[int]) -> ElementSet:
        mask = 0
        for i in ids:
            if not 0 <= i < order:
                raise ValueError(f"element id {i} out of range for order {order}")
            mask |= 1 << i
        return cls(order, mask)

    @classmethod
    def full(cls, order: int) -> ElementSet:
        return cls(order, (1 << order) - 1)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 0 <= x < self.order and bool(self.mask >> x & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ElementSet):
            return self.order == other.order and self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.mask))

    def _check(self, other: ElementSet) -> None:
        if self.order != other.order:
            raise ValueError("element sets belong to semigroups of different order")

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.order, self.mask | other.mask)

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.order, self.mask & other.mask)

    def __sub__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.order, self.mask & ~other.mask)

    def issubset(self, other: ElementSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def ids(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"ElementSet({{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class MonogenicProfile:
    """Index, period and orbit of one element ``a``.

    ``orbit[k]`` is ``a**(k+1)``; the kernel is the cyclic group formed by the
    last ``period`` powers.
    """

    generator: int
    index: int
    period: int
    orbit: tuple[int, ...]
    kernel: ElementSet
    idempotent: int
    orbit_set: ElementSet = field(repr=False)

    def power(self, k: int) -> int:
        """``a**k`` for any ``k >= 1``, using ``a**s = a**(m + (s-m) mod r)``."""
        if k < 1:
            raise ValueError("exponent must be positive")
        if k >= self.index:
            k = self.index + (k - self.index) % self.period
        return self.orbit[k - 1]


class Semigroup:
    """A finite semigroup given by a validated Cayley table.

    Construction checks closure and associativity; every other operation
    in the package assumes a valid table.
    """

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None):
        n = len(table)
        if n == 0:
            raise MalformedTable("a semigroup needs at least one element")
        rows = []
        for x, row in enumerate(table):
            if len(row) != n:
                raise MalformedTable(f"row {x} has {len(row)} entries, expected {n}")
            for y, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, int):
                    raise MalformedTable(f"table[{x}][{y}] = {v!r} is not an integer")
            rows.append(tuple(row))
        for x, row in enumerate(rows):
            for y, v in enumerate(row):
                if not 0 <= v < n:
                    raise OutOfRangeEntry(x, y, v, n)
        _check_associative(rows)
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != n:
                raise MalformedTable(f"{len(names)} names given for {n} elements")
        self.order = n
        self.table: tuple[tuple[int, ...], ...] = tuple(rows)
        self.names: tuple[str, ...] | None = names
        self._closures: dict[int, int] = {}

    def product(self, x: int, y: int) -> int:
        return self.table[x][y]

    def label(self, x: int) -> str:
        return self.names[x] if self.names else f"e{x}"

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Semigroup):
            return self.table == other.table
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"Semigroup(order={self.order})"

    @cached_property
    def profiles(self) -> tuple[MonogenicProfile, ...]:
        return tuple(_profile(self, a) for a in range(self.order))

    @cached_property
    def orbit_masks(self) -> tuple[int, ...]:
        return tuple(p.orbit_set.mask for p in self.profiles)

    @cached_property
    def is_commutative(self) -> bool:
        t = self.table
        return all(t[x][y] == t[y][x] for x in range(self.order) for y in range(x + 1, self.order))

    def to_json(self) -> dict:
        doc = {"order": self.order, "table": [list(r) for r in self.table]}
        if self.names:
            doc["names"] = list(self.names)
        return doc


def _check_associative(rows: Sequence[Sequence[int]]) -> None:
    n = len(rows)
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            xy = rx[y]
            rxy = rows[xy]
            ry = rows[y]
            for z in range(n):
                left = rxy[z]
                right = rx[ry[z]]
                if left != right:
                    raise NotAssociative(x, y, z, left, right)


def validate_table(order: int, table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> Semigroup:
    if not isinstance(order, int) or order < 1:
        raise MalformedTable(f"order must be a positive integer, got {order!r}")
    if len(table) != order:
        raise MalformedTable(f"order is {order} but the table has {len(table)} rows")
    return Semigroup(table, names)


def semigroup_from_json(doc: dict) -> Semigroup:
    if not isinstance(doc, dict) or "order" not in doc or "table" not in doc:
        raise MalformedTable('expected an object with "order" and "table"')
    table = doc["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise MalformedTable('"table" must be a list of rows')
    return validate_table(doc["order"], table, doc.get("names"))


def load_semigroup(path) -> Semigroup:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedTable(f"{path}: not valid JSON ({exc})") from None
    return semigroup_from_json(doc)


def product(S: Semigroup, x: int, y: int) -> int:
    return S.table[x][y]


def _profile(S: Semigroup, a: int) -> MonogenicProfile:
    row = S.table
    seen = {a: 1}
    orbit = [a]
    p = a
    while True:
        p = row[p][a]
        if p in seen:
            m = seen[p]
            break
        seen[p] = len(orbit) + 1
        orbit.append(p)
    r = len(orbit) + 1 - m
    n = S.order
    kernel = ElementSet.of(n, orbit[m - 1:])
    # the kernel's identity is the unique power a^k with k >= m and r | k
    k = m + (-m) % r
    return MonogenicProfile(
        generator=a,
        index=m,
        period=r,
        orbit=tuple(orbit),
        kernel=kernel,
        idempotent=orbit[k - 1],
        orbit_set=ElementSet.of(n, orbit),
    )


def monogenic_profile(S: Semigroup, a: int) -> MonogenicProfile:
    if not 0 <= a < S.order:
        raise IndexError(f"element {a} not in semigroup of order {S.order}")
    return S.profiles[a]


def _as_set(S: Semigroup, X) -> ElementSet:
    if isinstance(X, ElementSet):
        if X.order != S.order:
            raise ValueError("element set belongs to a semigroup of different order")
        return X
    return ElementSet.of(S.order, X)


def closure_mask(S: Semigroup, mask: int) -> int:
    """Bitmask of the subsemigroup generated by the elements of ``mask``."""
    cached = S._closures.get(mask)
    if cached is not None:
        return cached
    gens = list(ElementSet(S.order, mask))
    t = S.table
    out = mask
    frontier = list(gens)
    # every element of <X> is a word in X, so right-multiplying by generators suffices
    while frontier:
        nxt = []
        for s in frontier:
            row = t[s]
            for g in gens:
                v = row[g]
                if not out >> v & 1:
                    out |= 1 << v
                    nxt.append(v)
        frontier = nxt
    S._closures[mask] = out
    return out


def generated(S: Semigroup, X) -> ElementSet:
    X = _as_set(S, X)
    if not X:
        raise EmptyGeneratorSet("cannot generate a subsemigroup from the empty set")
    return ElementSet(S.order, closure_mask(S, X.mask))


def is_closed(S: Semigroup, X) -> bool:
    X = _as_set(S, X)
    ids = list(X)
    t = S.table
    return all(X.mask >> t[x][y] & 1 for x in ids for y in ids)


def monogenic_generator_of_mask(S: Semigroup, mask: int) -> int | None:
    """Least ``a`` with ``<a>`` equal to the (closed) set ``mask``, or None."""
    orbits = S.orbit_masks
    for a in ElementSet(S.order, mask):
        if orbits[a] == mask:
            return a
    return None


def is_monogenic(S: Semigroup, subset=None) -> int | None:
    """Least generator of ``subset`` (default: all of ``S``), or None.

    Raises NotClosed when ``subset`` is not a subsemigroup.
    """
    X = ElementSet.full(S.order) if subset is None else _as_set(S, subset)
    if not X:
        raise EmptyGeneratorSet("the empty set is not a subsemigroup")
    if not is_closed(S, X):
        raise NotClosed(f"{X!r} is not closed under the product")
    return monogenic_generator_of_mask(S, X.mask)


def idempotents(S: Semigroup) -> ElementSet:
    t = S.table
    return ElementSet.of(S.order, (e for e in range(S.order) if t[e][e] == e))


def s_f_partition(S: Semigroup) -> dict[int, ElementSet]:
    blocks: dict[int, int] = {}
    for p in S.profiles:
        blocks[p.idempotent] = blocks.get(p.idempotent, 0) | 1 << p.generator
    return {f: ElementSet(S.order, blocks[f]) for f in sorted(blocks)}


def maximal_subgroup_at(S: Semigroup, f: int) -> ElementSet:
    """The group of units ``H_f`` of the local monoid at idempotent ``f``."""
    t = S.table
    if t[f][f] != f:
        raise NotIdempotent(f"element {f} is not idempotent")
    local = [x for x in range(S.order) if t[x][f] == x and t[f][x] == x]
    units = [x for x in local if any(t[x][y] == f and t[y][x] == f for y in local)]
    H = ElementSet.of(S.order, units)
    if not is_closed(S, H):
        raise InconsistentFormulations(f"units at {f} are not closed; table is not associative")
    return H


def cyclic_subgroups(S: Semigroup) -> list[ElementSet]:
    """Distinct subgroups of ``S`` that are cyclic, i.e. orbits of index-1 elements."""
    found = {p.orbit_set for p in S.profiles if p.index == 1}
    return sorted(found, key=lambda s: (len(s), s.ids()))


def cpxcp_witness(S: Semigroup) -> tuple[int, int, int] | None:
    """``(x, y, p)`` spanning a copy of ``C_p x C_p`` inside some ``H_f``, or None.

    Commuting ``x, y`` of the same prime order ``p`` with ``y`` outside
    ``<x>`` generate such a subgroup.
    """
    t = S.table
    profiles = S.profiles
    for f in idempotents(S):
        H = maximal_subgroup_at(S, f).ids()
        for i, x in enumerate(H):
            p = profiles[x].period
            if not is_prime(p):
                continue
            ox = profiles[x].orbit_set
            for y in H[i + 1:]:
                if profiles[y].period == p and y not in ox and t[x][y] == t[y][x]:
                    return x, y, p
    return None


def has_cpxcp_subgroup(S: Semigroup) -> bool:
    return cpxcp_witness(S) is not None
