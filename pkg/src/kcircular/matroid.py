"""Finite matroids given by an explicit circuit family, with brute-force oracles.

Subsets of the ground set are handled internally as bitmasks in the order of
the sorted ground labels.  Every oracle is exhaustive over the ``2**n`` subsets,
so the ground set is limited to :data:`MAX_GROUND` elements.
"""
from __future__ import annotations

import json
from functools import cached_property
from typing import Iterable, Mapping

from .errors import EnumerationLimitError

__all__ = [
    "MAX_GROUND",
    "Matroid",
    "validate",
    "rank",
    "bases",
    "cocircuits",
    "fundamental",
    "fundamental_circuit",
    "fundamental_cocircuit",
    "is_connected",
    "delete",
    "equals",
]

MAX_GROUND = 20


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


class Matroid:
    """Matroid ``(ground, circuits)``.

    The constructor does not check the circuit axioms; call :func:`validate`.
    """

    def __init__(self, ground: Iterable, circuits: Iterable[Iterable] = ()):
        self.ground = tuple(sorted({str(e) for e in ground}))
        self._index = {e: i for i, e in enumerate(self.ground)}
        self.circuits = frozenset(frozenset(str(e) for e in c) for c in circuits)
        for c in self.circuits:
            if not c <= self._index.keys():
                raise ValueError(f"circuit {sorted(c)} is not inside the ground set")

    # -- bitmask plumbing --------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << len(self.ground)) - 1

    def mask(self, x: Iterable) -> int:
        m = 0
        for e in x:
            try:
                m |= 1 << self._index[e]
            except KeyError:
                raise KeyError(f"{e!r} is not in the ground set") from None
        return m

    def members(self, mask: int) -> frozenset:
        return frozenset(self.ground[i] for i in range(len(self.ground)) if mask >> i & 1)

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        return tuple(sorted(self.mask(c) for c in self.circuits))

    def _check_size(self):
        if len(self.ground) > MAX_GROUND:
            raise EnumerationLimitError(
                f"ground set of size {len(self.ground)} exceeds the oracle limit {MAX_GROUND}"
            )

    @cached_property
    def _dependent(self) -> list[bool]:
        """``dep[X]``: X contains a circuit (superset closure of the circuits)."""
        self._check_size()
        n = len(self.ground)
        dep = [False] * (1 << n)
        for c in self.circuit_masks:
            dep[c] = True
        for i in range(n):
            bit = 1 << i
            for x in range(1 << n):
                if x & bit and not dep[x] and dep[x ^ bit]:
                    dep[x] = True
        return dep

    @cached_property
    def _rank_table(self) -> list[int]:
        dep = self._dependent
        table = [0] * len(dep)
        for x in range(1, len(dep)):
            if dep[x]:
                table[x] = max(table[x ^ b] for b in _bits(x))
            else:
                table[x] = x.bit_count()
        return table

    def rank_mask(self, mask: int) -> int:
        return self._rank_table[mask]

    def is_independent_mask(self, mask: int) -> bool:
        return not self._dependent[mask]

    # -- derived families --------------------------------------------------

    @cached_property
    def rho(self) -> int:
        return self._rank_table[self.full]

    @property
    def corank(self) -> int:
        return len(self.ground) - self.rho

    @cached_property
    def base_masks(self) -> tuple[int, ...]:
        r, dep = self.rho, self._dependent
        return tuple(x for x in range(len(dep)) if not dep[x] and x.bit_count() == r)

    @cached_property
    def bases(self) -> frozenset:
        return frozenset(self.members(b) for b in self.base_masks)

    @cached_property
    def cocircuit_masks(self) -> tuple[int, ...]:
        # K meets every base  <=>  E \ K contains no base  <=>  rank(E \ K) < rho
        full, r, table = self.full, self.rho, self._rank_table
        transversal = [table[full ^ k] < r for k in range(full + 1)]
        return tuple(
            k
            for k in range(1, full + 1)
            if transversal[k] and not any(transversal[k ^ b] for b in _bits(k))
        )

    @cached_property
    def cocircuits(self) -> frozenset:
        return frozenset(self.members(k) for k in self.cocircuit_masks)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and self.circuits == other.circuits

    def __hash__(self):
        return hash((self.ground, self.circuits))

    def __repr__(self):
        return f"Matroid(|E|={len(self.ground)}, circuits={len(self.circuits)})"

    def sorted_circuits(self) -> list[list[str]]:
        return sorted(sorted(c) for c in self.circuits)

    def to_dict(self) -> dict:
        return {"ground": list(self.ground), "circuits": self.sorted_circuits()}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Matroid":
        return cls(data["ground"], data["circuits"])

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text: str) -> "Matroid":
        return cls.from_dict(json.loads(text))


# ----------------------------------------------------------------------


def validate(m: Matroid) -> bool:
    """Antichain, no empty circuit, and weak circuit elimination."""
    cs = m.circuit_masks
    if 0 in cs:
        return False
    for i, a in enumerate(cs):
        for b in cs[i + 1:]:
            if a & b in (a, b):
                return False
    dep = m._dependent
    for i, a in enumerate(cs):
        for b in cs[i + 1:]:
            union = a | b
            for e in _bits(a & b):
                if not dep[union ^ e]:
                    return False
    return True


def rank(m: Matroid, x: Iterable = None) -> int:
    """Rank of ``x`` (of the whole ground set when omitted)."""
    return m.rho if x is None else m.rank_mask(m.mask(x))


def bases(m: Matroid) -> frozenset:
    return m.bases


def cocircuits(m: Matroid) -> frozenset:
    """Minimal sets meeting every base."""
    return m.cocircuits


def fundamental_circuit(m: Matroid, base: Iterable, e: str) -> frozenset:
    """The unique circuit ``C(e, B)`` with ``e in C <= B + e``."""
    b, bit = m.mask(base), m.mask([e])
    if b & bit:
        raise ValueError(f"{e!r} lies in the base")
    hits = [c for c in m.circuit_masks if c & bit and not c & ~(b | bit)]
    if len(hits) != 1:
        raise RuntimeError(f"expected one fundamental circuit, found {len(hits)}")
    return m.members(hits[0])


def fundamental_cocircuit(m: Matroid, base: Iterable, e: str) -> frozenset:
    """The unique cocircuit ``K(e, B)`` with ``K & B == {e}``."""
    b, bit = m.mask(base), m.mask([e])
    if not b & bit:
        raise ValueError(f"{e!r} is not in the base")
    hits = [k for k in m.cocircuit_masks if k & b == bit]
    if len(hits) != 1:
        raise RuntimeError(f"expected one fundamental cocircuit, found {len(hits)}")
    return m.members(hits[0])


def fundamental(m: Matroid, base: Iterable, e: str) -> frozenset:
    """``K(e, B)`` when ``e`` is in the base, ``C(e, B)`` otherwise."""
    base = frozenset(base)
    if m.mask(base) not in set(m.base_masks):
        raise ValueError("not a base")
    if e in base:
        return fundamental_cocircuit(m, base, e)
    return fundamental_circuit(m, base, e)


def is_connected(m: Matroid) -> bool:
    """No loops, no coloops, and every two elements share a circuit.

    The empty matroid is treated as disconnected.
    """
    if not m.ground:
        return False
    full = m.full
    partners = [0] * len(m.ground)
    for c in m.circuit_masks:
        if c.bit_count() == 1:
            return False
        for i in range(len(m.ground)):
            if c >> i & 1:
                partners[i] |= c
    return all(p == full for p in partners)


def delete(m: Matroid, k: Iterable) -> Matroid:
    k = frozenset(k)
    if not k <= set(m.ground):
        raise KeyError(f"unknown elements {sorted(k - set(m.ground))}")
    return Matroid((e for e in m.ground if e not in k), (c for c in m.circuits if not c & k))


def equals(m1: Matroid, m2: Matroid) -> bool:
    """Label-exact equality of ground sets and circuit families."""
    return m1 == m2
