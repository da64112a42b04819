"""Vertex stars of ``G`` as (non-separating) cocircuits of ``M_k(G)``."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import graph as gr
from . import matroid as mt
from .errors import HypothesisError
from .kcirc import KContext, _need_connected, in_class, rank_formulas

__all__ = [
    "Status",
    "StarReport",
    "status",
    "classify",
    "small_stars",
    "star_is_cocircuit",
    "nonsep_stars",
    "nonsep_cocircuits_oracle",
    "find_witness_base",
    "dangling_witnesses",
]


class Status(str, enum.Enum):
    SMALL = "small"
    TIGHT = "tight"
    BIG = "big"


@dataclass(frozen=True)
class StarReport:
    vertex: str
    star: frozenset
    size: int
    status: Status
    is_cocircuit: bool
    is_nonseparating: bool

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "star": sorted(self.star),
            "size": self.size,
            "status": self.status.value,
            "cocircuit": self.is_cocircuit,
            "nonseparating": self.is_nonseparating,
        }


def status(ctx: KContext, x: str) -> Status:
    """k-small / k-tight / k-big, comparing ``s(x, G)`` with ``rho* + 1``."""
    bound = rank_formulas(ctx).rho_star + 1
    s = len(ctx.graph.star(x))
    if s < bound:
        return Status.SMALL
    return Status.TIGHT if s == bound else Status.BIG


def star_is_cocircuit(ctx: KContext, x: str) -> bool:
    """For a vertex that is not big: ``S(x, G)`` is a cocircuit iff ``G \\ x`` has no tree component."""
    _need_connected(ctx)
    if status(ctx, x) is Status.BIG:
        raise HypothesisError(f"vertex {x!r} is k-big; no characterisation applies")
    return gr.tree_forest(ctx.graph.delete_vertex(x))[1] == 0


def _star_nonseparating(ctx: KContext, x: str) -> bool:
    s = len(ctx.graph.star(x))
    if s > rank_formulas(ctx).rho_star:
        return False
    rest = ctx.graph.delete_vertex(x)
    return gr.delta(rest) >= ctx.k and in_class(rest, ctx.k)


def nonsep_stars(ctx: KContext) -> frozenset:
    """Non-separating cocircuits of ``M_k(G)``, found as small stars with ``G \\ x`` in the class."""
    _need_connected(ctx)
    return frozenset(
        ctx.graph.star(x) for x in sorted(ctx.graph.vertices) if _star_nonseparating(ctx, x)
    )


def nonsep_cocircuits_oracle(ctx: KContext) -> frozenset:
    """Cocircuits ``K`` with ``M_k(G) \\ K`` connected, straight from the matroid."""
    m = ctx.matroid
    if not mt.is_connected(m):
        raise HypothesisError(f"M_{ctx.k}(G) is not connected")
    return frozenset(K for K in m.cocircuits if mt.is_connected(mt.delete(m, K)))


def small_stars(ctx: KContext) -> frozenset:
    """Stars with ``s(x, G) <= rho*``."""
    rho_star = rank_formulas(ctx).rho_star
    return frozenset(
        ctx.graph.star(x) for x in ctx.graph.vertices if len(ctx.graph.star(x)) <= rho_star
    )


def classify(ctx: KContext) -> list[StarReport]:
    """One report per vertex, sorted by vertex label.

    Big stars are never cocircuits, since a cocircuit has at most ``rho* + 1``
    elements.
    """
    _need_connected(ctx)
    reports = []
    for x in sorted(ctx.graph.vertices):
        st = status(ctx, x)
        cocircuit = st is not Status.BIG and star_is_cocircuit(ctx, x)
        reports.append(
            StarReport(
                vertex=x,
                star=ctx.graph.star(x),
                size=len(ctx.graph.star(x)),
                status=st,
                is_cocircuit=cocircuit,
                is_nonseparating=_star_nonseparating(ctx, x),
            )
        )
    return reports


def _leaf_in(h: gr.Multigraph, x: str) -> bool:
    return x in h.vertices and h.degree(x) == 1


def find_witness_base(ctx: KContext, x: str, mode: str = "leaf") -> Optional[frozenset]:
    """First base (in sorted order) with the requested relation to ``x``.

    ``mode="avoid_kernel"``: ``x`` is outside the kernel of ``G<B>``.
    ``mode="leaf"``: ``x`` is a leaf of ``G<B>``.
    """
    _need_connected(ctx)
    if mode not in ("leaf", "avoid_kernel"):
        raise ValueError(f"unknown mode {mode!r}")
    if status(ctx, x) is Status.BIG:
        raise HypothesisError(f"vertex {x!r} is k-big")
    for base in sorted(ctx.matroid.bases, key=sorted):
        h = ctx.graph.induced(base)
        if mode == "leaf":
            if _leaf_in(h, x):
                return base
        else:
            ker = gr.kernel(h)
            if ker is None or x not in ker.vertices:
                return base
    return None


def dangling_witnesses(ctx: KContext, x: str) -> dict[str, Optional[frozenset]]:
    """For each ``e`` in ``S(x, G)`` a base where ``e`` is the only base edge at ``x``.

    That is, ``e`` dangles at ``x`` (``x`` a leaf of ``G<B>``) or ``e`` is a
    loop forming a component of ``G<B>`` by itself.  ``None`` when no base works.
    """
    _need_connected(ctx)
    g = ctx.graph
    out = {}
    ordered = sorted(ctx.matroid.bases, key=sorted)
    for e in sorted(g.star(x)):
        out[e] = None
        for base in ordered:
            if e in base and not (g.star(x) & base) - {e}:
                out[e] = base
                break
    return out
