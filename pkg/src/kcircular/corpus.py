"""Exhaustive and random generation of small multigraphs.

:func:`multigraphs` yields one graph per isomorphism class (vertex
permutations and edge relabellings both quotiented out).  Every property
checked in this package is invariant under edge relabelling, so these
representatives stand for every strong-isomorphism class as well.
"""
from __future__ import annotations

import random
from itertools import combinations_with_replacement, permutations, product
from typing import Iterator

from .graph import Multigraph


def _graph(n: int, pairs) -> Multigraph:
    names = [str(i + 1) for i in range(n)]
    return Multigraph(names, [(f"e{i}", names[a], names[b]) for i, (a, b) in enumerate(pairs)])


def _signature(n: int, pairs) -> list[tuple[int, int]]:
    deg, loops = [0] * n, [0] * n
    for a, b in pairs:
        deg[a] += 1
        deg[b] += 1
        if a == b:
            loops[a] += 1
    return list(zip(deg, loops))


def _block_perms(sig) -> list[tuple[int, ...]]:
    """Vertex permutations that only shuffle vertices with equal signature."""
    blocks, start = [], 0
    for i in range(1, len(sig) + 1):
        if i == len(sig) or sig[i] != sig[start]:
            blocks.append(list(range(start, i)))
            start = i
    perms = []
    for choice in product(*(permutations(b) for b in blocks)):
        p = [0] * len(sig)
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                p[src] = dst
        perms.append(tuple(p))
    return perms


def _is_canonical(n: int, combo) -> bool:
    sig = _signature(n, combo)
    if any(sig[i] < sig[i + 1] for i in range(n - 1)):
        return False
    for p in _block_perms(sig):
        image = tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in combo))
        if image < combo:
            return False
    return True


def multigraphs(max_vertices: int = 5, max_edges: int = 6, min_vertices: int = 1,
                isolated: bool = True) -> Iterator[Multigraph]:
    """All multigraphs (loops allowed) up to isomorphism, smallest first.

    Vertices are ``"1".."n"`` and edges ``"e0", "e1", ...``.  With
    ``isolated=False`` graphs with an isolated vertex are skipped.
    """
    for n in range(min_vertices, max_vertices + 1):
        pairs = [(a, b) for a in range(n) for b in range(a, n)]
        for m in range(max_edges + 1):
            for combo in combinations_with_replacement(pairs, m):
                if not isolated:
                    touched = {v for pr in combo for v in pr}
                    if len(touched) < n:
                        continue
                if _is_canonical(n, combo):
                    yield _graph(n, combo)


def random_multigraph(rng: random.Random, n_vertices: int, n_edges: int,
                      loop_rate: float = 0.1) -> Multigraph:
    names = [str(i + 1) for i in range(n_vertices)]
    edges = []
    for i in range(n_edges):
        u = rng.choice(names)
        v = u if rng.random() < loop_rate else rng.choice(names)
        edges.append((f"e{i}", u, v))
    return Multigraph(names, edges)


def random_corpus(seed: int, count: int, max_vertices: int = 6, max_edges: int = 10) -> list[Multigraph]:
    rng = random.Random(seed)
    return [
        random_multigraph(rng, rng.randint(1, max_vertices), rng.randint(0, max_edges))
        for _ in range(count)
    ]
