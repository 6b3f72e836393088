"""Attention/working-memory store.

Propositions are written along a random walk through a toroidal 3D grid and
recovered by searching outward from the current pointer, shell by shell, up
to a fixed radius.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

GRID_SIZE = 16

# unit moves along each axis; the walk picks one uniformly per step
STEPS = ((0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1), (-1, 0, 0), (1, 0, 0))

SCORE = "score"
INTEND = "intend"
ACT = "act"


class Locus(NamedTuple):
    x: int
    y: int
    z: int


def locus(x: int, y: int, z: int, size: int = GRID_SIZE) -> Locus:
    return Locus(x % size, y % size, z % size)


@dataclass(frozen=True)
class Proposition:
    """A stored belief.

    ``kind`` is one of ``"score"`` (key = item id, value = utility),
    ``"intend"`` (key = option id) or ``"act"`` (key = rendered act).
    ``seq`` is assigned by the store; patterns built by callers carry -1.
    """

    kind: str
    key: str
    value: int | None = None
    seq: int = -1

    @property
    def fact(self) -> tuple:
        return (self.kind, self.key, self.value)


class SearchOrder:
    """Precomputed search geometry for one grid size.

    Loci are visited by increasing modular city-block distance from the
    centre; inside a shell the signed offsets are taken in lexicographic
    order.  ``rank[dx, dy, dz]`` is the 0-based visiting position of the
    locus at offset ``(dx, dy, dz) mod size``.
    """

    def __init__(self, size: int):
        self.size = size
        half = size // 2
        signed = np.arange(size)
        signed = np.where(signed > half, signed - size, signed)
        gx, gy, gz = np.meshgrid(signed, signed, signed, indexing="ij")
        self.dist = (np.abs(gx) + np.abs(gy) + np.abs(gz)).astype(np.int64)
        order = np.lexsort((gz.ravel(), gy.ravel(), gx.ravel(), self.dist.ravel()))
        self.offsets = np.stack([gx.ravel(), gy.ravel(), gz.ravel()], axis=1)[order]
        rank = np.empty(size**3, dtype=np.int64)
        rank[order] = np.arange(size**3)
        self.rank = rank.reshape(size, size, size)
        self.max_dist = int(self.dist.max())
        counts = np.bincount(self.dist.ravel(), minlength=self.max_dist + 1)
        self._cumulative = np.cumsum(counts)

    def sphere_size(self, radius: int) -> int:
        if radius >= self.size:
            return self.size**3
        return int(self._cumulative[min(radius, self.max_dist)])

    def limit(self, radius: int) -> int:
        """Largest distance reachable at ``radius``; the top setting is unbounded."""
        return self.max_dist if radius >= self.size else radius


@functools.lru_cache(maxsize=None)
def search_order(size: int = GRID_SIZE) -> SearchOrder:
    return SearchOrder(size)


def check_radius(radius: int, size: int = GRID_SIZE) -> int:
    if not isinstance(radius, (int, np.integer)) or not 0 <= radius <= size:
        raise ValueError(f"radius must be an integer in [0, {size}], got {radius!r}")
    return int(radius)


def sphere(center, radius: int, size: int = GRID_SIZE) -> set[Locus]:
    """All loci within ``radius`` of ``center`` (wraparound deduplicated)."""
    radius = check_radius(radius, size)
    so = search_order(size)
    n = so.sphere_size(radius)
    cx, cy, cz = center
    return {locus(cx + dx, cy + dy, cz + dz, size) for dx, dy, dz in so.offsets[:n].tolist()}


def distance(a, b, size: int = GRID_SIZE) -> int:
    so = search_order(size)
    return int(so.dist[(b[0] - a[0]) % size, (b[1] - a[1]) % size, (b[2] - a[2]) % size])


class MemoryStore:
    """Random-walk storage with radius-limited retrieval.

    Parameters
    ----------
    radius : int
        Search radius in [0, size]; ``radius == size`` gives unbounded search.
    seed : int, SeedSequence or Generator
        Source of the walk's randomness.
    size : int
        Edge length of the cubic grid.
    charge_salience : bool
        Whether :meth:`salient_set` adds the sphere size to
        ``retrieval_counter``.
    """

    def __init__(self, radius: int, seed=None, *, size: int = GRID_SIZE,
                 charge_salience: bool = True):
        self.size = size
        self.radius = check_radius(radius, size)
        if isinstance(seed, np.random.Generator):
            self.rng = seed
        else:
            self.rng = np.random.default_rng(seed)
        self.charge_salience = charge_salience
        self.pointer = Locus(0, 0, 0)
        self.retrieval_counter = 0
        self.grid: dict[Locus, list[Proposition]] = {}
        self._order = search_order(size)
        self._props: list[Proposition] = []
        self._locs = np.empty((64, 3), dtype=np.int64)
        self._by_key: dict[tuple[str, str], list[int]] = {}
        self._seq = 0

    def __len__(self) -> int:
        return len(self._props)

    @property
    def propositions(self) -> list[Proposition]:
        return list(self._props)

    def advance_pointer(self) -> Locus:
        dx, dy, dz = STEPS[int(self.rng.integers(6))]
        x, y, z = self.pointer
        self.pointer = locus(x + dx, y + dy, z + dz, self.size)
        return self.pointer

    def store(self, prop: Proposition) -> Proposition:
        """Advance one walk step, then write ``prop`` at the new pointer."""
        self.advance_pointer()
        stored = replace(prop, seq=self._seq)
        self._seq += 1
        idx = len(self._props)
        if idx == len(self._locs):
            self._locs = np.concatenate([self._locs, np.empty_like(self._locs)])
        self._locs[idx] = self.pointer
        self._props.append(stored)
        self.grid.setdefault(self.pointer, []).append(stored)
        self._by_key.setdefault((stored.kind, stored.key), []).append(idx)
        return stored

    def _distances(self, idx=None) -> np.ndarray:
        locs = self._locs[: len(self._props)] if idx is None else self._locs[idx]
        d = (locs - np.asarray(self.pointer)) % self.size
        return self._order.dist[d[:, 0], d[:, 1], d[:, 2]]

    def _ranks(self, idx) -> np.ndarray:
        d = (self._locs[idx] - np.asarray(self.pointer)) % self.size
        return self._order.rank[d[:, 0], d[:, 1], d[:, 2]]

    @property
    def reach(self) -> int:
        """Largest memory distance searched at this store's radius."""
        return self._order.limit(self.radius)

    def _radius(self, radius):
        return self.radius if radius is None else check_radius(radius, self.size)

    def nearest(self, kind: str, key: str) -> tuple[Proposition | None, int | None]:
        """Closest copy of a fact regardless of radius, without charging cost."""
        idx = self._by_key.get((kind, key))
        if not idx:
            return None, None
        dists = self._distances(idx)
        best = int(np.argmin(dists))
        return self._props[idx[best]], int(dists[best])

    def retrieve(self, kind: str, key: str, radius: int | None = None):
        """Search outward from the pointer for a ``(kind, key)`` fact.

        Returns ``(proposition or None, loci_searched)``.  Among matches at
        the smallest distance the most recently stored wins; the cost counts
        loci up to and including that match's locus in search order, or the
        whole sphere on failure.
        """
        r = self._radius(radius)
        limit = self._order.limit(r)
        idx = self._by_key.get((kind, key), [])
        found = None
        searched = self._order.sphere_size(r)
        if idx:
            idx_arr = np.asarray(idx)
            dists = self._distances(idx_arr)
            inside = dists <= limit
            if inside.any():
                dmin = dists[inside].min()
                # idx is in storage order, so the last one at dmin is the newest
                winner = int(idx_arr[np.nonzero(dists == dmin)[0][-1]])
                found = self._props[winner]
                searched = int(self._ranks(np.array([winner]))[0]) + 1
        self.retrieval_counter += searched
        return found, searched

    def salient_set(self, radius: int | None = None) -> list[Proposition]:
        """Propositions stored within the search sphere, oldest first."""
        r = self._radius(radius)
        if self.charge_salience:
            self.retrieval_counter += self._order.sphere_size(r)
        if not self._props:
            return []
        inside = np.nonzero(self._distances() <= self._order.limit(r))[0]
        return [self._props[i] for i in inside.tolist()]

    def snapshot(self) -> tuple:
        """Hashable summary of grid contents, pointer and counters."""
        return (
            self.pointer,
            self.retrieval_counter,
            tuple((p.fact, p.seq, tuple(self._locs[i])) for i, p in enumerate(self._props)),
        )
