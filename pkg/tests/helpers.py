"""Cached graphs and oracle tables shared by the test modules."""

import functools

from vqlnet.graph import all_pairs_distances
from vqlnet.ring import build_ring
from vqlnet.sphere import build_sphere


@functools.lru_cache(maxsize=None)
def sphere(k):
    return build_sphere(k)


@functools.lru_cache(maxsize=None)
def ring(n):
    return build_ring(n)


@functools.lru_cache(maxsize=None)
def sphere_dist(k):
    return all_pairs_distances(sphere(k))


@functools.lru_cache(maxsize=None)
def ring_dist(n):
    return all_pairs_distances(ring(n))


ACCEPTANCE_LINES: list[str] = []
