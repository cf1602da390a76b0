"""Locates the worked-example configuration on one icosahedron face.

Three mutually adjacent base vertices a1, a2, a3; b1 and b2 sit on edges
a1-a3 and a1-a2; g2 sits on a1-b1, g7 on b1-b2, g1 on a1-b2; e1 on g2-g7.
"""

from dataclasses import dataclass
from itertools import combinations


@dataclass
class Face:
    a1: int
    a2: int
    a3: int
    b1: int
    b2: int
    b3: int
    g1: int
    g2: int
    g7: int
    e1: int | None


def faces(g):
    base = g.vertices_on_layer(0)
    for a1 in base:
        for a2, a3 in combinations(sorted(set(g.neighbors(a1)) & set(base)), 2):
            if not g.contains_edge(a2, a3):
                continue
            for x, y in ((a2, a3), (a3, a2)):
                yield _build(g, a1, x, y)


def _build(g, a1, a2, a3):
    child = g.edge_child
    b1 = child(a1, a3)
    b2 = child(a1, a2)
    b3 = child(a2, a3)
    g1 = child(a1, b2)
    g2 = child(a1, b1)
    g7 = child(b1, b2)
    e1 = child(g2, g7) if g.k >= 3 else None
    return Face(a1, a2, a3, b1, b2, b3, g1, g2, g7, e1)
