"""Checked-in reference diagrams.

FIGURE1 is the five element lattice of noncrossing partitions of
{1, 2, 3} with its six cover relations, labeled by partitions.  FIGURE2
is the twelve element lattice of monotone functions from a two point
chain into that lattice, kept as an unlabeled cover digraph and matched
against computed lattices only up to isomorphism.
"""
from __future__ import annotations

FIGURE1_NODES: tuple = (
    ((1,), (2,), (3,)),
    ((1, 2), (3,)),
    ((1, 3), (2,)),
    ((1,), (2, 3)),
    ((1, 2, 3),),
)

FIGURE1_COVERS: tuple = (
    (((1,), (2,), (3,)), ((1, 2), (3,))),
    (((1,), (2,), (3,)), ((1, 3), (2,))),
    (((1,), (2,), (3,)), ((1,), (2, 3))),
    (((1, 2), (3,)), ((1, 2, 3),)),
    (((1, 3), (2,)), ((1, 2, 3),)),
    (((1,), (2, 3)), ((1, 2, 3),)),
)

# nodes indexed 0..11; edges are (lower, higher) cover pairs
FIGURE2_NODE_COUNT = 12

FIGURE2_COVERS: tuple = (
    (1, 0),
    (4, 0),
    (7, 0),
    (2, 1),
    (3, 2),
    (10, 3),
    (5, 4),
    (6, 5),
    (10, 6),
    (8, 7),
    (9, 8),
    (3, 11),
    (6, 11),
    (11, 1),
    (11, 4),
    (10, 9),
    (11, 7),
    (9, 11),
)
