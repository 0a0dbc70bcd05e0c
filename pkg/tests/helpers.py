"""Shared test data builders."""

import numpy as np

from polyforge.molgraph import MolecularGraph

# max total bond order per element, used by the random generator
_CAP = {"C": 4, "N": 3, "O": 2, "H": 1, "S": 2, "F": 1, "Cl": 1}


def random_molecular_graph(rng, max_atoms=10, elements=("C", "C", "C", "N", "O", "H")):
    """Random connected-ish chemically plausible graph: spanning tree plus a
    few extra edges, respecting per-element valence caps."""
    n = int(rng.integers(1, max_atoms + 1))
    g = MolecularGraph()
    caps = []
    for _ in range(n):
        el = elements[rng.integers(0, len(elements))]
        g.add_atom(el)
        caps.append(_CAP[el])
    ids = sorted(g.atoms)
    used = {i: 0 for i in ids}

    def can_bond(a, b, order_value):
        return (
            a != b
            and not g.has_bond(a, b)
            and used[a] + order_value <= caps[a]
            and used[b] + order_value <= caps[b]
        )

    # spanning tree over atoms that still have capacity
    for pos in range(1, n):
        b = ids[pos]
        partners = [a for a in ids[:pos] if can_bond(a, b, 1)]
        if not partners:
            continue
        a = partners[rng.integers(0, len(partners))]
        g.add_bond(a, b, "single")
        used[a] += 1
        used[b] += 1

    # extra edges, occasionally double/triple
    for _ in range(int(rng.integers(0, n))):
        a, b = (int(x) for x in rng.integers(0, n, size=2))
        order, value = ("single", 1)
        roll = rng.random()
        if roll > 0.9:
            order, value = ("triple", 3)
        elif roll > 0.7:
            order, value = ("double", 2)
        if can_bond(a, b, value):
            g.add_bond(a, b, order)
            used[a] += value
            used[b] += value
    return g


def random_tree_graph(rng, max_atoms=10, elements=("C", "N", "O", "H")):
    """Random labeled tree (used where exact WL-equals-orbits holds)."""
    n = int(rng.integers(1, max_atoms + 1))
    g = MolecularGraph()
    for _ in range(n):
        g.add_atom(elements[rng.integers(0, len(elements))])
    for b in range(1, n):
        a = int(rng.integers(0, b))
        g.add_bond(a, b, "single")
    return g


def grid_positions(n, spacing=2.5):
    """Deterministic non-overlapping positions for n atoms."""
    side = int(np.ceil(n ** (1 / 3)))
    pts = []
    for i in range(n):
        x, y, z = i % side, (i // side) % side, i // (side * side)
        pts.append(np.array([x, y, z], dtype=float) * spacing + 1.0)
    return pts
