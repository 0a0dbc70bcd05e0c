"""Molecular graph core: atoms, bonds, a minimal SMILES parser/writer,
topology enumeration, and the graph queries every other module leans on.

Graphs are plain adjacency structures with stable integer atom ids; ids
survive deletions (no renumbering), which lets downstream bookkeeping
(lineage, reaction sites, parameters) reference atoms safely.
"""

import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .elements import AROMATIC_SYMBOLS, ELEMENTS, ORGANIC_SUBSET, get_element
from .errors import GraphError, OverValenceError, SmilesParseError, UnsupportedElementError

BOND_ORDERS = ("single", "double", "triple", "aromatic")

# numeric bond-order contribution for valence accounting
ORDER_VALUE = {"single": 1, "double": 2, "triple": 3, "aromatic": 1.5}

_BOND_TOKEN = {"-": "single", "=": "double", "#": "triple", ":": "aromatic"}
_TOKEN_FOR_ORDER = {"single": "-", "double": "=", "triple": "#", "aromatic": ":"}


@dataclass
class Atom:
    """One node of a molecular graph.

    ``monomer_instance`` records which packed monomer copy the atom came
    from (1-based; immutable after packing).  ``site_role`` is the current
    reaction-site label, if any.
    """

    id: int
    element: str
    formal_charge: int = 0
    monomer_instance: int = 0
    site_role: str | None = None

    @property
    def mass(self):
        return get_element(self.element).atomic_mass


class Bond(NamedTuple):
    a: int
    b: int
    order: str


@dataclass
class TopologyTables:
    """Bonded-term index tuples derived from connectivity.

    Angles are simple 2-paths (i,j,k) counted once; dihedrals simple
    3-paths counted once; impropers (center,i,j,k) exist only at
    3-coordinate centers explicitly flagged planar.
    """

    angles: list = field(default_factory=list)
    dihedrals: list = field(default_factory=list)
    impropers: list = field(default_factory=list)


class MolecularGraph:
    """Mutable molecular graph with stable atom ids."""

    def __init__(self, name=""):
        self.name = name
        self.atoms: dict[int, Atom] = {}
        self._adj: dict[int, dict[int, str]] = {}
        self._next_id = 0

    # -- construction -------------------------------------------------

    def add_atom(self, element, formal_charge=0, monomer_instance=0, site_role=None, atom_id=None):
        get_element(element)  # validate symbol
        if atom_id is None:
            atom_id = self._next_id
        elif atom_id in self.atoms:
            raise GraphError(f"atom id {atom_id} already present")
        self._next_id = max(self._next_id, atom_id + 1)
        self.atoms[atom_id] = Atom(atom_id, element, formal_charge, monomer_instance, site_role)
        self._adj[atom_id] = {}
        return atom_id

    def add_bond(self, a, b, order="single"):
        if a == b:
            raise GraphError(f"self-bond on atom {a}")
        if order not in BOND_ORDERS:
            raise GraphError(f"unknown bond order {order!r}")
        self._require(a)
        self._require(b)
        if b in self._adj[a]:
            raise GraphError(f"duplicate bond ({a},{b})")
        self._adj[a][b] = order
        self._adj[b][a] = order

    def remove_bond(self, a, b):
        self._require(a)
        if b not in self._adj[a]:
            raise GraphError(f"no bond ({a},{b})")
        del self._adj[a][b]
        del self._adj[b][a]

    def remove_atoms(self, ids):
        ids = set(ids)
        for i in ids:
            self._require(i)
        for i in ids:
            for j in list(self._adj[i]):
                del self._adj[j][i]
            del self._adj[i]
            del self.atoms[i]

    def merge(self, other):
        """Copy ``other`` into this graph; returns {other id -> new id}."""
        mapping = {}
        for i in sorted(other.atoms):
            at = other.atoms[i]
            mapping[i] = self.add_atom(at.element, at.formal_charge, at.monomer_instance, at.site_role)
        for a, b, order in other.bonds():
            self.add_bond(mapping[a], mapping[b], order)
        return mapping

    def copy(self):
        g = MolecularGraph(self.name)
        g._next_id = self._next_id
        for i, at in self.atoms.items():
            g.atoms[i] = Atom(at.id, at.element, at.formal_charge, at.monomer_instance, at.site_role)
            g._adj[i] = dict(self._adj[i])
        return g

    # -- queries ------------------------------------------------------

    def _require(self, i):
        if i not in self.atoms:
            raise GraphError(f"unknown atom id {i}")

    @property
    def n_atoms(self):
        return len(self.atoms)

    def neighbors(self, i):
        self._require(i)
        return list(self._adj[i])

    def degree(self, i):
        self._require(i)
        return len(self._adj[i])

    def has_bond(self, a, b):
        return a in self._adj and b in self._adj[a]

    def bond_order(self, a, b):
        self._require(a)
        if b not in self._adj[a]:
            raise GraphError(f"no bond ({a},{b})")
        return self._adj[a][b]

    def bonds(self):
        out = []
        for a in sorted(self._adj):
            for b, order in self._adj[a].items():
                if a < b:
                    out.append(Bond(a, b, order))
        return out

    @property
    def n_bonds(self):
        return sum(len(nb) for nb in self._adj.values()) // 2

    def is_aromatic_atom(self, i):
        """Aromaticity is derived: any incident aromatic bond."""
        return any(order == "aromatic" for order in self._adj[i].values())

    def bond_order_sum(self, i):
        """Effective valence in use, with the Kekule-free aromatic convention:
        n aromatic bonds contribute n+1."""
        self._require(i)
        n_arom = 0
        total = 0
        for order in self._adj[i].values():
            if order == "aromatic":
                n_arom += 1
            else:
                total += ORDER_VALUE[order]
        if n_arom:
            total += n_arom + 1
        return total

    def total_mass(self):
        return sum(at.mass for at in self.atoms.values())


@dataclass
class MonomerTemplate:
    """A monomer ready for packing: graph, designated reaction sites,
    and (optionally) a 3D geometry keyed by atom id."""

    graph: MolecularGraph
    reaction_sites: list  # (atom id, site-type label)
    name: str = ""
    smiles: str = ""
    geometry: dict | None = None  # atom id -> (x, y, z) in Angstrom

    def __post_init__(self):
        for atom_id, label in self.reaction_sites:
            if atom_id not in self.graph.atoms:
                raise GraphError(f"reaction site references unknown atom {atom_id} in {self.name!r}")
            self.graph.atoms[atom_id].site_role = label


# ---------------------------------------------------------------------------
# SMILES parsing
# ---------------------------------------------------------------------------

_BRACKET_RE = re.compile(r"([A-Z][a-z]?|[bcnops])((?:\+\d?|-\d?|\++|-+))?$")


def _bracket_atom(body, offset):
    """Parse the inside of a [..] atom: element plus optional +/- charge."""
    m = _BRACKET_RE.match(body)
    if m is None:
        raise SmilesParseError(f"unsupported bracket atom [{body}]", offset)
    sym, charge_s = m.group(1), m.group(2)
    aromatic = sym in AROMATIC_SYMBOLS
    if aromatic:
        sym = AROMATIC_SYMBOLS[sym]
    if sym not in ELEMENTS:
        raise UnsupportedElementError(f"unsupported element {sym!r} at byte offset {offset}")
    charge = 0
    if charge_s:
        sign = 1 if charge_s[0] == "+" else -1
        digits = charge_s.lstrip("+-")
        charge = sign * (int(digits) if digits else len(charge_s))
    return sym, charge, aromatic


def parse_smiles(text):
    """Parse a SMILES string into a MolecularGraph (no implicit hydrogens).

    Supported subset: organic shorthand and bracket atoms with +/- charges,
    branches, ring-closure digits (incl. %nn), bond symbols - = # :, aromatic
    lowercase, and '.' separated components.  No stereo, no isotopes.
    """
    graph = MolecularGraph()
    aromatic_atoms = set()
    prev = None  # atom id the next atom bonds to
    pending = None  # explicit bond token awaiting the next atom
    branch_stack = []  # (atom id, '(' offset)
    rings = {}  # digit -> (atom id, pending order or None, offset)

    def close_or_open_ring(num, offset):
        nonlocal pending
        if prev is None:
            raise SmilesParseError("ring-closure digit before any atom", offset)
        if num in rings:
            other, other_order, _ = rings.pop(num)
            order = pending or other_order
            if pending and other_order and pending != other_order:
                raise SmilesParseError(f"conflicting bond orders on ring closure {num}", offset)
            if order is None:
                order = "aromatic" if (prev in aromatic_atoms and other in aromatic_atoms) else "single"
            if other == prev or graph.has_bond(other, prev):
                raise SmilesParseError(f"invalid ring closure {num}", offset)
            graph.add_bond(other, prev, order)
        else:
            rings[num] = (prev, pending, offset)
        pending = None

    def add_parsed_atom(sym, charge, aromatic, offset):
        nonlocal prev, pending
        idx = graph.add_atom(sym, formal_charge=charge)
        if aromatic:
            aromatic_atoms.add(idx)
        if prev is not None:
            order = pending
            if order is None:
                order = "aromatic" if (prev in aromatic_atoms and idx in aromatic_atoms) else "single"
            graph.add_bond(prev, idx, order)
        prev = idx
        pending = None

    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t":
            i += 1
        elif ch == "(":
            if prev is None:
                raise SmilesParseError("branch before any atom", i)
            branch_stack.append((prev, i))
            i += 1
        elif ch == ")":
            if not branch_stack:
                raise SmilesParseError("unbalanced ')'", i)
            prev, _ = branch_stack.pop()
            i += 1
        elif ch in _BOND_TOKEN:
            if pending is not None:
                raise SmilesParseError("two consecutive bond symbols", i)
            pending = _BOND_TOKEN[ch]
            i += 1
        elif ch == ".":
            if pending is not None:
                raise SmilesParseError("bond symbol before '.'", i)
            prev = None
            i += 1
        elif ch.isdigit():
            close_or_open_ring(int(ch), i)
            i += 1
        elif ch == "%":
            if i + 2 >= n or not text[i + 1 : i + 3].isdigit():
                raise SmilesParseError("'%' needs two ring digits", i)
            close_or_open_ring(int(text[i + 1 : i + 3]), i)
            i += 3
        elif ch == "[":
            end = text.find("]", i)
            if end < 0:
                raise SmilesParseError("unterminated bracket atom", i)
            sym, charge, aromatic = _bracket_atom(text[i + 1 : end], i)
            add_parsed_atom(sym, charge, aromatic, i)
            i = end + 1
        elif ch in AROMATIC_SYMBOLS:
            add_parsed_atom(AROMATIC_SYMBOLS[ch], 0, True, i)
            i += 1
        elif ch.isupper():
            sym = ch
            if i + 1 < n and text[i : i + 2] in ORGANIC_SUBSET:
                sym = text[i : i + 2]
            if sym not in ORGANIC_SUBSET:
                if ch.isalpha():
                    raise UnsupportedElementError(f"unsupported element {sym!r} at byte offset {i}")
                raise SmilesParseError(f"unexpected character {ch!r}", i)
            add_parsed_atom(sym, 0, False, i)
            i += len(sym)
        else:
            raise SmilesParseError(f"unexpected character {ch!r}", i)

    if branch_stack:
        raise SmilesParseError("unbalanced '('", branch_stack[-1][1])
    if pending is not None:
        raise SmilesParseError("dangling bond symbol", n - 1)
    if rings:
        num, (_, _, offset) = next(iter(rings.items()))
        raise SmilesParseError(f"unmatched ring closure {num}", offset)
    return graph


def _allowed_valences(atom):
    elem = get_element(atom.element)
    vals = tuple(max(0, v + atom.formal_charge) for v in elem.valences)
    return vals


def add_implicit_hydrogens(graph):
    """Return a copy padded with hydrogens up to each atom's default valence.

    Aromatic atoms follow the Kekule-free convention (n aromatic bonds count
    as n+1), so an aromatic CH in a six-ring gets exactly one hydrogen.
    Raises OverValenceError when existing bonds already exceed every
    accepted valence state.
    """
    out = graph.copy()
    for i in sorted(graph.atoms):
        atom = out.atoms[i]
        if atom.element == "H":
            continue
        used = out.bond_order_sum(i)
        target = None
        for v in _allowed_valences(atom):
            if v >= used:
                target = v
                break
        if target is None:
            raise OverValenceError(
                f"atom {i} ({atom.element}, charge {atom.formal_charge:+d}) carries bond order "
                f"{used}, exceeding allowed valences {_allowed_valences(atom)}",
                atom_id=i,
            )
        for _ in range(int(target - used)):
            h = out.add_atom("H", monomer_instance=atom.monomer_instance)
            out.add_bond(i, h, "single")
    return out


# ---------------------------------------------------------------------------
# SMILES writing (round-trip partner of parse_smiles)
# ---------------------------------------------------------------------------


def write_smiles(graph):
    """Serialize a graph back to SMILES.  Hydrogens are written explicitly
    (as [H]) so the round trip preserves the full atom set."""
    if graph.n_atoms == 0:
        return ""
    aromatic = {i for i in graph.atoms if graph.is_aromatic_atom(i)}

    def atom_token(i):
        at = graph.atoms[i]
        sym = at.element
        if i in aromatic and sym in {"B", "C", "N", "O", "P", "S"}:
            sym = sym.lower()
        if at.formal_charge == 0 and sym in ORGANIC_SUBSET.union(s.lower() for s in ORGANIC_SUBSET):
            return sym
        if at.formal_charge == 0:
            return f"[{sym}]"
        sign = "+" if at.formal_charge > 0 else "-"
        mag = abs(at.formal_charge)
        return f"[{sym}{sign}{mag if mag > 1 else ''}]"

    def bond_token(a, b):
        order = graph.bond_order(a, b)
        if order == "single":
            # explicit '-' between two aromatic atoms (e.g. biphenyl link)
            return "-" if (a in aromatic and b in aromatic) else ""
        if order == "aromatic":
            return "" if (a in aromatic and b in aromatic) else ":"
        return _TOKEN_FOR_ORDER[order]

    visited = set()
    ring_bonds = {}  # (a,b) canonical -> digit
    next_digit = [1]
    open_digits = {}

    def assign_digit():
        d = next_digit[0]
        next_digit[0] += 1
        if d > 99:
            raise GraphError("too many simultaneous ring closures")
        return d

    pieces = []

    def walk(i, parent):
        visited.add(i)
        token = [atom_token(i)]
        # ring closures discovered earlier that terminate here
        for nb in sorted(graph.neighbors(i)):
            key = (min(i, nb), max(i, nb))
            if key in open_digits and nb != parent:
                d = open_digits.pop(key)
                token.append(bond_token(i, nb) + (str(d) if d < 10 else f"%{d:02d}"))
        children = [nb for nb in sorted(graph.neighbors(i)) if nb != parent]
        tree_children = []
        for nb in children:
            key = (min(i, nb), max(i, nb))
            if key in open_digits:
                continue  # closure already emitted above
            if nb in visited:
                d = assign_digit()
                open_digits[key] = d
                token.append(bond_token(i, nb) + (str(d) if d < 10 else f"%{d:02d}"))
            else:
                tree_children.append(nb)
        pieces.append("".join(token))
        for idx, nb in enumerate(tree_children):
            last = idx == len(tree_children) - 1
            if not last:
                pieces.append("(")
            pieces.append(bond_token(i, nb))
            walk(nb, i)
            if not last:
                pieces.append(")")

    roots = []
    for i in sorted(graph.atoms):
        if i not in visited:
            roots.append(i)
            if len(roots) > 1:
                pieces.append(".")
            walk(i, None)
    return "".join(pieces)


# ---------------------------------------------------------------------------
# Graph queries
# ---------------------------------------------------------------------------


def connected_components(graph):
    """Label each atom with a component index (0-based, by smallest atom id)."""
    labels = {}
    comp = 0
    for start in sorted(graph.atoms):
        if start in labels:
            continue
        queue = deque([start])
        labels[start] = comp
        while queue:
            i = queue.popleft()
            for j in graph.neighbors(i):
                if j not in labels:
                    labels[j] = comp
                    queue.append(j)
        comp += 1
    return labels


def shortest_bond_distance(graph, a, b):
    """BFS hop count between two atoms; math.inf if disconnected."""
    graph._require(a)
    graph._require(b)
    if a == b:
        return 0
    seen = {a: 0}
    queue = deque([a])
    while queue:
        i = queue.popleft()
        for j in graph.neighbors(i):
            if j not in seen:
                seen[j] = seen[i] + 1
                if j == b:
                    return seen[j]
                queue.append(j)
    return math.inf


def enumerate_topology(graph, planar_centers=None):
    """Enumerate angle/dihedral (and optionally improper) index tuples.

    Angles: every unordered neighbor pair around each center, canonical
    (i,j,k) with i < k.  Dihedrals: simple 3-paths, one per direction,
    excluding 3-ring degeneracies (i == l).  Impropers: only at atoms in
    ``planar_centers`` with exactly three neighbors, stored
    (center, i, j, k) with neighbors sorted.
    """
    angles = []
    for j in sorted(graph.atoms):
        nbrs = sorted(graph.neighbors(j))
        for x in range(len(nbrs)):
            for y in range(x + 1, len(nbrs)):
                angles.append((nbrs[x], j, nbrs[y]))

    dihedrals = []
    for j, k, _ in graph.bonds():
        for i in graph.neighbors(j):
            if i == k:
                continue
            for l in graph.neighbors(k):
                if l == j or l == i:
                    continue
                quad = (i, j, k, l)
                if quad[::-1] < quad:
                    quad = quad[::-1]
                dihedrals.append(quad)
    dihedrals = sorted(set(dihedrals))

    impropers = []
    if planar_centers:
        for c in sorted(planar_centers):
            if c in graph.atoms and graph.degree(c) == 3:
                i, j, k = sorted(graph.neighbors(c))
                impropers.append((c, i, j, k))

    return TopologyTables(angles=angles, dihedrals=dihedrals, impropers=impropers)
