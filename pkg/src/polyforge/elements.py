"""Element data: masses, valences, covalent radii.

Valence tuples list the accepted bonding states in increasing order
(e.g. S may be divalent, tetravalent, or hexavalent); implicit-hydrogen
padding targets the smallest state that fits the existing bonds.
Van der Waals radii live in ``data/vdw_radii.json`` so they can be
overridden without touching code.
"""

from dataclasses import dataclass

from .errors import UnsupportedElementError


@dataclass(frozen=True)
class Element:
    symbol: str
    atomic_mass: float  # amu
    valences: tuple  # accepted total bond orders, ascending
    covalent_radius: float  # Angstrom, used for crude geometry embedding

    @property
    def default_valence(self):
        return self.valences[0]


_TABLE = [
    Element("H", 1.008, (1,), 0.31),
    Element("B", 10.81, (3,), 0.84),
    Element("C", 12.011, (4,), 0.76),
    Element("N", 14.007, (3,), 0.71),
    Element("O", 15.999, (2,), 0.66),
    Element("F", 18.998403, (1,), 0.57),
    Element("Si", 28.085, (4,), 1.11),
    Element("P", 30.973762, (3, 5), 1.07),
    Element("S", 32.06, (2, 4, 6), 1.05),
    Element("Cl", 35.45, (1,), 1.02),
    Element("Br", 79.904, (1,), 1.20),
    Element("I", 126.90447, (1,), 1.39),
]

ELEMENTS = {e.symbol: e for e in _TABLE}

# lowercase aromatic shorthand accepted in SMILES
AROMATIC_SYMBOLS = {"b": "B", "c": "C", "n": "N", "o": "O", "p": "P", "s": "S"}

# bare (bracket-free) organic-subset symbols
ORGANIC_SUBSET = {"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"}


def get_element(symbol):
    """Look up an element, raising a package error for unknown symbols."""
    try:
        return ELEMENTS[symbol]
    except KeyError:
        raise UnsupportedElementError(f"unsupported element {symbol!r}") from None


def atomic_mass(symbol):
    return get_element(symbol).atomic_mass
