"""polyforge: builds highly cross-linked amorphous polymer structures.

Pipeline: parse monomers -> pack a periodic box -> assign force-field
parameters from fingerprint look-up tables -> iterative distance-based
bond formation with relaxation -> post-process (carve voids, cap) and
analyze (density, Tg, porosity).
"""

__version__ = "0.1.0"

from . import analysis, fftyping, lammpsio, molgraph, polymerizer, postproc, relax, simbox  # noqa: F401
