"""Exception hierarchy.

Every exception carries a short machine-parseable ``code`` so the CLI can
emit one-line errors that scripts can dispatch on.
"""


class PolyforgeError(Exception):
    """Base class for all package errors."""

    code = "error"


class SmilesParseError(PolyforgeError):
    """Malformed SMILES input; ``offset`` is the byte position of the problem."""

    code = "smiles_parse"

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedElementError(PolyforgeError):
    code = "unsupported_element"


class OverValenceError(PolyforgeError):
    """An atom carries more bond order than its element permits."""

    code = "over_valence"

    def __init__(self, message, atom_id=None):
        super().__init__(message)
        self.atom_id = atom_id


class GraphError(PolyforgeError):
    """Reference to an atom/bond that does not exist."""

    code = "graph_error"


class MissingEnvironmentError(PolyforgeError):
    """A chemical environment has no entry in the look-up table.

    ``atom_ids`` names the offending atoms; ``suggestion`` carries the
    nearest shallower-depth match, if one exists.
    """

    code = "missing_environment"

    def __init__(self, message, atom_ids=(), suggestion=None):
        super().__init__(message)
        self.atom_ids = tuple(atom_ids)
        self.suggestion = suggestion


class ParameterConflictError(PolyforgeError):
    """Two fragments map the same fingerprint key to different coefficients."""

    code = "param_conflict"


class PackingError(PolyforgeError):
    """Random packing could not place a monomer at the requested density."""

    code = "packing_density"


class ConfigError(PolyforgeError):
    """Bad run configuration or input file contents."""

    code = "config_error"


class UndefinedConversionError(PolyforgeError):
    code = "undefined_conversion"


class NonFiniteEnergyError(PolyforgeError):
    code = "nonfinite_energy"


class UnparameterizedError(PolyforgeError):
    """Operation requires assigned force-field parameters."""

    code = "unparameterized"


class LammpsFormatError(PolyforgeError):
    """Malformed LAMMPS data file; ``line`` is the 1-based line number."""

    code = "lammps_format"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.line = line


class UnsupportedStyleError(PolyforgeError):
    code = "unsupported_style"


class AnalysisError(PolyforgeError):
    code = "analysis_error"
