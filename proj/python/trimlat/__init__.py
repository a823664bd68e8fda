from ._core import (
    Lattice,
    LatticeError,
    boolean_lattice,
    cambrian,
    chain_lattice,
    conjecture_report,
    is_distributive,
    is_extremal,
    is_trim,
    join_irreducibles,
    m3_lattice,
    meet_irreducibles,
    mobius,
    n5_lattice,
    tamari_lattice,
    trim_failure_reason,
)

__all__ = [
    "Lattice",
    "LatticeError",
    "boolean_lattice",
    "cambrian",
    "chain_lattice",
    "conjecture_report",
    "is_distributive",
    "is_extremal",
    "is_trim",
    "join_irreducibles",
    "m3_lattice",
    "meet_irreducibles",
    "mobius",
    "n5_lattice",
    "tamari_lattice",
    "trim_failure_reason",
]
