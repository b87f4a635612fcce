"""Circuit simplification by database-driven subcircuit replacement."""

from ._circsimp import (
    Basis,
    Circuit,
    CircuitError,
    Database,
    ParseError,
    build_database,
    check_equiv,
    convert_basis,
    export_cnf,
    gen_atleast,
    gen_atmost,
    gen_factorization,
    gen_miter,
    gen_multiplier,
    gen_pigeonhole,
    gen_sum,
    load_database,
    miter,
    preprocess,
    read_aiger,
    read_bench,
    read_file,
    simplify,
    write_aiger,
    write_bench,
    write_file,
)

__all__ = [
    "Basis",
    "Circuit",
    "CircuitError",
    "Database",
    "ParseError",
    "build_database",
    "check_equiv",
    "convert_basis",
    "export_cnf",
    "gen_atleast",
    "gen_atmost",
    "gen_factorization",
    "gen_miter",
    "gen_multiplier",
    "gen_pigeonhole",
    "gen_sum",
    "load_database",
    "miter",
    "preprocess",
    "read_aiger",
    "read_bench",
    "read_file",
    "simplify",
    "write_aiger",
    "write_bench",
    "write_file",
]
