"""Hilbert functions and graded S_n-characters of apolarity quotients.

Thin wrapper over the C++ core. Partitions are lists of weakly decreasing
positive ints ([2, 1, 1]); coefficient tuples are lists of ints or exact
strings ("3/2", "0.25"); characters come back as dicts keyed by the
partition string with per-degree multiplicity lists as values.
"""

from ._core import (
    ZeroCoefficientSumError,
    character_report,
    charge,
    graded_character_bruteforce,
    graded_character_formula,
    hilbert_function_bruteforce,
    hilbert_series_formula,
    irr_char_value,
    kostka_foulkes,
    n_stat,
    orbit_size,
    r_mu_character,
    ssyt_enumerate,
    syt_count,
    verify,
    waring_certificate,
)

__all__ = [
    "ZeroCoefficientSumError",
    "character_report",
    "charge",
    "graded_character_bruteforce",
    "graded_character_formula",
    "hilbert_function_bruteforce",
    "hilbert_series_formula",
    "irr_char_value",
    "kostka_foulkes",
    "n_stat",
    "orbit_size",
    "r_mu_character",
    "ssyt_enumerate",
    "syt_count",
    "verify",
    "waring_certificate",
]
