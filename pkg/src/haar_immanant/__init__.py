"""Immanants, their Haar-unitary conjugation averages, and inequality checks."""

from .closedform import (
    AveragedImmanant,
    averaged_immanant,
    averaged_induced_immanant,
    matrix_element_integral,
    trace_on_submodule,
)
from .errors import NoPathError, ResourceLimitError
from .haar import MCEstimate, haar_unitary, mc_average_df, mc_diagonal_power_product, mc_matrix_element_product
from .matrixfn import hermitian_spectrum, matrix_function, permanent, random_psd
from .partitions import all_partitions, dominance_path, dominates, multinomial, ssyt_count, syt_count
from .schur import power_sums, schur_at_ones, schur_at_spectrum
from .symchar import ClassFunction, class_table, induced_character, irreducible_character, kostka

__version__ = "0.1.0"
