"""Graded dimensions of HH for Brieskorn-Pham matrix factorizations, and the
SH / RFH tables of the mirror Milnor fibers obtained by localization."""

from .chargroup import CharClass, CharGroup, Sector, char_group, enumerate_sectors
from .closed_form import BSParams, check_smoothing, h_i, set_I, set_II, table_bs, verify_recursion
from .floer import compare_models, free_loop_model, rfh_dim, rfh_table, sh_dim, tsn_reference
from .hh_engine import BasisElement, explain, hh_dim, hh_table, sector_contribution
from .koszul_oracle import slice_cohomology, validate_sector_model
from .tables import DimTable
from .weights import (
    CalabiYauError,
    ExponentError,
    WeightSystem,
    is_calabi_yau,
    milnor_number,
    weight_system,
)

__version__ = "0.1.0"
