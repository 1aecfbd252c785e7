"""Fourier-Mukai partner counts for very general special cubic fourfolds."""

from .fmcount import (
    FMRecord,
    OverlatticeDescriptor,
    count_M_ST,
    enumerate_type_I,
    enumerate_type_II,
    fm_count,
    fm_count_via_overlattices,
    glue_oracle_count,
    glue_oracle_exhaustive,
)
from .lattice import (
    DiscriminantGroup,
    GlueDatum,
    GramMatrix,
    discriminant_group,
    is_even,
    is_saturated,
    overlattice_from_glue,
)
from .modarith import (
    Factorization,
    count_sqrt1_halfrange,
    factorize,
    unit_square_root_count,
    unit_square_roots_bruteforce,
)
from .mukai import build_N, build_S, build_T, disc_form_ST
from .normalforms import hermite_normal_form, smith_normal_form

__version__ = "0.1.0"
