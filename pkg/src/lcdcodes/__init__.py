"""Workbench for LCD codes built by rescaling algebraic geometry codes
over GF(2^m), with GV / TV asymptotic bound calculators."""

__version__ = "0.1.0"

from .gf2m import GF2m, FieldError, schur, vec_inverse, vec_square
from .codes import (LinearCode, CodeFormatError, EnumerationBudgetError,
                    RankDeficientError, dual, from_generator, from_spanning,
                    full_space, hull_dimension, is_lcd, min_distance,
                    parse_code_file, scale_code, write_code_file, zero_code)
from .lcdify import (NoScalingError, ScalingCertificate, SearchInconclusiveError,
                     audit_scaling_union, audit_support_counts,
                     count_blocking_scalings, count_with_support,
                     find_lcd_scaling, scaling_feasibility, support_slack_log2)
from .agcodes import (Curve, build_code, designed_parameters, hermitian_curve,
                      hermitian_places, rational_curve, rational_places,
                      rr_basis, rr_dimension)
from .bounds import (BoundProfile, TowerParams, best_genus_ratio, bound_grid,
                     crossover_intervals, entropy, gv_rate, rate_margins,
                     rate_windows, tower_params, tv_rate)
from .kernels import BACKEND
