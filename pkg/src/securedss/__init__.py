"""Secure distributed storage codes with small access complexity."""

from .bounds import (BoundCurve, capacity, dimension_upper, distance_upper, entropy_q,
                     mrrw_upper_rate, random_coding_rate, sample_curves)
from .codes import (LinearCode, codeword_with_support, dual, grs_code, minimum_distance,
                    reed_muller, vandermonde)
from .gf import Field, FieldElement, field_new
from .matrix import (Matrix, column_span_contains, invert, nullspace, rank, rref,
                     spans_intersect_trivially)
from .secure import (AccessStructure, SecureStorageCode, access_complexity, construct_grs,
                     construct_random, construct_rm, construction1, construction2, three_node_scheme,
                     rebalance, validate_access_structure, verify, with_access_structure)
from .sim import (NodeArray, VerificationReport, encode, erasure_check, load_report, retrieve,
                  secrecy_exhaustive)

__version__ = "0.1.0"
