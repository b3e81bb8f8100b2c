"""Ordinal arithmetic in Cantor normal form and the finite-condensation derivative."""

from .band import BandElement, hasse_edges, times_f, verify_left_regular_band
from .cnf import (OMEGA, ONE, ZERO, Kind, OrdinalCNF, Ordering, add, classify, compare, degree,
                  make_cnf, monomial, nat, prod, scale_left, scale_right)
from .derivative import (DefectClass, PreimageSet, d, d_iter, distribute_defect, homomorphism_witness,
                         i_limit, i_preimage, phi_l, phi_l_omega, phi_r, phi_r_omega)
from .errors import FinCondError
from .expr import evaluate, parse, pretty
from .oracle import condense_band_product, condense_cnf_oracle, condense_term, iterate_condense
from .verify import Bounds, run_verify

__version__ = "0.1.0"
