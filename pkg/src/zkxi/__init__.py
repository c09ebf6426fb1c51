"""Derivatives of Hardy's Z-function as meromorphic functions ``Z_k(s)``,
their entire completions ``xi_k(s)``, and desk-scale checks of their zeros."""

from .config import EvalConfig, config_load, config_load_file, dump_config
from .errors import *  # noqa: F401,F403
from .jets import CJet, jet_arith, jet_derivative_extract, jet_elementary
from .report import Case, Report
from .special import chi_jet, loggamma_jet, theta_and_derivative
from .verify import run_suite
from .xik import xik_constants, xik_eval, xik_jet, xik_special_value
from .zeros import (
    count_vs_mainterm,
    gk_logderiv_check,
    interlace,
    mozer_residual,
    scan_zeros,
)
from .zeta import zeta, zeta_jet
from .zk import (
    ZkBundle,
    f_family,
    f_partition,
    hardy_derivatives,
    omega_jet,
    zk_eval,
    zk_value,
)

__version__ = "0.1.0"
