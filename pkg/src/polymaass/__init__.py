"""Numerics for shifted polyharmonic Maass forms on the modular group.

The package evaluates the weight-k non-holomorphic Eisenstein series, its
completed and doubly-completed variants (entire in the spectral coordinate),
raw s-derivatives at any base point, and the Whittaker special functions the
Fourier expansion is built from. Mode-level raising, lowering, xi, and
Laplacian actions operate on explicit Fourier expansion data, and the verify
module machine-checks every identity these objects satisfy.
"""

from .config import DEFAULT, Config
from .eisenstein import (PointUHP, SpectralParam, TruncationPolicy,
                         constant_term, default_policy, doubly_completed_eval,
                         fourier_eval_completed, lattice_sum_E, maass_G,
                         taylor_coeff)
from .errors import (AccuracyError, DegenerateParameter, DomainError,
                     PoleError, PolymaassError, TailError, ZeroArgument)
from .modes import (ConstTermAtom, FormExpansion, apply_laplacian,
                    apply_lowering, apply_raising, apply_xi, eval_expansion,
                    eisenstein_expansion, expansion_from_json,
                    expansion_to_json, numeric_laplacian)
from .special import (EvalResult, WhittakerQuery, completed_zeta, digamma,
                      gamma, sigma_power, whittaker_m_plus, whittaker_w,
                      whittaker_w_mu_deriv, whittaker_w_mu_stack)
from .verify import (CheckReport, manifest, reports_to_json, reports_to_table,
                     run_suite, run_suites, suite_names)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "CheckReport",
    "Config",
    "ConstTermAtom",
    "DEFAULT",
    "DegenerateParameter",
    "DomainError",
    "EvalResult",
    "FormExpansion",
    "PointUHP",
    "PoleError",
    "PolymaassError",
    "SpectralParam",
    "TailError",
    "TruncationPolicy",
    "WhittakerQuery",
    "ZeroArgument",
    "apply_laplacian",
    "apply_lowering",
    "apply_raising",
    "apply_xi",
    "completed_zeta",
    "constant_term",
    "default_policy",
    "digamma",
    "doubly_completed_eval",
    "eisenstein_expansion",
    "eval_expansion",
    "expansion_from_json",
    "expansion_to_json",
    "fourier_eval_completed",
    "gamma",
    "lattice_sum_E",
    "maass_G",
    "manifest",
    "numeric_laplacian",
    "reports_to_json",
    "reports_to_table",
    "run_suite",
    "run_suites",
    "sigma_power",
    "suite_names",
    "taylor_coeff",
    "whittaker_m_plus",
    "whittaker_w",
    "whittaker_w_mu_deriv",
    "whittaker_w_mu_stack",
    "__version__",
]
