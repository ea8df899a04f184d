from .closed_form import (
    bisect_increasing, closed_form_eigenpair, cored_polynomial, gen_tight_polynomial,
    lambda_q_cored_cycle, lambda_q_gen_tight_cycle, lambda_q_s_cycle,
)
from .constructive import (
    SupervertexReport, alternating_eigenpair, check_supervertex_property,
    signflip_back, signflip_transfer, vertex_indicator_eigenpair,
)
from .multistart import (
    LaplacianSystem, MultistartOptions, SpectralReport, enumerate_laplacian_spectrum,
)
from .power import PowerMethodOptions, lambda_q_power_method

__all__ = [
    "LaplacianSystem", "MultistartOptions", "PowerMethodOptions", "SpectralReport",
    "SupervertexReport", "alternating_eigenpair", "bisect_increasing",
    "check_supervertex_property", "closed_form_eigenpair", "cored_polynomial", "enumerate_laplacian_spectrum",
    "gen_tight_polynomial", "lambda_q_cored_cycle", "lambda_q_gen_tight_cycle",
    "lambda_q_power_method", "lambda_q_s_cycle", "signflip_back", "signflip_transfer",
    "vertex_indicator_eigenpair",
]
