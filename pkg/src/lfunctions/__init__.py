# L-functions package: local factors, Gamma factors, Euler products, signs
from src.lfunctions.archimedean import GammaProduct, gamma_c, gamma_eval, gamma_factor
from src.lfunctions.euler import EulerReport, convergence_abscissa, euler_eval
from src.lfunctions.local_factors import (
    IdentityCheck,
    LocalFactor,
    constituent_product_check,
    g2_euler_identity,
    g2_euler_identity_check,
    langlands_factor_nontempered,
    local_factor,
    one_minus_t,
    term_factors,
)
from src.lfunctions.metadata import SpinLMetadata, spin_l_metadata
from src.lfunctions.root_numbers import SignStep, epsilon_sign
