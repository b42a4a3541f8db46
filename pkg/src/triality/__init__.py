# Triality package: Spin(8) triples and the tri-spin group
from src.triality.spin8 import (
    CenterElement,
    RelationFailure,
    SpinTriple,
    center_enumerate,
    is_spin_triple,
    is_triality_fixed,
    kernel_of_rho,
    lift_reflection_pair,
    rho,
    spin_inv,
    spin_mul,
    spin_relation_failures,
    triality_theta,
)
from src.triality.trispin import (
    TriSpinElement,
    rho_tilde_2,
    rho_tilde_2_factored,
    trispin_identities,
    trispin_j_e,
    trispin_rho_e,
    trispin_theta,
)
