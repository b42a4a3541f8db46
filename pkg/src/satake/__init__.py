# Satake package: torus parameters and their eigenvalue multisets
from src.satake.multisets import EigenMultiset, ProjectiveMultiset
from src.satake.torus import GSpinEvenParam, GSpinOddParam
from src.satake.representations import (
    exterior_power,
    halfspin_eigen,
    spin_eigen,
    spin_square_decomposition,
    spinbar,
    std_eigen,
)
from src.satake.embeddings import (
    EmbeddingCase,
    embed_spin_torus,
    gl2_pair_to_gspin4,
    gl2_to_gspin3,
    gsp4_to_gspin5,
    iota_7to8,
    nu_embed,
)
from src.satake.theta import iota_flat, satake_of_trivial, theta_satake, theta_square_commutes
from src.satake.g2 import g2_test, spin_splits_off_one
from src.satake.weights import ArchWeightParam, arch_spin, arch_std, siegel_weights
