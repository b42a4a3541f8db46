# Algebra package: scalars, split octonions, 8x8 matrices
from src.algebra.scalars import QHALF, RATIONAL, ScalarField, ScalarMode
from src.algebra.octonion import Octonion, oct_bilinear, oct_conj, oct_mul, oct_norm, para_mul
from src.algebra.matrices import (
    Mat8,
    gram_matrix,
    is_special_orthogonal,
    left_para,
    reflection,
    right_para,
    similitude_factor,
)
