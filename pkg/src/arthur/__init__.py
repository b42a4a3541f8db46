# Arthur package: formal parameters and Siegel shapes
from src.arthur.params import (
    ArthurParam,
    ArthurTerm,
    CuspConstituent,
    Diagnostic,
    SelfDualType,
    arthur_sl2_chain,
    gsp4_std_constituent,
    param_satake_at_p,
    sym2_constituent,
    tensor_constituent,
    trivial_constituent,
    validate_param,
)
from src.arthur.shapes import (
    EndoscopicTempered,
    GenericCuspidal,
    NonTempered,
    RemixResult,
    VariantShapes,
    VariantSource,
    rankin_selberg_embedding_route,
    rankin_selberg_tensor,
    remix,
    remix_embedding_route,
    spin_shape_of_siegel,
    std_shape_param,
    variant_shape,
)
