"""
Error types shared by all modules.

Every error carries a stable machine-readable ``code`` and the process
exit code the CLI uses for it (1 for domain errors, 2 for parse errors).
"""
from typing import Optional


class TrispinError(ValueError):
    """Base class for domain errors."""

    code = "domain_error"
    exit_code = 1

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self)}


class ScalarModeMismatch(TrispinError):
    code = "scalar_mode_mismatch"


class IsotropicVector(TrispinError):
    code = "isotropic_vector"


class NotASimilitude(TrispinError):
    code = "not_a_similitude"


class InvalidTriple(TrispinError):
    code = "invalid_triple"


class SpinorNormObstruction(TrispinError):
    code = "spinor_norm_obstruction"


class ZeroScalar(TrispinError):
    code = "zero_scalar"


class WrongRank(TrispinError):
    code = "wrong_rank"


class RankMismatch(TrispinError):
    code = "rank_mismatch"


class DeterminantMismatch(TrispinError):
    code = "determinant_mismatch"


class RankTooSmall(TrispinError):
    code = "rank_too_small"


class NotPGSp6Param(TrispinError):
    code = "not_pgsp6_param"


class WeightConstraintViolated(TrispinError):
    code = "weight_constraint_violated"


class NotASquare(TrispinError):
    code = "not_a_square"


class HalfIntegralPower(TrispinError):
    code = "half_integral_power"


class MissingScalar(TrispinError):
    code = "missing_scalar"


class MissingSatakeData(TrispinError):
    code = "missing_satake_data"

    def __init__(self, label: str, prime: int):
        super().__init__(f"constituent {label!r} has no Satake data at p={prime}")
        self.label = label
        self.prime = prime


class ShapeInvalid(TrispinError):
    code = "shape_invalid"


class DegreeMismatch(TrispinError):
    code = "degree_mismatch"


class SizeMismatch(TrispinError):
    code = "size_mismatch"


class CentralCharacterMismatch(TrispinError):
    code = "central_character_mismatch"


class NotG2Type(TrispinError):
    code = "not_g2_type"


class PoleAt(TrispinError):
    code = "pole_at"

    def __init__(self, s: complex):
        super().__init__(f"Gamma product has a pole at s={s}")
        self.s = s


class MissingSelfdualType(TrispinError):
    code = "missing_selfdual_type"


class MissingRootNumber(TrispinError):
    code = "missing_root_number"


class ParseError(TrispinError):
    """Malformed input, located by a JSON pointer."""

    code = "parse_error"
    exit_code = 2

    def __init__(self, location: str, reason: str):
        super().__init__(f"{location or '/'}: {reason}")
        self.location = location
        self.reason = reason

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.reason, "location": self.location}


class ConvergenceWarning(UserWarning):
    """Euler product evaluated at or below its convergence abscissa."""


def pointer(*parts) -> str:
    """Build a JSON pointer from path parts."""
    if not parts:
        return ""
    return "/" + "/".join(str(p).replace("~", "~0").replace("/", "~1") for p in parts)


def require_nonzero(field, value, what: Optional[str] = None):
    """Raise ZeroScalar when value is zero in field."""
    if field.is_zero(value):
        raise ZeroScalar(f"{what or 'scalar'} must be nonzero")
    return value
