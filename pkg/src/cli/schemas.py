"""
Input schemas for the command line.

Scalars are converted into the active scalar field while validating; the
field travels in the validation context. Validation failures become a
ParseError located by a JSON pointer.
"""
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Type, TypeVar, Union

from pydantic import (
    AfterValidator,
    BaseModel,
    ConfigDict,
    Field,
    StrictFloat,
    StrictInt,
    StrictStr,
    ValidationError,
    ValidationInfo,
    field_validator,
    model_validator,
)

from src.algebra.matrices import Mat8
from src.algebra.octonion import Octonion
from src.algebra.scalars import ScalarField
from src.arthur.params import ArthurParam, ArthurTerm, CuspConstituent, SelfDualType
from src.arthur.shapes import EndoscopicTempered, GenericCuspidal, NonTempered, SiegelStdShape
from src.config import Config
from src.errors import ParseError, TrispinError, pointer
from src.satake.multisets import EigenMultiset
from src.satake.torus import EVEN, ODD, GSpinEvenParam, GSpinOddParam, GSpinParam
from src.triality.spin8 import SpinTriple, lift_reflection_pair
from src.triality.trispin import TriSpinElement

Mode = Literal["rational", "qhalf", "complex"]


def _field(info: ValidationInfo) -> ScalarField:
    return (info.context or {})["field"]


def _to_scalar(value, info: ValidationInfo):
    try:
        return _field(info).convert(value)
    except ParseError as e:
        raise ValueError(e.reason)


def _nonzero(value, info: ValidationInfo):
    if _field(info).is_zero(value):
        raise ValueError("must be nonzero")
    return value


Scalar = Annotated[Union[StrictStr, StrictInt, StrictFloat, List[float]], AfterValidator(_to_scalar)]
NonzeroScalar = Annotated[Scalar, AfterValidator(_nonzero)]
Coords = Annotated[List[Scalar], Field(min_length=8, max_length=8)]
Rows = Annotated[List[Coords], Field(min_length=8, max_length=8)]


class InputModel(BaseModel):
    model_config = ConfigDict(extra="ignore", frozen=True)

    mode: Optional[Mode] = None


# Satake parameters


class GSpinParamIn(InputModel):
    group: Optional[Literal["GSpinOdd", "GSpinEven"]] = None
    n: int = Field(ge=0)
    chi: List[NonzeroScalar]
    mu: NonzeroScalar

    @field_validator("chi")
    @classmethod
    def _chi_length(cls, chi, info: ValidationInfo):
        n = info.data.get("n")
        if n is not None and len(chi) != n:
            raise ValueError(f"chi has {len(chi)} entries, n is {n}")
        return chi

    def build(self, field: ScalarField, group: Optional[str] = None) -> GSpinParam:
        group = self.group or group or ODD
        cls = GSpinOddParam if group == ODD else GSpinEvenParam
        return cls(self.n, tuple(self.chi), self.mu, field)


class EmbedIn(InputModel):
    case: Literal["OddOdd", "EvenEven", "OddEvenToOdd"]
    c1: GSpinParamIn
    c2: GSpinParamIn

    def build(self, field: ScalarField) -> Tuple[GSpinParam, GSpinParam]:
        groups = {"OddOdd": (ODD, ODD), "EvenEven": (EVEN, EVEN), "OddEvenToOdd": (ODD, EVEN)}[self.case]
        return self.c1.build(field, groups[0]), self.c2.build(field, groups[1])


# Octonions and Spin(8)


class TripleIn(InputModel):
    g1: Rows
    g2: Rows
    g3: Rows

    def build(self, field: ScalarField) -> SpinTriple:
        return SpinTriple(*(Mat8.from_rows(rows, field) for rows in (self.g1, self.g2, self.g3)))


class LiftIn(InputModel):
    x: Coords
    y: Coords

    def build(self, field: ScalarField) -> Tuple[Octonion, Octonion]:
        return Octonion.from_values(self.x, field), Octonion.from_values(self.y, field)


class TriSpinIn(InputModel):
    t: Dict[Literal["1", "2", "3"], NonzeroScalar]
    scalar: Optional[NonzeroScalar] = None
    g1: Optional[Rows] = None
    g2: Optional[Rows] = None
    g3: Optional[Rows] = None
    x: Optional[Coords] = None
    y: Optional[Coords] = None

    @field_validator("t")
    @classmethod
    def _all_labels(cls, t):
        if len(t) != 3:
            raise ValueError("t needs the labels 1, 2 and 3")
        return t

    @model_validator(mode="after")
    def _one_source(self):
        triple = [g is not None for g in (self.g1, self.g2, self.g3)]
        pair = [v is not None for v in (self.x, self.y)]
        if all(triple) == all(pair) or (any(triple) and not all(triple)) or (any(pair) and not all(pair)):
            raise ValueError("give either g1, g2, g3 or a reflection pair x, y")
        return self

    def build(self, field: ScalarField) -> Tuple[TriSpinElement, Any]:
        """The element (t, s) and the scalar used for j_e, which defaults to t_1."""
        if self.x is not None:
            s = lift_reflection_pair(Octonion.from_values(self.x, field), Octonion.from_values(self.y, field))
        else:
            s = SpinTriple(*(Mat8.from_rows(rows, field) for rows in (self.g1, self.g2, self.g3)))
        z = TriSpinElement({int(k): v for k, v in self.t.items()}, s)
        return z, self.scalar if self.scalar is not None else z.t[1]


# Arthur parameters


class ConstituentIn(InputModel):
    label: str
    degree: Optional[int] = Field(default=None, ge=1)
    selfdual: Optional[SelfDualType] = SelfDualType.ORTHOGONAL
    satake: Dict[int, List[Scalar]] = Field(default_factory=dict)
    everywhere: Optional[List[Scalar]] = None
    central_character: Optional[str] = None
    root_number: Optional[Literal[1, -1]] = None

    @field_validator("satake")
    @classmethod
    def _primes(cls, satake):
        for p in satake:
            if p < 2:
                raise ValueError(f"{p} is not a prime")
        return satake

    def build(self, field: ScalarField) -> CuspConstituent:
        degree = self.degree
        if degree is None:
            sizes = [len(v) for v in self.satake.values()] or [len(self.everywhere or [None])]
            degree = sizes[0]
        return CuspConstituent(
            self.label,
            degree,
            self.selfdual,
            {p: EigenMultiset(vals, field) for p, vals in self.satake.items()},
            field,
            central_character=self.central_character,
            root_number=self.root_number,
            everywhere=EigenMultiset(self.everywhere, field) if self.everywhere is not None else None,
        )


class TermIn(ConstituentIn):
    d: int = 1


class ParamIn(InputModel):
    terms: List[TermIn] = Field(min_length=1)
    target_degree: int = 8
    discrete: bool = True
    target_selfdual: SelfDualType = SelfDualType.ORTHOGONAL

    @model_validator(mode="before")
    @classmethod
    def _bare_list(cls, data):
        if isinstance(data, list):
            return {"terms": data}
        return data

    def build(self, field: ScalarField) -> ArthurParam:
        return ArthurParam(tuple(ArthurTerm(t.build(field), t.d) for t in self.terms))


class ShapeIn(InputModel):
    kind: Literal["generic", "endoscopic", "nontempered"]
    pi: Optional[ConstituentIn] = None
    pi1: Optional[ConstituentIn] = None
    pi2: Optional[ConstituentIn] = None
    pi3: Optional[ConstituentIn] = None
    spin: Optional[ConstituentIn] = None
    g2: bool = False

    @model_validator(mode="after")
    def _roles(self):
        needed = {"generic": ("pi",), "endoscopic": ("pi1", "pi2", "pi3"), "nontempered": ("pi1", "pi3")}[self.kind]
        missing = [r for r in needed if getattr(self, r) is None]
        if missing:
            raise ValueError(f"a {self.kind} shape needs {', '.join(missing)}")
        return self

    def build(self, field: ScalarField) -> SiegelStdShape:
        if self.kind == "generic":
            spin = self.spin.build(field) if self.spin else None
            return GenericCuspidal(self.pi.build(field), self.g2, spin)
        if self.kind == "endoscopic":
            return EndoscopicTempered(self.pi1.build(field), self.pi2.build(field), self.pi3.build(field))
        return NonTempered(self.pi1.build(field), self.pi3.build(field))


class VariantIn(InputModel):
    source: Literal["PGSp2", "PGSp4"]
    spin: ConstituentIn
    std: Optional[ConstituentIn] = None


class RemixIn(InputModel):
    heart: ConstituentIn
    diamond: ConstituentIn
    spade: ConstituentIn
    club: ConstituentIn


class TensorIn(InputModel):
    c2: List[Scalar]
    c4: List[Scalar]


# L-functions


class FactorIn(InputModel):
    p: int = Field(ge=0)
    eigen: List[Scalar]


class EulerIn(InputModel):
    constant: Optional[List[Scalar]] = None
    factors: Optional[Dict[int, List[Scalar]]] = None
    bound_exponent: Optional[float] = None

    @model_validator(mode="after")
    def _one_family(self):
        if (self.constant is None) == (self.factors is None):
            raise ValueError("give either a constant eigenvalue list or per-prime factors")
        return self


M = TypeVar("M", bound=InputModel)


def resolve_field(data: Any, mode: Optional[str] = None, eps: Optional[float] = None) -> ScalarField:
    """The document's own mode wins over the flag, which wins over the configured default."""
    declared = data.get("mode") if isinstance(data, dict) else None
    try:
        return ScalarField.from_mode(declared or mode or Config.SCALAR_MODE, eps)
    except ValueError as e:
        raise ParseError(pointer("mode") if declared else "", str(e))


def parse_input(model: Type[M], data: Any, field: ScalarField) -> M:
    """Validate ``data`` against ``model``; the first error becomes a ParseError."""
    try:
        return model.model_validate(data, context={"field": field})
    except ValidationError as e:
        err = e.errors(include_url=False)[0]
        ctx_error = (err.get("ctx") or {}).get("error")
        reason = str(ctx_error) if ctx_error is not None else err["msg"]
        raise ParseError(pointer(*err["loc"]), reason)


def build(parsed, field: ScalarField, *extra):
    """Run a model's domain constructor; bare ValueErrors count as malformed input."""
    try:
        return parsed.build(field, *extra)
    except TrispinError:
        raise
    except ValueError as e:
        raise ParseError("", str(e))
