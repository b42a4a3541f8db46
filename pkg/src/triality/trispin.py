"""
The tri-spin group (G_m^E x Spin8) / (iota x id)(Z).

E is the set of nontrivial central elements, labelled 1, 2, 3 by the j with
rho_j(e) = I. For f in E, iota(f) has f-component 1 and -1 elsewhere, and
(t, s) is identified with (iota(f) t, f s).

Triality on E: theta(e_1) = e_3, theta(e_3) = e_2, theta(e_2) = e_1 (the
labels rotate along the cycle (1 3 2), since rho_j o theta = rho_{j+1}).
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping

from src.algebra.matrices import Mat8
from src.algebra.scalars import ScalarField
from src.errors import ZeroScalar
from src.triality.spin8 import (
    CenterElement,
    SpinTriple,
    _require_valid,
    center_by_label,
    nontrivial_center,
    spin_mul,
    triality_theta,
)

logger = logging.getLogger(__name__)

LABELS = (1, 2, 3)


def theta_label(label: int) -> int:
    """Label of theta(e) for the element e with the given label."""
    return center_by_label(label).theta().label


def iota(f: CenterElement, scalars: ScalarField) -> Dict[int, object]:
    """iota(f): component 1 at f, -1 at the two other labels."""
    return {lab: (scalars.one if lab == f.label else -scalars.one) for lab in LABELS}


@dataclass(frozen=True, eq=False)
class TriSpinElement:
    """A representative (t, s); equality is taken modulo the central identification."""

    t: Mapping[int, object]
    s: SpinTriple

    def __post_init__(self):
        if set(self.t) != set(LABELS):
            raise ValueError("t must be indexed by the labels 1, 2, 3")
        for lab in LABELS:
            if self.field.is_zero(self.t[lab]):
                raise ZeroScalar(f"t_{lab} must be nonzero")

    @property
    def field(self) -> ScalarField:
        return self.s.field

    def twist(self, f: CenterElement) -> "TriSpinElement":
        """The equivalent representative (iota(f) t, f s)."""
        i = iota(f, self.field)
        t = {lab: i[lab] * self.t[lab] for lab in LABELS}
        return TriSpinElement(t, spin_mul(f.to_triple(self.field), self.s))

    def representatives(self) -> List["TriSpinElement"]:
        return [self] + [self.twist(f) for f in nontrivial_center()]

    def canonical(self) -> "TriSpinElement":
        """Representative whose g1 and g2 have positive first nonzero entries."""
        for rep in self.representatives():
            if _first_entry_positive(rep.s.g1) and _first_entry_positive(rep.s.g2):
                return rep
        raise AssertionError("no canonical representative")

    def equals(self, other: "TriSpinElement") -> bool:
        a, b = self.canonical(), other.canonical()
        scalars = self.field
        return all(scalars.eq(a.t[lab], b.t[lab]) for lab in LABELS) and a.s.equals(b.s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TriSpinElement):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def to_json(self) -> dict:
        data = self.s.to_json()
        data["t"] = {str(lab): self.field.to_json(self.t[lab]) for lab in LABELS}
        return data


def _first_entry_positive(m: Mat8) -> bool:
    scalars = m.field
    for row in m.rows:
        for v in row:
            if not scalars.is_zero(v):
                return scalars.is_positive(v)
    return True


def trispin_theta(z: TriSpinElement) -> TriSpinElement:
    """theta(t, s) = (t', theta(s)) with t'_{theta(e)} = t_e."""
    t = {theta_label(lab): z.t[lab] for lab in LABELS}
    return TriSpinElement(t, triality_theta(z.s))


def trispin_j_e(e: CenterElement, t, s: SpinTriple) -> TriSpinElement:
    """j_e(t, s): e-component 1, the other two components t."""
    scalars = s.field
    if e.is_identity:
        raise ValueError("j_e is defined for the nontrivial central elements")
    if scalars.is_zero(t):
        raise ZeroScalar("t must be nonzero")
    _require_valid(s)
    comps = {lab: (scalars.one if lab == e.label else t) for lab in LABELS}
    return TriSpinElement(comps, s)


def trispin_rho_e(e: CenterElement, z: TriSpinElement) -> Mat8:
    """rho_e(t, s) = (t_{e'} / t_{e''}) rho_i(s), with e' = theta(e), e'' = theta(e'), i the label of e.

    The result carries its similitude factor (t_{e'} / t_{e''})^2.
    """
    if e.is_identity:
        raise ValueError("rho_e is defined for the nontrivial central elements")
    e1 = e.theta()
    e2 = e1.theta()
    ratio = z.t[e1.label] / z.t[e2.label]
    g = z.s.components[e.label - 1]
    scalars = z.field
    return Mat8((g.rep * ratio), scalars, ratio * ratio)


def gspin_theta(e: CenterElement, t, s: SpinTriple):
    """The map GSpin8^e -> GSpin8^{theta(e)}: (t, s) -> (t, theta(s))."""
    return theta_label(e.label), t, triality_theta(s)


def rho_tilde_2(t, s: SpinTriple) -> Mat8:
    """rho_{e'} o j_e for e labelled 1: the similitude map GSpin8 -> GSO8."""
    e = center_by_label(1)
    return trispin_rho_e(e.theta(), trispin_j_e(e, t, s))


def rho_tilde_2_factored(t, s: SpinTriple) -> Mat8:
    """The same map written as rho_e o theta^{-1} o j_e."""
    e = center_by_label(1)
    z = trispin_j_e(e, t, s)
    return trispin_rho_e(e, trispin_theta(trispin_theta(z)))


def trispin_identities(z: TriSpinElement, t) -> Dict[str, bool]:
    """Check the tri-spin identities on z and on j_e(t, s) for every e in E."""
    s = _require_valid(z.s)
    scalars = z.field
    results = {
        "theta_order_3": trispin_theta(trispin_theta(trispin_theta(z))).equals(z),
        "rho_tilde_2_factorization": rho_tilde_2(t, s).equals(rho_tilde_2_factored(t, s)),
    }
    for e in nontrivial_center():
        e1 = e.theta()
        j = trispin_j_e(e, t, s)
        results[f"rho_{e.label}_theta"] = trispin_rho_e(e, z).equals(trispin_rho_e(e1, trispin_theta(z)))
        results[f"j_{e.label}_theta"] = trispin_theta(j).equals(trispin_j_e(e1, t, triality_theta(s)))
        results[f"rho_{e.label}_j_special"] = trispin_rho_e(e, j).equals(s.components[e.label - 1])
        results[f"rho_{e1.label}_j_{e.label}_scales"] = trispin_rho_e(e1, j).equals(
            s.components[e1.label - 1].scale(t)
        )
    logger.debug("tri-spin identities over %s: %s", scalars.mode.value, results)
    return results
