"""
Truncated Euler products prod_{p <= X} 1 / P_p(p^{-s}).
"""
import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Mapping, Optional, Union

from sympy import primerange

from src.config import Config
from src.errors import ConvergenceWarning
from src.lfunctions.local_factors import LocalFactor

logger = logging.getLogger(__name__)

Family = Union[Mapping[int, LocalFactor], Callable[[int], Optional[LocalFactor]]]


def convergence_abscissa(bound_exponent: Optional[float] = None) -> float:
    """1 + theta for eigenvalues bounded by |lambda| <= p^theta."""
    theta = Config.EIGEN_BOUND_EXPONENT if bound_exponent is None else bound_exponent
    return 1.0 + theta


@dataclass(frozen=True)
class EulerReport:
    value: complex
    cutoff: int
    primes_used: int
    tail_estimate: float
    abscissa: float

    def to_json(self) -> dict:
        return {
            "value": [self.value.real, self.value.imag],
            "cutoff": self.cutoff,
            "primes_used": self.primes_used,
            "tail_estimate": self.tail_estimate,
            "abscissa": self.abscissa,
        }


def _primes(family: Family, cutoff: int) -> List[int]:
    if isinstance(family, Mapping):
        return sorted(p for p in family if p <= cutoff)
    return list(primerange(2, cutoff + 1))


def _lookup(family: Family, p: int) -> Optional[LocalFactor]:
    if isinstance(family, Mapping):
        return family.get(p)
    return family(p)


def _euler_term(family: Family, p: int, s: complex) -> complex:
    factor = _lookup(family, p)
    if factor is None:
        return 1 + 0j
    return 1 / factor.evaluate(complex(p) ** (-s))


def euler_eval(
    family: Family,
    s: complex,
    cutoff: Optional[int] = None,
    bound_exponent: Optional[float] = None,
    workers: Optional[int] = None,
) -> EulerReport:
    """Partial Euler product over primes up to ``cutoff``.

    Terms are multiplied in ascending prime order whatever the worker count.
    """
    cutoff = Config.EULER_CUTOFF if cutoff is None else cutoff
    workers = Config.EULER_WORKERS if workers is None else workers
    s = complex(s)
    abscissa = convergence_abscissa(bound_exponent)
    if s.real <= abscissa:
        warnings.warn(
            f"Re(s) = {s.real} is not above the convergence abscissa {abscissa}",
            ConvergenceWarning,
            stacklevel=2,
        )

    primes = _primes(family, cutoff)
    if workers > 1 and len(primes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            terms = list(pool.map(lambda p: _euler_term(family, p, s), primes))
    else:
        terms = [_euler_term(family, p, s) for p in primes]

    value = 1 + 0j
    for term in terms:
        value *= term
    tail = abs(terms[-1] - 1) if terms else 0.0
    logger.debug("Euler product at s=%s over %d primes, tail %.3e", s, len(primes), tail)
    return EulerReport(value, cutoff, len(primes), tail, abscissa)
