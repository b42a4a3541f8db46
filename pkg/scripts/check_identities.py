"""
Full-scale identity report: runs every algebraic identity the toolkit relies
on over large seeded samples and prints a pass/fail summary.

Usage:
    python scripts/check_identities.py [--seed N]
"""
import argparse
import math
import sys
import time
from pathlib import Path

# Add src to path
sys.path.append(str(Path(__file__).parent.parent))

from sympy import prime, primerange

from src.algebra.octonion import oct_bilinear, oct_mul, oct_norm, para_mul
from src.algebra.scalars import QHALF, RATIONAL
from src.arthur.params import CuspConstituent, SelfDualType, param_satake_at_p
from src.arthur.shapes import EndoscopicTempered, GenericCuspidal, NonTempered, spin_shape_of_siegel
from src.config import Config
from src.lfunctions.euler import euler_eval
from src.lfunctions.local_factors import constituent_product_check, g2_euler_identity_check, local_factor, one_minus_t
from src.lfunctions.root_numbers import epsilon_sign
from src.satake.embeddings import iota_7to8, nu_embed
from src.satake.g2 import g2_decomposition, g2_test
from src.satake.multisets import EigenMultiset
from src.satake.representations import MINUS, PLUS, halfspin_eigen, spin_eigen, spin_square_decomposition, std_eigen
from src.satake.theta import theta_satake
from src.satake.torus import GSpinOddParam
from src.satake.weights import siegel_weights
from src.triality.spin8 import (
    center_enumerate,
    kernel_of_rho,
    lift_reflection_pair,
    rho,
    spin_mul,
    triality_theta,
)
from src.triality.trispin import TriSpinElement, trispin_identities
from src.utils.sampling import (
    liftable_pair,
    make_rng,
    random_g2_param,
    random_gl2,
    random_octonion,
    random_odd_param,
    random_pgsp6_param,
    random_rational,
    random_spin_element,
)


class Report:
    """Collects named checks and their timings, and prints the header and verdict."""

    RULE = "=" * 72

    def __init__(self, title, seed):
        self.title = title
        self.seed = seed
        self.results = []

    def header(self):
        print(self.RULE)
        print(f"  {self.title}")
        print(f"  seed {self.seed}")
        print(self.RULE)
        print()

    def check(self, name, fn):
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as e:
            ok, detail = False, f"{type(e).__name__}: {e}"
        elapsed = time.perf_counter() - start
        self.results.append((name, ok))
        mark = "✅" if ok else "❌"
        print(f"{mark} {name} ({elapsed:.2f}s)")
        if detail:
            print(f"   {detail}")

    @property
    def failures(self):
        return [name for name, ok in self.results if not ok]

    def summary(self):
        """Print the verdict; True when every check passed."""
        print()
        print(self.RULE)
        if self.failures:
            print(f"❌ {len(self.failures)} of {len(self.results)} checks failed: {', '.join(self.failures)}")
            return False
        print(f"✅ All {len(self.results)} checks passed")
        return True


def composition_laws(rng, samples=1000):
    for _ in range(samples):
        x, y, z = (random_octonion(rng) for _ in range(3))
        if oct_norm(oct_mul(x, y)) != oct_norm(x) * oct_norm(y):
            return False, f"N(xy) failed at x={x.to_json()}"
        if oct_norm(para_mul(x, y)) != oct_norm(x) * oct_norm(y):
            return False, f"N(x*y) failed at x={x.to_json()}"
        if oct_bilinear(para_mul(x, y), z) != oct_bilinear(x, para_mul(y, z)):
            return False, f"b_N associativity failed at x={x.to_json()}"
    return True, f"{samples} triples"


def triality_suite(rng, samples=200):
    lifts = [lift_reflection_pair(*liftable_pair(rng)) for _ in range(samples)]
    for a, b in zip(lifts, lifts[1:] + lifts[:1]):
        if not a.is_valid:
            return False, "a lift failed the 64 relations"
        ta = triality_theta(a)
        if not triality_theta(triality_theta(ta)).equals(a):
            return False, "theta^3 != id"
        if not triality_theta(spin_mul(a, b)).equals(spin_mul(ta, triality_theta(b))):
            return False, "theta is not multiplicative"
        if not all(rho(j, ta).equals(rho(j % 3 + 1, a)) for j in (1, 2, 3)):
            return False, "rho_j(theta a) != rho_{j+1}(a)"
    center = center_enumerate(RATIONAL)
    if len(center) != 4 or any(c.signs[0] != c.signs[1] * c.signs[2] for c in center):
        return False, f"center scan found {[c.signs for c in center]}"
    if any(len(kernel_of_rho(j, RATIONAL)) != 2 for j in (1, 2, 3)):
        return False, "a kernel of rho_j does not have two elements"
    return True, f"{samples} lifts, center of order 4"


def trispin_suite(rng, samples=100):
    for _ in range(samples):
        t = {lab: RATIONAL.convert(random_rational(rng, nonzero=True)) for lab in (1, 2, 3)}
        z = TriSpinElement(t, random_spin_element(rng))
        results = trispin_identities(z, RATIONAL.convert(random_rational(rng, nonzero=True)))
        failed = [k for k, v in results.items() if not v]
        if failed:
            return False, f"failed: {', '.join(failed)}"
    return True, f"{samples} elements"


def convention_pinning(rng, samples=100):
    for _ in range(samples):
        c = random_odd_param(rng, 3)
        spin = spin_eigen(c)
        if spin.tensor(spin) != spin_square_decomposition(c):
            return False, f"spin (x) spin mismatch at {c.to_json()}"
    return True, f"{samples} rank-3 parameters"


def branching(rng, samples=100):
    for _ in range(samples):
        c = random_odd_param(rng, 3)
        lifted = iota_7to8(c)
        if std_eigen(lifted) != std_eigen(c) + EigenMultiset((RATIONAL.one,)):
            return False, "std_8 . iota != std_7 + {1}"
        if halfspin_eigen(lifted, PLUS) != spin_eigen(c) or halfspin_eigen(lifted, MINUS) != spin_eigen(c):
            return False, "half-spins do not restrict to spin_7"
    a, b, c = (EigenMultiset.of(v) for v in ([2, 3], [6, 1], [5, 7]))
    param = nu_embed(a, b, c)
    if not param.equals(GSpinOddParam.of([3, "5/7", "1/2"], 14)):
        return False, f"nu example gave {param.to_json()}"
    if spin_eigen(param) != EigenMultiset.of([5, 7, 10, 14, 15, 21, 30, 42]):
        return False, "nu example spin multiset differs"
    sym2 = EigenMultiset.of(["5/7", 1, "7/5"])
    if std_eigen(param) != a.tensor(b.inverse()) + sym2:
        return False, "nu example std identity fails"
    return True, f"{samples} parameters and the worked nu example"


def theta_suite():
    u = QHALF.u
    q = u * u
    for n, m in ((1, 4), (2, 4), (3, 4), (3, 5)):
        c = GSpinOddParam.of([f"{k + 2}" for k in range(n)], "3", QHALF)
        lifted = theta_satake(c, m)
        r = m - n - 1
        tail = [QHALF.power(q, k) for k in range(r, 0, -1)] + [QHALF.one]
        expected_mu = c.mu * QHALF.half_power(q, -(m - n) * (m - n - 1) // 2)
        if not all(QHALF.eq(x, y) for x, y in zip(lifted.chi, list(c.chi) + tail)):
            return False, f"chi mismatch for (n, m) = ({n}, {m})"
        if not QHALF.eq(lifted.mu, expected_mu):
            return False, f"mu mismatch for (n, m) = ({n}, {m})"
        if m == n + 1 and std_eigen(lifted) != std_eigen(c) + EigenMultiset((QHALF.one,), QHALF):
            return False, "m = n + 1 should add exactly one eigenvalue 1"
    return True, "(n, m) in (1,4), (2,4), (3,4), (3,5)"


def g2_suite(rng, samples=500):
    g2_members = 0
    for k in range(samples):
        c = random_g2_param(rng) if k % 2 else random_pgsp6_param(rng)
        is_g2 = g2_test(c)
        if is_g2 != (spin_eigen(c) == g2_decomposition(c)):
            return False, f"criterion fails at {c.to_json()}"
        if is_g2:
            g2_members += 1
            if not g2_euler_identity_check(c):
                return False, f"Euler identity fails at {c.to_json()}"
    return True, f"{samples} PGSp6 parameters, {g2_members} of G2 type"


def _constituent(label, data, selfdual=SelfDualType.SYMPLECTIC, **kwargs):
    return CuspConstituent.from_values(label, data, selfdual, RATIONAL, **kwargs)


def shape_suite(rng, primes=20):
    ps = [prime(k) for k in range(1, primes + 1)]
    pi1, pi2, pi3 = {}, {}, {}
    for p in ps:
        a = random_gl2(rng)
        pi1[p] = a.values
        pi2[p] = random_gl2(rng, det=a.product()).values
        pi3[p] = random_gl2(rng).values
    f, g, h = _constituent("f", pi1, root_number=1), _constituent("g", pi2), _constituent("h", pi3, root_number=-1)
    endoscopic = spin_shape_of_siegel(EndoscopicTempered(f, g, h))
    nontempered = spin_shape_of_siegel(NonTempered(f, h))
    pi = _constituent("Pi", {2: [4, "1/4", 9, "1/9", 36, "1/36", 1]}, SelfDualType.ORTHOGONAL)
    generic = spin_shape_of_siegel(GenericCuspidal(pi, g2=True))
    if [endoscopic.degree, nontempered.degree, generic.degree] != [8, 8, 8]:
        return False, "a spin shape does not have degree 8"
    for p in ps:
        route = spin_eigen(nu_embed(f.satake_at(p), g.satake_at(p), h.satake_at(p)))
        if param_satake_at_p(endoscopic, p) != route:
            return False, f"endoscopic spin differs from the nu route at p={p}"
        if not constituent_product_check(endoscopic, p):
            return False, f"product check fails at p={p}"
    if not constituent_product_check(generic, 2):
        return False, "G2 shape product check fails"
    signs = [epsilon_sign(s)[0] for s in (endoscopic, nontempered, generic)]
    if signs != [1, 1, 1]:
        return False, f"signs {signs}"
    return True, f"{primes} primes, signs +1"


def weights_suite(limit=40):
    if siegel_weights(12, 12, 12).w != (15, 6, 5, 4) or siegel_weights(4, 4, 4).w != (3, 2, 1, 0):
        return False, "worked examples differ"
    count = 0
    for k1 in range(4, limit + 1):
        for k2 in range(4, k1 + 1):
            for k3 in range(4, k2 + 1):
                if (k1 + k2 + k3) % 2:
                    continue
                a, b, c = siegel_weights(k1, k2, k3).abc
                w = siegel_weights(k1, k2, k3).w
                if (a + b + c) % 2 or not (w[0] > w[1] > w[2] > w[3] >= 0):
                    return False, f"weights ({k1}, {k2}, {k3}) give w = {w}"
                count += 1
    return True, f"{count} weight triples"


def lfactor_suite(rng, cutoff=100000):
    for _ in range(20):
        a = EigenMultiset.of([random_rational(rng, nonzero=True) for _ in range(3)])
        b = EigenMultiset.of([random_rational(rng, nonzero=True) for _ in range(5)])
        if local_factor(a + b, 2) != local_factor(a, 2) * local_factor(b, 2):
            return False, "local factors are not multiplicative"
        pairs = [RATIONAL.convert(random_rational(rng, nonzero=True)) for _ in range(4)]
        closed = EigenMultiset(tuple(pairs) + tuple(RATIONAL.one / x for x in pairs))
        if not local_factor(closed, 2).is_palindromic():
            return False, "inverse-closed factor is not palindromic"
    report = euler_eval(one_minus_t, 2, cutoff=cutoff, bound_exponent=0)
    oracle = 1.0
    for p in primerange(2, cutoff + 1):
        oracle /= 1 - p**-2.0
    if abs(report.value.real - oracle) > 1e-9 * oracle:
        return False, f"zeta(2) partial product {report.value.real} vs oracle {oracle}"
    return True, f"zeta(2) over {report.primes_used} primes = {report.value.real:.12f} (pi^2/6 = {math.pi**2 / 6:.12f})"


def main():
    """Run every check and exit non-zero on failure."""
    parser = argparse.ArgumentParser(description="Full-scale identity report")
    parser.add_argument("--seed", type=int, default=Config.RANDOM_SEED)
    args = parser.parse_args()

    report = Report("Triality and spin lifting identities", args.seed)
    report.header()

    rng = make_rng(args.seed)
    report.check("Octonion composition laws", lambda: composition_laws(rng))
    report.check("Spin(8) and triality", lambda: triality_suite(rng))
    report.check("Tri-spin identities", lambda: trispin_suite(rng))
    report.check("spin (x) spin convention", lambda: convention_pinning(rng))
    report.check("iota and nu branching", lambda: branching(rng))
    report.check("Theta Satake parameters", theta_suite)
    report.check("G2 criterion and Euler identity", lambda: g2_suite(rng))
    report.check("Siegel spin shapes", lambda: shape_suite(rng))
    report.check("Archimedean weights", weights_suite)
    report.check("Local factors and zeta(2)", lambda: lfactor_suite(rng))

    if not report.summary():
        sys.exit(1)


if __name__ == "__main__":
    main()
