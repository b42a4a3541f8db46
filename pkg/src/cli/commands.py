"""
Command-line surface: argparse subcommands over the trispin modules.

Every command prints one JSON document on stdout. Errors go to stderr as
{"schema": "v1", "error": {...}} with exit code 1 (domain) or 2 (parse).
"""
import argparse
import logging
import sys
import warnings
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Type

from src.algebra.scalars import ScalarField
from src.arthur.params import param_satake_at_p, validate_param
from src.arthur.shapes import (
    evaluate_remix,
    rankin_selberg_embedding_route,
    rankin_selberg_tensor,
    remix,
    spin_shape_of_siegel,
    std_shape_param,
    variant_shape,
)
from src.cli.codec import dumps, error_payload
from src.cli.schemas import (
    EmbedIn,
    EulerIn,
    FactorIn,
    GSpinParamIn,
    InputModel,
    LiftIn,
    ParamIn,
    RemixIn,
    ShapeIn,
    TensorIn,
    TripleIn,
    TriSpinIn,
    VariantIn,
    build,
    parse_input,
    resolve_field,
)
from src.config import Config
from src.errors import ConvergenceWarning, DeterminantMismatch, MissingSatakeData, ParseError, TrispinError
from src.lfunctions.archimedean import gamma_eval, gamma_factor
from src.lfunctions.euler import euler_eval
from src.lfunctions.local_factors import g2_euler_identity, local_factor
from src.lfunctions.metadata import spin_l_metadata
from src.lfunctions.root_numbers import epsilon_sign
from src.satake.embeddings import embed_spin_torus
from src.satake.g2 import g2_decomposition, g2_test
from src.satake.multisets import EigenMultiset
from src.satake.representations import full_spin_eigen, halfspin_eigen, spinbar, std_eigen
from src.satake.theta import theta_satake, theta_square_commutes
from src.satake.torus import EVEN, ODD, GSpinOddParam
from src.satake.weights import siegel_weights
from src.triality.spin8 import center_enumerate, kernel_of_rho, lift_reflection_pair, triality_theta
from src.triality.trispin import trispin_identities
from src.utils.input_loader import load_input, parse_json

logger = logging.getLogger(__name__)


@dataclass
class RunContext:
    args: argparse.Namespace

    def raw(self):
        if self.args.inline is not None:
            return parse_json(self.args.inline)
        if self.args.input is not None:
            return load_input(self.args.input)
        raise ParseError("", "no input given; use --in or --inline")

    def load(self, model: Type[InputModel]):
        data = self.raw()
        field = resolve_field(data, self.args.mode, self.args.eps)
        return parse_input(model, data, field), field

    def field(self) -> ScalarField:
        return resolve_field(None, self.args.mode, self.args.eps)

    def primes(self) -> List[int]:
        if self.args.primes:
            try:
                return [int(p) for p in self.args.primes.split(",") if p.strip()]
            except ValueError:
                raise ParseError("", f"--primes must be a comma-separated list of integers, got {self.args.primes!r}")
        return list(Config.DEFAULT_PRIMES)

    def q(self, field: ScalarField):
        return None if self.args.q is None else field.convert(self.args.q)


def _complex_arg(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise ParseError("", f"not a complex number: {text!r}")


# Spin(8) and triality


def cmd_verify_triple(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(TripleIn)
    triple = build(parsed, field)
    if triple.is_valid:
        return {"valid": True}
    return {"valid": False, "failures": [f.describe() for f in triple.failures]}


def cmd_theta(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(TripleIn)
    return triality_theta(build(parsed, field)).to_json()


def cmd_lift(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(LiftIn)
    x, y = build(parsed, field)
    triple = lift_reflection_pair(x, y)
    return {"triple": triple.to_json(), "valid": triple.is_valid}


def cmd_center(ctx: RunContext) -> Dict:
    field = ctx.field()
    members = sorted(center_enumerate(field), key=lambda c: tuple(-s for s in c.signs))
    return {
        "members": [c.to_json() for c in members],
        "kernels": {
            str(j): [c.to_json() for c in sorted(kernel_of_rho(j, field), key=lambda c: tuple(-s for s in c.signs))]
            for j in (1, 2, 3)
        },
    }


def cmd_trispin_check(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(TriSpinIn)
    z, t = build(parsed, field)
    results = trispin_identities(z, t)
    return {"holds": all(results.values()), "identities": results}


# Satake calculus


def _param(ctx: RunContext, group: Optional[str] = None):
    parsed, field = ctx.load(GSpinParamIn)
    return build(parsed, field, group)


def cmd_satake_spin(ctx: RunContext) -> Dict:
    return {"spin": full_spin_eigen(_param(ctx)).to_json()}


def cmd_satake_std(ctx: RunContext) -> Dict:
    return {"std": std_eigen(_param(ctx)).to_json()}


def cmd_satake_halfspin(ctx: RunContext) -> Dict:
    c = _param(ctx, EVEN)
    if c.group != EVEN:
        raise ParseError("/group", "half-spin representations belong to GSpinEven parameters")
    return {"sign": ctx.args.sign, "halfspin": halfspin_eigen(c, ctx.args.sign).to_json()}


def cmd_satake_embed(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(EmbedIn)
    c1, c2 = build(parsed, field)
    embedded = embed_spin_torus(parsed.case, c1, c2)
    return {"case": parsed.case, "param": embedded.to_json(), "std": std_eigen(embedded).to_json()}


def cmd_satake_theta_lift(ctx: RunContext) -> Dict:
    args = ctx.args
    if args.input is None and args.inline is None:
        if args.n is None:
            raise ParseError("", "give an input parameter or --n for the all-ones parameter")
        c = GSpinOddParam.ones(args.n, ctx.field())
    else:
        c = _param(ctx, ODD)
        if args.n is not None and c.n != args.n:
            raise ParseError("/n", f"input has n={c.n}, --n is {args.n}")
    if args.m is None:
        raise ParseError("", "--m is required")
    q = ctx.q(c.field)
    return {
        "param": theta_satake(c, args.m, q).to_json(),
        "square_commutes": theta_square_commutes(c, args.m, q),
    }


def cmd_satake_g2(ctx: RunContext) -> Dict:
    c = _param(ctx, ODD)
    g2 = g2_test(c)
    result = {"g2": g2, "spin": full_spin_eigen(c).to_json()}
    if g2:
        result["decomposition"] = g2_decomposition(c).to_json()
    return result


def cmd_satake_weights(ctx: RunContext) -> Dict:
    return siegel_weights(*ctx.args.weights).to_json()


def cmd_satake_spinbar(ctx: RunContext) -> Dict:
    return {"spinbar": spinbar(_param(ctx, ODD)).to_json()}


# Arthur parameters


def cmd_arthur_validate(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(ParamIn)
    diagnostics = validate_param(build(parsed, field), parsed.target_degree, parsed.discrete, parsed.target_selfdual)
    return {"valid": not diagnostics, "diagnostics": [d.to_json() for d in diagnostics]}


def cmd_arthur_eval(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(ParamIn)
    param = build(parsed, field)
    q = ctx.q(field)
    return {"satake": {str(p): param_satake_at_p(param, p, q).to_json() for p in ctx.primes()}}


def cmd_arthur_spin_shape(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(ShapeIn)
    shape = build(parsed, field)
    spin = spin_shape_of_siegel(shape)
    return {"std": std_shape_param(shape).to_json(), "spin": spin.to_json(), "degrees": spin.degrees()}


def cmd_arthur_variant(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(VariantIn)
    std = parsed.std.build(field) if parsed.std else None
    shapes = variant_shape(parsed.source, parsed.spin.build(field), std)
    return {"source": parsed.source, "f1": shapes.f1.to_json(), "f2": shapes.f2.to_json()}


def cmd_arthur_remix(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(RemixIn)
    parts = [c.build(field) for c in (parsed.heart, parsed.diamond, parsed.spade, parsed.club)]
    result = remix(*parts)
    satake = {}
    for p in ctx.primes():
        try:
            before, after = evaluate_remix(result, p)
        except MissingSatakeData:
            continue
        satake[str(p)] = {"before": before.to_json(), "after": after.to_json(), "equal": before == after}
    return {"before": result.before.to_json(), "after": result.after.to_json(), "satake": satake}


def cmd_arthur_tensor(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(TensorIn)
    c2, c4 = EigenMultiset(parsed.c2, field), EigenMultiset(parsed.c4, field)
    tensor = rankin_selberg_tensor(c2, c4)
    try:
        plus, minus = rankin_selberg_embedding_route(c2, c4)
        consistent = plus == tensor and minus == tensor
    except DeterminantMismatch:
        consistent = None
    return {"tensor": tensor.to_json(), "embedding_consistent": consistent}


# L-functions


def cmd_lfun_factor(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(FactorIn)
    return local_factor(EigenMultiset(parsed.eigen, field), parsed.p).to_json()


def cmd_lfun_gamma(ctx: RunContext) -> Dict:
    gp = gamma_factor(siegel_weights(*ctx.args.weights))
    result = gp.to_json()
    result["poles"] = gp.poles()
    if ctx.args.s is not None:
        value = gamma_eval(gp, _complex_arg(ctx.args.s), ctx.args.eps)
        result["value"] = [value.real, value.imag]
    return result


def cmd_lfun_euler(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(EulerIn)
    if ctx.args.s is None:
        raise ParseError("", "--s is required")
    if parsed.constant is not None:
        eigen = EigenMultiset(parsed.constant, field)
        family = lambda p: local_factor(eigen, p)  # noqa: E731
    else:
        family = {p: local_factor(EigenMultiset(v, field), p) for p, v in parsed.factors.items()}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ConvergenceWarning)
        report = euler_eval(family, _complex_arg(ctx.args.s), ctx.args.cutoff, parsed.bound_exponent, ctx.args.workers)
    result = report.to_json()
    result["warnings"] = [str(w.message) for w in caught if issubclass(w.category, ConvergenceWarning)]
    for message in result["warnings"]:
        logger.warning(message)
    return result


def cmd_lfun_epsilon(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(ParamIn)
    sign, trace = epsilon_sign(build(parsed, field), ctx.args.generic)
    return {"epsilon": sign, "trace": [s.to_json() for s in trace]}


def cmd_lfun_metadata(ctx: RunContext) -> Dict:
    parsed, field = ctx.load(ShapeIn)
    if ctx.args.weights and len(ctx.args.weights) != 3:
        raise ParseError("", "metadata takes the three weights k1 k2 k3 or none")
    weights = siegel_weights(*ctx.args.weights) if ctx.args.weights else None
    return spin_l_metadata(spin_shape_of_siegel(build(parsed, field)), weights).to_json()


def cmd_lfun_g2_identity(ctx: RunContext) -> Dict:
    c = _param(ctx, ODD)
    return g2_euler_identity(c, ctx.args.prime, strict=not ctx.args.lenient).to_json()


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["rational", "qhalf", "complex"], help="scalar mode")
    common.add_argument("--eps", type=float, help="numeric tolerance in complex mode")
    common.add_argument("--cutoff", type=int, help="Euler product cutoff X")
    common.add_argument("--primes", help="comma-separated primes")
    common.add_argument("--in", dest="input", help="input JSON file (path or name under the data directory)")
    common.add_argument("--inline", help="input JSON string")
    common.add_argument("--log-level", help="logging level")
    return common


def _weights(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument("weights", type=int, nargs=3 if required else "*", metavar="K", help="weights k1 k2 k3")


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="trispin", description="Triality, spin lifting and spinor L-factors")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(subparsers, name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = subparsers.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    add(sub, "verify-triple", cmd_verify_triple, "check the 64 Spin(8) relations on (g1, g2, g3)")
    add(sub, "theta", cmd_theta, "apply triality (g1, g2, g3) -> (g2, g3, g1)")
    add(sub, "lift", cmd_lift, "lift the reflection pair (x, y) to Spin(8)")
    add(sub, "center", cmd_center, "enumerate the center and the kernels of rho_j")
    add(sub, "trispin-check", cmd_trispin_check, "check the tri-spin identities on (t, s)")

    satake = sub.add_parser("satake", help="Satake parameter calculus").add_subparsers(dest="action", required=True)
    add(satake, "spin", cmd_satake_spin, "spin eigenvalues")
    add(satake, "std", cmd_satake_std, "standard eigenvalues")
    add(satake, "halfspin", cmd_satake_halfspin, "half-spin eigenvalues").add_argument(
        "--sign", choices=["+", "-"], default="+"
    )
    add(satake, "embed", cmd_satake_embed, "torus form of a spin embedding")
    theta_lift = add(satake, "theta-lift", cmd_satake_theta_lift, "unramified theta lift GSpin(2n+1) -> GSpin(2m)")
    theta_lift.add_argument("--n", type=int)
    theta_lift.add_argument("--m", type=int)
    theta_lift.add_argument("--q")
    add(satake, "g2", cmd_satake_g2, "G2 criterion for a PGSp6 parameter")
    _weights(add(satake, "weights", cmd_satake_weights, "Archimedean weights of a Siegel form"))
    add(satake, "spinbar", cmd_satake_spinbar, "spin eigenvalues up to scaling")

    arthur = sub.add_parser("arthur", help="Arthur parameters").add_subparsers(dest="action", required=True)
    add(arthur, "validate", cmd_arthur_validate, "structural diagnostics")
    add(arthur, "eval", cmd_arthur_eval, "Satake multisets at primes").add_argument("--q")
    add(arthur, "spin-shape", cmd_arthur_spin_shape, "std and spin parameters of a Siegel shape")
    add(arthur, "variant", cmd_arthur_variant, "SO8 shapes of the PGSp2 and PGSp4 pullbacks")
    add(arthur, "remix", cmd_arthur_remix, "remix two GL2 x GL2 tensor products")
    add(arthur, "tensor", cmd_arthur_tensor, "Rankin-Selberg tensor of GL2 and GSp4 data")

    lfun = sub.add_parser("lfun", help="local and global L-factors").add_subparsers(dest="action", required=True)
    add(lfun, "factor", cmd_lfun_factor, "det(1 - c T)")
    gamma = add(lfun, "gamma", cmd_lfun_gamma, "Archimedean Gamma product")
    _weights(gamma)
    gamma.add_argument("--s")
    euler = add(lfun, "euler", cmd_lfun_euler, "truncated Euler product")
    euler.add_argument("--s")
    euler.add_argument("--workers", type=int)
    add(lfun, "epsilon", cmd_lfun_epsilon, "sign of the functional equation").add_argument(
        "--generic", action="store_true"
    )
    _weights(add(lfun, "metadata", cmd_lfun_metadata, "shape-level facts about L(s, spin)"), required=False)
    g2 = add(lfun, "g2-identity", cmd_lfun_g2_identity, "L(spin) = zeta L(std) at one prime")
    g2.add_argument("--prime", type=int, default=0)
    g2.add_argument("--lenient", action="store_true", help="report instead of rejecting non-G2 parameters")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    Config.configure_logging(args.log_level)
    try:
        Config.validate()
    except ValueError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return 2
    try:
        result = args.handler(RunContext(args))
    except TrispinError as e:
        logger.debug("command failed: %s", e.code)
        print(dumps(error_payload(e)), file=sys.stderr)
        return e.exit_code
    print(dumps(result))
    return 0
