import argparse
import logging
import sys
from typing import Callable, Optional, Sequence

from exactalg import format_rational, parse_rational
from geometry import list_nodes, segre_gradient
from report import Check, VerificationReport
from sampling import Sampler, make_sampler
from spectral import (
    DivisorParams,
    SpectralTriple,
    delta_from_q,
    divisor_mu,
    double_prime_weights,
    lax_weights_mu,
    r_weights_mu,
)
from suites import (
    commute_suite,
    determinant_suite,
    divisor_checks,
    divisor_suite,
    geometry_suite,
    group_law_suite,
    node_census,
    off_variety_commutators,
    partition_suite,
    sample_triples,
    weights_values,
    ybe_suite,
)
from transfer import enumerate_partition, partition_function
from verification_profile import DEFAULT_PROFILE, ProfileError, VerificationProfile, load_profile
from vertex_errors import RationalParseError, SiteCountError, VertexModelError
from vertexcore import Weights

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_CANCELLED = 130

COMMUTE_SITES = (2, 3, 4)
# smallest size at which translation invariance alone does not force commutation
OFF_VARIETY_SITES = 4


def rational_triple(text: str) -> tuple:
    """argparse type for ``r,r,r`` with rationals written as ``[sign]int[/int]``."""
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated rationals, got {text!r}")
    try:
        return tuple(parse_rational(p) for p in parts)
    except RationalParseError as e:
        raise argparse.ArgumentTypeError(str(e).splitlines()[0])


def _canonical(values) -> str:
    return ",".join(format_rational(v) for v in values)


def _sampler(seed: int, profile: VerificationProfile) -> Sampler:
    return make_sampler(seed, profile.sampling.bound, profile.sampling.max_attempts)


def _check_sites(n: int, profile: VerificationProfile) -> int:
    if not 1 <= n <= profile.limits.max_sites:
        raise SiteCountError(n, 1, profile.limits.max_sites)
    return n


def cmd_weights(args, profile: VerificationProfile) -> VerificationReport:
    s = SpectralTriple(*args.mu)
    values = weights_values(s)
    return VerificationReport(
        command="weights",
        inputs={"mu": _canonical(args.mu)},
        values=values,
        checks=[Check("weights.on_variety", values["F"] == 0, f"F = {format_rational(values['F'])}")],
    )


def cmd_verify_ybe(args, profile: VerificationProfile) -> VerificationReport:
    report = VerificationReport(command="verify ybe")
    if args.mu is not None:
        report.inputs["mu"] = _canonical(args.mu)
        report.extend(ybe_suite([SpectralTriple(*args.mu)]))
        return report
    count = args.random if args.random is not None else profile.suites.ybe_samples
    report.seed = args.seed
    report.inputs["random"] = str(count)
    triple_sampler, pair_sampler = _sampler(args.seed, profile).spawn(2)
    report.extend(ybe_suite(sample_triples(triple_sampler, count)))
    report.extend(determinant_suite([pair_sampler.weight_pair() for _ in range(count)]))
    return report


def cmd_verify_commute(args, profile: VerificationProfile) -> VerificationReport:
    report = VerificationReport(command="verify commute")
    if args.mu is not None:
        n = _check_sites(args.sites if args.sites is not None else 2, profile)
        report.inputs.update(mu=_canonical(args.mu), sites=str(n))
        report.extend(commute_suite([SpectralTriple(*args.mu)], [n]))
        return report
    sites = COMMUTE_SITES if args.sites is None else (args.sites,)
    for n in sites:
        _check_sites(n, profile)
    count = args.random if args.random is not None else profile.suites.commute_samples
    report.seed = args.seed
    report.inputs.update(random=str(count), sites=",".join(str(n) for n in sites))
    triple_sampler, pair_sampler = _sampler(args.seed, profile).spawn(2)
    report.extend(commute_suite(sample_triples(triple_sampler, count), sites))
    noncommuting, off_variety = off_variety_commutators(
        [pair_sampler.weight_pair() for _ in range(count)], n=OFF_VARIETY_SITES
    )
    report.values["off_variety_noncommuting"] = f"{noncommuting}/{off_variety}"
    return report


def cmd_verify_geometry(args, profile: VerificationProfile) -> VerificationReport:
    samples = args.samples if args.samples is not None else profile.suites.geometry_samples
    report = VerificationReport(command="verify geometry", inputs={"samples": str(samples)}, seed=args.seed)
    report.extend(geometry_suite(_sampler(args.seed, profile), samples))
    return report


def cmd_partition(args, profile: VerificationProfile) -> VerificationReport:
    report = VerificationReport(command="partition")
    max_enumeration = profile.limits.max_enumeration_size
    if args.weights is None:
        count = args.random if args.random is not None else profile.suites.partition_samples
        sampler = _sampler(args.seed, profile)
        report.seed = args.seed
        report.inputs["random"] = str(count)
        weights = [sampler.weights() for _ in range(count)]
        report.extend(partition_suite(weights, range(1, max_enumeration + 1), max_enumeration))
        return report

    w = Weights.of(args.weights)
    n = _check_sites(args.size, profile)
    report.inputs.update(weights=_canonical(args.weights), size=str(n), method=args.method)
    if args.method in ("transfer", "both"):
        report.values["transfer"] = partition_function(w, n)
    if args.method in ("enumerate", "both"):
        report.values["enumerate"] = enumerate_partition(w, n, max_size=max_enumeration)
    if args.method == "both":
        equal = report.values["transfer"] == report.values["enumerate"]
        report.values["equal"] = equal
        report.add(Check("partition.transfer_equals_enumerate", equal))
    return report


def cmd_nodes(args, profile: VerificationProfile) -> VerificationReport:
    checks = node_census()
    nodes = []
    for x in list_nodes():
        gradient = segre_gradient(x)
        nodes.append({"point": str(x), "gradient": gradient, "verified": not any(gradient)})
    return VerificationReport(
        command="nodes",
        values={"count": len(nodes), "nodes": nodes},
        checks=checks,
    )


def cmd_divisor(args, profile: VerificationProfile) -> VerificationReport:
    report = VerificationReport(command="divisor")
    if args.params is not None:
        p = DivisorParams(*args.params)
        s = divisor_mu(p)
        report.inputs["params"] = _canonical(args.params)
        report.values.update(
            mu=list(s.as_tuple()),
            delta=delta_from_q(p.q).value,
            lax=lax_weights_mu(s),
            double_prime=double_prime_weights(s),
            r=r_weights_mu(s),
        )
        report.extend(divisor_checks(p))
        return report
    count = args.random if args.random is not None else profile.suites.geometry_samples
    report.seed = args.seed
    report.inputs["random"] = str(count)
    param_sampler, pair_sampler = _sampler(args.seed, profile).spawn(2)
    report.extend(divisor_suite([param_sampler.divisor_params() for _ in range(count)]))
    report.extend(group_law_suite([pair_sampler.quadric_pair() for _ in range(count)]))
    return report


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="64-bit seed for randomized checks (default: profile seed)")
    parser.add_argument("--profile", default=None, help="YAML verification profile")
    parser.add_argument("--json", action=argparse.BooleanOptionalAction, default=True, help="Print the JSON report on stdout")
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_common_options(common)

    parser = argparse.ArgumentParser(
        prog="segre-vertex",
        description="Exact verification of the symmetric six-vertex Yang-Baxter triple and the Segre cubic",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    weights = commands.add_parser("weights", parents=[common], help="Lax, double-prime and R weights at a spectral triple")
    weights.add_argument("--mu", type=rational_triple, required=True, help="Spectral triple mu1,mu2,mu3")
    weights.set_defaults(handler=cmd_weights)

    verify = commands.add_parser("verify", help="Run a verification suite")
    suites = verify.add_subparsers(dest="suite", required=True)

    ybe = suites.add_parser("ybe", parents=[common], help="Yang-Baxter residuals")
    source = ybe.add_mutually_exclusive_group()
    source.add_argument("--mu", type=rational_triple, help="Spectral triple mu1,mu2,mu3")
    source.add_argument("--random", type=int, help="Number of random admissible triples")
    ybe.set_defaults(handler=cmd_verify_ybe)

    commute = suites.add_parser("commute", parents=[common], help="Transfer matrix commutation")
    source = commute.add_mutually_exclusive_group()
    source.add_argument("--mu", type=rational_triple, help="Spectral triple mu1,mu2,mu3")
    source.add_argument("--random", type=int, help="Number of random admissible triples")
    commute.add_argument("--sites", type=int, help="Number of lattice sites")
    commute.set_defaults(handler=cmd_verify_commute)

    geometry = suites.add_parser("geometry", parents=[common], help="Segre embedding, birational maps and nodes")
    geometry.add_argument("--samples", type=int, help="Samples per identity")
    geometry.set_defaults(handler=cmd_verify_geometry)

    partition = commands.add_parser("partition", parents=[common], help="Partition function on the n x n torus")
    source = partition.add_mutually_exclusive_group()
    source.add_argument("--weights", type=rational_triple, help="Weights a,b,c")
    source.add_argument("--random", type=int, help="Number of random weight triples for the oracle check")
    partition.add_argument("--size", type=int, default=2, help="Torus size n")
    partition.add_argument("--method", choices=["transfer", "enumerate", "both"], default="transfer")
    partition.set_defaults(handler=cmd_partition)

    nodes = commands.add_parser("nodes", parents=[common], help="The ten nodes of the Segre cubic")
    nodes.set_defaults(handler=cmd_nodes)

    divisor = commands.add_parser("divisor", parents=[common], help="Specialization to the divisor Y")
    source = divisor.add_mutually_exclusive_group()
    source.add_argument("--params", type=rational_triple, help="t1,t2,q")
    source.add_argument("--random", type=int, help="Number of random parameter sets")
    divisor.set_defaults(handler=cmd_divisor)
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _emit(report: VerificationReport, as_json: bool) -> None:
    for line in report.summary_lines():
        print(line, file=sys.stderr)
    if as_json:
        print(report.to_json())


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID

    _configure_logging(args.verbose)
    command = args.command if args.command != "verify" else f"verify {args.suite}"
    handler: Callable = args.handler

    try:
        profile = load_profile(args.profile) if args.profile else DEFAULT_PROFILE
        if args.seed is None:
            args.seed = profile.seed
        if not 0 <= args.seed < 2 ** 64:
            raise ValueError(f"--seed must be an unsigned 64-bit integer, got {args.seed}")
        for name in ("random", "samples"):
            if getattr(args, name, None) is not None and getattr(args, name) < 0:
                raise ValueError(f"--{name} must be non-negative, got {getattr(args, name)}")
        report = handler(args, profile)
    except KeyboardInterrupt:
        print("\n❌ Operation cancelled by user.", file=sys.stderr)
        return EXIT_CANCELLED
    except (VertexModelError, ProfileError, ValueError) as e:
        report = VerificationReport(command=command, error=str(e))
        _emit(report, args.json)
        return EXIT_INVALID

    _emit(report, args.json)
    return EXIT_OK if report.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
