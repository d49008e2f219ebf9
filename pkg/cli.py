"""
Command-line front end
Winner sets, certificates, FUN diagrams, profile generation and benchmarks
"""
import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from bench.runner import BenchConfig, records_to_csv, run_bench
from comparison.registry import ALIASES, RULE_NAMES, TIEBREAKER_RULES, canonical_rule, compute_winners
from config import configure_logging, get_settings
from errors import ConfigError, VotingError
from fun.certificate import certify_all, verify_certificate
from fun.diagram import fun_diagram
from fun.export import diagram_to_dot, diagram_to_json
from margins.graph import MarginGraph
from monitoring.metrics import BenchMetrics
from profiles.parser import parse_profile, parse_soc, serialize_profile
from profiles.profile import margins
from river.tiebreaker import parse_tiebreaker
from synth.mallows import MallowsConfig, mallows_sample, sample_no_condorcet

EXIT_OK = 0
EXIT_NOT_VERIFIED = 1
EXIT_USAGE = 2


def _int_list(text: str) -> List[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _str_list(text: str) -> List[str]:
    return [tok.strip() for tok in text.split(",") if tok.strip()]


def load_graph(args) -> MarginGraph:
    """Margin graph from --profile (native or .soc) or --margin-graph JSON"""
    if args.margin_graph:
        try:
            return MarginGraph.from_json(Path(args.margin_graph).read_bytes())
        except (ValueError, KeyError, TypeError) as e:
            raise ConfigError(f"invalid margin-graph JSON: {e}")
    data = Path(args.profile).read_bytes()
    profile = parse_soc(data) if args.profile.endswith(".soc") else parse_profile(data)
    logger.info(f"Loaded profile {args.profile}: m={profile.m}, n={profile.n}")
    return margins(profile)


def cmd_winners(args, parser: argparse.ArgumentParser) -> int:
    rule = canonical_rule(args.rule)
    if rule in TIEBREAKER_RULES and not args.tiebreaker:
        parser.error(f"--rule {rule} requires --tiebreaker")
    g = load_graph(args)
    tiebreaker = parse_tiebreaker(Path(args.tiebreaker).read_bytes(), g) if args.tiebreaker else None
    winners = sorted(g.name_of(v) for v in compute_winners(g, rule, tiebreaker=tiebreaker, limit=args.universe_limit))

    if args.format == "json":
        print(json.dumps({"rule": rule, "winners": winners, "alternatives": list(g.names)}))
    else:
        print(" ".join(winners))
    return EXIT_OK


def cmd_certificate(args) -> int:
    g = load_graph(args)
    if args.all:
        certificates = certify_all(g)
        print(json.dumps([c.to_dict(g.names) for c in certificates], indent=2))
        return EXIT_OK
    if not args.alternative:
        raise ConfigError("give --alternative NAME or --all")
    certificate = verify_certificate(g, g.id_of(args.alternative))
    print(json.dumps(certificate.to_dict(g.names), indent=2))
    return EXIT_OK if certificate.ok else EXIT_NOT_VERIFIED


def cmd_diagram(args) -> int:
    g = load_graph(args)
    d = fun_diagram(g)
    sys.stdout.write(diagram_to_dot(d) if args.format == "dot" else diagram_to_json(d) + "\n")
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.count > 1 and not args.out:
        raise ConfigError("--count > 1 needs --out DIRECTORY")
    outputs = []
    for i in range(args.count):
        if args.no_condorcet:
            cfg = MallowsConfig(m=args.alternatives, n=args.voters, phi=args.phi, norm_phi=args.norm_phi,
                                seed=args.seed + i * args.max_attempts)
            _, profile = sample_no_condorcet(cfg, args.max_attempts)
        else:
            cfg = MallowsConfig(m=args.alternatives, n=args.voters, phi=args.phi, norm_phi=args.norm_phi,
                                seed=args.seed + i)
            profile = mallows_sample(cfg)
        outputs.append(serialize_profile(profile))

    if args.count == 1:
        if args.out:
            Path(args.out).write_text(outputs[0])
        else:
            sys.stdout.write(outputs[0])
        return EXIT_OK

    directory = Path(args.out)
    directory.mkdir(parents=True, exist_ok=True)
    for i, text in enumerate(outputs):
        (directory / f"profile_{i:03d}.prof").write_text(text)
    logger.info(f"Wrote {args.count} profiles to {directory}")
    return EXIT_OK


def cmd_bench(args) -> int:
    config = BenchConfig(
        rules=args.rules,
        alternatives=args.alternatives,
        voters=args.voters,
        instances=args.count,
        phi=args.phi,
        norm_phi=args.norm_phi,
        seed=args.seed,
        poly_timeout=args.timeout,
        brute_timeout=args.brute_timeout,
        universe_limit=args.universe_limit,
        max_attempts=args.max_attempts,
        jobs=args.jobs,
    )
    records = run_bench(config)
    if args.out:
        records_to_csv(records, args.out)
        logger.info(f"Wrote {len(records)} records to {args.out}")
    else:
        sys.stdout.write(records_to_csv(records))

    if args.summary:
        metrics = BenchMetrics()
        for record in records:
            metrics.record_bench(record)
        metrics.export_metrics(args.summary)
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser) -> None:
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--profile", help="Profile file (native format, or PrefLib .soc)")
    source.add_argument("--margin-graph", help="Margin graph JSON file")


def _add_dispersion(p: argparse.ArgumentParser) -> None:
    dispersion = p.add_mutually_exclusive_group()
    dispersion.add_argument("--phi", type=float, help="Mallows dispersion in (0, 1]")
    dispersion.add_argument("--norm-phi", type=float, help="Normalized Mallows dispersion in (0, 1]")


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(prog="riverput", description="River PUT winners via the fused-universe diagram")
    parser.add_argument("--log-level", default=None, help=f"Log level (default {settings.LOG_LEVEL})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("winners", help="Winner set under a rule")
    _add_input(p)
    p.add_argument("--rule", required=True, choices=list(RULE_NAMES) + list(ALIASES))
    p.add_argument("--tiebreaker", help="Tiebreaker file, one 'x>y' per line (river, ranked-pairs)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--universe-limit", type=int, default=settings.UNIVERSE_LIMIT)

    p = sub.add_parser("certificate", help="Winning certificate of an alternative")
    _add_input(p)
    p.add_argument("--alternative", help="Alternative name")
    p.add_argument("--all", action="store_true", help="Certificates for every alternative")

    p = sub.add_parser("diagram", help="FUN diagram with edge and vertex states")
    _add_input(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = sub.add_parser("generate", help="Mallows profiles")
    p.add_argument("--alternatives", type=int, required=True)
    p.add_argument("--voters", type=int, required=True)
    _add_dispersion(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--no-condorcet", action="store_true", help="Reject profiles with a Condorcet winner")
    p.add_argument("--max-attempts", type=int, default=settings.BENCH_MAX_ATTEMPTS)
    p.add_argument("--out", help="Output file, or directory when --count > 1")

    p = sub.add_parser("bench", help="Time rules on Condorcet-free Mallows profiles")
    p.add_argument("--rules", type=_str_list, required=True, help="Comma-separated rule names")
    p.add_argument("--alternatives", type=_int_list, required=True, help="Comma-separated m values")
    p.add_argument("--voters", type=_int_list, required=True, help="Comma-separated n values")
    p.add_argument("--count", type=int, default=5, help="Instances per cell")
    _add_dispersion(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timeout", type=float, default=settings.BENCH_POLY_TIMEOUT, help="Seconds per polynomial rule run")
    p.add_argument("--brute-timeout", type=float, default=settings.BENCH_BRUTE_TIMEOUT, help="Seconds per brute-force run")
    p.add_argument("--universe-limit", type=int, default=settings.UNIVERSE_LIMIT)
    p.add_argument("--max-attempts", type=int, default=settings.BENCH_MAX_ATTEMPTS)
    p.add_argument("--jobs", type=int, default=settings.BENCH_JOBS)
    p.add_argument("--out", help="CSV output file (stdout when omitted)")
    p.add_argument("--summary", help="Write a JSON timing summary here")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    try:
        if args.command == "winners":
            return cmd_winners(args, parser)
        if args.command == "certificate":
            return cmd_certificate(args)
        if args.command == "diagram":
            return cmd_diagram(args)
        if args.command == "generate":
            return cmd_generate(args)
        return cmd_bench(args)
    except VotingError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        print(f"error: invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
