"""``bergman`` command-line entry point.

Exit statuses: 0 success, 1 failed acceptance or golden check, 2 config error,
3 numeric error.
"""
import argparse
import logging
import sys
from typing import List, Optional

from .. import __version__
from ..core.errors import ConfigError, NumericError, ParameterError, SingularityError
from ..core.params import METHODS
from ..utils.logger import configure_logging
from . import experiments
from .config import load_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


def _methods(text: str) -> List[str]:
    if text == "all":
        return list(METHODS)
    chosen = [m.strip() for m in text.split(",") if m.strip()]
    unknown = [m for m in chosen if m not in METHODS]
    if unknown or not chosen:
        raise argparse.ArgumentTypeError(f"methods must be 'all' or a comma list of {', '.join(METHODS)}")
    return chosen


def _cmd_compare(config, args):
    return experiments.run_compare(config)


def _cmd_theorem1(config, args):
    return experiments.run_theorem1(config)


def _cmd_kernel_check(config, args):
    return experiments.run_kernel_check(config)


def _cmd_operator_probe(config, args):
    return experiments.run_operator_probe(config)


def _cmd_sharpness(config, args):
    return experiments.run_sharpness(config)


def _cmd_lemma_checks(config, args):
    return experiments.run_lemma_checks(config, None if args.all or args.lemma is None else [args.lemma])


def _cmd_quadrature_bench(config, args):
    return experiments.run_quadrature_bench(config, args.integrand, args.methods)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="INI experiment configuration")
    common.add_argument("--seed", type=int, default=None, help="Override the configured seed")
    common.add_argument("--output-dir", type=str, default=None)
    golden = common.add_mutually_exclusive_group()
    golden.add_argument("--verify", action="store_const", const="verify", dest="golden_mode",
                        help="Compare results against recorded goldens")
    golden.add_argument("--record", action="store_const", const="record", dest="golden_mode",
                        help="Record results as the new goldens")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="bergman", description="Weighted Bergman space experiments")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("compare", parents=[common], help="Comparability of the four functionals").set_defaults(
        func=_cmd_compare)
    sub.add_parser("theorem1", parents=[common], help="Derivative integrals with q = p").set_defaults(
        func=_cmd_theorem1)
    sub.add_parser("kernel-check", parents=[common], help="Reproducing formula, Forelli-Rudin ratio, H kernel"
                   ).set_defaults(func=_cmd_kernel_check)

    probe = sub.add_parser("operator-probe", parents=[common], help="Boundedness probe of T_{a,b}")
    probe.add_argument("--grid", type=str, default=None, help="Config file with a [probe] grid")
    probe.set_defaults(func=_cmd_operator_probe)

    sub.add_parser("sharpness", parents=[common], help="Divergence profile of f = z_1").set_defaults(
        func=_cmd_sharpness)

    lemmas = sub.add_parser("lemma-checks", parents=[common], help="Inequality checks, one section per lemma")
    which = lemmas.add_mutually_exclusive_group(required=True)
    which.add_argument("--all", action="store_true")
    which.add_argument("--lemma", type=int, choices=sorted(experiments.LEMMA_SECTIONS))
    lemmas.set_defaults(func=_cmd_lemma_checks)

    bench = sub.add_parser("quadrature-bench", parents=[common], help="Compare integration methods")
    bench.add_argument("--integrand", choices=experiments.INTEGRANDS, default="monomial")
    bench.add_argument("--methods", type=_methods, default=list(METHODS))
    bench.set_defaults(func=_cmd_quadrature_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    config_path = getattr(args, "grid", None) or args.config
    try:
        config = load_config(config_path, command=args.command, seed=args.seed, output_dir=args.output_dir,
                             golden_mode=args.golden_mode)
        status = args.func(config, args)
    except ConfigError as e:
        logger.error("%s", e)
        return EXIT_CONFIG
    except ParameterError as e:
        logger.error("invalid parameters: %s", e)
        return EXIT_CONFIG
    except (NumericError, SingularityError) as e:
        diagnostics = getattr(e, "diagnostics", {})
        logger.error("numeric failure: %s %s", e, diagnostics or "")
        return EXIT_NUMERIC
    logger.info("%s finished with status %d", args.command, status)
    return status


if __name__ == "__main__":
    sys.exit(main())
