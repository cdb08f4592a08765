"""Command line entry point: ``hilbk3 <stage> [options]``."""

import argparse
import sys

from .report import STAGES, Config, run


def build_parser():
    parser = argparse.ArgumentParser(prog="hilbk3", description="Re-derive and check the computations stage by stage.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "markdown"), default="markdown")
    common.add_argument("--scan-bound", type=int, default=10, metavar="N", help="bound on |n| in the integral point scan (1..12)")
    common.add_argument("--padic-extra-precision", type=int, default=2, metavar="K", help="extra p-adic digits beyond v_p(disc)")
    common.add_argument("--seed", type=int, default=0, metavar="S", help="seed for the sampled property checks")
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    sub = parser.add_subparsers(dest="stage", required=True, metavar="stage")
    for name in STAGES + ("all",):
        sub.add_parser(name, parents=[common], help="run the %s stage" % name if name != "all" else "run every stage")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    config = Config(args.scan_bound, args.padic_extra_precision, args.seed)
    try:
        config.validate()
    except ValueError as exc:
        parser.error(str(exc))
    stages = None if args.stage == "all" else [args.stage]
    report = run(stages, config)
    text = report.to_json() if args.format == "json" else report.to_markdown()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
