"""
Command-line driver.

    lcderham --vars 2 --ideal "x0,x1"
    lcderham --vars 2 --ideal "x0*x1" --oracle 4 --format json
    lcderham --vars 3 --corpus
    lcderham --vars 2 --localization 0,1

Exit status: 0 when every verdict is PASS or HYPOTHESIS_NOT_MET, 1 on any
FAIL, 2 on bad input.  Worker count comes from LCDR_WORKERS (default 1).
"""

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from lcderham import oracle as box_oracle
from lcderham import report
from lcderham.corpus import enumerate_ideals
from lcderham.errors import LcdrError, ParseError
from lcderham.monomial import parse_ideal

WORKERS_ENV = "LCDR_WORKERS"


@dataclass(frozen=True)
class RunConfig:
    vars: int
    ideal: str = None
    ideal_file: str = None
    corpus: bool = False
    sample: int = None
    seed: int = 0
    modules: object = "all"
    localization: tuple = None
    prime: int = None
    oracle: int = None
    oracle_cap: int = box_oracle.DEFAULT_SIZE_CAP
    format: str = "table"
    output: str = None
    strict: bool = False

    @property
    def n(self):
        return self.vars - 1

    def validate(self):
        sources = [self.ideal is not None, self.ideal_file is not None, self.corpus,
                   self.localization is not None]
        if sum(sources) != 1:
            raise ParseError("give exactly one of --ideal, --ideal-file, --corpus, --localization")
        if self.vars < 1:
            raise ParseError("--vars must be at least 1")
        if self.oracle is not None and self.oracle < 2:
            raise ParseError("--oracle radius must be at least 2")
        if self.localization is not None and any(not 0 <= i <= self.n for i in self.localization):
            raise ParseError("localization variables must lie in 0..%d" % self.n)


def load_ideals(config):
    n = config.n
    if config.corpus:
        return enumerate_ideals(config.vars, config.sample, config.seed)
    if config.ideal is not None:
        return [parse_ideal(config.ideal, n, config.strict)]
    with open(config.ideal_file) as f:
        lines = [line.strip() for line in f]
    return [parse_ideal(line, n, config.strict) for line in lines if line and not line.startswith("#")]


def _process(I, config):
    return report.ideal_block(I, config.modules, config.oracle, config.prime, config.oracle_cap)


def _workers():
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def run(config):
    """Build the report for ``config``; returns (Report, exit code)."""
    config.validate()
    if config.localization is not None:
        blocks = [report.localization_block(frozenset(config.localization), config.n,
                                            config.oracle, config.prime, config.oracle_cap)]
    else:
        ideals = load_ideals(config)
        if config.modules != "all" and len(ideals) == 1 and config.modules > ideals[0].s:
            raise ParseError("module H^%d requested but I has %d generators"
                             % (config.modules, ideals[0].s))
        if config.oracle is not None:
            box_oracle.check_box_size(config.n, config.oracle, config.oracle_cap)
        work = partial(_process, config=config)
        workers = _workers()
        if workers > 1 and len(ideals) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                blocks = list(pool.map(work, ideals))
        else:
            blocks = [work(I) for I in ideals]
    header = dict(report.HEADER)
    header["field"] = "Q"
    if config.prime:
        header["cross_check_field"] = "F_%d" % config.prime
    rep = report.Report(header, blocks, report.summarize(blocks))
    return rep, 0 if rep.ok else 1


def render(rep, fmt):
    if fmt == "json":
        return report.to_json(rep)
    if fmt == "csv":
        return report.to_csv(rep)
    return report.to_table(rep)


def _parse_field(text):
    if text.lower() in ("q", "rational", "rationals"):
        return None
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("field must be 'q' or a prime")
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise argparse.ArgumentTypeError("%d is not prime" % p)
    return p


def _parse_module(text):
    return "all" if text == "all" else int(text)


def build_parser():
    ap = argparse.ArgumentParser(prog="lcderham", description=__doc__.strip().splitlines()[0])
    ap.add_argument("--vars", type=int, required=True, help="number of variables v = n+1")
    ap.add_argument("--ideal", help="comma separated monomials, e.g. 'x0*x1,x2'")
    ap.add_argument("--ideal-file", help="file with one ideal per line")
    ap.add_argument("--corpus", action="store_true",
                    help="all squarefree ideals (v <= 4) or a seeded sample (v >= 5)")
    ap.add_argument("--sample", type=int, help="sample size for --corpus")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--module", type=_parse_module, default="all",
                    help="cohomological degree j of H^j_I(R), or 'all'")
    ap.add_argument("--localization", help="variables T of R_{X_T}, e.g. '0,1'")
    ap.add_argument("--field", type=_parse_field, default=None,
                    help="'q' (default) or a prime p for an F_p cross-check")
    ap.add_argument("--oracle", type=int, default=None, metavar="B",
                    help="cross-check against a brute-force box of radius B")
    ap.add_argument("--oracle-cap", type=int, default=box_oracle.DEFAULT_SIZE_CAP)
    ap.add_argument("--format", choices=("table", "json", "csv"), default="table")
    ap.add_argument("--output", help="write the report here instead of stdout")
    ap.add_argument("--strict", action="store_true", help="reject non-squarefree generators")
    return ap


def config_from_args(args):
    loc = None
    if args.localization is not None:
        text = args.localization.replace(" ", "")
        loc = tuple(sorted({int(x) for x in text.split(",") if x})) if text else ()
    return RunConfig(vars=args.vars, ideal=args.ideal, ideal_file=args.ideal_file,
                     corpus=args.corpus, sample=args.sample, seed=args.seed, modules=args.module,
                     localization=loc, prime=args.field, oracle=args.oracle,
                     oracle_cap=args.oracle_cap, format=args.format, output=args.output,
                     strict=args.strict)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        rep, code = run(config)
    except (LcdrError, OSError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    text = render(rep, config.format)
    if config.output:
        with open(config.output, "w") as f:
            f.write(text)
        print(rep.verified_line())
    elif config.format == "table":
        sys.stdout.write(text)
        print(rep.verified_line())
    else:
        sys.stdout.write(text)
        print(rep.verified_line(), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
