# MIT License
#
# Copyright 2018-2019 IBM
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

from kparallel import certificate
from kparallel import constants
from kparallel import constructions
from kparallel import env
from kparallel import gf
from kparallel import linalg
from kparallel import messages
from kparallel import rankmetric
from kparallel import report as rendering
from kparallel import search
from kparallel import std_recursive

import sys
import argparse
import logging
from pathlib import Path

logger = logging.getLogger(constants.LOGGER_NAME)


def _add_qnk(parser, n: bool = True, required: bool = True, defaults: tuple = (None, None, None)):
    parser.add_argument("--q", type=int, required=required, default=defaults[0], help="Order of the base field, a prime power.")
    if n:
        parser.add_argument("--n", type=int, required=required, default=defaults[1], help="Dimension of the ambient space F_q^n.")
    parser.add_argument("--k", type=int, required=required, default=defaults[2], help="Dimension of the spread members.")


def _verdict(outcome) -> int:
    print(rendering.verification(outcome))
    if outcome.passed:
        return constants.EXIT_OK
    print(messages.VERIFICATION_FAILED.format(constants.DEBUG_FILE_NAME, constants.ERROR_FILE_NAME))
    return constants.EXIT_FAIL


def construct(args) -> int:
    n, k = linalg.from_projective(args.n, args.k) if args.pg else (args.n, args.k)
    family = std_recursive.build_family(args.q, n, k)
    path = Path(args.out) if args.out else env.get_certificate_path(certificate.SPREAD_FAMILY, args.q, n, k)
    certificate.emit_certificate(family, path)
    print(rendering.family_summary(family, path))
    return _verdict(family.verify())


def verify(args) -> int:
    return _verdict(certificate.check_certificate(Path(args.file)))


def count_types(args) -> int:
    found = constructions.count_types(args.q, args.k)
    expected = constructions.expected_type_counts(args.q, args.k)
    print(rendering.census(args.q, args.k, found, expected))
    return constants.EXIT_OK if found == expected else constants.EXIT_FAIL


def enumerate_subspaces(args) -> int:
    field = gf.field_of_order(args.q)
    members = list(env.progress_bar(linalg.enumerate_grassmannian(args.n, args.k, field), desc="Enumerating", unit=" subspace",
                                    total=linalg.gaussian_binomial(args.n, args.k, args.q)))
    print(rendering.enumeration(args.q, args.n, args.k, members if args.list else [], len(members)))
    return constants.EXIT_OK


def std(args) -> int:
    design = std_recursive.build_std(args.q, args.k, args.m, args.t)
    path = Path(args.out) if args.out else env.get_certificate_path(certificate.STD, args.q, design.n, args.k)
    certificate.emit_certificate(design, path)
    print(rendering.design_summary(design, path))
    return _verdict(design.verify())


def search_families(args) -> int:
    result = search.exhaustive_max_family(args.q, args.n, args.k, budget=args.budget, workers=args.workers)
    print(rendering.search_summary(args.q, args.n, args.k, result, std_recursive.family_size(args.q, args.n, args.k)))
    if _verdict(result.report) != constants.EXIT_OK:
        return constants.EXIT_FAIL
    if not result.exact:
        print(messages.BUDGET_EXHAUSTED)
        return constants.EXIT_BUDGET
    return constants.EXIT_OK


def info(args) -> int:
    gf.field_of_order(args.q)
    if not 1 <= args.k <= args.n:
        raise linalg.AmbientMismatchError("need 1 <= k <= n, got n={} k={}".format(args.n, args.k))
    types = constructions.expected_type_counts(args.q, args.k) if args.n == 2 * args.k else None
    print(rendering.info(args.q, args.n, args.k, std_recursive.family_size(args.q, args.n, args.k), types))
    return constants.EXIT_OK


def main(argv):
    parser = argparse.ArgumentParser(
        prog="kparallel",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        description=messages.DESCRIPTION.format(env.build_info),
        epilog=messages.EPILOG.format(constants.ERROR_FILE_NAME))

    env.add_work_root_args(parser)
    env.add_logger_args(parser)

    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    construct_parser = commands.add_parser("construct", formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                                           help="Build the largest known family of disjoint spreads and write its certificate.")
    _add_qnk(construct_parser)
    construct_parser.add_argument("--pg", action="store_true", help="Read N and K as projective dimensions, so the family lives in PG(N,q).")
    construct_parser.add_argument("--out", help="Certificate file. Defaults to a file in the working directory.")
    construct_parser.set_defaults(handler=construct)

    verify_parser = commands.add_parser("verify", help="Re-verify a certificate from the file alone.")
    verify_parser.add_argument("file", help="Certificate written by construct or std.")
    verify_parser.set_defaults(handler=verify)

    types_parser = commands.add_parser("count-types", help="Classify every subspace of G_q(2k,k) by its meet with U.")
    _add_qnk(types_parser, n=False)
    types_parser.set_defaults(handler=count_types)

    enumerate_parser = commands.add_parser("enumerate", help="Enumerate G_q(n,k) in canonical order.")
    _add_qnk(enumerate_parser)
    enumerate_parser.add_argument("--list", action="store_true", help="Print every subspace as its RREF rows.")
    enumerate_parser.set_defaults(handler=enumerate_subspaces)

    std_parser = commands.add_parser("std", formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                                     help="Build and verify a resolvable subspace transversal design.")
    std_parser.add_argument("--q", type=int, required=True, help="Order of the base field, a prime power.")
    std_parser.add_argument("--k", type=int, required=True, help="Block dimension.")
    std_parser.add_argument("--m", type=int, required=True, help="Groups have q^m points; the ambient space is F_q^(k+m).")
    std_parser.add_argument("--t", type=int, required=True, help="Strength of the design.")
    std_parser.add_argument("--out", help="Certificate file. Defaults to a file in the working directory.")
    std_parser.set_defaults(handler=std)

    search_parser = commands.add_parser("search", formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                                        help="Exact maximum number of disjoint spreads on tiny instances.")
    _add_qnk(search_parser)
    search_parser.add_argument("--budget", type=int, default=constants.DEFAULT_SEARCH_BUDGET, help="Search nodes before settling for a lower bound.")
    search_parser.add_argument("--workers", type=int, default=1, help="Processes for the top-level branches.")
    search_parser.set_defaults(handler=search_families)

    info_parser = commands.add_parser("info", formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                                      help="Print formulas and parameter admissibility.")
    _add_qnk(info_parser, required=False, defaults=(2, 4, 2))
    info_parser.set_defaults(handler=info)

    args = parser.parse_args(argv[1:])

    env.config_work_root(args)
    env.config_logger(args)

    logger.info("kparallel - running build %s, command %s", env.build_info, args.command)

    try:
        code = args.handler(args)
    except (gf.FieldError, linalg.LinalgError, rankmetric.ParameterError, constructions.ConstructionParameterError,
            std_recursive.DesignParameterError, search.SearchBoundError) as err:
        logger.error("Rejected parameters: %s", err)
        print(messages.PARAMETER_ERROR.format(err))
        code = constants.EXIT_USAGE
    except certificate.MalformedCertificateError as err:
        logger.error("Malformed certificate: %s", err)
        print(messages.MALFORMED.format(err))
        code = constants.EXIT_FAIL
    except (constructions.PostCheckError, std_recursive.DesignVerificationError) as err:
        logger.error("Construction failed verification: %s", err)
        print(rendering.verification(err.report))
        print(messages.VERIFICATION_FAILED.format(constants.DEBUG_FILE_NAME, constants.ERROR_FILE_NAME))
        code = constants.EXIT_FAIL
    except rankmetric.CodeVerificationError:
        logger.exception("Code failed verification")
        print(messages.VERIFICATION_FAILED.format(constants.DEBUG_FILE_NAME, constants.ERROR_FILE_NAME))
        code = constants.EXIT_FAIL
    except Exception:
        logger.exception("Unknown error.")
        print(messages.UNEXPECTED.format(constants.DEBUG_FILE_NAME, constants.ERROR_FILE_NAME))
        code = constants.EXIT_FAIL

    logger.info("Finished %s with exit code %s", args.command, code)
    sys.exit(code)


if __name__ == "__main__":
    main(sys.argv)
