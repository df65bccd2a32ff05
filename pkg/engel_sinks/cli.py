"""Command line front end: sinks, checks, surveys, Zsigmondy primes, catalog."""
import argparse
import logging
import sys
from typing import List, Optional, Tuple

from .config import default_jobs, default_tier
from .engel import left_sink, right_sink
from .errors import (
    EngelSinkError, InvariantViolationError, UnresolvableReferenceError
)
from .groups import (
    Automorphism, FiniteGroup, enumerate_automorphisms, identity_automorphism,
    inner, inversion, power_map
)
from .groups.catalog import build, catalog_names, catalog_record, dump_group, resolve
from .harness import (
    SCHEMA_VERSION, dumps_record, extremal_table, run_checks, survey,
    write_extremal_csv, write_jsonl, write_survey_csv
)
from .numtheory import zsigmondy

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

logger = logging.getLogger('engel-sinks')


def parse_automorphism(
    group: FiniteGroup, reference: str, from_file: Optional[Automorphism]
) -> Automorphism:
    """Read ``id``, ``invert``, ``power:K``, ``inner:CYCLES``, ``aut:K`` or ``file``.

    Raises:
        UnresolvableReferenceError: for an unknown form or a missing file
            automorphism.
    """
    reference = reference.strip()
    kind, _, argument = reference.partition(':')
    if reference == 'id':
        return identity_automorphism(group)
    if reference == 'invert':
        return inversion(group)
    if reference == 'file':
        if from_file is None:
            raise UnresolvableReferenceError(
                'the group reference carries no automorphism'
            )
        return from_file
    if kind == 'inner' and argument:
        return inner(group, argument)
    if kind in ('power', 'aut'):
        try:
            k = int(argument)
        except ValueError:
            raise UnresolvableReferenceError(
                'bad automorphism reference {!r}'.format(reference)
            )
        if kind == 'power':
            return power_map(group, k)
        automorphisms = enumerate_automorphisms(group)
        if not 0 <= k < len(automorphisms):
            raise UnresolvableReferenceError(
                '{} has {} automorphisms, no aut:{}'.format(
                    group.name, len(automorphisms), k
                )
            )
        return automorphisms[k]
    raise UnresolvableReferenceError(
        'bad automorphism reference {!r}'.format(reference)
    )


def _acting(args) -> Tuple[FiniteGroup, object]:
    group, from_file = resolve(args.group)
    if (args.element is None) == (args.aut is None):
        raise UnresolvableReferenceError('give exactly one of --element, --aut')
    if args.element is not None:
        return group, group.to_index(args.element)
    return group, parse_automorphism(group, args.aut, from_file)


def cmd_sink(args) -> int:
    group, h = _acting(args)
    if args.side == 'left':
        if args.seed_scope is not None:
            raise UnresolvableReferenceError('--seed-scope applies to right sinks')
        sink = left_sink(group, h)
    else:
        sink = right_sink(group, h, seed_scope=args.seed_scope or 'extension')
    if args.format == 'json':
        record = dict(sink.to_dict(), schema=SCHEMA_VERSION)
        print(dumps_record(record))
        return EXIT_OK
    print(
        '{} sink of {} in {}: {} element(s), seed scope {}'.format(
            sink.side, sink.owner, group.name or 'G', sink.size, sink.seed_scope
        )
    )
    for member in sink.describe():
        print('  {}'.format(member))
    census = sink.census()
    if census:
        print(
            'nontrivial cycles: {}'.format(
                ', '.join(
                    '{} of length {}'.format(count, length)
                    for length, count in census.items()
                )
            )
        )
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = run_checks(
        args.checks,
        tier=args.tier,
        jobs=args.jobs,
        timings=args.timings,
        progress=args.progress
    )
    if args.out:
        with open(args.out, 'w') as handle:
            write_jsonl(reports, handle, args.timings)
    else:
        write_jsonl(reports, sys.stdout, args.timings)
    failures = [r for r in reports if r.failed]
    logger.info(
        '%d reports, %d failed, %d skipped', len(reports), len(failures),
        sum(r.outcome.value == 'skipped' for r in reports)
    )
    return EXIT_CHECK_FAILED if failures else EXIT_OK


def cmd_survey(args) -> int:
    rows = survey(tier=args.tier, jobs=args.jobs, progress=args.progress)
    if args.csv:
        with open(args.csv, 'w') as handle:
            write_survey_csv(rows, handle)
    else:
        write_survey_csv(rows, sys.stdout)
    if args.extremal:
        with open(args.extremal, 'w') as handle:
            write_extremal_csv(extremal_table(rows), handle)
    logger.info('%d survey rows', len(rows))
    return EXIT_OK


def cmd_zsigmondy(args) -> int:
    print(zsigmondy(args.q, args.e).describe())
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == 'show':
        if not args.name:
            raise UnresolvableReferenceError('catalog show needs a group name')
        print(dump_group(build(args.name)))
        return EXIT_OK
    print('{:<10} {:>6} {:>5}  flags'.format('name', 'order', 'tier'))
    for name in catalog_names(args.tier):
        record = catalog_record(name)
        flags = [flag for flag, value in record['flags'].items() if value]
        print(
            '{:<10} {:>6} {:>5}  {}'.format(
                name, record['order'], record['tier'], ','.join(flags)
            )
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='engel-sinks',
        description='Minimal Engel sinks of finite groups and automorphisms.'
    )
    parser.add_argument('--log-file', type=str, help='Also log to this file.')
    parser.add_argument(
        '--verbose', action='store_true', help='Log at debug level.'
    )
    commands = parser.add_subparsers(dest='command', required=True)

    sink = commands.add_parser('sink', help='Compute one minimal Engel sink.')
    sink.add_argument(
        '--group', required=True, help='catalog:NAME or a group file path.'
    )
    sink.add_argument('--element', help='Acting element in cycle notation.')
    sink.add_argument(
        '--aut',
        help='Acting automorphism: id, invert, power:K, inner:CYCLES, aut:K '
        'or file.'
    )
    sink.add_argument('--side', choices=('left', 'right'), required=True)
    sink.add_argument(
        '--seed-scope',
        '--scope',
        dest='seed_scope',
        choices=('base', 'extension'),
        help='Seeds of a right sink: G or G<phi> (default extension).'
    )
    sink.add_argument('--format', choices=('text', 'json'), default='text')
    sink.set_defaults(handler=cmd_sink)

    verify = commands.add_parser('verify', help='Run verification checks.')
    verify.add_argument(
        '--checks', default='*', help='Comma separated check id globs.'
    )
    verify.add_argument('--tier', type=int, default=default_tier())
    verify.add_argument('--jobs', type=int, default=default_jobs())
    verify.add_argument('--out', help='Report stream path (default stdout).')
    verify.add_argument(
        '--timings', action='store_true', help='Add timings to the records.'
    )
    verify.add_argument('--progress', action='store_true')
    verify.set_defaults(handler=cmd_verify)

    table = commands.add_parser('survey', help='Tabulate sink sizes.')
    table.add_argument('--tier', type=int, default=default_tier())
    table.add_argument('--jobs', type=int, default=default_jobs())
    table.add_argument('--csv', help='Survey CSV path (default stdout).')
    table.add_argument('--extremal', help='Extremal table CSV path.')
    table.add_argument('--progress', action='store_true')
    table.set_defaults(handler=cmd_survey)

    primes = commands.add_parser(
        'zsigmondy', help='Primitive prime divisors of q^e - 1.'
    )
    primes.add_argument('q', type=int)
    primes.add_argument('e', type=int)
    primes.set_defaults(handler=cmd_zsigmondy)

    catalog = commands.add_parser('catalog', help='List or show catalog groups.')
    catalog.add_argument('action', choices=('list', 'show'))
    catalog.add_argument('name', nargs='?')
    catalog.add_argument('--tier', type=int, default=default_tier())
    catalog.set_defaults(handler=cmd_catalog)
    return parser


def configure_logging(log_file: Optional[str], verbose: bool) -> None:
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        handlers=handlers,
        format='%(asctime)s %(name)s %(levelname)s %(message)s'
    )
    level = logging.DEBUG if verbose else logging.INFO
    logging.getLogger('engel_sinks').setLevel(level)
    logger.setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code == 0 else EXIT_USAGE
    try:
        configure_logging(args.log_file, args.verbose)
    except OSError as error:
        print('engel-sinks: {}'.format(error), file=sys.stderr)
        return EXIT_IO
    try:
        return args.handler(args)
    except OSError as error:
        logger.error('%s', error)
        return EXIT_IO
    except InvariantViolationError as error:
        logger.error('%s', error)
        return EXIT_CHECK_FAILED
    except (EngelSinkError, ValueError) as error:
        logger.error('%s', error)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
