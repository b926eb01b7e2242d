"""Command-line entry point: fermatjac <command> [options]."""
import argparse
import logging
import os
import sys

from fermatjac_lib import config
from fermatjac_lib.commands import load_commands
from fermatjac_lib.core import finite_field
from fermatjac_lib.core.errors import HypothesisError, ConsistencyError
from fermatjac_lib.core.utils import render_json, render_csv, render_table, log_message

EXIT_OK = 0
EXIT_HYPOTHESIS = 1
EXIT_USAGE = 2
EXIT_CONSISTENCY = 3

_handler = None

def init_logger(level_str):
    """Initialize logger."""
    global _handler
    if _handler is None:
        _handler = logging.StreamHandler()
        formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(message)s', '%Y-%m-%d %H:%M:%S')
        _handler.setFormatter(formatter)
        logging.getLogger().addHandler(_handler)
    change_log_level(level_str)

def change_log_level(level_str):
    level_str = str(level_str).upper()
    if level_str not in ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']:
        level_str = 'INFO'
    level = getattr(logging, level_str)
    logging.getLogger().setLevel(level)

def add_global_arguments(parser, suppress=False):
    """Flags accepted before or after the command name."""
    def default(value):
        return argparse.SUPPRESS if suppress else value
    parser.add_argument('--config', dest='config_file', default=default(None), help='Config file path.')
    parser.add_argument('--padic-prec', type=int, default=default(None), metavar='M',
                        help='Coefficient precision of p-adic arithmetic.')
    parser.add_argument('--seed', type=int, default=default(None), help='Seed for randomized checks.')
    parser.add_argument('--workers', type=int, default=default(None), help='Worker processes for scans.')
    parser.add_argument('--format', choices=('json', 'csv', 'text'), default=default('text'))
    parser.add_argument('--json', dest='format', action='store_const', const='json',
                        default=default('text'), help='Same as --format json.')
    parser.add_argument('--log-level', default=default(None))

def build_parser(commands):
    parser = argparse.ArgumentParser(prog='fermatjac',
                                     description='Root numbers and Selmer groups of Fermat-curve Jacobians.')
    add_global_arguments(parser)
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    instances = {}
    for name in sorted(commands):
        instance = commands[name].instantiate()
        subparser = subparsers.add_parser(name, help=instance.description,
                                          description=instance.description)
        add_global_arguments(subparser, suppress=True)
        instance.add_arguments(subparser)
        instances[name] = instance
    return parser, instances

def apply_options(conf, args):
    conf.override('padic_prec', args.padic_prec)
    conf.override('seed', args.seed)
    conf.override('workers', args.workers)
    conf.override('log_level', args.log_level)
    if not conf.get_option('workers'):
        conf.override('workers', os.cpu_count() or 1)
    if conf.get_option('padic_prec') < 3:
        raise ValueError('--padic-prec must be at least 3')
    finite_field.set_chi_table_limit(conf.get_option('chi_table_limit'))

def render(output, fmt):
    if fmt == 'json':
        return render_json(output.document)
    if fmt == 'csv':
        return render_csv(output.rows, output.fieldnames)
    return render_table(output.rows, output.fieldnames)

def run(argv=None, stdout=None):
    """Run one command and return its exit code.

    Exit codes: 0 success, 1 unmet hypothesis, 2 usage error,
    3 failed consistency check.
    """
    if stdout is None:
        stdout = sys.stdout
    # Commands read the active config when they are instantiated.
    conf = config.Config(load=False)
    commands = load_commands()
    parser, instances = build_parser(commands)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code else EXIT_OK

    try:
        conf = config.Config(args.config_file)
        for instance in instances.values():
            instance.config = conf
        apply_options(conf, args)
        init_logger(conf.get_option('log_level'))
        output = instances[args.command].run(args)
    except HypothesisError as e:
        log_message(args.command, 'Hypothesis not met: %s' % e, logging.ERROR)
        return EXIT_HYPOTHESIS
    except ConsistencyError as e:
        log_message(args.command, 'Consistency check failed: %s %s' % (e, e.details or ''), logging.ERROR)
        return EXIT_CONSISTENCY
    except ValueError as e:
        log_message(args.command, str(e), logging.ERROR)
        return EXIT_USAGE

    text = render(output, args.format)
    if text:
        stdout.write(text)
        if not text.endswith('\n'):
            stdout.write('\n')
    return EXIT_OK

def main():
    sys.exit(run(sys.argv[1:]))

if __name__ == '__main__':
    main()
