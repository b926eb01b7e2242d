from collections import namedtuple
import logging

from fermatjac_lib import config
from fermatjac_lib.core.arith import Triple
from fermatjac_lib.core.utils import log_message

CommandCategory = namedtuple('CommandCategory', ('name', 'description'))
class Category(object):
    """Command category.

    Use one of the below class attributes for a command's category attribute
    e.g. 'category = Category.RootNumbers'.
    """
    General = CommandCategory('General', 'General or uncategorized command.')
    Fields = CommandCategory('Fields', 'Command that works in finite or cyclotomic fields.')
    Local = CommandCategory('Local', 'Command that works in the local field at p.')
    RootNumbers = CommandCategory('Root Numbers', 'Command that computes root numbers.')
    Selmer = CommandCategory('Selmer', 'Command that computes Selmer groups.')
    Experiments = CommandCategory('Experiments', 'Command that scans many values of delta.')

    @classmethod
    def categories(cls):
        category_list = []
        for i in dir(cls):
            attr = getattr(cls, i)
            if attr.__class__.__name__ == 'CommandCategory':
                category_list.append(attr)
        return category_list

Output = namedtuple('Output', ('document', 'rows', 'fieldnames'))
"""Result of running a command.

Attributes:
 - document (dict): Machine-readable result, rendered as JSON.
 - rows (list): Records for text and CSV rendering.
 - fieldnames (list): Column order for rows, or None.
"""

class Command(object):
    """A command.

    A module's make_command() function should return
    an instance of this class.
    """
    def __init__(self, command_class):
        self.command_class = command_class
        # name is set when the entry point is loaded.
        self.name = ''

    def instantiate(self):
        return self.command_class()

class BaseCommand(object):
    """Base class for commands."""
    name = ''
    description = ''
    category = Category.General

    def __init__(self):
        super(BaseCommand, self).__init__()
        self.config = config.get_config()

    def add_arguments(self, parser):
        """Add this command's arguments to its argparse subparser."""
        pass

    def run(self, args):
        """Run the command and return an Output."""
        raise NotImplementedError()

    def option(self, key, default=None):
        return self.config.get_option(key, default)

    def output(self, document, rows=None, fieldnames=None):
        if rows is None:
            rows = [dict((k, v) for k, v in document.items() if not isinstance(v, (dict, list)))]
        return Output(document, rows, fieldnames)

    def debug(self, msg):
        log_message(self.name, msg, logging.DEBUG)

    def info(self, msg):
        log_message(self.name, msg, logging.INFO)

    def warning(self, msg):
        log_message(self.name, msg, logging.WARNING)

    def error(self, msg):
        log_message(self.name, msg, logging.ERROR)

def add_triple_arguments(parser, r_default=None):
    parser.add_argument('--p', type=int, required=True, help='Odd prime p.')
    parser.add_argument('--r', type=int, required=r_default is None, default=r_default)
    parser.add_argument('--s', type=int, default=1)
    parser.add_argument('--t', type=int, default=None, help='Defaults to p - r - s.')

def triple_from_args(args):
    t = args.t if getattr(args, 't', None) is not None else args.p - args.r - args.s
    triple = Triple(args.r, args.s, t)
    if triple.p != args.p:
        raise ValueError('r + s + t must equal p=%d' % args.p)
    return triple
