from .base import Category, CommandCategory, Command, BaseCommand, Output

from . import bound
from . import config_cmd
from . import count_points
from . import density
from . import jacobi
from . import local_image
from . import orbit
from . import parity_scan
from . import regular
from . import root_number
from . import selmer

fermatjac_entry_points = {
    'fermatjac.command': [
        'bound = fermatjac_lib.commands.bound:make_command',
        'config = fermatjac_lib.commands.config_cmd:make_command',
        'count-points = fermatjac_lib.commands.count_points:make_command',
        'density = fermatjac_lib.commands.density:make_command',
        'jacobi = fermatjac_lib.commands.jacobi:make_command',
        'local-image = fermatjac_lib.commands.local_image:make_command',
        'orbit = fermatjac_lib.commands.orbit:make_command',
        'parity-scan = fermatjac_lib.commands.parity_scan:make_command',
        'regular = fermatjac_lib.commands.regular:make_command',
        'root-number = fermatjac_lib.commands.root_number:make_command',
        'selmer = fermatjac_lib.commands.selmer:make_command',
    ]
}

def _local_makers():
    for i in fermatjac_entry_points['fermatjac.command']:
        command_name = i[:i.find(' = ')]
        module_name, maker_name = i[i.find('commands.') + 9:].split(':')
        yield command_name, getattr(globals()[module_name], maker_name)

def _installed_makers():
    from importlib.metadata import entry_points
    for entry_point in entry_points(group='fermatjac.command'):
        yield entry_point.name, entry_point.load()

def load_commands(use_local_modules=True):
    """Load commands from entry points, or from this package.

    Returns:
        dict of command name to Command.
    """
    makers = list(_installed_makers()) if not use_local_modules else []
    if not makers:
        makers = list(_local_makers())
    commands = {}
    for command_name, maker in makers:
        command = maker()
        command.name = command_name
        commands[command_name] = command
    return commands
