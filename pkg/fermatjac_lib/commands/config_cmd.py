from fermatjac_lib.core.my_config import defaults
from .base import BaseCommand, Command, Category

def make_command():
    return Command(ConfigCommand)

def _convert(key, value):
    default = defaults.get(key)
    if isinstance(default, bool):
        return value.lower() in ('1', 'true', 'yes')
    if isinstance(default, int):
        return int(value)
    if isinstance(default, float):
        return float(value)
    return value

class ConfigCommand(BaseCommand):
    name = 'config'
    description = 'Read or change persistent options.'
    category = Category.General

    def add_arguments(self, parser):
        parser.add_argument('action', choices=('get', 'set', 'list'))
        parser.add_argument('key', nargs='?', default=None)
        parser.add_argument('value', nargs='?', default=None)

    def run(self, args):
        if args.action == 'list':
            document = dict((key, self.option(key)) for key in sorted(defaults))
            return self.output(document)
        if args.key not in defaults:
            raise ValueError('Unknown option %r' % args.key)
        if args.action == 'set':
            if args.value is None:
                raise ValueError('config set needs a value')
            self.config.set_option(args.key, _convert(args.key, args.value))
            self.info('Set %s to %r' % (args.key, self.option(args.key)))
        return self.output({'key': args.key, 'value': self.option(args.key)})
