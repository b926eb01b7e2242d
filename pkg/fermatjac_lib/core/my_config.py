import os
import json
from copy import deepcopy

# Option defaults. Values in the config file take precedence.
defaults = {
    'padic_prec': 4,
    'chi_table_limit': 2 ** 20,
    'log_level': 'INFO',
    'workers': 0,
    'density_tolerance': 0.02,
    'seed': 0,
}

def config_file_path():
    """Return the filesystem path for the FermatJac config file."""
    if os.environ.get('FERMATJAC_CONFIG'):
        return os.environ['FERMATJAC_CONFIG']
    path = os.getcwd()
    if 'HOME' in os.environ:
        path = os.path.join(os.environ['HOME'], '.config', 'FermatJac')
    elif 'APPDATA' in os.environ:
        path = os.path.join(os.environ['APPDATA'], 'FermatJac')
    elif 'LOCALAPPDATA' in os.environ:
        path = os.path.join(os.environ['LOCALAPPDATA'], 'FermatJac')

    if not os.path.exists(path):
        os.makedirs(path)
    return os.path.join(path, 'fermatjac.conf')

class Config(object):
    """Configuration state."""
    def __init__(self):
        super(Config, self).__init__()
        self.options = {}

    def load(self, filename=None):
        if not filename:
            filename = config_file_path()
        if not os.path.exists(filename):
            self.options = {'filename': filename}
            return
        try:
            with open(filename, 'r') as f:
                self.options = json.loads(f.read())
        except (IOError, ValueError):
            self.options = {}
        if not isinstance(self.options, dict):
            self.options = {}
        self.options['filename'] = filename

    def save(self):
        filename = self.options.get('filename')
        if not filename:
            filename = os.path.abspath('fermatjac.conf')
        with open(filename, 'w') as f:
            conf = json.dumps(self.options, indent=4, sort_keys=True)
            f.write(conf)

    def get_option(self, key, default=None):
        if default is None:
            default = defaults.get(key)
        value = self.options.get(key, default)
        # Return a copy
        return deepcopy(value)

    def set_option(self, key, value, do_save=True):
        self.options[key] = value
        if do_save:
            self.save()
