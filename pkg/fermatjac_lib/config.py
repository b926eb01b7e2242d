from fermatjac_lib.core import my_config


# Singleton instance
fermatjac_config = None

def set_config(c):
    global fermatjac_config
    fermatjac_config = c

def get_config():
    """Return the active Config, creating an unsaved default one if needed."""
    if fermatjac_config is None:
        Config(load=False)
    return fermatjac_config

class Config(object):
    """Wrapper for core.Config.

    Callers that depend on an option can register a listener with
    connect(); it receives the option key whenever set_option() runs.
    Options set with override() apply to this process only.
    """
    def __init__(self, filename=None, load=True):
        super(Config, self).__init__()
        self.conf = my_config.Config()
        if load:
            self.conf.load(filename)
        self.overrides = {}
        self.listeners = []
        set_config(self)

    def connect(self, callback):
        self.listeners.append(callback)

    def get_option(self, key, default=None):
        if key in self.overrides:
            return self.overrides[key]
        return self.conf.get_option(key, default)

    def set_option(self, key, value, do_save=True):
        self.conf.set_option(key, value, do_save)
        self.option_changed(key)

    def override(self, key, value):
        if value is None:
            return
        self.overrides[key] = value
        self.option_changed(key)

    def option_changed(self, key):
        for callback in self.listeners:
            callback(key)
