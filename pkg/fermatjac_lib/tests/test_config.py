import json
import os
import shutil
import tempfile
import unittest
from unittest import mock

from fermatjac_lib import config
from fermatjac_lib.core import my_config

class ConfigTest(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.filename = os.path.join(self.directory, 'fermatjac.conf')

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_defaults(self):
        conf = my_config.Config()
        conf.load(self.filename)
        self.assertEqual(4, conf.get_option('padic_prec'))
        self.assertEqual('INFO', conf.get_option('log_level'))
        self.assertEqual('x', conf.get_option('missing', 'x'))

    def test_save_and_load(self):
        conf = my_config.Config()
        conf.load(self.filename)
        conf.set_option('padic_prec', 6)
        with open(self.filename) as f:
            self.assertEqual(6, json.load(f)['padic_prec'])
        conf = my_config.Config()
        conf.load(self.filename)
        self.assertEqual(6, conf.get_option('padic_prec'))

    def test_corrupt_file(self):
        with open(self.filename, 'w') as f:
            f.write('not json')
        conf = my_config.Config()
        conf.load(self.filename)
        self.assertEqual(4, conf.get_option('padic_prec'))

    def test_get_option_copies(self):
        conf = my_config.Config()
        conf.load(self.filename)
        conf.set_option('primes', [5, 7], do_save=False)
        conf.get_option('primes').append(11)
        self.assertEqual([5, 7], conf.get_option('primes'))

    def test_environment_path(self):
        with mock.patch.dict(os.environ, {'FERMATJAC_CONFIG': self.filename}):
            self.assertEqual(self.filename, my_config.config_file_path())

class WrapperTest(unittest.TestCase):
    def test_singleton(self):
        conf = config.Config(load=False)
        self.assertIs(conf, config.get_config())

    def test_override(self):
        conf = config.Config(load=False)
        conf.override('padic_prec', 5)
        conf.override('seed', None)
        self.assertEqual(5, conf.get_option('padic_prec'))
        self.assertEqual(0, conf.get_option('seed'))

    def test_listeners(self):
        conf = config.Config(load=False)
        changed = []
        conf.connect(changed.append)
        conf.set_option('workers', 2, do_save=False)
        conf.override('seed', 3)
        self.assertEqual(['workers', 'seed'], changed)
        self.assertEqual(2, conf.get_option('workers'))
