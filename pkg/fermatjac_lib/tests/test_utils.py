import logging
import unittest

from fermatjac_lib.core import utils

class ParseTest(unittest.TestCase):
    def test_parse_delta(self):
        delta_tests = (
            ('12', 12),
            ('-3', -3),
            ('+7', 7),
            ('2^3*5', 40),
            ('2**3', 8),
            ('2^3 * 3^2', 72),
            (' 5 ', 5),
        )
        for text, expected in delta_tests:
            self.assertEqual(expected, utils.parse_delta(text))

    def test_parse_delta_errors(self):
        for text in ('', 'abc', '0', '2^', '3*', '2^-1'):
            self.assertRaises(ValueError, utils.parse_delta, text)

    def test_error_column(self):
        with self.assertRaises(ValueError) as cm:
            utils.parse_delta('2*x')
        self.assertIn('column', str(cm.exception))

    def test_parse_triples(self):
        self.assertEqual([(1, 1, 3), (2, 2, 1)], utils.parse_triples('1:1:3,2:2:1'))
        self.assertEqual([(1, 1, 1)], utils.parse_triples('1:1:1'))
        for text in ('1:1', '1:1:3,', 'a:b:c'):
            self.assertRaises(ValueError, utils.parse_triples, text)

class RenderTest(unittest.TestCase):
    rows = [{'delta': 2, 'eps': 1}, {'delta': 3, 'eps': -1}]

    def test_render_csv(self):
        self.assertEqual('delta,eps\n2,1\n3,-1\n', utils.render_csv(self.rows))
        self.assertEqual('eps\n1\n-1\n', utils.render_csv(self.rows, ['eps']))
        self.assertEqual('', utils.render_csv([]))

    def test_render_table(self):
        lines = utils.render_table(self.rows).split('\n')
        self.assertEqual(4, len(lines))
        self.assertEqual(['delta', 'eps'], lines[0].split())
        self.assertEqual(['3', '-1'], lines[3].split())

    def test_render_json(self):
        self.assertEqual('{\n  "a": 1,\n  "b": [\n    2\n  ]\n}', utils.render_json({'b': [2], 'a': 1}))

class LogTest(unittest.TestCase):
    def test_log_message(self):
        with self.assertLogs(level='INFO') as cm:
            utils.log_message('selmer', 'dimension 2')
        self.assertEqual(['INFO:root:[selmer] -> dimension 2'], cm.output)
        with self.assertLogs(level='DEBUG') as cm:
            utils.log_message('parity', 'x', logging.DEBUG)
        self.assertEqual(['DEBUG:root:[parity] -> x'], cm.output)
