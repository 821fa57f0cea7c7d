import os
import tempfile
import unittest

from qeinstein.util import config
from qeinstein.util.exception import MissingConfigValueException


class ConfigTest(unittest.TestCase):
    """Unittest the qeinstein.util.config module."""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

        with open(os.path.join(self.directory.name, 'qeinstein.ini'),
                  'w') as file:
            file.write('[project]\nseed = 7\noutput_format = json\n'
                       'certify = true\n\n[tolerance]\nsolution = 1e-9\n')

    def tearDown(self):
        self.directory.cleanup()
        config.load(directory=tempfile.gettempdir(),
                    filename='missing-qeinstein.ini')

    def test_defaults(self):
        """Test qeinstein.util.config.load without a file."""

        config.load(filename='missing.ini', directory=self.directory.name)

        self.assertEqual(config.get('seed'), 0)
        self.assertEqual(config.get('output_format'), 'markdown')
        self.assertEqual(config.tolerance('structural'), 1e-12)

    def test_file_overrides(self):
        """Test values from the file are merged over the defaults."""

        config.load(directory=self.directory.name)

        self.assertEqual(config.get('seed'), 7)
        self.assertEqual(config.get('output_format'), 'json')
        self.assertIs(config.get('certify'), True)
        self.assertEqual(config.tolerance('solution'), 1e-9)
        self.assertEqual(config.tolerance('cluster'), 1e-6)

    def test_without_defaults(self):
        """Test qeinstein.util.config.load without default values."""

        config.load(directory=self.directory.name,
                    include_default_config=False)

        self.assertIsNone(config.get('oracle_starts'))

        with self.assertRaises(MissingConfigValueException):
            config.tolerance('structural')

    def test_get_default(self):
        """Test qeinstein.util.config.get falls back to `default`."""

        config.load(directory=self.directory.name)

        self.assertEqual(config.get('unknown', default=3), 3)

    def test_get_type(self):
        """Test qeinstein.util.config.get, passing a non string key."""

        with self.assertRaises(TypeError):
            config.get(1)

    def test_load_type(self):
        """Test qeinstein.util.config.load, passing bad types."""

        with self.assertRaises(TypeError):
            config.load(filename=1)

        with self.assertRaises(TypeError):
            config.load(include_default_config='yes')

    def test_get_section(self):
        """Test qeinstein.util.config.get_section."""

        config.load(directory=self.directory.name)

        self.assertEqual(config.get_section('tolerance')['solution'], 1e-9)

        with self.assertRaises(MissingConfigValueException):
            config.get_section('server')

    def test_nested_get(self):
        """Test qeinstein.util.config.nested_get."""

        config.load(directory=self.directory.name)

        self.assertEqual(config.nested_get('project', 'seed'), 7)
        self.assertEqual(config.nested_get('project', 'seed', 'x',
                                           default=1), 1)
        self.assertIsNone(config.nested_get('missing'))

    def test_set_value(self):
        """Test qeinstein.util.config.set_value."""

        config.load(directory=self.directory.name)
        config.set_value('solution', 1e-8, section='tolerance')

        self.assertEqual(config.tolerance('solution'), 1e-8)

    def test_clear(self):
        """Test qeinstein.util.config.clear."""

        config.load(directory=self.directory.name)
        config.clear()

        self.assertFalse(config.is_loaded())
