import json
import os
import tempfile
import unittest

from DioTorsion import config
from DioTorsion.DBInterface import SQLInterface


class MyTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.tmp = tempfile.TemporaryDirectory()
        self.config_loc = os.path.join(self.tmp.name, 'config.json')
        with open(self.config_loc, 'w', encoding='utf-8') as f:
            json.dump({
                'arithmetic': {'rho_iterations': 5000},
                'db_interface': {'driver': 'sqlite', 'database': os.path.join(self.tmp.name, 'records.db')},
            }, f)

    def tearDown(self) -> None:
        if config.__db_interface__ is not None:
            config.__db_interface__.engine.dispose()
        config.__config__ = None
        config.__db_interface__ = None
        config.reset_options()
        self.tmp.cleanup()

    def test_defaults(self):
        with self.assertRaises(ValueError):
            config.get_global_config()
        self.assertEqual(config.get_option('torsion', 'max_order'), 18)
        self.assertEqual(config.get_option('arithmetic', 'rho_iterations'), 10 ** 7)

    def test_file_and_overrides(self):
        config.set_global_config(self.config_loc)
        self.assertEqual(config.get_option('arithmetic', 'rho_iterations'), 5000)
        self.assertEqual(config.get_option('arithmetic', 'trial_division_bound'), 10 ** 6)
        config.set_option('arithmetic', 'rho_iterations', 7)
        self.assertEqual(config.get_option('arithmetic', 'rho_iterations'), 7)
        config.reset_options()
        self.assertEqual(config.get_option('arithmetic', 'rho_iterations'), 5000)
        with self.assertRaises(AssertionError):
            config.set_option('no_such_section', 'x', 1)

    def test_db_interface(self):
        config.set_global_config(self.config_loc)
        db = config.get_db_interface()
        self.assertIsInstance(db, SQLInterface)
        self.assertIs(config.get_db_interface(), db)
        self.assertTrue(db.exist_table('family_records'))

    def test_prepare_engine(self):
        engine = config.prepare_engine({'driver': 'sqlite', 'database': ':memory:'})
        self.assertEqual(engine.name, 'sqlite')
        db = config.generate_db_interface_from_config({'db_interface': {'driver': 'sqlite', 'database': ':memory:'}})
        self.assertEqual(sorted(db.get_table_names()), ['corpus_reports', 'family_records'])


if __name__ == '__main__':
    unittest.main()
