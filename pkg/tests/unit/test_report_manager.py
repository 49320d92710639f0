import os
import tempfile
import unittest

from utils.report_manager import ReportManager


class TestReportManager(unittest.TestCase):
    """Test cases for saving JSON reports."""

    def setUp(self):
        """Set up a temporary report folder."""
        self.temp_dir = tempfile.TemporaryDirectory()
        self.report_manager = ReportManager(os.path.join(self.temp_dir.name, "reports"))

    def tearDown(self):
        """Clean up test environment."""
        self.temp_dir.cleanup()

    def test_save_report(self):
        """Reports land in a per-kind folder with a newline at the end."""
        path = self.report_manager.save_report('{"confirmed": 1}', "verify")
        self.assertTrue(os.path.exists(path))
        self.assertEqual(os.path.basename(os.path.dirname(path)), "verify")
        with open(path, encoding="utf-8") as f:
            self.assertEqual(f.read(), '{"confirmed": 1}\n')

    def test_save_twice_keeps_both(self):
        """Two saves in the same instant land in two files."""
        first = self.report_manager.save_report("{}", "principles")
        second = self.report_manager.save_report("{}", "principles")
        self.assertNotEqual(first, second)
        self.assertEqual(sorted(os.listdir(os.path.dirname(first))), sorted(os.path.basename(p) for p in (first, second)))


if __name__ == '__main__':
    unittest.main()
