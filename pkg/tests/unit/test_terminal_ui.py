import io
import logging
import unittest

from rich.console import Console
from rich.logging import RichHandler

from claims.registry import find
from claims.verifier import verify
from config.config_manager import ConfigManager
from enumeration.corpus import FixedCorpus
from principles.checker import PrincipleId, expected_principles, search
from tests.fixtures import F2, F5
from ui.terminal.terminal_ui import TerminalUI
from utils.logging_setup import configure_logging


class TestTerminalUI(unittest.TestCase):
    """Test cases for the stderr presentation layer."""

    def setUp(self):
        """Set up a UI writing into a buffer."""
        self.buffer = io.StringIO()
        console = Console(file=self.buffer, width=160, force_terminal=False, color_system=None)
        self.ui = TerminalUI(ConfigManager(None), console=console)

    def test_error_markup_is_escaped(self):
        self.ui.display_error("bad token [vac]")
        self.assertIn("Error: bad token [vac]", self.buffer.getvalue())

    def test_claim_table(self):
        report = verify(find("ID-STB-IFF"), FixedCorpus.of([F2], "F2"))
        self.ui.display_claim_reports([report], timings=False)
        output = self.buffer.getvalue()
        self.assertIn("ID-STB-IFF", output)
        self.assertIn("refuted", output)

    def test_headers_use_secondary_color(self):
        buffer = io.StringIO()
        console = Console(file=buffer, width=160, force_terminal=True, color_system="standard")
        ui = TerminalUI(ConfigManager(None), console=console)
        ui.display_claim_reports([verify(find("GR-SELF"), FixedCorpus.of([F2], "F2"))], timings=False)
        output = buffer.getvalue()
        self.assertIn("claim", output)
        self.assertIn("\x1b[1;32m", output)

    def test_search_table_marks_expected_principles(self):
        report = search(FixedCorpus.of([F5], "F5"), "ud", PrincipleId.CONFLICT_FREENESS)
        self.ui.display_search_reports([report], expected_principles("ud"))
        self.assertIn("expected to hold", self.buffer.getvalue())

    def test_progress_is_silent_off_terminal(self):
        with self.ui.progress("searching", 10) as advance:
            advance(5)
        self.assertEqual(self.buffer.getvalue(), "")


class TestLoggingSetup(unittest.TestCase):
    """Test cases for the logging configuration."""

    def tearDown(self):
        root = logging.getLogger()
        for handler in list(root.handlers):
            if isinstance(handler, RichHandler):
                root.removeHandler(handler)
        root.setLevel(logging.WARNING)

    def test_single_rich_handler(self):
        """Configuring twice leaves one handler at the latest level."""
        configure_logging("INFO", Console(file=io.StringIO()))
        root = configure_logging("debug", Console(file=io.StringIO()))
        handlers = [h for h in root.handlers if isinstance(h, RichHandler)]
        self.assertEqual(len(handlers), 1)
        self.assertEqual(root.level, logging.DEBUG)

    def test_unknown_level(self):
        with self.assertRaises(ValueError):
            configure_logging("LOUD")


if __name__ == '__main__':
    unittest.main()
