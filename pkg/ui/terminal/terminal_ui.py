"""
Terminal UI Module

This module renders human-readable tables, progress and errors on stderr.
Machine output never goes through this module.
"""

import sys
from contextlib import contextmanager
from typing import Callable, Iterator, List, Optional, Sequence

from rich.console import Console
from rich.markup import escape
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table


class TerminalUI:
    """Provides the stderr-side presentation for the command-line tool."""

    def __init__(self, config_manager, console: Optional[Console] = None):
        """Initialize terminal UI with configuration manager."""
        self.config_manager = config_manager
        self.use_rich = config_manager.get_bool("ui", "use_rich_ui", True)
        self.console = console or Console(stderr=True)

        self.primary_color = self.config_manager.get("ui", "primary_color", "cyan")
        self.secondary_color = self.config_manager.get("ui", "secondary_color", "green")
        self.error_color = self.config_manager.get("ui", "error_color", "red")
        self.success_color = self.config_manager.get("ui", "success_color", "magenta")

    def _plain(self, text: str) -> None:
        print(text, file=sys.stderr)

    def display_error(self, message: str):
        """Display an error message."""
        if self.use_rich:
            self.console.print(f"[bold {self.error_color}]Error:[/bold {self.error_color}] {escape(message)}", markup=True, highlight=False)
        else:
            self._plain(f"Error: {message}")

    def display_success(self, message: str):
        """Display a success message."""
        if self.use_rich:
            self.console.print(f"[bold {self.success_color}]{escape(message)}[/bold {self.success_color}]", highlight=False)
        else:
            self._plain(message)

    def display_message(self, message: str):
        if self.use_rich:
            self.console.print(message, highlight=False, markup=False)
        else:
            self._plain(message)

    def _table(self, title: str, columns: Sequence[str], rows: List[Sequence[str]]) -> None:
        if not self.use_rich:
            self._plain(title)
            for row in rows:
                self._plain("  ".join(row))
            return
        table = Table(title=title, title_style=f"bold {self.primary_color}", header_style=f"bold {self.secondary_color}")
        for column in columns:
            table.add_column(column)
        for row in rows:
            table.add_row(*row)
        self.console.print(table)

    def _outcome(self, outcome: str, good: bool) -> str:
        if not self.use_rich:
            return outcome
        color = self.success_color if good else self.error_color
        return f"[{color}]{outcome}[/{color}]"

    def display_claim_reports(self, reports, timings: bool = True):
        """Table of claim reports: id, corpus, frameworks checked, outcome."""
        columns = ["claim", "corpus", "AFs", "outcome"] + (["seconds"] if timings else [])
        rows = []
        for report in reports:
            row = [report.claim_id, report.corpus, str(report.afs_checked),
                   self._outcome(report.outcome, report.confirmed)]
            if timings:
                row.append(f"{report.wall_time:.2f}")
            rows.append(row)
        self._table("Claim verification", columns, rows)

    def display_search_reports(self, reports, expected=None):
        """Table of principle searches over corpora."""
        expected = expected or {}
        rows = []
        for report in reports:
            witness = ""
            if report.counterexample is not None and report.counterexample.witness is not None:
                found = report.counterexample
                witness = f"{found.af} {found.witness.describe(found.af)}"
            mark = "expected to hold" if report.principle in expected else ""
            rows.append([report.principle.value, report.corpus, str(report.afs_checked),
                         self._outcome(report.outcome, report.counterexample is None), witness, mark])
        self._table("Principle search", ["principle", "corpus", "AFs", "outcome", "witness", "note"], rows)

    @contextmanager
    def progress(self, description: str, total: Optional[int] = None) -> Iterator[Callable[[int], None]]:
        """Spinner and bar on stderr; yields a callback taking the running count."""
        if not self.use_rich or not self.console.is_terminal:
            yield lambda completed: None
            return
        with Progress(
            SpinnerColumn(),
            TextColumn(f"[bold {self.primary_color}]{{task.description}}"),
            BarColumn(),
            TextColumn("{task.completed}/{task.total}"),
            console=self.console,
            transient=True,
        ) as progress:
            task = progress.add_task(description, total=total)
            yield lambda completed: progress.update(task, completed=completed)
