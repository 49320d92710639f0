"""
Report Management Module

This module saves JSON reports into timestamped files grouped by kind.
"""

import os
import datetime


class ReportManager:
    """Manages saving and organization of verification reports."""

    def __init__(self, report_folder: str = "reports"):
        """Initialize report manager with specified report folder."""
        self.report_folder = report_folder

    def save_report(self, text: str, kind: str = "verify") -> str:
        """Save a report to ``<folder>/<kind>/<kind>_<timestamp>.json`` and return the path."""
        timestamp = datetime.datetime.now().strftime("%Y%m%d_%H%M%S_%f")
        kind_folder = os.path.join(self.report_folder, kind)
        os.makedirs(kind_folder, exist_ok=True)

        filename = os.path.join(kind_folder, f"{kind}_{timestamp}.json")
        suffix = 1
        while os.path.exists(filename):
            filename = os.path.join(kind_folder, f"{kind}_{timestamp}_{suffix}.json")
            suffix += 1
        with open(filename, "w", encoding="utf-8") as f:
            f.write(text)
            if not text.endswith("\n"):
                f.write("\n")
        return filename

