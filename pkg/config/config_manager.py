"""
Configuration Management Module

This module handles configuration settings for corpora, the worker pool,
report persistence and the terminal output.
"""

import os
import configparser
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


class ConfigManager:
    """Manages configuration settings read from an INI file."""

    DEFAULT_CONFIG = {
        "corpus": {
            "verify_corpora": "exhaustive:3, exhaustive:4",
            "principle_corpora": "exhaustive:1, exhaustive:2, exhaustive:3",
            "random_sizes": "6, 8",
            "random_count": 1000,
            "edge_prob": "1/4",
            "self_loop_prob": "1/8",
            "seed": 0
        },
        "runtime": {
            "workers": 1,
            "chunk_size": 4096,
            "cache_size": 65536
        },
        "app": {
            "report_folder": "reports",
            "save_reports": False,
            "log_level": "WARNING"
        },
        "ui": {
            "use_rich_ui": True,
            "primary_color": "cyan",
            "secondary_color": "green",
            "error_color": "red",
            "success_color": "magenta"
        }
    }

    def __init__(self, config_file: Optional[str] = "config.ini"):
        """Initialize configuration manager.

        With ``config_file=None`` only the built-in defaults are used and
        nothing is written.
        """
        self.config_file = config_file
        self.config = self._load_config()

    def _defaults(self) -> Dict[str, Dict[str, Any]]:
        return {section: dict(options) for section, options in self.DEFAULT_CONFIG.items()}

    def _load_config(self) -> Dict[str, Dict[str, Any]]:
        """Load configuration from file or create default if not exists."""
        if self.config_file is None:
            return self._defaults()
        if os.path.exists(self.config_file):
            config = self._defaults()
            try:
                parser = configparser.ConfigParser()
                parser.read(self.config_file, encoding="utf-8")
            except configparser.Error as e:
                logger.warning("error loading config %s: %s; using defaults", self.config_file, e)
                return config
            for section in parser.sections():
                config.setdefault(section, {}).update(dict(parser[section]))
            return config
        return self._create_default_config()

    def _create_default_config(self) -> Dict[str, Dict[str, Any]]:
        """Create and save default configuration."""
        self.config = self._defaults()
        try:
            self.save()
        except OSError as e:
            logger.warning("could not write default config %s: %s", self.config_file, e)
        return self.config

    def get(self, section: str, key: str, default: Any = None) -> Any:
        """Get configuration value with fallback to default."""
        return self.config.get(section, {}).get(key, default)

    def get_int(self, section: str, key: str, default: int = 0) -> int:
        value = self.get(section, key, default)
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ValueError(f"[{section}] {key} must be an integer, got '{value}'") from None

    def get_bool(self, section: str, key: str, default: bool = False) -> bool:
        value = self.get(section, key, default)
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        if text in _TRUE:
            return True
        if text in _FALSE:
            return False
        raise ValueError(f"[{section}] {key} must be a boolean, got '{value}'")

    def get_fraction(self, section: str, key: str, default: str = "0") -> Fraction:
        value = self.get(section, key, default)
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"[{section}] {key} must be a rational such as 1/4, got '{value}'") from None

    def get_list(self, section: str, key: str, default: str = "") -> List[str]:
        """Comma-separated value as a list of stripped, nonempty items."""
        value = self.get(section, key, default)
        return [item.strip() for item in str(value).split(",") if item.strip()]

    def save(self) -> None:
        """Save current configuration to file."""
        if self.config_file is None:
            return
        config = configparser.ConfigParser()

        for section, options in self.config.items():
            config[section] = {}
            for key, value in options.items():
                # Ensure all config values are ASCII-compatible for Windows
                if isinstance(value, str):
                    value = value.encode('ascii', 'replace').decode('ascii')
                config[section][key] = str(value)

        with open(self.config_file, 'w', encoding='utf-8') as f:
            config.write(f)
