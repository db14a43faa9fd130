#!/usr/bin/env python3
"""
Configuration Manager for PRISMA
Handles loading and accessing settings from a YAML file.
"""

import copy
import os
import yaml
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from src.utils.errors import ConfigError

CONFIG_ENV_VAR = 'PRISMA_CONFIG'
DEFAULT_CONFIG_FILE = 'config.yaml'


def _deep_merge(base: dict, override: dict) -> dict:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class Config:
    """Manages loading and accessing configuration settings."""

    def __init__(self, config_path: Optional[str] = None):
        self.logger = logging.getLogger(__name__)
        self.config_path = Path(config_path or os.environ.get(CONFIG_ENV_VAR) or DEFAULT_CONFIG_FILE)
        self.settings = self._load_config()

    def _load_config(self) -> dict:
        """Loads the configuration from the YAML file, merged over the defaults."""
        defaults = self._get_default_settings()
        if not self.config_path.exists():
            self.logger.warning(f"Config file not found at {self.config_path}. Using defaults.")
            return defaults

        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                config_data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"Error loading configuration from {self.config_path}: {e}") from e

        if not isinstance(config_data, dict):
            raise ConfigError(f"Configuration in {self.config_path} must be a mapping")

        self.logger.debug(f"Configuration loaded from {self.config_path}")
        return _deep_merge(defaults, config_data)

    def write_default_config(self, path: Optional[str] = None) -> Path:
        """Writes the default configuration file."""
        target = Path(path) if path else self.config_path
        with open(target, 'w', encoding='utf-8') as f:
            yaml.dump(self._get_default_settings(), f, default_flow_style=False)
        self.logger.info(f"Default config file created at {target}")
        return target

    def get(self, key, default=None):
        """Retrieves a setting value by key."""
        return self.settings.get(key, default)

    def section(self, key: str) -> Dict[str, Any]:
        """Retrieves a whole section, empty if absent."""
        value = self.settings.get(key) or {}
        if not isinstance(value, dict):
            raise ConfigError(f"Config section '{key}' must be a mapping")
        return value

    @staticmethod
    def _get_default_settings() -> dict:
        """Returns the default configuration settings."""
        return {
            'sweep': {
                'max_arity': 4,
                'max_degree': 3,
                'coverage_bound': 3,
                'jobs': 1,
                'suites': 'all',
                'sign_rule': 'cellular'
            },
            'limits': {
                'max_basis_size': 250000
            },
            'output': {
                'format': 'text',
                'color': True,
                'progress': True
            },
            'logging': {
                'level': 'INFO',
                'file': True,
                'directory': '~/.prisma/logs'
            }
        }
