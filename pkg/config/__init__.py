"""
Configuration Package

Provides environment-based configuration management for the contact invariants engine.
"""

from .settings import Config, get_config, setup_logging, validate_config

__all__ = [
    'Config',
    'get_config',
    'setup_logging',
    'validate_config'
]
