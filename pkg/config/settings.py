"""
Configuration Management System

Environment-based configuration for the contact invariants engine.
Supports development, testing and production environments.

Features:
- Engine settings (seed, agreement count, retry budget, worker pool)
- Graph cache location (single override variable CONTACT_CACHE_DIR)
- Output defaults
- Logging configuration (all handlers on standard error)
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

# Load environment variables from .env file if available
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass

CACHE_DIR_ENV = 'CONTACT_CACHE_DIR'
OUTPUT_FORMATS = ('json', 'text', 'csv')


@dataclass
class EngineConfig:
    """Invariant computation settings."""
    seed: int = 0
    min_agreement: int = 2
    retry_budget: int = 32
    threads: int = 1
    show_progress: bool = False


@dataclass
class CacheConfig:
    """Graph cache settings."""
    cache_dir: Path = Path('.graph_cache')
    enabled: bool = True


@dataclass
class OutputConfig:
    """Command-line output defaults."""
    output_format: str = 'json'
    timing: bool = True


def parse_threads(value: Union[str, int]) -> int:
    """Positive integer or 'auto' (one worker per CPU)."""
    if isinstance(value, str) and value.strip().lower() == 'auto':
        return os.cpu_count() or 1
    threads = int(value)
    if threads < 1:
        raise ValueError(f"threads must be positive or 'auto', got {value!r}")
    return threads


class Config:
    """
    Base configuration class with common settings.
    """

    def __init__(self):
        # Application settings
        self.APP_NAME = 'Contact Invariants'
        self.VERSION = '1.0.0'
        self.DEBUG = self._get_bool_env('DEBUG', False)
        self.TESTING = self._get_bool_env('TESTING', False)

        # Path settings
        self.BASE_DIR = Path(__file__).parent.parent

        # Configuration objects
        self.engine = self._load_engine_config()
        self.cache = self._load_cache_config()
        self.output = self._load_output_config()

        # Logging configuration
        self.LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()
        self.LOG_FILE = os.getenv('LOG_FILE', '')

    def _get_bool_env(self, key: str, default: bool = False) -> bool:
        """Get boolean environment variable."""
        value = os.getenv(key, '').lower()
        return value in ('true', '1', 'yes', 'on') if value else default

    def _load_engine_config(self) -> EngineConfig:
        """Load engine configuration from environment."""
        return EngineConfig(
            seed=int(os.getenv('CONTACT_SEED', 0)),
            min_agreement=int(os.getenv('CONTACT_MIN_AGREEMENT', 2)),
            retry_budget=int(os.getenv('CONTACT_RETRY_BUDGET', 32)),
            threads=parse_threads(os.getenv('CONTACT_THREADS', '1')),
            show_progress=self._get_bool_env('CONTACT_PROGRESS', False)
        )

    def _load_cache_config(self) -> CacheConfig:
        """Load graph cache configuration from environment."""
        return CacheConfig(
            cache_dir=Path(os.getenv(CACHE_DIR_ENV, str(self.BASE_DIR / '.graph_cache'))),
            enabled=self._get_bool_env('CONTACT_CACHE_ENABLED', True)
        )

    def _load_output_config(self) -> OutputConfig:
        """Load output configuration from environment."""
        return OutputConfig(
            output_format=os.getenv('CONTACT_FORMAT', 'json').lower(),
            timing=not self._get_bool_env('CONTACT_NO_TIMING', False)
        )

    def logging_config(self, level: Optional[str] = None) -> Dict[str, Any]:
        """Build the logging dictConfig; standard output stays reserved for results."""
        log_level = (level or self.LOG_LEVEL).upper()

        config: Dict[str, Any] = {
            'version': 1,
            'disable_existing_loggers': False,
            'formatters': {
                'standard': {
                    'format': '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
                },
                'detailed': {
                    'format': '%(asctime)s [%(levelname)s] %(name)s:%(lineno)d: %(message)s'
                }
            },
            'handlers': {
                'console': {
                    'level': log_level,
                    'class': 'logging.StreamHandler',
                    'stream': 'ext://sys.stderr',
                    'formatter': 'standard'
                }
            },
            'loggers': {
                '': {  # Root logger
                    'handlers': ['console'],
                    'level': log_level,
                    'propagate': False
                }
            }
        }
        if self.LOG_FILE:
            config['handlers']['file'] = {
                'level': log_level,
                'class': 'logging.FileHandler',
                'filename': self.LOG_FILE,
                'formatter': 'detailed'
            }
            config['loggers']['']['handlers'].append('file')
        return config

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary."""
        return {
            'app_name': self.APP_NAME,
            'version': self.VERSION,
            'debug': self.DEBUG,
            'testing': self.TESTING,
            'engine': {
                'seed': self.engine.seed,
                'min_agreement': self.engine.min_agreement,
                'retry_budget': self.engine.retry_budget,
                'threads': self.engine.threads
            },
            'cache': {
                'cache_dir': str(self.cache.cache_dir),
                'enabled': self.cache.enabled
            },
            'output': {
                'format': self.output.output_format,
                'timing': self.output.timing
            }
        }


class DevelopmentConfig(Config):
    """Development environment configuration."""

    def __init__(self):
        super().__init__()
        self.DEBUG = True
        self.LOG_LEVEL = os.getenv('LOG_LEVEL', 'DEBUG').upper()


class TestingConfig(Config):
    """Testing environment configuration."""

    def __init__(self):
        super().__init__()
        self.TESTING = True
        self.cache.enabled = False
        self.engine.show_progress = False


class ProductionConfig(Config):
    """Production environment configuration."""

    def __init__(self):
        super().__init__()
        self.DEBUG = False
        self.engine.show_progress = False


def get_config(env: Optional[str] = None) -> Config:
    """Get configuration object based on environment."""
    if env is None:
        env = os.getenv('APP_ENV', 'production').lower()

    config_map = {
        'development': DevelopmentConfig,
        'dev': DevelopmentConfig,
        'testing': TestingConfig,
        'test': TestingConfig,
        'production': ProductionConfig,
        'prod': ProductionConfig
    }

    config_class = config_map.get(env, ProductionConfig)
    return config_class()


# Utility functions
def setup_logging(config_dict: Dict[str, Any]):
    """Setup logging based on configuration."""
    import logging.config
    logging.config.dictConfig(config_dict)


def validate_config(config_obj: Config) -> List[str]:
    """Validate configuration and return list of warnings/errors."""
    issues = []

    if config_obj.engine.min_agreement < 2:
        issues.append("ERROR: min_agreement must be at least 2")

    if config_obj.engine.retry_budget < 1:
        issues.append("ERROR: retry_budget must be positive")

    if config_obj.output.output_format not in OUTPUT_FORMATS:
        issues.append(f"ERROR: unknown output format: {config_obj.output.output_format}")

    cache_dir = config_obj.cache.cache_dir
    if config_obj.cache.enabled and cache_dir.exists() and not os.access(cache_dir, os.R_OK | os.W_OK):
        issues.append(f"WARNING: Insufficient permissions for cache directory: {cache_dir}")

    return issues
