"""
Exit-Code Mapping

Turns engine exceptions raised inside command handlers into the documented
process exit codes.
"""

import logging
from functools import wraps

from core.errors import (
    ContactInvariantsError,
    DisagreementError,
    RetryExhausted,
    SpecializationDegenerate,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2
EXIT_DEGENERATE = 3


def exit_code_for(error: Exception) -> int:
    if isinstance(error, DisagreementError):
        return EXIT_DISAGREEMENT
    if isinstance(error, (RetryExhausted, SpecializationDegenerate)):
        return EXIT_DEGENERATE
    return EXIT_USAGE


def handle_engine_errors(f):
    """
    Decorator for command handlers returning an exit code

    Usage:
        @handle_engine_errors
        def cmd_compute(args, config):
            ...

    Engine errors are logged to standard error and mapped:
    - DisagreementError -> 2
    - RetryExhausted, degenerate explicit specialization -> 3
    - any other engine error or invalid value -> 1
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (ContactInvariantsError, ValueError) as e:
            code = exit_code_for(e)
            logger.error(f"{f.__name__}: {type(e).__name__}: {e}")
            logger.debug("Traceback", exc_info=True)
            return code

    return decorated_function
