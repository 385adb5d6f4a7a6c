#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import logging
import os
import sys
from typing import Any, Dict, Optional

SEQUENCE_FILE_TYPE_LABEL = "SEQUENCE FILE / TYPE"
PRIME_LABEL = "PRIME"
TYPE_N_LABEL = "TYPE N"
DEPTH_LABEL = "DEPTH"
COMMENT_LABEL = "COMMENT"
END_OF_HEADER_LABEL = "END OF HEADER"

WORKERS_ENV_VAR = "MAXCLASS_WORKERS"

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


class ContextMismatchError(ValueError):
    """
    Raised when values from different arithmetic or divided-power contexts are combined.
    """


class HypothesisViolationError(ValueError):
    """
    Raised when the hypothesis of a proposition does not hold for the given input.
    """


class DepthExceededError(LookupError):
    """
    Raised when a sequence entry outside the known index window is read.
    """


class BudgetExceededError(RuntimeError):
    """
    Raised when a workload exceeds its budget. The computed cost is kept in ``cost``.
    """

    def __init__(self, message: str, cost: int, budget: int):
        super().__init__(message)
        self.cost = cost
        self.budget = budget


class MathematicalAssertionError(AssertionError):
    """
    Raised when a mathematical claim fails. ``witness`` holds the smallest data that shows the failure.
    """

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.witness = witness if witness is not None else {}


def parse_number_with_exception(parse_function, arg, exception_msg: str):
    """
    Executes provided parse-function inside a try-catch block.
    If ValueError is raised, provided custom exception message is set on the exception.

    :param parse_function: function that will be executed inside try-catch
    :param arg: argument that will be used for parse_function
    :param exception_msg: custom exception message
    :return: result of the parse-function or ValueError
    """
    try:
        return parse_function(arg)
    except ValueError as exc:
        raise ValueError(exception_msg) from exc


def str2int(string: str, exception_msg: str) -> int:
    """
    Converts string to int. Raises ValueError with provided exception message when parsing fails.
    """
    return parse_number_with_exception(int, string, exception_msg)


def normalize_header_line(string: str) -> str:
    """
    Pads a header line to 80 chars so that the label columns 60-80 can always be sliced.
    """
    result = string.strip("\n")
    if len(result) < 80:
        result = result.ljust(80)
    return result


def format_header_line(value: str, label: str) -> str:
    """
    Formats a header line: value left-aligned in columns 0-60, label in columns 60-80.
    """
    return value.ljust(60)[:60] + label.ljust(20)[:20]


def worker_count_from_env() -> int:
    """
    Reads the worker count from the MAXCLASS_WORKERS environment variable. Defaults to 1.
    """
    raw = os.environ.get(WORKERS_ENV_VAR, "1")
    workers = str2int(raw, "Invalid value of {var:s}: '{raw:s}'".format(var=WORKERS_ENV_VAR, raw=raw))
    if workers < 1:
        raise ValueError("{var:s} must be a positive integer, got {w:d}".format(var=WORKERS_ENV_VAR, w=workers))
    return workers


def configure_logging(verbose: bool = False) -> None:
    """
    Installs a single stderr handler on the package logger.
    Reports are written to stdout, so logging must never go there.
    """
    logger = logging.getLogger("nmbu.maxclass")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.propagate = False
