"""Controller package: job parsing, matrix cache, command dispatch and self-test"""

from .cache import MatrixCache
from .engine import Action, exit_code_for, parse_point, run
from .jobs import COMMANDS, FORMATS, JobOptions, JobSpec, load_job, parse_job
from .selftest import Check, SelfTestFailure, run_selftest

__all__ = [
    "Action", "run", "exit_code_for", "parse_point", "MatrixCache",
    "COMMANDS", "FORMATS", "JobOptions", "JobSpec", "parse_job", "load_job",
    "Check", "SelfTestFailure", "run_selftest",
]
