"""Exception hierarchy shared by all workbench modules."""

from __future__ import annotations

from pathlib import Path

import numpy as np


class WorkbenchError(Exception):
    """Base class for every error raised by the workbench."""


class SignatureMismatchError(WorkbenchError, ValueError):
    """Operands were built against algebras with different generator counts."""


class SingularityError(WorkbenchError, ZeroDivisionError):
    """A kernel or inverse was evaluated at its singular point."""


class SeriesDivergenceError(WorkbenchError, ArithmeticError):
    """The exponential power series did not reach its stopping rule."""

    def __init__(self, message: str, last_term: float):
        super().__init__(f"{message} (last term magnitude {last_term:.3e})")
        self.last_term = last_term


class DomainError(WorkbenchError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class SizeLimitError(WorkbenchError, ValueError):
    """A documented size limit was exceeded."""


class DegenerateSampleError(WorkbenchError, np.linalg.LinAlgError):
    """Sampled increments do not determine the least-squares fit."""


class ConfigError(WorkbenchError, ValueError):
    """A suite configuration could not be parsed or is inconsistent."""


class ReportIOError(WorkbenchError, OSError):
    """Writing or reading a report failed."""

    def __init__(self, path: str | Path, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path = Path(path)
