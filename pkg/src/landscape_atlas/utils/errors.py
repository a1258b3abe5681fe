# -*- coding: utf-8 -*-
"""
src.landscape_atlas.utils.errors.py - Landscape-Atlas
Created by NCagle
2025-02-04
      _
   __(.)<
~~~⋱___)~~~

Exception hierarchy shared by the library and the command line.

Every error carries the process exit code the CLI should use when it
reaches the top level:
    0  success
    1  verification failure
    2  usage / domain error
    3  capacity error (dimension above the enumeration cap)
    4  I/O or atlas format error
"""


class AtlasError(Exception):
    """Base class for all landscape atlas errors."""
    exit_code: int = 2


class DomainError(AtlasError, ValueError):
    """
    Invalid input value: bad node index, wrong vector length, non-finite
    fitness, dimension mismatch or rank count out of range.
    """
    exit_code = 2


class CapacityError(AtlasError):
    """
    Requested full enumeration above the configured dimension cap.

    Arguments:
        n (int): Requested dimension
        max_n (int): Configured cap
    """
    exit_code = 3

    def __init__(self, n: int, max_n: int):
        self.n = n
        self.max_n = max_n
        super().__init__(
            f"Full enumeration for n={n} exceeds the cap n<={max_n}; "
            "only counting operations are available"
        )


class NotFoundError(AtlasError, KeyError):
    """Dimension or class id absent from an atlas."""
    exit_code = 2

    def __str__(self) -> str:
        # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class AtlasFormatError(AtlasError):
    """Unreadable atlas file: bad header, unknown format tag or digest mismatch."""
    exit_code = 4


class ConfigError(AtlasError):
    """Invalid settings file or override."""
    exit_code = 2


class VerificationError(AtlasError):
    """
    One or more reference checks failed.

    Arguments:
        failures (list[str]): Names of the failed checks
    """
    exit_code = 1

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__(f"{len(self.failures)} check(s) failed: {', '.join(self.failures)}")
