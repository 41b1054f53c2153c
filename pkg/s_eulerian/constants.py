"""Settings and fixed values used in multiple locations."""

# Built-in imports
import os
import warnings

SCHEMA = 'eulerian/1'
"""Version tag written into every JSON report produced by the command
line interface."""

DEFAULT_ENUM_BUDGET = 10**8
"""Largest number of objects (inversion sequences, group elements or
words) an exhaustive oracle is allowed to visit unless overridden."""

ENUM_BUDGET_VARIABLE = 'EULERIAN_ENUM_BUDGET'
"""Environment variable overriding the enumeration budget."""

WORKERS_VARIABLE = 'EULERIAN_WORKERS'
"""Environment variable setting the number of worker processes used by
the parallel oracles and the verification suites."""

T_1_COEFFS = (1, 1)
"""Coefficients of T_1(x) = x + 1, the descent polynomial of B_1 under
the type D statistic. The type D recurrence starts at n = 2."""

D_1_COEFFS = (1,)
"""Coefficients of D_1(x) = 1. D_1 is trivial, so T_1 is not twice
D_1."""

STATISTICS = ('asc', 'amaj', 'weight', 'ifmaj', 'asc_d', 'affine_asc_d')
"""Names of the inversion sequence statistics accepted by the oracles
and the command line."""


def _positive_int_from_environment(variable, default):
    value = os.environ.get(variable)
    if value is None or value.strip() == '':
        return default
    try:
        number = int(value)
    except ValueError:
        warnings.warn(f'{variable}={value!r} is not an integer.'
                      f' Using {default} instead.')
        return default
    if number < 1:
        warnings.warn(f'{variable}={number} is not positive.'
                      f' Using {default} instead.')
        return default
    return number


def enumeration_budget():
    """Get the enumeration budget currently in force.

    Returns
    -------
    budget : int
        Value of EULERIAN_ENUM_BUDGET if it is a positive integer,
        DEFAULT_ENUM_BUDGET otherwise.
    """
    return _positive_int_from_environment(ENUM_BUDGET_VARIABLE,
                                          DEFAULT_ENUM_BUDGET)


def worker_count():
    """Get the number of worker processes to use.

    Returns
    -------
    workers : int
        Value of EULERIAN_WORKERS if it is a positive integer, the
        machine's CPU count otherwise.
    """
    return _positive_int_from_environment(WORKERS_VARIABLE,
                                          os.cpu_count() or 1)
