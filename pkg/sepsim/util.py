import numpy as np


class TheoremDomainError(ValueError):
    "Parameters fall outside the domain where a threshold formula holds"


class IntegrityError(RuntimeError):
    "Readings contradict the truthful sensing model"


class CapacityError(ValueError):
    "Instance too large for exhaustive enumeration"


class ConfigError(ValueError):
    "Malformed run configuration or instance file"

    def __init__(self, msg, line=None):
        if line is not None:
            msg = "line {}: {}".format(line, msg)
        super(ConfigError, self).__init__(msg)
        self.line = line


def isint(x):
    """
    True for Python and numpy integer scalars; False for anything else.

    Counts and seeds reach sepsim either as Python ints or as elements of
    numpy arrays (np.int64 from np.arange, for example), so the test is
    done on the numpy type hierarchy. Booleans and integral floats such as
    3.0 are not integers here.

    >>> isint(np.uint64(7))
    True
    >>> isint(3.0)
    False
    """
    return np.issubdtype(type(x), np.integer)


def isstring(s):
    "Returns True if input is a string; False otherwise."
    return isinstance(s, str)


def isnumber(x):
    "True if `x` is a finite real number (not bool); False otherwise"
    if isinstance(x, (bool, np.bool_)):
        return False
    if not (isint(x) or np.issubdtype(type(x), np.floating)):
        return False
    return bool(np.isfinite(x))


def check_open_unit(x, name):
    "Return float(x) if 0 < x < 1; raise ValueError otherwise"
    if not isnumber(x) or not 0 < x < 1:
        msg = "`{0}` must satisfy 0 < {0} < 1".format(name)
        raise ValueError(msg)
    return float(x)


def check_positive(x, name):
    "Return float(x) if x > 0; raise ValueError otherwise"
    if not isnumber(x) or not x > 0:
        raise ValueError("`{}` must be a positive number".format(name))
    return float(x)


def check_count(x, name):
    "Return int(x) if x is a non-negative integer; raise ValueError otherwise"
    if not isint(x) or x < 0:
        raise ValueError("`{}` must be a non-negative integer".format(name))
    return int(x)


def readonly(array):
    "Read-only copy of `array`"
    array = np.array(array, copy=True)
    array.flags.writeable = False
    return array
