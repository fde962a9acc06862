import numpy as np
from numpy.testing import assert_equal, assert_raises, assert_

import sepsim as ss
from sepsim.util import (check_open_unit, check_positive, check_count,
                         readonly)


def test_isint():
    "test isint"
    assert_(ss.isint(1), 'isint failed')
    assert_(ss.isint(np.int32(1)), 'isint failed')
    assert_(ss.isint(np.uint64(1)), 'isint failed')
    assert_(ss.isint(np.arange(3)[1]), 'isint failed')
    assert_(not ss.isint(1.0), 'isint failed')
    assert_(not ss.isint(True), 'isint failed')
    assert_(not ss.isint('a'), 'isint failed')


def test_isnumber():
    "test isnumber"
    assert_(ss.isnumber(1), 'isnumber failed')
    assert_(ss.isnumber(0.5), 'isnumber failed')
    assert_(ss.isnumber(np.float32(0.5)), 'isnumber failed')
    assert_(not ss.isnumber(np.inf), 'isnumber failed')
    assert_(not ss.isnumber(np.nan), 'isnumber failed')
    assert_(not ss.isnumber(False), 'isnumber failed')
    assert_(not ss.isnumber('1'), 'isnumber failed')


def test_checks():
    "argument checks return clean values or raise ValueError"
    assert_equal(check_open_unit(0.5, 'alpha'), 0.5)
    assert_raises(ValueError, check_open_unit, 1.0, 'alpha')
    assert_raises(ValueError, check_open_unit, 0, 'alpha')
    assert_equal(check_positive(2, 'radius'), 2.0)
    assert_raises(ValueError, check_positive, 0.0, 'radius')
    assert_equal(check_count(np.int64(3), 'count'), 3)
    assert_raises(ValueError, check_count, -1, 'count')
    assert_raises(ValueError, check_count, 2.0, 'count')


def test_check_message():
    "error message names the argument"
    try:
        check_open_unit(2, 'beta')
    except ValueError as e:
        assert_('`beta` must satisfy 0 < beta < 1' in str(e), 'bad message')


def test_readonly():
    "readonly returns a copy that cannot be written"
    a = np.arange(3)
    b = readonly(a)
    assert_(not b.flags.writeable, 'array is writeable')
    a[0] = 9
    assert_equal(b[0], 0)


def test_config_error_line():
    "ConfigError messages start with the line number"
    e = ss.ConfigError('bad key', 7)
    assert_equal(str(e), 'line 7: bad key')
    assert_equal(e.line, 7)
    assert_(isinstance(e, ValueError), 'ConfigError is not a ValueError')


def test_exception_hierarchy():
    "named errors derive from builtin exceptions"
    assert_(issubclass(ss.TheoremDomainError, ValueError), 'hierarchy')
    assert_(issubclass(ss.CapacityError, ValueError), 'hierarchy')
    assert_(issubclass(ss.IntegrityError, RuntimeError), 'hierarchy')
