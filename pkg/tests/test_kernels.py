import os
import subprocess
import sys

import numpy as np
import pytest

from ringlab import kernels
from ringlab.core.constructions import ring_from_tables
from ringlab.expressions import Builder

needs_native = pytest.mark.skipif(not kernels.NATIVE_AVAILABLE, reason="compiled kernels not built")

EXPRS = ["Z12", "GF(2,3)", "M2(Z2)", "T3(Z2)", "S2(Z4)", "K(Z4, 2)", "GR(Z2, D4)", "M2(Z3)"]


def both(fn, R, *args):
    with kernels.use_backend("native"):
        a = fn(R, *args)
    with kernels.use_backend("python"):
        b = fn(R, *args)
    return a, b


def assert_same(a, b):
    if isinstance(a, tuple):
        for x, y in zip(a, b):
            np.testing.assert_array_equal(np.asarray(x), np.asarray(y))
    else:
        np.testing.assert_array_equal(np.asarray(a), np.asarray(b))


@needs_native
@pytest.mark.parametrize("expr", EXPRS)
def test_backends_agree(expr):
    R = Builder()(expr)
    assert_same(*both(kernels.nil_exponents, R))
    u_nat, u_py = both(kernels.unit_mask, R)
    assert_same(u_nat, u_py)
    for side in (0, 1):
        assert_same(*both(kernels.quasi_regular_mask, R, u_nat, side))
    assert both(kernels.axiom_violation, R) == (None, None)

    nil = kernels.nil_exponents(R) > 0
    idem_mask = R.mul(R.elements(), R.elements()) == R.elements()
    idems = np.flatnonzero(idem_mask)
    targets = R.elements()
    signs = np.array([1, -1], np.int8)
    for commuting in (True, False):
        assert_same(*both(kernels.nilclean_search, R, targets, idems, nil, signs, commuting))
    assert_same(*both(kernels.clean_search, R, targets, np.flatnonzero(u_nat), idem_mask, signs))


@needs_native
def test_backends_agree_on_broken_tables():
    Z5 = Builder()("Z5")
    mul = np.array(Z5.mul_table)
    mul[3, 4] = 0
    bad = ring_from_tables(Z5.add_table, mul, Z5.neg_table, 0, 1, "bad")
    nat, py = both(kernels.axiom_violation, bad)
    assert nat is not None and py is not None
    assert nat[0] == py[0]


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        with kernels.use_backend("fortran"):
            pass


def test_use_backend_restores():
    before = kernels.backend_name()
    with kernels.use_backend("python"):
        assert kernels.backend_name() == "python"
    assert kernels.backend_name() == before


def test_environment_forces_fallback():
    code = (
        "from ringlab import kernels; from ringlab.expressions import build;"
        "from ringlab.classifiers import is_gswnc;"
        "print(kernels.NATIVE_AVAILABLE, kernels.backend_name(), bool(is_gswnc(build('M2(Z2)'))))"
    )
    env = dict(os.environ, RINGLAB_BACKEND="python")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "python", "True"]
