import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qdissect import _kernels, _kernels_py

try:
    from qdissect import _speedups
except ImportError:
    _speedups = None

needs_ext = pytest.mark.skipif(_speedups is None, reason="extension not built")


def naive_conv(a, b, out_len):
    out = [0] * out_len
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < out_len:
                out[i + j] += x * y
    return out


@given(
    st.lists(st.integers(-50, 50), max_size=12),
    st.lists(st.integers(-50, 50), max_size=12),
    st.integers(0, 30),
)
def test_pure_python_matches_naive(a, b, n):
    assert _kernels_py.conv(a, b, n) == naive_conv(a, b, n)


@needs_ext
@given(
    st.lists(st.integers(-(10**25), 10**25), max_size=12),
    st.lists(st.integers(-(10**25), 10**25), max_size=12),
    st.integers(0, 30),
)
def test_object_kernel_matches_naive(a, b, n):
    assert _speedups.conv_obj(list(a), list(b), n) == naive_conv(a, b, n)


@needs_ext
def test_dispatch_agrees_across_magnitudes():
    rng = random.Random(7)
    for hi in (5, 10**4, 10**9, 10**18, 10**40):
        a = [rng.randrange(-hi, hi + 1) for _ in range(60)]
        b = [rng.randrange(-hi, hi + 1) for _ in range(45)]
        assert _kernels.conv(a, b, 80) == _kernels_py.conv(a, b, 80)


@needs_ext
def test_int64_bound_is_respected():
    # worst case accumulator: max|a| * max|b| * overlap
    m = 2**31
    a = [m] * 4
    b = [m] * 4
    # 2^62 * 4 overflows int64; the dispatcher must take the object path
    assert _kernels.conv(a, b, 8) == naive_conv(a, b, 8)
    assert _kernels._i64_safe([1], [1]) is True
    assert _kernels._i64_safe(a, b) is False


def test_zero_skipping_paths():
    a = [0, 3, 0, 0, -2, 0]
    b = [0] * 6 + [7]
    assert _kernels.conv(a, b, 14) == naive_conv(a, b, 14)
    assert _kernels.conv(a, [], 5) == [0] * 5
    assert _kernels.conv([], b, 5) == [0] * 5
    assert _kernels.conv(a, b, 0) == []
