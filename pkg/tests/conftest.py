import pytest

import coprimetric._minl1_py as kernel_py

try:
    import coprimetric._minl1_cy as kernel_cy
except ImportError:
    kernel_cy = None

KERNELS = [kernel_py] + ([kernel_cy] if kernel_cy is not None else [])


@pytest.fixture(params=KERNELS, ids=[k.BACKEND for k in KERNELS])
def kernel(request):
    """Each available solver kernel (pure Python, compiled twin)."""
    return request.param
