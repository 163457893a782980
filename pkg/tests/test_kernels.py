"""The compiled kernels and their pure-Python twin must agree exactly."""

import pytest

from caput_kit import _kernels_py, kernels

compiled = pytest.importorskip("caput_kit._kernels")


def test_backend_selected(monkeypatch):
    import importlib
    import os

    if not os.environ.get("CAPUT_KIT_PURE"):
        assert kernels.BACKEND == "compiled"
    monkeypatch.setenv("CAPUT_KIT_PURE", "1")
    assert importlib.reload(kernels).BACKEND == "python"
    monkeypatch.delenv("CAPUT_KIT_PURE")
    importlib.reload(kernels)


@pytest.mark.parametrize("images", [(), (0,), (1, 0, 3, 2, 4), (1, 2, 3, 4, 0), (2, 0, 1, 4, 3, 5, 7, 6)])
def test_cycle_multiplicities(images):
    assert compiled.cycle_multiplicities(images) == _kernels_py.cycle_multiplicities(images)


@pytest.mark.parametrize("n", range(8))
def test_histograms(n):
    assert compiled.cycle_type_histogram(n) == _kernels_py.cycle_type_histogram(n)
    labels = [i * 3 // max(n, 1) for i in range(n)]
    assert compiled.cycle_type_histogram(n, labels) == _kernels_py.cycle_type_histogram(n, labels)


@pytest.mark.parametrize(
    "images, shape",
    [((), ()), ((0, 1, 2), (2, 1)), ((1, 0, 3, 2, 4), (2, 2, 1)), ((1, 0, 3, 2, 4), (3, 2)), ((1, 2, 0, 4, 3, 5, 6), (3, 2, 2))],
)
def test_blockings(images, shape):
    assert compiled.count_invariant_blockings(images, shape) == _kernels_py.count_invariant_blockings(images, shape)


def test_compiled_limits():
    with pytest.raises(ValueError):
        compiled.cycle_type_histogram(13)
    with pytest.raises(ValueError):
        compiled.cycle_multiplicities(tuple(range(21)))
