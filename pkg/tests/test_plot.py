import numpy as np
import pytest

from powerspec.errors import PreconditionViolated
from powerspec.plot import emit_plot
from powerspec.power import power_spectrum
from powerspec.spectral import RootClass, Spectrum, spectrum_dedup


def test_cube_of_cycle_has_nine_markers(tmp_path, c4):
    out = tmp_path / "c4.svg"
    points = emit_plot(power_spectrum(c4, 1, 3).root_classes, out)
    assert len(points) == 9
    assert out.read_text().lstrip().startswith("<?xml")


def test_single_class(tmp_path):
    points = emit_plot(spectrum_dedup([RootClass(1, 2)]), tmp_path / "one.svg")
    assert np.allclose(sorted(points.real), [-1, 1]) and np.allclose(points.imag, 0)


def test_empty(tmp_path):
    with pytest.raises(PreconditionViolated):
        emit_plot(Spectrum("root_classes", ()), tmp_path / "none.svg")


def test_repeatable(tmp_path, c4):
    sp = power_spectrum(c4, 1, 4).root_classes
    emit_plot(sp, tmp_path / "a.svg")
    emit_plot(sp, tmp_path / "b.svg")
    assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()
