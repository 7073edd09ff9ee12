"""Static plots of spectra on the complex plane."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .errors import PreconditionViolated  # noqa: E402
from .spectral import Spectrum  # noqa: E402


def spectrum_points(spectrum: Spectrum) -> np.ndarray:
    """Every represented eigenvalue (each root of each class) as a complex array."""
    return np.array(spectrum.values(), dtype=complex)


def emit_plot(spectrum: Spectrum, path, *, title: str | None = None) -> np.ndarray:
    """Write an SVG of the spectrum: one marker per root, with the unit circle for reference.

    :param spectrum: a nonempty :class:`Spectrum` (values or root classes)
    :param path: output file; the format follows the suffix (``.svg`` recommended)
    :returns: the plotted points
    :raises PreconditionViolated: for an empty spectrum
    :raises OSError: when the file cannot be written
    """
    points = spectrum_points(spectrum)
    if points.size == 0:
        raise PreconditionViolated("cannot plot an empty spectrum")
    # fixed metadata keeps repeated runs byte-identical
    plt.rcParams["svg.hashsalt"] = "powerspec"
    fig, ax = plt.subplots(figsize=(5, 5))
    theta = np.linspace(0, 2 * np.pi, 361)
    ax.plot(np.cos(theta), np.sin(theta), color="0.7", lw=0.8, label="unit circle")
    ax.axhline(0, color="0.85", lw=0.5)
    ax.axvline(0, color="0.85", lw=0.5)
    ax.scatter(points.real, points.imag, s=28, color="tab:blue", zorder=3, label=f"{points.size} roots")
    bound = max(1.2, 1.1 * float(np.max(np.abs(points))))
    ax.set_xlim(-bound, bound)
    ax.set_ylim(-bound, bound)
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title)
    ax.legend(loc="upper right", fontsize="small")
    fig.savefig(path, metadata={"Date": None} if str(path).endswith(".svg") else None)
    plt.close(fig)
    return points
