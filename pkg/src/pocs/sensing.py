"""Complex Gaussian sensing ensembles and the two measurement channels.

A sensing matrix has i.i.d. entries whose real and imaginary parts are
independent zero-mean Gaussians. Two variance conventions are supported:

``PHASE_ONLY``
    per-part standard deviation ``sigma = sqrt(2/pi) / m``, the scaling under
    which ``E ||Phi x||_1 = ||x||_2`` for every x (each ``|(Phi x)_i|`` is
    Rayleigh with mean ``||x||_2 / m``).
``CLASSICAL_CS``
    per-part variance ``1 / (2m)``, i.e. total entry variance ``1/m``, the
    standard scaling with ``E ||Phi x||_2^2 = ||x||_2^2``.

The phase-only channel keeps only the componentwise complex signum of the
linear measurements, optionally rotated by bounded phase noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import csign, matvec
from .rng import RngStream, as_generator


class VarianceConvention(str, Enum):
    PHASE_ONLY = "po"
    CLASSICAL_CS = "cs"


@dataclass(frozen=True)
class SensingMatrix:
    """m x n complex Gaussian matrix with its variance convention recorded."""

    mat: np.ndarray
    convention: VarianceConvention
    sigma: float  # per-part standard deviation

    @property
    def m(self) -> int:
        return self.mat.shape[0]

    @property
    def n(self) -> int:
        return self.mat.shape[1]


@dataclass(frozen=True)
class SparseSignal:
    """Unit-l2-norm vector supported on exactly |support| coordinates."""

    vec: np.ndarray
    support: np.ndarray


@dataclass(frozen=True)
class PhaseMeasurements:
    """Unit-modulus measurement phases plus the noise draws that made them."""

    z: np.ndarray
    xi: np.ndarray
    tau: float


def per_part_sigma(m: int, convention: VarianceConvention) -> float:
    """Per-part standard deviation implied by a convention at m rows."""
    if convention is VarianceConvention.PHASE_ONLY:
        return math.sqrt(2.0 / math.pi) / m
    return math.sqrt(1.0 / (2.0 * m))


def sample_sensing_matrix(
    rng: RngStream | np.random.Generator,
    m: int,
    n: int,
    convention: VarianceConvention | str,
) -> SensingMatrix:
    """Draw an m x n complex Gaussian matrix under the given convention."""
    if m < 1 or n < 1:
        raise ValueError("matrix dimensions must be positive")
    convention = VarianceConvention(convention)
    sigma = per_part_sigma(m, convention)
    gen = as_generator(rng)
    parts = gen.standard_normal((m, n, 2))
    mat = parts.view(np.complex128)[..., 0]
    mat *= sigma
    return SensingMatrix(mat=mat, convention=convention, sigma=sigma)


def _support_value_batch(gen, n, s, count):
    # One contiguous block of n+s uniforms per draw: the support comes from a
    # partial sort of the first n (uniform over all (n choose s) subsets),
    # the values from the last s mapped onto [-1, 1] and row-normalized.
    # Draw k of a batch consumes exactly the same stream slice as the k-th
    # sequential single draw, so batch size never changes the samples.
    u = gen.random((count, n + s))
    supports = np.sort(np.argpartition(u[:, :n], s - 1, axis=1)[:, :s], axis=1)
    values = 2.0 * u[:, n:] - 1.0
    while True:
        norms = np.sqrt((values * values).sum(axis=1))
        bad = norms < 1e-300
        if not bad.any():
            break
        values[bad] = 2.0 * gen.random((int(bad.sum()), s)) - 1.0
    return supports, values / norms[:, None]


def sample_sparse_signal(
    rng: RngStream | np.random.Generator, n: int, s: int
) -> SparseSignal:
    """Draw a unit-norm s-sparse signal of dimension n.

    The support is uniform over all (n choose s) subsets. On-support values
    are i.i.d. uniform on [-1, 1] on the real axis, then the vector is
    normalized to unit l2 norm.
    """
    if not 1 <= s <= n:
        raise ValueError(f"sparsity s={s} out of range [1, {n}]")
    gen = as_generator(rng)
    supports, values = _support_value_batch(gen, n, s, 1)
    vec = np.zeros(n, dtype=np.complex128)
    vec[supports[0]] = values[0]
    return SparseSignal(vec=vec, support=supports[0])


def measure_linear(Phi, x0) -> np.ndarray:
    """Unaltered linear measurements ``Phi x0``."""
    mat = getattr(Phi, "mat", Phi)
    vec = getattr(x0, "vec", x0)
    return matvec(mat, vec)


def measure_phase_only(
    Phi, x0, tau: float, rng: RngStream | np.random.Generator
) -> PhaseMeasurements:
    """Phase-only measurements ``z_i = csign((Phi x0)_i) exp(1j xi_i)``.

    The phase noise is i.i.d. ``xi_i ~ Uniform[-tau, tau]`` (radians). With
    ``tau = 0`` the output equals ``csign(Phi x0)`` exactly. Zero entries of
    ``Phi x0`` follow the csign convention and bump its diagnostic counter.
    """
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    y = measure_linear(Phi, x0)
    gen = as_generator(rng)
    xi = gen.uniform(-tau, tau, size=y.shape[0])
    z = csign(y) * np.exp(1j * xi)
    return PhaseMeasurements(z=z, xi=xi, tau=float(tau))
