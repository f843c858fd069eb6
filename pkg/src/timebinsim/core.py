"""Domain types and pure-state algebra for time-bin qudits.

Conventions used throughout the package:

* A d-dimensional time-bin state is a set of complex amplitudes ``alpha_i``
  attached to strictly increasing bin times ``t_i``, normalized so that
  ``sum |alpha_i|^2 = 1``.  The photon-number information of the underlying
  weak coherent pulse train lives in a separate ``mean_photon`` field; the
  amplitudes only carry the shape of the state.
* The global phase is fixed by making the first bin with non-negligible
  weight real and non-negative (``canonical`` form), which gives a unique
  representation for comparisons in tests.
* Relative carving weights ``a_i^2`` are dimensionless pulse powers in
  [0, 1]; normalizing them yields the ``alpha_i`` via
  ``alpha_i^2 = a_i^2 / sum_j a_j^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

NORM_TOL = 1e-12
HERMITICITY_TOL = 1e-10
EIGENVALUE_TOL = 1e-10


@dataclass(frozen=True)
class TimeBinState:
    """Normalized d-dimensional time-bin state of a weak coherent pulse train.

    ``mean_photon`` is the total mean photon number carried by the train;
    ``mean_photon == 0`` marks a vacuum record whose amplitudes carry no
    physical meaning (``is_vacuum`` is set in that case).
    """

    bin_times: np.ndarray
    amplitudes: np.ndarray
    mean_photon: float

    def __post_init__(self):
        times = np.asarray(self.bin_times, dtype=float)
        amps = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "bin_times", times)
        object.__setattr__(self, "amplitudes", amps)
        if times.ndim != 1 or times.size < 1:
            raise ValueError("bin_times must be a non-empty 1-d array")
        if amps.shape != times.shape:
            raise ValueError("amplitudes and bin_times must have equal length")
        if times.size > 1 and not np.all(np.diff(times) > 0):
            raise ValueError("bin_times must be strictly increasing")
        if self.mean_photon < 0:
            raise ValueError("mean_photon must be non-negative")
        if not self.is_vacuum:
            norm = np.sum(np.abs(amps) ** 2)
            if abs(norm - 1.0) > 1e-9:
                raise ValueError(f"amplitudes not normalized: sum |alpha|^2 = {norm:.12g}")
        times.setflags(write=False)
        amps.setflags(write=False)

    @property
    def dimension(self) -> int:
        return self.bin_times.size

    @property
    def is_vacuum(self) -> bool:
        return self.mean_photon == 0.0

    @property
    def bin_spacing(self) -> float:
        """Common gap between adjacent bins, or NaN if the grid is non-uniform."""
        if self.dimension < 2:
            return float("nan")
        gaps = np.diff(self.bin_times)
        if np.allclose(gaps, gaps[0], rtol=0, atol=1e-15):
            return float(gaps[0])
        return float("nan")

    def canonical(self) -> "TimeBinState":
        """Rotate the global phase so the first significant amplitude is real >= 0."""
        amps = self.amplitudes
        idx = int(np.argmax(np.abs(amps) > 1e-12))
        ref = amps[idx]
        if abs(ref) < 1e-12:
            return self
        return TimeBinState(self.bin_times, amps * (abs(ref) / ref), self.mean_photon)

    def projector(self) -> "DensityMatrix":
        """Rank-one density matrix |psi><psi| of this state."""
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True)
class ElectricalPulseTrain:
    """Rectangular voltage pulse train driving the carving stage.

    ``pulse_times`` are pulse centres, ``width`` the common rectangular width
    (the carving window), ``voltages`` the per-pulse drive levels.
    """

    pulse_times: np.ndarray
    width: float
    voltages: np.ndarray
    base_offset: float = 0.0
    bin_spacing: float = 0.0

    def __post_init__(self):
        times = np.asarray(self.pulse_times, dtype=float)
        volts = np.asarray(self.voltages, dtype=float)
        object.__setattr__(self, "pulse_times", times)
        object.__setattr__(self, "voltages", volts)
        if times.ndim != 1 or times.size < 1:
            raise ValueError("pulse_times must be a non-empty 1-d array")
        if volts.shape != times.shape:
            raise ValueError("voltages and pulse_times must have equal length")
        if self.width <= 0:
            raise ValueError("pulse width must be positive")
        if times.size > 1:
            gaps = np.diff(times)
            if np.any(gaps < self.width - 1e-15):
                raise ValueError("pulses overlap: consecutive centres closer than the width")
        times.setflags(write=False)
        volts.setflags(write=False)

    @property
    def n_pulses(self) -> int:
        return self.pulse_times.size


@dataclass(frozen=True)
class HardwareConfig:
    """Electro-optic parameters of the two-stage encoder.

    ``v_pi``               half-wave voltage of the phase modulators [V]
    ``delta_t_asymm``      carving-stage Sagnac asymmetry (optical pulse width) [s]
    ``delta_t_asymm2``     picking-stage fixed fibre delay [s]
    ``extinction_ratio``   power suppression of undriven pulses (>= 1, linear)
    ``insertion_loss_db``  total encoder insertion loss [dB]
    ``photon_scale``       kappa, mean photons per unit total carved weight
    ``rise_fall_time``     electrical edge duration for the skew model [s]
    """

    v_pi: float
    delta_t_asymm: float
    delta_t_asymm2: float
    extinction_ratio: float = 1e3
    insertion_loss_db: float = 0.0
    photon_scale: float = 1.0
    rise_fall_time: float = 0.0

    def __post_init__(self):
        if self.v_pi <= 0:
            raise ValueError("v_pi must be positive")
        if self.delta_t_asymm <= 0:
            raise ValueError("delta_t_asymm must be positive")
        if self.delta_t_asymm2 < 0:
            raise ValueError("delta_t_asymm2 must be non-negative")
        if self.extinction_ratio < 1:
            raise ValueError("extinction_ratio must be >= 1 (linear power ratio)")
        if self.insertion_loss_db < 0:
            raise ValueError("insertion_loss_db must be non-negative")
        if self.photon_scale <= 0:
            raise ValueError("photon_scale must be positive")
        if self.rise_fall_time < 0:
            raise ValueError("rise_fall_time must be non-negative")


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite d x d matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        rho = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", rho)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise ValueError("density matrix must be square")
        if not np.allclose(rho, rho.conj().T, rtol=0, atol=HERMITICITY_TOL):
            raise ValueError("density matrix is not Hermitian")
        trace = np.trace(rho).real
        if abs(trace - 1.0) > HERMITICITY_TOL:
            raise ValueError(f"density matrix trace {trace:.12g} != 1")
        eigs = np.linalg.eigvalsh(rho)
        if eigs.min() < -EIGENVALUE_TOL:
            raise ValueError(f"density matrix has negative eigenvalue {eigs.min():.3e}")
        rho.setflags(write=False)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


def normalize_amplitudes(weights, bin_times=None, mean_photon: float = 1.0) -> TimeBinState:
    """Build the normalized state with ``alpha_i = sqrt(w_i / sum w)`` and zero phases.

    ``weights`` are the relative carved pulse powers ``a_i^2``.  An all-zero
    weight vector has no normalizable amplitudes and raises ``ValueError``.
    """
    w = np.asarray(weights, dtype=float)
    if np.any(w < 0):
        raise ValueError("weights must be non-negative")
    total = w.sum()
    if total <= 0:
        raise ValueError("vacuum state, no normalizable amplitudes")
    amps = np.sqrt(w / total).astype(complex)
    if bin_times is None:
        bin_times = np.arange(w.size, dtype=float)
    return TimeBinState(bin_times, amps, mean_photon)


def mean_photon(weights, config: HardwareConfig) -> float:
    """Mean photon number kappa * sum(a_i^2) of the carved train."""
    w = np.asarray(weights, dtype=float)
    if np.any(w < 0):
        raise ValueError("weights must be non-negative")
    return float(config.photon_scale * w.sum())


def fidelity_pure(psi: TimeBinState, phi: TimeBinState) -> float:
    """Overlap fidelity |<psi|phi>|^2 between two pure states on the same grid."""
    if psi.dimension != phi.dimension:
        raise ValueError(f"dimension mismatch: {psi.dimension} != {phi.dimension}")
    if not np.allclose(psi.bin_times, phi.bin_times, rtol=0, atol=1e-15):
        raise ValueError("states live on different bin grids")
    overlap = np.vdot(psi.amplitudes, phi.amplitudes)
    return float(min(1.0, abs(overlap) ** 2))


def fidelity_mixed(rho: DensityMatrix, phi: TimeBinState) -> float:
    """Fidelity <phi|rho|phi> of a density matrix against a pure target."""
    if rho.dimension != phi.dimension:
        raise ValueError(f"dimension mismatch: {rho.dimension} != {phi.dimension}")
    val = np.real(np.vdot(phi.amplitudes, rho.matrix @ phi.amplitudes))
    return float(min(1.0, max(0.0, val)))
