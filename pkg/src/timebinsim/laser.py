"""DFB laser model: continuous-wave and gain-switched emission.

In gain-switched mode every emission window starts with a transient of
duration ``t_ss`` before the output is usable for carving, and the cavity
needs ``t_off`` of darkness between windows to lose memory of its optical
phase.  Each window then carries one global phase drawn uniformly at random;
pulses carved inside the same window are mutually coherent up to the source
visibility ``coherence_visibility``, pulses from different windows are not.

In continuous-wave mode there is a single unbounded window with phase 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import TimingError

CW = "cw"
GAIN_SWITCHED = "gain_switched"


@dataclass(frozen=True)
class LaserConfig:
    mode: str = CW
    t_ss: float = 0.0
    t_off: float = 0.0
    coherence_visibility: float = 1.0
    rng_seed: int = 0

    def __post_init__(self):
        if self.mode not in (CW, GAIN_SWITCHED):
            raise ValueError(f"unknown laser mode {self.mode!r}")
        if self.t_ss < 0 or self.t_off < 0:
            raise ValueError("t_ss and t_off must be non-negative")
        if not 0.0 <= self.coherence_visibility <= 1.0:
            raise ValueError("coherence_visibility must lie in [0, 1]")


@dataclass(frozen=True)
class EmissionWindow:
    """One steady-state emission interval with a single global phase."""

    start: float
    stop: float
    global_phase: float
    index: int = 0

    def __post_init__(self):
        if not self.stop > self.start:
            raise ValueError("window stop must exceed start")

    @property
    def carve_start(self) -> float:
        """Earliest time at which pulses may be carved (start of steady state)."""
        return self.start

    def contains(self, t0: float, t1: float) -> bool:
        return t0 >= self.start - 1e-15 and t1 <= self.stop + 1e-15


def emission_schedule(
    config: LaserConfig,
    window_requests: Sequence[tuple],
    rng: np.random.Generator | None = None,
) -> list[EmissionWindow]:
    """Turn requested steady-state intervals into emission windows.

    Requests are (start, stop) pairs for the *usable* (post-settling) part of
    each window.  In gain-switched mode consecutive requests must leave at
    least ``t_off`` of dark time, otherwise the cavity retains phase memory
    and the per-window phases would correlate.
    """
    requests = [(float(a), float(b)) for a, b in window_requests]
    if not requests:
        return []
    for start, stop in requests:
        if not stop > start:
            raise ValueError("window request stop must exceed start")
    for (s0, e0), (s1, e1) in zip(requests, requests[1:]):
        if s1 < e0:
            raise ValueError("window requests must be ordered and non-overlapping")

    if config.mode == CW:
        return [EmissionWindow(requests[0][0], requests[-1][1], 0.0, index=0)]

    for (s0, e0), (s1, e1) in zip(requests, requests[1:]):
        gap = s1 - e0 - config.t_ss
        if gap < config.t_off - 1e-15:
            raise TimingError(
                "insufficient cavity depletion: phases would correlate "
                f"(gap {gap:.3e} s < t_off {config.t_off:.3e} s)"
            )
    if rng is None:
        rng = np.random.default_rng(config.rng_seed)
    phases = rng.uniform(0.0, 2.0 * np.pi, size=len(requests))
    return [
        EmissionWindow(start, stop, float(phase), index=i)
        for i, ((start, stop), phase) in enumerate(zip(requests, phases))
    ]


def max_repetition_rate(config: LaserConfig) -> float:
    """Largest state rate compatible with per-state phase randomization.

    Each state needs a fresh gain-switching cycle, so the period cannot be
    shorter than ``t_ss + t_off``.  Returns ``inf`` when both are zero.
    """
    total = config.t_ss + config.t_off
    if total == 0.0:
        return float("inf")
    return 1.0 / total


def pairwise_visibility(config: LaserConfig, same_window: bool) -> float:
    """Expected interference contrast between two carved pulses.

    Pulses from different emission windows carry independent uniform phases,
    so their expected fringe contrast is zero; same-window pulses interfere
    with the calibrated source visibility.
    """
    if not same_window:
        return 0.0
    return config.coherence_visibility
