"""Resource accounting for the concatenated 7-qubit code.

One level of encoding turns a logical qubit into 7 data qubits plus
3 groups of 28 pipelined ancillas (91 physical qubits), and each logical
gate into a fixed mix of physical gates counted by a 4x4 transfer
matrix.  Concatenation applies the matrix repeatedly, so gate counts
grow with its dominant eigenvalue (64) while qubit counts grow as 91^k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

#: Fault-tolerance threshold of the code.
P_THRESHOLD = 2e-5

#: Physical qubits per logical qubit per concatenation level: 7 + 3*28.
QUBIT_GROWTH = 91

#: Dominant transfer-matrix eigenvalue: physical-gate growth per level.
GATE_GROWTH = 64

#: Per-level transfer matrix mapping logical (2qb, 1qb, id, meas) counts
#: in parallel to physical ones.  The 1/3 spreads each logical gate over
#: its three data time-steps.
TRANSFER_MATRIX = tuple(
    tuple(Fraction(n, 3) for n in row)
    for row in ((135, 64, 64, 0), (56, 35, 28, 0), (58, 29, 36, 0), (56, 28, 28, 7))
)

#: Stationary mix of physical elements for a rectangular circuit, as
#: fractions of 64^k * Q_L: (2qb, 1qb, id, meas).  2*64 + 28 + 29 = 185.
RECTANGULAR_MIX = (
    Fraction(64, 185), Fraction(28, 185), Fraction(29, 185), Fraction(28, 185),
)


class AboveThresholdError(ValueError):
    """Raised when no concatenation level can reach the target metric.

    The logical error per qubit shrinks with k only when the physical
    error probability is below threshold.
    """


@dataclass(frozen=True)
class LogicalGateCounts:
    """Logical gates in parallel at one time-step: (2qb, 1qb, id, meas)."""

    n_2qb: float
    n_1qb: float
    n_id: float
    n_meas: float

    def __post_init__(self) -> None:
        if min(self.n_2qb, self.n_1qb, self.n_id, self.n_meas) < 0:
            raise ValueError("gate counts must be nonnegative")

    def as_tuple(self) -> tuple:
        return (self.n_2qb, self.n_1qb, self.n_id, self.n_meas)


@dataclass(frozen=True)
class CodeParameters:
    """Tunable knobs of the code model.

    ``t_gate_multiplier`` scales the dynamic (gate) power to bound the
    extra cost of non-Clifford gates; it stays within [1, 10].
    """

    p_thr: float = P_THRESHOLD
    t_gate_multiplier: float = 1.0

    def __post_init__(self) -> None:
        if not (0 < self.p_thr < 1):
            raise ValueError("threshold must be in (0, 1)")
        if not (1.0 <= self.t_gate_multiplier <= 10.0):
            raise ValueError("t_gate_multiplier must lie in [1, 10]")


def logical_error_probability(p_err, k: int, p_thr: float = P_THRESHOLD):
    """Error probability per logical qubit per logical step at level ``k``.

    ``p_thr * (p_err/p_thr)^(2^k)``; equals ``p_err`` at k = 0 and has
    ``p_thr`` as its fixed point.
    """
    p = np.asarray(p_err, dtype=float)
    if np.any(p < 0):
        raise ValueError("error probability must be nonnegative")
    if k < 0:
        raise ValueError("concatenation level must be a nonnegative integer")
    out = p_thr * (p / p_thr) ** (2**k)
    if np.ndim(out) == 0:
        return float(out)
    return out


def physical_qubits(q_logical: int, k: int) -> int:
    """Physical qubits implementing ``q_logical`` logical qubits at level k."""
    if q_logical < 0 or k < 0:
        raise ValueError("counts must be nonnegative")
    return QUBIT_GROWTH**k * q_logical


def _matrix_power_apply(vec: tuple, k: int) -> tuple:
    out = [Fraction(v) for v in vec]
    for _ in range(k):
        out = [sum(TRANSFER_MATRIX[i][j] * out[j] for j in range(4)) for i in range(4)]
    return tuple(out)


def physical_gate_counts_fractions(logical: LogicalGateCounts, k: int) -> tuple:
    """Exact physical counts in parallel as Fractions: transfer matrix to
    the k-th power applied to the logical mix.  Exact for any k."""
    if k < 0:
        raise ValueError("concatenation level must be a nonnegative integer")
    vec = tuple(Fraction(x) for x in logical.as_tuple())
    return _matrix_power_apply(vec, k)


def physical_gate_counts_exact(logical: LogicalGateCounts, k: int) -> tuple:
    """Exact physical counts rounded to integers (half-to-even)."""
    fracs = physical_gate_counts_fractions(logical, k)
    return tuple(round(f) for f in fracs)


def physical_gate_counts_rectangular(q_logical: float, k: int) -> tuple:
    """Approximate physical counts for a rectangular circuit.

    ``(64, 28, 29, 28)/185 * 64^k * Q_L`` for (2qb, 1qb, id, meas):
    the dominant-eigenvector mix, good to <25% at k=1 and <1% for k>=2.
    """
    if k < 0:
        raise ValueError("concatenation level must be a nonnegative integer")
    scale = GATE_GROWTH**k * q_logical
    return tuple(float(c) * scale for c in RECTANGULAR_MIX)


def measurement_fraction(k: int) -> float:
    """Physical measurements in parallel per physical qubit, level k."""
    return float(RECTANGULAR_MIX[3]) * (GATE_GROWTH / QUBIT_GROWTH) ** k


def ft_metric(p_err: float, k: int, q_logical: float, d_logical: float,
              linear: bool = True, p_thr: float = P_THRESHOLD) -> float:
    """Success probability of a rectangular logical circuit.

    The exact form is ``(1 - p_L)^(Q_L*D_L)``; the linear form
    ``1 - Q_L*D_L*p_L`` (clamped at 0) slightly overestimates the effect
    of errors, so it never exceeds the exact form.
    """
    n_locations = q_logical * d_logical
    if n_locations < 0:
        raise ValueError("circuit size must be nonnegative")
    p_l = logical_error_probability(p_err, k, p_thr)
    if linear:
        return max(0.0, 1.0 - n_locations * p_l)
    if p_l >= 1.0:
        return 0.0
    # log1p avoids the cancellation in (1 - p_l) for tiny p_l
    return math.exp(n_locations * math.log1p(-p_l))


def ft_power(q_logical: float, k: int, p_2qb: float, p_1qb: float,
             p_meas: float, p_qubit: float, t_gate_multiplier: float = 1.0) -> float:
    """Full-stack power of a rectangular computation at level k (W).

    Dynamic gate/measurement power follows the rectangular gate mix
    (``4*64^k/185 * [16 P_2qb + 7 P_1qb + 7 P_meas]`` per logical
    qubit); static power scales with the 91^k physical qubit count.
    The optional multiplier bounds non-Clifford-gate overhead and
    applies to the dynamic bracket only.
    """
    dyn = (4.0 * GATE_GROWTH**k / 185.0) * (16.0 * p_2qb + 7.0 * p_1qb + 7.0 * p_meas)
    return q_logical * (t_gate_multiplier * dyn + QUBIT_GROWTH**k * p_qubit)


def required_concatenation(p_err: float, q_logical: float, d_logical: float,
                           target: float, k_max: int = 20,
                           p_thr: float = P_THRESHOLD) -> int:
    """Smallest level k whose metric reaches ``target``.

    Raises :class:`AboveThresholdError` when the physical error rate is
    at or above threshold and the uncorrected circuit already misses the
    target, since concatenating then only makes things worse.
    """
    for k in range(k_max + 1):
        if ft_metric(p_err, k, q_logical, d_logical, p_thr=p_thr) >= target:
            return k
        if p_err >= p_thr and k == 0:
            raise AboveThresholdError(
                "physical error probability is not below threshold; "
                "no concatenation level reaches the target metric")
    raise AboveThresholdError(
        f"target metric not reachable within k <= {k_max}")


def transfer_matrix_floats() -> np.ndarray:
    """Transfer matrix as a float array (for spectral checks)."""
    return np.array([[float(x) for x in row] for row in TRANSFER_MATRIX])
