"""Power and energy modeling of full-stack cryogenic quantum computers.

The library computes computation metrics from an analytic qubit-noise
model, macroscopic power from a cryogenics-and-electronics hardware
model, and minimizes power under a target-metric constraint for single
gates, noisy circuits, and fault-tolerant computations.
"""

from .noise import (
    QubitTechnology,
    bose_einstein,
    chain_occupancy,
    pauli_error_probability,
    pi_pulse_power,
    single_attenuator_occupancy,
    worst_case_infidelity_1qb,
)
from .qec import (
    AboveThresholdError,
    CodeParameters,
    LogicalGateCounts,
    ft_metric,
    ft_power,
    logical_error_probability,
    physical_gate_counts_exact,
    physical_gate_counts_rectangular,
    physical_qubits,
    required_concatenation,
)
from .thermal import (
    CableModel,
    CryoChain,
    CryoEfficiencyModel,
    ElectronicsScenario,
    StageRecord,
    cable_heat_flow,
    cooling_power,
    demodulation_power_per_qubit,
    fiber_bitrate_per_qubit,
    gate_power_1qb,
    gate_power_2qb,
    measurement_power,
    per_qubit_static_power,
    stage_layout,
    syndrome_power_per_qubit,
)
from .workloads import (
    NisqCircuit,
    Workload,
    classical_energy_time,
    gnfs_operations,
    nisq_circuit,
    nisq_metric,
    nisq_power,
    rsa_workload,
)
from .optimize import (
    ControlPoint,
    FtToggles,
    GridOptions,
    OptimizationResult,
    bare_efficiency_max,
    evaluate_ft_point,
    ft_duration_s,
    optimize_ft,
    optimize_nisq,
    optimize_single_qubit,
    rsa_energy_summary,
    transition_size_estimate,
)

__version__ = "0.1.0"
