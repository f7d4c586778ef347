"""Run configuration: a flat, sectioned key-value file with ``#`` comments.

All keys carry explicit SI-unit suffixes (``gamma_inverse_s``,
``t_ext_k``) so nothing is implicit; attenuation bounds may be given in
dB or natural units through distinct keys.  Unknown sections or keys
are rejected, and validation reports every violation at once rather
than stopping at the first.  An empty file reproduces the default
hardware table: 6 GHz qubits, 25/100/100 ns gate/measure times, a
50 ms lifetime, five cooling stages, scenario A electronics, and a
Carnot-efficient cryostat.
"""

from __future__ import annotations

import configparser
import dataclasses
import io
import math
from dataclasses import dataclass

from .noise import QubitTechnology
from .optimize import FtToggles, GridOptions
from .thermal import CableModel, CryoEfficiencyModel, ElectronicsScenario, SCENARIO_PRESETS
from .workloads import Workload, rsa_workload


class ConfigError(ValueError):
    """Carries the full list of validation problems."""

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("invalid configuration:\n  " + "\n  ".join(problems))


@dataclass(frozen=True)
class RunConfig:
    # [technology]
    frequency_hz: float = 6e9
    gamma_inverse_s: float = 0.05
    tau_1qb_s: float = 25e-9
    tau_2qb_s: float = 100e-9
    tau_meas_s: float = 100e-9
    # [chain]
    stages: int = 5
    t_ext_k: float = 300.0
    t_qb_min_k: float = 1e-3
    t_qb_max_k: float = 4.0
    t_gen_min_k: float = 4.0
    t_gen_max_k: float = 300.0
    attenuation_min_db: float = 0.0
    attenuation_max_db: float = 120.0
    # [scenario]
    scenario: str = "A"
    q_gen_w: float | None = None
    q_para_w: float | None = None
    q_hemt_w: float | None = None
    # [cable]
    cable_length_m: float = 1.0
    control_lines_per_qubit: float = 1.0 / 25.0
    readout_lines_per_qubit: float = 1.0 / 100.0
    # [efficiency]
    efficiency_model: str = "carnot"
    extra_qubit_heat_w: float = 5e-8
    # [workload]
    workload_kind: str = "rsa"  # rsa | rectangular | nisq | gate
    rsa_n: int = 2048
    rsa_variant: str = "gidney"
    q_logical: int = 1
    d_logical: int = 1
    nisq_qubits: int = 25
    # [target]
    target_metric: float = 2.0 / 3.0
    # [optimizer]
    temperature_points_per_decade: int = 40
    refinement_passes: int = 2
    k_min: int = 0
    k_max: int = 6
    # [toggles]
    include_demod_syndrome: bool = False
    t_gate_multiplier: float = 1.0
    two_qubit_drive_duration: str = "tau_1qb"
    rsa_log_base: str = "2"  # '2' or 'e'
    steps_per_logical_level: float = 3.0
    ft_metric_form: str = "linear"

    # ---- domain-object builders ----

    def technology(self) -> QubitTechnology:
        return QubitTechnology(
            omega0=2.0 * math.pi * self.frequency_hz,
            gamma=1.0 / self.gamma_inverse_s,
            tau_1qb=self.tau_1qb_s,
            tau_2qb=self.tau_2qb_s,
            tau_meas=self.tau_meas_s,
        )

    def electronics(self) -> ElectronicsScenario:
        if self.scenario.lower() == "custom":
            return ElectronicsScenario("custom", self.q_gen_w, self.q_para_w,
                                       self.q_hemt_w or 0.0)
        return ElectronicsScenario.preset(self.scenario)

    def cable(self) -> CableModel:
        return CableModel(
            length_m=self.cable_length_m,
            control_lines_per_qubit=self.control_lines_per_qubit,
            readout_lines_per_qubit=self.readout_lines_per_qubit,
        )

    def efficiency(self) -> CryoEfficiencyModel:
        return CryoEfficiencyModel(self.efficiency_model,
                                   extra_qubit_heat_w=self.extra_qubit_heat_w)

    def workload(self) -> Workload:
        if self.workload_kind == "rsa":
            base = 2.0 if self.rsa_log_base == "2" else math.e
            return rsa_workload(self.rsa_n, self.rsa_variant, log_base=base)
        if self.workload_kind == "rectangular":
            return Workload(self.q_logical, self.d_logical, label="rectangular")
        raise ValueError(f"no rectangular workload for kind {self.workload_kind!r}")

    def grid_options(self) -> GridOptions:
        return GridOptions(
            temperature_points_per_decade=self.temperature_points_per_decade,
            refinement_passes=self.refinement_passes,
            k_min=self.k_min,
            k_max=self.k_max,
            t_qb_bounds=(self.t_qb_min_k, self.t_qb_max_k),
            t_gen_bounds=(self.t_gen_min_k, self.t_gen_max_k),
            attenuation_bounds=(10.0 ** (self.attenuation_min_db / 10.0),
                                10.0 ** (self.attenuation_max_db / 10.0)),
        )

    def ft_toggles(self) -> FtToggles:
        return FtToggles(
            t_gate_multiplier=self.t_gate_multiplier,
            two_qubit_drive_duration=self.two_qubit_drive_duration,
            include_demod_syndrome=self.include_demod_syndrome,
            metric_form=self.ft_metric_form,
            steps_per_logical_level=self.steps_per_logical_level,
            k_stages=self.stages,
            t_ext=self.t_ext_k,
        )

    def replace(self, **kwargs) -> "RunConfig":
        return dataclasses.replace(self, **kwargs)


#: section -> {key: RunConfig field}.  The attenuation bound keys accept
#: either dB or natural units, hence the aliases below.
_SCHEMA = {
    "technology": {
        "frequency_hz": "frequency_hz",
        "gamma_inverse_s": "gamma_inverse_s",
        "tau_1qb_s": "tau_1qb_s",
        "tau_2qb_s": "tau_2qb_s",
        "tau_meas_s": "tau_meas_s",
    },
    "chain": {
        "stages": "stages",
        "t_ext_k": "t_ext_k",
        "t_qb_min_k": "t_qb_min_k",
        "t_qb_max_k": "t_qb_max_k",
        "t_gen_min_k": "t_gen_min_k",
        "t_gen_max_k": "t_gen_max_k",
        "attenuation_min_db": "attenuation_min_db",
        "attenuation_max_db": "attenuation_max_db",
        "attenuation_min": "attenuation_min_db",
        "attenuation_max": "attenuation_max_db",
    },
    "scenario": {
        "name": "scenario",
        "q_gen_w": "q_gen_w",
        "q_para_w": "q_para_w",
        "q_hemt_w": "q_hemt_w",
    },
    "cable": {
        "length_m": "cable_length_m",
        "control_lines_per_qubit": "control_lines_per_qubit",
        "readout_lines_per_qubit": "readout_lines_per_qubit",
    },
    "efficiency": {
        "model": "efficiency_model",
        "extra_qubit_heat_w": "extra_qubit_heat_w",
    },
    "workload": {
        "kind": "workload_kind",
        "rsa_n": "rsa_n",
        "rsa_variant": "rsa_variant",
        "q_logical": "q_logical",
        "d_logical": "d_logical",
        "nisq_qubits": "nisq_qubits",
    },
    "target": {"metric": "target_metric"},
    "optimizer": {
        "temperature_points_per_decade": "temperature_points_per_decade",
        "refinement_passes": "refinement_passes",
        "k_min": "k_min",
        "k_max": "k_max",
    },
    "toggles": {
        "include_demod_syndrome": "include_demod_syndrome",
        "t_gate_multiplier": "t_gate_multiplier",
        "two_qubit_drive_duration": "two_qubit_drive_duration",
        "rsa_log_base": "rsa_log_base",
        "steps_per_logical_level": "steps_per_logical_level",
        "ft_metric_form": "ft_metric_form",
    },
}

_INT_FIELDS = {"stages", "rsa_n", "q_logical", "d_logical", "nisq_qubits",
               "temperature_points_per_decade", "refinement_passes", "k_min",
               "k_max"}
_BOOL_FIELDS = {"include_demod_syndrome"}
_STR_FIELDS = {"scenario", "rsa_variant", "workload_kind", "efficiency_model",
               "two_qubit_drive_duration", "rsa_log_base", "ft_metric_form"}


def _coerce(field_name: str, raw: str, problems: list[str]):
    raw = raw.strip()
    if field_name in _STR_FIELDS:
        return raw
    if field_name in _BOOL_FIELDS:
        if raw.lower() in ("true", "yes", "on", "1"):
            return True
        if raw.lower() in ("false", "no", "off", "0"):
            return False
        problems.append(f"{field_name}: expected a boolean, got {raw!r}")
        return None
    try:
        value = float(raw)
    except ValueError:
        problems.append(f"{field_name}: expected a number, got {raw!r}")
        return None
    if field_name in _INT_FIELDS:
        if value != int(value):
            problems.append(f"{field_name}: expected an integer, got {raw!r}")
            return None
        return int(value)
    return value


def _validate(cfg: RunConfig, problems: list[str]) -> None:
    positive = [
        "frequency_hz", "gamma_inverse_s", "tau_1qb_s", "tau_2qb_s",
        "tau_meas_s", "t_ext_k", "t_qb_min_k", "t_qb_max_k", "t_gen_min_k",
        "t_gen_max_k", "cable_length_m", "rsa_n", "q_logical", "d_logical",
        "nisq_qubits", "temperature_points_per_decade",
        "steps_per_logical_level",
    ]
    sections = {f: s for s, keys in _SCHEMA.items() for f in keys.values()}
    for name in positive:
        if getattr(cfg, name) <= 0:
            problems.append(f"{sections.get(name, '?')}.{name}: must be > 0")
    if cfg.stages < 2:
        problems.append("chain.stages: need at least 2 cooling stages")
    if cfg.t_qb_min_k > cfg.t_qb_max_k:
        problems.append("chain.t_qb_min_k exceeds chain.t_qb_max_k")
    if cfg.t_gen_min_k > cfg.t_gen_max_k:
        problems.append("chain.t_gen_min_k exceeds chain.t_gen_max_k")
    if cfg.t_gen_min_k <= cfg.t_qb_min_k:
        problems.append("chain.t_gen_min_k must exceed chain.t_qb_min_k")
    if cfg.t_gen_max_k > cfg.t_ext_k:
        problems.append("chain.t_gen_max_k exceeds the ambient t_ext_k")
    if cfg.attenuation_min_db < 0 or cfg.attenuation_max_db < cfg.attenuation_min_db:
        problems.append("chain: attenuation bounds must satisfy 0 <= min <= max")
    name = cfg.scenario.lower()
    if name == "custom":
        if cfg.q_gen_w is None or cfg.q_para_w is None:
            problems.append("scenario: custom requires q_gen_w and q_para_w")
        elif min(cfg.q_gen_w, cfg.q_para_w, cfg.q_hemt_w or 0.0) < 0:
            problems.append("scenario: heat loads must be nonnegative")
    elif name.upper() not in SCENARIO_PRESETS:
        problems.append(f"scenario.name: unknown scenario {cfg.scenario!r}")
    elif any(v is not None for v in (cfg.q_gen_w, cfg.q_para_w, cfg.q_hemt_w)):
        problems.append("scenario: heat loads may only accompany name = custom")
    if cfg.efficiency_model not in ("carnot", "small_scale"):
        problems.append("efficiency.model: must be carnot or small_scale")
    if cfg.extra_qubit_heat_w < 0:
        problems.append("efficiency.extra_qubit_heat_w: must be >= 0")
    if cfg.workload_kind not in ("rsa", "rectangular", "nisq", "gate"):
        problems.append("workload.kind: must be rsa, rectangular, nisq, or gate")
    if cfg.rsa_variant not in ("gidney", "haner"):
        problems.append("workload.rsa_variant: must be gidney or haner")
    if cfg.nisq_qubits < 3:
        problems.append("workload.nisq_qubits: the circuit needs at least 3 qubits")
    if not (0 <= cfg.target_metric < 1):
        problems.append("target.metric: must lie in [0, 1)")
    if cfg.refinement_passes < 0:
        problems.append("optimizer.refinement_passes: must be >= 0")
    if not (0 <= cfg.k_min <= cfg.k_max):
        problems.append("optimizer: need 0 <= k_min <= k_max")
    if not (1.0 <= cfg.t_gate_multiplier <= 10.0):
        problems.append("toggles.t_gate_multiplier: must lie in [1, 10]")
    if cfg.two_qubit_drive_duration not in ("tau_1qb", "tau_2qb"):
        problems.append("toggles.two_qubit_drive_duration: tau_1qb or tau_2qb")
    if cfg.rsa_log_base not in ("2", "e"):
        problems.append("toggles.rsa_log_base: must be 2 or e")
    if cfg.ft_metric_form not in ("linear", "exact"):
        problems.append("toggles.ft_metric_form: must be linear or exact")


def load_config(path: str | None = None, text: str | None = None) -> RunConfig:
    """Parse and fully validate a configuration file (or literal text).

    Omitted keys take their defaults; ``None`` loads pure defaults.
    Raises :class:`ConfigError` listing every violation found.
    """
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",),
                                       interpolation=None)
    if text is not None:
        parser.read_string(text)
    elif path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            parser.read_file(fh)
    problems: list[str] = []
    values: dict = {}
    for section in parser.sections():
        if section not in _SCHEMA:
            problems.append(f"unknown section [{section}]")
            continue
        for key, raw in parser.items(section):
            field_name = _SCHEMA[section].get(key)
            if field_name is None:
                problems.append(f"unknown key {section}.{key}")
                continue
            if field_name in values:
                problems.append(
                    f"{section}.{key}: duplicates another key setting {field_name}")
                continue
            if key in ("attenuation_min", "attenuation_max"):
                coerced = _db_from_natural(key, raw, problems)
            else:
                coerced = _coerce(field_name, raw, problems)
            if coerced is not None:
                values[field_name] = coerced
    cfg = RunConfig(**values)
    _validate(cfg, problems)
    if problems:
        raise ConfigError(problems)
    return cfg


def _db_from_natural(key: str, raw: str, problems: list[str]):
    try:
        value = float(raw)
    except ValueError:
        problems.append(f"{key}: expected a number, got {raw!r}")
        return None
    if value < 1:
        problems.append(f"{key}: natural-unit attenuation must be >= 1")
        return None
    return 10.0 * math.log10(value)


def show_config(cfg: RunConfig) -> str:
    """Render the fully resolved configuration in the file format."""
    out = io.StringIO()
    canonical: dict[str, list[tuple[str, str]]] = {}
    skip_aliases = {"attenuation_min", "attenuation_max"}
    for section, keys in _SCHEMA.items():
        rows = []
        for key, field_name in keys.items():
            if key in skip_aliases:
                continue
            value = getattr(cfg, field_name)
            if value is None:
                continue
            if isinstance(value, bool):
                value = "true" if value else "false"
            rows.append((key, str(value)))
        canonical[section] = rows
    for section, rows in canonical.items():
        out.write(f"[{section}]\n")
        for key, value in rows:
            out.write(f"{key} = {value}\n")
        out.write("\n")
    return out.getvalue()
