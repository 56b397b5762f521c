# SPDX-License-Identifier: Apache-2.0
"""Shannon capacity of ISAC links (automotive RadCom and 802.11bd)."""

from ._core import (
    CapacityEstimate,
    DomainError,
    GainModel,
    LinkProfile,
    ReportError,
    ScenarioError,
    UnknownProfile,
    apply_duty_cycle,
    backsolve_tx_power,
    binned_capacity,
    builtin_profile,
    builtin_radcom,
    builtin_wifi_bd,
    capacity_vs_distance,
    continuous_capacity,
    db_to_linear,
    effective_throughput,
    linear_to_db,
    noise_power,
    oracle_capacity,
    parse_scenario,
    path_power_gain,
    relative_diff,
    reproduce_table,
    run_sweep,
    snr,
    verify_all_tables,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
