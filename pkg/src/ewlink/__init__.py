"""Decibel link budgets for radar, radar-warning receiver and noise-jammer engagements."""

from .db_units import PowerLevel, PowerReference, power_sum_db, ratio_to_db, watts_to_dbw
from .errors import ConfigError, DomainError, UsageError
from .links import JammerSystem, LinkBudget, RadarSystem, RwrSystem, jammer_link, radar_link, rwr_link, telecom_link
from .noise_metrics import NoiseModel, burnthrough_range, jsr, noise_stack, sjr, snr
from .propagation import AntennaSpec, PathGeometry, TargetSpec, free_space_loss, gain_from_beamwidths, target_gain
from .scenario import Scenario, export_csv, run_sweep, table1_scenario

__version__ = "0.1.0"
