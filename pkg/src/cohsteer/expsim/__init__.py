"""Virtual photonic experiment: wave-plate optics, counting, tomography, sweeps."""

from .counting import CountRecord, bootstrap_errors, simulate_counts
from .experiment import ConfigError, ExperimentConfig, run_virtual_experiment
from .optics import JonesConvention, WavePlateSetting, select_tomography_convention, waveplate_jones
from .tomography import InsufficientCountsError, project_to_physical, tomo_1q, tomo_2q

__all__ = [
    "ConfigError",
    "CountRecord",
    "ExperimentConfig",
    "InsufficientCountsError",
    "JonesConvention",
    "WavePlateSetting",
    "bootstrap_errors",
    "project_to_physical",
    "run_virtual_experiment",
    "select_tomography_convention",
    "simulate_counts",
    "tomo_1q",
    "tomo_2q",
    "waveplate_jones",
]
