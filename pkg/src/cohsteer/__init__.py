"""Coherence-based steering criteria for two-qubit states and a virtual photonic test bench."""

from .coherence import Measure, PauliAxis
from .states import bell_like, fidelity
from .steering import steering_report

__version__ = "0.1.0"

__all__ = ["Measure", "PauliAxis", "bell_like", "fidelity", "steering_report", "__version__"]
