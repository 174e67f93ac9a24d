"""Jones calculus for the wave-plate settings that realise the Pauli projectors.

Two lookup tables are checked here:

* the projective-measurement module, where plate ``w1`` in front of a PBS
  rotates the measured eigenstate onto |H> and plate ``w2`` behind it
  re-prepares that eigenstate;
* the tomography module, a QWP/HWP cascade in front of a PBS whose
  transmitted port defines the projector.

Which circular handedness and cascade order reproduce the labelled
projectors is settled by :func:`select_tomography_convention`, not assumed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ..coherence import PauliAxis
from ..states import KET_H
from ..steering import pauli_projector

MATCH_TOL = 1e-10


class PlateKind(enum.Enum):
    HWP = "HWP"
    QWP = "QWP"


@dataclass(frozen=True)
class WavePlateSetting:
    kind: PlateKind
    angle: float  # degrees, optical axis relative to horizontal

    def __post_init__(self):
        if not -90.0 <= self.angle <= 90.0:
            raise ValueError(f"wave-plate angle {self.angle} outside [-90, 90] degrees")


def waveplate_jones(kind, angle_deg: float, handedness: int = 1) -> np.ndarray:
    """Jones matrix of a half- or quarter-wave plate with its fast axis at ``angle_deg``.

    ``handedness=-1`` returns the complex conjugate, i.e. the same plate
    described with the opposite sign of retardance (mirror-image frame).
    """
    kind = PlateKind(kind) if not isinstance(kind, PlateKind) else kind
    t = np.deg2rad(angle_deg)
    c, s = np.cos(t), np.sin(t)
    if kind is PlateKind.HWP:
        m = np.array([[np.cos(2 * t), np.sin(2 * t)], [np.sin(2 * t), -np.cos(2 * t)]], dtype=complex)
    else:
        m = np.exp(-1j * np.pi / 4) * np.array(
            [[c * c + 1j * s * s, (1 - 1j) * s * c], [(1 - 1j) * s * c, s * s + 1j * c * c]]
        )
    if handedness == -1:
        return m.conj()
    if handedness != 1:
        raise ValueError("handedness must be +1 or -1")
    return m


def analyzer_projector(unitary: np.ndarray) -> np.ndarray:
    """Projector selected by ``unitary`` followed by a PBS transmitting |H>."""
    ket = unitary.conj().T @ KET_H
    return np.outer(ket, ket.conj())


def identify_projector(proj: np.ndarray, tol: float = MATCH_TOL):
    """Return the ``(axis, outcome)`` whose Pauli projector equals ``proj``, else ``None``."""
    for ax in PauliAxis:
        for a in (0, 1):
            if np.max(np.abs(proj - pauli_projector(ax, a))) <= tol:
                return ax, a
    return None


def _same_ray(u, v, tol: float = MATCH_TOL) -> bool:
    return abs(abs(np.vdot(u, v)) - 1.0) <= tol


# Measurement module: label -> (w1, w2)
TABLE_PMO = {
    (PauliAxis.X, 0): (WavePlateSetting(PlateKind.HWP, 22.5), WavePlateSetting(PlateKind.HWP, 22.5)),
    (PauliAxis.X, 1): (WavePlateSetting(PlateKind.HWP, -22.5), WavePlateSetting(PlateKind.HWP, -22.5)),
    (PauliAxis.Y, 0): (WavePlateSetting(PlateKind.QWP, 45.0), WavePlateSetting(PlateKind.QWP, -45.0)),
    (PauliAxis.Y, 1): (WavePlateSetting(PlateKind.QWP, -45.0), WavePlateSetting(PlateKind.QWP, 45.0)),
    (PauliAxis.Z, 0): (WavePlateSetting(PlateKind.HWP, 0.0), WavePlateSetting(PlateKind.HWP, 0.0)),
    (PauliAxis.Z, 1): (WavePlateSetting(PlateKind.HWP, 45.0), WavePlateSetting(PlateKind.HWP, 45.0)),
}

# Tomography module: label -> (HWP angle, QWP angle)
TABLE_TOMOGRAPHY = {
    (PauliAxis.X, 0): (22.5, 45.0),
    (PauliAxis.X, 1): (-22.5, 45.0),
    (PauliAxis.Y, 0): (22.5, 0.0),
    (PauliAxis.Y, 1): (-22.5, 0.0),
    (PauliAxis.Z, 0): (0.0, 0.0),
    (PauliAxis.Z, 1): (45.0, 0.0),
}


def verify_pmo_table(w1: WavePlateSetting, w2: WavePlateSetting | None = None, handedness: int = 1):
    """Identify the projector realised by ``w1`` in front of the PBS.

    If ``w2`` is given it must re-prepare the measured eigenstate from |H>
    (up to a global phase); a mismatch raises ``ValueError``.
    """
    u1 = waveplate_jones(w1.kind, w1.angle, handedness)
    proj = analyzer_projector(u1)
    label = identify_projector(proj)
    if label is None:
        raise ValueError(f"{w1} does not realise any Pauli projector")
    if w2 is not None:
        ket = waveplate_jones(w2.kind, w2.angle, handedness) @ KET_H
        expected = label[0].eigenbasis[:, label[1]]
        if not _same_ray(ket, expected):
            raise ValueError(f"{w2} does not re-prepare the eigenstate measured by {w1}")
    return label


@dataclass(frozen=True)
class JonesConvention:
    """How the tomography cascade is modelled.

    ``order`` is the sequence in which the photon meets the plates before the
    PBS; ``handedness`` is the retardance sign used for the plates.
    """

    order: str = "qwp_first"
    handedness: int = -1

    def __post_init__(self):
        if self.order not in ("qwp_first", "hwp_first"):
            raise ValueError(f"unknown cascade order {self.order!r}")
        if self.handedness not in (1, -1):
            raise ValueError("handedness must be +1 or -1")

    def flipped(self) -> "JonesConvention":
        return JonesConvention(self.order, -self.handedness)

    def as_dict(self) -> dict:
        return {"order": self.order, "handedness": self.handedness}


# Candidates in the order they are tried: the plain textbook retardance sign
# first, then the mirror-frame sign.
CANDIDATE_CONVENTIONS = (
    JonesConvention("qwp_first", 1),
    JonesConvention("hwp_first", 1),
    JonesConvention("qwp_first", -1),
    JonesConvention("hwp_first", -1),
)


def cascade_unitary(hwp_angle: float, qwp_angle: float, convention: JonesConvention) -> np.ndarray:
    h = waveplate_jones(PlateKind.HWP, hwp_angle, convention.handedness)
    q = waveplate_jones(PlateKind.QWP, qwp_angle, convention.handedness)
    return h @ q if convention.order == "qwp_first" else q @ h


def tomography_projector(hwp_angle: float, qwp_angle: float, convention: JonesConvention) -> np.ndarray:
    return analyzer_projector(cascade_unitary(hwp_angle, qwp_angle, convention))


def verify_tomography_table(hwp_angle: float, qwp_angle: float, convention: JonesConvention | None = None):
    """Return the ``(axis, outcome)`` realised by the cascade, or ``None`` if it matches no PMO."""
    convention = convention or JonesConvention()
    return identify_projector(tomography_projector(hwp_angle, qwp_angle, convention))


@dataclass(frozen=True)
class TableCheck:
    table: str
    label: tuple
    realised: tuple | None

    @property
    def ok(self) -> bool:
        return self.realised == self.label


def check_pmo_table(handedness: int = 1) -> list[TableCheck]:
    out = []
    for label, (w1, w2) in TABLE_PMO.items():
        try:
            realised = verify_pmo_table(w1, w2, handedness)
        except ValueError:
            realised = None
        out.append(TableCheck("pmo", label, realised))
    return out


def check_tomography_table(convention: JonesConvention) -> list[TableCheck]:
    return [
        TableCheck("tomography", label, verify_tomography_table(h, q, convention))
        for label, (h, q) in TABLE_TOMOGRAPHY.items()
    ]


def select_tomography_convention() -> JonesConvention:
    """First candidate convention under which every tomography setting matches its label."""
    for conv in CANDIDATE_CONVENTIONS:
        if all(c.ok for c in check_tomography_table(conv)):
            return conv
    raise RuntimeError("no candidate Jones convention reproduces the tomography table")


def measurement_projectors(convention: JonesConvention) -> dict:
    """``{(axis, outcome): projector}`` realised by the tomography wave plates."""
    return {
        label: tomography_projector(h, q, convention) for label, (h, q) in TABLE_TOMOGRAPHY.items()
    }
