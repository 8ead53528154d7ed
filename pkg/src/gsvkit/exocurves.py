"""Chart atlases for the exocurves and their compactifications.

The exocurve over a singular ray is the weight (-5, 1) projectivization of
the (p, ray) plane.  Everything the atlases record is combinatorial: which
of the two candidate charts is proper in each sheet, the monomial gluing
map of exponent +-5, and the order of the orbifold group carried by a
chart.  The fractional power behind the p-chart coordinate is never
evaluated; only its fifth power enters any computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from .cyclo import Cyclo
from .errors import BranchPointError, GsvInputError, WrongModelError
from .strata import normalize_sheet


class Model(str, Enum):
    A_PLUS = "A_plus"
    A_MINUS = "A_minus"
    P151 = "P151"
    COMPACTIFIED_A_PLUS = "CompactifiedA_plus"


@dataclass(frozen=True)
class Chart:
    name: str
    coordinate: str
    proper: bool               # contains its limit point
    orbifold_group_order: int = 1

    @property
    def punctured(self) -> bool:
        return not self.proper

    def to_json_dict(self):
        return {"name": self.name, "proper": self.proper,
                "orbifold_order": self.orbifold_group_order}


@dataclass(frozen=True)
class Transition:
    source: str
    target: str
    exponent: int  # target coordinate = (source coordinate) ** exponent

    def to_json_dict(self):
        return {"from": self.source, "to": self.target, "exponent": self.exponent}


@dataclass(frozen=True)
class Atlas:
    model: Model
    charts: Tuple[Chart, ...]
    transitions: Tuple[Transition, ...]
    global_type: str

    def chart(self, name: str) -> Chart:
        for c in self.charts:
            if c.name == name:
                return c
        raise GsvInputError(f"atlas {self.model.value} has no chart {name!r}")

    @property
    def compact(self) -> bool:
        return all(c.proper for c in self.charts)

    def euler_characteristic(self) -> int:
        # chart decomposition: proper charts are cones over a point (chi 1),
        # punctured charts and all overlaps are C*-like (chi 0)
        return sum(1 for c in self.charts if c.proper)

    def orbifold_points(self) -> Tuple[str, ...]:
        return tuple(c.name for c in self.charts
                     if c.proper and c.orbifold_group_order > 1)

    def to_json_dict(self):
        return {
            "model": self.model.value,
            "charts": [c.to_json_dict() for c in self.charts],
            "transitions": [t.to_json_dict() for t in self.transitions],
            "global_type": self.global_type,
        }


def build_exocurve(sheet) -> Atlas:
    """The exocurve atlas for one sheet: C^1 for r>0, C^1/Z_5 for r<0."""
    sheet = normalize_sheet(sheet)
    u_p = "U_p"
    u_s = "U_s"
    glue = (Transition(u_p, u_s, 5),)
    if sheet > 0:
        charts = (Chart(u_s, "u_s", proper=True),
                  Chart(u_p, "u_p", proper=False))
        return Atlas(Model.A_PLUS, charts, glue, "C^1")
    charts = (Chart(u_p, "u_p", proper=True, orbifold_group_order=5),
              Chart(u_s, "u_s", proper=False))
    return Atlas(Model.A_MINUS, charts, glue, "C^1/Z_5")


def build_comparison_p151() -> Atlas:
    """The compact weighted line with weights (5, 1), for comparison."""
    charts = (Chart("U_s", "u_s", proper=True),
              Chart("U_q", "u_q", proper=True, orbifold_group_order=5))
    return Atlas(Model.P151, charts, (Transition("U_q", "U_s", -5),), "P^1")


def compactify(atlas: Atlas) -> Atlas:
    """One-point compactification of the r>0 exocurve: adjoin the inverted
    p-chart modulo Z_5, producing a compact atlas of global type P^1."""
    if atlas.model is not Model.A_PLUS:
        raise WrongModelError(
            f"compactify expects the noncompact r>0 exocurve, got {atlas.model.value}")
    charts = (Chart("U_s", "u_s", proper=True),
              Chart("U_p_tilde", "w_p", proper=True, orbifold_group_order=5))
    return Atlas(Model.COMPACTIFIED_A_PLUS, charts,
                 (Transition("U_p_tilde", "U_s", -5),), "P^1")


def transition(atlas: Atlas, source: str, value: Cyclo) -> Cyclo:
    """Apply the stored monomial gluing map to a chart coordinate value.

    The map is 1-to-5 away from the branch point; a whole orbit of
    root-of-unity multiples collapses to one image.
    """
    atlas.chart(source)
    for t in atlas.transitions:
        if t.source == source:
            if value.is_zero() and (t.exponent < 0 or atlas.chart(t.target).punctured):
                # negative exponent: pole at 0; punctured target: the image
                # of the branch point is the excluded limit point
                raise BranchPointError(
                    f"{t.source} -> {t.target} is undefined at the branch point 0")
            return value ** t.exponent
    raise GsvInputError(
        f"atlas {atlas.model.value} stores no transition out of {source!r}")


def deficit_angle(chart: Chart) -> Fraction:
    """Cone angle deficit at the chart's orbifold point, in units of pi.

    An order-m quotient point has deficit (1 - 1/m) * 2 pi; m = 1 gives a
    smooth point with deficit 0.
    """
    m = chart.orbifold_group_order
    if m < 1:
        raise GsvInputError("orbifold group order must be >= 1")
    return Fraction(2 * (m - 1), m)
