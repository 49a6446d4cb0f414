"""Design and frequency sweeps with golden-section peak refinement.

A sweep evaluates one objective over a grid of one parameter while holding
everything else fixed. Points that cannot be evaluated (resonance guard,
model-domain aborts, no completed cycles) become status-flagged rows instead
of aborting the whole sweep, because sweeps routinely cross those boundaries
on purpose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, NamedTuple

from . import regime1, regime2
from .params import BrushParams, MotorParams, RobotParams, ValidationError

PARAMETERS = ("omega", "alpha", "l", "EI", "M_b")
OBJECTIVES = ("v_r_regime1", "v_r_regime2", "forced_amplitude_abs", "k_theta")

STATUS_OK = "ok"
STATUS_RESONANCE = "resonance_guard"
STATUS_MODEL_DOMAIN = "model_domain"
STATUS_NO_CYCLES = "no_cycles"
STATUS_INVALID = "invalid"

_GRID_DOMAIN: dict[str, Callable[[float], bool]] = {
    "omega": lambda v: v > 0.0,
    "alpha": lambda v: 0.0 < v < math.pi / 2.0,
    "l": lambda v: v > 0.0,
    "EI": lambda v: v > 0.0,
    "M_b": lambda v: v > 0.0,
}


@dataclass(frozen=True)
class SweepSpec:
    """One swept parameter, its grid and the objective to evaluate."""

    parameter: str
    objective: str
    grid: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.parameter not in PARAMETERS:
            raise ValidationError(
                f"unknown sweep parameter {self.parameter!r}; "
                f"expected one of {', '.join(PARAMETERS)}"
            )
        if self.objective not in OBJECTIVES:
            raise ValidationError(
                f"unknown sweep objective {self.objective!r}; "
                f"expected one of {', '.join(OBJECTIVES)}"
            )
        if len(self.grid) < 1:
            raise ValidationError("sweep grid must contain at least one value")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValidationError("sweep grid must be strictly increasing")
        domain = _GRID_DOMAIN[self.parameter]
        for value in self.grid:
            if not domain(value):
                raise ValidationError(
                    f"grid value {value!r} out of domain for parameter "
                    f"{self.parameter!r}"
                )

    @classmethod
    def from_range(
        cls,
        parameter: str,
        objective: str,
        start: float,
        stop: float,
        points: int,
        spacing: str = "linear",
    ) -> "SweepSpec":
        """Build a grid of >= 2 points with linear or log spacing."""
        if points < 2:
            raise ValidationError("sweep range needs at least 2 points")
        if not stop > start:
            raise ValidationError("sweep range needs stop > start")
        if spacing == "linear":
            step = (stop - start) / (points - 1)
            grid = [start + i * step for i in range(points)]
        elif spacing == "log":
            if start <= 0.0:
                raise ValidationError("log spacing needs start > 0")
            ratio = (stop / start) ** (1.0 / (points - 1))
            grid = [start * ratio**i for i in range(points)]
        else:
            raise ValidationError(
                f"unknown spacing {spacing!r}; expected linear or log"
            )
        grid[-1] = stop  # kill accumulation error at the endpoint
        return cls(parameter=parameter, objective=objective, grid=tuple(grid))


class SweepRow(NamedTuple):
    value: float
    objective: float | None
    status: str


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    objective: str
    rows: tuple[SweepRow, ...]
    argmax: float | None


def _apply_parameter(
    parameter: str, value: float, brush: BrushParams, motor: MotorParams
) -> tuple[BrushParams, MotorParams]:
    if parameter == "omega":
        return brush, replace(motor, speed=value)
    if parameter == "alpha":
        return replace(brush, inclination=value), motor
    if parameter == "l":
        return replace(brush, length=value), motor
    if parameter == "EI":
        return replace(brush, young_modulus=value / brush.second_area_moment), motor
    if parameter == "M_b":
        return replace(brush, brush_mass=value), motor
    raise ValidationError(f"unknown sweep parameter {parameter!r}")


def _make_objective(
    spec: SweepSpec,
    brush: BrushParams,
    motor: MotorParams,
    robot: RobotParams | None,
    sim: regime2.SimConfig | None,
) -> Callable[[float], float]:
    if spec.objective == "v_r_regime2" and (robot is None or sim is None):
        raise ValidationError(
            "objective v_r_regime2 needs robot and sim parameters"
        )

    def evaluate(value: float) -> float:
        b, m = _apply_parameter(spec.parameter, value, brush, motor)
        if spec.objective == "v_r_regime1":
            return regime1.ground_speed(b, m)
        if spec.objective == "forced_amplitude_abs":
            return abs(regime1.forced_amplitude(b, m))
        if spec.objective == "k_theta":
            return regime1.lumped_stiffness(b)
        traj = regime2.simulate(robot, m, sim)
        return regime2.ground_speed(robot, m, regime2.peak_angle(traj))

    return evaluate


def run_sweep(
    spec: SweepSpec,
    brush: BrushParams,
    motor: MotorParams,
    robot: RobotParams | None = None,
    sim: regime2.SimConfig | None = None,
) -> SweepResult:
    """Evaluate the objective at every grid point, flagging failed points.

    Rows come back in grid order; grid points are independent, so the result
    does not depend on evaluation order. argmax is the parameter value of the
    best ok row, or None if no point evaluated.
    """
    evaluate = _make_objective(spec, brush, motor, robot, sim)
    rows = []
    best_value: float | None = None
    best_objective = -math.inf
    for value in spec.grid:
        try:
            objective = evaluate(value)
        except regime1.ResonanceError:
            rows.append(SweepRow(value, None, STATUS_RESONANCE))
            continue
        except regime2.ModelDomainError:
            rows.append(SweepRow(value, None, STATUS_MODEL_DOMAIN))
            continue
        except regime2.NoCompletedCycleError:
            rows.append(SweepRow(value, None, STATUS_NO_CYCLES))
            continue
        except ValidationError:
            rows.append(SweepRow(value, None, STATUS_INVALID))
            continue
        rows.append(SweepRow(value, objective, STATUS_OK))
        if objective > best_objective:
            best_objective = objective
            best_value = value
    return SweepResult(
        parameter=spec.parameter,
        objective=spec.objective,
        rows=tuple(rows),
        argmax=best_value,
    )


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(
    f: Callable[[float], float], a: float, b: float, rel_tol: float = 1e-4
) -> float:
    """Maximizer of a unimodal f on [a, b] to relative interval width rel_tol."""
    if not b > a:
        raise ValueError("golden section needs b > a")
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc = f(c)
    fd = f(d)
    while (b - a) > rel_tol * max(abs(a), abs(b), 1e-300):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def refine_peak(
    spec: SweepSpec,
    brush: BrushParams,
    motor: MotorParams,
    robot: RobotParams | None = None,
    sim: regime2.SimConfig | None = None,
    rel_tol: float = 1e-4,
) -> float:
    """Golden-section refinement of the sweep argmax.

    Needs the argmax strictly inside the grid (its two neighbors form the
    bracket) and a caller-guaranteed unimodal objective on that bracket.
    Raises ValueError when the argmax sits at a grid endpoint.
    """
    result = run_sweep(spec, brush, motor, robot, sim)
    if result.argmax is None:
        raise ValueError("sweep produced no evaluable rows to refine")
    index = next(
        i for i, row in enumerate(result.rows) if row.value == result.argmax
    )
    if index == 0 or index == len(result.rows) - 1:
        raise ValueError(
            f"argmax {result.argmax!r} is a grid endpoint; no bracket to refine"
        )
    evaluate = _make_objective(spec, brush, motor, robot, sim)
    return golden_section_max(
        evaluate, spec.grid[index - 1], spec.grid[index + 1], rel_tol
    )
