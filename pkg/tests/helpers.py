"""Shared test resources: parameter generators and independent oracles.

The oracles deliberately take different numerical routes than the library
(exact rational series, collocation BVP solves, closed-form flight integrals)
so that agreement actually means something.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from brushdyn import BrushParams, MotorParams, RobotParams

REFERENCE_ROBOT = dict(
    body_mass=0.05,
    pivot_inertia=2e-5,
    forcing_arm=0.03,
    gravity_arm=0.003,
    step_height=0.04,
    gravity=9.81,
)
REFERENCE_MOTOR = dict(eccentric_mass=1e-3, eccentricity=2e-3, speed=300.0)

# Peak cycle angle of the reference run, frozen from a dt = 1e-6 s integration
# (one hundredth of the reference step).
REFERENCE_PEAK = 0.008650108980828084


def reference_robot() -> RobotParams:
    return RobotParams(**REFERENCE_ROBOT)


def reference_motor() -> MotorParams:
    return MotorParams(**REFERENCE_MOTOR)


def random_brush(rng: np.random.Generator) -> BrushParams:
    return BrushParams(
        young_modulus=10 ** rng.uniform(6.0, 10.0),
        second_area_moment=10 ** rng.uniform(-14.0, -10.0),
        length=rng.uniform(0.005, 0.08),
        inclination=rng.uniform(0.05, math.pi / 2 - 0.05),
        brush_mass=10 ** rng.uniform(-4.0, -2.0),
    )


def random_motor(rng: np.random.Generator, speed: float | None = None) -> MotorParams:
    return MotorParams(
        eccentric_mass=10 ** rng.uniform(-4.0, -2.0),
        eccentricity=10 ** rng.uniform(-4.0, -2.0),
        speed=rng.uniform(50.0, 1000.0) if speed is None else speed,
    )


def config_text(sections: dict[str, dict]) -> str:
    """Render a sections dict as a config file body."""
    lines = []
    for name, pairs in sections.items():
        lines.append(f"[{name}]")
        for key, value in pairs.items():
            lines.append(f"{key} = {value}")
        lines.append("")
    return "\n".join(lines)


BRUSH_SECTION = dict(
    young_modulus="2e9",
    second_area_moment="1e-12",
    length="0.02",
    inclination="0.6",
    brush_mass="1e-3",
)
MOTOR_SECTION = dict(eccentric_mass="1e-3", eccentricity="2e-3", speed="300.0")
ROBOT_SECTION = dict(
    body_mass="0.05",
    pivot_inertia="2e-5",
    forcing_arm="0.03",
    gravity_arm="0.003",
    step_height="0.04",
    gravity="9.81",
)
SIM_SECTION = dict(t_end="0.5", dt="1e-4", record_stride="1")


# ---------------------------------------------------------------------------
# exact rational trigonometry (oracle for the step-geometry formulas)

def cos_exact(x: float, terms: int = 40) -> Fraction:
    """Cosine of the exact binary64 value of x, in rational arithmetic."""
    xf = Fraction(x)
    x2 = xf * xf
    total = Fraction(0)
    term = Fraction(1)
    for k in range(terms):
        total += term
        term = -term * x2 / ((2 * k + 1) * (2 * k + 2))
    return total


def sin_exact(x: float, terms: int = 40) -> Fraction:
    """Sine of the exact binary64 value of x, in rational arithmetic."""
    xf = Fraction(x)
    x2 = xf * xf
    total = Fraction(0)
    term = xf
    for k in range(terms):
        total += term
        term = -term * x2 / ((2 * k + 2) * (2 * k + 3))
    return total


# ---------------------------------------------------------------------------
# numeric boundary value problem oracle for the beam bending shape

def bvp_deflection(brush: BrushParams, force: float, positions) -> np.ndarray:
    """Solve the clamped/tip-loaded fourth-order beam problem numerically.

    Independent route: first-order system [v, v', v'', v'''] with v'''' = 0,
    boundary conditions v(0) = v'(0) = 0, v''(l) = 0, EI v'''(l) = F cos(alpha),
    solved by scipy's collocation solver on a coarse mesh.
    """
    from scipy.integrate import solve_bvp

    rigidity = brush.flexural_rigidity
    shear = force * math.cos(brush.inclination)

    def odes(xi, y):
        return np.vstack([y[1], y[2], y[3], np.zeros_like(xi)])

    def bcs(ya, yb):
        return np.array([ya[0], ya[1], yb[2], rigidity * yb[3] - shear])

    mesh = np.linspace(0.0, brush.length, 11)
    guess = np.zeros((4, mesh.size))
    solution = solve_bvp(odes, bcs, mesh, guess, tol=1e-12)
    assert solution.success
    return solution.sol(np.asarray(positions))[0]


# ---------------------------------------------------------------------------
# closed-form flight for the pivot-rotation model (exact double integral)

def flight_closed_form(robot: RobotParams, motor: MotorParams,
                       t0: float, theta0: float = 0.0, v0: float = 0.0):
    """Exact airborne solution of the pivot rotation from a lift-off state.

    theta_ddot = a*sin(omega*t) - b integrates in closed form; returns
    (theta(t), theta_dot(t)) callables valid while the body stays airborne.
    """
    a = motor.force_amplitude * robot.forcing_arm / robot.pivot_inertia
    b = robot.weight * robot.gravity_arm / robot.pivot_inertia
    w = motor.speed
    cos0 = math.cos(w * t0)
    sin0 = math.sin(w * t0)

    def theta(t: float) -> float:
        d = t - t0
        return (
            theta0
            + v0 * d
            + (a / w) * cos0 * d
            - (a / (w * w)) * (math.sin(w * t) - sin0)
            - 0.5 * b * d * d
        )

    def theta_dot(t: float) -> float:
        d = t - t0
        return v0 + (a / w) * (cos0 - math.cos(w * t)) - b * d

    return theta, theta_dot
