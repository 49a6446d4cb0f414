"""Run configuration files.

Flat sectioned key=value text (configparser syntax). Every key is checked
against the schema and unknown keys are fatal: a silently ignored typo in a
physics parameter is worse than a hard error.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass

from .params import BrushParams, MotorParams, RobotParams
from .regime2 import SimConfig
from .sweep import SweepSpec


class ConfigError(ValueError):
    """The configuration file is structurally broken."""


_BRUSH_KEYS = {
    "young_modulus",
    "second_area_moment",
    "length",
    "inclination",
    "brush_mass",
}
_MOTOR_KEYS = {"eccentric_mass", "eccentricity", "speed"}
_ROBOT_REQUIRED = {
    "body_mass",
    "pivot_inertia",
    "forcing_arm",
    "gravity_arm",
    "step_height",
}
_ROBOT_OPTIONAL = {"gravity"}
_SIM_REQUIRED = {"t_end", "dt"}
_SIM_OPTIONAL = {"theta0", "record_stride"}
_SWEEP_REQUIRED = {"parameter", "objective"}
_SWEEP_OPTIONAL = {"grid", "start", "stop", "points", "spacing"}

_SECTIONS = ("brush", "motor", "robot", "sim", "sweep")


@dataclass(frozen=True)
class RunConfig:
    brush: BrushParams | None = None
    motor: MotorParams | None = None
    robot: RobotParams | None = None
    sim: SimConfig | None = None
    sweep: SweepSpec | None = None


def _check_keys(section: str, present: set[str], required: set[str], optional: set[str]) -> None:
    unknown = present - required - optional
    if unknown:
        raise ConfigError(
            f"unknown key {sorted(unknown)[0]!r} in [{section}]"
        )
    missing = required - present
    if missing:
        raise ConfigError(
            f"missing key {sorted(missing)[0]!r} in [{section}]"
        )


def _as_float(section: str, key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(
            f"value {raw!r} for {key!r} in [{section}] is not a number"
        ) from None


def _as_int(section: str, key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(
            f"value {raw!r} for {key!r} in [{section}] is not an integer"
        ) from None


def _build_brush(items: dict[str, str]) -> BrushParams:
    _check_keys("brush", set(items), _BRUSH_KEYS, set())
    return BrushParams(
        young_modulus=_as_float("brush", "young_modulus", items["young_modulus"]),
        second_area_moment=_as_float(
            "brush", "second_area_moment", items["second_area_moment"]
        ),
        length=_as_float("brush", "length", items["length"]),
        inclination=_as_float("brush", "inclination", items["inclination"]),
        brush_mass=_as_float("brush", "brush_mass", items["brush_mass"]),
    )


def _build_motor(items: dict[str, str]) -> MotorParams:
    _check_keys("motor", set(items), _MOTOR_KEYS, set())
    return MotorParams(
        eccentric_mass=_as_float("motor", "eccentric_mass", items["eccentric_mass"]),
        eccentricity=_as_float("motor", "eccentricity", items["eccentricity"]),
        speed=_as_float("motor", "speed", items["speed"]),
    )


def _build_robot(items: dict[str, str]) -> RobotParams:
    _check_keys("robot", set(items), _ROBOT_REQUIRED, _ROBOT_OPTIONAL)
    kwargs = {key: _as_float("robot", key, items[key]) for key in _ROBOT_REQUIRED}
    if "gravity" in items:
        kwargs["gravity"] = _as_float("robot", "gravity", items["gravity"])
    return RobotParams(**kwargs)


def _build_sim(items: dict[str, str]) -> SimConfig:
    _check_keys("sim", set(items), _SIM_REQUIRED, _SIM_OPTIONAL)
    kwargs = {
        "t_end": _as_float("sim", "t_end", items["t_end"]),
        "dt": _as_float("sim", "dt", items["dt"]),
    }
    if "theta0" in items:
        kwargs["theta0"] = _as_float("sim", "theta0", items["theta0"])
    if "record_stride" in items:
        kwargs["record_stride"] = _as_int("sim", "record_stride", items["record_stride"])
    return SimConfig(**kwargs)


def _build_sweep(items: dict[str, str]) -> SweepSpec:
    _check_keys("sweep", set(items), _SWEEP_REQUIRED, _SWEEP_OPTIONAL)
    parameter = items["parameter"]
    objective = items["objective"]
    range_keys = {"start", "stop", "points"} & set(items)
    if "grid" in items:
        if range_keys or "spacing" in items:
            raise ConfigError(
                "[sweep] takes either grid= or start/stop/points, not both"
            )
        values = [
            _as_float("sweep", "grid", part)
            for part in items["grid"].split(",")
            if part.strip()
        ]
        return SweepSpec(parameter=parameter, objective=objective, grid=tuple(values))
    if range_keys != {"start", "stop", "points"}:
        raise ConfigError(
            "[sweep] needs grid= or all of start=, stop=, points="
        )
    return SweepSpec.from_range(
        parameter=parameter,
        objective=objective,
        start=_as_float("sweep", "start", items["start"]),
        stop=_as_float("sweep", "stop", items["stop"]),
        points=_as_int("sweep", "points", items["points"]),
        spacing=items.get("spacing", "linear"),
    )


def load_config(path: str) -> RunConfig:
    """Parse and validate a config file; every present section is built."""
    parser = configparser.ConfigParser(interpolation=None)
    try:
        with open(path, encoding="utf-8") as handle:
            parser.read_file(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from None
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse config file {path!r}: {exc}") from None

    if parser.defaults():
        raise ConfigError("[DEFAULT] section is not supported")
    for section in parser.sections():
        if section not in _SECTIONS:
            raise ConfigError(f"unknown section [{section}]")

    def items(section: str) -> dict[str, str]:
        return {key: value.strip() for key, value in parser.items(section)}

    return RunConfig(
        brush=_build_brush(items("brush")) if parser.has_section("brush") else None,
        motor=_build_motor(items("motor")) if parser.has_section("motor") else None,
        robot=_build_robot(items("robot")) if parser.has_section("robot") else None,
        sim=_build_sim(items("sim")) if parser.has_section("sim") else None,
        sweep=_build_sweep(items("sweep")) if parser.has_section("sweep") else None,
    )
