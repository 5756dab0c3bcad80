"""Solver configuration: tuned defaults, validation, key=value file round-trip."""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from pathlib import Path

from .objective import ObjectiveKind


@dataclass
class SolverConfig:
    """All solver knobs.

    Set-size fields left at 0 are derived in __post_init__: the reference
    set is half the population, the elite set a tenth.  time_limit or
    stagnation_limit may each be None to disable that stop condition.
    """

    alpha: float = 0.2
    theta: int = 50
    theta_ref: int = 0
    theta_elite: int = 0
    eta: float = 0.6
    rho: float = 0.95
    xi_max: int = 2000
    gamma: float = 0.2
    mu: float = 0.6
    tabu_enabled: bool = True
    objective: ObjectiveKind = ObjectiveKind.LARGEST
    time_limit: float | None = 30.0
    stagnation_limit: int | None = 50
    seed: int = 0

    def __post_init__(self) -> None:
        if self.theta_ref == 0:
            self.theta_ref = max(1, self.theta // 2)
        if self.theta_elite == 0:
            self.theta_elite = max(1, self.theta // 10)
        if isinstance(self.objective, str):
            self.objective = ObjectiveKind(self.objective)

    def validate(self, n: int | None = None) -> None:
        if self.theta < 1:
            raise ValueError("theta must be >= 1")
        if not (1 <= self.theta_ref <= self.theta):
            raise ValueError("theta_ref must lie in [1, theta]")
        if not (1 <= self.theta_elite <= self.theta):
            raise ValueError("theta_elite must lie in [1, theta]")
        if not (0.0 < self.eta <= 1.0):
            raise ValueError("eta must lie in (0, 1]")
        if not (0.0 < self.rho <= 1.0):
            raise ValueError("rho must lie in (0, 1]")
        if self.xi_max < 0:
            raise ValueError("xi_max must be >= 0")
        if not (0.0 <= self.gamma < 1.0):
            raise ValueError("gamma must lie in [0, 1)")
        if not (0.0 <= self.mu <= 1.0):
            raise ValueError("mu must lie in [0, 1]")
        if self.time_limit is not None and self.time_limit < 0:
            raise ValueError("time_limit must be >= 0 or None")
        if self.stagnation_limit is not None and self.stagnation_limit < 0:
            raise ValueError("stagnation_limit must be >= 0 or None")
        if n is not None and n >= 1:
            if self.alpha < 1.0 / n - 1e-9 or self.alpha >= 1.0:
                raise ValueError(
                    f"alpha must lie in [1/n, 1) for n={n}, got {self.alpha}"
                )

    def replace(self, **changes) -> "SolverConfig":
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(changes)
        return SolverConfig(**values)

    def to_file(self, path: str | Path) -> None:
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, ObjectiveKind):
                value = value.value
            elif value is None:
                value = "none"
            lines.append(f"{f.name} = {value}")
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def from_file(cls, path: str | Path) -> "SolverConfig":
        values = parse_config_text(Path(path).read_text(encoding="utf-8"))
        return cls(**values)


_FIELD_TYPES = {
    "alpha": float,
    "theta": int,
    "theta_ref": int,
    "theta_elite": int,
    "eta": float,
    "rho": float,
    "xi_max": int,
    "gamma": float,
    "mu": float,
    "tabu_enabled": bool,
    "objective": str,
    "time_limit": float,
    "stagnation_limit": int,
    "seed": int,
}


def parse_config_text(text: str) -> dict:
    """Parse flat `key = value` lines (valid in both INI and TOML styles)."""
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("#", ";", "[")):
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value'")
        key, _, rhs = line.partition("=")
        key = key.strip()
        rhs = rhs.strip().strip("\"'")
        if key not in _FIELD_TYPES:
            raise ValueError(f"config line {lineno}: unknown key '{key}'")
        if rhs.lower() in ("none", ""):
            values[key] = None
            continue
        kind = _FIELD_TYPES[key]
        if kind is bool:
            if rhs.lower() in ("true", "1", "yes", "on"):
                values[key] = True
            elif rhs.lower() in ("false", "0", "no", "off"):
                values[key] = False
            else:
                raise ValueError(f"config line {lineno}: bad boolean '{rhs}'")
        else:
            try:
                values[key] = kind(rhs)
            except ValueError:
                raise ValueError(
                    f"config line {lineno}: bad {kind.__name__} '{rhs}'"
                ) from None
    return values
