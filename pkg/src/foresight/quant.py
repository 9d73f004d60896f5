"""Growth-curve evaluation and seeded stochastic simulation of the three
indices: Economic Growth (logistic), Social Well-being (logistic), and
Technology Advancement (Gompertz).

Each index saturates at a ceiling set by its initial value plus the driver
contributions: C_E = E0 + alpha*A + beta*R + gamma*A*R, C_S analogous with
(delta, eps_sr, zeta), and C_T = T0 + eta*A + theta*A*R. The interaction
coefficients gamma and zeta default to 0. Noise is additive Gaussian,
i.i.d. per time point, applied after the deterministic curve; paths are
never clipped, so they may be locally non-monotone.

Randomness contract: a path's generator is seeded directly from `seed` and
consumes three standard normal draws per time step, in index order E, S, T
(time-major). Monte Carlo run i is seeded with base_seed + i. Bit-exact
reproducibility is promised for a given platform and numpy generator, not
across languages.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, asdict, replace

import numpy as np

from .errors import UsageError, ValidationError
from .scenarios import DriverLevels, ScenarioTable

INDEX_NAMES = ("E", "S", "T")

# beyond this |exponent| the curves are flat to double precision
_EXP_LIMIT = 700.0


@dataclass(frozen=True)
class ParamSet:
    E0: float = 0.5
    S0: float = 0.5
    T0: float = 0.5
    alpha: float = 0.3  # A -> Economic Growth
    beta: float = 0.3  # R -> Economic Growth
    gamma: float = 0.0  # A*R -> Economic Growth
    delta: float = 0.3  # A -> Social Well-being
    eps_sr: float = 0.3  # R -> Social Well-being
    zeta: float = 0.0  # A*R -> Social Well-being
    eta: float = 0.3  # A -> Technology Advancement
    theta: float = 0.3  # A*R -> Technology Advancement
    k_E: float = 1.0
    k_S: float = 1.0
    k_T: float = 1.0
    t0_E: float = 5.0
    t0_S: float = 5.0
    t0_T: float = 5.0
    sigma_E: float = 0.05
    sigma_S: float = 0.05
    sigma_T: float = 0.05

    def __post_init__(self):
        for name in ("k_E", "k_S", "k_T"):
            if getattr(self, name) <= 0:
                raise ValidationError(f"{name} must be > 0")
        for name in ("sigma_E", "sigma_S", "sigma_T"):
            if getattr(self, name) < 0:
                raise ValidationError(f"{name} must be >= 0")
        for name in ("E0", "S0", "T0"):
            if getattr(self, name) < 0:
                raise ValidationError(f"{name} must be >= 0")

    def with_overrides(self, **overrides) -> "ParamSet":
        unknown = set(overrides) - set(self.__dataclass_fields__)
        if unknown:
            raise UsageError(f"unknown parameters: {sorted(unknown)}")
        return replace(self, **overrides)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ParamSet":
        return cls().with_overrides(**data)


def logistic_index(ceiling: float, k: float, t0: float, t):
    """ceiling / (1 + exp(-k (t - t0))), overflow-safe via sign-split."""
    if k <= 0:
        raise ValidationError("growth rate k must be > 0")
    x = np.asarray(k * (np.asarray(t, dtype=np.float64) - t0))
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = ceiling / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ceiling * ex / (1.0 + ex)
    return float(out[0]) if scalar else out


def gompertz_index(ceiling: float, k: float, t0: float, t):
    """ceiling * exp(-exp(-k (t - t0))); underflows to 0 far below t0."""
    if k <= 0:
        raise ValidationError("growth rate k must be > 0")
    x = np.asarray(k * (np.asarray(t, dtype=np.float64) - t0))
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    out = np.zeros_like(x)
    ok = x > -_EXP_LIMIT  # below this, exp(-x) overflows and the value is 0
    out[ok] = ceiling * np.exp(-np.exp(-x[ok]))
    return float(out[0]) if scalar else out


def ceilings(p: ParamSet, d: DriverLevels) -> tuple[float, float, float]:
    """Saturation levels (C_E, C_S, C_T) for the given driver levels."""
    c_e = p.E0 + p.alpha * d.A + p.beta * d.R + p.gamma * d.A * d.R
    c_s = p.S0 + p.delta * d.A + p.eps_sr * d.R + p.zeta * d.A * d.R
    c_t = p.T0 + p.eta * d.A + p.theta * d.A * d.R
    for name, c in zip(("C_E", "C_S", "C_T"), (c_e, c_s, c_t)):
        if c <= 0:
            raise ValidationError(f"ceiling {name} = {c} must be > 0")
    return c_e, c_s, c_t


@dataclass
class Trajectory:
    times: np.ndarray
    E: np.ndarray
    S: np.ndarray
    T: np.ndarray
    seed: int
    drivers: DriverLevels

    def index(self, name: str) -> np.ndarray:
        if name not in INDEX_NAMES:
            raise UsageError(f"unknown index {name!r}")
        return getattr(self, name)

    def to_dict(self) -> dict:
        return {
            "times": self.times.tolist(),
            "E": self.E.tolist(),
            "S": self.S.tolist(),
            "T": self.T.tolist(),
            "seed": self.seed,
            "drivers": {"A": self.drivers.A, "R": self.drivers.R},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass
class Ensemble:
    times: np.ndarray
    n_runs: int
    base_seed: int
    drivers: DriverLevels
    stats: dict[str, dict[str, np.ndarray]]  # index -> mean/std/q05/q50/q95

    def terminal_mean(self, name: str) -> float:
        return float(self.stats[name]["mean"][-1])

    def to_dict(self) -> dict:
        return {
            "times": self.times.tolist(),
            "n_runs": self.n_runs,
            "base_seed": self.base_seed,
            "drivers": {"A": self.drivers.A, "R": self.drivers.R},
            "stats": {
                idx: {stat: arr.tolist() for stat, arr in per.items()}
                for idx, per in self.stats.items()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def time_grid(horizon: float, dt: float) -> np.ndarray:
    if horizon <= 0 or dt <= 0:
        raise UsageError("horizon and dt must be > 0")
    n = int(math.floor(horizon / dt + 1e-9)) + 1
    return np.arange(n) * dt


def deterministic_curves(p: ParamSet, d: DriverLevels, times: np.ndarray):
    c_e, c_s, c_t = ceilings(p, d)
    return (
        logistic_index(c_e, p.k_E, p.t0_E, times),
        logistic_index(c_s, p.k_S, p.t0_S, times),
        gompertz_index(c_t, p.k_T, p.t0_T, times),
    )


def simulate_path(
    p: ParamSet, d: DriverLevels, horizon: float, dt: float, seed: int = 0
) -> Trajectory:
    """One noisy path on the grid {0, dt, ..., <= horizon}."""
    times = time_grid(horizon, dt)
    e_det, s_det, t_det = deterministic_curves(p, d, times)
    eps = np.random.default_rng(seed).standard_normal((times.shape[0], 3))
    return Trajectory(
        times=times,
        E=e_det + p.sigma_E * eps[:, 0],
        S=s_det + p.sigma_S * eps[:, 1],
        T=t_det + p.sigma_T * eps[:, 2],
        seed=seed,
        drivers=d,
    )


def monte_carlo(
    p: ParamSet,
    d: DriverLevels,
    horizon: float,
    dt: float,
    n_runs: int,
    base_seed: int = 0,
) -> Ensemble:
    """Ensemble statistics over n_runs independent paths (seeds base_seed + i)."""
    if n_runs < 1:
        raise UsageError("n_runs must be >= 1")
    times = time_grid(horizon, dt)
    samples = {name: np.empty((n_runs, times.shape[0])) for name in INDEX_NAMES}
    for i in range(n_runs):
        traj = simulate_path(p, d, horizon, dt, seed=base_seed + i)
        for name in INDEX_NAMES:
            samples[name][i] = traj.index(name)
    stats = {}
    for name in INDEX_NAMES:
        xs = samples[name]
        q05, q50, q95 = np.quantile(xs, [0.05, 0.5, 0.95], axis=0)
        stats[name] = {
            "mean": xs.mean(axis=0),
            "std": xs.std(axis=0),
            "q05": q05,
            "q50": q50,
            "q95": q95,
        }
    return Ensemble(
        times=times, n_runs=n_runs, base_seed=base_seed, drivers=d, stats=stats
    )


def compare_scenarios(
    p: ParamSet,
    table: ScenarioTable,
    horizon: float,
    dt: float,
    n_runs: int,
    base_seed: int = 0,
) -> list[dict]:
    """Terminal mean (E, S, T) per scenario, same seeding scheme for each."""
    rows = []
    for scenario in table.scenarios:
        ens = monte_carlo(p, scenario.drivers, horizon, dt, n_runs, base_seed)
        rows.append(
            {
                "scenario": scenario.name,
                "E": ens.terminal_mean("E"),
                "S": ens.terminal_mean("S"),
                "T": ens.terminal_mean("T"),
            }
        )
    return rows
