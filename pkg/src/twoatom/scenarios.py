"""Named simulation scenarios, trajectory assembly, sweeps and figure data.

A scenario bundles an initial state, the interatomic geometry (or explicit
rate overrides), the detuning and an output time grid.  Scenario files are a
flat ``key = value`` text format with ``#`` comments.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .couplings import Geometry, rates_from_geometry
from .dynamics import (
    AtomPairParams,
    DickeSingularityError,
    EPS_DICKE,
    TimeGrid,
    evolve_analytic,
    evolve_block_ode,
    total_spin_squared,
)
from .entanglement import block_report
from .statespace import (
    BlockState,
    CollectiveState,
    check_block,
    from_collective,
    to_collective,
)

ALL_OUTPUTS = (
    "concurrence",
    "negativity",
    "populations",
    "coherences",
    "s_squared",
)

INITIAL_STATES = {
    "atom1_excited": BlockState(r44=1.0),
    "both_excited": BlockState(r22=1.0),
    "symmetric": BlockState(r33=0.5, r44=0.5, r34=0.5 + 0j),
    "antisymmetric": BlockState(r33=0.5, r44=0.5, r34=-0.5 + 0j),
}


@dataclass(frozen=True)
class Scenario:
    initial: str = "atom1_excited"
    custom_state: BlockState | None = None
    x: float = math.pi / 6
    mu_dot_r: float = 0.0
    gamma: float = 1.0
    gamma12: float | None = None  # explicit overrides win over the geometry
    omega12: float | None = None
    delta: float = 0.0
    grid: TimeGrid = field(default_factory=lambda: TimeGrid(0.0, 3.0, 3000))
    outputs: tuple[str, ...] = ALL_OUTPUTS

    def initial_block(self) -> BlockState:
        if self.initial == "custom":
            if self.custom_state is None:
                raise ValueError("custom initial state requires explicit entries")
            b = self.custom_state
        else:
            try:
                b = INITIAL_STATES[self.initial]
            except KeyError:
                raise ValueError(f"unknown initial state {self.initial!r}") from None
        check_block(b)
        return b

    def params(self) -> AtomPairParams:
        if self.gamma12 is not None and self.omega12 is not None:
            g12, o12 = self.gamma12, self.omega12
        else:
            rates = rates_from_geometry(Geometry(self.x, self.mu_dot_r), self.gamma)
            g12 = self.gamma12 if self.gamma12 is not None else rates.gamma12
            o12 = self.omega12 if self.omega12 is not None else rates.omega12
        return AtomPairParams(
            gamma=self.gamma, gamma12=g12, omega12=o12, delta=self.delta
        )


@dataclass(frozen=True)
class TrajectoryRecord:
    t: float
    concurrence: float
    negativity: float
    rho_ee: float
    rho_ss: float
    rho_aa: float
    rho_gg: float
    re_rho_as: float
    im_rho_as: float
    s_squared: float


RECORD_COLUMNS = (
    "t",
    "concurrence",
    "negativity",
    "rho_ee",
    "rho_ss",
    "rho_aa",
    "rho_gg",
    "re_rho_as",
    "im_rho_as",
    "s_squared",
)

_OUTPUT_COLUMNS = {
    "concurrence": ("concurrence",),
    "negativity": ("negativity",),
    "populations": ("rho_ee", "rho_ss", "rho_aa", "rho_gg"),
    "coherences": ("re_rho_as", "im_rho_as"),
    "s_squared": ("s_squared",),
}


def record_from_state(t: float, c: CollectiveState) -> TrajectoryRecord:
    rep = block_report(from_collective(c))
    return TrajectoryRecord(
        t=t,
        concurrence=rep.concurrence,
        negativity=rep.negativity,
        rho_ee=c.ree,
        rho_ss=c.rss,
        rho_aa=c.raa,
        rho_gg=c.rgg,
        re_rho_as=c.ras.real,
        im_rho_as=c.ras.imag,
        s_squared=total_spin_squared(c),
    )


def evolve_states(
    c0: CollectiveState, p: AtomPairParams, grid: TimeGrid, force_ode: bool = False
) -> list[CollectiveState]:
    """Analytic path when available, adaptive integration otherwise."""
    analytic_ok = (
        p.delta == 0.0
        and not force_ode
        and (c0.ree == 0.0 or abs(p.gamma - p.gamma12) >= EPS_DICKE)
    )
    if analytic_ok:
        return [evolve_analytic(c0, p, t) for t in grid.times()]
    return evolve_block_ode(c0, p, grid)


def run_scenario(s: Scenario, force_ode: bool = False) -> list[TrajectoryRecord]:
    try:
        c0 = to_collective(s.initial_block())
        p = s.params()
        states = evolve_states(c0, p, s.grid, force_ode=force_ode)
    except (DickeSingularityError,) as exc:
        raise DickeSingularityError(f"scenario {s.initial!r}: {exc}") from exc
    return [record_from_state(t, c) for t, c in zip(s.grid.times(), states)]


def scenario_columns(s: Scenario) -> tuple[str, ...]:
    cols = ["t"]
    for name in s.outputs:
        cols.extend(_OUTPUT_COLUMNS[name])
    return tuple(cols)


# ---------------------------------------------------------------------------
# sweeps

SWEEP_AXES = ("x", "mu_dot_r", "delta", "gamma12", "omega12")


@dataclass(frozen=True)
class SweepRow:
    value: float
    first_max_c: float
    t_first_max: float
    c_at_t5: float
    error: str = ""


def _first_maximum(t: np.ndarray, c: np.ndarray) -> tuple[float, float]:
    """Value and time of the first local maximum of the concurrence."""
    for k in range(1, len(c) - 1):
        if c[k] >= c[k - 1] and c[k] > c[k + 1] and c[k] > 1e-12:
            return float(c[k]), float(t[k])
    k = int(np.argmax(c))
    return float(c[k]), float(t[k])


def sweep(base: Scenario, axis: str, values) -> list[SweepRow]:
    """One summary row per axis value; failures are captured per row."""
    if axis not in SWEEP_AXES:
        raise ValueError(f"unknown sweep axis {axis!r}; expected one of {SWEEP_AXES}")
    rows = []
    for v in values:
        try:
            records = run_scenario(replace(base, **{axis: float(v)}))
            t = np.array([r.t for r in records])
            c = np.array([r.concurrence for r in records])
            cmax, tmax = _first_maximum(t, c)
            if t[-1] >= 5.0:
                c5 = float(np.interp(5.0, t, c))
            else:
                c5 = float("nan")
            rows.append(SweepRow(float(v), cmax, tmax, c5))
        except Exception as exc:  # keep the sweep going
            rows.append(
                SweepRow(float(v), float("nan"), float("nan"), float("nan"), str(exc))
            )
    return rows


# ---------------------------------------------------------------------------
# figure data

# The one-excitation figures resolve the fast 2*omega12 oscillation; the
# both-excited figure needs the long subradiant tail instead.
FIGURE_SCENARIOS = {
    "fig2": Scenario(initial="atom1_excited", grid=TimeGrid(0.0, 3.0, 3000)),
    "fig3": Scenario(initial="atom1_excited", grid=TimeGrid(0.0, 3.0, 3000)),
    "fig4": Scenario(initial="both_excited", grid=TimeGrid(0.0, 10.0, 5000)),
    # detuned preset: the interaction is fixed at twice the geometric value,
    # the convention under which its first maximum reaches 0.88
    "fig5": Scenario(
        initial="atom1_excited",
        delta=10.0,
        omega12=9.304221923123156,
        grid=TimeGrid(0.0, 3.0, 3000),
    ),
}

FIGURE_COLUMNS = {
    "fig2": ("t", "C", "aa_minus_ss", "aa_plus_ss"),
    "fig3": ("t", "C", "N"),
    "fig4": ("t", "C", "N", "rho_aa"),
    "fig5": ("t", "C", "aa_minus_ss", "aa_plus_ss"),
}


def figure_rows(name: str) -> tuple[tuple[str, ...], list[tuple[float, ...]]]:
    """Column names and data rows for one of the canned figures."""
    if name not in FIGURE_SCENARIOS:
        raise ValueError(f"unknown figure {name!r}; expected {sorted(FIGURE_SCENARIOS)}")
    records = run_scenario(FIGURE_SCENARIOS[name])
    cols = FIGURE_COLUMNS[name]
    rows = []
    for r in records:
        values = {
            "t": r.t,
            "C": r.concurrence,
            "N": r.negativity,
            "aa_minus_ss": r.rho_aa - r.rho_ss,
            "aa_plus_ss": r.rho_aa + r.rho_ss,
            "rho_aa": r.rho_aa,
        }
        rows.append(tuple(values[c] for c in cols))
    return cols, rows


# ---------------------------------------------------------------------------
# scenario files and CSV output


def _format_value(v: float) -> str:
    return format(v, ".17g")


def write_csv(path, columns, rows) -> None:
    """Deterministic CSV: fixed header, 17 significant digits, LF endings."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(_format_value(v) for v in row) + "\n")


def records_to_rows(records, columns):
    return [tuple(getattr(r, c) for c in columns) for r in records]


_SCENARIO_FLOAT_KEYS = {
    "x",
    "mu_dot_r",
    "gamma",
    "gamma12",
    "omega12",
    "delta",
    "t_start",
    "t_end",
}
_CUSTOM_KEYS = {
    "r11",
    "r22",
    "r33",
    "r44",
    "r12_re",
    "r12_im",
    "r34_re",
    "r34_im",
}


def parse_scenario(text: str) -> Scenario:
    """Parse the flat ``key = value`` scenario format."""
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in raw:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value

    kwargs: dict = {}
    if "initial" in raw:
        kwargs["initial"] = raw.pop("initial")
    grid_args = {
        "t_start": 0.0,
        "t_end": 3.0,
        "n_points": 3000,
    }
    if "points" in raw:
        grid_args["n_points"] = int(raw.pop("points"))
    custom: dict[str, float] = {}
    for key, value in raw.items():
        if key in _CUSTOM_KEYS:
            custom[key] = float(value)
        elif key in ("t_start", "t_end"):
            grid_args[key] = float(value)
        elif key in _SCENARIO_FLOAT_KEYS:
            kwargs[key] = float(value)
        elif key == "outputs":
            names = tuple(n.strip() for n in value.split(",") if n.strip())
            unknown = set(names) - set(ALL_OUTPUTS)
            if unknown:
                raise ValueError(f"unknown outputs {sorted(unknown)}")
            kwargs["outputs"] = names
        else:
            raise ValueError(f"unknown scenario key {key!r}")
    kwargs["grid"] = TimeGrid(**grid_args)
    if kwargs.get("initial") == "custom" or custom:
        kwargs.setdefault("initial", "custom")
        kwargs["custom_state"] = BlockState(
            r11=custom.get("r11", 0.0),
            r22=custom.get("r22", 0.0),
            r33=custom.get("r33", 0.0),
            r44=custom.get("r44", 0.0),
            r12=complex(custom.get("r12_re", 0.0), custom.get("r12_im", 0.0)),
            r34=complex(custom.get("r34_re", 0.0), custom.get("r34_im", 0.0)),
        )
    return Scenario(**kwargs)


def load_scenario(path) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())
