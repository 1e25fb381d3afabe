"""Time evolution of the dipole-coupled atom pair.

Three routes are provided and cross-validated against each other:

* ``evolve_analytic`` -- exponential solutions in the collective basis,
  valid for identical atoms (zero detuning) away from the small-sample point;
* ``evolve_block_ode`` -- adaptive RK integration of the six-component
  collective-basis equations, valid for any detuning;
* ``evolve_full_master`` -- the full 4x4 Lindblad generator in the product
  basis, used as an independent oracle for the other two.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .statespace import CollectiveState

EPS_DICKE = 1e-8
RTOL = 1e-10
ATOL = 1e-12


class DickeSingularityError(ArithmeticError):
    """Analytic solution is singular at gamma12 == gamma with excited population."""


class IntegrationError(RuntimeError):
    """The adaptive integrator failed to meet its tolerance."""


@dataclass(frozen=True)
class AtomPairParams:
    """Rates and frequencies of the pair; all in units of gamma (time 1/gamma)."""

    gamma: float = 1.0
    gamma12: float = 0.0
    omega12: float = 0.0
    delta: float = 0.0  # half the transition-frequency difference
    omega0: float = 0.0  # mean frequency; 0 = rotating frame

    def __post_init__(self):
        if not self.gamma > 0.0:
            raise ValueError(f"gamma must be > 0, got {self.gamma}")
        if abs(self.gamma12) > self.gamma * (1.0 + 1e-12):
            raise ValueError(f"|gamma12| must not exceed gamma, got {self.gamma12}")


@dataclass(frozen=True)
class TimeGrid:
    """Uniform output times in units of 1/gamma."""

    t_start: float
    t_end: float
    n_points: int

    def __post_init__(self):
        if self.t_start < 0.0:
            raise ValueError(f"t_start must be >= 0, got {self.t_start}")
        if not self.t_end > self.t_start:
            raise ValueError("t_end must exceed t_start")
        if self.n_points < 2:
            raise ValueError(f"n_points must be >= 2, got {self.n_points}")

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_points)


def evolve_analytic(c0: CollectiveState, p: AtomPairParams, t: float) -> CollectiveState:
    """Closed-form collective-basis solution for identical atoms.

    Refuses the small-sample point gamma12 == gamma whenever the doubly
    excited state is populated: the feeding terms for the symmetric and
    antisymmetric populations contain the prefactors
    (gamma +/- gamma12)/(gamma -/+ gamma12).
    """
    if p.delta != 0.0:
        raise ValueError("analytic solution requires delta == 0")
    g, g12, o12, w0 = p.gamma, p.gamma12, p.omega12, p.omega0
    if c0.ree > 0.0 and abs(g - g12) < EPS_DICKE:
        raise DickeSingularityError(
            "gamma12 == gamma with excited population: use evolve_block_ode"
        )

    e_fast = math.exp(-(g + g12) * t)  # superradiant
    e_slow = math.exp(-(g - g12) * t)  # subradiant
    e_top = math.exp(-2.0 * g * t)

    ree = c0.ree * e_top
    rss = c0.rss * e_fast
    raa = c0.raa * e_slow
    if c0.ree != 0.0:
        rss += c0.ree * (g + g12) / (g - g12) * (e_fast - e_top)
        raa += c0.ree * (g - g12) / (g + g12) * (e_slow - e_top)
    ras = c0.ras * np.exp(-(g + 2j * o12) * t)
    reg = c0.reg * np.exp(-(g + 2j * w0) * t)
    rgg = 1.0 - ree - rss - raa
    return CollectiveState(rgg=rgg, ree=ree, rss=rss, raa=raa, reg=reg, ras=ras)


def _collective_rhs(p: AtomPairParams):
    g, g12, o12, d, w0 = p.gamma, p.gamma12, p.omega12, p.delta, p.omega0

    def rhs(t, y):
        ree, rss, raa, as_r, as_i, eg_r, eg_i = y
        return [
            -2.0 * g * ree,
            -(g + g12) * (rss - ree) - 2.0 * d * as_i,
            -(g - g12) * (raa - ree) + 2.0 * d * as_i,
            -g * as_r + 2.0 * o12 * as_i,
            -g * as_i - 2.0 * o12 * as_r + d * (rss - raa),
            -g * eg_r + 2.0 * w0 * eg_i,
            -g * eg_i - 2.0 * w0 * eg_r,
        ]

    return rhs


def _pack(c: CollectiveState) -> list[float]:
    return [c.ree, c.rss, c.raa, c.ras.real, c.ras.imag, c.reg.real, c.reg.imag]


def _unpack(y: np.ndarray) -> CollectiveState:
    ree, rss, raa, as_r, as_i, eg_r, eg_i = (float(v) for v in y)
    return CollectiveState(
        rgg=1.0 - ree - rss - raa,
        ree=ree,
        rss=rss,
        raa=raa,
        reg=complex(eg_r, eg_i),
        ras=complex(as_r, as_i),
    )


def evolve_block_ode(
    c0: CollectiveState, p: AtomPairParams, grid: TimeGrid
) -> list[CollectiveState]:
    """Integrate the collective-basis equations of motion; handles any detuning."""
    sol = solve_ivp(
        _collective_rhs(p),
        (grid.t_start, grid.t_end),
        _pack(c0),
        t_eval=grid.times(),
        method="RK45",
        rtol=RTOL,
        atol=ATOL,
    )
    if not sol.success:
        raise IntegrationError(f"block ODE integration failed: {sol.message}")
    return [_unpack(sol.y[:, k]) for k in range(sol.y.shape[1])]


def _pair_operators():
    """Lowering operators and z projections in the product basis (gg, ee, ge, eg)."""
    s1m = np.zeros((4, 4), dtype=complex)
    s1m[0, 3] = 1.0  # |eg> -> |gg>
    s1m[2, 1] = 1.0  # |ee> -> |ge>
    s2m = np.zeros((4, 4), dtype=complex)
    s2m[0, 2] = 1.0  # |ge> -> |gg>
    s2m[3, 1] = 1.0  # |ee> -> |eg>
    sz1 = 0.5 * np.diag([-1.0, 1.0, -1.0, 1.0]).astype(complex)
    sz2 = 0.5 * np.diag([-1.0, 1.0, 1.0, -1.0]).astype(complex)
    return s1m, s2m, sz1, sz2


def lindblad_generator(p: AtomPairParams):
    """Right-hand side rho -> drho/dt of the full master equation.

    The sign of the exchange Hamiltonian is fixed operationally: it is the one
    for which this generator reproduces the collective-basis equations of
    motion integrated by evolve_block_ode.
    """
    s1m, s2m, sz1, sz2 = _pair_operators()
    s1p, s2p = s1m.conj().T, s2m.conj().T
    w1 = p.omega0 - p.delta
    w2 = p.omega0 + p.delta
    h = w1 * sz1 + w2 * sz2 - p.omega12 * (s1p @ s2m + s2p @ s1m)

    gmat = np.array([[p.gamma, p.gamma12], [p.gamma12, p.gamma]])
    sp = [s1p, s2p]
    sm = [s1m, s2m]

    def rhs(rho):
        drho = -1j * (h @ rho - rho @ h)
        for i in range(2):
            for j in range(2):
                gij = gmat[i, j]
                spm = sp[i] @ sm[j]
                drho -= 0.5 * gij * (rho @ spm + spm @ rho - 2.0 * (sm[j] @ rho @ sp[i]))
        return drho

    return rhs


def evolve_full_master(
    m0: np.ndarray, p: AtomPairParams, grid: TimeGrid
) -> np.ndarray:
    """Integrate the full 4x4 master equation; returns shape (n_points, 4, 4)."""
    gen = lindblad_generator(p)

    def rhs(t, y):
        return gen(y.reshape(4, 4)).ravel()

    sol = solve_ivp(
        rhs,
        (grid.t_start, grid.t_end),
        np.asarray(m0, dtype=complex).ravel(),
        t_eval=grid.times(),
        method="RK45",
        rtol=RTOL,
        atol=ATOL,
    )
    if not sol.success:
        raise IntegrationError(f"master equation integration failed: {sol.message}")
    return sol.y.T.reshape(-1, 4, 4)


def total_spin_squared(c: CollectiveState) -> float:
    """Square of the total spin; conserved only when the antisymmetric state decouples."""
    return 2.0 - 2.0 * c.raa
