"""Constants and right-hand sides of the expected-loss bounds."""

import math
from enum import Enum
from typing import Optional

from ..discretize import GridSpec, tau_t
from ..models.records import TheoryReport


class BoundInputError(ValueError):
    """Raised when a bound is undefined for the given inputs."""
    pass


class BoundKind(str, Enum):
    AVG_CUMULATIVE = "avg_cumulative"
    AVG_RATE = "avg_rate"
    MAX_FINITE_CUMULATIVE = "max_finite_cumulative"
    MAX_FINITE_RATE = "max_finite_rate"
    MAX_INFINITE_CUMULATIVE = "max_infinite_cumulative"
    MAX_INFINITE_RATE = "max_infinite_rate"


def _log_term(noise_var: float) -> float:
    if not noise_var > 0:
        raise BoundInputError(f"bounds need noise_var > 0, got {noise_var}")
    return math.log1p(1.0 / noise_var)


def c1(noise_var: float) -> float:
    """C1 = 4 / log(1 + noise^-1)."""
    return 4.0 / _log_term(noise_var)


def c1_tilde(noise_var: float, n_candidates: float) -> float:
    """(4 + 4 log |X|) / log(1 + noise^-1)."""
    if n_candidates < 1:
        raise BoundInputError(f"|X| must be >= 1, got {n_candidates}")
    return (4.0 + 4.0 * math.log(n_candidates)) / _log_term(noise_var)


def c1_check(noise_var: float) -> float:
    """2 / log(1 + noise^-1)."""
    return 2.0 / _log_term(noise_var)


def s_t(spec: GridSpec, t: int) -> float:
    """2 d log tau_t."""
    return 2.0 * spec.d * math.log(tau_t(spec, t))


def bound_rhs(
    kind: BoundKind,
    t: int,
    gamma: float,
    noise_var: float,
    n_candidates: Optional[float] = None,
    s: Optional[float] = None,
) -> float:
    """
    Right-hand side of the requested bound at horizon t.

    Cumulative bounds limit E[R_t]; rate bounds are the cumulative ones
    divided by t. ``n_candidates`` is needed by the finite max-value bounds
    and ``s`` (= s_t) by the infinite ones.

    Args:
        kind: Which bound
        t: Horizon, >= 1
        gamma: Maximum information gain (or an upper bound on it) at t
        noise_var: Observation noise variance
        n_candidates: |X| for the finite max-value bounds
        s: s_t for the infinite max-value bounds

    Returns:
        The bound value
    """
    kind = BoundKind(kind)
    if t < 1:
        raise BoundInputError(f"t must be >= 1, got {t}")
    if gamma < 0:
        raise BoundInputError(f"gamma must be >= 0, got {gamma}")

    if kind in (BoundKind.AVG_CUMULATIVE, BoundKind.AVG_RATE):
        cumulative = math.sqrt(c1(noise_var) * t * gamma)
    elif kind in (BoundKind.MAX_FINITE_CUMULATIVE, BoundKind.MAX_FINITE_RATE):
        if n_candidates is None:
            raise BoundInputError(f"{kind.value} needs |X|")
        cumulative = math.sqrt(c1_tilde(noise_var, n_candidates) * t * gamma)
    else:
        if s is None:
            raise BoundInputError(f"{kind.value} needs s_t")
        cumulative = math.pi ** 2 / 6.0 + math.sqrt(c1_check(noise_var) * t * gamma * (2.0 + s))

    if kind.value.endswith("_rate"):
        return cumulative / t
    return cumulative


def theory_report(
    t: int,
    gamma: float,
    noise_var: float,
    n_candidates: Optional[float] = None,
    grid_spec: Optional[GridSpec] = None,
    misspecified: bool = False,
) -> TheoryReport:
    """Constants and cumulative bounds at horizon t for the given gamma."""
    s = s_t(grid_spec, t) if grid_spec is not None else None
    return TheoryReport(
        t=t,
        gamma_t_greedy=gamma,
        C1=c1(noise_var),
        C1_tilde=c1_tilde(noise_var, n_candidates) if n_candidates is not None else None,
        C1_check=c1_check(noise_var),
        s_t=s,
        bound_avg=bound_rhs(BoundKind.AVG_CUMULATIVE, t, gamma, noise_var),
        bound_rate=bound_rhs(BoundKind.AVG_RATE, t, gamma, noise_var),
        bound_max_finite=(
            bound_rhs(BoundKind.MAX_FINITE_CUMULATIVE, t, gamma, noise_var, n_candidates=n_candidates)
            if n_candidates is not None else None
        ),
        bound_max_infinite=(
            bound_rhs(BoundKind.MAX_INFINITE_CUMULATIVE, t, gamma, noise_var, s=s)
            if s is not None else None
        ),
        misspecified=misspecified,
    )
