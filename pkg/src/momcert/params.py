"""Certified parameter bundles for the momentum solvers and the flow.

Each constructor packages one admissible parameter choice together with
every derived constant the certificates need: the energy weights (xi, eta,
theta), the per-step contraction factor A, the geometric rate rho, the
positivity margin R_omega entering the gap bound, and the prescription for
the initial velocity. Bundles are frozen; anything downstream can re-audit
one with `check_constraints`, which re-derives every inequality and reports
violations with both sides evaluated.

Three growth regimes are supported. "sc" assumes strong convexity along
rays to the minimizer, "qg" assumes quadratic growth plus plain convexity,
and "pl" assumes gradient domination only. alpha defaults to the largest
admissible damping for the requested regime, which maximizes the certified
rate; callers may pass a smaller alpha and keep certificates valid.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Union

__all__ = [
    "Regime",
    "AgmParams",
    "PgmParams",
    "OdeParams",
    "agm_params_sc",
    "agm_params_qg",
    "agm_params_pl",
    "agm_params_nesterov",
    "pgm_params_sc",
    "pgm_params_qg",
    "ode_params_sc",
    "ode_params_qg",
    "ode_params_pl",
    "check_constraints",
]


class Regime(enum.Enum):
    STRONGLY_CONVEX = "sc"
    QUADRATIC_GROWTH = "qg"
    POLYAK_LOJASIEWICZ = "pl"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _check_mu_l(mu: float, big_l: float) -> None:
    _require(0.0 < mu < big_l, f"need 0 < mu < L, got mu={mu}, L={big_l}")


# Relative slack used when validating a caller-supplied alpha against the
# regime maximum, so that alpha computed as exactly the maximum upstream
# round-trips through floats.
_ALPHA_SLACK = 1e-12


@dataclass(frozen=True)
class AgmParams:
    """Parameters for the discrete momentum method with gradient correction."""

    regime: Regime
    mu: float
    L: float
    q: float            # mu / L
    h: float            # step, 1 / sqrt(L)
    alpha: float        # viscous damping
    gamma: float        # gradient weight
    omega: float        # energy interpolation knob in [0, 1]
    xi: float           # energy anchor coefficient
    eta: float          # negative-quadratic energy weight
    theta: float        # gap weight inside the energy
    A: float            # certified contraction: (1 + A h) E_{k+1} <= E_k
    rho: float          # geometric rate in the gap bound (1 + rho)^-k
    R_omega: float      # positivity margin relating energy to gap
    v0_coeff: float     # v0 = -v0_coeff * h * grad f(x0)

    @property
    def bound_prefactor(self) -> float:
        """C in the certified bound gap_k <= C * gap_0 / (1 + rho)^k."""
        if self.regime is Regime.STRONGLY_CONVEX:
            return (2.0 + self.omega) / self.R_omega
        if self.regime is Regime.QUADRATIC_GROWTH:
            return 2.0 / self.R_omega
        return 1.0


@dataclass(frozen=True)
class PgmParams:
    """Parameters for the proximal variant (composite objectives)."""

    regime: Regime
    mu: float
    L: float
    q: float
    h: float
    alpha: float
    omega: float
    xi: float
    eta: float
    theta: float
    A: float            # certificate contraction, rho <= A h
    rho: float          # rate actually used in the gap bound
    R_omega: float

    @property
    def bound_prefactor(self) -> float:
        if self.regime is Regime.STRONGLY_CONVEX:
            return (2.0 + self.omega) / self.R_omega
        return 2.0 / self.R_omega


@dataclass(frozen=True)
class OdeParams:
    """Parameters for the damped flow and its energy certificate."""

    regime: Regime
    mu: float
    alpha: float        # viscous damping
    beta: float         # gradient-difference damping
    gamma: float        # gradient weight
    theta: float        # gap weight inside the energy
    omega: float
    xi: float
    eta: float          # equals omega * xi * (alpha - xi)
    decay_rate: float   # certified: eps(t) <= eps(0) exp(-decay_rate t)
    prefactor: float    # certified: gap(t) <= prefactor * gap(0) exp(-decay_rate t)


# ----------------------------------------------------------------------
# discrete momentum bundles


def _agm_eta_theta(alpha: float, gamma: float, omega: float, xi: float, h: float):
    ah = alpha * h
    den = (1.0 + ah) * (1.0 + (1.0 + omega) * xi * h)
    eta = omega * (alpha - xi) * xi / den
    theta = gamma - omega * (alpha - xi) * h * (1.0 + (gamma + 1.0) * xi * h) / den
    return eta, theta


def _agm_contraction(alpha: float, omega: float, xi: float, h: float) -> float:
    return (1.0 + omega) * (alpha - xi) / (1.0 + (1.0 + omega) * xi * h)


def agm_params_sc(
    mu: float, L: float, gamma: float, omega: float, alpha: Optional[float] = None
) -> AgmParams:
    """Strongly convex bundle. gamma in [1, 2], omega in [0, 1].

    Defaults to the fastest admissible damping
    alpha = (2 + omega) sqrt(mu gamma / (1 + omega)); the certified rate is
    rho = (1 + omega) alpha h / ((2 + omega) + (1 + omega)^2 alpha h).
    """
    _check_mu_l(mu, L)
    _require(1.0 <= gamma <= 2.0, f"need gamma in [1, 2], got {gamma}")
    _require(0.0 <= omega <= 1.0, f"need omega in [0, 1], got {omega}")
    alpha_max = (2.0 + omega) * math.sqrt(mu * gamma / (1.0 + omega))
    if alpha is None:
        alpha = alpha_max
    _require(
        0.0 < alpha <= alpha_max * (1.0 + _ALPHA_SLACK),
        f"need 0 < alpha <= {alpha_max:.12g}, got {alpha}",
    )
    h = 1.0 / math.sqrt(L)
    ah = alpha * h
    xi = (1.0 + omega) / (2.0 + omega) * alpha
    eta, theta = _agm_eta_theta(alpha, gamma, omega, xi, h)
    big_a = _agm_contraction(alpha, omega, xi, h)
    rho = (1.0 + omega) * ah / ((2.0 + omega) + (1.0 + omega) ** 2 * ah)
    r_om = 1.0 - (2.0 * omega / ((1.0 + omega) * (2.0 + omega))) * (
        (2.0 + omega) + ah
    ) / (1.0 + ah)
    v0 = (2.0 + omega) / ((2.0 + omega) + (1.0 + omega) * ah)
    return AgmParams(
        regime=Regime.STRONGLY_CONVEX,
        mu=mu, L=L, q=mu / L, h=h,
        alpha=alpha, gamma=gamma, omega=omega,
        xi=xi, eta=eta, theta=theta,
        A=big_a, rho=rho, R_omega=r_om, v0_coeff=v0,
    )


def agm_params_qg(
    mu: float, L: float, gamma: float, omega: float, alpha: Optional[float] = None
) -> AgmParams:
    """Quadratic-growth bundle (convex f with mu-quadratic growth).

    With r = sqrt(1 + omega), alpha defaults to
    (2 + omega + r) / (1 + omega + r) * sqrt(mu gamma).
    """
    _check_mu_l(mu, L)
    _require(1.0 <= gamma <= 2.0, f"need gamma in [1, 2], got {gamma}")
    _require(0.0 <= omega <= 1.0, f"need omega in [0, 1], got {omega}")
    r = math.sqrt(1.0 + omega)
    alpha_max = (2.0 + omega + r) / (1.0 + omega + r) * math.sqrt(mu * gamma)
    if alpha is None:
        alpha = alpha_max
    _require(
        0.0 < alpha <= alpha_max * (1.0 + _ALPHA_SLACK),
        f"need 0 < alpha <= {alpha_max:.12g}, got {alpha}",
    )
    h = 1.0 / math.sqrt(L)
    ah = alpha * h
    xi = (1.0 + omega + r) / (2.0 + omega + r) * alpha
    eta, theta = _agm_eta_theta(alpha, gamma, omega, xi, h)
    big_a = (1.0 + omega) / (1.0 + omega + r) * xi / (1.0 + (1.0 + omega) * xi * h)
    rho = (1.0 + omega) * ah / ((2.0 + omega + r) + (1.0 + omega + r) * (1.0 + omega) * ah)
    r_om = 1.0 - omega / (1.0 + omega + r)
    v0 = (2.0 + omega + r) / ((2.0 + omega + r) + (1.0 + omega + r) * ah)
    return AgmParams(
        regime=Regime.QUADRATIC_GROWTH,
        mu=mu, L=L, q=mu / L, h=h,
        alpha=alpha, gamma=gamma, omega=omega,
        xi=xi, eta=eta, theta=theta,
        A=big_a, rho=rho, R_omega=r_om, v0_coeff=v0,
    )


def agm_params_pl(mu: float, L: float) -> AgmParams:
    """Gradient-domination bundle; no anchor term (xi = omega = 0).

    gamma and alpha are pinned by q = mu / L:
    gamma = (sqrt(2q - q^2) - q) / (1 - q), alpha h = 2q / (1 + sqrt(2q - q^2)).
    Here gamma falls in (0, 1) and the gap prefactor is exactly 1.
    """
    _check_mu_l(mu, L)
    q = mu / L
    s = math.sqrt(2.0 * q - q * q)
    gamma = (s - q) / (1.0 - q)
    ah = 2.0 * q / (1.0 + s)
    h = 1.0 / math.sqrt(L)
    alpha = ah / h
    eta, theta = _agm_eta_theta(alpha, gamma, 0.0, 0.0, h)  # eta = 0, theta = gamma
    return AgmParams(
        regime=Regime.POLYAK_LOJASIEWICZ,
        mu=mu, L=L, q=q, h=h,
        alpha=alpha, gamma=gamma, omega=0.0,
        xi=0.0, eta=eta, theta=theta,
        A=alpha, rho=ah, R_omega=1.0, v0_coeff=1.0,
    )


def agm_params_nesterov(mu: float, L: float) -> AgmParams:
    """Parameter map under which the method reproduces Nesterov's scheme.

    gamma = 1 + alpha h with alpha h = 2 sqrt(q) / (1 - sqrt(q)) makes the
    extrapolation coefficient equal (1 - sqrt(q)) / (1 + sqrt(q)) and kills
    the second correction term in the x-update. This alpha sits slightly
    above the strongly convex cap, so the bundle is meant for the
    equivalence comparison, not for certification; `check_constraints`
    will flag it.
    """
    _check_mu_l(mu, L)
    q = mu / L
    rq = math.sqrt(q)
    _require(q < 1.0 / 9.0, f"map needs q < 1/9 to keep gamma <= 2, got q={q}")
    h = 1.0 / math.sqrt(L)
    ah = 2.0 * rq / (1.0 - rq)
    alpha = ah / h
    gamma = 1.0 + ah
    omega = 0.0
    xi = alpha / 2.0
    eta, theta = _agm_eta_theta(alpha, gamma, omega, xi, h)
    big_a = _agm_contraction(alpha, omega, xi, h)
    return AgmParams(
        regime=Regime.STRONGLY_CONVEX,
        mu=mu, L=L, q=q, h=h,
        alpha=alpha, gamma=gamma, omega=omega,
        xi=xi, eta=eta, theta=theta,
        A=big_a, rho=big_a * h, R_omega=1.0,
        v0_coeff=1.0 / (1.0 + xi * h),
    )


# ----------------------------------------------------------------------
# proximal bundles


def _pgm_eta_theta(alpha: float, omega: float, xi: float, h: float):
    eta = omega * xi * (alpha - xi) / (1.0 + (1.0 + omega) * xi * h)
    theta = (1.0 + (alpha - xi) * h) * (1.0 + xi * h + omega * (alpha - xi) * h)
    return eta, theta


def _pgm_contraction(alpha: float, omega: float, xi: float, h: float) -> float:
    return (1.0 + omega) * (alpha - xi) * (
        1.0 - omega * xi * h / (1.0 + (1.0 + omega) * xi * h)
    )


def pgm_params_sc(
    mu: float, L: float, omega: float, alpha: Optional[float] = None
) -> PgmParams:
    """Strongly convex composite bundle.

    alpha defaults to (2 + omega) sqrt(mu / (1 + omega)). The bound rate
    rho = (1 + omega) alpha h / ((2 + omega) + omega (1 + omega) alpha h)
    satisfies rho <= A h, with equality only at omega = 0.
    """
    _check_mu_l(mu, L)
    _require(0.0 <= omega <= 1.0, f"need omega in [0, 1], got {omega}")
    alpha_max = (2.0 + omega) * math.sqrt(mu / (1.0 + omega))
    if alpha is None:
        alpha = alpha_max
    _require(
        0.0 < alpha <= alpha_max * (1.0 + _ALPHA_SLACK),
        f"need 0 < alpha <= {alpha_max:.12g}, got {alpha}",
    )
    h = 1.0 / math.sqrt(L)
    ah = alpha * h
    xi = (1.0 + omega) / (2.0 + omega) * alpha
    eta, theta = _pgm_eta_theta(alpha, omega, xi, h)
    big_a = _pgm_contraction(alpha, omega, xi, h)
    rho = (1.0 + omega) * ah / ((2.0 + omega) + omega * (1.0 + omega) * ah)
    r_om = ((1.0 - omega) + (1.0 + omega) * ah) / (1.0 + (1.0 + omega) * ah)
    return PgmParams(
        regime=Regime.STRONGLY_CONVEX,
        mu=mu, L=L, q=mu / L, h=h,
        alpha=alpha, omega=omega,
        xi=xi, eta=eta, theta=theta,
        A=big_a, rho=rho, R_omega=r_om,
    )


def pgm_params_qg(
    mu: float, L: float, omega: float, alpha: Optional[float] = None
) -> PgmParams:
    """Composite bundle under quadratic growth of F (f merely convex).

    R_omega is stored as 1 / sqrt(1 + omega): the energy controls the gap
    through E_k >= theta * R_omega * gap, which makes the bound prefactor
    2 sqrt(1 + omega) come out of the same formula as everywhere else.
    """
    _check_mu_l(mu, L)
    _require(0.0 <= omega <= 1.0, f"need omega in [0, 1], got {omega}")
    r = math.sqrt(1.0 + omega)
    alpha_max = (2.0 + omega + r) / (1.0 + omega + r) * math.sqrt(mu)
    if alpha is None:
        alpha = alpha_max
    _require(
        0.0 < alpha <= alpha_max * (1.0 + _ALPHA_SLACK),
        f"need 0 < alpha <= {alpha_max:.12g}, got {alpha}",
    )
    h = 1.0 / math.sqrt(L)
    ah = alpha * h
    xi = (1.0 + omega + r) / (2.0 + omega + r) * alpha
    eta, theta = _pgm_eta_theta(alpha, omega, xi, h)
    big_a = _pgm_contraction(alpha, omega, xi, h)
    rho = (1.0 + omega) * ah / ((2.0 + omega + r) + omega * (1.0 + omega + r) * ah)
    return PgmParams(
        regime=Regime.QUADRATIC_GROWTH,
        mu=mu, L=L, q=mu / L, h=h,
        alpha=alpha, omega=omega,
        xi=xi, eta=eta, theta=theta,
        A=big_a, rho=rho, R_omega=1.0 / r,
    )


# ----------------------------------------------------------------------
# flow bundles


def ode_params_sc(
    mu: float,
    alpha: float,
    beta: float,
    omega: float,
    theta_opt: Optional[float] = None,
) -> OdeParams:
    """Flow bundle under strong convexity along rays to the minimizer.

    theta defaults to the smallest admissible value
    max(omega / 2, (1+omega)/(2+omega)^2 * alpha^2/mu * (1 + omega alpha beta/(2+omega)));
    gamma is then theta + alpha beta / (2 + omega) and the energy decays at
    rate (1 + omega) / (2 + omega) * alpha.
    """
    _require(mu > 0, f"need mu > 0, got {mu}")
    _require(alpha > 0, f"need alpha > 0, got {alpha}")
    _require(beta > 0, f"need beta > 0, got {beta}")
    _require(0.0 <= omega <= 1.0, f"need omega in [0, 1], got {omega}")
    lower = (
        (1.0 + omega) / (2.0 + omega) ** 2
        * alpha ** 2 / mu
        * (1.0 + omega * alpha * beta / (2.0 + omega))
    )
    theta = max(lower, omega / 2.0) if theta_opt is None else float(theta_opt)
    _require(
        theta >= lower * (1.0 - 1e-12),
        f"need theta >= (1+w)/(2+w)^2 * a^2/mu * (1 + w a b/(2+w)) = {lower:.12g}, "
        f"got theta = {theta}",
    )
    _require(theta >= omega / 2.0 - 1e-15, f"need theta >= omega/2 = {omega/2}, got {theta}")
    gamma = theta + alpha * beta / (2.0 + omega)
    xi = (1.0 + omega) / (2.0 + omega) * alpha
    eta = omega * xi * (alpha - xi)
    rate = (1.0 + omega) / (2.0 + omega) * alpha
    wab = omega * alpha * beta / (2.0 + omega)
    prefactor = (2.0 + wab) / ((1.0 - omega) + wab)
    return OdeParams(
        regime=Regime.STRONGLY_CONVEX,
        mu=mu, alpha=alpha, beta=beta, gamma=gamma, theta=theta,
        omega=omega, xi=xi, eta=eta,
        decay_rate=rate, prefactor=prefactor,
    )


def ode_params_qg(
    mu: float,
    alpha: float,
    beta: float,
    omega: float,
    theta_opt: Optional[float] = None,
) -> OdeParams:
    """Flow bundle under quadratic growth (convex f)."""
    _require(mu > 0, f"need mu > 0, got {mu}")
    _require(alpha > 0, f"need alpha > 0, got {alpha}")
    _require(beta > 0, f"need beta > 0, got {beta}")
    _require(0.0 <= omega <= 1.0, f"need omega in [0, 1], got {omega}")
    r = math.sqrt(1.0 + omega)
    lower = (
        (1.0 + omega + r) ** 2 / (2.0 + omega + r) ** 2
        * alpha ** 2 / mu
        * (1.0 + omega * alpha * beta / (r * (2.0 + omega + r)))
    )
    theta = max(lower, omega / 2.0) if theta_opt is None else float(theta_opt)
    _require(
        theta >= lower * (1.0 - 1e-12),
        f"need theta >= ((1+w+r)/(2+w+r))^2 * a^2/mu * (1 + w a b/(r(2+w+r))) "
        f"= {lower:.12g}, got theta = {theta}",
    )
    _require(theta >= omega / 2.0 - 1e-15, f"need theta >= omega/2 = {omega/2}, got {theta}")
    gamma = theta + alpha * beta / (2.0 + omega + r)
    xi = (1.0 + omega + r) / (2.0 + omega + r) * alpha
    eta = omega * xi * (alpha - xi)
    rate = (1.0 + omega) / (2.0 + omega + r) * alpha
    return OdeParams(
        regime=Regime.QUADRATIC_GROWTH,
        mu=mu, alpha=alpha, beta=beta, gamma=gamma, theta=theta,
        omega=omega, xi=xi, eta=eta,
        decay_rate=rate, prefactor=1.0 + r,
    )


def ode_params_pl(mu: float, beta: float, theta: float = 1.0) -> OdeParams:
    """Flow bundle under gradient domination only; convexity not needed.

    The damping is tied to the geometry, alpha = mu beta, the energy is
    kinetic plus theta times the gap (no anchor), and the certified decay
    rate is 2 mu beta with prefactor exactly 1.
    """
    _require(mu > 0, f"need mu > 0, got {mu}")
    _require(beta > 0, f"need beta > 0, got {beta}")
    _require(theta > 0, f"need theta > 0, got {theta}")
    alpha = mu * beta
    gamma = theta + alpha * beta
    return OdeParams(
        regime=Regime.POLYAK_LOJASIEWICZ,
        mu=mu, alpha=alpha, beta=beta, gamma=gamma, theta=theta,
        omega=0.0, xi=0.0, eta=0.0,
        decay_rate=2.0 * mu * beta, prefactor=1.0,
    )


# ----------------------------------------------------------------------
# audit


def _viol(out: list, name: str, lhs: float, op: str, rhs: float, tol: float = 0.0):
    ok = {
        "<=": lhs <= rhs + tol,
        ">=": lhs >= rhs - tol,
        "==": abs(lhs - rhs) <= tol,
        ">": lhs > rhs - tol,
    }[op]
    if not ok:
        out.append(f"{name}: need {lhs:.12g} {op} {rhs:.12g}")


def _check_agm(p: AgmParams, out: list) -> None:
    rel = 1e-12 * max(1.0, abs(p.alpha), abs(p.theta))
    _viol(out, "mu > 0", p.mu, ">", 0.0)
    _viol(out, "mu < L", p.mu, "<=", p.L, -abs(p.L) * 1e-15)
    _viol(out, "h == 1/sqrt(L)", p.h, "==", 1.0 / math.sqrt(p.L), 1e-15 * p.h)
    _viol(out, "q == mu/L", p.q, "==", p.mu / p.L, 1e-15)
    _viol(out, "omega in [0,1] (lower)", p.omega, ">=", 0.0)
    _viol(out, "omega in [0,1] (upper)", p.omega, "<=", 1.0)
    w, a, h = p.omega, p.alpha, p.h
    if p.regime in (Regime.STRONGLY_CONVEX, Regime.QUADRATIC_GROWTH):
        _viol(out, "gamma >= 1", p.gamma, ">=", 1.0, 1e-12)
        _viol(out, "gamma <= 2", p.gamma, "<=", 2.0, 1e-12)
        _viol(out, "xi >= (1+w)/(2+w) alpha", p.xi, ">=",
              (1.0 + w) / (2.0 + w) * a, rel)
        _viol(out, "xi <= alpha", p.xi, "<=", a, rel)
        eta, theta = _agm_eta_theta(a, p.gamma, w, p.xi, h)
        _viol(out, "eta matches its definition", p.eta, "==", eta, 1e-12 * max(1.0, abs(eta)))
        _viol(out, "theta matches its definition", p.theta, "==", theta,
              1e-12 * max(1.0, abs(theta)))
        if p.regime is Regime.STRONGLY_CONVEX:
            amax = (2.0 + w) * math.sqrt(p.mu * p.gamma / (1.0 + w))
            _viol(out, "alpha <= (2+w) sqrt(mu gamma/(1+w))", a, "<=", amax,
                  amax * _ALPHA_SLACK)
            big_a = _agm_contraction(a, w, p.xi, h)
        else:
            r = math.sqrt(1.0 + w)
            amax = (2.0 + w + r) / (1.0 + w + r) * math.sqrt(p.mu * p.gamma)
            _viol(out, "alpha <= (2+w+r)/(1+w+r) sqrt(mu gamma)", a, "<=", amax,
                  amax * _ALPHA_SLACK)
            big_a = (1.0 + w) / (1.0 + w + r) * p.xi / (1.0 + (1.0 + w) * p.xi * h)
        _viol(out, "A matches its definition", p.A, "==", big_a,
              1e-12 * max(1.0, abs(big_a)))
        _viol(out, "rho == A h", p.rho, "==", p.A * h, 1e-12 * max(1e-30, p.A * h))
        if p.regime is Regime.STRONGLY_CONVEX:
            r_om = 1.0 - (2.0 * w / ((1.0 + w) * (2.0 + w))) * ((2.0 + w) + a * h) / (1.0 + a * h)
            v0 = (2.0 + w) / ((2.0 + w) + (1.0 + w) * a * h)
        else:
            r = math.sqrt(1.0 + w)
            r_om = 1.0 - w / (1.0 + w + r)
            v0 = (2.0 + w + r) / ((2.0 + w + r) + (1.0 + w + r) * a * h)
        _viol(out, "R_omega matches its definition", p.R_omega, "==", r_om, 1e-12)
        _viol(out, "v0_coeff matches its definition", p.v0_coeff, "==", v0, 1e-12)
    else:
        q = p.q
        s = math.sqrt(2.0 * q - q * q)
        _viol(out, "gamma == (sqrt(2q-q^2)-q)/(1-q)", p.gamma, "==",
              (s - q) / (1.0 - q), 1e-12)
        _viol(out, "alpha h == 2q/(1+sqrt(2q-q^2))", a * h, "==",
              2.0 * q / (1.0 + s), 1e-12)
        _viol(out, "xi == 0", p.xi, "==", 0.0, 0.0)
        _viol(out, "omega == 0", p.omega, "==", 0.0, 0.0)
        _viol(out, "eta == 0", p.eta, "==", 0.0, 0.0)
        _viol(out, "theta == gamma", p.theta, "==", p.gamma, 1e-15)
        _viol(out, "rho == alpha h", p.rho, "==", a * h, 1e-15)
        _viol(out, "A == alpha", p.A, "==", a, 1e-15)
    _viol(out, "rho > 0", p.rho, ">", 0.0)
    _viol(out, "R_omega > 0", p.R_omega, ">", 0.0)


def _check_pgm(p: PgmParams, out: list) -> None:
    _viol(out, "mu > 0", p.mu, ">", 0.0)
    _viol(out, "mu < L", p.mu, "<=", p.L, -abs(p.L) * 1e-15)
    _viol(out, "h == 1/sqrt(L)", p.h, "==", 1.0 / math.sqrt(p.L), 1e-15 * p.h)
    _viol(out, "q < 1", p.q, "<=", 1.0, -1e-15)
    _viol(out, "omega in [0,1] (lower)", p.omega, ">=", 0.0)
    _viol(out, "omega in [0,1] (upper)", p.omega, "<=", 1.0)
    w, a, h = p.omega, p.alpha, p.h
    eta, theta = _pgm_eta_theta(a, w, p.xi, h)
    _viol(out, "eta matches its definition", p.eta, "==", eta, 1e-12 * max(1.0, abs(eta)))
    _viol(out, "theta matches its definition", p.theta, "==", theta,
          1e-12 * max(1.0, abs(theta)))
    big_a = _pgm_contraction(a, w, p.xi, h)
    _viol(out, "A matches its definition", p.A, "==", big_a, 1e-12 * max(1.0, abs(big_a)))
    _viol(out, "rho <= A h", p.rho, "<=", p.A * h, 1e-12 * max(1.0, p.A * h))
    if p.regime is Regime.STRONGLY_CONVEX:
        amax = (2.0 + w) * math.sqrt(p.mu / (1.0 + w))
        _viol(out, "alpha <= (2+w) sqrt(mu/(1+w))", a, "<=", amax, amax * _ALPHA_SLACK)
        _viol(out, "xi == (1+w)/(2+w) alpha", p.xi, "==",
              (1.0 + w) / (2.0 + w) * a, 1e-12 * a)
        r_om = ((1.0 - w) + (1.0 + w) * a * h) / (1.0 + (1.0 + w) * a * h)
        _viol(out, "R_omega matches its definition", p.R_omega, "==", r_om, 1e-12)
    elif p.regime is Regime.QUADRATIC_GROWTH:
        r = math.sqrt(1.0 + w)
        amax = (2.0 + w + r) / (1.0 + w + r) * math.sqrt(p.mu)
        _viol(out, "alpha <= (2+w+r)/(1+w+r) sqrt(mu)", a, "<=", amax, amax * _ALPHA_SLACK)
        _viol(out, "xi == (1+w+r)/(2+w+r) alpha", p.xi, "==",
              (1.0 + w + r) / (2.0 + w + r) * a, 1e-12 * a)
        _viol(out, "R_omega == 1/sqrt(1+w)", p.R_omega, "==", 1.0 / r, 1e-15)
    else:
        out.append("regime: no gradient-domination bundle exists for the proximal method")
    _viol(out, "rho > 0", p.rho, ">", 0.0)
    _viol(out, "R_omega > 0", p.R_omega, ">", 0.0)


def _check_ode(p: OdeParams, out: list) -> None:
    _viol(out, "mu > 0", p.mu, ">", 0.0)
    _viol(out, "alpha > 0", p.alpha, ">", 0.0)
    _viol(out, "beta > 0", p.beta, ">", 0.0)
    _viol(out, "theta > 0", p.theta, ">", 0.0)
    _viol(out, "xi >= 0", p.xi, ">=", 0.0)
    _viol(out, "xi <= alpha", p.xi, "<=", p.alpha, 1e-12 * p.alpha)
    _viol(out, "eta == omega xi (alpha - xi)", p.eta, "==",
          p.omega * p.xi * (p.alpha - p.xi), 1e-12 * max(1.0, abs(p.eta)))
    w, a, b = p.omega, p.alpha, p.beta
    if p.regime is Regime.STRONGLY_CONVEX:
        _viol(out, "theta >= omega/2", p.theta, ">=", w / 2.0, 1e-15)
        lower = (1.0 + w) / (2.0 + w) ** 2 * a ** 2 / p.mu * (1.0 + w * a * b / (2.0 + w))
        _viol(out, "theta >= growth lower bound", p.theta, ">=", lower, 1e-12 * lower)
        _viol(out, "gamma == theta + alpha beta/(2+w)", p.gamma, "==",
              p.theta + a * b / (2.0 + w), 1e-12 * max(1.0, p.gamma))
        _viol(out, "xi == (1+w)/(2+w) alpha", p.xi, "==",
              (1.0 + w) / (2.0 + w) * a, 1e-12 * a)
        _viol(out, "decay == (1+w)/(2+w) alpha", p.decay_rate, "==",
              (1.0 + w) / (2.0 + w) * a, 1e-12 * a)
    elif p.regime is Regime.QUADRATIC_GROWTH:
        r = math.sqrt(1.0 + w)
        _viol(out, "theta >= omega/2", p.theta, ">=", w / 2.0, 1e-15)
        lower = ((1.0 + w + r) ** 2 / (2.0 + w + r) ** 2 * a ** 2 / p.mu
                 * (1.0 + w * a * b / (r * (2.0 + w + r))))
        _viol(out, "theta >= growth lower bound", p.theta, ">=", lower, 1e-12 * lower)
        _viol(out, "gamma == theta + alpha beta/(2+w+r)", p.gamma, "==",
              p.theta + a * b / (2.0 + w + r), 1e-12 * max(1.0, p.gamma))
        _viol(out, "xi == (1+w+r)/(2+w+r) alpha", p.xi, "==",
              (1.0 + w + r) / (2.0 + w + r) * a, 1e-12 * a)
        _viol(out, "decay == (1+w)/(2+w+r) alpha", p.decay_rate, "==",
              (1.0 + w) / (2.0 + w + r) * a, 1e-12 * a)
        _viol(out, "prefactor == 1 + sqrt(1+w)", p.prefactor, "==", 1.0 + r, 1e-12)
    else:
        _viol(out, "alpha == mu beta", p.alpha, "==", p.mu * p.beta,
              1e-12 * max(1.0, p.alpha))
        _viol(out, "gamma == theta + alpha beta", p.gamma, "==",
              p.theta + a * b, 1e-12 * max(1.0, p.gamma))
        _viol(out, "xi == 0", p.xi, "==", 0.0, 0.0)
        _viol(out, "omega == 0", p.omega, "==", 0.0, 0.0)
        _viol(out, "decay == 2 mu beta", p.decay_rate, "==", 2.0 * p.mu * p.beta,
              1e-12 * max(1.0, p.decay_rate))
        _viol(out, "prefactor == 1", p.prefactor, "==", 1.0, 0.0)
    # common identity: theta == gamma - (alpha - xi) beta
    _viol(out, "theta == gamma - (alpha - xi) beta", p.theta, "==",
          p.gamma - (p.alpha - p.xi) * p.beta, 1e-12 * max(1.0, p.theta))


def check_constraints(
    params: Union[AgmParams, PgmParams, OdeParams], regime: Regime
) -> list[str]:
    """Re-derive every admissibility condition; return violations (empty if clean).

    Each entry names the inequality and shows both sides numerically. A
    regime mismatch between the bundle and the requested regime is itself
    a violation.
    """
    out: list[str] = []
    if params.regime is not regime:
        out.append(
            f"regime: bundle was built for {params.regime.value!r}, "
            f"checked against {regime.value!r}"
        )
        return out
    if isinstance(params, AgmParams):
        _check_agm(params, out)
    elif isinstance(params, PgmParams):
        _check_pgm(params, out)
    elif isinstance(params, OdeParams):
        _check_ode(params, out)
    else:
        out.append(f"unknown bundle type {type(params).__name__}")
    return out
