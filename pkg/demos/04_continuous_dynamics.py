"""The flow the discrete methods shadow, integrated and certified.

The solver family discretizes a second-order system whose gradient-only
reformulation is integrated here with fixed-step RK4 on a small quadratic
and on the nonconvex sine benchmark. Each trajectory carries an energy
that must sit under a decaying exponential envelope; the table prints
both so the contraction is visible rather than asserted. The sine run is
the notable one: no convexity anywhere, yet gradient domination alone
pins the gap under its envelope.
"""

import math

import numpy as np
from numpy.random import default_rng

from momcert import (
    ode_params_pl,
    ode_params_qg,
    ode_params_sc,
    ode_run,
    pl_sine_problem,
    quadratic_problem,
)

BIG_L = 100.0


def show(label, trace, rate):
    t = trace.column("t")
    eps = trace.column("energy")
    gap = trace.column("f_gap")
    env = trace.column("envelope")
    print(label)
    print(f"  {'t':>6}  {'energy':>11}  {'energy env':>11}  "
          f"{'gap':>11}  {'gap env':>11}")
    idx = np.linspace(0, len(t) - 1, 6).astype(int)
    eps_env = eps[0] * np.exp(-rate * t)
    for j in idx:
        print(f"  {t[j]:>6.2f}  {eps[j]:>11.3e}  {eps_env[j]:>11.3e}  "
              f"{gap[j]:>11.3e}  {env[j]:>11.3e}")
    s = trace.summary
    print(f"  certificates: {s['certificates_checked'] - s['certificates_failed']}"
          f"/{s['certificates_checked']} passed\n")


def main() -> None:
    d = 4
    mu = 1.0
    spectrum = np.geomspace(mu, BIG_L, d)
    obj = quadratic_problem(spectrum, 3.0 * default_rng(9).standard_normal(d),
                            seed=4)
    x0 = obj.minimizer + 5.0 * default_rng(10).standard_normal(d)
    beta = 1.0 / math.sqrt(BIG_L)

    p = ode_params_sc(mu, 2.0 * math.sqrt(mu), beta, omega=0.0)
    show(f"strongly convex flow, rate {p.decay_rate:g}",
         ode_run(obj, p, x0, 10.0 / p.decay_rate), p.decay_rate)

    p = ode_params_qg(mu, (2.0 - math.sqrt(2.0) / 2.0) * math.sqrt(mu), beta,
                      omega=1.0)
    show(f"quadratic growth flow, rate {p.decay_rate:.4f}",
         ode_run(obj, p, x0, 10.0 / p.decay_rate), p.decay_rate)

    sine = pl_sine_problem()
    p = ode_params_pl(sine.pl_constant, 1.0 / math.sqrt(sine.lipschitz))
    show(f"gradient-dominated flow on the sine benchmark, rate {p.decay_rate:.4f}",
         ode_run(sine, p, np.array([2.0]), 10.0 / p.decay_rate), p.decay_rate)


if __name__ == "__main__":
    main()
