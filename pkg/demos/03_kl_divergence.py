# KL divergence between two Frechet laws, three ways.
#
#   D(p||q) = ln(a1/a2) + (a2 - a1)/a1 * gamma_E - 1 + Gamma(1 + a2/a1)
#
# Run:  python demos/03_kl_divergence.py

import numpy as np

from frechet_kl import (
    boxed_formula_as_printed,
    kl_closed_form,
    kl_monte_carlo,
    kl_quadrature,
)

rng = np.random.default_rng(7)
print(f"{'a1':>5} {'a2':>5} {'closed form':>20} {'quadrature':>20} {'monte carlo':>22}")
for a1, a2 in [(1, 2), (2, 1), (3, 3), (0.5, 1.5), (4, 0.5), (0.5, 4)]:
    c = kl_closed_form(a1, a2)
    q = kl_quadrature(a1, a2, tol=1e-10)
    m = kl_monte_carlo(a1, a2, 200_000, rng)
    print(
        f"{a1:5g} {a2:5g} {c.value:20.12f} {q.value:20.12f} "
        f"{m.value:12.5f} +- {m.error_estimate:.5f}"
    )

# The divergence is asymmetric ...
print("D(1||2) =", kl_closed_form(1, 2).value, " D(2||1) =", kl_closed_form(2, 1).value)

# ... and depends only on the ratio a2/a1, because x -> x**c maps shape a
# to a/c and KL is invariant under invertible maps.
print("D(0.25||0.5) =", kl_closed_form(0.25, 0.5).value)

# Using Gamma((a1 + a2)/2) in place of Gamma(1 + a2/a1) gives something
# that is not a divergence: for identical laws it equals Gamma(a) - 1,
# which is non-zero except at shapes 1 and 2, and it can be negative.
for a in (1, 2, 3, 5):
    print(f"a1=a2={a}: correct {kl_closed_form(a, a).value:.3g}, "
          f"with Gamma((a1+a2)/2) {boxed_formula_as_printed(a, a):.6g}")
print("with Gamma((a1+a2)/2) at (1, 2):", boxed_formula_as_printed(1, 2))
