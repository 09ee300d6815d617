# Location-scale Frechet laws g(x; alpha, s, m) with support x > m.
#
# No closed form is used here; the divergence is computed by quadrature.
#
# Run:  python demos/05_generalized_family.py

from frechet_kl import GeneralizedFrechet, kl_closed_form, kl_generalized_quadrature

p = GeneralizedFrechet(alpha=1.0, s=2.0, m=3.0)
q = GeneralizedFrechet(alpha=2.0, s=2.0, m=3.0)
print("pdf at 5:", p.pdf(5.0), " cdf at 5:", p.cdf(5.0), " pdf at 3:", p.pdf(3.0))

# A common affine map leaves the divergence unchanged.
print("shared (s, m):", kl_generalized_quadrature(p, q).value, " one-parameter:", kl_closed_form(1, 2).value)

# Different scales and locations: only quadrature applies.
r = kl_generalized_quadrature(GeneralizedFrechet(2.0, 1.0, 1.0), GeneralizedFrechet(2.0, 1.5, 0.0))
print("D((2,1,1) || (2,1.5,0)) =", r.value, "+-", r.error_estimate)

# If p starts to the left of q it puts mass where q has none.
r = kl_generalized_quadrature(GeneralizedFrechet(2.0, 1.0, 0.0), GeneralizedFrechet(2.0, 1.0, 1.0))
print("D((2,1,0) || (2,1,1)) =", r.value)
