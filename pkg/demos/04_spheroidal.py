"""
Prolate spheroidal spectra
==========================

Hydrogen separates in prolate spheroidal coordinates around a focus at the
nucleus.  The separation constants are eigenvalues of a small tridiagonal
matrix; this script solves it, follows the small-f limit and prints the
secular polynomial cross-check.
"""

from wedgeqm import spheroidal

spec = spheroidal.SpheroidalSpec(mu=0.5, f=1.0, N=1)
for form in spheroidal.FORMS:
    sols = spheroidal.solve_spheroidal(spec, form)
    print(form, [round(s.A, 12) for s in sols])

# node counts identify each solution with a (n_u, n_v) pair
for s in spheroidal.solve_spheroidal(spheroidal.SpheroidalSpec(1.2, 0.7, 3)):
    print(f"A={s.A:9.4f}  n_u={s.n_u}  n_v={s.n_v}  residual={s.residual:.1e}")

# as f -> 0 the constants approach the spherical values n(n + 2 mu + 1)
tiny = spheroidal.SpheroidalSpec(1.2, 1e-8, 3)
print([round(s.A, 6) for s in spheroidal.solve_spheroidal(tiny)], [n * (n + 3.4) for n in range(4)])

# compare the secular polynomials of both recurrence forms with the reference ones
report = spheroidal.charpoly_crosscheck(spec)
for row in report.rows:
    print(row.power, row.values)
print("default form mismatches:", report.mismatches("ode_matches_nu"))
print("printed form mismatches:", report.mismatches("printed_form_matches_nu"))
