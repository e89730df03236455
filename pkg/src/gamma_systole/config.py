"""Centralised numeric tolerances.

Every check in the package and every line printed by ``verify`` reads its
threshold from here, so a failing check can always be traced to one number.
"""

# arccosh arguments within this distance below 1 are clamped to 1
ACOSH_CLAMP = 1e-9

# families whose lifted lengths are this close to the minimum are reported as tied
ARGMIN_TIE = 1e-12

TOLERANCES = {
    "trirectangle_identity": 1e-12,
    "lift_table": 0.0,
    "endpoint_ordering": 0.0,
    "partials_fd_rel": 1e-6,
    "dual_involution": 1e-8,
    "dual_systole": 1e-10,
    "dual_fixed_point": 1e-8,
    "cubic_residual": 1e-9,
    "closed_vs_numeric": 1e-10,
    "equalization": 1e-9,
    "annulus_residual": 1e-6,
    "table1": 5e-5,
    "bolza": 1e-9,
    "brute_force": 1e-5,
}

# published cosh(systole / 2) of the maximal surface by genus, 4 decimals
TABLE1 = {2: 2.4142, 3: 3.1787, 4: 3.5989, 5: 3.8473, 6: 4.0044}
