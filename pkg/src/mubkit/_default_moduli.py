"""Pinned default modulus polynomials (generated offline, frozen here).

Field entries map (p, n) with n >= 2 to the lexicographically least monic
irreducible polynomial of degree n over Z_p, where candidates are ordered
by reading the non-leading coefficients (c0, ..., c_{n-1}) as a base-p
integer.  Degree-1 fields use the polynomial x and are not tabulated.

Ring entries map n to the least monic degree-n polynomial over Z_4 whose
mod-2 reduction is primitive over F_2 and whose residue class of x has
multiplicative order exactly 2^n - 1 (so the power sequence of x really
enumerates the Teichmueller representatives).  Both tables can be
regenerated with the search routines in their home modules; tests do so
for the small entries.
"""

# coefficient tuples are ascending: (c0, c1, ..., 1)
DEFAULT_FIELD_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (2, 0, 1, 0, 0, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (5, 4): (2, 0, 0, 0, 1),
    (5, 5): (1, 4, 0, 0, 0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
    (7, 4): (1, 1, 0, 0, 1),
    (11, 2): (1, 0, 1),
    (11, 3): (4, 1, 0, 1),
    (13, 2): (2, 0, 1),
    (13, 3): (2, 0, 0, 1),
    (17, 2): (3, 0, 1),
    (19, 2): (1, 0, 1),
    (23, 2): (1, 0, 1),
    (29, 2): (2, 0, 1),
    (31, 2): (1, 0, 1),
    (37, 2): (2, 0, 1),
    (41, 2): (3, 0, 1),
    (43, 2): (1, 0, 1),
    (47, 2): (1, 0, 1),
    (53, 2): (2, 0, 1),
    (59, 2): (1, 0, 1),
    (61, 2): (2, 0, 1),
}

DEFAULT_RING_MODULI = {
    1: (3, 1),
    2: (1, 1, 1),
    3: (3, 1, 2, 1),
    4: (1, 3, 2, 0, 1),
    5: (3, 2, 3, 0, 0, 1),
    6: (1, 3, 0, 2, 0, 0, 1),
    7: (3, 1, 0, 0, 2, 0, 0, 1),
    8: (1, 2, 1, 3, 0, 1, 0, 0, 1),
    9: (3, 0, 2, 0, 3, 0, 0, 0, 0, 1),
    10: (1, 0, 0, 3, 0, 2, 0, 0, 0, 0, 1),
    11: (3, 2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    12: (1, 0, 2, 3, 1, 2, 2, 3, 2, 0, 0, 0, 1),
}
