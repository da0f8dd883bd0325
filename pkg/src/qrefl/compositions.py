"""Factor realizations of the two composite identities.

Generated by tools/derive_compositions.py: anchor vertices
are solved on the evolving seed and validated against the
reference 46-factor products, the reference tropical signs,
and the seed-level identity.  Regenerate with the tool
rather than editing by hand.
"""

REFLECTION_LHS = (
    ('R', (1, 2, 4), (17, 16, 18, 9), ((16, 18), (9, 17))),
    ('K', (1, 3, 5, 6), (10, 3, 11, 2, 16, 4, 11, 2, 10, 3), ()),
    ('Rbar', (1, 7, 8), (12, 13, 11, 20), ((13, 11), (20, 12))),
    ('R', (2, 5, 8), (19, 9, 13, 16), ((9, 13), (16, 19))),
    ('K', (2, 3, 7, 9), (10, 5, 20, 4, 9, 6, 20, 4, 10, 5), ()),
    ('K', (4, 6, 8, 9), (17, 3, 13, 2, 18, 4, 13, 2, 17, 3), ()),
    ('Rbar', (4, 5, 7), (19, 9, 13, 16), ((9, 13), (16, 19))),
)

REFLECTION_RHS = (
    ('R', (4, 5, 7), (19, 18, 20, 11), ((18, 20), (11, 19))),
    ('K', (4, 6, 8, 9), (12, 5, 13, 4, 18, 6, 13, 4, 12, 5), ()),
    ('K', (2, 3, 7, 9), (10, 3, 20, 2, 9, 4, 20, 2, 10, 3), ()),
    ('Rbar', (2, 5, 8), (19, 18, 20, 11), ((18, 20), (11, 19))),
    ('R', (1, 7, 8), (17, 16, 18, 9), ((16, 18), (9, 17))),
    ('K', (1, 3, 5, 6), (10, 5, 11, 4, 16, 6, 11, 4, 10, 5), ()),
    ('Rbar', (1, 2, 4), (12, 13, 11, 20), ((13, 11), (20, 12))),
)

TETRAHEDRON_LHS = (
    ('R', (1, 2, 4), (12, 11, 13, 6), ((11, 13), (6, 12))),
    ('R', (1, 3, 5), (7, 11, 8, 3), ((11, 8), (3, 7))),
    ('R', (2, 3, 6), (14, 6, 15, 3), ((6, 15), (3, 14))),
    ('R', (4, 5, 6), (12, 13, 15, 8), ((13, 15), (8, 12))),
)

TETRAHEDRON_RHS = (
    ('R', (4, 5, 6), (14, 13, 15, 8), ((13, 15), (8, 14))),
    ('R', (2, 3, 6), (7, 6, 15, 3), ((6, 15), (3, 7))),
    ('R', (1, 3, 5), (12, 11, 8, 3), ((11, 8), (3, 12))),
    ('R', (1, 2, 4), (14, 11, 13, 6), ((11, 13), (6, 14))),
)

TETRAHEDRON_FINAL = {'LHS': ((7, 14),), 'RHS': ((7, 12),)}
