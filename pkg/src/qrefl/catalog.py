"""Transcribed operator data: monomial maps, substitution rules, canonical
transformations, dilogarithm factor lists, parameter systems, rays.

Encodings
---------
* torus monomial: (s_exp, ((label, power), ...)) read as an ordered
  product q^(s_exp/2)... precisely s^s_exp * Y_l1^p1 * Y_l2^p2 * ...
* torus dilog factor: (base, expo, s_exp, ((label, power), ...)) for
  Psi_{q^base}(monomial)^expo.
* canonical exponent (cexp): {'u3': 1, 'w2': -1, ...}.
* parameter form (pexp): {'a1': 1, 'e3': Fraction(-1,2), ...}.
* weyl dilog factor: (base, expo, pexp, cexp).
* affine map on canonical variables: {'u1': (pexp, cexp), ...} with the
  linear part inside cexp.
* group-element factor list: [('quad', {(i,j): coeff}), ('lin', {'u1':
  pexp, ...})], trailing exchanged pair.
Pattern entries use indices 1..4 (or 1..3); ``subst_indices`` relabels
them into ambient indices.
"""

from __future__ import annotations

from fractions import Fraction

F = Fraction
H = Fraction(1, 2)

# ---------------------------------------------------------------------------
# monomial maps of the quantum tori (pattern labels as in the source tables)

TAU_R = {
    # sign sequence (-, -, +, +)
    "-": {0: (0, ((0, 1),)),
          1: (4, ((1, 1), (5, 1), (6, 1))),
          2: (0, ((5, 1),)),
          3: (0, ((3, 1),)),
          4: (0, ((4, 1),)),
          5: (0, ((2, 1),)),
          6: (-4, ((2, -1), (6, -1), (7, -1))),
          7: (0, ((2, 1), (5, -1), (7, 1))),
          8: (0, ((6, 1), (7, 1), (8, 1))),
          9: (0, ((9, 1),))},
    # sign sequence (-, +, -, +)
    "+": {0: (0, ((0, 1),)),
          1: (0, ((1, 1),)),
          2: (0, ((7, 1),)),
          3: (0, ((3, 1), (6, 1), (7, 1))),
          4: (0, ((4, 1), (5, 1), (6, 1))),
          5: (0, ((2, 1), (5, 1), (7, -1))),
          6: (0, ((2, -1), (5, -1), (6, -1))),
          7: (0, ((2, 1),)),
          8: (0, ((8, 1),)),
          9: (0, ((9, 1),))},
}

TAU_RBAR = {
    "-": {0: (0, ((0, 1),)),
          1: (-4, ((1, 1), (6, 1), (7, 1))),
          2: (0, ((5, 1),)),
          3: (0, ((3, 1),)),
          4: (0, ((4, 1),)),
          5: (0, ((2, 1),)),
          6: (-4, ((2, -1), (6, -1), (7, -1))),
          7: (0, ((2, 1), (5, -1), (7, 1))),
          8: (0, ((5, 1), (6, 1), (8, 1))),
          9: (0, ((9, 1),))},
    "+": {0: (0, ((0, 1),)),
          1: (0, ((1, 1),)),
          2: (0, ((7, 1),)),
          3: (0, ((3, 1), (5, 1), (6, 1))),
          4: (0, ((4, 1), (6, 1), (7, 1))),
          5: (0, ((2, 1), (5, 1), (7, -1))),
          6: (0, ((2, -1), (5, -1), (6, -1))),
          7: (0, ((2, 1),)),
          8: (0, ((8, 1),)),
          9: (0, ((9, 1),))},
}

TAU_K24 = {1: (0, ((1, 1),)), 2: (0, ((2, 1),)), 3: (0, ((3, 1),)),
           4: (0, ((4, 1),)), 5: (0, ((5, 1),)),
           6: (0, ((6, 1), (7, 1), (8, 1))),
           7: (0, ((9, 1),)),
           8: (4, ((2, -1), (3, -1), (7, -1), (8, -1), (9, -1))),
           9: (0, ((2, 1), (4, -1), (7, 1))),
           # the composed map sends this generator to the plain symmetric
           # monomial; as an ordered product that needs prefactor q^-2,
           # which the source table omits
           10: (-4, ((3, 1), (4, 1), (8, 1), (9, 1), (10, 1))),
           11: (0, ((11, 1),))}

TAU_K13 = {1: (8, ((1, 1), (2, 1), (3, 1), (7, 2), (8, 2))),
           2: (0, ((4, 1), (7, -2), (9, 2))),
           3: (-8, ((2, -1), (3, -1), (4, -1), (8, -2), (9, -2))),
           4: (0, ((2, 1),)),
           5: (0, ((3, 1), (4, 1), (5, 1))),
           6: (0, ((6, 1),)), 7: (0, ((7, 1),)), 8: (0, ((8, 1),)),
           9: (0, ((9, 1),)), 10: (0, ((10, 1),)), 11: (0, ((11, 1),))}

# per-step decomposition signs for the named transformations
EPS_R = {"-": (-1, -1, 1, 1), "+": (-1, 1, -1, 1)}


def eps_k24(e2, e4):
    return (-1, e2, -1, e4, 1, -1, -1, -e4, 1, -e2)


def eps_k13(e1, e3):
    return (e1, -1, e3, -1, -1, 1, -e3, -1, -e1, 1)


# dilogarithm parts of the single-move operators in the initial torus
RHAT_DILOGS = {
    "+": ((1, -1, 0, ((6, -1),)),
          (1, 1, 2, ((5, 1), (6, 1))),
          (1, -1, -2, ((6, -1), (7, -1))),
          (1, 1, 0, ((2, 1), (5, 1), (6, 1)))),
    "-": ((1, -1, 0, ((6, -1),)),
          (1, -1, 2, ((5, -1), (6, -1))),
          (1, 1, -2, ((6, 1), (7, 1))),
          (1, 1, -4, ((2, 1), (6, 1), (7, 1)))),
}

K24_TORUS = {
    (1, 1): ((1, -1, 0, ((8, -1),)),
             (2, 1, 0, ((3, 1),)),
             (1, -1, 2, ((3, -1), (8, -1), (9, -1))),
             (2, 1, 0, ((2, 1),)),
             (1, 1, 2, ((7, 1), (8, 1))),
             (2, -1, 0, ((3, -2), (4, -1), (8, -2), (9, -2))),
             (1, -1, -2, ((3, -1), (4, -1), (8, -1), (9, -1))),
             (2, -1, 0, ((2, 1),)),
             (1, 1, 4, ((2, 1), (3, 1), (7, 1), (8, 1), (9, 1))),
             (2, -1, 0, ((3, 1),))),
    (1, -1): ((1, -1, 0, ((8, -1),)),
              (2, 1, 0, ((3, 1),)),
              (1, -1, 2, ((3, -1), (8, -1), (9, -1))),
              (2, -1, 0, ((2, -1),)),
              (1, 1, -2, ((2, 1), (7, 1), (8, 1))),
              (2, -1, 0, ((3, -2), (4, -1), (8, -2), (9, -2))),
              (1, -1, -2, ((3, -1), (4, -1), (8, -1), (9, -1))),
              (2, 1, 0, ((2, -1),)),
              (1, 1, 4, ((2, 1), (3, 1), (7, 1), (8, 1), (9, 1))),
              (2, -1, 0, ((3, 1),))),
    (-1, 1): ((1, -1, 0, ((8, -1),)),
              (2, -1, 0, ((3, -1),)),
              (1, -1, -2, ((8, -1), (9, -1))),
              (2, 1, 4, ((2, 1), (3, 1))),
              (1, 1, 2, ((7, 1), (8, 1))),
              (2, -1, -4, ((3, -1), (4, -1), (8, -2), (9, -2))),
              (1, -1, -2, ((3, -1), (4, -1), (8, -1), (9, -1))),
              (2, -1, 4, ((2, 1), (3, 1))),
              (1, 1, 4, ((2, 1), (3, 1), (7, 1), (8, 1), (9, 1))),
              (2, 1, 0, ((3, -1),))),
    (-1, -1): ((1, -1, 0, ((8, -1),)),
               (2, -1, 0, ((3, -1),)),
               (1, -1, -2, ((8, -1), (9, -1))),
               (2, -1, 4, ((2, -1), (3, -1))),
               (1, 1, 2, ((2, 1), (3, 1), (7, 1), (8, 1))),
               (2, -1, -4, ((3, -1), (4, -1), (8, -2), (9, -2))),
               (1, -1, -2, ((3, -1), (4, -1), (8, -1), (9, -1))),
               (2, 1, 4, ((2, -1), (3, -1))),
               (1, 1, 4, ((2, 1), (3, 1), (7, 1), (8, 1), (9, 1))),
               (2, 1, 0, ((3, -1),))),
}

K13_TORUS = {
    (1, 1): ((1, 1, 0, ((8, 1),)),
             (2, -1, 0, ((3, -1),)),
             (1, 1, 0, ((9, 1),)),
             (2, -1, -4, ((2, -1), (3, -1), (8, -2))),
             (1, -1, 0, ((2, -1), (3, -1), (7, -1), (8, -2))),
             (2, 1, -4, ((3, 1), (4, 1))),
             (1, -1, 0, ((9, 1),)),
             (2, -1, 4, ((2, -1), (3, -1), (7, -2), (8, -2))),
             (1, -1, 0, ((8, 1),)),
             (2, 1, -8, ((2, 1), (3, 1), (4, 1), (8, 2), (9, 2)))),
    (1, -1): ((1, 1, 0, ((8, 1),)),
              (2, -1, 0, ((3, -1),)),
              (1, -1, 0, ((9, -1),)),
              (2, -1, -4, ((2, -1), (3, -1), (8, -2))),
              (1, -1, 0, ((2, -1), (3, -1), (7, -1), (8, -2))),
              (2, 1, 4, ((3, 1), (4, 1), (9, 2))),
              (1, 1, 0, ((9, -1),)),
              (2, -1, 4, ((2, -1), (3, -1), (7, -2), (8, -2))),
              (1, -1, 0, ((8, 1),)),
              (2, 1, -8, ((2, 1), (3, 1), (4, 1), (8, 2), (9, 2)))),
    (-1, 1): ((1, -1, 0, ((8, -1),)),
              (2, -1, 0, ((3, -1),)),
              (1, 1, -2, ((8, 1), (9, 1))),
              (2, -1, 4, ((2, -1), (3, -1))),
              (1, -1, 2, ((2, -1), (3, -1), (7, -1), (8, -1))),
              (2, 1, -4, ((3, 1), (4, 1))),
              (1, -1, -2, ((8, 1), (9, 1))),
              (2, -1, 4, ((2, -1), (3, -1), (7, -2), (8, -2))),
              (1, 1, 0, ((8, -1),)),
              (2, 1, -8, ((2, 1), (3, 1), (4, 1), (8, 2), (9, 2)))),
    (-1, -1): ((1, -1, 0, ((8, -1),)),
               (2, -1, 0, ((3, -1),)),
               (1, -1, -2, ((8, -1), (9, -1))),
               (2, -1, 4, ((2, -1), (3, -1))),
               (1, -1, 2, ((2, -1), (3, -1), (7, -1), (8, -1))),
               (2, 1, -4, ((3, 1), (4, 1), (8, 2), (9, 2))),
               (1, 1, -2, ((8, -1), (9, -1))),
               (2, -1, 4, ((2, -1), (3, -1), (7, -2), (8, -2))),
               (1, 1, 0, ((8, -1),)),
               (2, 1, -8, ((2, 1), (3, 1), (4, 1), (8, 2), (9, 2)))),
}

# 46-factor dilogarithm products of the two reflection-identity sides
REFLECTION_LHS_FACTORS = (
    (1, -1, 0, ((17, -1),)),
    (1, 1, 2, ((16, 1), (17, 1))),
    (1, -1, -2, ((17, -1), (18, -1))),
    (1, 1, 0, ((9, 1), (16, 1), (17, 1))),
    (1, -1, 0, ((10, -1), (17, -1), (18, -1))),
    (2, -1, 0, ((3, -1),)),
    (1, -1, -2, ((10, -1), (11, -1), (17, -1), (18, -1))),
    (2, 1, 4, ((2, 1), (3, 1))),
    (1, 1, 2, ((9, 1), (10, 1), (16, 1), (17, 1))),
    (2, -1, -4, ((3, -1), (4, -1), (10, -2), (11, -2), (17, -2), (18, -2))),
    (1, -1, -2, ((3, -1), (4, -1), (10, -1), (11, -1), (17, -1), (18, -1))),
    (2, -1, 4, ((2, 1), (3, 1))),
    (1, 1, 4, ((2, 1), (3, 1), (9, 1), (10, 1), (11, 1), (16, 1), (17, 1))),
    (2, 1, 0, ((3, -1),)),
    (1, -1, -4, ((3, -1), (4, -1), (10, -1), (11, -1), (12, -1), (17, -1), (18, -1))),
    (1, -1, -6, ((3, -1), (4, -1), (10, -1), (11, -1), (12, -1), (13, -1), (17, -1), (18, -1))),
    (1, 1, 6, ((2, 1), (3, 1), (9, 1), (10, 1), (11, 1), (12, 1), (16, 1), (17, 1))),
    (1, 1, 8, ((2, 1), (3, 1), (9, 1), (10, 1), (11, 1), (12, 1), (16, 1), (17, 1), (20, 1))),
    (1, -1, 0, ((19, -1),)),
    (1, 1, 2, ((18, 1), (19, 1))),
    (1, -1, -2, ((19, -1), (20, -1))),
    (1, 1, 0, ((11, 1), (18, 1), (19, 1))),
    (1, -1, 0, ((12, -1), (19, -1), (20, -1))),
    (2, -1, 0, ((5, -1),)),
    (1, -1, -2, ((12, -1), (13, -1), (19, -1), (20, -1))),
    (2, 1, 4, ((4, 1), (5, 1))),
    (1, 1, 2, ((11, 1), (12, 1), (18, 1), (19, 1))),
    (2, -1, -4, ((5, -1), (6, -1), (12, -2), (13, -2), (19, -2), (20, -2))),
    (1, -1, -2, ((5, -1), (6, -1), (12, -1), (13, -1), (19, -1), (20, -1))),
    (2, -1, 4, ((4, 1), (5, 1))),
    (1, 1, 4, ((4, 1), (5, 1), (11, 1), (12, 1), (13, 1), (18, 1), (19, 1))),
    (2, 1, 0, ((5, -1),)),
    (1, -1, 0, ((10, -1),)),
    (2, -1, 0, ((3, -1),)),
    (1, -1, -2, ((10, -1), (11, -1))),
    (2, 1, 4, ((2, 1), (3, 1))),
    (1, 1, 2, ((9, 1), (10, 1))),
    (2, -1, -4, ((3, -1), (4, -1), (10, -2), (11, -2))),
    (1, -1, -2, ((3, -1), (4, -1), (10, -1), (11, -1))),
    (2, -1, 4, ((2, 1), (3, 1))),
    (1, 1, 4, ((2, 1), (3, 1), (9, 1), (10, 1), (11, 1))),
    (2, 1, 0, ((3, -1),)),
    (1, -1, -4, ((3, -1), (4, -1), (10, -1), (11, -1), (12, -1))),
    (1, -1, -6, ((3, -1), (4, -1), (10, -1), (11, -1), (12, -1), (13, -1))),
    (1, 1, 6, ((2, 1), (3, 1), (9, 1), (10, 1), (11, 1), (12, 1))),
    (1, 1, 8, ((2, 1), (3, 1), (9, 1), (10, 1), (11, 1), (12, 1), (20, 1))),
)

REFLECTION_RHS_FACTORS = (
    (1, -1, 0, ((19, -1),)),
    (1, 1, 2, ((18, 1), (19, 1))),
    (1, -1, -2, ((19, -1), (20, -1))),
    (1, 1, 0, ((11, 1), (18, 1), (19, 1))),
    (1, -1, 0, ((12, -1), (19, -1), (20, -1))),
    (2, -1, 0, ((5, -1),)),
    (1, -1, -2, ((12, -1), (13, -1), (19, -1), (20, -1))),
    (2, 1, 4, ((4, 1), (5, 1))),
    (1, 1, 2, ((11, 1), (12, 1), (18, 1), (19, 1))),
    (2, -1, -4, ((5, -1), (6, -1), (12, -2), (13, -2), (19, -2), (20, -2))),
    (1, -1, -2, ((5, -1), (6, -1), (12, -1), (13, -1), (19, -1), (20, -1))),
    (2, -1, 4, ((4, 1), (5, 1))),
    (1, 1, 4, ((4, 1), (5, 1), (11, 1), (12, 1), (13, 1), (18, 1), (19, 1))),
    (2, 1, 0, ((5, -1),)),
    (1, -1, 0, ((10, -1),)),
    (2, -1, 0, ((3, -1),)),
    (1, -1, -2, ((10, -1), (11, -1))),
    (2, 1, 4, ((2, 1), (3, 1))),
    (1, 1, 2, ((9, 1), (10, 1))),
    (2, -1, -4, ((3, -1), (4, -1), (10, -2), (11, -2))),
    (1, -1, -2, ((3, -1), (4, -1), (10, -1), (11, -1))),
    (2, -1, 4, ((2, 1), (3, 1))),
    (1, 1, 4, ((2, 1), (3, 1), (9, 1), (10, 1), (11, 1))),
    (2, 1, 0, ((3, -1),)),
    (1, -1, -4, ((3, -1), (4, -1), (10, -1), (11, -1), (12, -1))),
    (1, -1, -6, ((3, -1), (4, -1), (10, -1), (11, -1), (12, -1), (13, -1))),
    (1, 1, 6, ((2, 1), (3, 1), (9, 1), (10, 1), (11, 1), (12, 1))),
    (1, 1, 8, ((2, 1), (3, 1), (9, 1), (10, 1), (11, 1), (12, 1), (20, 1))),
    (1, -1, 0, ((17, -1), (18, -1), (19, -1))),
    (1, 1, 2, ((16, 1), (17, 1), (18, 1), (19, 1))),
    (1, -1, -2, ((17, -1), (18, -1), (19, -1), (20, -1))),
    (1, 1, 0, ((11, 1), (16, 1), (17, 1), (18, 1), (19, 1))),
    (1, -1, 0, ((12, -1), (17, -1), (18, -1), (19, -1), (20, -1))),
    (2, -1, 0, ((5, -1),)),
    (1, -1, -2, ((12, -1), (13, -1), (17, -1), (18, -1), (19, -1), (20, -1))),
    (2, 1, 4, ((4, 1), (5, 1))),
    (1, 1, 2, ((11, 1), (12, 1), (16, 1), (17, 1), (18, 1), (19, 1))),
    (2, -1, -4, ((5, -1), (6, -1), (12, -2), (13, -2), (17, -2), (18, -2), (19, -2), (20, -2))),
    (1, -1, -2, ((5, -1), (6, -1), (12, -1), (13, -1), (17, -1), (18, -1), (19, -1), (20, -1))),
    (2, -1, 4, ((4, 1), (5, 1))),
    (1, 1, 4, ((4, 1), (5, 1), (11, 1), (12, 1), (13, 1), (16, 1), (17, 1), (18, 1), (19, 1))),
    (2, 1, 0, ((5, -1),)),
    (1, -1, 0, ((4, 1), (6, -1), (11, 1), (17, -1), (20, -1))),
    (1, -1, -2, ((17, -1), (18, -1))),
    (1, 1, 2, ((16, 1), (17, 1))),
    (1, 1, 0, ((2, 1), (4, -1), (9, 1), (13, -1), (16, 1), (17, 1), (20, 1))),
)

# center of the C2 butterfly torus
C2_CENTER = (
    ((1, 1), (3, -1), (5, 1), (6, 4), (7, 2), (11, 2)),
    ((1, 2), (2, 1), (4, -1), (5, -2), (6, 2), (7, 2), (8, 2), (10, -2)),
    ((1, 1), (2, 1), (3, 1), (5, -1), (7, 1), (8, 2), (9, 1)),
)

# corrected symmetrized matrix fixture for the C2 butterfly quiver
BHAT_C2_PRINTED = (
    (0, 2, 0, 0, 0, 1, -2, 0, 0, 0, 0),
    (-2, 0, -2, 0, 0, 0, 0, 2, 0, 0, 0),
    (0, 2, 0, 2, 0, 0, 0, 0, -2, 0, 0),
    (0, 0, -2, 0, -2, 0, 0, 0, 0, 2, 0),
    (0, 0, 0, 2, 0, 0, 0, 0, 0, -1, 0),
    (-1, 0, 0, 0, 0, 0, 1, 0, 0, 0, -H),
    (2, 0, 0, 0, 0, -1, 0, -1, 0, 0, 1),
    (0, -2, 0, 0, 0, 0, 1, 0, 1, 0, -1),
    (0, 0, 2, 0, 0, 0, 0, -1, 0, -1, 1),
    (0, 0, 0, -2, 1, 0, 0, 0, 1, 0, -H),
    (0, 0, 0, 0, 0, H, -1, 1, -1, H, 0),
)

# ---------------------------------------------------------------------------
# substitution maps into the q-Weyl algebras: label -> (pexp, cexp)

PHI_A2 = {
    0: ({"a2": 1}, {"w2": 1}),
    1: ({"a1": 1, "d2": 1}, {"w1": 1, "u2": -1, "w2": -1}),
    2: ({"e2": 1}, {"u2": 2}),
    3: ({"b2": 1, "a3": 1}, {"u2": -1, "w2": -1, "w3": 1}),
    4: ({"d1": 1}, {"u1": -1, "w1": -1}),
    5: ({"e1": 1}, {"u1": 2}),
    6: ({"b1": 1, "c2": 1, "d3": 1},
        {"u1": -1, "w1": -1, "w2": 1, "u3": -1, "w3": -1}),
    7: ({"e3": 1}, {"u3": 2}),
    8: ({"b3": 1}, {"u3": -1, "w3": -1}),
    9: ({"c1": 1, "c3": 1}, {"w1": 1, "w3": 1}),
}

PHIP_A2 = {
    0: ({"a1": 1, "a3": 1}, {"w1": 1, "w3": 1}),
    1: ({"d3": 1}, {"u3": -1, "w3": -1}),
    2: ({"e2": 1}, {"u2": 2}),
    3: ({"b1": 1}, {"u1": -1, "w1": -1}),
    4: ({"d2": 1, "c3": 1}, {"u2": -1, "w2": -1, "w3": 1}),
    5: ({"e1": 1}, {"u1": 2}),
    6: ({"d1": 1, "a2": 1, "b3": 1},
        {"u1": -1, "w1": -1, "w2": 1, "u3": -1, "w3": -1}),
    7: ({"e3": 1}, {"u3": 2}),
    8: ({"c1": 1, "b2": 1}, {"w1": 1, "u2": -1, "w2": -1}),
    9: ({"c2": 1}, {"w2": 1}),
}


def _swap13(table):
    def conv(sym):
        if sym[-1] == "1":
            return sym[:-1] + "3"
        if sym[-1] == "3":
            return sym[:-1] + "1"
        return sym
    out = {}
    for lab, (pexp, cexp) in table.items():
        out[lab] = ({conv(k): v for k, v in pexp.items()},
                    {conv(k): v for k, v in cexp.items()})
    return out


PHIBAR_A2 = _swap13(PHIP_A2)     # on the primed torus
PHIBARP_A2 = _swap13(PHI_A2)     # on the unprimed torus

PHI_C2 = {
    1: ({"a1": 1, "d2": 1}, {"u2": -1, "w1": 2, "w2": -1}),
    2: ({"e2": 1}, {"u2": 2}),
    3: ({"a3": 1, "b2": 1, "d4": 1},
        {"u2": -1, "u4": -1, "w2": -1, "w3": 2, "w4": -1}),
    4: ({"e4": 1}, {"u4": 2}),
    5: ({"b4": 1}, {"u4": -1, "w4": -1}),
    6: ({"d1": 1}, {"u1": -1, "w1": -1}),
    7: ({"e1": 1}, {"u1": 2}),
    8: ({"b1": 1, "c2": 1, "d3": 1},
        {"u1": -1, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),
    9: ({"e3": 1}, {"u3": 2}),
    10: ({"b3": 1, "c4": 1}, {"u3": -1, "w3": -1, "w4": 1}),
    11: ({"c1": 1, "c3": 1}, {"w1": 1, "w3": 1}),
}

PHIP_C2 = {
    1: ({"d4": 1}, {"u4": -1, "w4": -1}),
    2: ({"e4": 1}, {"u4": 2}),
    3: ({"a3": 1, "d2": 1, "b4": 1},
        {"u2": -1, "u4": -1, "w2": -1, "w3": 2, "w4": -1}),
    4: ({"e2": 1}, {"u2": 2}),
    5: ({"a1": 1, "b2": 1}, {"u2": -1, "w2": -1, "w1": 2}),
    6: ({"d3": 1, "c4": 1}, {"u3": -1, "w3": -1, "w4": 1}),
    7: ({"e3": 1}, {"u3": 2}),
    8: ({"d1": 1, "c2": 1, "b3": 1},
        {"u1": -1, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),
    9: ({"e1": 1}, {"u1": 2}),
    10: ({"b1": 1}, {"u1": -1, "w1": -1}),
    11: ({"c1": 1, "c3": 1}, {"w1": 1, "w3": 1}),
}

PHI_C3 = {
    1: ({"a2": 1, "d3": 1}, {"u3": -1, "w2": 2, "w3": -1}),
    2: ({"e3": 1}, {"u3": 2}),
    3: ({"a5": 1, "b3": 1, "d6": 1},
        {"u3": -1, "u6": -1, "w3": -1, "w5": 2, "w6": -1}),
    4: ({"e6": 1}, {"u6": 2}),
    5: ({"a8": 1, "b6": 1, "d9": 1},
        {"u6": -1, "u9": -1, "w6": -1, "w8": 2, "w9": -1}),
    6: ({"e9": 1}, {"u9": 2}),
    7: ({"b9": 1}, {"u9": -1, "w9": -1}),
    8: ({"a1": 1, "d2": 1}, {"u2": -1, "w1": 1, "w2": -1}),
    9: ({"e2": 1}, {"u2": 2}),
    10: ({"a4": 1, "b2": 1, "c3": 1, "d5": 1},
         {"u2": -1, "u5": -1, "w2": -1, "w3": 1, "w4": 1, "w5": -1}),
    11: ({"e5": 1}, {"u5": 2}),
    12: ({"a7": 1, "b5": 1, "c6": 1, "d8": 1},
         {"u5": -1, "u8": -1, "w5": -1, "w6": 1, "w7": 1, "w8": -1}),
    13: ({"e8": 1}, {"u8": 2}),
    14: ({"b8": 1, "c9": 1}, {"u8": -1, "w8": -1, "w9": 1}),
    15: ({"d1": 1}, {"u1": -1, "w1": -1}),
    16: ({"e1": 1}, {"u1": 2}),
    17: ({"b1": 1, "c2": 1, "d4": 1},
         {"u1": -1, "u4": -1, "w1": -1, "w2": 1, "w4": -1}),
    18: ({"e4": 1}, {"u4": 2}),
    19: ({"b4": 1, "c5": 1, "d7": 1},
         {"u4": -1, "u7": -1, "w4": -1, "w5": 1, "w7": -1}),
    20: ({"e7": 1}, {"u7": 2}),
    21: ({"b7": 1, "c8": 1}, {"u7": -1, "w7": -1, "w8": 1}),
    22: ({"c1": 1, "c4": 1, "c7": 1}, {"w1": 1, "w4": 1, "w7": 1}),
}

PHI_FG_C2 = {
    1: ({"th2": -1}, {"w2": -1, "u2": -1, "w1": 2}),
    2: ({"th2": 1, "th4": -1}, {"w2": -1, "u2": 1, "w4": -1, "u4": -1, "w3": 2}),
    3: ({"th4": 1}, {"w4": -1, "u4": 1}),
    4: ({"th1": -1}, {"w1": -1, "u1": -1}),
    5: ({"th1": 1, "th3": -1}, {"w1": -1, "u1": 1, "w3": -1, "u3": -1, "w2": 1}),
    6: ({"th3": 1}, {"w3": -1, "u3": 1, "w4": 1}),
}

PHIP_FG_C2 = {
    1: ({"th4": -1}, {"w4": -1, "u4": -1}),
    2: ({"th2": -1, "th4": 1}, {"w4": -1, "u4": 1, "w2": -1, "u2": -1, "w3": 2}),
    3: ({"th2": 1}, {"w2": -1, "u2": 1, "w1": 2}),
    4: ({"th3": -1}, {"w3": -1, "u3": -1, "w4": 1}),
    5: ({"th1": -1, "th3": 1}, {"w3": -1, "u3": 1, "w1": -1, "u1": -1, "w2": 1}),
    6: ({"th1": 1}, {"w1": -1, "u1": 1}),
}

PSI_FG_B2 = {
    1: ({"th2": -1}, {"w2": -1, "u2": -1, "w1": 1}),
    2: ({"th2": 1, "th4": -1}, {"w2": -1, "u2": 1, "w4": -1, "u4": -1, "w3": 1}),
    3: ({"th4": 1}, {"w4": -1, "u4": 1}),
    4: ({"th1": -1}, {"w1": -1, "u1": -1}),
    5: ({"th1": 1, "th3": -1}, {"w1": -1, "u1": 1, "w3": -1, "u3": -1, "w2": 2}),
    6: ({"th3": 1}, {"w3": -1, "u3": 1, "w4": 2}),
}

PSIP_FG_B2 = {
    1: ({"th4": -1}, {"w4": -1, "u4": -1}),
    2: ({"th2": -1, "th4": 1}, {"w4": -1, "u4": 1, "w2": -1, "u2": -1, "w3": 1}),
    3: ({"th2": 1}, {"w2": -1, "u2": 1, "w1": 1}),
    4: ({"th3": -1}, {"w3": -1, "u3": -1, "w4": 2}),
    5: ({"th1": -1, "th3": 1}, {"w3": -1, "u3": 1, "w1": -1, "u1": -1, "w2": 2}),
    6: ({"th1": 1}, {"w1": -1, "u1": 1}),
}

PHI_FG_A2 = {
    1: ({"th2": -1}, {"w2": -1, "u2": -1, "w1": 1}),
    2: ({"th2": 1}, {"w2": -1, "u2": 1, "w3": 1}),
    3: ({"th1": -1}, {"w1": -1, "u1": -1}),
    4: ({"th1": 1, "th3": -1}, {"w1": -1, "u1": 1, "w3": -1, "u3": -1, "w2": 1}),
    5: ({"th3": 1}, {"w3": -1, "u3": 1}),
}

PHIP_FG_A2 = {
    1: ({"th3": -1}, {"w3": -1, "u3": -1}),
    2: ({"th1": 1}, {"w1": -1, "u1": 1}),
    3: ({"th2": -1}, {"w2": -1, "u2": -1, "w3": 1}),
    4: ({"th1": -1, "th3": 1}, {"w3": -1, "u3": 1, "w1": -1, "u1": -1, "w2": 1}),
    5: ({"th2": 1}, {"w2": -1, "u2": 1, "w1": 1}),
}

# Fock-Goncharov -> butterfly torus comparisons (label -> torus monomial)
ALPHA_A2 = {1: (0, ((1, 1),)), 2: (2, ((2, 1), (3, 1))), 3: (0, ((4, 1),)),
            4: (2, ((5, 1), (6, 1))), 5: (2, ((7, 1), (8, 1)))}
ALPHAP_A2 = {1: (0, ((1, 1),)), 2: (2, ((5, 1), (3, 1))), 3: (0, ((4, 1),)),
             4: (2, ((7, 1), (6, 1))), 5: (2, ((2, 1), (8, 1)))}
ALPHA_C2 = {1: (0, ((1, 1),)), 2: (4, ((2, 1), (3, 1))), 3: (4, ((4, 1), (5, 1))),
            4: (0, ((6, 1),)), 5: (2, ((7, 1), (8, 1))), 6: (2, ((9, 1), (10, 1)))}
BETA_B2 = {1: (0, ((10, 1),)), 2: (2, ((9, 1), (8, 1))), 3: (2, ((7, 1), (6, 1))),
           4: (0, ((5, 1),)), 5: (4, ((4, 1), (3, 1))), 6: (4, ((2, 1), (1, 1)))}

# ---------------------------------------------------------------------------
# canonical transformations: {var: (pexp-shift, linear-part)}

ETA_R = {
    "-": {"u1": ({"e2": H, "e1": -H}, {"u2": 1}),
          "u2": ({"e2": -H, "e1": H}, {"u1": 1}),
          "u3": ({"e2": H, "e1": -H}, {"u1": -1, "u2": 1, "u3": 1}),
          "w1": ({"a3": -1, "b2": -1, "b1": 1, "e2": -H, "e1": H},
                 {"w2": 1, "w3": -1}),
          "w2": ({"c1": 1, "c2": -1, "c3": 1}, {"w1": 1, "w3": 1}),
          "w3": ({"a2": 1, "a1": -1, "b2": 1, "b1": -1, "e2": H, "e1": -H},
                 {"w3": 1})},
    "+": {"u1": ({"e2": H, "e3": -H}, {"u1": 1, "u2": 1, "u3": -1}),
          "u2": ({"e2": -H, "e3": H}, {"u3": 1}),
          "u3": ({"e2": H, "e3": -H}, {"u2": 1}),
          "w1": ({"b3": 1, "c3": 1, "b2": -1, "c2": -1, "e2": -H, "e3": H},
                 {"w1": 1}),
          "w2": ({"c1": 1, "c2": -1, "c3": 1}, {"w1": 1, "w3": 1}),
          "w3": ({"d3": 1, "d2": -1, "a1": -1, "e2": -H, "e3": H},
                 {"w1": -1, "w2": 1})},
}

ETA_RBAR = {
    "-": {"u1": ({"e2": H, "e3": -H}, {"u1": 1, "u2": 1, "u3": -1}),
          "u2": ({"e2": -H, "e3": H}, {"u3": 1}),
          "u3": ({"e2": H, "e3": -H}, {"u2": 1}),
          "w1": ({"c2": 1, "c3": -1, "d2": 1, "d3": -1, "e2": H, "e3": -H},
                 {"w1": 1}),
          "w2": ({"a1": 1, "a2": -1, "a3": 1}, {"w1": 1, "w3": 1}),
          "w3": ({"c1": -1, "d2": -1, "d3": 1, "e2": -H, "e3": H},
                 {"w1": -1, "w2": 1})},
    "+": {"u1": ({"e2": H, "e1": -H}, {"u2": 1}),
          "u2": ({"e2": -H, "e1": H}, {"u1": 1}),
          "u3": ({"e2": H, "e1": -H}, {"u1": -1, "u2": 1, "u3": 1}),
          "w1": ({"c3": -1, "b1": 1, "b2": -1, "e2": -H, "e1": H},
                 {"w2": 1, "w3": -1}),
          "w2": ({"a1": 1, "a2": -1, "a3": 1}, {"w1": 1, "w3": 1}),
          "w3": ({"d1": 1, "a1": 1, "d2": -1, "a2": -1, "e2": -H, "e1": H},
                 {"w3": 1})},
}

_DK24 = {"b2": -H, "b4": H, "c1": 1, "c2": -1, "c4": 1, "d2": -H, "d4": H}
_NK24 = {k: -v for k, v in _DK24.items()}

ETA_K24 = {
    "u1": (dict(_DK24), {"u1": 1, "u2": 1, "u4": -1}),
    "u2": (dict(_NK24), {"u4": 1}),
    "u3": ({}, {"u3": 1}),
    "u4": (dict(_DK24), {"u2": 1}),
    "w1": ({"b2": -H, "b4": H, "d2": H, "d4": -H}, {"w1": 1}),
    "w2": ({"a1": 1, "b2": -H, "b4": H, "c1": 1, "c2": -1, "c4": 1,
            "d2": H, "d4": -H}, {"w1": 2, "w4": 1}),
    "w3": ({"b2": H, "b4": -H, "d2": -H, "d4": H}, {"w3": 1}),
    "w4": ({"a1": -1, "b2": H, "b4": -H, "c1": -1, "c2": 1, "c4": -1,
            "d2": -H, "d4": H}, {"w1": -2, "w2": 1}),
}

_DK13 = {"a1": H, "a3": -H, "b1": H, "b3": -H, "c1": H, "c3": -H,
         "d1": H, "d3": -H}
_NK13 = {k: -v for k, v in _DK13.items()}

ETA_K13 = {
    "u1": (dict(_DK13), {"u3": 1}),
    "u2": ({}, {"u2": 1}),
    "u3": (dict(_NK13), {"u1": 1}),
    "u4": ({k: 2 * v for k, v in _DK13.items()}, {"u1": -2, "u3": 2, "u4": 1}),
    "w1": ({"a1": -H, "a3": H, "b1": H, "b3": -H, "c1": -H, "c3": H,
            "c4": -1, "d1": -H, "d3": H}, {"w3": 1, "w4": -1}),
    "w2": ({"b1": 1, "b3": -1, "d1": -1, "d3": 1}, {"w2": 1}),
    "w3": ({"a1": H, "a3": -H, "b1": -H, "b3": H, "c1": H, "c3": -H,
            "c4": 1, "d1": H, "d3": -H}, {"w1": 1, "w4": 1}),
    "w4": ({"b1": -1, "b3": 1, "d1": 1, "d3": -1}, {"w4": 1}),
}

PIK_C2 = {
    "u1": ({}, {"u1": 1, "u2": 1, "u4": -1}),
    "u2": ({}, {"u4": 1}),
    "u3": ({}, {"u3": 1}),
    "u4": ({}, {"u2": 1}),
    "w1": ({"th2": -1, "th4": 1}, {"w1": 1}),
    "w2": ({"th2": -1, "th4": 1}, {"w4": 1, "w1": 2}),
    "w3": ({"th2": 1, "th4": -1}, {"w3": 1}),
    "w4": ({"th2": 1, "th4": -1}, {"w2": 1, "w1": -2}),
}

PIK_B2 = {
    "u1": ({}, {"u1": 1, "u2": 2, "u4": -2}),
    "u2": ({}, {"u4": 1}),
    "u3": ({}, {"u3": 1}),
    "u4": ({}, {"u2": 1}),
    "w1": ({"th2": -2, "th4": 2}, {"w1": 1}),
    "w2": ({"th2": -1, "th4": 1}, {"w4": 1, "w1": 1}),
    "w3": ({"th2": 2, "th4": -2}, {"w3": 1}),
    "w4": ({"th2": 1, "th4": -1}, {"w2": 1, "w1": -1}),
}

PI_PLUS = {
    "u1": ({}, {"u1": 1, "u2": 1, "u3": -1}),
    "u2": ({}, {"u3": 1}),
    "u3": ({}, {"u2": 1}),
    "w1": ({"th2": -1, "th3": 1}, {"w1": 1}),
    "w2": ({}, {"w1": 1, "w3": 1}),
    "w3": ({"th2": 1, "th3": -1}, {"w2": 1, "w1": -1}),
}

PI_MINUS = {
    "u1": ({}, {"u2": 1}),
    "u2": ({}, {"u1": 1}),
    "u3": ({}, {"u1": -1, "u2": 1, "u3": 1}),
    "w1": ({"th1": 1, "th2": -1}, {"w2": 1, "w3": -1}),
    "w2": ({}, {"w1": 1, "w3": 1}),
    "w3": ({"th1": -1, "th2": 1}, {"w3": 1}),
}

# ---------------------------------------------------------------------------
# monomial operators in the triangular group: lists of exponential factors

_L0M = {"e2": H, "e1": -H}     # lambda_0
_K0P = {"e2": H, "e3": -H}     # kappa_0

P_R = {
    "+": (((("quad", {(3, 1): 1, (2, 1): -1}),),
           (("lin", {"w3": _K0P, "w2": {k: -v for k, v in _K0P.items()},
                     "w1": {k: -v for k, v in _K0P.items()}}),),
           (("lin", {"u1": {"b3": 1, "c3": 1, "b2": -1, "c2": -1, "e2": -H, "e3": H},
                     "u2": {"d3": 1, "d2": -1, "a1": -1, "e2": -H, "e3": H},
                     "u3": {"c1": 1, "c2": -1, "c3": 1}}),)),
          (2, 3)),
    "-": (((("quad", {(1, 3): 1, (2, 3): -1}),),
           (("lin", {"w3": {k: -v for k, v in _L0M.items()},
                     "w2": {k: -v for k, v in _L0M.items()}, "w1": _L0M}),),
           (("lin", {"u1": {"c1": 1, "c2": -1, "c3": 1},
                     "u2": {"a3": -1, "b2": -1, "b1": 1, "e2": -H, "e1": H},
                     "u3": {"a2": 1, "a1": -1, "b2": 1, "b1": -1, "e2": H, "e1": -H}}),)),
          (1, 2)),
}

P_RBAR = {
    "-": (((("quad", {(3, 1): 1, (2, 1): -1}),),
           (("lin", {"w3": _K0P, "w2": {k: -v for k, v in _K0P.items()},
                     "w1": {k: -v for k, v in _K0P.items()}}),),
           (("lin", {"u1": {"c2": 1, "c3": -1, "d2": 1, "d3": -1, "e2": H, "e3": -H},
                     "u2": {"c1": -1, "d2": -1, "d3": 1, "e2": -H, "e3": H},
                     "u3": {"a1": 1, "a2": -1, "a3": 1}}),)),
          (2, 3)),
    "+": (((("quad", {(1, 3): 1, (2, 3): -1}),),
           (("lin", {"w3": {k: -v for k, v in _L0M.items()},
                     "w2": {k: -v for k, v in _L0M.items()}, "w1": _L0M}),),
           (("lin", {"u1": {"a1": 1, "a2": -1, "a3": 1},
                     "u2": {"c3": -1, "b1": 1, "b2": -1, "e2": -H, "e1": H},
                     "u3": {"d1": 1, "a1": 1, "d2": -1, "a2": -1, "e2": -H, "e1": H}}),)),
          (1, 2)),
}

_HK24 = {"a1": H, "c1": H, "c2": -H, "c4": H}
P_K24 = (((("quad", {(2, 1): -1, (4, 1): 1}),
          ("lin", {"u2": {k: -v for k, v in _HK24.items()},
                   "u4": dict(_HK24),
                   "u1": {"b2": -H, "b4": H, "d2": H, "d4": -H},
                   "u3": {"b2": H, "b4": -H, "d2": -H, "d4": H},
                   "w2": {"b2": F(1, 4), "b4": -F(1, 4), "d2": F(1, 4),
                          "d4": -F(1, 4), "c1": -H, "c2": H, "c4": -H},
                   "w4": {"b2": -F(1, 4), "b4": F(1, 4), "d2": -F(1, 4),
                          "d4": F(1, 4), "c1": H, "c2": -H, "c4": H}})),),
         (2, 4))

_HK13 = {"a1": H, "a3": -H, "c1": H, "c3": -H, "c4": 1}
P_K13 = (((("quad", {(1, 4): 1, (3, 4): -1}),
          ("lin", {"u1": dict(_HK13),
                   "u3": {k: -v for k, v in _HK13.items()},
                   "w1": {"a1": H, "a3": -H, "b1": H, "b3": -H, "c1": H,
                          "c3": -H, "d1": H, "d3": -H},
                   "w3": {"a1": -H, "a3": H, "b1": -H, "b3": H, "c1": -H,
                          "c3": H, "d1": -H, "d3": H},
                   "u2": {"b1": H, "b3": -H, "d1": -H, "d3": H},
                   "u4": {"b1": -H, "b3": H, "d1": H, "d3": -H}})),),
         (1, 3))


def p_final(i, j, k):
    """Monomial operator of the final three-index solution."""
    half_e = {f"e{j}": H, f"e{k}": -H}
    bd = {f"b{j}": -H, f"d{j}": H, f"b{k}": H, f"d{k}": -H}
    return (((("quad", {(k, i): 1, (j, i): -1}),),
             (("lin", {f"w{k}": dict(half_e),
                       f"w{j}": {s: -v for s, v in half_e.items()},
                       f"w{i}": {s: -v for s, v in half_e.items()}}),),
             (("lin", {f"u{i}": dict(bd),
                       f"u{j}": {s: -v for s, v in bd.items()}}),)),
            (j, k))


def pk_final(i, j, k, l):
    """Monomial operator of the final four-index solution."""
    aa = {f"a{j}": H, f"a{l}": -H}
    bd = {f"b{j}": -H, f"d{j}": H, f"b{l}": H, f"d{l}": -H}
    ee = {f"e{j}": -F(1, 4), f"e{l}": F(1, 4)}
    return (((("quad", {(j, i): -1, (l, i): 1}),
              ("lin", {f"u{j}": dict(aa), f"u{l}": {s: -v for s, v in aa.items()},
                       f"u{i}": dict(bd), f"u{k}": {s: -v for s, v in bd.items()},
                       f"w{j}": dict(ee), f"w{l}": {s: -v for s, v in ee.items()}})),),
            (j, l))


P_FG_C2 = (((("quad", {(4, 1): 1, (2, 1): -1}),
             ("lin", {"u3": {"th2": 1, "th4": -1},
                      "u1": {"th2": -1, "th4": 1}})),),
           (2, 4))
P_FG_B2 = P_FG_C2

P_FG_PLUS = (((("quad", {(3, 1): 1, (2, 1): -1}),),
              (("lin", {"u2": {"th2": 1, "th3": -1},
                        "u1": {"th2": -1, "th3": 1}}),)),
             (2, 3))
# the exchanged-pair exponent is (th1-th2)(u2-u3): forced by pi_minus and
# by specializing the minus-type four-dilog tail, whose source form has
# u1-u2 instead
P_FG_MINUS = (((("quad", {(1, 3): 1, (2, 3): -1}),),
               (("lin", {"u2": {"th1": 1, "th2": -1},
                         "u3": {"th1": -1, "th2": 1}}),)),
              (1, 2))

# ---------------------------------------------------------------------------
# dilogarithm parts in canonical variables: (base, expo, pexp, cexp)

R_WEYL = {
    "+": ((1, -1, {"d3": -1, "c2": -1, "b1": -1},
           {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
          (1, 1, {"d3": 1, "c2": 1, "b1": 1, "e1": 1},
           {"u3": -1, "u1": 1, "w1": -1, "w2": 1, "w3": -1}),
          (1, -1, {"d3": -1, "e3": -1, "c2": -1, "b1": -1},
           {"u3": -1, "u1": 1, "w1": 1, "w2": -1, "w3": 1}),
          (1, 1, {"d3": 1, "c2": 1, "e2": 1, "b1": 1, "e1": 1},
           {"u3": -1, "u2": 2, "u1": 1, "w1": -1, "w2": 1, "w3": -1})),
    "-": ((1, -1, {"d3": -1, "c2": -1, "b1": -1},
           {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
          (1, -1, {"d3": -1, "c2": -1, "b1": -1, "e1": -1},
           {"u3": 1, "u1": -1, "w1": 1, "w2": -1, "w3": 1}),
          (1, 1, {"d3": 1, "e3": 1, "c2": 1, "b1": 1},
           {"u3": 1, "u1": -1, "w1": -1, "w2": 1, "w3": -1}),
          (1, 1, {"d3": 1, "e3": 1, "c2": 1, "e2": 1, "b1": 1},
           {"u3": 1, "u2": 2, "u1": -1, "w1": -1, "w2": 1, "w3": -1})),
}

RBAR_WEYL = {
    "-": ((1, -1, {"d3": -1, "a2": -1, "b1": -1},
           {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
          (1, -1, {"d3": -1, "e3": -1, "a2": -1, "b1": -1},
           {"u3": -1, "u1": 1, "w1": 1, "w2": -1, "w3": 1}),
          (1, 1, {"d3": 1, "a2": 1, "b1": 1, "e1": 1},
           {"u3": -1, "u1": 1, "w1": -1, "w2": 1, "w3": -1}),
          (1, 1, {"d3": 1, "a2": 1, "e2": 1, "b1": 1, "e1": 1},
           {"u3": -1, "u2": 2, "u1": 1, "w1": -1, "w2": 1, "w3": -1})),
    "+": ((1, -1, {"d3": -1, "a2": -1, "b1": -1},
           {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
          (1, 1, {"d3": 1, "e3": 1, "a2": 1, "b1": 1},
           {"u3": 1, "u1": -1, "w1": -1, "w2": 1, "w3": -1}),
          (1, -1, {"d3": -1, "a2": -1, "b1": -1, "e1": -1},
           {"u3": 1, "u1": -1, "w1": 1, "w2": -1, "w3": 1}),
          (1, 1, {"d3": 1, "e3": 1, "a2": 1, "e2": 1, "b1": 1},
           {"u3": 1, "u2": 2, "u1": -1, "w1": -1, "w2": 1, "w3": -1})),
}

# final-form dilogarithm part (two equivalent printings)
R_FINAL_PARTS = {
    "pre": ((1, -1, {"d3": -1, "c2": -1, "b1": -1},
             {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
            (1, 1, {"d3": 1, "c2": 1, "b1": 1, "e1": 1},
             {"u3": -1, "u1": 1, "w1": -1, "w2": 1, "w3": -1})),
    # the last factor's w-signs are forced by transporting the end-tail
    # printing through the monomial operator; the source displays carry
    # -w_i+w_j-w_k instead
    "post": ((1, -1, {"d1": 1, "e1": 1, "a2": 1, "b3": 1},
              {"u1": 1, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),
             (1, 1, {"d1": -1, "a2": -1, "b3": -1},
              {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1})),
}

K24_WEYL = {
    (1, 1): ((1, -1, {"b1": -1, "c2": -1, "d3": -1},
              {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
             (2, 1, {"a3": 1, "b2": 1, "d4": 1},
              {"u2": -1, "u4": -1, "w2": -1, "w3": 2, "w4": -1}),
             (1, -1, {"b1": -1, "b2": -1, "b3": 1, "c2": -1, "c3": 1, "d4": -1},
              {"u1": 1, "u2": 1, "u3": -1, "u4": 1, "w1": 1, "w3": -1, "w4": 1}),
             (2, 1, {"b2": -1, "c1": 1, "c2": -2, "c3": 1, "d2": -1}, {"u2": 2}),
             (1, 1, {"a1": -1, "c1": -1, "c2": 1, "d1": -1, "d3": 1},
              {"u1": 1, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),
             (2, -1, {"b1": -2, "b2": -2, "b3": 2, "b4": 1, "c1": 1, "c2": -2,
                      "c3": 1, "c4": 2, "d4": -1},
              {"u1": 2, "u2": 2, "u3": -2, "w1": 2, "w3": -2, "w4": 2}),
             (1, -1, {"b1": -1, "b2": -1, "b3": 1, "b4": 1, "c1": 1, "c2": -1,
                      "c4": 2},
              {"u1": 1, "u2": 1, "u3": -1, "u4": -1, "w1": 1, "w3": -1, "w4": 1}),
             (2, -1, {"b2": -1, "c1": 1, "c2": -2, "c3": 1, "d2": -1}, {"u2": 2}),
             (1, 1, {"a1": -1, "b3": -1, "c2": -1, "d1": -1, "d2": -1, "d4": 1},
              {"u1": 1, "u2": 1, "u3": 1, "u4": -1, "w1": -1, "w3": 1, "w4": -1}),
             (2, -1, {"a3": 1, "b2": 1, "d4": 1},
              {"u2": -1, "u4": -1, "w2": -1, "w3": 2, "w4": -1})),
    (1, -1): ((1, -1, {"b1": -1, "c2": -1, "d3": -1},
               {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
              (2, 1, {"a3": 1, "b2": 1, "d4": 1},
               {"u2": -1, "u4": -1, "w2": -1, "w3": 2, "w4": -1}),
              (1, -1, {"b1": -1, "b2": -1, "b3": 1, "c2": -1, "c3": 1, "d4": -1},
               {"u1": 1, "u2": 1, "u3": -1, "u4": 1, "w1": 1, "w3": -1, "w4": 1}),
              (2, -1, {"b2": 1, "c1": -1, "c2": 2, "c3": -1, "d2": 1}, {"u2": -2}),
              (1, 1, {"a1": -1, "b2": -1, "c2": -1, "c3": 1, "d1": -1, "d2": -1,
                      "d3": 1},
               {"u1": 1, "u2": 2, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),
              (2, -1, {"b1": -2, "b2": -2, "b3": 2, "b4": 1, "c1": 1, "c2": -2,
                       "c3": 1, "c4": 2, "d4": -1},
               {"u1": 2, "u2": 2, "u3": -2, "w1": 2, "w3": -2, "w4": 2}),
              (1, -1, {"b1": -1, "b2": -1, "b3": 1, "b4": 1, "c1": 1, "c2": -1,
                       "c4": 2},
               {"u1": 1, "u2": 1, "u3": -1, "u4": -1, "w1": 1, "w3": -1, "w4": 1}),
              (2, 1, {"b2": 1, "c1": -1, "c2": 2, "c3": -1, "d2": 1}, {"u2": -2}),
              (1, 1, {"a1": -1, "b3": -1, "c2": -1, "d1": -1, "d2": -1, "d4": 1},
               {"u1": 1, "u2": 1, "u3": 1, "u4": -1, "w1": -1, "w3": 1, "w4": -1}),
              (2, -1, {"a3": 1, "b2": 1, "d4": 1},
               {"u2": -1, "u4": -1, "w2": -1, "w3": 2, "w4": -1})),
    (-1, 1): ((1, -1, {"b1": -1, "c2": -1, "d3": -1},
               {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
              (2, -1, {"a3": -1, "b2": -1, "d4": -1},
               {"u2": 1, "u4": 1, "w2": 1, "w3": -2, "w4": 1}),
              (1, -1, {"a3": 1, "b1": -1, "b3": 1, "c2": -1, "c3": 1},
               {"u1": 1, "u3": -1, "w1": 1, "w2": -1, "w3": 1}),
              (2, 1, {"a3": 1, "c1": 1, "c2": -2, "c3": 1, "d2": -1, "d4": 1},
               {"u2": 1, "u4": -1, "w2": -1, "w3": 2, "w4": -1}),
              (1, 1, {"a1": -1, "c1": -1, "c2": 1, "d1": -1, "d3": 1},
               {"u1": 1, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),
              (2, -1, {"a3": 1, "b1": -2, "b2": -1, "b3": 2, "b4": 1, "c1": 1,
                       "c2": -2, "c3": 1, "c4": 2},
               {"u1": 2, "u2": 1, "u3": -2, "u4": -1, "w1": 2, "w2": -1, "w4": 1}),
              (1, -1, {"b1": -1, "b2": -1, "b3": 1, "b4": 1, "c1": 1, "c2": -1,
                       "c4": 2},
               {"u1": 1, "u2": 1, "u3": -1, "u4": -1, "w1": 1, "w3": -1, "w4": 1}),
              (2, -1, {"a3": 1, "c1": 1, "c2": -2, "c3": 1, "d2": -1, "d4": 1},
               {"u2": 1, "u4": -1, "w2": -1, "w3": 2, "w4": -1}),
              (1, 1, {"a1": -1, "b3": -1, "c2": -1, "d1": -1, "d2": -1, "d4": 1},
               {"u1": 1, "u2": 1, "u3": 1, "u4": -1, "w1": -1, "w3": 1, "w4": -1}),
              (2, 1, {"a3": -1, "b2": -1, "d4": -1},
               {"u2": 1, "u4": 1, "w2": 1, "w3": -2, "w4": 1})),
    (-1, -1): ((1, -1, {"b1": -1, "c2": -1, "d3": -1},
                {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
               (2, -1, {"a3": -1, "b2": -1, "d4": -1},
                {"u2": 1, "u4": 1, "w2": 1, "w3": -2, "w4": 1}),
               (1, -1, {"a3": 1, "b1": -1, "b3": 1, "c2": -1, "c3": 1},
                {"u1": 1, "u3": -1, "w1": 1, "w2": -1, "w3": 1}),
               (2, -1, {"a3": -1, "c1": -1, "c2": 2, "c3": -1, "d2": 1, "d4": -1},
                {"u2": -1, "u4": 1, "w2": 1, "w3": -2, "w4": 1}),
               (1, 1, {"a1": -1, "a3": 1, "c2": -1, "c3": 1, "d1": -1, "d2": -1,
                       "d3": 1, "d4": 1},
                {"u1": 1, "u2": 1, "u3": -1, "u4": -1, "w1": -1, "w3": 1, "w4": -1}),
               (2, -1, {"a3": 1, "b1": -2, "b2": -1, "b3": 2, "b4": 1, "c1": 1,
                        "c2": -2, "c3": 1, "c4": 2},
                {"u1": 2, "u2": 1, "u3": -2, "u4": -1, "w1": 2, "w2": -1, "w4": 1}),
               (1, -1, {"b1": -1, "b2": -1, "b3": 1, "b4": 1, "c1": 1, "c2": -1,
                        "c4": 2},
                {"u1": 1, "u2": 1, "u3": -1, "u4": -1, "w1": 1, "w3": -1, "w4": 1}),
               (2, 1, {"a3": -1, "c1": -1, "c2": 2, "c3": -1, "d2": 1, "d4": -1},
                {"u2": -1, "u4": 1, "w2": 1, "w3": -2, "w4": 1}),
               (1, 1, {"a1": -1, "b3": -1, "c2": -1, "d1": -1, "d2": -1, "d4": 1},
                {"u1": 1, "u2": 1, "u3": 1, "u4": -1, "w1": -1, "w3": 1, "w4": -1}),
               (2, 1, {"a3": -1, "b2": -1, "d4": -1},
                {"u2": 1, "u4": 1, "w2": 1, "w3": -2, "w4": 1})),
}

K13_WEYL = {
    (1, 1): ((1, 1, {"b1": 1, "c2": 1, "d3": 1},
              {"u1": -1, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),
             (2, -1, {"a3": -1, "b2": -1, "d4": -1},
              {"u2": 1, "u4": 1, "w2": 1, "w3": -2, "w4": 1}),
             (1, 1, {"a3": -1, "b3": -1, "c3": -1, "d3": -1}, {"u3": 2}),
             (2, -1, {"a3": -1, "b1": -2, "c1": -1, "c3": -1, "d2": 1, "d3": -2,
                      "d4": -1},
              {"u1": 2, "u2": -1, "u3": 2, "u4": 1, "w1": 2, "w2": -1, "w4": 1}),
             (1, -1, {"a1": 1, "a3": -1, "b1": -1, "c3": -1, "d1": 1, "d2": 1,
                      "d3": -2, "d4": -1},
              {"u2": -1, "u3": 2, "u4": 1, "w1": 2, "w2": -1, "w4": 1}),
             (2, 1, {"a3": 1, "b2": 1, "b4": -1, "c1": -1, "c3": 1, "c4": -2},
              {"u2": -1, "u4": 1, "w2": -1, "w3": 2, "w4": -1}),
             (1, -1, {"a3": -1, "b3": -1, "c3": -1, "d3": -1}, {"u3": 2}),
             (2, -1, {"a1": 2, "a3": -1, "c1": 1, "c3": -1, "d1": 2, "d2": 1,
                      "d3": -2, "d4": -1},
              {"u1": -2, "u2": -1, "u3": 2, "u4": 1, "w1": 2, "w2": -1, "w4": 1}),
             (1, -1, {"b1": 1, "c2": 1, "d3": 1},
              {"u1": -1, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),
             (2, 1, {"a3": -1, "b1": 2, "b3": -2, "b4": -1, "c4": -2, "d2": -1},
              {"u1": -2, "u2": 1, "u3": 2, "u4": 1, "w1": -2, "w2": 1, "w4": -1})),
    (1, -1): ((1, 1, {"b1": 1, "c2": 1, "d3": 1},
               {"u1": -1, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),
              (2, -1, {"a3": -1, "b2": -1, "d4": -1},
               {"u2": 1, "u4": 1, "w2": 1, "w3": -2, "w4": 1}),
              (1, -1, {"a3": 1, "b3": 1, "c3": 1, "d3": 1}, {"u3": -2}),
              (2, -1, {"a3": -1, "b1": -2, "c1": -1, "c3": -1, "d2": 1, "d3": -2,
                       "d4": -1},
               {"u1": 2, "u2": -1, "u3": 2, "u4": 1, "w1": 2, "w2": -1, "w4": 1}),
              (1, -1, {"a1": 1, "a3": -1, "b1": -1, "c3": -1, "d1": 1, "d2": 1,
                       "d3": -2, "d4": -1},
               {"u2": -1, "u3": 2, "u4": 1, "w1": 2, "w2": -1, "w4": 1}),
              (2, 1, {"a3": -1, "b2": 1, "b3": -2, "b4": -1, "c1": -1, "c3": -1,
                      "c4": -2, "d3": -2},
               {"u2": -1, "u3": 4, "u4": 1, "w2": -1, "w3": 2, "w4": -1}),
              (1, 1, {"a3": 1, "b3": 1, "c3": 1, "d3": 1}, {"u3": -2}),
              (2, -1, {"a1": 2, "a3": -1, "c1": 1, "c3": -1, "d1": 2, "d2": 1,
                       "d3": -2, "d4": -1},
               {"u1": -2, "u2": -1, "u3": 2, "u4": 1, "w1": 2, "w2": -1, "w4": 1}),
              (1, -1, {"b1": 1, "c2": 1, "d3": 1},
               {"u1": -1, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),
              (2, 1, {"a3": -1, "b1": 2, "b3": -2, "b4": -1, "c4": -2, "d2": -1},
               {"u1": -2, "u2": 1, "u3": 2, "u4": 1, "w1": -2, "w2": 1, "w4": -1})),
    (-1, 1): ((1, -1, {"b1": -1, "c2": -1, "d3": -1},
               {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
              (2, -1, {"a3": -1, "b2": -1, "d4": -1},
               {"u2": 1, "u4": 1, "w2": 1, "w3": -2, "w4": 1}),
              (1, 1, {"a3": -1, "b1": 1, "b3": -1, "c2": 1, "c3": -1},
               {"u1": -1, "u3": 1, "w1": -1, "w2": 1, "w3": -1}),
              (2, -1, {"a3": -1, "c1": -1, "c2": 2, "c3": -1, "d2": 1, "d4": -1},
               {"u2": -1, "u4": 1, "w2": 1, "w3": -2, "w4": 1}),
              (1, -1, {"a1": 1, "a3": -1, "c2": 1, "c3": -1, "d1": 1, "d2": 1,
                       "d3": -1, "d4": -1},
               {"u1": -1, "u2": -1, "u3": 1, "u4": 1, "w1": 1, "w3": -1, "w4": 1}),
              (2, 1, {"a3": 1, "b2": 1, "b4": -1, "c1": -1, "c3": 1, "c4": -2},
               {"u2": -1, "u4": 1, "w2": -1, "w3": 2, "w4": -1}),
              (1, -1, {"a3": -1, "b1": 1, "b3": -1, "c2": 1, "c3": -1},
               {"u1": -1, "u3": 1, "w1": -1, "w2": 1, "w3": -1}),
              (2, -1, {"a1": 2, "a3": -1, "c1": 1, "c3": -1, "d1": 2, "d2": 1,
                       "d3": -2, "d4": -1},
               {"u1": -2, "u2": -1, "u3": 2, "u4": 1, "w1": 2, "w2": -1, "w4": 1}),
              (1, 1, {"b1": -1, "c2": -1, "d3": -1},
               {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
              (2, 1, {"a3": -1, "b1": 2, "b3": -2, "b4": -1, "c4": -2, "d2": -1},
               {"u1": -2, "u2": 1, "u3": 2, "u4": 1, "w1": -2, "w2": 1, "w4": -1})),
    (-1, -1): ((1, -1, {"b1": -1, "c2": -1, "d3": -1},
                {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
               (2, -1, {"a3": -1, "b2": -1, "d4": -1},
                {"u2": 1, "u4": 1, "w2": 1, "w3": -2, "w4": 1}),
               (1, -1, {"a3": 1, "b1": -1, "b3": 1, "c2": -1, "c3": 1},
                {"u1": 1, "u3": -1, "w1": 1, "w2": -1, "w3": 1}),
               (2, -1, {"a3": -1, "c1": -1, "c2": 2, "c3": -1, "d2": 1, "d4": -1},
                {"u2": -1, "u4": 1, "w2": 1, "w3": -2, "w4": 1}),
               (1, -1, {"a1": 1, "a3": -1, "c2": 1, "c3": -1, "d1": 1, "d2": 1,
                        "d3": -1, "d4": -1},
                {"u1": -1, "u2": -1, "u3": 1, "u4": 1, "w1": 1, "w3": -1, "w4": 1}),
               (2, 1, {"a3": -1, "b1": 2, "b2": 1, "b3": -2, "b4": -1, "c1": -1,
                       "c2": 2, "c3": -1, "c4": -2},
                {"u1": -2, "u2": -1, "u3": 2, "u4": 1, "w1": -2, "w2": 1, "w4": -1}),
               (1, 1, {"a3": 1, "b1": -1, "b3": 1, "c2": -1, "c3": 1},
                {"u1": 1, "u3": -1, "w1": 1, "w2": -1, "w3": 1}),
               (2, -1, {"a1": 2, "a3": -1, "c1": 1, "c3": -1, "d1": 2, "d2": 1,
                        "d3": -2, "d4": -1},
                {"u1": -2, "u2": -1, "u3": 2, "u4": 1, "w1": 2, "w2": -1, "w4": 1}),
               (1, 1, {"b1": -1, "c2": -1, "d3": -1},
                {"u1": 1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),
               (2, 1, {"a3": -1, "b1": 2, "b3": -2, "b4": -1, "c4": -2, "d2": -1},
                {"u1": -2, "u2": 1, "u3": 2, "u4": 1, "w1": -2, "w2": 1, "w4": -1})),
}


def k_final_factors(i, j, k, l, a_equals_c=False):
    """General-index ten-factor dilogarithm list of the final K solution."""
    def P(**kw):
        out = {}
        for s, v in kw.items():
            out[f"{s[0]}{ {'i': i, 'j': j, 'k': k, 'l': l}[s[1]] }"] = v
        return out

    def C(**kw):
        out = {}
        for s, v in kw.items():
            out[f"{s[0]}{ {'i': i, 'j': j, 'k': k, 'l': l}[s[1]] }"] = v
        return out
    ai, ak = ("a", "a") if a_equals_c else ("c", "c")
    facs = (
        (1, -1, P(bi=-1, cj=-1, dk=-1), C(ui=1, uk=1, wi=1, wj=-1, wk=1)),
        (2, -1, P(ak=-1, bj=-1, dl=-1), C(uj=1, ul=1, wj=1, wk=-2, wl=1)),
        (1, -1, _merge(P(ak=1, bi=-1, bk=1, cj=-1), {f"{ak}{k}": 1}),
         C(ui=1, uk=-1, wi=1, wj=-1, wk=1)),
        (2, 1, _merge(P(ak=1, cj=-2, dj=-1, dl=1), {f"{ai}{i}": 1, f"{ak}{k}": 1}),
         C(uj=1, ul=-1, wj=-1, wk=2, wl=-1)),
        (1, 1, _merge(P(ai=-1, cj=1, di=-1, dk=1), {f"{ai}{i}": -1}),
         C(ui=1, uk=-1, wi=-1, wj=1, wk=-1)),
        (2, -1, _merge(P(ak=1, bi=-2, bj=-1, bk=2, bl=1, cj=-2, cl=2),
                       {f"{ai}{i}": 1, f"{ak}{k}": 1}),
         C(ui=2, uj=1, uk=-2, ul=-1, wi=2, wj=-1, wl=1)),
        (1, -1, _merge(P(bi=-1, bj=-1, bk=1, bl=1, cj=-1, cl=2),
                       {f"{ai}{i}": 1}),
         C(ui=1, uj=1, uk=-1, ul=-1, wi=1, wk=-1, wl=1)),
        (2, -1, _merge(P(ak=1, cj=-2, dj=-1, dl=1), {f"{ai}{i}": 1, f"{ak}{k}": 1}),
         C(uj=1, ul=-1, wj=-1, wk=2, wl=-1)),
        (1, 1, P(ai=-1, bk=-1, cj=-1, di=-1, dj=-1, dl=1),
         C(ui=1, uj=1, uk=1, ul=-1, wi=-1, wk=1, wl=-1)),
        (2, 1, P(ak=-1, bj=-1, dl=-1), C(uj=1, ul=1, wj=1, wk=-2, wl=1)),
    )
    return facs


def _merge(d1, d2):
    out = dict(d1)
    for k, v in d2.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


# limit-reduced targets
K_FG_C2 = {
    "++-": (((2, 1, {"th2": 1, "th4": -1},
              {"u2": 1, "u4": -1, "w2": -1, "w3": 2, "w4": -1}),
             (1, 1, {"th1": 1, "th3": -1},
              {"u1": 1, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),
             (2, -1, {"th2": 1, "th4": -1},
              {"u2": 1, "u4": -1, "w2": -1, "w3": 2, "w4": -1})),
            P_FG_C2),
    "-++": (((2, -1, {"th2": -1, "th4": 1},
              {"u2": -1, "u4": 1, "w2": 1, "w3": -2, "w4": 1}),
             (1, 1, {"th1": 1, "th2": 1, "th3": -1, "th4": -1},
              {"u1": 1, "u2": 1, "u3": -1, "u4": -1, "w1": -1, "w3": 1, "w4": -1}),
             (2, 1, {"th2": -1, "th4": 1},
              {"u2": -1, "u4": 1, "w2": 1, "w3": -2, "w4": 1})),
            P_FG_C2),
}

K_FG_B2 = {
    "++-": (((1, 1, {"th2": 1, "th4": -1},
              {"u2": 1, "u4": -1, "w2": -1, "w3": 1, "w4": -1}),
             (2, 1, {"th1": 1, "th3": -1},
              {"u1": 1, "u3": -1, "w1": -1, "w2": 2, "w3": -1}),
             (1, -1, {"th2": 1, "th4": -1},
              {"u2": 1, "u4": -1, "w2": -1, "w3": 1, "w4": -1})),
            P_FG_B2),
    "-++": (((1, -1, {"th2": -1, "th4": 1},
              {"u2": -1, "u4": 1, "w2": 1, "w3": -1, "w4": 1}),
             (2, 1, {"th1": 1, "th2": 2, "th3": -1, "th4": -2},
              {"u1": 1, "u2": 2, "u3": -1, "u4": -2, "w1": -1, "w3": 1, "w4": -2}),
             (1, 1, {"th2": -1, "th4": 1},
              {"u2": -1, "u4": 1, "w2": 1, "w3": -1, "w4": 1})),
            P_FG_B2),
}

R_FG = {
    "+": (((1, 1, {"th1": 1, "th3": -1},
            {"u1": 1, "u3": -1, "w1": -1, "w2": 1, "w3": -1}),),
          P_FG_PLUS),
    "-": (((1, -1, {"th1": -1, "th3": 1},
            {"u1": -1, "u3": 1, "w1": 1, "w2": -1, "w3": 1}),),
          P_FG_MINUS),
}

# ---------------------------------------------------------------------------
# parameter systems (lists of linear forms set to zero)


def _lf(**kw):
    return {k: F(v) for k, v in kw.items()}


def econ_rows(indices):
    return [{f"a{i}": 1, f"b{i}": 1, f"c{i}": 1, f"d{i}": 1, f"e{i}": 1}
            for i in indices]


CONSTRAINTS = {
    "econ-a": econ_rows((1, 2, 3)),
    "econ": econ_rows((1, 3)),
    "ccon": [_lf(b2=1, c2=2, d2=1, e2=1, c1=-1, c3=-1),
             _lf(b4=1, c4=2, d4=1, e4=1, c1=1, c3=-1)],
    "recon1": econ_rows((1, 2, 4, 5, 7, 8)),
    "recon2": [
        _lf(b6=1, c6=2, d6=1, e6=1, c4=-1, c8=-1),
        _lf(b9=1, c9=2, d9=1, e9=1, c4=1, c8=-1),
        _lf(b3=1, c3=2, d3=1, e3=1, c2=-1, c7=-1),
        _lf(b9=1, c9=2, d9=1, e9=1, c2=1, c7=-1),
        _lf(b3=1, c3=2, d3=1, e3=1, c1=-1, c5=-1),
        _lf(b6=1, c6=2, d6=1, e6=1, c1=1, c5=-1),
    ],
    "conac": [{f"a{i}": 1, f"c{i}": -1} for i in (1, 2, 4, 5, 7, 8)],
    "ksub": [_lf(c1=1, c2=-1, c4=1), _lf(c2=1, c5=-1, c8=1),
             _lf(c1=1, c2=-1, c5=1, c7=-1)],
    "acond": [_lf(a1=1, a2=-1, a4=1), _lf(a2=1, a5=-1, a8=1),
              _lf(a1=1, a2=-1, a5=1, a7=-1)],
    "full-1": econ_rows(range(1, 10)),
    "full-2": [{f"a{i}": 1, f"c{i}": -1} for i in (1, 2, 4, 5, 7, 8)],
    "full-3": [
        _lf(a3=-1, c3=1, c1=-1, c5=-1),
        _lf(a6=-1, c6=1, c4=-1, c8=-1),
        _lf(a9=-1, c9=1, c2=1, c7=-1),
        _lf(c1=1, c5=1, c2=-1, c7=-1),
        _lf(c4=1, c8=1, c1=1, c5=-1),
        _lf(c2=-1, c7=1, c4=1, c8=-1),
    ],
    "condi": [
        _lf(th2=1, a1=1, d2=1),
        _lf(th2=1, th4=-1, e2=-1, a3=-1, b2=-1, d4=-1),
        _lf(th4=1, e4=-1, b4=-1),
        _lf(th1=1, d1=1),
        _lf(th1=1, th3=-1, e1=-1, b1=-1, c2=-1, d3=-1),
        _lf(th3=1, e3=-1, b3=-1, c4=-1),
        _lf(a1=1, c1=1, c2=-1, c4=1),
        _lf(b2=1, d2=1, a1=2, b4=-1, d4=-1),
        _lf(th2=2, th4=-2, b2=-1, b4=1, d2=1, d4=-1),
    ],
    "con14": [
        _lf(th3=1, b3=1, c4=1),
        _lf(th1=1, th3=-1, b1=1, c2=1, d3=1, e3=1),
        _lf(th1=1, d1=-1, e1=-1),
        _lf(th4=1, b4=1),
        _lf(th2=1, th4=-1, a3=1, b2=1, d4=1, e4=1),
        _lf(th2=1, a1=-1, d2=-1, e2=-1),
        _lf(a1=1, a3=-1, b1=1, b3=-1, c1=1, c3=-1, d1=1, d3=-1),
        _lf(a1=-1, a3=1, b1=1, b3=-1, c1=-1, c3=1, c4=-2, d1=-1, d3=1,
            th1=2, th3=-2),
        _lf(b1=1, b3=-1, d1=-1, d3=1, th1=2, th3=-2),
    ],
    "pare1": [_lf(e2=1, e3=-1)],
    "pare1-2": [
        _lf(a1=1, a3=1), _lf(a3=1, c3=1), _lf(c3=1, c1=1),
        _lf(a2=1), _lf(c2=1),
        _lf(b1=1, e1=1, d1=1), _lf(d1=1, th1=1),
        _lf(b2=1, e2=1, d2=1), _lf(a1=1, d2=1, th2=1),
        _lf(b3=1, e3=1, d3=1), _lf(d3=1, th3=1),
    ],
    "pare1-3": [_lf(e1=1, e2=-1)],
}

# reference closed-form solutions, used as oracles for eliminate()
REDUCTION_C2_SOLUTION = {
    "a1": _lf(b2=-1, b4=1, th2=1, th4=-1),
    "a3": _lf(b2=-1, b4=1, th2=1, th4=-1),
    "c1": _lf(b2=1, b4=-1, th2=-1, th4=1),
    "c2": _lf(c4=1),
    "c3": _lf(b2=1, b4=-1, c4=2, th2=-1, th4=1),
    "d1": _lf(th1=-1),
    "d2": _lf(b2=1, b4=-1, th2=-2, th4=1),
    "d3": _lf(c4=-1, th3=-1),
    "d4": _lf(th4=-1),
    "e1": _lf(b1=-1, th1=1),
    "e2": _lf(b4=-1, th4=1),
    "e3": _lf(b3=-1, c4=-1, th3=1),
    "e4": _lf(b4=-1, th4=1),
}

REDUCTION_B2_SOLUTION = {
    "a3": _lf(a1=1),
    "c1": _lf(a1=-1),
    "c2": _lf(d1=1, d3=-1, th1=-1, th3=1),
    "c3": _lf(a1=-1, d1=2, d3=-2, th1=-2, th3=2),
    "c4": _lf(d1=1, d3=-1, th1=-1, th3=1),
    "b1": _lf(th1=-1),
    "b2": _lf(a1=-1, th2=-1),
    "b3": _lf(d1=-1, d3=1, th1=1, th3=-2),
    "b4": _lf(th4=-1),
    "e1": _lf(d1=-1, th1=1),
    "e2": _lf(a1=-1, d2=-1, th2=1),
    "e3": _lf(d1=-1, th1=1),
    "e4": _lf(d4=-1, th4=1),
}

RAYS = {
    "lim24": {"b1": 2, "b2": 1, "b3": 1, "b4": 1},
    "lim13": {"d1": 1, "d2": 1, "d3": 1, "d4": 2},
    "elim": {"b1": 2, "b2": 1, "b3": 1},
    "elim2": {"b3": 2, "b1": 1, "b2": 1},
}

# ---------------------------------------------------------------------------
# sign-search reference data

GOOD_HOMOGENEOUS = {(1, 1), (1, -1), (-1, -1)}
GOOD_HOMOGENEOUS_P = {(1, -1)}
ETA_EXTRA_SIGNS = {
    (-1, 1, -1, -1, -1, 1, -1, -1),
    (1, 1, -1, 1, 1, 1, -1, 1),
    (-1, -1, -1, -1, 1, -1, -1, 1),
    (-1, -1, 1, -1, 1, -1, 1, 1),
    (-1, 1, -1, -1, 1, 1, -1, 1),
    (-1, 1, 1, -1, 1, 1, 1, 1),
    (1, -1, -1, -1, -1, -1, 1, -1),
    (1, -1, -1, 1, -1, 1, 1, -1),
    (1, -1, 1, 1, 1, 1, 1, -1),
    (1, 1, -1, 1, -1, 1, -1, -1),
}

TROPICAL_SIGNS_LHS = (
    (1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1, -1, -1, 1, 1),
    (1, 1, 1, 1),
    (1, -1, 1, 1),
    (1, 1, 1, 1, 1, 1, -1, -1, 1, 1),
    (-1, -1, 1, 1, 1, 1, -1, -1, 1, 1),
    (-1, -1, 1, 1),
)
TROPICAL_SIGNS_RHS = (
    (1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1, -1, -1, 1, 1),
    (1, 1, 1, 1, 1, 1, -1, -1, 1, 1),
    (-1, -1, 1, 1),
    (1, 1, -1, 1),
    (1, 1, 1, 1, 1, -1, -1, -1, 1, 1),
    (-1, 1, 1, 1),
)

# staged elimination plans (1-based row/column indices as in the source)
STAGE_PLANS = {
    "pnL": (((1, 3, 10, 11), (2, 4, 8, 9, 12, 13, 17, 18, 28, 29, 36, 37, 40,
                              41, 45, 46)),
            ((2, 9, 14, 15), (1, 3, 5, 6, 7, 10, 11, 14, 15, 16, 21, 23, 25,
                              33, 34, 35, 38, 39, 42, 43, 44)),
            ((4, 7, 8, 12, 13), (20, 22, 26, 27, 30, 31)),
            ((5, 6), (19, 24, 32))),
    "pnR": (((6, 11, 12, 14), (10, 11, 18, 19, 22, 23, 27, 28, 30, 32, 37, 38,
                               39, 41, 43, 45, 46)),
            ((1, 2, 13, 15), (3, 5, 7, 15, 16, 17, 20, 21, 24, 25, 26, 29, 31,
                              33, 35, 44)),
            ((3, 7, 8, 9, 10), (2, 4, 8, 9, 12, 13, 36, 40)),
            ((4, 5), (1, 6, 14, 34, 42))),
    "alL": (((1, 2, 3), tuple(list(range(1, 19)) + list(range(33, 47)))),
            ((4, 5, 6), tuple(range(19, 33)))),
    "alR": (((1, 2, 3), (15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27,
                         28, 29, 30, 31, 32, 33, 35, 37, 38, 39, 41, 43, 44,
                         45, 46)),
            ((4, 5, 6), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 34,
                         36, 40, 42))),
    "FFY": (((1, 5, 6, 11), (1, 2, 4, 6, 8, 9, 10, 15, 17, 19, 20, 24, 25, 28,
                             29, 36, 37, 48, 50, 54, 55, 58, 59, 63, 64, 74,
                             75, 82, 83, 86, 87, 91, 92)),
            ((2, 7, 12, 15), (3, 12, 14, 16, 18, 21, 22, 23, 26, 27, 30, 31,
                              32, 40, 42, 44, 47, 49, 51, 52, 53, 56, 57, 60,
                              61, 62, 67, 69, 71, 79, 80, 81, 84, 85, 88, 89,
                              90)),
            ((3, 8, 9, 10, 13), (7, 11, 34, 35, 38, 39, 43, 45, 66, 68, 72,
                                 73, 76, 77)),
            ((4, 14), (5, 13, 33, 41, 46, 65, 70, 78))),
    "FFuw": (((1, 2, 3), tuple([1, 2, 3, 4] + [6, 8, 9, 10] + [12, 14, 15, 16,
                               17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28,
                               29, 30, 31, 32] + list(range(47, 65)) +
                               list(range(79, 93)))),
             ((4, 5, 6), tuple([5, 7, 11, 13] + list(range(33, 47)) +
                               list(range(65, 79))))),
}

# reference spot values for the exponent linear forms (oracle rows)
PN_SPOT = {
    "pnK": {"p3": {6: -1, 7: -1}},
    "pnL": {"p3": {28: -1, 29: -1}},
    "alnK": {"a1": {1: 1, 3: 1, 5: 1, 6: 2, 7: 1, 9: 1}},
}
