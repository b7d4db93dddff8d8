"""Frozen reference values used across the suite.

REFERENCE_COEFFS holds the published coefficient table of the modified
expansions (weights 2..6, exponents 1..13).  The relation lists are the
published conjectural identities with their verification orders.
"""

REFERENCE_COEFFS = {
    (2,): [1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28, 14],
    (3,): [0, 1, 3, 7, 10, 19, 21, 35, 39, 56, 55, 91, 78],
    (4,): [0, 0, 1, 4, 10, 21, 35, 60, 85, 130, 165, 245, 286],
    (3, 1): [0, 0, 0, 1, 1, 6, 5, 15, 18, 31, 30, 70, 55],
    (5,): [0, 0, 0, 1, 5, 15, 35, 71, 126, 215, 330, 511, 715],
    (4, 1): [0, 0, 0, 0, 0, 1, 1, 5, 7, 16, 17, 47, 42],
    (3, 2): [0, 0, 0, 0, 1, 2, 7, 13, 24, 42, 69, 97, 149],
    (6,): [0, 0, 0, 0, 1, 6, 21, 56, 126, 253, 462, 798, 1287],
    (5, 1): [0, 0, 0, 0, 0, 0, 0, 1, 1, 6, 6, 23, 22],
    (4, 2): [0, 0, 0, 0, 0, 0, 1, 2, 7, 13, 30, 45, 88],
    (3, 3): [0, 0, 0, 0, 0, 1, 3, 10, 22, 47, 85, 154, 244],
    (4, 1, 1): [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 9, 9],
    (3, 2, 1): [0, 0, 0, 0, 0, 0, 0, 1, 1, 4, 9, 14, 23],
}

# rank / upper-bound table, weights 2..10
RANK_A_K = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 9, 8: 18, 9: 29, 10: 54}
RANK_A_LE_K = {2: 1, 3: 2, 4: 4, 5: 7, 6: 11, 7: 18, 8: 27, 9: 42, 10: 63}
UPPER_BOUND = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 9, 8: 18, 9: 30, 10: 56}

# 23-term weight-9 relation among modified expansions, stated to hold to q^269
WEIGHT9_RELATION = [
    ((7, 2), 4),
    ((6, 3), 6),
    ((5, 4), -1),
    ((4, 5), -1),
    ((6, 2, 1), -6),
    ((6, 1, 2), -6),
    ((5, 3, 1), -2),
    ((5, 2, 2), -7),
    ((5, 1, 3), -3),
    ((4, 4, 1), 2),
    ((4, 3, 2), -1),
    ((3, 5, 1), 1),
    ((3, 2, 4), 1),
    ((2, 5, 2), -3),
    ((5, 2, 1, 1), 2),
    ((5, 1, 2, 1), 2),
    ((5, 1, 1, 2), 2),
    ((3, 3, 1, 2), 1),
    ((3, 2, 3, 1), -1),
    ((3, 2, 2, 2), -4),
    ((3, 2, 1, 3), -1),
    ((2, 2, 3, 2), -2),
    ((2, 1, 3, 3), 1),
]

# mixed-weight relations observed at weights <= 6 (verified here to q^100)
WEIGHT6_RELATION_1 = [
    ((3, 1), -1),
    ((5,), 1),
    ((4, 1), -3),
    ((3, 2), -3),
    ((6,), -1),
    ((4, 2), -3),
    ((3, 3), 6),
]
WEIGHT6_RELATION_2 = [
    ((3, 1), -2),
    ((5,), 2),
    ((4, 1), -6),
    ((3, 2), -9),
    ((6,), 1),
    ((4, 2), -12),
    ((4, 1, 1), -3),
    ((3, 2, 1), 3),
]

# their induced MZV relations (top-weight terms only)
MZV_RELATION_1 = [((6,), -1), ((4, 2), -3), ((3, 3), 6)]
MZV_RELATION_2 = [((6,), 1), ((4, 2), -12), ((4, 1, 1), -3), ((3, 2, 1), 3)]
