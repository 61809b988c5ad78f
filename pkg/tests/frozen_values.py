"""Exact reference values generated by scripts/freeze_exact_values.py.

Produced with the rational oracle in tests/exact.py; do not edit by hand.
"""
from fractions import Fraction as F

GRAPHS = {
    'K2': (2, [(0, 1)]),
    'K3': (3, [(0, 1), (0, 2), (1, 2)]),
    'P3': (3, [(0, 1), (1, 2)]),
    'K5': (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    'P5': (5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    'S5': (5, [(0, 1), (0, 2), (0, 3), (0, 4)]),
    'C4': (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    'C5': (5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    'K33': (6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
    'K23': (5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    'star_like_K3_7': (7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5), (0, 6)]),
    'path_like_K3_7': (7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)]),
    'star_like_K4_7': (7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (0, 6)]),
    'petersen': (10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (6, 8), (7, 9), (8, 5), (9, 6)]),
    'weighted_P3': (3, [(0, 1, 2), (1, 2, 3)]),
    'weighted_K4': (4, [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 4), (1, 3, 5), (2, 3, 6)]),
    'weighted_C5': (5, [(0, 1, '1/2'), (1, 2, 1), (2, 3, '3/2'), (3, 4, 2), (0, 4, '5/2')]),
}

VALUES = {
    'K2': {'rho': F(1, 4), 'zeta1': F(1, 2), 'zeta2': F(1, 4), 'r_total': F(1, 1), 'T': F(1, 1)},
    'K3': {'rho': F(1, 3), 'zeta1': F(2, 3), 'zeta2': F(2, 9), 'r_total': F(2, 1), 'T': F(3, 1)},
    'P3': {'rho': F(2, 3), 'zeta1': F(4, 3), 'zeta2': F(10, 9), 'r_total': F(4, 1), 'T': F(1, 1)},
    'K5': {'rho': F(2, 5), 'zeta1': F(4, 5), 'zeta2': F(4, 25), 'r_total': F(4, 1), 'T': F(125, 1)},
    'P5': {'rho': F(2, 1), 'zeta1': F(4, 1), 'zeta2': F(38, 5), 'r_total': F(20, 1), 'T': F(1, 1)},
    'S5': {'rho': F(8, 5), 'zeta1': F(16, 5), 'zeta2': F(76, 25), 'r_total': F(16, 1), 'T': F(1, 1)},
    'C4': {'rho': F(5, 8), 'zeta1': F(5, 4), 'zeta2': F(9, 16), 'r_total': F(5, 1), 'T': F(4, 1)},
    'C5': {'rho': F(1, 1), 'zeta1': F(2, 1), 'zeta2': F(6, 5), 'r_total': F(10, 1), 'T': F(5, 1)},
    'K33': {'rho': F(3, 4), 'zeta1': F(3, 2), 'zeta2': F(17, 36), 'r_total': F(9, 1), 'T': F(81, 1)},
    'K23': {'rho': F(23, 30), 'zeta1': F(23, 15), 'zeta2': F(293, 450), 'r_total': F(23, 3), 'T': F(12, 1)},
    'star_like_K3_7': {'rho': F(47, 21), 'zeta1': F(94, 21), 'zeta2': F(1822, 441), 'r_total': F(94, 3), 'T': F(3, 1)},
    'path_like_K3_7': {'rho': F(71, 21), 'zeta1': F(142, 21), 'zeta2': F(9328, 441), 'r_total': F(142, 3), 'T': F(3, 1)},
    'star_like_K4_7': {'rho': F(51, 28), 'zeta1': F(51, 14), 'zeta2': F(1233, 392), 'r_total': F(51, 2), 'T': F(16, 1)},
    'petersen': {'rho': F(33, 20), 'zeta1': F(33, 10), 'zeta2': F(141, 100), 'r_total': F(33, 1), 'T': F(2000, 1)},
    'weighted_P3': {'rho': F(5, 18), 'zeta1': F(5, 9), 'zeta2': F(16, 81), 'r_total': F(5, 3), 'T': F(6, 1)},
    'weighted_K4': {'rho': F(553, 4448), 'zeta1': F(553, 2224), 'zeta2': F(118993, 4946176), 'r_total': F(553, 556), 'T': F(556, 1)},
    'weighted_C5': {'rho': F(111, 137), 'zeta1': F(222, 137), 'zeta2': F(16952, 18769), 'r_total': F(1110, 137), 'T': F(137, 8)},
}
