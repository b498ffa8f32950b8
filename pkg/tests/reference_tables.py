"""Frozen reference triangles used as expected values.

Each triangle is a list of rows; row n lists the entries for i = 0, 1, ...
up to the last nonzero printed entry.  Cells beyond a row's list are zero.
Entries were tabulated independently of the code under test.
"""

# Paths of x-length 0..10.
G_SEQUENCE = [1, 2, 7, 29, 133, 650, 3319, 17498, 94525, 520508, 2910895]

# binom(n, 2k) * Catalan(k)
MOTZKIN_TRIANGLE = [
    [1],
    [1],
    [1, 1],
    [1, 3],
    [1, 6, 2],
    [1, 10, 10],
    [1, 15, 30, 5],
    [1, 21, 70, 35],
    [1, 28, 140, 140, 14],
    [1, 36, 252, 420, 126],
    [1, 45, 420, 1050, 630, 42],
]

# binom(n+1, k) binom(3n-3k+1, n-3k) / (n+1)
GNK_TRIANGLE = [
    [1],
    [2],
    [7],
    [30, 1],
    [143, 10],
    [728, 78],
    [3876, 560, 3],
    [21318, 3876, 56],
    [120175, 26334, 684],
    [690690, 177100, 6930, 12],
]

# Paths of x-length n with i v steps.
V_TRIANGLE = [
    [1],
    [1, 1],
    [2, 3, 2],
    [4, 10, 10, 5],
    [9, 30, 45, 35, 14],
    [21, 90, 175, 196, 126, 42],
    [51, 266, 644, 924, 840, 462, 132],
]

# Paths of x-length n with i h steps.
H_TRIANGLE = [
    [1],
    [1, 1],
    [3, 3, 1],
    [9, 13, 6, 1],
    [31, 55, 36, 10, 1],
    [113, 241, 200, 80, 15, 1],
    [431, 1071, 1080, 560, 155, 21, 1],
]

# Paths of x-length n with i d steps.
D_TRIANGLE = [
    [1],
    [2],
    [6, 1],
    [22, 7],
    [90, 41, 2],
    [394, 231, 25],
    [1806, 1289, 219, 5],
    [8558, 7183, 1666, 91],
    [41586, 40081, 11780, 1064, 14],
]

# Paths of x-length n with i u steps.  Cell (6, 5) is 672: the closed form
# and exhaustive enumeration agree, and the row then sums to 3319.
U_TRIANGLE = [
    [1],
    [1, 1],
    [1, 4, 2],
    [1, 9, 14, 5],
    [1, 16, 52, 50, 14],
    [1, 25, 140, 260, 182, 42],
    [1, 36, 310, 950, 1218, 672, 132],
]

# (2i+3)/(2n+3) binom(2n+3, n-i)
BALLOT_TRIANGLE = [
    [1],
    [3, 1],
    [9, 5, 1],
    [28, 20, 7, 1],
    [90, 75, 35, 9, 1],
    [297, 275, 154, 54, 11, 1],
    [1001, 1001, 637, 273, 77, 13, 1],
]

# (i+1)/(n+1) binom(2n+1, n-i)
POINT_TRIANGLE = [
    [1],
    [2, 1],
    [5, 4, 1],
    [14, 14, 6, 1],
    [42, 48, 27, 8, 1],
    [132, 165, 110, 44, 10, 1],
    [429, 572, 429, 208, 65, 12, 1],
]

# Total u steps at level i+1 over paths of x-length n+1.
ALPHA_TRIANGLE = [
    [1],
    [7, 1],
    [39, 12, 1],
    [212, 96, 17, 1],
    [1157, 665, 178, 22, 1],
    [6384, 4320, 1513, 285, 27, 1],
    [35647, 27177, 11522, 2881, 417, 32, 1],
]

# Total v steps at level i over paths of x-length n+1.
BETA_TRIANGLE = [
    [1],
    [6, 1],
    [33, 11, 1],
    [179, 85, 16, 1],
    [978, 580, 162, 21, 1],
    [5406, 3740, 1351, 264, 26, 1],
    [30241, 23437, 10171, 2617, 391, 31, 1],
]

# Total h steps at level i over paths of x-length n+1.
MU_TRIANGLE = [
    [1],
    [4, 1],
    [18, 9, 1],
    [86, 60, 14, 1],
    [431, 368, 127, 19, 1],
    [2238, 2190, 970, 219, 24, 1],
    [11941, 12894, 6803, 2017, 336, 29, 1],
]

# Paths of x-length n with i return steps.
R_TRIANGLE = [
    [1],
    [1, 1],
    [1, 5, 1],
    [1, 18, 9, 1],
    [1, 67, 51, 13, 1],
    [1, 278, 253, 100, 17, 1],
    [1, 1272, 1236, 623, 165, 21, 1],
]

# Paths of x-length n with i adjacent ud factors.
L_UD_TRIANGLE = [
    [1],
    [2],
    [6, 1],
    [24, 5],
    [106, 26, 1],
    [498, 143, 9],
    [2444, 805, 69, 1],
    [12382, 4604, 498, 14],
    [64270, 26637, 3471, 146, 1],
]

# Paths of x-length n with i adjacent uh factors.
L_UH_TRIANGLE = [
    [1],
    [2],
    [6, 1],
    [21, 8],
    [83, 48, 2],
    [353, 268, 29],
    [1577, 1466, 271, 5],
    [7294, 7984, 2114, 106],
    [34622, 43509, 15028, 1352, 14],
]

# Paths of x-length n with i adjacent uu factors.  Row 6 is the value set
# on which both closed forms, the series solution and exhaustive
# enumeration agree.
L_UU_TRIANGLE = [
    [1],
    [2],
    [6, 1],
    [19, 9, 1],
    [64, 54, 14, 1],
    [225, 282, 122, 20, 1],
    [816, 1379, 861, 235, 27, 1],
]

# Paths of x-length n with i adjacent hh factors.
L_HH_TRIANGLE = [
    [1],
    [2],
    [6, 1],
    [25, 3, 1],
    [110, 19, 3, 1],
    [520, 104, 22, 3, 1],
    [2566, 594, 130, 25, 3, 1],
]

# Paths of x-length n with i adjacent hd factors.
L_HD_TRIANGLE = [
    [1],
    [2],
    [7],
    [28, 1],
    [126, 7],
    [605, 45],
    [3040, 277, 2],
    [15781, 1692, 25],
    [83971, 10320, 234],
    [455553, 63026, 1924, 5],
]

# Paths of x-length n with i adjacent vu factors.
L_VU_TRIANGLE = [
    [1],
    [2],
    [6, 1],
    [20, 8, 1],
    [72, 48, 12, 1],
    [272, 260, 100, 17, 1],
    [1064, 1340, 706, 185, 23, 1],
]

# Paths of x-length n with i adjacent vv factors.
L_VV_TRIANGLE = [
    [1],
    [2],
    [6, 1],
    [21, 7, 1],
    [80, 41, 11, 1],
    [322, 225, 86, 16, 1],
    [1347, 1198, 589, 162, 22, 1],
]

# Paths of x-length n with i adjacent du factors.
L_DU_TRIANGLE = [
    [1],
    [2],
    [7],
    [28, 1],
    [123, 10],
    [576, 73, 1],
    [2819, 485, 15],
    [14250, 3093, 154, 1],
    [73833, 19325, 1346, 21],
    [390048, 119418, 10758, 283, 1],
]

# Paths of x-length n with i adjacent dd factors (series route only).
L_DD_TRIANGLE = [
    [1],
    [2],
    [7],
    [29],
    [132, 1],
    [641, 9],
    [3254, 64, 1],
    [17060, 427, 11],
    [91663, 2770, 91, 1],
    [502092, 17720, 683, 13],
]

# Paths of x-length n with i adjacent dv factors.
L_DV_TRIANGLE = [
    [1],
    [2],
    [7],
    [28, 1],
    [124, 9],
    [584, 66],
    [2873, 443, 3],
    [14592, 2857, 49],
    [75944, 18037, 544],
    [402928, 112510, 5058, 12],
]

PAIR_TRIANGLES = {
    "ud": L_UD_TRIANGLE,
    "uh": L_UH_TRIANGLE,
    "uu": L_UU_TRIANGLE,
    "hh": L_HH_TRIANGLE,
    "hd": L_HD_TRIANGLE,
    "vu": L_VU_TRIANGLE,
    "vv": L_VV_TRIANGLE,
    "du": L_DU_TRIANGLE,
    "dd": L_DD_TRIANGLE,
    "dv": L_DV_TRIANGLE,
}


def cell(triangle, n, i):
    """Entry (n, i), with zeros beyond the stored row prefixes."""
    if n >= len(triangle) or i >= len(triangle[n]):
        return 0
    return triangle[n][i]
