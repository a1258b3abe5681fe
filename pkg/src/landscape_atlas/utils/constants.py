# -*- coding: utf-8 -*-
"""
src.landscape_atlas.utils.constants.py - Landscape-Atlas
Created by NCagle
2025-02-04
      _
   __(.)<
~~~⋱___)~~~

Fixed values: display letters, file format tags, render colors and the
published reference figures the verification suite checks against.
"""

from fractions import Fraction as F
from string import ascii_uppercase

# Rank 1 -> "A", rank 2 -> "B", ...
RANK_LETTERS = ascii_uppercase

# Hard cap for full enumeration; counting is unrestricted
DEFAULT_MAX_N = 3

ATLAS_FORMAT = "landscape-atlas/1"
CSV_FORMAT = "landscape-atlas-csv/1"

# Decimal places used when rendering exact values
PERF_DECIMALS = 3
PERCENT_DECIMALS = 2
STORED_DECIMALS = 6


"""
╔═══════════════╗
║ Render Colors ║
╚═══════════════╝
"""
GLOBAL_OPTIMUM_COLOR = "#FFD700"    # yellow
STRICT_SUBOPTIMUM_COLOR = "#FF69B4"  # pink
WEAK_SUBOPTIMUM_COLOR = "#FFA500"    # orange
# Blue ramp, best rank darkest
RANK_SHADE_DARK = (0x08, 0x30, 0x6B)
RANK_SHADE_LIGHT = (0xDE, 0xEB, 0xF7)
NEUTRAL_EDGE_COLOR = "#B0B0B0"
IMPROVING_EDGE_COLOR = "#303030"


"""
╔══════════════════╗
║ Reference Counts ║
╚══════════════════╝
"""
# Rankings with ties (ordered Bell numbers of 2**n) per rank count k
RANKINGS_PER_K = {
    1: (1, 2),
    2: (1, 14, 36, 24),
    3: (1, 254, 5796, 40824, 126000, 191520, 141120, 40320),
    4: (
        1,
        65534,
        42850116,
        4123173624,
        131542866000,
        1969147121760,
        16540688324160,
        86355926616960,
        297846188640000,
        703098107712000,
        1155068769254400,
        1320663933388800,
        1031319184896000,
        524813313024000,
        156920924160000,
        20922789888000,
    ),
}

CLASS_COUNTS = {1: 2, 2: 14, 3: 11991}
INJECTIVE_CLASS_COUNTS = {1: 1, 2: 3, 3: 840, 4: 54486432000}
PARTITION_TOTALS = {2: 8, 3: 128, 4: 32768}

ORBIT_SIZES_2D = (8, 8, 8, 8, 8, 8, 4, 4, 4, 4, 4, 4, 2, 1)

# (deceptive, neutral, plateau) -> classes, for n = 3
CROSS_TAB_3D = {
    (False, False, False): 1233,
    (True, False, False): 3175,
    (False, True, False): 1098,
    (True, True, False): 4130,
    (False, True, True): 1130,
    (True, True, True): 1225,
}

# (best better, first better, equal)
SUCCESS_TALLY_3D = (7268, 653, 4070)
# (first faster, best faster, equal), as published
ERT_TALLY_3D = (7064, 4916, 11)
# The same tally under this package's evaluation-cost model
MODEL_ERT_TALLY_3D = (7175, 4776, 40)
# Published as roughly 30%; 3834 of 11991 is 31.97%
MULTIPLE_GLOBAL_OPTIMA_3D = 3834
ERT_TALLY_2D = (10, 3, 1)


"""
╔═══════════════════════════╗
║ Two-Dimensional Tables    ║
╚═══════════════════════════╝
"""
# (global optima, suboptima, neutral networks, optimal plateaus,
#  suboptimal plateaus, neutral degree), one row per class
PROPERTIES_2D = (
    (1, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 0, 0),
    (2, 0, 1, 1, 0, 2),
    (2, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (1, 1, 1, 0, 0, 2),
    (1, 0, 1, 0, 0, 2),
    (1, 1, 0, 0, 0, 0),
    (3, 0, 1, 1, 0, 3),
    (2, 0, 2, 1, 0, 4),
    (2, 0, 0, 0, 0, 0),
    (1, 1, 1, 0, 0, 3),
    (4, 0, 1, 1, 0, 4),
)

# (success, steps | success, evals | success, steps | fail, evals | fail, ERT)
_TRAPPED_BEST = (F(3, 4), F(2, 3), F(13, 3), F(0), F(3), F(16, 3))
_TRAPPED_FIRST = (F(1, 2), F(1, 2), F(7, 2), F(1, 2), F(7, 2), F(7))

BEST_IMPROVEMENT_2D = (
    (F(1), F(1), F(5), None, None, F(5)),
    (F(1), F(1), F(5), None, None, F(5)),
    _TRAPPED_BEST,
    (F(1), F(1, 2), F(4), None, None, F(4)),
    (F(1), F(1, 2), F(4), None, None, F(4)),
    (F(1), F(1), F(5), None, None, F(5)),
    _TRAPPED_BEST,
    (F(1), F(1), F(5), None, None, F(5)),
    _TRAPPED_BEST,
    (F(1), F(1, 4), F(7, 2), None, None, F(7, 2)),
    (F(1), F(1, 2), F(4), None, None, F(4)),
    (F(1), F(1, 2), F(4), None, None, F(4)),
    _TRAPPED_BEST,
    (F(1), F(0), F(3), None, None, F(3)),
)

FIRST_IMPROVEMENT_2D = (
    (F(1), F(1), F(35, 8), None, None, F(35, 8)),
    (F(1), F(5, 4), F(19, 4), None, None, F(19, 4)),
    _TRAPPED_FIRST,
    (F(1), F(5, 8), F(61, 16), None, None, F(61, 16)),
    (F(1), F(1, 2), F(7, 2), None, None, F(7, 2)),
    (F(1), F(1), F(35, 8), None, None, F(35, 8)),
    (F(5, 8), F(3, 5), F(19, 5), F(1, 3), F(10, 3), F(29, 5)),
    (F(1), F(1), F(9, 2), None, None, F(9, 2)),
    _TRAPPED_FIRST,
    (F(1), F(1, 4), F(13, 4), None, None, F(13, 4)),
    (F(1), F(1, 2), F(15, 4), None, None, F(15, 4)),
    (F(1), F(1, 2), F(7, 2), None, None, F(7, 2)),
    (F(3, 4), F(2, 3), F(4), F(0), F(3), F(5)),
    (F(1), F(0), F(3), None, None, F(3)),
)

# Three-dimensional worked examples, ranks indexed by node 000..111
PLATEAU_TRAP_3D = (1, 3, 4, 2, 6, 7, 5, 2)
STRICT_TRAP_3D = (1, 2, 3, 4, 6, 5, 7, 2)
PLATEAU_TRAP_SUCCESS = F(1, 2)
STRICT_TRAP_SUCCESS = F(5, 8)

# Best-improvement success from each start, by start rank, nodes in order
PLATEAU_TRAP_BY_RANK = {
    "A": (F(1),), "B": (F(0), F(0)), "C": (F(1),), "D": (F(1),),
    "E": (F(0),), "F": (F(1),), "G": (F(0),),
}
# Starts at D and E reach the optimum or the trap at B with equal odds
STRICT_TRAP_BY_RANK = {
    "A": (F(1),), "B": (F(1), F(0)), "C": (F(1),), "D": (F(1, 2),),
    "E": (F(1, 2),), "F": (F(1),), "G": (F(0),),
}
