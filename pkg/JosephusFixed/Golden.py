"""
Reference values for the first fixed points of J_3 and J_2 and two worked
congruence links. Nothing in this module is computed: it is the oracle the
generated output is compared to.
"""

# (ell, n, m_bar, base 3/2 expansion) for the first twenty fixed points of J_3
TABLE2 = (
    (1, 1, 0, "2"),
    (2, 2, 3, "21"),
    (3, 13, 0, "210112"),
    (4, 20, 1, "2101121"),
    (5, 46, 2, "210112102"),
    (6, 157, 0, "210112102012"),
    (7, 236, 1, "2101121020121"),
    (8, 532, 1, "210112102012102"),
    (9, 1198, 2, "21011210201210202"),
    (10, 4045, 0, "21011210201210202012"),
    (11, 6068, 1, "210112102012102020121"),
    (12, 13654, 2, "21011210201210202012102"),
    (13, 46084, 1, "21011210201210202012102012"),
    (14, 103690, 5, "2101121020121020201210201202"),
    (15, 1181101, 0, "2101121020121020201210201202011112"),
    (16, 1771652, 1, "21011210201210202012102012020111121"),
    (17, 3986218, 7, "2101121020121020201210201202011112102"),
    (18, 102162424, 1, "210112102012102020121020120201111210201111112"),
    (19, 229865455, 0, "21011210201210202012102012020111121020111111202"),
    (20, 344798183, 0, "210112102012102020121020120201111210201111112021"),
)

# (ell, 2^ell - 1, binary expansion) for the first ten fixed points of J_2
TABLE3 = (
    (1, 1, "1"),
    (2, 3, "11"),
    (3, 7, "111"),
    (4, 15, "1111"),
    (5, 31, "11111"),
    (6, 63, "111111"),
    (7, 127, "1111111"),
    (8, 255, "11111111"),
    (9, 511, "111111111"),
    (10, 1023, "1111111111"),
)

# The two worked congruence examples: ell is the index of the first fixed point
# of the pair, the checked value is n^(ell+1).
WORKED_LINKS = (
    {"ell": 17, "n": 102162424, "p": 7, "q": 1, "a1": 1093, "a2": 0, "x": 1, "y": -1093,
     "raw_z": -2389298, "z": 3280, "modulus": 4374, "quotient": 23356},
    {"ell": 13, "n": 103690, "p": 1, "q": 5, "a1": 1, "a2": 10, "x": 11, "y": -1,
     "raw_z": 298, "z": 10, "modulus": 96, "quotient": 1080},
)
