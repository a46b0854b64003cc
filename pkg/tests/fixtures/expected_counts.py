"""
Reference values for the orbit classification of small systems.
"""

# (orbits, parabolic, smooth) for GL(3) and GL(4)
GL3_SUMMARY = (6, 4, 6)
GL4_SUMMARY = (24, 8, 22)

GL3_SUMMARY_LINE = "6 orbits, 4 parabolic, 6 smooth"
GL4_SUMMARY_LINE = "24 orbits, 8 parabolic, 22 smooth"

# Non-smooth A3 labels in one-line notation
A3_SINGULAR = {(3, 4, 1, 2), (4, 2, 3, 1)}

# |W| per classical system
GROUP_ORDERS = {
    ("A", 1): 2,
    ("A", 2): 6,
    ("A", 3): 24,
    ("A", 4): 120,
    ("B", 2): 8,
    ("C", 2): 8,
    ("B", 3): 48,
    ("C", 3): 48,
    ("D", 4): 192,
}

# Length-generating function of S_4 ([4]_q!)
A3_GROUP_POINCARE = (1, 3, 5, 6, 5, 3, 1)

# Poincaré coefficients of [e, w] for the two singular A3 labels
SINGULAR_A3_POINCARE = {
    (3, 4, 1, 2): (1, 3, 5, 4, 1),
    (4, 2, 3, 1): (1, 3, 5, 6, 4, 1),
}
