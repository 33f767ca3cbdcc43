"""Known results for sl(3) and for sl(2) inside sl(3), used by ``verify`` and report alignment.

Polynomials are written over the built-in labels: y1 x1 y2 x2 y3 x3 h1 h2
for sl(3), and y1 x1 h1 y2 y3 x2 x3 h0 (h0 = h1/2 + h2) for the sl(2) scope.
"""

from __future__ import annotations

SL3_WEIGHTS = {
    "y1": (-2, 1), "x1": (2, -1), "y2": (1, -2), "x2": (-1, 2),
    "y3": (-1, -1), "x3": (1, 1), "h1": (0, 0), "h2": (0, 0),
}

SL3_TORUS_BASIS = ["h1", "h2", "x1*y1", "x2*y2", "x3*y3", "x1*x2*y3", "x3*y1*y2"]

# images of each variable under the two reflection lifts
SL3_S1 = {"y1": "-x1", "x1": "-y1", "y2": "y3", "x2": "x3", "y3": "-y2", "x3": "-x2", "h1": "-h1", "h2": "h1 + h2"}
SL3_S2 = {"y1": "-y3", "x1": "-x3", "y2": "-x2", "x2": "-y2", "y3": "y1", "x3": "x1", "h1": "h1 + h2", "h2": "-h2"}

SL3_CLOSURE_ORDER = 24

SL3_BLOCKS = {
    "w2,1": "x1*y1 + x2*y2 + x3*y3",
    "w2,2": "h1^2 + h1*h2 + h2^2",
    "w3,1": "x1*x2*y3 + x3*y1*y2",
    "w3,2": "2*h1^3 + 3*h1^2*h2 - 3*h1*h2^2 - 2*h2^3",
    "w3,3": "x1*y1*(h1 + 2*h2) - x2*y2*(2*h1 + h2) + x3*y3*(h1 - h2)",
}

SL3_KERNELS = {2: (3, 1), 3: (27, 1, 9)}

SL3_CASIMIRS = {
    "C2": "3*(x1*y1 + x2*y2 + x3*y3) + h1^2 + h1*h2 + h2^2",
    "C3": "27*(x1*x2*y3 + x3*y1*y2) + (2*h1^3 + 3*h1^2*h2 - 3*h1*h2^2 - 2*h2^3)"
          " + 9*(x1*y1*(h1 + 2*h2) - x2*y2*(2*h1 + h2) + x3*y3*(h1 - h2))",
}

SL3_WEYL_INVARIANTS = {
    "C2": "alpha1^2 + alpha1*alpha2 + alpha2^2",
    "C3": "2*alpha1^3 + 3*alpha1^2*alpha2 - 3*alpha1*alpha2^2 - 2*alpha2^3",
}

SL2_WEIGHTS = (-2, 2, 0, 1, -1, -1, 1, 0)

SL2_NEW_TORUS_MONOMIALS = ["y2*y3", "x2*x3", "y1*y2^2", "y1*x3^2", "x1*x2^2", "x1*y3^2"]

SL2_S1_MATRIX = (
    (0, -1, 0, 0, 0, 0, 0, 0),
    (-1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, -1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, -1, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, -1, 0),
    (0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 1),
)

SL2_INVARIANTS = {
    "I1": "h0",
    "I2": "h1^2 + 4*x1*y1",
    "I3": "x2*y2 + x3*y3",
    "I4": "h1*y2*y3 + y1*y2^2 - x1*y3^2",
    "I5": "h1*x2*x3 + x1*x2^2 - x3^2*y1",
    "I6": "h1*(x2*y2 - x3*y3) - 2*(y1*y2*x3 + x1*x2*y3)",
}

# the initial-block part of each invariant, with its coefficient
SL2_INITIAL_PARTS = {
    "I1": "h0",
    "I2": "4*x1*y1",
    "I3": "x2*y2 + x3*y3",
    "I4": "y1*y2^2 - x1*y3^2",
    "I5": "x1*x2^2 - x3^2*y1",
    "I6": "-2*(y1*y2*x3 + x1*x2*y3)",
}

SL2_SYZYGY = "I2*I3^2 - 4*I4*I5 - I6^2"

SL2_DECOMPOSITIONS = {
    "C2": "I1^2 + 3/4*I2 + 3*I3",
    "C3": "-2*I1^3 + 9/2*I1*I2 - 9*I1*I3 - 27/2*I6",
}

SL2_PRIMARY_DEGREES = (1, 2, 2, 3, 3)
SL2_SECONDARY_DEGREES = (3,)

# z-exponents of diag(z, 1/z, 1) (x) diag(1/z, z, 1)
SU2_U3_WEIGHTS = (0, 2, 1, -2, 0, -1, -1, 1, 0)
MOLIEN_FUNCTIONAL_DEGREE = 9
