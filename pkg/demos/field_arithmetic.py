"""Arithmetic in GF(4) and GF(9) with the table-driven field."""

import numpy as np

from sharplrc import GF

F = GF(2, 2)  # x^2 + x + 1, alpha = code 2
print(F, "primitive polynomial", F.primpoly)
print("exp table:", F.exp[: F.q - 1].tolist())  # 1, alpha, alpha^2 = alpha + 1
print("log table:", F.log.tolist())  # log 0 is -1

a = F(2)
print("alpha^2 =", a * a, " alpha^-1 =", a.inverse(), " alpha^3 =", a**3)

# vectorised: whole multiplication table in one call
codes = np.arange(F.q)
print(F.mul(codes[:, None], codes[None, :]))

# GF(9) from the default primitive polynomial
K = GF(3, 2)
print(K, K.primpoly, "zeta has order", len(set(K.exp[: K.q - 1].tolist())))
M = K.random(np.random.default_rng(0), (3, 5))
R, pivots = K.rref(M)
print("rref pivots", pivots)
print("null space rows\n", K.null_space(M, 5))
