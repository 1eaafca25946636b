"""The [9,4,5] code over GF(4): sharp structure, locality and repair."""

from pathlib import Path

import numpy as np

from sharplrc import CodeOracle, classify, parse_code, recover, sharp_structure
from sharplrc.recovery import widen

path = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "ex1.code"
C = parse_code(path)
print(C)
print("d =", C.min_distance_exhaustive(), " dual distance =", C.dual().min_distance_exhaustive())

S = sharp_structure(C)
print(S.report(classify(S).optimal))

# the brute-force view agrees coordinate by coordinate
print("oracle localities:", CodeOracle(C).localities())

# repair one erased coordinate of a random codeword
rng = np.random.default_rng(4)
x = [int(v) for v in C.random_codeword(rng)]
y = list(x)
y[6] = None
print("codeword", x, "-> erased", y, "-> x_7 =", recover(y, S))

# adding a coordinate to every recovery set keeps the structure optimal but not sharp
W = widen(S, rng)
v = classify(W)
print("widened locality", W.locality, "optimal", v.optimal, "sharp", v.sharp)
