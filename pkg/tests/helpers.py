"""Shared fixtures for the test suite: brute-force reference code and the random sweep."""

import numpy as np

from sharplrc.bench import draw_code
from sharplrc.gf import field_of_order

FIXTURES = __import__("pathlib").Path(__file__).parent / "fixtures"
EX1 = FIXTURES / "ex1.code"

# (q, n range, k range); k <= 2n/3 keeps every lead inside the default weight cap
SWEEP_SHAPES = {
    2: (range(6, 13), range(2, 7)),
    3: (range(6, 11), range(2, 6)),
    4: (range(6, 10), range(2, 6)),
    5: (range(5, 9), range(2, 5)),
}
PER_FIELD = 26


def sweep_codes(seed=2024, per_field=PER_FIELD):
    """Seeded random nondegenerate codes with d(C) > 1 and d(C^perp) > 1."""
    out = []
    for q, (ns, ks) in SWEEP_SHAPES.items():
        F = field_of_order(q)
        rng = np.random.default_rng([seed, q])
        while sum(1 for c in out if c.field.q == q) < per_field:
            n = int(rng.choice(ns))
            k = int(rng.choice([k for k in ks if 3 * k <= 2 * n]))
            out.append(draw_code(F, n, k, rng))
    return out
