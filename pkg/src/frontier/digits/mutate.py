"""The digit mutation operator: displace one model point."""

from __future__ import annotations

import math

import numpy as np

from frontier.digits.model import DigitModel


def mutate_digit(model: DigitModel, rng: np.random.Generator,
                 lb: float, ub: float) -> DigitModel:
    """Displace one point (segment endpoint or control point, uniformly
    chosen) by a vector with magnitude uniform in [lb, ub] and uniform
    direction.

    A segment endpoint is shared with the adjacent segment and both copies
    move together, so closure is preserved by construction; every other
    coordinate is copied bit-identically.
    """
    total = model.point_count()
    pick = int(rng.integers(total))
    direction = rng.uniform(0.0, 2.0 * math.pi)
    magnitude = rng.uniform(lb, ub)
    delta = np.array([magnitude * math.cos(direction),
                      magnitude * math.sin(direction)])
    subpaths = []
    for sp in model.subpaths:
        k = sp.shape[0]
        if 0 <= pick < 3 * k:
            sp = np.array(sp)
            if pick < k:
                # endpoint: start of segment pick == end of segment pick-1
                sp[pick, 0] += delta
                sp[(pick - 1) % k, 3] += delta
            else:
                seg, which = divmod(pick - k, 2)
                sp[seg, 1 + which] += delta
        subpaths.append(sp)
        pick -= 3 * k
    return DigitModel(subpaths, model.expected_label)
