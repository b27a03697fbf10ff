import math

import numpy as np
import pytest

from polystab import Configuration, validate_polygon


def square(cx, cy, h=1.0):
    return validate_polygon([(cx + h, cy + h), (cx - h, cy + h), (cx - h, cy - h), (cx + h, cy - h)])


def squares(*centers):
    return Configuration(tuple(square(cx, cy) for cx, cy in centers))


@pytest.fixture
def three_squares():
    return squares((0, 0), (4, 0), (2, 3))


@pytest.fixture
def rng():
    return np.random.default_rng(20051)


def random_polygon(rng, center=(0.0, 0.0), k=None, radius=None):
    """Polygon on a random circle; independent of the package generator."""
    k = k or int(rng.integers(3, 13))
    radius = radius or rng.uniform(0.1, 2.0)
    while True:
        ang = np.sort(rng.uniform(0, 2 * math.pi, k))
        if np.min(np.diff(np.r_[ang, ang[0] + 2 * math.pi])) > 1e-3:
            break
    pts = np.column_stack([np.cos(ang), np.sin(ang)]) * radius + np.asarray(center)
    return validate_polygon(pts.tolist())
