import numpy as np

from hyperball.geometry import BallPoint


def random_ball_point(rng: np.random.Generator, n: int, rmax: float = 0.6) -> BallPoint:
    """Uniform-direction point with radius in (0.05, rmax)."""
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    v /= np.linalg.norm(v)
    r = 0.05 + (rmax - 0.05) * rng.random()
    return BallPoint(r * v)
