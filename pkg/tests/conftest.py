import numpy as np
import pytest

from pufir.laurent import LaurentPoly


def circle_points(count, offset=0.37):
    return [np.exp(2j * np.pi * (t + offset) / count) for t in range(count)]


def random_poly(rng, p, m, n, q=0):
    coeffs = [rng.normal(size=(p, m)) + 1j * rng.normal(size=(p, m))
              for _ in range(n)]
    return LaurentPoly(q, coeffs)


def random_unit(rng, k):
    v = rng.normal(size=k) + 1j * rng.normal(size=k)
    return v / np.linalg.norm(v)


def max_eval_diff(F, G, count=16):
    return max(float(np.max(np.abs(F.eval(z) - G.eval(z))))
               for z in circle_points(count))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
