"""Deterministic rational samplers used by the property suites.

All sampling is driven by ``random.Random(seed)`` so that reports are
reproducible byte for byte.  Coordinates are small rationals: numerators in
[-3, 3], denominators in {1, 2}.
"""

import random
from fractions import Fraction

from .linalg import EXACT, det


def rational_scalar(rng):
    return Fraction(rng.randint(-3, 3), rng.choice((1, 2)))


def rational_vector(rng, dim):
    return [rational_scalar(rng) for _ in range(dim)]


def sample_elements(algebra, count, seed, mode=EXACT, scale=Fraction(1)):
    """``count`` algebra elements with coordinates scaled by ``scale``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        coords = [scale * c for c in rational_vector(rng, algebra.dim)]
        element = algebra.element(coords)
        out.append(element.to_float() if mode == "float" else element)
    return out


def sample_triples(algebra, count, seed, mode=EXACT, scale=Fraction(1)):
    flat = sample_elements(algebra, 3 * count, seed, mode, scale)
    return [tuple(flat[3 * t : 3 * t + 3]) for t in range(count)]


def sample_observables(algebra, count, seed, max_degree=3):
    """Random sparse polynomial observables of bounded degree."""
    from .observables import PolyObservable

    rng = random.Random(seed)
    n = algebra.dim
    out = []
    for _ in range(count):
        poly = PolyObservable.zero(n)
        for _ in range(rng.randint(1, 4)):
            exps = [0] * n
            for _ in range(rng.randint(0, max_degree)):
                exps[rng.randrange(n)] += 1
            poly = poly + PolyObservable(
                n, {tuple(exps): Fraction(rng.randint(-3, 3), rng.choice((1, 2)))}
            )
        out.append(poly)
    return out


def sample_invertible_matrix(rng, n):
    """A random rational matrix redrawn until it is invertible."""
    while True:
        m = [rational_vector(rng, n) for _ in range(n)]
        if det(m) != 0:
            return m


def sample_vectors(rng, dim, count):
    return [rational_vector(rng, dim) for _ in range(count)]
