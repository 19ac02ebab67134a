"""Random test complexes: sums of known shapes hidden behind a change of basis."""

import random
from collections import Counter

from .complex import Bidegree
from .linalg import Mat
from .scalar import ONE, ZERO, Scalar
from .zigzag import Shape, change_basis, identity_decomposition, square


def random_scalar(rng, size=3, gaussian=True):
    re = rng.randint(-size, size)
    im = rng.randint(-size, size) if gaussian and rng.random() < 0.5 else 0
    return Scalar(re, im)


def random_invertible(rng, n):
    """A random matrix of the form P L U with unit-free nonzero diagonals."""
    if not n:
        return Mat.zero(0, 0)
    lower = [[ZERO] * n for _ in range(n)]
    upper = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i > j:
                lower[i][j] = random_scalar(rng)
            elif i < j:
                upper[i][j] = random_scalar(rng)
        lower[i][i] = ONE
        d = ZERO
        while not d:
            d = random_scalar(rng, 2)
        upper[i][i] = d
    perm = list(range(n))
    rng.shuffle(perm)
    P = Mat.from_rows([[ONE if perm[i] == j else ZERO for j in range(n)] for i in range(n)], n)
    return P @ Mat.from_rows(lower, n) @ Mat.from_rows(upper, n)


def _zigzag_from_path(start, first, length):
    """Shape of the zigzag that starts at ``start`` and first steps in direction ``first``."""
    word = "".join("hv"[(i + (first == "v")) % 2] for i in range(length - 1))
    anchor = Bidegree(start[0], start[1] - 1) if word.startswith("v") else Bidegree(*start)
    return Shape("zigzag", anchor, word)


def random_shape(rng, bounds, max_length=5):
    p0, p1, q0, q1 = bounds
    while True:
        if rng.random() < 0.2:
            s = square(rng.randint(p0, p1), rng.randint(q0, q1))
        else:
            start = (rng.randint(p0, p1), rng.randint(q0, q1))
            s = _zigzag_from_path(start, rng.choice("hv"), rng.randint(1, max_length))
        if all(p0 <= p <= p1 and q0 <= q <= q1 for p, q in s.cells()):
            return s


def random_shapes(rng, bounds=(0, 3, 0, 3), count=None, max_dim=6):
    """A random list of shapes, at most ``max_dim`` components per bidegree."""
    if count is None:
        count = rng.randint(1, 14)
    used = Counter()
    out = []
    for _ in range(count * 4):
        if len(out) == count:
            break
        s = random_shape(rng, bounds)
        cells = s.cells()
        if any(used[c] >= max_dim for c in cells):
            continue
        used.update(cells)
        out.append(s)
    return out


def scrambled(shapes, rng):
    """The direct sum of ``shapes`` after a random invertible change of basis."""
    model, _ = identity_decomposition(shapes)
    bases = {pq: random_invertible(rng, n) for pq, n in model.dims.items()}
    return change_basis(model, bases)


def random_complex(seed, bounds=(0, 3, 0, 3)):
    """(shapes, complex) for a given seed."""
    rng = random.Random(seed)
    shapes = random_shapes(rng, bounds)
    return shapes, scrambled(shapes, rng)


__all__ = ["random_complex", "random_invertible", "random_shape", "random_shapes", "scrambled"]
