import random

import pytest

from girthmax.btu import Btu
from girthmax.perm import Permutation


def random_disjoint_permutation(rng: random.Random, m: int, forbidden: list[set[int]]) -> Permutation:
    """A uniform-ish random permutation avoiding forbidden[i] at each i.

    Randomized greedy with restarts; fine for the small m the tests use.
    """
    for _ in range(10_000):
        free = list(range(m))
        rng.shuffle(free)
        image = [-1] * m
        used = set()
        ok = True
        for i in range(m):
            choices = [v for v in free if v not in used and v not in forbidden[i]]
            if not choices:
                ok = False
                break
            v = rng.choice(choices)
            image[i] = v
            used.add(v)
        if ok:
            return Permutation(image)
    raise RuntimeError(f"could not draw a disjoint permutation for m={m}")


def random_btu(rng: random.Random, m: int, r: int) -> Btu:
    """A random (m, r) BTU: r successively-disjoint random permutations."""
    perms: list[Permutation] = []
    forbidden: list[set[int]] = [set() for _ in range(m)]
    for _ in range(r):
        p = random_disjoint_permutation(rng, m, forbidden)
        perms.append(p)
        for i, v in enumerate(p.image):
            forbidden[i].add(v)
    return Btu(perms)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0x5EED)
