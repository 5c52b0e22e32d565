import random
from fractions import Fraction

import pytest

from kochdual import build_arrangement, dualize_chain, generate_chain
from kochdual.geometry import Line


@pytest.fixture(scope="session")
def chains():
    """Memoized chain generator shared across the whole test run."""
    cache = {}

    def get(s: int):
        if s not in cache:
            cache[s] = generate_chain(s)
        return cache[s]

    return get


@pytest.fixture(scope="session")
def arrangements(chains):
    cache = {}

    def get(s: int):
        if s not in cache:
            cache[s] = build_arrangement(dualize_chain(chains(s)))
        return cache[s]

    return get


def random_simple_lines(rng: random.Random, n: int) -> list[Line]:
    """Random rational lines with distinct slopes and no three concurrent."""
    while True:
        lines = [
            Line(
                Fraction(rng.randint(-40, 40), rng.randint(1, 8)),
                Fraction(rng.randint(-40, 40), rng.randint(1, 8)),
            )
            for _ in range(n)
        ]
        if len({l.slope for l in lines}) != n:
            continue
        points = set()
        simple = True
        for i in range(n):
            for j in range(i + 1, n):
                x = (lines[i].offset - lines[j].offset) / (
                    lines[i].slope - lines[j].slope
                )
                p = (x, lines[i].y_at(x))
                if p in points:
                    simple = False
                    break
                points.add(p)
            if not simple:
                break
        if simple:
            return lines
