import random

import pytest

from trisectkit.diagram import standard_relative_diagram
from trisectkit.moves import Handleslide, Transvection
from trisectkit.packs import bundled_examples
from trisectkit.params import is_admissible
from trisectkit.surface import H1Class, SurfaceModel

FAMILY_NAMES = ("alpha", "beta", "gamma")


@pytest.fixture(scope="session")
def examples():
    return bundled_examples()


@pytest.fixture(scope="session")
def d1(examples):
    return examples.d1


@pytest.fixture(scope="session")
def d2(examples):
    return examples.d2


@pytest.fixture(scope="session")
def models(examples):
    return examples.models


def random_handle_class(rng: random.Random, surface: SurfaceModel, spread: int = 2) -> H1Class:
    """Primitive class with no boundary component."""
    while True:
        coords = [rng.randint(-spread, spread) for _ in range(2 * surface.genus)]
        x = H1Class(tuple(coords) + (0,) * surface.boundary_dimension)
        if x.is_primitive():
            return x


def random_full_class(rng: random.Random, surface: SurfaceModel, spread: int = 2) -> H1Class:
    """Primitive class that may have boundary components."""
    while True:
        x = H1Class(tuple(rng.randint(-spread, spread) for _ in range(surface.dimension)))
        if x.is_primitive():
            return x

def random_moves(rng: random.Random, diagram, length: int) -> list:
    moves = []
    n = diagram.curve_count
    for _ in range(length):
        if n >= 2 and rng.random() < 0.6:
            i, j = rng.sample(range(n), 2)
            moves.append(Handleslide(rng.choice(FAMILY_NAMES), i, j, rng.choice((1, -1))))
        elif diagram.surface.genus > 0:
            moves.append(Transvection(random_handle_class(rng, diagram.surface), rng.choice((-1, 1, 2))))
    return moves


def random_slides(rng: random.Random, diagram, length: int) -> list[Handleslide]:
    n = diagram.curve_count
    if n < 2:
        return []
    return [
        Handleslide(rng.choice(FAMILY_NAMES), *rng.sample(range(n), 2), rng.choice((1, -1)))
        for _ in range(length)
    ]


def capped_move(move, genus: int):
    if isinstance(move, Transvection):
        return Transvection(H1Class(move.twist.coords[: 2 * genus]), move.power)
    return move


def random_relative_standard(rng: random.Random, max_genus: int = 3):
    while True:
        g = rng.randint(1, max_genus)
        b = rng.randint(1, 3)
        k = rng.randint(0, g + b - 1)
        if is_admissible(g, k, 0, b):
            return standard_relative_diagram(g, k, 0, b)
