from fractions import Fraction
from pathlib import Path

import pytest

from morseideals import parse_ideal, random_squarefree_ideal

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture_ideal(name):
    return parse_ideal((FIXTURES / name).read_text())


@pytest.fixture(scope="session")
def run4():
    return load_fixture_ideal("run4.ideal")


@pytest.fixture(scope="session")
def tri():
    return load_fixture_ideal("tri.ideal")


@pytest.fixture(scope="session")
def ex56():
    return load_fixture_ideal("ex56.ideal")


def corpus_ideals(count=100):
    """Seeded random squarefree corpus: up to 6 variables, up to 6 generators."""
    out = []
    for seed in range(count):
        num_vars = 3 + seed % 4
        num_gens = 2 + seed % 5
        out.append(random_squarefree_ideal(seed, num_vars, num_gens))
    return out


@pytest.fixture(scope="session")
def corpus():
    return corpus_ideals()


def naive_rank(matrix):
    """Plain Gaussian elimination over Fraction; oracle for exact_rank."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col]
        rows[rank] = [x / inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank
