"""Shared builders for randomized test inputs.

Every helper is driven by an explicit random.Random instance so both the
hypothesis suites (which feed a drawn seed) and the acceptance property
loops (which use one fixed seed) share the same generators and stay
reproducible.
"""

from __future__ import annotations

import random
from pathlib import Path

from wittcalc import GWClass, Q, QForm

FIXTURES = Path(__file__).parent / "fixtures"

Matrix = list[list[int]]


def load_lines_counts() -> dict[int, int]:
    counts: dict[int, int] = {}
    for line in (FIXTURES / "lines_counts.txt").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        d, n = line.split()
        counts[int(d)] = int(n)
    return counts


def random_nonzero(rng: random.Random, bound: int = 9) -> int:
    n = 0
    while n == 0:
        n = rng.randint(-bound, bound)
    return n


def random_form(rng: random.Random, max_rank: int = 4) -> QForm:
    n = rng.randint(1, max_rank)
    return QForm.make(Q, [random_nonzero(rng) for _ in range(n)])


def random_gw(rng: random.Random, max_rank: int = 3) -> GWClass:
    plus = [random_nonzero(rng) for _ in range(rng.randint(0, max_rank))]
    minus = [random_nonzero(rng) for _ in range(rng.randint(0, max_rank))]
    return GWClass.make(Q, plus, minus)


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> Matrix:
    """Product of elementary integer moves: det is exactly +-1."""
    m = identity(n)
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        for k in range(n):
            m[i][k] += c * m[j][k]
    if n > 1 and rng.random() < 0.5:
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i != j:
            m[i], m[j] = m[j], m[i]
    if rng.random() < 0.5:
        i = rng.randrange(n)
        m[i] = [-x for x in m[i]]
    return m


def transpose(m: Matrix) -> Matrix:
    return [list(row) for row in zip(*m)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def congruent(p: Matrix, g: Matrix) -> Matrix:
    return mat_mul(transpose(p), mat_mul(g, p))


def random_symmetric_nondegenerate(rng: random.Random, n: int) -> Matrix:
    """P^T D P with nonzero diagonal D and unimodular P: symmetric and
    nondegenerate by construction."""
    d = [[0] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = random_nonzero(rng, 5)
    return congruent(random_unimodular(rng, n), d)
