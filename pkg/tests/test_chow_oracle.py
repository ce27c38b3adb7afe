"""Engine normal forms checked against the brute-force substitution oracle.

The oracle reduces by literal substitution in shuffled order with its own
arithmetic, so these tests guard the engine's reduction strategy, not just
the relation tables.
"""

import random

import pytest

from delpezzo import (
    P1,
    P2,
    P1xP1,
    Fe,
    P1xP2,
    base_space,
    make_tower,
    chern_tower,
    integrate,
)
from substitution_oracle import oracle_reduce, oracle_mul, oracle_integrate

ORACLE_SEEDS = (0, 17)


def build_zoo():
    B2 = base_space(P2())
    h = B2.gen("h")
    Bq = base_space(P1xP1())
    f1, f2 = Bq.gen("f1"), Bq.gen("f2")
    Bf1 = base_space(Fe(1))
    Bf2 = base_space(Fe(2))
    Bm = base_space(P1xP2())
    p, hm = Bm.gen("p"), Bm.gen("h")
    return [
        make_tower(P1(), [0, 0, 0, 0]),
        make_tower(P1(), [-1, 0, 0, 1]),
        make_tower(P1(), [0, 1, 1, 1]),
        make_tower(P1(), [2, 3]),
        make_tower(P2(), [0, h]),
        make_tower(P2(), [2 * h, 0, 0, 0]),
        make_tower(P1xP1(), [f1 + 2 * f2, 0]),
        make_tower(Fe(2), [Bf2.gen("C0") + 3 * Bf2.gen("f"), 0, 0]),
        make_tower(P1xP2(), [p + hm, 0, 0, 0]),
        chern_tower(P1xP1(), 2, [2 * f1 + 2 * f2, 5 * Bq.point()]),
        chern_tower(Fe(1), 3, [2 * Bf1.gen("C0") + 3 * Bf1.gen("f"), 4 * Bf1.point()]),
        base_space(P2()),
        base_space(Fe(3)),
        base_space(P1xP2()),
    ]


ZOO = build_zoo()


def random_monomial(rng, nvars, degree):
    expo = [0] * nvars
    for _ in range(degree):
        expo[rng.randrange(nvars)] += 1
    return tuple(expo)


@pytest.mark.parametrize("idx", range(len(ZOO)), ids=[repr(a) for a in ZOO])
def test_integrate_matches_oracle(idx):
    A = ZOO[idx]
    for j in range(100):
        rng = random.Random(10_000 * idx + j)
        mono = random_monomial(rng, A.nvars, A.dim)
        coeff = rng.choice([c for c in range(-5, 6) if c != 0])
        x = A.from_terms({mono: coeff})
        got = integrate(x)
        for seed in ORACLE_SEEDS:
            assert got == oracle_integrate(A, [(mono, coeff)], seed=seed + j)


@pytest.mark.parametrize("idx", range(len(ZOO)), ids=[repr(a) for a in ZOO])
def test_normal_form_matches_oracle(idx):
    A = ZOO[idx]
    for j in range(25):
        rng = random.Random(77_000 * (idx + 1) + j)
        degree = rng.randrange(A.dim + 2)  # also degrees above dim (reduce to 0)
        raw = []
        for _ in range(rng.randrange(1, 6)):
            mono = random_monomial(rng, A.nvars, degree)
            raw.append((mono, rng.randrange(-9, 10)))
        as_dict = {}
        for mono, c in raw:
            as_dict[mono] = as_dict.get(mono, 0) + c
        engine = A.from_terms(as_dict).terms
        for seed in ORACLE_SEEDS:
            assert engine == oracle_reduce(A, raw, seed=seed + 31 * j)


@pytest.mark.parametrize(
    "idx",
    [i for i, a in enumerate(ZOO) if a.is_tower],
    ids=[repr(a) for a in ZOO if a.is_tower],
)
def test_products_match_oracle(idx):
    A = ZOO[idx]
    names = A.gen_names
    for j in range(30):
        rng = random.Random(5_000_000 + 900 * idx + j)
        ca = [rng.randrange(-3, 4) for _ in names]
        cb = [rng.randrange(-3, 4) for _ in names]
        x = A.zero()
        y = A.zero()
        for name, a, b in zip(names, ca, cb):
            x = x + a * A.gen(name)
            y = y + b * A.gen(name)
        raw_a = [(e, c) for e, c in x.terms.items()]
        raw_b = [(e, c) for e, c in y.terms.items()]
        prod = (x * y).terms
        for seed in ORACLE_SEEDS:
            assert prod == oracle_mul(A, raw_a, raw_b, seed=seed + j)


def test_oracle_disagrees_with_a_wrong_relation():
    # sanity check that the oracle has teeth: mutate the Grothendieck rule
    # via a tower with a wrong Chern class and observe a different integral
    B2 = base_space(P2())
    h = B2.gen("h")
    good = make_tower(P2(), [2 * h, h, 0, 0])  # c1 = 3h, c2 = 2h^2
    bad = chern_tower(P2(), 4, [3 * h, B2.zero()])  # same c1, c2 dropped
    mono = (0, 5)  # z^5 over the generators (h, z)
    assert oracle_integrate(good, [(mono, 1)]) == 7
    assert oracle_integrate(bad, [(mono, 1)]) == 9
