"""Randomized agreement between the Groebner engine and the independent
linear-algebra oracle: membership and ideal equality over 100 seeded
random homogeneous ideals in up to 3 variables, generators of degree
at most 3.
"""

import random

from cancelkit.fields import PrimeField
from cancelkit.ideals import Ideal
from cancelkit.ring import Ring

from oracle import homogeneous_member, ideals_equal_upto_degree, \
    monomials_of_degree

FIELD = PrimeField(32003)
NAMES = ["x", "y", "z"]


def _random_homogeneous(ring, rng, degree):
    """Random nonzero homogeneous polynomial of the exact degree."""
    while True:
        pairs = []
        for exps in monomials_of_degree(ring.n, degree):
            if rng.random() < 0.6:
                pairs.append((exps, rng.randrange(FIELD.p)))
        f = ring.from_terms(pairs)
        if not f.is_zero():
            return f


def _random_instance(seed):
    rng = random.Random(f"agree-{seed}")
    nvars = rng.randint(1, 3)
    ring = Ring(FIELD, NAMES[:nvars])
    gens = [_random_homogeneous(ring, rng, rng.randint(1, 3))
            for _ in range(rng.randint(1, 3))]
    return ring, rng, gens


def _member_candidates(ring, rng, gens):
    """A guaranteed member, plus a random homogeneous polynomial of the
    same degree (member or not, the oracle decides)."""
    d = max(g.degree() for g in gens) + rng.randint(0, 1)
    member = ring.zero()
    for g in gens:
        shift = d - g.degree()
        if shift < 0:
            continue
        member = member + g * _random_homogeneous(ring, rng, shift)
    probe = _random_homogeneous(ring, rng, d)
    return [f for f in (member, probe) if not f.is_zero()]


def _recombined(ring, rng, gens):
    """An equal ideal: add monomial multiples of other generators of
    lower or equal degree (a homogeneity-preserving row operation)."""
    out = list(gens)
    for i, g in enumerate(out):
        for j, h in enumerate(gens):
            if i == j or h.degree() > g.degree():
                continue
            shift = g.degree() - h.degree()
            mult = ring.monomial(
                rng.choice(monomials_of_degree(ring.n, shift)),
                rng.randrange(FIELD.p))
            out[i] = out[i] + h * mult
            break
    return [f for f in out if not f.is_zero()]


def test_membership_matches_oracle_on_100_random_ideals():
    checked = 0
    for seed in range(100):
        ring, rng, gens = _random_instance(seed)
        I = Ideal(ring, gens)
        for f in _member_candidates(ring, rng, gens):
            assert I.contains_poly(f) == homogeneous_member(f, gens), \
                (seed, str(f))
        checked += 1
    assert checked == 100


def test_equality_matches_oracle_on_100_random_ideals():
    checked = 0
    for seed in range(100):
        ring, rng, gens = _random_instance(seed)
        I = Ideal(ring, gens)
        same = _recombined(ring, rng, gens)
        # a likely-different ideal: drop a generator or perturb one
        if len(gens) > 1 and rng.random() < 0.5:
            other = gens[:-1]
        else:
            other = gens[:-1] + [_random_homogeneous(
                ring, rng, gens[-1].degree())]
        for cand in (same, other):
            J = Ideal(ring, cand)
            engine = I.contains(J) and J.contains(I)
            bound = max(f.degree() for f in gens + cand)
            oracle = ideals_equal_upto_degree(gens, cand, bound)
            assert engine == oracle, (seed, [str(f) for f in cand])
        assert I.contains(Ideal(ring, same)) and \
            Ideal(ring, same).contains(I)
        checked += 1
    assert checked == 100
