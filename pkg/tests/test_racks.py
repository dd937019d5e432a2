"""Exponential racks: pointed, matrix-augmented, and group-conjugation models."""

import math
import random
from fractions import Fraction

import pytest

from leibrack.algebra import LeibnizAlgebra
from leibrack.racks import (
    BassRack,
    HsRack,
    PairElement,
    RhRack,
    bass_product,
    check_rack_axioms,
    coadjoint,
    coadjoint_action_violations,
    conjugation_lemma_violations,
    exp_endo,
    hs_rack_product,
    linear_map_bracket_violations,
    pair_rack_closure_violations,
    rack_morphism_check,
    rh_embed,
    rh_product,
)
from leibrack.observables import Covector
from leibrack.sampling import sample_elements, sample_triples

from helpers import make_table


def test_exp_endo_exact_nilpotent(heisenberg):
    e1 = heisenberg.basis_element(0)
    exp = exp_endo(heisenberg.ad(e1))
    # ad(e1) squares to zero, so the series stops after the linear term
    expected = [
        [Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(1)],
    ]
    assert exp.matrix == tuple(tuple(row) for row in expected)
    assert exp.is_automorphism()


def test_exp_endo_exact_rejects_non_nilpotent(sl2):
    h = sl2.basis_element(0)
    with pytest.raises(ValueError, match="nilpotent"):
        exp_endo(sl2.ad(h))


def test_exp_endo_float_matches_closed_form():
    from leibrack.algebra import Endomorphism

    plane = LeibnizAlgebra(make_table(2, {}))
    # norm 3 forces the scaling-and-squaring path
    rotation = Endomorphism(plane, [[0.0, -3.0], [3.0, 0.0]], mode="float")
    exp = exp_endo(rotation)
    got = exp.matrix
    want = [[math.cos(3), -math.sin(3)], [math.sin(3), math.cos(3)]]
    for i in range(2):
        for j in range(2):
            assert abs(got[i][j] - want[i][j]) < 1e-10


def test_bass_product_worked_examples(heisenberg, leib2, freenil3):
    e1, e2, e3 = heisenberg.basis_elements()
    assert bass_product(e1, e2) == e2 + e3

    a1, a2 = leib2.basis_elements()
    assert bass_product(a1, a1) == a1 + a2
    assert bass_product(a2, a1) == a1

    x1, x2, x12, x112, _ = freenil3.basis_elements()
    assert bass_product(x1, x2) == x2 + x12 + Fraction(1, 2) * x112


def test_bass_rack_unit_laws(heisenberg):
    rack = BassRack(heisenberg)
    unit = rack.unit()
    assert unit.is_zero()
    for x in heisenberg.basis_elements():
        assert rack.product(unit, x) == x
        assert rack.product(x, unit) == unit


def test_bass_rack_exact_requires_nilpotent(sl2):
    with pytest.raises(ValueError, match="nilpotent"):
        BassRack(sl2)


@pytest.mark.parametrize("name", ["leib2", "heisenberg", "freenil3"])
def test_bass_rack_axioms_exact(corpus, name):
    alg = corpus[name]
    rack = BassRack(alg)
    report = check_rack_axioms(rack, sample_triples(alg, 20, seed=5))
    assert report.passed
    assert report.max_residual == 0


def test_bass_rack_axioms_exact_on_hs1n(hs1n):
    rack = BassRack(hs1n)
    report = check_rack_axioms(rack, sample_triples(hs1n, 20, seed=5))
    assert report.passed
    assert report.max_residual == 0


def test_bass_rack_axioms_float_sl2(sl2):
    rack = BassRack(sl2, mode="float")
    triples = sample_triples(sl2, 20, seed=5, mode="float", scale=Fraction(1, 3))
    report = check_rack_axioms(rack, triples, tol=1e-9)
    assert report.passed
    assert report.max_residual <= 1e-9


def test_broken_rack_is_detected(heisenberg):
    rack = BassRack(heisenberg)

    class Projection:
        unit = rack.unit
        distance = staticmethod(rack.distance)

        @staticmethod
        def product(x, y):
            return x

        @staticmethod
        def sample(count, seed, scale=Fraction(1)):
            return rack.sample(count, seed, scale)

    report = check_rack_axioms(Projection, sample_triples(heisenberg, 10, seed=1))
    assert not report.passed
    assert any(v["axiom"] == "left-injectivity" for v in report.violations)


def test_conjugation_lemma_exact(heisenberg, freenil3):
    for alg in (heisenberg, freenil3):
        triples = sample_triples(alg, 15, seed=2)
        pairs = [(a, b) for a, b, _ in triples]
        report = conjugation_lemma_violations(alg, pairs)
        assert report.passed
        assert report.max_residual == 0


def test_coadjoint_worked_example(leib2):
    e1 = leib2.basis_element(0)
    eps2 = Covector(leib2, (Fraction(0), Fraction(1)))
    moved = coadjoint(e1, eps2)
    assert moved.coords == (Fraction(-1), Fraction(1))


def test_coadjoint_left_action_law(heisenberg):
    triples = sample_triples(heisenberg, 12, seed=3)
    pairs = [(a, b) for a, b, _ in triples]
    rng = random.Random(4)
    xis = [
        Covector(heisenberg, [Fraction(rng.randint(-3, 3)) for _ in range(3)])
        for _ in pairs
    ]
    report = coadjoint_action_violations(heisenberg, pairs, xis)
    assert report.passed
    assert report.max_residual == 0


def test_pair_rack_embedding(heisenberg):
    e1 = heisenberg.basis_element(0)
    embedded = rh_embed(e1)
    assert embedded.point == e1
    assert embedded.aut.distance(exp_endo(heisenberg.ad(e1))) == 0


def test_pair_rack_product_covers_bass(heisenberg, freenil3):
    for alg in (heisenberg, freenil3):
        triples = sample_triples(alg, 15, seed=6)
        pairs = [(a, b) for a, b, _ in triples]
        report = pair_rack_closure_violations(alg, pairs)
        assert report.passed
        assert report.max_residual == 0


def test_pair_rack_closure_float_sl2(sl2):
    triples = sample_triples(sl2, 10, seed=6, mode="float", scale=Fraction(1, 3))
    pairs = [(a, b) for a, b, _ in triples]
    report = pair_rack_closure_violations(sl2, pairs, tol=1e-9)
    assert report.passed


def test_rh_rack_axioms(heisenberg):
    rack = RhRack(heisenberg)
    elements = rack.sample(30, seed=7)
    triples = [tuple(elements[i : i + 3]) for i in range(0, 30, 3)]
    report = check_rack_axioms(rack, triples)
    assert report.passed
    assert report.max_residual == 0


def test_rh_product_law(heisenberg):
    x, y = sample_elements(heisenberg, 2, seed=8)
    a, b = rh_embed(x), rh_embed(y)
    out = rh_product(a, b)
    assert out.point == a.aut(y)
    assert out.aut.distance(a.aut @ b.aut @ a.aut.inverse()) == 0


def test_hs_rack_worked_example():
    a = PairElement(
        [Fraction(1), Fraction(0)],
        [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]],
    )
    b = PairElement(
        [Fraction(0), Fraction(1)],
        [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]],
    )
    out = hs_rack_product(a, b)
    assert list(out.vector) == [Fraction(1), Fraction(1)]
    assert [list(row) for row in out.matrix] == [
        [Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1)],
    ]


def test_hs_rack_axioms():
    rack = HsRack(3)
    elements = rack.sample(30, seed=9)
    triples = [tuple(elements[i : i + 3]) for i in range(0, 30, 3)]
    report = check_rack_axioms(rack, triples)
    assert report.passed
    assert report.max_residual == 0


def test_rack_morphism_check_accepts_grading(heisenberg):
    # e1 -> e1, e2 -> 2 e2, e3 -> 2 e3 preserves [e1, e2] = e3
    matrix = [
        [Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(2), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(2)],
    ]
    triples = sample_triples(heisenberg, 10, seed=10)
    pairs = [(a, b) for a, b, _ in triples]
    report = rack_morphism_check(heisenberg, heisenberg, matrix, pairs)
    assert report.passed
    assert linear_map_bracket_violations(heisenberg, heisenberg, matrix) == []


def test_rack_morphism_check_rejects_bad_scaling(heisenberg):
    matrix = [
        [Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(5)],
    ]
    triples = sample_triples(heisenberg, 10, seed=10)
    pairs = [(a, b) for a, b, _ in triples]
    report = rack_morphism_check(heisenberg, heisenberg, matrix, pairs)
    assert not report.passed
