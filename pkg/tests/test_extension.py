"""Left-center extensions: quotient, section, and the defect 2-cocycle."""

from fractions import Fraction

import pytest

from leibrack.algebra import LeibnizAlgebra
from leibrack.corpus import CORPUS_NAMES
from leibrack.extension import (
    build_extension,
    cocycle_identity_violations,
    projection_morphism_violations,
    reconstruction_violations,
)

from helpers import make_table

CENTER_DIMS = {
    "abelian3": 3,
    "leib2": 1,
    "hs1": 1,
    "heisenberg": 1,
    "freenil3": 2,
    "sl2": 0,
}


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_quotient_is_lie(corpus, name):
    ext = build_extension(corpus[name])
    assert ext.center.dim == CENTER_DIMS[name]
    assert ext.quotient.dim == corpus[name].dim - CENTER_DIMS[name]
    assert ext.quotient.is_lie()


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_cocycle_identity_exact(corpus, name):
    assert cocycle_identity_violations(build_extension(corpus[name])) == []


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_reconstruction_exact(corpus, name):
    assert reconstruction_violations(build_extension(corpus[name])) == []


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_projection_is_bracket_morphism(corpus, name):
    assert projection_morphism_violations(build_extension(corpus[name])) == []


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_projection_inverts_section(corpus, name):
    ext = build_extension(corpus[name])
    for q in ext.quotient.basis_elements():
        assert ext.project(ext.section(q)) == q


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_omega_lands_in_center(corpus, name):
    ext = build_extension(corpus[name])
    for x in ext.quotient.basis_elements():
        for y in ext.quotient.basis_elements():
            assert ext.center.contains(ext.omega(x, y))


def test_leib2_omega_table(leib2):
    ext = build_extension(leib2)
    x = ext.quotient.basis_element(0)
    e2 = leib2.basis_element(1)
    # section defect: s([x, x]) - [s(x), s(x)] = 0 - e2
    assert ext.omega(x, x) == -e2
    assert ext.extension_omega(x, x) == e2


def test_heisenberg_omega_table(heisenberg):
    ext = build_extension(heisenberg)
    x, y = ext.quotient.basis_elements()
    e3 = heisenberg.basis_element(2)
    assert ext.omega(x, y) == -e3
    assert ext.omega(y, x) == e3
    assert ext.omega(x, x).is_zero()


def test_omega_is_bilinear(freenil3):
    ext = build_extension(freenil3)
    x, y, z = ext.quotient.basis_elements()
    lhs = ext.omega(2 * x + y, z - Fraction(1, 3) * y)
    rhs = (
        2 * ext.omega(x, z)
        - Fraction(2, 3) * ext.omega(x, y)
        + ext.omega(y, z)
        - Fraction(1, 3) * ext.omega(y, y)
    )
    assert lhs == rhs


def test_trivial_center_gives_back_the_algebra(sl2):
    ext = build_extension(sl2)
    assert ext.quotient.dim == 3
    assert ext.quotient.table == sl2.table
    # projection and section are mutually inverse identities here
    for i, x in enumerate(sl2.basis_elements()):
        assert ext.project(x).coords == ext.quotient.basis_element(i).coords
        assert ext.section(ext.quotient.basis_element(i)) == x
    for x in ext.quotient.basis_elements():
        for y in ext.quotient.basis_elements():
            assert ext.omega(x, y).is_zero()


def test_full_center_gives_zero_quotient(abelian3):
    ext = build_extension(abelian3)
    assert ext.center.dim == 3
    assert ext.quotient.dim == 0
    assert cocycle_identity_violations(ext) == []
    assert reconstruction_violations(ext) == []


def test_hs1_nilpotentized_extension(hs1n):
    ext = build_extension(hs1n)
    assert ext.center.dim == 2
    assert ext.quotient.dim == 1
    g = ext.quotient.basis_element(0)
    # the quotient is abelian and the section is a morphism, so omega vanishes
    assert ext.omega(g, g).is_zero()


def test_quotient_basis_names_are_marked(heisenberg):
    ext = build_extension(heisenberg)
    for label in ext.quotient.basis:
        assert label.endswith("~")


def test_build_extension_requires_leibniz():
    broken = LeibnizAlgebra(make_table(1, {(0, 0): {0: 1}}))
    with pytest.raises(ValueError):
        build_extension(broken)
