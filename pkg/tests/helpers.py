"""Shared builders for the test suite."""

from fractions import Fraction

from leibrack.algebra import LeibnizAlgebra, hemi_semi_direct


def make_table(dim, entries):
    """Build a dense structure-constant table from a sparse description.

    ``entries`` maps a 0-based pair ``(i, j)`` to a dict ``{k: value}`` giving
    the coordinates of the bracket of the i-th and j-th basis vectors.
    """
    table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), comps in entries.items():
        for k, value in comps.items():
            table[i][j][k] = Fraction(value)
    return table


def build_hs1_nilpotentized():
    """Nilpotent cousin of the hs1 corpus algebra.

    A one-dimensional abelian Lie algebra acts on a two-dimensional module
    through the nilpotent Jordan block, and the hemi-semi-direct product
    glues them into a three-dimensional Leibniz algebra with the single
    bracket [e3, e2] = e1.
    """
    line = LeibnizAlgebra(make_table(1, {}), basis=("g1",), name="line")
    action = [[[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]]]
    return hemi_semi_direct(line, action, 2, name="hs1-nilpotentized")


def sl2_module_action():
    """The defining action of sl2 on column vectors of length two."""
    rho_h = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(-1)]]
    rho_e = [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]]
    rho_f = [[Fraction(0), Fraction(0)], [Fraction(1), Fraction(0)]]
    return [rho_h, rho_e, rho_f]
