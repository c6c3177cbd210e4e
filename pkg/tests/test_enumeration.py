"""Fixed enumeration orders for Q, Q[X], and Q[Y1,Y2]."""

import itertools
from fractions import Fraction as F

import pytest

from bssvm.enumeration import (
    bipoly_at,
    bipolys,
    first_bipoly_vanishing,
    first_unipoly_vanishing,
    rational_at,
    rationals,
    unipoly_at,
    unipolys,
)
from bssvm.exact import MultiPoly, UniPoly, algebraic_equal, nth_root_field


def test_rational_prefix_is_frozen():
    want = [F(0), F(1), F(-1), F(1, 2), F(-1, 2), F(2), F(-2)]
    assert [rational_at(n) for n in range(7)] == want


def test_rational_negation_pairing():
    # each nonzero value is immediately followed by its negation
    for n in range(1, 400, 2):
        assert rational_at(n + 1) == -rational_at(n)
        assert rational_at(n) > 0


def test_rational_injective_prefix():
    seen = [rational_at(n) for n in range(501)]
    assert len(set(seen)) == 501


def test_rational_height_order():
    # zig-zag by height |p| + q, ties by increasing numerator
    def height(x):
        return abs(x.numerator) + x.denominator

    values = [rational_at(n) for n in range(1, 401, 2)]  # positive representatives
    hs = [height(v) for v in values]
    assert hs == sorted(hs)
    for a, b in zip(values, values[1:]):
        if height(a) == height(b):
            assert a.numerator < b.numerator


def test_rational_hits_all_small_heights():
    want = {F(0)}
    for q in range(1, 10):
        for p in range(-9, 10):
            x = F(p, q)
            if abs(x.numerator) + x.denominator <= 10:
                want.add(x)
    got = {rational_at(n) for n in range(600)}
    assert want <= got


def test_rationals_iterator_matches_indexing():
    for n, x in zip(range(120), rationals()):
        assert x == rational_at(n)


def test_unipoly_enumeration_is_injective_and_total():
    seen = {}
    for n in range(400):
        p = unipoly_at(n)
        assert not p.is_zero()  # zero vanishes everywhere; never enumerated
        assert p.coeffs not in seen, (n, seen[p.coeffs])
        seen[p.coeffs] = n
    assert UniPoly([F(1)]).coeffs in seen
    assert UniPoly([F(0), F(1)]).coeffs in seen
    assert UniPoly([F(-1, 2)]).coeffs in seen


def test_unipoly_leading_coefficient_nonzero():
    for n in range(1, 300):
        p = unipoly_at(n)
        if p.degree >= 1:
            assert p.coeffs[-1] != 0


def test_unipolys_iterator_matches_indexing():
    for n, p in zip(range(80), unipolys()):
        assert p == unipoly_at(n)


def test_bipoly_enumeration_nonzero_and_total():
    seen = set()
    for n in range(300):
        p = bipoly_at(n)
        assert not p.is_zero()
        seen.add(frozenset(p.terms.items()) if hasattr(p, "terms") else str(p))
    y1 = MultiPoly.var(0, 2)
    y2 = MultiPoly.var(1, 2)
    targets = [y1, y2, y1 - y2, MultiPoly.constant(1, 2)]
    reachable = [bipoly_at(n) for n in range(3000)]
    for t in targets:
        assert any(p == t for p in reachable), str(t)


def test_bipolys_iterator_matches_indexing():
    for n, p in zip(range(60), bipolys()):
        assert p == bipoly_at(n)


def test_first_unipoly_vanishing_at_half():
    n, p = first_unipoly_vanishing(F(1, 2))
    assert p.eval_fraction(F(1, 2)) == 0 and not p.is_zero()
    # nothing earlier vanishes
    for k in range(n):
        q = unipoly_at(k)
        assert q.is_zero() or q.eval_fraction(F(1, 2)) != 0


def test_first_unipoly_vanishing_at_sqrt2():
    _, sqrt2 = nth_root_field(2, 2)
    n, p = first_unipoly_vanishing(sqrt2)
    assert algebraic_equal(p.eval(sqrt2), F(0))
    assert p.degree >= 2  # no rational polynomial of degree <= 1 kills sqrt2


def test_first_bipoly_vanishing_on_dependent_pair():
    n, p = first_bipoly_vanishing(F(2), F(3))
    assert algebraic_equal(p.eval((F(2), F(3))), F(0))
    for k in range(n):
        q = bipoly_at(k)
        assert not algebraic_equal(q.eval((F(2), F(3))), F(0))
