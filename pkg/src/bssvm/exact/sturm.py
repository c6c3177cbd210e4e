"""Sturm chains and exact real-root isolation for rational polynomials.

The chain is the classical remainder sequence: p0 = p, p1 = p', and
p_{k+1} = -(p_{k-1} mod p_k) until the remainder vanishes.  The number of
distinct real roots of a squarefree p in the open interval (a, b) equals
V(a) - V(b), where V(t) counts sign changes along the chain evaluated at t.
Root counting always runs on the squarefree part so repeated roots are
counted once.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import BssError
from .unipoly import UniPoly


def squarefree_part(p: UniPoly) -> UniPoly:
    """Monic squarefree polynomial with the same real roots as p."""
    if p.is_zero():
        raise BssError("zero polynomial has no squarefree part")
    if p.degree == 0:
        return UniPoly.constant(1)
    g = p.gcd(p.derivative())
    if g.degree == 0:
        return p.monic()
    return (p // g).monic()


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def sign_variations(chain: list[UniPoly], t: Fraction) -> int:
    signs = []
    for q in chain:
        v = q.eval_fraction(t)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_open(p: UniPoly, a: Fraction, b: Fraction,
                     chain: list[UniPoly] | None = None) -> int:
    """Distinct real roots of p in the open interval (a, b).

    The endpoints themselves are not counted even when p vanishes there.
    """
    if a >= b:
        raise BssError("interval endpoints out of order")
    sf = squarefree_part(p)
    if chain is None:
        chain = sturm_chain(sf)
    n = sign_variations(chain, a) - sign_variations(chain, b)
    # Sturm counts roots in (a, b]; drop b if it is a root.
    if sf.eval_fraction(b) == 0:
        n -= 1
    return n


def cauchy_bound(p: UniPoly) -> Fraction:
    """Bound B with every real root of p inside (-B, B)."""
    if p.is_zero() or p.degree < 1:
        return Fraction(1)
    lc = abs(p.leading_coeff())
    m = max(abs(c) for c in p.coeffs[:-1])
    return Fraction(1) + m / lc


def sturm_isolate(p: UniPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open rational intervals, one per distinct real root of p.

    Bisection starts from the Cauchy bound; when a bisection midpoint is
    itself a root it is dodged by a small shift so every root stays interior
    to its interval.
    """
    if p.is_zero():
        raise BssError("cannot isolate roots of the zero polynomial")
    sf = squarefree_part(p)
    if sf.degree < 1:
        return []
    chain = sturm_chain(sf)
    bound = cauchy_bound(sf)
    lo, hi = -bound, bound
    # Make sure the outer endpoints are not roots (the bound is strict, but
    # stay defensive for degree shifts under squarefree reduction).
    while sf.eval_fraction(lo) == 0:
        lo -= 1
    while sf.eval_fraction(hi) == 0:
        hi += 1

    out: list[tuple[Fraction, Fraction]] = []

    def recurse(a: Fraction, b: Fraction, va: int, vb: int) -> None:
        n = va - vb
        if n == 0:
            return
        if n == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        shift = (b - a) / 4
        while sf.eval_fraction(mid) == 0:
            mid += shift
            shift /= 2
        vm = sign_variations(chain, mid)
        recurse(a, mid, va, vm)
        recurse(mid, b, vm, vb)

    recurse(lo, hi, sign_variations(chain, lo), sign_variations(chain, hi))
    out.sort()
    return out


def refine_interval(p: UniPoly, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """One bisection step on an isolating interval of squarefree p.

    Requires exactly one root in (a, b); keeps the half that still holds it.
    """
    mid = (a + b) / 2
    vm = p.eval_fraction(mid)
    if vm == 0:
        # Nudge off the root; the root stays strictly inside one half.
        mid = (a + mid) / 2
        vm = p.eval_fraction(mid)
        if vm == 0:
            raise BssError("interval does not isolate a single root")
    va = p.eval_fraction(a)
    if va == 0:
        raise BssError("isolating interval endpoint is a root")
    if (va > 0) != (vm > 0):
        return (a, mid)
    return (mid, b)
