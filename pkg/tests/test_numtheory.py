import math
from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qwalk.numtheory import (DimensionTooLarge, Poly2, Surd, Transcendental,
                             charpoly_int, charpoly_mod2, float_relation_probe,
                             integer_kernel, poly_from_roots_mod2,
                             relation_lattice, square_free_part)


# --- square-free decomposition ---------------------------------------------

def trial_division_square_free(n):
    # independent oracle: factor completely, split exponents
    s, k = 1, 1
    d = 2
    m = n
    factors = {}
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    for p, e in factors.items():
        k *= p ** (e // 2)
        if e % 2:
            s *= p
    return s, k


def test_square_free_examples():
    assert square_free_part(12) == (3, 2)
    assert square_free_part(1) == (1, 1)
    # 3 + 4m at m=1
    assert square_free_part(7) == trial_division_square_free(7) == (7, 1)


@given(st.integers(min_value=1, max_value=100_000))
def test_square_free_matches_oracle(n):
    s, k = square_free_part(n)
    assert (s, k) == trial_division_square_free(n)
    assert s * k * k == n


@given(st.integers(min_value=1, max_value=1000),
       st.integers(min_value=1, max_value=12))
def test_square_free_invariant_under_square_scaling(n, k):
    assert square_free_part(n)[0] == square_free_part(n * k * k)[0]


def test_square_free_rejects_nonpositive():
    with pytest.raises(ValueError):
        square_free_part(0)


# --- surd arithmetic --------------------------------------------------------

def test_surd_cancellation():
    a = Surd.sqrt(3)
    assert (a + (-a)).is_zero()


def test_surd_normalization_numeric_oracle():
    # sqrt(3) + sqrt(12) == 3 sqrt(3), checked against floats at 1e-12
    total = Surd.sqrt(3) + Surd.sqrt(12)
    assert total == Surd.sqrt(3, 3)
    assert abs(float(total) - (math.sqrt(3) + math.sqrt(12))) < 1e-12


def test_surd_star_eigenvalue_m1():
    lam3 = (Surd.sqrt(3) + Surd.sqrt(3 + 4 * 1)) / 2
    assert (Surd.sqrt(3) + Surd.sqrt(7)) * Fraction(1, 2) == lam3


def test_surd_ratio():
    assert Surd.sqrt(12).ratio(Surd.sqrt(3)) == 2
    assert Surd.sqrt(2).ratio(Surd.sqrt(3)) is None
    assert Surd(0).ratio(Surd.sqrt(5)) == 0
    with pytest.raises(ZeroDivisionError):
        Surd(1).ratio(Surd(0))


def test_surd_symbols_are_independent_basis():
    lam = Transcendental("lambda", math.sqrt(2))
    v = Surd.symbol(lam) + Surd.sqrt(2)
    assert not v.is_zero()  # sqrt(2) the radical is not the symbol lambda
    assert v.has_symbols


def test_surd_json_roundtrip():
    lam = Transcendental("lambda", math.sqrt(2))
    v = Surd(Fraction(-3, 2), {12: Fraction(1, 3)}, {lam: Fraction(2)})
    assert Surd.from_json(v.to_json()) == v


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@st.composite
def surds(draw):
    rat = draw(rationals)
    rads = {draw(st.integers(min_value=2, max_value=40)): draw(rationals)
            for _ in range(draw(st.integers(min_value=0, max_value=3)))}
    return Surd(rat, rads)


@given(surds(), surds())
@settings(max_examples=150)
def test_surd_float_consistency(a, b):
    assert abs(float(a + b) - (float(a) + float(b))) <= 1e-10
    assert abs(float(a - b) - (float(a) - float(b))) <= 1e-10


@given(surds(), rationals)
@settings(max_examples=150)
def test_surd_scaling_consistency(a, q):
    assert abs(float(a * q) - float(a) * float(q)) <= 1e-10


@given(surds(), surds())
def test_surd_eq_iff_difference_zero(a, b):
    assert (a == b) == (a - b).is_zero()


# --- relation lattices ------------------------------------------------------

def brute_force_relations(values, bound):
    d = len(values)
    out = []
    for vec in product(range(-bound, bound + 1), repeat=d):
        if any(vec) and sum((v * c for v, c in zip(values, vec)), Surd(0)).is_zero():
            out.append(vec)
    return out


def test_relation_lattice_forced_coefficients():
    lattice = relation_lattice([Surd.sqrt(3), -Surd.sqrt(3), Surd.sqrt(3, 2)])
    assert lattice.rank == 2
    assert lattice.contains([1, 1, 0])
    assert lattice.contains([2, 0, -1])


def test_relation_lattice_rationals():
    lattice = relation_lattice([Surd(1), Surd(2), Surd(3)])
    assert lattice.rank == 2
    # brute-force oracle: small vectors in/out of the kernel
    members = brute_force_relations([Surd(1), Surd(2), Surd(3)], 3)
    assert (2, -1, 0) in members and (3, 0, -1) in members
    for vec in members:
        assert lattice.contains(vec)
    assert not lattice.contains([1, 0, 0])


def test_relation_lattice_star_m1_kills_surd_coefficients():
    m = 1
    values = [Surd.sqrt(m), -Surd.sqrt(m),
              (Surd.sqrt(3) + Surd.sqrt(7)) / 2, (Surd.sqrt(3) - Surd.sqrt(7)) / 2,
              (-Surd.sqrt(3) + Surd.sqrt(7)) / 2, (-Surd.sqrt(3) - Surd.sqrt(7)) / 2]
    lattice = relation_lattice(values)
    assert lattice.rank == 3
    for g in lattice.generators:
        combo = sum((v * c for v, c in zip(values, g)), Surd(0))
        assert combo.is_zero()


@given(st.lists(st.tuples(st.integers(min_value=-5, max_value=5),
                          st.sampled_from([1, 2, 3, 5])),
                min_size=2, max_size=4))
@settings(max_examples=60, deadline=None)
def test_relation_lattice_complete_on_small_inputs(spec):
    values = [Surd.sqrt(d, c) for c, d in spec]
    lattice = relation_lattice(values)
    for vec in brute_force_relations(values, 4):
        assert lattice.contains(vec)


def test_integer_kernel_saturation():
    # kernel of (2 4) is spanned by (2, -1), not (4, -2)
    gens = integer_kernel([[2, 4]], 2)
    assert gens == [[2, -1]] or gens == [[-2, 1]]


# --- float relation probe ---------------------------------------------------

def test_probe_examples():
    assert (2, -1) in float_relation_probe([1.0, 2.0], 3)
    assert (2, -1) in float_relation_probe([math.pi, 2 * math.pi], 3)
    assert float_relation_probe([1.0, math.sqrt(2)], 10) == []


def test_probe_budget():
    with pytest.raises(DimensionTooLarge):
        float_relation_probe([0.0] * 12, 50)
    with pytest.raises(ValueError):
        float_relation_probe([1.0], 51)


# --- GF(2) characteristic polynomials ---------------------------------------

def test_charpoly_against_sympy_oracle():
    import numpy as np
    rng = np.random.default_rng(7)
    for _ in range(15):
        n = int(rng.integers(1, 7))
        a = rng.integers(-5, 6, (n, n))
        mine = charpoly_int(a.tolist())
        t = sympy.symbols("t")
        oracle = sympy.Matrix(a.tolist()).charpoly(t).all_coeffs()
        assert mine == [int(c) for c in oracle]


def test_k7_rule_out_example():
    k7 = [[0 if i == j else 1 for j in range(7)] for i in range(7)]
    # integer charpoly oracle, then reduce: (t-6)(t+1)^6 mod 2 = t (t+1)^6
    t = sympy.symbols("t")
    oracle = sympy.Poly((t - 6) * (t + 1) ** 6, t).all_coeffs()
    mine = charpoly_int(k7)
    assert mine == [int(c) for c in oracle]
    lhs = charpoly_mod2(k7)
    rhs = poly_from_roots_mod2([0, 1, -1, 2, -2, 4, -4])
    # exact expansion oracle for the candidate roots
    expanded = sympy.Poly(sympy.prod([(t - r) for r in [0, 1, -1, 2, -2, 4, -4]]),
                          t).all_coeffs()
    assert rhs == Poly2(reversed([int(c) % 2 for c in expanded]))
    assert lhs != rhs  # the case is ruled out


def test_charpoly_mod2_requires_symmetry():
    with pytest.raises(ValueError):
        charpoly_mod2([[0, 1], [2, 0]])


def test_poly2_block_multiplicativity():
    import numpy as np
    rng = np.random.default_rng(11)
    a = rng.integers(0, 2, (3, 3))
    a = ((a + a.T) % 2).tolist()
    b = rng.integers(0, 2, (4, 4))
    b = ((b + b.T) % 2).tolist()
    blocks = [[0] * 7 for _ in range(7)]
    for i in range(3):
        for j in range(3):
            blocks[i][j] = a[i][j]
    for i in range(4):
        for j in range(4):
            blocks[3 + i][3 + j] = b[i][j]
    assert charpoly_mod2(blocks) == charpoly_mod2(a) * charpoly_mod2(b)
