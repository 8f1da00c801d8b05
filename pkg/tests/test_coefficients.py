import cmath
import random

import pytest
from hypothesis import given, settings, strategies as st

from crystalmds import (CoeffElement, GaussSymbol, entry_factor, g_value,
                        gauss_numeric, h_value, sigma_entry, specialize_n1)

Q = CoeffElement.q_power
ONE = CoeffElement.one()
ZERO = CoeffElement.zero()


def q_minus_one():
    return Q(1) - ONE


# ---------------------------------------------------------------------------
# ring structure
# ---------------------------------------------------------------------------

def small_elements(rng, count):
    syms = [GaussSymbol(1, 0, 2), GaussSymbol(1, 1, 2), GaussSymbol(2, 1, 3)]
    out = []
    for _ in range(count):
        el = ZERO
        for _ in range(rng.randrange(0, 4)):
            term = CoeffElement.q_power(rng.randrange(-3, 4), rng.randrange(-3, 4))
            if rng.random() < 0.5:
                term = term * CoeffElement.symbol(rng.choice(syms))
            el = el + term
        out.append(el)
    return out


def test_ring_laws_bulk_randomized():
    rng = random.Random(20240817)
    els = small_elements(rng, 40)
    for _ in range(10_000):
        a, b, c = rng.choice(els), rng.choice(els), rng.choice(els)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


coeff_strategy = st.builds(
    lambda picks: sum(
        (CoeffElement.q_power(e, k) * (CoeffElement.symbol(GaussSymbol(t, r % n, n))
                                       if use_sym else ONE)
         for (e, k, t, r, n, use_sym) in picks), ZERO),
    st.lists(st.tuples(st.integers(-4, 4), st.integers(-5, 5), st.sampled_from((1, 2)),
                       st.integers(0, 3), st.sampled_from((1, 2, 4)), st.booleans()),
             max_size=4))


@settings(max_examples=200, deadline=None)
@given(coeff_strategy, coeff_strategy, coeff_strategy)
def test_ring_laws_hypothesis(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert (a * ONE) == a and (a * ZERO).is_zero()


def test_canonical_merging_and_zero_dropping():
    a = Q(2) + Q(2)
    assert a == Q(2, 2)
    assert (Q(2) - Q(2)).is_zero()
    s = CoeffElement.symbol(GaussSymbol(1, 1, 3))
    assert s * s == CoeffElement({(0, ((GaussSymbol(1, 1, 3), 2),)): 1})


def test_power():
    x = Q(1) + ONE
    assert x ** 3 == x * x * x
    assert x ** 0 == ONE


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def test_h_value_cases():
    assert h_value(1, 1, 1) == q_minus_one()
    assert h_value(1, 1, 3).is_zero()
    assert h_value(2, 1, 2) == q_minus_one()
    assert h_value(1, 3, 3) == Q(3) - Q(2)
    with pytest.raises(ValueError):
        h_value(1, 0, 1)


def test_g_value_symbolic_and_specialized():
    g1 = g_value(1, 1, 2)
    assert g1 == CoeffElement.symbol(GaussSymbol(1, 1, 2))
    assert specialize_n1(g_value(1, 1, 1)) == CoeffElement.from_int(-1)
    for a in range(1, 7):
        assert specialize_n1(g_value(1, a, 1)) == Q(a - 1, -1)


def test_specialize_product():
    el = g_value(1, 2, 1) * h_value(1, 1, 1)
    # (-q) * (q - 1)
    assert specialize_n1(el) == (Q(1, -1)) * q_minus_one()
    assert specialize_n1(ONE) == ONE
    with pytest.raises(ValueError):
        specialize_n1(g_value(1, 1, 2))


def test_json_round_trip_and_order():
    el = Q(2, 3) + Q(-1, 5) + CoeffElement.symbol(GaussSymbol(2, 1, 3), q_exp=2)
    obj = el.to_json_obj()
    qs = [m["q"] for m in obj["monomials"]]
    assert qs == sorted(qs)
    assert CoeffElement.from_json_obj(obj, 3) == el


# ---------------------------------------------------------------------------
# numeric oracle
# ---------------------------------------------------------------------------

def _prime(x):
    return x > 1 and all(x % d for d in range(2, int(x ** 0.5) + 1))


def direct_sum(t, a_exp, c_exp, p, n):
    """Independent evaluator: chi(g^k) = exp(2 pi i k / n) for the smallest
    primitive root g, residue symbol of the full modulus = chi^(c_exp)."""
    facts = {f for f in range(2, p) if (p - 1) % f == 0 and _prime(f)}
    g = next(g for g in range(2, p) if all(pow(g, (p - 1) // f, p) != 1 for f in facts))
    ind, acc = {}, 1
    for k in range(p - 1):
        ind[acc] = k
        acc = acc * g % p
    mod = p ** c_exp
    tot = 0j
    for d in range(1, mod):
        if d % p == 0:
            continue
        tot += cmath.exp(2j * cmath.pi * (ind[d % p] * t * c_exp / n + d * p ** a_exp / mod))
    return tot


def test_gauss_numeric_spot_values():
    assert abs(gauss_numeric(1, 0, 1, 5, 1) - (-1)) < 1e-9
    assert abs(gauss_numeric(1, 1, 1, 5, 1) - 4) < 1e-9
    assert abs(abs(gauss_numeric(1, 0, 1, 5, 2)) - 5 ** 0.5) < 1e-9


def test_gauss_numeric_matches_independent_sum():
    for (t, a, c, p, n) in [(1, 0, 1, 7, 3), (1, 2, 2, 5, 2), (2, 1, 2, 13, 4), (1, 3, 3, 5, 1)]:
        got = gauss_numeric(t, a, c, p, n)
        want = direct_sum(t, a, c, p, n)
        assert abs(got - want) < 1e-6 * max(1.0, abs(want))


def test_gauss_numeric_validates_input():
    with pytest.raises(ValueError):
        gauss_numeric(1, 0, 1, 6, 1)
    with pytest.raises(ValueError):
        gauss_numeric(1, 0, 1, 7, 4)  # 7 != 1 mod 4


def eval_q(el, q):
    tot = 0.0
    for c, e, gauss in el.monomials():
        assert not gauss
        tot += c * (q ** e)
    return tot


@pytest.mark.parametrize("n,p", [(1, 5), (2, 5), (3, 7), (4, 5)])
def test_h_pinned_by_numeric_oracle(n, p):
    for t in (1, 2):
        for a in range(1, 5):
            num = gauss_numeric(t, a, a, p, n)
            sym = eval_q(h_value(t, a, n), p)
            assert abs(num - sym) < 1e-6 * max(1.0, abs(sym))


def test_g_residue_class_only():
    # unit-scale values agree for arguments congruent mod n
    n, p, t = 3, 7, 1
    v1 = gauss_numeric(t, 0, 1, p, n)
    v2 = gauss_numeric(t, 3, 4, p, n) / p ** 3
    assert abs(v1 - v2) < 1e-6 * max(1.0, abs(v1))
    assert g_value(t, 1, n) == CoeffElement.symbol(GaussSymbol(t, 1, n))
    assert g_value(t, 4, n) == CoeffElement.symbol(GaussSymbol(t, 1, n), q_exp=3)


# ---------------------------------------------------------------------------
# decorated-entry factors
# ---------------------------------------------------------------------------

def test_entry_factor_circled_and_boxed_is_zero():
    for fam in "ABC":
        assert entry_factor(fam, 2, True, True, False, 2).is_zero()


def test_entry_factor_type_a():
    assert entry_factor("A", 0, True, False, False, 1) == ONE
    assert entry_factor("A", 2, True, False, False, 1) == Q(2)
    assert entry_factor("A", 2, False, True, False, 1) == g_value(1, 2, 1)
    assert entry_factor("A", 2, False, False, False, 1) == h_value(1, 2, 1)


def test_entry_factor_type_b_subscripts():
    # circled contributes 1; the middle column uses t=1, others t=2
    assert entry_factor("B", 3, True, False, True, 2) == ONE
    assert entry_factor("B", 2, False, True, True, 3) == g_value(1, 2, 3).times_unit(1, -2)
    assert entry_factor("B", 2, False, True, False, 3) == g_value(2, 2, 3).times_unit(1, -2)
    assert entry_factor("B", 2, False, False, False, 2) == h_value(2, 2, 2).times_unit(1, -2)


def test_entry_factor_type_c():
    assert entry_factor("C", 2, False, False, False, 3).is_zero()  # 3 does not divide 2
    assert entry_factor("C", 3, False, False, False, 3) == h_value(1, 3, 3)
    assert entry_factor("C", 1, False, True, True, 2) == g_value(2, 1, 2)
    assert entry_factor("C", 1, True, False, False, 4) == Q(1)


def test_entry_factor_rejects_type_d():
    with pytest.raises(ValueError):
        entry_factor("D", 1, False, False, False, 1)


def test_sigma_entry_cases():
    assert sigma_entry(1, True, True, 1).is_zero()
    assert sigma_entry(1, False, False, 1) == ONE - Q(-1)  # (q-1)/q
    assert sigma_entry(2, False, True, 2) == g_value(1, 2, 2).times_unit(1, -2)
    # circled-and-unboxed: completed as the unit factor
    assert sigma_entry(3, True, False, 2) == ONE
