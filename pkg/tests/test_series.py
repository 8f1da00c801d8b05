import json

import pytest

from crystalmds import (CartanSpec, CoeffElement, build_root_system,
                        branch_decompose, character_via_patterns,
                        enumerate_patterns, p_part, polynomial_json_obj,
                        specialize_n1, tokuyama_quotient, twisted_character,
                        weight_in_hull, weyl_character, weyl_dimension)
from crystalmds.series import specialize_poly_n1

Q = CoeffElement.q_power


def rs(family, rank):
    return build_root_system(CartanSpec(family, rank))


# ---------------------------------------------------------------------------
# the crystal sum
# ---------------------------------------------------------------------------

def test_p_part_rank_one_by_hand():
    # two crystal elements: the highest (circled, factor 1) and the boxed
    # extreme (a single unexpanded sum that degree-1 evaluation sends to -1)
    P = specialize_poly_n1(p_part(rs("A", 1), (1,), 1))
    assert dict(P.terms) == {(1,): CoeffElement.from_int(1),
                             (-1,): CoeffElement.from_int(-1)}


def test_p_part_interior_entries():
    P = specialize_poly_n1(p_part(rs("A", 1), (3,), 1))
    assert P.coeff((3,)).is_one()
    assert P.coeff((1,)) == Q(1) - Q(0)      # q - 1
    assert P.coeff((-1,)) == Q(2) - Q(1)     # (q-1) q
    assert P.coeff((-3,)) == Q(2, -1)        # -q^2


def test_p_part_coefficient_at_highest_weight():
    for family, rank in [("A", 2), ("C", 2), ("A", 3), ("C", 3)]:
        lam = (1,) * rank
        for n in (1, 2, 3):
            assert p_part(rs(family, rank), lam, n).coeff(lam).is_one()


def test_p_part_term_count_bounded_by_crystal():
    r = rs("B", 2)
    lam = (2, 1)
    P = p_part(r, lam, 2)
    assert len(P) <= weyl_dimension(r, lam)


def test_p_part_preconditions():
    with pytest.raises(ValueError):
        p_part(rs("A", 2), (1, 0), 1)
    assert p_part(rs("A", 2), (1, 0), 1, allow_dominant=True) is not None
    with pytest.raises(ValueError):
        p_part(rs("A", 2), (1, 1), 0)


def test_p_part_support_constraints():
    r = rs("C", 2)
    lam = (2, 1)
    P = p_part(r, lam, 3)
    for w in P.terms:
        assert weight_in_hull(r, lam, w)
        drop = r.root_coordinates(tuple(a - b for a, b in zip(lam, w)))
        assert all(c >= 0 and c.denominator == 1 for c in drop)


def test_p_part_threads_deterministic():
    r = rs("B", 2)
    lam = (2, 2)
    serial = p_part(r, lam, 2)
    threaded = p_part(r, lam, 2, threads=4)
    assert serial.terms == threaded.terms


def test_character_via_patterns_matches():
    for family, rank, lam in [("A", 2, (1, 0)), ("D", 4, (1, 0, 0, 0)),
                              ("B", 2, (0, 1)), ("C", 3, (1, 0, 0))]:
        r = rs(family, rank)
        assert character_via_patterns(r, lam) == weyl_character(r, lam)


def test_character_d4_spinor_has_eight_unit_terms():
    chi = character_via_patterns(rs("D", 4), (1, 0, 0, 0))
    assert len(chi) == 8 and all(c.is_one() for _, c in chi)


# ---------------------------------------------------------------------------
# deformed denominator factorization
# ---------------------------------------------------------------------------

def test_tokuyama_quotient_lambda_independent():
    r = rs("A", 2)
    quotients = []
    for lam in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        res = tokuyama_quotient(r, lam, "minus_rho")
        assert res.ok, (lam, res.reason)
        quotients.append(res.quotient)
    assert all(q.terms == quotients[0].terms for q in quotients)


def test_tokuyama_quotient_times_divisor_reconstructs():
    r = rs("A", 2)
    lam = (2, 1)
    res = tokuyama_quotient(r, lam, "minus_rho")
    product = res.quotient * twisted_character(r, (1, 0))
    P = specialize_poly_n1(p_part(r, lam, 1))
    assert product.terms == P.terms


def test_tokuyama_wrong_shift_reports_failure():
    res = tokuyama_quotient(rs("A", 1), (2,), "same")
    assert not res.ok and res.remainder is not None and not res.remainder.is_zero()


def test_tokuyama_rank_one_closed_form():
    res = tokuyama_quotient(rs("A", 1), (3,), "minus_rho")
    assert res.ok
    assert dict(res.quotient.terms) == {(1,): CoeffElement.from_int(1),
                                        (-1,): CoeffElement.from_int(-1)}


def test_tokuyama_requires_type_a_and_strong_dominance():
    with pytest.raises(ValueError):
        tokuyama_quotient(rs("B", 2), (1, 1))
    with pytest.raises(ValueError):
        tokuyama_quotient(rs("A", 2), (1, 0))


# ---------------------------------------------------------------------------
# branching
# ---------------------------------------------------------------------------

def test_branch_groups_cover_the_crystal():
    r = rs("A", 2)
    bd = branch_decompose(r, (1, 0), 1)
    assert sum(g.size for g in bd.groups) == 3
    assert bd.all_ok


def test_branch_zero_top_row_group():
    r = rs("A", 2)
    bd = branch_decompose(r, (2, 1), 1)
    zero_group = next(g for g in bd.groups if all(v == 0 for v in g.top_row))
    # deleting no boxes: the branch weight is the restriction of lambda
    assert zero_group.mu == (2,)
    assert zero_group.truncation_ok


def test_branch_terms_are_single_monomials():
    r = rs("A", 3)
    bd = branch_decompose(r, (1, 1, 1), 2)
    assert bd.all_ok
    for term in bd.terms:
        assert len(term.mu) == 2 and len(term.shift) == 3


@pytest.mark.parametrize("n", [1, 2, 3])
def test_branch_identity_and_factorization_a2(n):
    bd = branch_decompose(rs("A", 2), (2, 2), n)
    assert bd.identity_ok and bd.all_ok


def test_branch_report_only_families():
    bd = branch_decompose(rs("D", 4), (1, 0, 0, 1), 1)
    assert bd.identity_ok  # recorded finding: the split is exact here too


def test_branch_rank_restrictions():
    with pytest.raises(ValueError):
        branch_decompose(rs("B", 2), (1, 1), 1)
    with pytest.raises(ValueError):
        branch_decompose(rs("D", 3), (1, 1, 1), 1)


def test_branch_s_additivity_entrywise():
    from crystalmds import pattern_weight
    from crystalmds.series import _truncate
    r = rs("A", 3)
    lam = (1, 1, 1)
    sub = CartanSpec("A", 2)
    by_top = {}
    for L in enumerate_patterns(r, lam):
        by_top.setdefault(L.rows[0], []).append(L)
    for top, members in by_top.items():
        from crystalmds import LittelmannPattern
        toponly = LittelmannPattern(
            r.spec, (top,) + tuple(tuple([0] * len(x)) for x in members[0].rows[1:]))
        s_top = pattern_weight(toponly)
        for L in members:
            s_full = pattern_weight(L)
            s_sub = pattern_weight(_truncate(L, sub))
            assert s_full[:2] == tuple(a + b for a, b in zip(s_top[:2], s_sub))
            assert s_full[2] == s_top[2]


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_polynomial_json_schema():
    r = rs("C", 2)
    P = p_part(r, (2, 1), 3)
    obj = polynomial_json_obj(P, "C", 2, 3, (2, 1))
    assert list(obj) == ["family", "rank", "n", "lambda", "terms"]
    assert obj["family"] == "C" and obj["lambda"] == [2, 1]
    blob = json.dumps(obj)
    assert json.loads(blob) == obj
    wts = [tuple(t["wt"]) for t in obj["terms"]]
    keys = [r.weight_sort_key(w) for w in wts]
    assert keys == sorted(keys, reverse=True)
    for t in obj["terms"]:
        mono = t["coeff"]["monomials"]
        assert mono == sorted(mono, key=lambda m: (m["q"], json.dumps(m["gauss"])))
