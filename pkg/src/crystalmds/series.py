"""Crystal sums: characters, prime-power parts, deformation quotient, branching.

``p_part`` assembles the polynomial P over a highest-weight crystal: each
pattern contributes its Gauss-sum coefficient at its weight.  With every
coefficient replaced by 1 the same sum is the Weyl character, which gives the
primary cross-check against the alternating-sum character.

``tokuyama_quotient`` factors the degree-1 specialization of P as a
lambda-independent deformed denominator times a character.  The divisor is
the character with each coefficient twisted by q to the height drop of its
weight; this is the variable normalization under which the factorization is
exact in the weight-polynomial ring (see README notes).

``branch_decompose`` splits the crystal by top rows into rank-(r-1) crystals
and verifies that both weights and coefficients factor through the split.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .coefficients import CoeffElement, pattern_coefficient, specialize_n1
from .conventions import DEFAULT, Conventions
from .decorations import decorate
from .patterns import (LittelmannPattern, enumerate_patterns, pattern_to_bzl,
                       pattern_weight, pattern_wt, top_rows)
from .roots import (CartanSpec, RootSystem, build_root_system, is_dominant,
                    is_strongly_dominant, weyl_character)
from .weightpoly import Weight, WeightPolynomial, poly_from_int_terms

__all__ = [
    "WeightPolynomial", "character_via_patterns", "p_part",
    "TokuyamaResult", "tokuyama_quotient",
    "BranchTerm", "BranchGroupReport", "BranchDecomposition", "branch_decompose",
    "polynomial_json_obj",
]


def character_via_patterns(rs: RootSystem, lam: Weight,
                           conv: Conventions = DEFAULT) -> WeightPolynomial:
    """Sum of x^wt over the crystal; must equal the Weyl character exactly."""
    lam = tuple(lam)
    table: dict[Weight, int] = {}
    for L in enumerate_patterns(rs, lam, conv):
        w = pattern_wt(L, lam)
        table[w] = table.get(w, 0) + 1
    meta = {"family": rs.family, "rank": rs.rank, "lambda": list(lam)}
    return poly_from_int_terms(rs.height_vec, table, meta)


def _group_sum(rs: RootSystem, lam: Weight, n: int, conv: Conventions,
               top: tuple[int, ...] | None) -> dict[Weight, CoeffElement]:
    acc: dict[Weight, CoeffElement] = {}
    for L in enumerate_patterns(rs, lam, conv, top_row=top):
        c = pattern_coefficient(decorate(L, lam, conv), n)
        if c.is_zero():
            continue
        w = pattern_wt(L, lam)
        acc[w] = acc[w] + c if w in acc else c
    return acc


def p_part(rs: RootSystem, lam: Weight, n: int, conv: Conventions = DEFAULT,
           allow_dominant: bool = False, threads: int | None = None) -> WeightPolynomial:
    """The prime-power-coefficient polynomial P at cover degree ``n``.

    ``lam`` is the crystal's highest weight.  It must be strongly dominant
    for p-part semantics; pass ``allow_dominant`` for exploratory sums over
    crystals with boundary weights.  ``threads`` shards the crystal by top
    row; the result is canonical regardless of thread count.
    """
    lam = tuple(lam)
    if n < 1:
        raise ValueError("cover degree n must be >= 1")
    if not is_dominant(lam):
        raise ValueError(f"highest weight must be dominant, got {lam}")
    if not is_strongly_dominant(lam) and not allow_dominant:
        raise ValueError(
            f"p-part semantics require a strongly dominant weight, got {lam}; "
            "pass allow_dominant=True to sum anyway")

    if threads and threads > 1:
        tops = top_rows(rs, lam, conv)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(
                lambda t: _group_sum(rs, lam, n, conv, t), tops))
        acc: dict[Weight, CoeffElement] = {}
        for part in parts:
            for w, c in part.items():
                acc[w] = acc[w] + c if w in acc else c
    else:
        acc = _group_sum(rs, lam, n, conv, None)

    meta = {"family": rs.family, "rank": rs.rank, "n": n, "lambda": list(lam)}
    return WeightPolynomial(rs.height_vec, acc, meta)


def specialize_poly_n1(poly: WeightPolynomial) -> WeightPolynomial:
    return WeightPolynomial(
        poly.height_vec,
        {w: specialize_n1(c) for w, c in poly.terms.items()},
        poly.meta,
    )


# ---------------------------------------------------------------------------
# Deformed Weyl-denominator factorization (degree 1)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TokuyamaResult:
    lam: Weight
    shift: str                       # "minus_rho" or "same"
    ok: bool
    quotient: WeightPolynomial | None
    remainder: WeightPolynomial | None
    reason: str = ""


def twisted_character(rs: RootSystem, lam_prime: Weight) -> WeightPolynomial:
    """Character of ``lam_prime`` with each coefficient multiplied by q to the
    height of the drop from the highest weight."""
    chi = weyl_character(rs, lam_prime)
    terms: dict[Weight, CoeffElement] = {}
    for w, c in chi.terms.items():
        drop = rs.root_coordinates(tuple(a - b for a, b in zip(lam_prime, w)))
        ht = sum(drop)
        if ht.denominator != 1:
            raise AssertionError("character weight outside the root lattice shift")
        terms[w] = c * CoeffElement.q_power(int(ht))
    return WeightPolynomial(rs.height_vec, terms, chi.meta)


def tokuyama_quotient(rs: RootSystem, lam: Weight, shift: str = "minus_rho",
                      conv: Conventions = DEFAULT) -> TokuyamaResult:
    """Exact division of the degree-1 sum by the shifted, q-twisted character.

    On success the quotient is the deformed Weyl denominator and does not
    depend on ``lam``; a failed division returns the remainder as witness.
    """
    if rs.family != "A":
        raise ValueError("the deformation factorization is asserted for type A only")
    if shift not in ("minus_rho", "same"):
        raise ValueError(f"unknown shift convention {shift!r}")
    lam = tuple(lam)
    if not is_strongly_dominant(lam):
        raise ValueError("need a strongly dominant highest weight")
    lam_prime = tuple(c - 1 for c in lam) if shift == "minus_rho" else lam
    if not is_dominant(lam_prime):
        return TokuyamaResult(lam, shift, False, None, None,
                              reason="shifted weight is not dominant")
    P = specialize_poly_n1(p_part(rs, lam, 1, conv))
    divisor = twisted_character(rs, lam_prime)
    quot, rem = P.divide(divisor)
    if rem.is_zero():
        return TokuyamaResult(lam, shift, True, quot, None)
    return TokuyamaResult(lam, shift, False, None, rem, reason="inexact division")


# ---------------------------------------------------------------------------
# Branching through the top row
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BranchTerm:
    """One monomial factor in P_lambda = sum over mu of p(mu) * P_mu:
    a rank-(r-1) highest weight, a rank-r weight shift, and a scalar."""
    mu: Weight
    shift: Weight
    scalar: CoeffElement


@dataclass(frozen=True)
class BranchGroupReport:
    top_row: tuple[int, ...]
    mu: Weight
    size: int
    truncation_ok: bool
    s_additivity_ok: bool
    factorization_ok: bool
    # informational: true iff mu is far enough from the walls that the
    # truncated zero pattern carries coefficient 1 (otherwise the group's
    # scalar is 0 and the factorization is trivially consistent)
    zero_coeff_is_one: bool
    witness: str | None = None


@dataclass(frozen=True)
class BranchDecomposition:
    lam: Weight
    n: int
    terms: tuple[BranchTerm, ...]
    groups: tuple[BranchGroupReport, ...]
    identity_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.identity_ok and all(
            g.truncation_ok and g.s_additivity_ok and g.factorization_ok
            for g in self.groups)


def _truncate(L: LittelmannPattern, sub_spec: CartanSpec) -> LittelmannPattern:
    return LittelmannPattern(sub_spec, L.rows[1:])


def branch_decompose(rs: RootSystem, lam: Weight, n: int,
                     conv: Conventions = DEFAULT) -> BranchDecomposition:
    """Group the crystal by top row, recover each branch highest weight, and
    check that weights and coefficients factor through top-row deletion.

    All checks are recorded per group rather than raised; the factorization
    is a theorem in type A and an experiment elsewhere.
    """
    lam = tuple(lam)
    spec = rs.spec
    # truncation must stay in-family: A_1 exists, B_1/C_1/D_2 do not
    min_rank = {"A": 2, "B": 3, "C": 3, "D": 4}[spec.family]
    if spec.rank < min_rank:
        raise ValueError(
            f"branching within family {spec.family} needs rank >= {min_rank}")
    sub_spec = CartanSpec(spec.family, spec.rank - 1)
    sub_rs = build_root_system(sub_spec)
    r = spec.rank

    groups: dict[tuple[int, ...], list[LittelmannPattern]] = {}
    for L in enumerate_patterns(rs, lam, conv):
        groups.setdefault(tuple(L.rows[0]), []).append(L)

    order = [t for t in top_rows(rs, lam, conv) if t in groups]

    terms: list[BranchTerm] = []
    reports: list[BranchGroupReport] = []
    reconstructed: dict[Weight, CoeffElement] = {}

    for top in order:
        members = groups[top]
        zero_shape = [tuple(top)] + [tuple([0] * len(row)) for row in members[0].rows[1:]]
        top_only = LittelmannPattern(spec, tuple(zero_shape))
        s_top = pattern_weight(top_only)
        shift = pattern_wt(top_only, lam)
        mu = shift[:r - 1]
        if not is_dominant(mu):
            raise AssertionError(f"branch weight {mu} is not dominant")
        scalar = pattern_coefficient(decorate(top_only, lam, conv), n)

        sub_patterns = {L.rows for L in enumerate_patterns(sub_rs, mu, conv)}
        truncs = {_truncate(L, sub_spec).rows for L in members}
        truncation_ok = sub_patterns == truncs and top_only.rows in {m.rows for m in members}

        s_add_ok = True
        fact_ok = True
        witness = None
        for L in members:
            Lp = _truncate(L, sub_spec)
            s_full = pattern_weight(L)
            s_sub = pattern_weight(Lp)
            expect = tuple(s_top[k] + s_sub[k] for k in range(r - 1)) + (s_top[r - 1],)
            if s_full != expect:
                s_add_ok = False
                witness = witness or L.to_text()
            coeff_full = pattern_coefficient(decorate(L, lam, conv), n)
            coeff_sub = pattern_coefficient(decorate(Lp, mu, conv), n)
            if coeff_full != scalar * coeff_sub:
                fact_ok = False
                witness = witness or L.to_text()

        zero_sub = LittelmannPattern(
            sub_spec, tuple(tuple([0] * len(row)) for row in members[0].rows[1:]))
        zero_ok = pattern_coefficient(decorate(zero_sub, mu, conv), n).is_one()

        terms.append(BranchTerm(mu=mu, shift=shift, scalar=scalar))
        reports.append(BranchGroupReport(
            top_row=tuple(top), mu=mu, size=len(members),
            truncation_ok=truncation_ok, s_additivity_ok=s_add_ok,
            factorization_ok=fact_ok, zero_coeff_is_one=zero_ok,
            witness=witness))

        # accumulate p(mu) * P_mu embedded along the simple-root identification
        sub_poly = p_part(sub_rs, mu, n, conv, allow_dominant=True)
        for wprime, c in sub_poly.terms.items():
            drop = sub_rs.root_coordinates(tuple(a - b for a, b in zip(mu, wprime)))
            if any(x.denominator != 1 for x in drop):
                raise AssertionError("branch weight drop is not in the root lattice")
            w = list(shift)
            for k in range(r - 1):
                ck = int(drop[k])
                if ck:
                    for idx in range(r):
                        w[idx] -= ck * rs.cartan[idx][k]
            key = tuple(w)
            add = c * scalar
            reconstructed[key] = reconstructed[key] + add if key in reconstructed else add

    total = WeightPolynomial(rs.height_vec, reconstructed)
    direct = p_part(rs, lam, n, conv, allow_dominant=True)
    identity_ok = total == WeightPolynomial(rs.height_vec, direct.terms)

    return BranchDecomposition(lam=lam, n=n, terms=tuple(terms),
                               groups=tuple(reports), identity_ok=identity_ok)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def polynomial_json_obj(poly: WeightPolynomial, family: str, rank: int,
                        n: int, lam: Weight) -> dict:
    """Schema: family, rank, n, lambda, then terms in the fixed weight order."""
    return {
        "family": family,
        "rank": rank,
        "n": n,
        "lambda": list(lam),
        "terms": [{"wt": list(w), "coeff": poly.terms[w].to_json_obj()}
                  for w in poly.sorted_weights()],
    }
