"""Finite weight-lattice polynomials with CoeffElement coefficients.

A ``WeightPolynomial`` maps lattice points (integer tuples in the
fundamental-weight basis) to ring elements.  Terms are kept canonical: no
zero coefficients, and a fixed total order on weights (descending height,
ties broken lexicographically) used for leading terms, serialization and
exact division.  Height is evaluated through an integer-scaled functional
supplied by the root system, so ordering never touches rationals.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .coefficients import CoeffElement

Weight = tuple[int, ...]


class WeightPolynomial:
    __slots__ = ("terms", "height_vec", "meta")

    def __init__(self, height_vec: tuple[int, ...],
                 terms: dict[Weight, CoeffElement] | None = None,
                 meta: dict | None = None):
        self.height_vec = tuple(height_vec)
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}
        self.meta = dict(meta) if meta else {}

    # -- ordering ----------------------------------------------------------
    def order_key(self, w: Weight):
        return (sum(h * c for h, c in zip(self.height_vec, w)), w)

    def sorted_weights(self) -> list[Weight]:
        """Weights in the fixed order, leading (highest) first."""
        return sorted(self.terms, key=self.order_key, reverse=True)

    def leading(self) -> tuple[Weight, CoeffElement]:
        w = max(self.terms, key=self.order_key)
        return w, self.terms[w]

    def trailing_key(self):
        return min(self.order_key(w) for w in self.terms)

    # -- basic structure ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Weight, CoeffElement]]:
        for w in self.sorted_weights():
            yield w, self.terms[w]

    def coeff(self, w: Weight) -> CoeffElement:
        return self.terms.get(tuple(w), CoeffElement.zero())

    def __eq__(self, other) -> bool:
        return (isinstance(other, WeightPolynomial)
                and self.height_vec == other.height_vec
                and self.terms == other.terms)

    def __hash__(self):  # pragma: no cover - not used as a key in hot paths
        return hash((self.height_vec, frozenset(self.terms.items())))

    def __repr__(self):
        bits = [f"({self.terms[w]!r})*x^{w}" for w in self.sorted_weights()]
        return " + ".join(bits) if bits else "0"

    # -- arithmetic ----------------------------------------------------------
    def _like(self, terms: dict[Weight, CoeffElement]) -> "WeightPolynomial":
        return WeightPolynomial(self.height_vec, terms, self.meta)

    def __add__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc[w] + c if w in acc else c
        return self._like(acc)

    def __neg__(self) -> "WeightPolynomial":
        return self._like({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        return self + (-other)

    def mul_term(self, shift: Weight, coeff: CoeffElement) -> "WeightPolynomial":
        """Multiply by the single term coeff * x^shift."""
        if coeff.is_zero():
            return self._like({})
        out: dict[Weight, CoeffElement] = {}
        for w, c in self.terms.items():
            out[tuple(a + b for a, b in zip(w, shift))] = c * coeff
        return self._like(out)

    def __mul__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        self._check(other)
        acc: dict[Weight, CoeffElement] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                prod = c1 * c2
                acc[w] = acc[w] + prod if w in acc else prod
        return self._like(acc)

    def scale(self, coeff: CoeffElement) -> "WeightPolynomial":
        return self._like({w: c * coeff for w, c in self.terms.items()})

    def _check(self, other: "WeightPolynomial"):
        if self.height_vec != other.height_vec:
            raise ValueError("weight polynomials live over different root systems")

    # -- exact division -------------------------------------------------------
    def divide(self, divisor: "WeightPolynomial") -> tuple["WeightPolynomial", "WeightPolynomial"]:
        """Leading-term elimination under the fixed order.

        The divisor's leading coefficient must be a ring unit (±q^e).  Returns
        (quotient, remainder); the division was exact iff the remainder is
        zero.  Divergence on inexact input is cut off by the trailing-key
        floor: in an exact division every quotient weight key is at least
        trailing(self) - trailing(divisor).
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero weight polynomial")
        lead_w, lead_c = divisor.leading()
        unit = lead_c.as_unit_monomial()
        if unit is None:
            raise ValueError("divisor leading coefficient is not a unit monomial")
        inv_sign, inv_q = unit[0], -unit[1]

        quot: dict[Weight, CoeffElement] = {}
        rem = dict(self.terms)
        if rem:
            floor = tuple(a - b for a, b in
                          zip(self.trailing_key()[1], divisor.trailing_key()[1]))
            floor_key = (sum(h * c for h, c in zip(self.height_vec, floor)), floor)
        while rem:
            w = max(rem, key=self.order_key)
            gamma = tuple(a - b for a, b in zip(w, lead_w))
            if (sum(h * c for h, c in zip(self.height_vec, gamma)), gamma) < floor_key:
                break  # cannot belong to any exact quotient
            qc = rem[w].times_unit(inv_sign, inv_q)
            quot[gamma] = quot[gamma] + qc if gamma in quot else qc
            for dw, dc in divisor.terms.items():
                tw = tuple(a + b for a, b in zip(gamma, dw))
                upd = rem.get(tw, CoeffElement.zero()) - qc * dc
                if upd.is_zero():
                    rem.pop(tw, None)
                else:
                    rem[tw] = upd
        return self._like(quot), self._like(rem)

    # -- serialization ---------------------------------------------------------
    def to_json_obj(self) -> dict:
        obj = dict(self.meta)
        obj["terms"] = [{"wt": list(w), "coeff": self.terms[w].to_json_obj()}
                        for w in self.sorted_weights()]
        return obj


def poly_from_int_terms(height_vec: tuple[int, ...], table: dict[Weight, int],
                        meta: dict | None = None) -> WeightPolynomial:
    return WeightPolynomial(
        height_vec,
        {w: CoeffElement.from_int(c) for w, c in table.items() if c != 0},
        meta,
    )


def poly_sum(height_vec: tuple[int, ...],
             parts: Iterable[WeightPolynomial]) -> WeightPolynomial:
    acc: dict[Weight, CoeffElement] = {}
    for part in parts:
        for w, c in part.terms.items():
            acc[w] = acc[w] + c if w in acc else c
    return WeightPolynomial(height_vec, acc)
