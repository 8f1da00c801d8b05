"""Symbolic coefficient ring over formal Gauss sums, and a numeric oracle.

Coefficients of crystal sums live in the commutative ring

    Z[q, q^-1][ g_t(c) : t in {1,2}, c a residue class ]

where ``q`` is a formal variable (the residue-field order) and ``g_t(c)`` is
an unexpanded unit-scale Gauss sum depending only on the residue class ``c``
of its argument modulo the cover degree ``n``.  The companion sum ``h_t(a)``
always collapses to an explicit Laurent polynomial in ``q``::

    h_t(a) = (q - 1) * q^(a-1)   if n | t*a,      else 0
    g_t(a) = q^(a-1) * <symbol (t, a mod n)>

``gauss_numeric`` evaluates the defining character sums over an actual
residue ring by direct summation, providing the independent oracle used to
pin these closed forms.  Under degree n = 1 every symbol evaluates to -1
(``specialize_n1``).

Everything here is immutable and safe to share between threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

import numpy as np

if TYPE_CHECKING:  # pragma: no cover - import only for annotations
    from .decorations import ComponentD, DecoratedPattern


@dataclass(frozen=True, order=True)
class GaussSymbol:
    """Formal unit-scale Gauss sum g_t(residue), taken modulo ``degree``."""

    t: int
    residue: int
    degree: int

    def __post_init__(self):
        if self.t not in (1, 2):
            raise ValueError(f"symbol subscript t must be 1 or 2, got {self.t}")
        if self.degree < 1:
            raise ValueError("cover degree must be >= 1")
        if not 0 <= self.residue < self.degree:
            raise ValueError("residue must be reduced modulo the degree")


# A monomial key is (q_exponent, gauss_part) with gauss_part a sorted tuple
# of (GaussSymbol, positive multiplicity) pairs.
_GaussPart = tuple[tuple[GaussSymbol, int], ...]
_MonKey = tuple[int, _GaussPart]


def _merge_gauss(g1: _GaussPart, g2: _GaussPart) -> _GaussPart:
    if not g1:
        return g2
    if not g2:
        return g1
    acc: dict[GaussSymbol, int] = dict(g1)
    for sym, k in g2:
        acc[sym] = acc.get(sym, 0) + k
    return tuple(sorted((s, k) for s, k in acc.items() if k != 0))


class CoeffElement:
    """Canonical sparse sum of monomials ``int * q^e * product of symbols``.

    Instances are immutable; arithmetic returns new elements with zero terms
    dropped and duplicate monomials merged, so structural equality is ring
    equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[_MonKey, int] | None = None):
        clean = {k: v for k, v in (terms or {}).items() if v != 0}
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, *a):  # pragma: no cover - guard rail
        raise AttributeError("CoeffElement is immutable")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "CoeffElement":
        return _ZERO

    @staticmethod
    def one() -> "CoeffElement":
        return _ONE

    @staticmethod
    def from_int(k: int) -> "CoeffElement":
        return CoeffElement({(0, ()): int(k)})

    @staticmethod
    def q_power(e: int, coeff: int = 1) -> "CoeffElement":
        return CoeffElement({(int(e), ()): int(coeff)})

    @staticmethod
    def symbol(sym: GaussSymbol, q_exp: int = 0, coeff: int = 1) -> "CoeffElement":
        return CoeffElement({(int(q_exp), ((sym, 1),)): int(coeff)})

    # -- ring structure ----------------------------------------------------
    def __add__(self, other: "CoeffElement") -> "CoeffElement":
        if not isinstance(other, CoeffElement):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return CoeffElement(acc)

    def __neg__(self) -> "CoeffElement":
        return CoeffElement({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "CoeffElement") -> "CoeffElement":
        return self + (-other)

    def __mul__(self, other: "CoeffElement") -> "CoeffElement":
        if not isinstance(other, CoeffElement):
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        if self is _ONE:
            return other
        if other is _ONE:
            return self
        acc: dict[_MonKey, int] = {}
        for (e1, g1), c1 in self._terms.items():
            for (e2, g2), c2 in other._terms.items():
                key = (e1 + e2, _merge_gauss(g1, g2))
                acc[key] = acc.get(key, 0) + c1 * c2
        return CoeffElement(acc)

    def __pow__(self, k: int) -> "CoeffElement":
        if k < 0:
            raise ValueError("negative powers are not defined in the ring")
        out, base = _ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, CoeffElement) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, ()): 1}

    def monomials(self) -> list[tuple[int, int, _GaussPart]]:
        """Monomials as (int coeff, q exponent, gauss part), canonical order."""
        return [(c, e, g) for (e, g), c in sorted(self._terms.items())]

    def as_unit_monomial(self) -> tuple[int, int] | None:
        """Return (sign, q_exp) if the element is ±q^e with no symbols."""
        if len(self._terms) != 1:
            return None
        (e, g), c = next(iter(self._terms.items()))
        if g or c not in (1, -1):
            return None
        return c, e

    def times_unit(self, sign: int, q_exp: int) -> "CoeffElement":
        """Multiply by ±q^e (a ring unit); used by exact division."""
        return CoeffElement({(e + q_exp, g): sign * c for (e, g), c in self._terms.items()})

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for c, e, g in self.monomials():
            part = [str(c)] if (c != 1 or (e == 0 and not g)) else []
            if e:
                part.append(f"q^{e}" if e != 1 else "q")
            for sym, k in g:
                s = f"g_{sym.t}({sym.residue} mod {sym.degree})"
                part.append(s if k == 1 else f"{s}^{k}")
            bits.append("*".join(part) if part else "1")
        return " + ".join(bits)

    # -- serialization -----------------------------------------------------
    def to_json_obj(self) -> dict:
        mons = []
        for c, e, g in self.monomials():
            mons.append({
                "int": c,
                "q": e,
                "gauss": [{"t": s.t, "c": s.residue, "pow": k} for s, k in g],
            })
        return {"monomials": mons}

    @staticmethod
    def from_json_obj(obj: dict, degree: int) -> "CoeffElement":
        terms: dict[_MonKey, int] = {}
        for mon in obj["monomials"]:
            g = tuple(sorted((GaussSymbol(d["t"], d["c"], degree), d["pow"]) for d in mon["gauss"]))
            terms[(mon["q"], g)] = terms.get((mon["q"], g), 0) + mon["int"]
        return CoeffElement(terms)


_ZERO = CoeffElement({})
_ONE = CoeffElement({(0, ()): 1})


def coeff_sum(items: Iterable[CoeffElement]) -> CoeffElement:
    acc: dict[_MonKey, int] = {}
    for el in items:
        for k, v in el._terms.items():
            acc[k] = acc.get(k, 0) + v
    return CoeffElement(acc)


# ---------------------------------------------------------------------------
# Gauss-sum closed forms
# ---------------------------------------------------------------------------

def h_value(t: int, a: int, n: int) -> CoeffElement:
    """The collapsed sum h_t(a): (q-1)q^(a-1) when n | t*a, else 0.

    The unit count of the length-a residue ring is (q-1)q^(a-1); the sum
    picks it up exactly when the character t*a is trivial.  Pinned against
    ``gauss_numeric`` for a wide (t, a, n, p) battery.
    """
    _check_ta(t, a, n)
    if (t * a) % n != 0:
        return _ZERO
    return CoeffElement({(a, ()): 1, (a - 1, ()): -1})


def g_value(t: int, a: int, n: int) -> CoeffElement:
    """The symbolic sum g_t(a) = q^(a-1) * <symbol (t, a mod n)>.

    The symbol is never expanded for n > 1 (no closed form exists in
    general); the n = 1 specialization sends it to -1.
    """
    _check_ta(t, a, n)
    return CoeffElement.symbol(GaussSymbol(t, a % n, n), q_exp=a - 1)


def _check_ta(t: int, a: int, n: int):
    if t not in (1, 2):
        raise ValueError("subscript t must be 1 or 2")
    if a < 1:
        raise ValueError("prime-power exponent a must be >= 1")
    if n < 1:
        raise ValueError("cover degree n must be >= 1")


def specialize_n1(c: CoeffElement) -> CoeffElement:
    """Evaluate a degree-1 element: every symbol becomes -1.

    Rejects symbols carrying a cover degree larger than 1; the result is a
    pure Laurent element in q.
    """
    terms: dict[_MonKey, int] = {}
    for (e, g), coeff in c._terms.items():
        sign = 1
        for sym, k in g:
            if sym.degree != 1:
                raise ValueError(f"cannot specialize symbol of degree {sym.degree} at n=1")
            if k % 2:
                sign = -sign
        key = (e, ())
        terms[key] = terms.get(key, 0) + sign * coeff
    return CoeffElement(terms)


# ---------------------------------------------------------------------------
# Numeric oracle: direct character-sum evaluation over Z / p^c
# ---------------------------------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _primitive_root(p: int) -> int:
    fac, m = [], p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in fac):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")  # unreachable for prime p


_CHUNK = 1 << 20


def gauss_numeric(t: int, a_exp: int, c_exp: int, p: int, n: int) -> complex:
    """Direct summation of the Gauss sum with modulus p^c_exp.

    Sums chi(d)^(t*c_exp) * exp(2*pi*i * d * p^a_exp / p^c_exp) over units d
    modulo p^c_exp, where chi is a fixed power-residue character of order n
    modulo p (extended by zero to non-units); the power t*c_exp realises the
    order-n residue symbol of the full modulus applied t times.  Floating
    point; error budget 1e-9 per term.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if (p - 1) % n != 0:
        raise ValueError(f"need p = 1 mod n, got p={p}, n={n}")
    if c_exp < 1 or a_exp < 0:
        raise ValueError("need c_exp >= 1 and a_exp >= 0")
    if t not in (1, 2):
        raise ValueError("subscript t must be 1 or 2")

    # chi(g^k) = exp(2*pi*i*k/n) for a fixed primitive root g.
    ind = np.zeros(p, dtype=np.int64)
    g = _primitive_root(p)
    acc = 1
    for k in range(p - 1):
        ind[acc] = k
        acc = (acc * g) % p
    chi_exp = (ind * (((p - 1) // n) * t * c_exp)) % (p - 1)  # exponent of zeta_(p-1)

    mod = p ** c_exp
    shift = p ** a_exp
    total = 0.0 + 0.0j
    two_pi = 2.0 * np.pi
    for start in range(0, mod, _CHUNK):
        d = np.arange(start, min(start + _CHUNK, mod), dtype=np.int64)
        d = d[(d % p) != 0]
        if d.size == 0:
            continue
        ang = two_pi * (chi_exp[d % p] / float(p - 1) + ((d * shift) % mod) / float(mod))
        total += complex(np.cos(ang).sum(), np.sin(ang).sum())
    return total


# ---------------------------------------------------------------------------
# Decorated-entry contributions
# ---------------------------------------------------------------------------

def entry_factor(family: str, a: int, circled: bool, boxed: bool,
                 middle: bool, n: int) -> CoeffElement:
    """Contribution of one decorated entry in types A, B, C.

    ``middle`` marks the central column of a B/C row; it selects the Gauss
    subscript (t = 1 at the middle in B, t = 2 at the middle in C, the other
    value elsewhere).  Type D contributions are per component, not per entry
    (see ``sigma_component``).
    """
    if family == "A":
        if circled and boxed:
            return _ZERO
        if circled:
            return CoeffElement.q_power(a)
        if boxed:
            return g_value(1, a, n)
        return h_value(1, a, n)
    if family == "B":
        t = 1 if middle else 2
        if circled and boxed:
            return _ZERO
        if circled:
            return _ONE
        if boxed:
            return g_value(t, a, n).times_unit(1, -a)
        return h_value(t, a, n).times_unit(1, -a)
    if family == "C":
        t = 2 if middle else 1
        if circled and boxed:
            return _ZERO
        if circled:
            return CoeffElement.q_power(a)
        if boxed:
            return g_value(t, a, n)
        return h_value(1, a, n)  # already zero unless n | a
    raise ValueError(f"entry_factor does not apply to family {family!r}")


def sigma_entry(a: int, circled: bool, boxed: bool, n: int) -> CoeffElement:
    """Per-entry factor sigma(y) for type D.

    The published rule omits the circled-and-unboxed case; it is completed
    here as 1 (the q^a circling factor against the family's q^-a
    normalization).  ``count_forced_sigma`` reports how often enumerated
    crystals actually reach it.
    """
    if circled and boxed:
        return _ZERO
    if circled:
        return _ONE
    if boxed:
        return g_value(1, a, n).times_unit(1, -a)
    return h_value(1, a, n).times_unit(1, -a)


def sigma_is_forced(a: int, circled: bool, boxed: bool) -> bool:
    return circled and not boxed


def sigma_component(comp: "ComponentD", dp: "DecoratedPattern", n: int) -> CoeffElement:
    """Contribution of one connected component of a type-D decorated row."""
    i = comp.row
    if any(dp.is_circled(i, j) and dp.is_boxed(i, j) for j in range(comp.j1, comp.j2 + 1)):
        return _ZERO
    if comp.kind != "sml":
        if comp.kind == "ml":
            j = comp.shorter_leg_col
        else:
            j = comp.j2
        return sigma_entry(dp.pattern.a(i, j), dp.is_circled(i, j), dp.is_boxed(i, j), n)
    # symmetric multiple leaner
    if comp.value == 0:
        return _ONE
    j = comp.j2
    right = sigma_entry(comp.value, dp.is_circled(i, j), dp.is_boxed(i, j), n)
    if dp.is_boxed(i, j):
        second = sigma_entry(dp.pattern.a(i, j - 1), dp.is_circled(i, j - 1),
                             dp.is_boxed(i, j - 1), n)
        return right * second * CoeffElement.q_power(1 - comp.length)
    return right * (_ONE - CoeffElement.q_power(-comp.length))


def pattern_coefficient(dp: "DecoratedPattern", n: int) -> CoeffElement:
    """Total coefficient of a decorated pattern: product over entries
    (types A/B/C) or over decorated-graph components (type D)."""
    spec = dp.pattern.spec
    out = _ONE
    if spec.family == "D":
        for comp in dp.components:
            out = out * sigma_component(comp, dp, n)
            if out.is_zero():
                return _ZERO
        return out
    r = spec.rank
    for i, j, a in dp.pattern.entries():
        middle = spec.family in ("B", "C") and j == r
        out = out * entry_factor(spec.family, a, dp.is_circled(i, j),
                                 dp.is_boxed(i, j), middle, n)
        if out.is_zero():
            return _ZERO
    return out


def count_forced_sigma(dp: "DecoratedPattern") -> int:
    """Number of sigma evaluations on a circled-and-unboxed entry for this
    pattern (the case the published rule leaves open)."""
    if dp.pattern.spec.family != "D":
        return 0
    forced = 0
    for comp in dp.components:
        i = comp.row
        if any(dp.is_circled(i, j) and dp.is_boxed(i, j) for j in range(comp.j1, comp.j2 + 1)):
            continue
        probes: list[int] = []
        if comp.kind == "generic":
            probes = [comp.j2]
        elif comp.kind == "ml":
            probes = [comp.shorter_leg_col]
        elif comp.value != 0:
            probes = [comp.j2] if not dp.is_boxed(comp.row, comp.j2) else [comp.j2, comp.j2 - 1]
        for j in probes:
            if sigma_is_forced(dp.pattern.a(i, j), dp.is_circled(i, j), dp.is_boxed(i, j)):
                forced += 1
    return forced
