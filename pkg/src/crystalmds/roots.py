"""Exact root-system data for types A/B/C/D in Littelmann's numbering.

The numbering runs the Dynkin diagram mirror-image to Bourbaki: index 1 is
the short simple root in type B, the long simple root in type C, and indices
1 and 2 are the two orthogonal fork-end roots in type D.  With this choice
the rank-(r-1) subsystem spanned by indices 1..r-1 is of the same family,
which is what makes top-row deletion of patterns a branching operation.

Weights are plain integer tuples in the fundamental-weight basis throughout
the package; all linear algebra is exact (integers and Fractions).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import heapq

from .weightpoly import Weight, WeightPolynomial, poly_from_int_terms

FAMILIES = ("A", "B", "C", "D")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True)
class CartanSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"family {self.family} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}")

    def positive_root_count(self) -> int:
        r = self.rank
        if self.family == "A":
            return r * (r + 1) // 2
        if self.family == "D":
            return r * r - r
        return r * r


@dataclass(frozen=True)
class WeylWord:
    letters: tuple[int, ...]
    reduced: bool = True

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class RootSystem:
    """Cartan data plus derived exact structures.

    ``cartan[i][j]`` is the pairing of the j-th simple root against the i-th
    simple coroot (0-based storage, 1-based indices in the API).  Columns of
    the Cartan matrix are the simple roots in fundamental-weight coordinates.
    """

    spec: CartanSpec
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[Weight, ...]                  # fundamental-weight coords
    positive_roots_root_coords: tuple[tuple[int, ...], ...]
    height_vec: tuple[int, ...]                          # integer-scaled height functional

    # -- basic data ---------------------------------------------------------
    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def family(self) -> str:
        return self.spec.family

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def simple_root(self, k: int) -> Weight:
        """k-th simple root (1-based) in fundamental-weight coordinates."""
        return tuple(self.cartan[i][k - 1] for i in range(self.rank))

    def fundamental_weight_in_root_basis(self, k: int) -> tuple[Fraction, ...]:
        return tuple(self.cartan_inverse[j][k - 1] for j in range(self.rank))

    # -- weight operations ----------------------------------------------------
    def reflect(self, w: Weight, k: int) -> Weight:
        """Simple reflection through the k-th simple root (1-based)."""
        c = w[k - 1]
        if c == 0:
            return tuple(w)
        col = self.cartan
        return tuple(w[i] - c * col[i][k - 1] for i in range(self.rank))

    def dominant_representative(self, w: Weight) -> Weight:
        v = tuple(w)
        while True:
            for i, c in enumerate(v):
                if c < 0:
                    v = self.reflect(v, i + 1)
                    break
            else:
                return v

    def root_coordinates(self, w: Weight) -> tuple[Fraction, ...]:
        """Coordinates of a lattice point in the simple-root basis (exact)."""
        ainv = self.cartan_inverse
        return tuple(sum(ainv[k][i] * w[i] for i in range(self.rank))
                     for k in range(self.rank))

    def bilinear(self, u: Weight, v) -> Fraction:
        """Weyl-invariant symmetric form, normalized so B(alpha, alpha)/2 is
        the symmetrizer entry of each simple root."""
        cu = self.root_coordinates(u)
        d = self.symmetrizer
        return sum(cu[k] * d[k] * v[k] for k in range(self.rank))

    def height(self, w: Weight) -> Fraction:
        return sum(self.root_coordinates(w))

    def weight_sort_key(self, w: Weight):
        return (sum(h * c for h, c in zip(self.height_vec, w)), tuple(w))

    def zero_polynomial(self, meta: dict | None = None) -> WeightPolynomial:
        return WeightPolynomial(self.height_vec, {}, meta)


def is_dominant(w: Weight) -> bool:
    return all(c >= 0 for c in w)


def is_strongly_dominant(w: Weight) -> bool:
    return all(c >= 1 for c in w)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _cartan_matrix(spec: CartanSpec) -> list[list[int]]:
    r = spec.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def chain(i, j):
        a[i][j] = a[j][i] = -1

    if spec.family == "A":
        for i in range(r - 1):
            chain(i, i + 1)
    elif spec.family == "B":
        # index 1 short: its coroot pairs -2 against the long neighbour
        a[0][1] = -2
        a[1][0] = -1
        for i in range(1, r - 1):
            chain(i, i + 1)
    elif spec.family == "C":
        # index 1 long: the short neighbour's coroot pairs -2 against it
        a[0][1] = -1
        a[1][0] = -2
        for i in range(1, r - 1):
            chain(i, i + 1)
    else:  # D: fork ends first, both attached to index 3
        chain(0, 2)
        chain(1, 2)
        for i in range(2, r - 1):
            chain(i, i + 1)
    return a


def _symmetrizer(spec: CartanSpec) -> tuple[Fraction, ...]:
    r = spec.rank
    if spec.family == "B":
        return (Fraction(1),) + (Fraction(2),) * (r - 1)
    if spec.family == "C":
        return (Fraction(2),) + (Fraction(1),) * (r - 1)
    return (Fraction(1),) * r


def _invert(mat: list[list[int]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(row for row in range(col, n) if aug[row][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for row in range(n):
            if row != col and aug[row][col]:
                f = aug[row][col]
                aug[row] = [x - f * y for x, y in zip(aug[row], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def build_root_system(spec: CartanSpec) -> RootSystem:
    """Assemble the exact root system for a validated Cartan spec."""
    r = spec.rank
    cartan = _cartan_matrix(spec)
    ainv = _invert(cartan)
    d = _symmetrizer(spec)

    # Reflection closure of the simple roots; positives have nonnegative
    # root coordinates.
    simple_wt = [tuple(cartan[i][k] for i in range(r)) for k in range(r)]
    seen: dict[Weight, tuple[int, ...]] = {}
    frontier = []
    for k in range(r):
        rc = tuple(int(i == k) for i in range(r))
        seen[simple_wt[k]] = rc
        frontier.append((simple_wt[k], rc))
    while frontier:
        nxt = []
        for wt, rc in frontier:
            for k in range(r):
                c = wt[k]
                if c == 0:
                    continue
                nwt = tuple(wt[i] - c * cartan[i][k] for i in range(r))
                if nwt in seen:
                    continue
                nrc = tuple(rc[i] - c * int(i == k) for i in range(r))
                seen[nwt] = nrc
                nxt.append((nwt, nrc))
        frontier = nxt
    positives = sorted(
        ((wt, rc) for wt, rc in seen.items() if all(x >= 0 for x in rc)),
        key=lambda p: (sum(p[1]), p[1]),
    )
    if len(positives) != spec.positive_root_count():
        raise AssertionError(
            f"positive-root closure produced {len(positives)} roots for {spec}, "
            f"expected {spec.positive_root_count()}")

    colsums = [sum(ainv[k][i] for k in range(r)) for i in range(r)]
    scale = 1
    for c in colsums:
        scale = scale * c.denominator // _gcd(scale, c.denominator)
    height_vec = tuple(int(c * scale) for c in colsums)

    return RootSystem(
        spec=spec,
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizer=d,
        cartan_inverse=tuple(tuple(row) for row in ainv),
        positive_roots=tuple(wt for wt, _ in positives),
        positive_roots_root_coords=tuple(rc for _, rc in positives),
        height_vec=height_vec,
    )


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# The distinguished reduced word for the long element
# ---------------------------------------------------------------------------

def nice_long_word(spec: CartanSpec) -> WeylWord:
    """The family's distinguished long word: rank r extends rank r-1 by one
    block of new letters, so the rank-(r-1) word is a prefix."""
    r = spec.rank
    letters: list[int] = []
    if spec.family == "A":
        for k in range(1, r + 1):
            letters.extend(range(k, 0, -1))
    elif spec.family in ("B", "C"):
        letters.append(1)
        for k in range(2, r + 1):
            letters.extend(range(k, 0, -1))
            letters.extend(range(2, k + 1))
    else:
        letters.extend((1, 2))
        for k in range(3, r + 1):
            letters.extend(range(k, 2, -1))
            letters.extend((1, 2))
            letters.extend(range(3, k + 1))
    word = WeylWord(tuple(letters), reduced=True)
    if len(word) != spec.positive_root_count():
        raise AssertionError(f"long word for {spec} has wrong length {len(word)}")
    return word


# ---------------------------------------------------------------------------
# Character and dimension (independent of the pattern enumerator)
# ---------------------------------------------------------------------------

def _signed_orbit(rs: RootSystem, v: Weight) -> dict[Weight, int]:
    """x^{w(v)} summed over the Weyl group with sign (-1)^{length(w)}.

    ``v`` must be strongly dominant so the orbit is free and breadth-first
    layers realize the length function.
    """
    if not is_strongly_dominant(v):
        raise ValueError("signed orbit needs a strongly dominant base point")
    out = {tuple(v): 1}
    frontier = [tuple(v)]
    sign = 1
    while frontier:
        sign = -sign
        nxt = []
        for w in frontier:
            for k in range(1, rs.rank + 1):
                img = rs.reflect(w, k)
                if img not in out:
                    out[img] = sign
                    nxt.append(img)
        frontier = nxt
    return out


def _divide_int_polys(rs: RootSystem, numer: dict[Weight, int],
                      denom: dict[Weight, int]) -> dict[Weight, int]:
    """Exact division of integer weight polynomials by descending leading-term
    elimination; raises if a remainder survives."""
    key = rs.weight_sort_key
    lead_w = max(denom, key=key)
    lead_c = denom[lead_w]
    rem = dict(numer)
    heap: list[tuple] = []
    for w in rem:
        hk, tw = key(w)
        heapq.heappush(heap, (-hk, tuple(-x for x in tw), w))
    quot: dict[Weight, int] = {}
    while rem:
        while heap:
            _, _, w = heap[0]
            if w in rem:
                break
            heapq.heappop(heap)
        c = rem[w]
        if c % lead_c:
            raise ArithmeticError("inexact character division")
        qc = c // lead_c
        gamma = tuple(a - b for a, b in zip(w, lead_w))
        quot[gamma] = quot.get(gamma, 0) + qc
        for dw, dc in denom.items():
            tw = tuple(a + b for a, b in zip(gamma, dw))
            upd = rem.get(tw, 0) - qc * dc
            if upd:
                if tw not in rem:
                    hk, t = key(tw)
                    heapq.heappush(heap, (-hk, tuple(-x for x in t), tw))
                rem[tw] = upd
            else:
                rem.pop(tw, None)
    return quot


def weyl_character(rs: RootSystem, lam: Weight) -> WeightPolynomial:
    """Highest-weight character via the alternating orbit sum divided exactly
    by the Weyl denominator."""
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise ValueError("weight has wrong rank")
    if not is_dominant(lam):
        raise ValueError(f"character requires a dominant weight, got {lam}")
    shifted = tuple(c + 1 for c in lam)
    numer = _signed_orbit(rs, shifted)
    denom = _signed_orbit(rs, rs.rho)
    table = _divide_int_polys(rs, numer, denom)
    meta = {"family": rs.family, "rank": rs.rank, "lambda": list(lam)}
    return poly_from_int_terms(rs.height_vec, table, meta)


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the highest-weight representation, exact product formula."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"dimension requires a dominant weight, got {lam}")
    d = rs.symmetrizer
    num = Fraction(1)
    shifted = tuple(c + 1 for c in lam)
    for rc in rs.positive_roots_root_coords:
        top = sum(rc[k] * d[k] * shifted[k] for k in range(rs.rank))
        bot = sum(rc[k] * d[k] for k in range(rs.rank))
        num *= Fraction(top, bot)
    if num.denominator != 1:
        raise AssertionError("Weyl dimension did not reduce to an integer")
    return int(num)


def character_dimension(poly: WeightPolynomial) -> int:
    """Sum of integer coefficients (evaluation at the all-ones point)."""
    total = 0
    for _, coeff in poly.terms.items():
        mons = coeff.monomials()
        for c, e, g in mons:
            if g or e != 0:
                raise ValueError("character polynomial has non-constant coefficients")
            total += c
    return total


def weight_in_hull(rs: RootSystem, lam: Weight, w: Weight) -> bool:
    """Membership of a lattice point in the convex hull of the Weyl orbit of
    a dominant weight: the dominant representative must sit under ``lam`` in
    the rational dominance order."""
    dom = rs.dominant_representative(w)
    diff = tuple(a - b for a, b in zip(lam, dom))
    return all(c >= 0 for c in rs.root_coordinates(diff))
