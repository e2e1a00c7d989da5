"""Exact arithmetic for quadratic surds, integer relation lattices, and
characteristic polynomials over GF(2).

Values of the form q0 + sum qi*sqrt(di) (qi rational, di square-free) carry
the spectra of every construction in this package exactly.  Transcendental
parameters (pi, loop weights, ...) ride along as named symbols assumed
Q-linearly independent of the radicals and of each other; that assumption
is the caller's to make and is recorded wherever it matters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Rational = Union[int, Fraction]


class DimensionTooLarge(ValueError):
    """Exhaustive relation probe would exceed its enumeration budget."""


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (x, y, g) with x*a + y*b == g == gcd(a, b)."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def square_free_part(n: int) -> tuple[int, int]:
    """Decompose n = s * k**2 with s square-free.  Trial division; n >= 1."""
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    s, k = 1, 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            k *= d ** (e // 2)
            if e % 2:
                s *= d
        d += 1 if d == 2 else 2
    return s * n, k


@dataclass(frozen=True)
class Transcendental:
    """A named real number assumed transcendental (or at least irrational and
    Q-independent from every radical and other symbol in play)."""

    name: str
    value: float

    def __repr__(self) -> str:
        return self.name


PI = Transcendental("pi", math.pi)


class Surd:
    """Exact value rational + sum(coeff * sqrt(d)) + sum(coeff * symbol).

    Radical keys are normalized square-free integers > 1, so structural
    equality is exact equality ({1, sqrt(d1), sqrt(d2), ...} is Q-linearly
    independent for distinct square-free di).  Immutable and hashable.
    """

    __slots__ = ("_rat", "_rad", "_sym")

    def __init__(self, rational: Rational = 0, radicals=None, symbols=None):
        rat = Fraction(rational)
        rad: dict[int, Fraction] = {}
        for d, c in dict(radicals or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            s, k = square_free_part(int(d))
            if s == 1:
                rat += c * k
            else:
                rad[s] = rad.get(s, Fraction(0)) + c * k
        sym: dict[Transcendental, Fraction] = {}
        for t, c in dict(symbols or {}).items():
            c = Fraction(c)
            if c != 0:
                sym[t] = sym.get(t, Fraction(0)) + c
        self._rat = rat
        self._rad = tuple(sorted((d, c) for d, c in rad.items() if c))
        self._sym = tuple(sorted(((t, c) for t, c in sym.items() if c),
                                 key=lambda p: p[0].name))

    @classmethod
    def sqrt(cls, n: int, coeff: Rational = 1) -> "Surd":
        """coeff * sqrt(n) for a positive integer n, normalized square-free."""
        return cls(0, {n: coeff})

    @classmethod
    def symbol(cls, t: Transcendental, coeff: Rational = 1) -> "Surd":
        return cls(0, None, {t: coeff})

    @property
    def rational_part(self) -> Fraction:
        return self._rat

    @property
    def radical_terms(self) -> dict[int, Fraction]:
        return dict(self._rad)

    @property
    def symbol_terms(self) -> dict[Transcendental, Fraction]:
        return dict(self._sym)

    @property
    def has_symbols(self) -> bool:
        return bool(self._sym)

    def coefficients(self) -> dict[tuple, Fraction]:
        """Coefficient vector over the basis {1} | {sqrt(d)} | {symbols}."""
        out: dict[tuple, Fraction] = {}
        if self._rat:
            out[("rat",)] = self._rat
        for d, c in self._rad:
            out[("rad", d)] = c
        for t, c in self._sym:
            out[("sym", t.name)] = c
        return out

    def is_zero(self) -> bool:
        return not self._rat and not self._rad and not self._sym

    def is_rational(self) -> bool:
        return not self._rad and not self._sym

    def __float__(self) -> float:
        x = float(self._rat)
        for d, c in self._rad:
            x += float(c) * math.sqrt(d)
        for t, c in self._sym:
            x += float(c) * t.value
        return x

    def __add__(self, other) -> "Surd":
        other = _as_surd(other)
        if other is NotImplemented:
            return NotImplemented
        return Surd(self._rat + other._rat,
                    _merge(self._rad, other._rad),
                    _merge(self._sym, other._sym))

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self._rat,
                    {d: -c for d, c in self._rad},
                    {t: -c for t, c in self._sym})

    def __sub__(self, other) -> "Surd":
        other = _as_surd(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Surd":
        return _as_surd(other) - self

    def __mul__(self, q) -> "Surd":
        if not isinstance(q, (int, Fraction)):
            return NotImplemented
        return Surd(self._rat * q,
                    {d: c * q for d, c in self._rad},
                    {t: c * q for t, c in self._sym})

    __rmul__ = __mul__

    def __truediv__(self, q) -> "Surd":
        if not isinstance(q, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(q))

    def __eq__(self, other) -> bool:
        other = _as_surd(other)
        if other is NotImplemented:
            return NotImplemented
        return (self._rat == other._rat and self._rad == other._rad
                and self._sym == other._sym)

    def __hash__(self):
        return hash((self._rat, self._rad, self._sym))

    def ratio(self, other: "Surd") -> Optional[Fraction]:
        """Return q with self == q * other, or None if no rational q exists.

        other must be nonzero."""
        other = _as_surd(other)
        if other.is_zero():
            raise ZeroDivisionError("ratio against zero")
        if self.is_zero():
            return Fraction(0)
        mine, theirs = self.coefficients(), other.coefficients()
        if set(mine) != set(theirs):
            return None
        key = next(iter(theirs))
        q = mine[key] / theirs[key]
        return q if all(mine[k] == q * theirs[k] for k in theirs) else None

    def __repr__(self) -> str:
        parts = []
        if self._rat or (not self._rad and not self._sym):
            parts.append(str(self._rat))
        for d, c in self._rad:
            parts.append(f"{c}*sqrt({d})")
        for t, c in self._sym:
            parts.append(f"{c}*{t.name}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        out = {"rat": str(self._rat),
               "terms": {str(d): str(c) for d, c in self._rad}}
        if self._sym:
            out["syms"] = {t.name: {"coeff": str(c), "value": t.value}
                           for t, c in self._sym}
        return out

    @classmethod
    def from_json(cls, d: dict) -> "Surd":
        rad = {int(k): Fraction(v) for k, v in d.get("terms", {}).items()}
        sym = {Transcendental(k, float(v["value"])): Fraction(v["coeff"])
               for k, v in d.get("syms", {}).items()}
        return cls(Fraction(d.get("rat", "0")), rad, sym)


def _as_surd(x) -> Surd:
    if isinstance(x, Surd):
        return x
    if isinstance(x, (int, Fraction)):
        return Surd(x)
    return NotImplemented


def _merge(a: Sequence[tuple], b: Sequence[tuple]) -> dict:
    out = dict(a)
    for k, c in b:
        out[k] = out.get(k, Fraction(0)) + c
    return out


# ---------------------------------------------------------------------------
# Integer kernels and relation lattices
# ---------------------------------------------------------------------------

def integer_kernel(rows: Sequence[Sequence[Rational]], dim: int) -> list[list[int]]:
    """Saturated basis of {x in Z^dim : M x = 0} for a rational matrix M.

    Clears denominators row-wise, then runs fraction-free (integer) row
    elimination on [M^T | I]: unimodular row operations preserve the row
    lattice, so the identity-part of every row whose M^T-part vanishes is a
    kernel member, and together those rows form a basis of the full integer
    kernel (no finite-index defect).
    """
    cleared: list[list[int]] = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        if len(fr) != dim:
            raise ValueError("row length mismatch")
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        ints = [int(f * den) for f in fr]
        if any(ints):
            cleared.append(ints)
    b = len(cleared)
    # work rows: [column j of M | e_j]
    work = [[cleared[i][j] for i in range(b)] + [int(jj == j) for jj in range(dim)]
            for j in range(dim)]
    frontier = 0
    for c in range(b):
        piv = next((i for i in range(frontier, dim) if work[i][c]), None)
        if piv is None:
            continue
        work[frontier], work[piv] = work[piv], work[frontier]
        for i in range(frontier + 1, dim):
            if not work[i][c]:
                continue
            a_, b_ = work[frontier][c], work[i][c]
            x, y, g = xgcd(a_, b_)
            ag, bg = a_ // g, b_ // g
            top, bot = work[frontier], work[i]
            for jj in range(c, b + dim):
                t, u = top[jj], bot[jj]
                top[jj] = x * t + y * u
                bot[jj] = -bg * t + ag * u
        frontier += 1
    return [_canonical_sign(row[b:]) for row in work[frontier:]]


def _canonical_sign(v: list[int]) -> list[int]:
    lead = next((x for x in v if x), 0)
    return [-x for x in v] if lead < 0 else list(v)


class RelationLattice:
    """Basis of {l in Z^d : sum l_r * values_r == 0}."""

    def __init__(self, generators: Iterable[Sequence[int]], dim: int):
        self.dim = dim
        self.generators = [list(map(int, g)) for g in generators]
        for g in self.generators:
            if len(g) != dim:
                raise ValueError("generator length mismatch")
        self._echelon = _echelonize(self.generators, dim)

    @property
    def rank(self) -> int:
        return len(self._echelon)

    def contains(self, vec: Sequence[int]) -> bool:
        v = [int(x) for x in vec]
        if len(v) != self.dim:
            return False
        for row, piv in self._echelon:
            if v[piv] == 0:
                continue
            q, r = divmod(v[piv], row[piv])
            if r:
                return False
            for j in range(self.dim):
                v[j] -= q * row[j]
        return not any(v)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def to_json(self) -> dict:
        return {"dim": self.dim, "generators": self.generators}


def _echelonize(gens: list[list[int]], dim: int) -> list[tuple[list[int], int]]:
    rows = [list(g) for g in gens if any(g)]
    out: list[tuple[list[int], int]] = []
    for c in range(dim):
        live = [r for r in rows if r[c]]
        if not live:
            continue
        piv = live[0]
        for r in live[1:]:
            a_, b_ = piv[c], r[c]
            x, y, g = xgcd(a_, b_)
            ag, bg = a_ // g, b_ // g
            for j in range(dim):
                t, u = piv[j], r[j]
                piv[j] = x * t + y * u
                r[j] = -bg * t + ag * u
        rows.remove(piv)
        out.append((piv, c))
        rows = [r for r in rows if any(r)]
    return out


def relation_lattice(values: Sequence[Surd]) -> RelationLattice:
    """Full integer relation lattice of a list of exact values.

    Rows of the coefficient matrix are the basis elements appearing in the
    inputs (1, each sqrt(d), each symbol); the kernel is computed exactly.
    """
    values = [_as_surd(v) for v in values]
    if not values:
        raise ValueError("need at least one value")
    keys = sorted({k for v in values for k in v.coefficients()})
    rows = [[v.coefficients().get(k, Fraction(0)) for v in values] for k in keys]
    return RelationLattice(integer_kernel(rows, len(values)), len(values))


_PROBE_BUDGET = 2_000_000


def float_relation_probe(values: Sequence[float], bound: int,
                         tol: float = 1e-9) -> list[tuple[int, ...]]:
    """Exhaustive search for integer vectors l, |l|_inf <= bound, with
    |sum l_r v_r| <= tol.  Advisory only -- float evidence, never a proof.

    Vectors are canonicalized so their first nonzero entry is positive.
    """
    if bound > 50:
        raise ValueError("bound must be <= 50")
    d = len(values)
    if d * math.log(2 * bound + 1) > math.log(_PROBE_BUDGET):
        raise DimensionTooLarge(
            f"(2*{bound}+1)^{d} exceeds the enumeration budget")
    out = []
    radix = 2 * bound + 1
    for code in range(radix ** d):
        vec = []
        x = code
        for _ in range(d):
            vec.append(x % radix - bound)
            x //= radix
        if not any(vec):
            continue
        if next(v for v in vec if v) < 0:
            continue
        if abs(sum(l * v for l, v in zip(vec, values))) <= tol:
            out.append(tuple(vec))
    return out


# ---------------------------------------------------------------------------
# Polynomials over GF(2)
# ---------------------------------------------------------------------------

class Poly2:
    """Polynomial over Z2, coefficients ascending by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        bits = [int(c) % 2 for c in coeffs]
        while bits and bits[-1] == 0:
            bits.pop()
        self.coeffs = tuple(bits)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "Poly2") -> "Poly2":
        if not self.coeffs or not other.coeffs:
            return Poly2([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] ^= b
        return Poly2(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly2) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                terms.append("1" if i == 0 else ("t" if i == 1 else f"t^{i}"))
        return " + ".join(terms)


def charpoly_int(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Integer coefficients of det(tI - A), descending, via the
    division-free Berkowitz recursion."""
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return [1]
    coeffs = [1, -a[0][0]]
    for r in range(2, n + 1):
        row_r = a[r - 1][:r - 1]
        col_r = [a[i][r - 1] for i in range(r - 1)]
        vec = [1, -a[r - 1][r - 1]]
        w = col_r
        for _ in range(r - 1):
            vec.append(-sum(row_r[i] * w[i] for i in range(r - 1)))
            w = [sum(a[i][j] * w[j] for j in range(r - 1)) for i in range(r - 1)]
        new = [0] * (r + 1)
        for i in range(r + 1):
            s = 0
            for j in range(len(coeffs)):
                if 0 <= i - j < len(vec):
                    s += vec[i - j] * coeffs[j]
            new[i] = s
        coeffs = new
    return coeffs


def charpoly_mod2(matrix: Sequence[Sequence[int]]) -> Poly2:
    """Characteristic polynomial of an integer matrix reduced mod 2,
    ascending coefficients."""
    rows = [list(r) for r in matrix]
    for i, row in enumerate(rows):
        for j in range(len(rows)):
            if row[j] != rows[j][i]:
                raise ValueError("adjacency matrix must be symmetric")
    desc = charpoly_int(rows)
    return Poly2(list(reversed(desc)))


def poly_from_roots_mod2(roots: Sequence[int]) -> Poly2:
    """Monic product of (t - r) over Z2."""
    p = Poly2([1])
    for r in roots:
        p = p * Poly2([(-int(r)) % 2, 1])
    return p
