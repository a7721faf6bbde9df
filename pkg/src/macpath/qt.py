"""Exact arithmetic in the coefficient field Q(q, v), v**2 = t.

Half-integer powers of t are represented through v, so every graded
statistic in the package is an honest Laurent object: t**(k/2) is the
monomial v**k.  A :class:`LaurentQV` is a finite sum of rational multiples
of q**a * v**b with integer a, b; a :class:`RatQV` is a quotient of two of
them, compared by cross-multiplication.  Formal sums of exponentials e**mu
over the weight lattice live in :class:`CharacterElement`.

No floating point enters anywhere; coefficients are `fractions.Fraction`.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple

import numpy as np

QQ = Fraction

# packed-key DP states (see ramyip/macdonald) switch to int64 vectors when
# the strides allow it; coefficients are signed counts far below int64
NUMPY_KEY_LIMIT = 1 << 62


def merge_packed_contributions(parts):
    """Sum int64 coefficients over equal packed keys; drop zeros."""
    keys = np.concatenate([p[0] for p in parts])
    coeffs = np.concatenate([p[1] for p in parts])
    if len(keys) == 0:
        return keys, coeffs
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    coeffs = coeffs[order]
    starts = np.empty(len(keys), dtype=bool)
    starts[0] = True
    np.not_equal(keys[1:], keys[:-1], out=starts[1:])
    idx = np.flatnonzero(starts)
    sums = np.add.reduceat(coeffs, idx)
    nz = sums != 0
    return keys[idx][nz], sums[nz]

Monomial = Tuple[int, int]  # (exponent of q, exponent of v)


class LaurentQV:
    """Laurent polynomial in q and v with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for key, c in terms.items():
                if c:
                    clean[key] = Fraction(c)
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentQV":
        return LaurentQV()

    @staticmethod
    def one() -> "LaurentQV":
        return LaurentQV({(0, 0): Fraction(1)})

    @staticmethod
    def monomial(qe: int, ve: int, coeff=1) -> "LaurentQV":
        return LaurentQV({(qe, ve): Fraction(coeff)})

    @staticmethod
    def scalar(c) -> "LaurentQV":
        return LaurentQV({(0, 0): Fraction(c)})

    @staticmethod
    def q_power(a: int) -> "LaurentQV":
        return LaurentQV.monomial(a, 0)

    @staticmethod
    def v_power(b: int) -> "LaurentQV":
        return LaurentQV.monomial(0, b)

    @staticmethod
    def t_power(k: int) -> "LaurentQV":
        """t**k as a monomial; t = v**2."""
        return LaurentQV.monomial(0, 2 * k)

    # -- ring structure ------------------------------------------------

    def __add__(self, other: "LaurentQV") -> "LaurentQV":
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        res = LaurentQV.__new__(LaurentQV)
        res.terms = out
        return res

    def __neg__(self) -> "LaurentQV":
        res = LaurentQV.__new__(LaurentQV)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other: "LaurentQV") -> "LaurentQV":
        return self + (-other)

    def __mul__(self, other: "LaurentQV") -> "LaurentQV":
        out: Dict[Monomial, Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                s = out.get(key, Fraction(0)) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        res = LaurentQV.__new__(LaurentQV)
        res.terms = out
        return res

    def scale(self, c) -> "LaurentQV":
        c = Fraction(c)
        if not c:
            return LaurentQV.zero()
        res = LaurentQV.__new__(LaurentQV)
        res.terms = {k: x * c for k, x in self.terms.items()}
        return res

    def shift(self, qe: int, ve: int) -> "LaurentQV":
        """Multiply by the monomial q**qe * v**ve."""
        res = LaurentQV.__new__(LaurentQV)
        res.terms = {(a + qe, b + ve): c for (a, b), c in self.terms.items()}
        return res

    def __pow__(self, n: int) -> "LaurentQV":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentQV.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentQV) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    # -- queries ---------------------------------------------------------

    def min_qdeg(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return min(a for (a, _b) in self.terms)

    def min_vdeg(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return min(b for (_a, b) in self.terms)

    def coeff_of_qpower(self, a: int) -> "LaurentQV":
        """The v-Laurent polynomial multiplying q**a."""
        return LaurentQV({(0, b): c for (qa, b), c in self.terms.items() if qa == a})

    def coeff_of_vpower(self, b: int) -> "LaurentQV":
        return LaurentQV({(a, 0): c for (a, vb), c in self.terms.items() if vb == b})

    def eval_at(self, q0, v0) -> Fraction:
        q0, v0 = Fraction(q0), Fraction(v0)
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            if (a < 0 and q0 == 0) or (b < 0 and v0 == 0):
                raise ZeroDivisionError("negative exponent at zero")
            total += c * q0 ** a * v0 ** b
        return total

    def eval_float(self, q0: float, v0: float) -> float:
        return sum(float(c) * q0 ** a * v0 ** b for (a, b), c in self.terms.items())

    # -- printing ----------------------------------------------------------

    def __repr__(self):
        return f"LaurentQV({self.latex()})"

    def latex(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (a, b), c in sorted(self.terms.items()):
            part = _latex_coeff(c, a, b)
            bits.append(part)
        out = " + ".join(bits)
        return out.replace("+ -", "- ")


def _latex_tpow(b: int) -> str:
    """Render v**b as a power of t (v**2 = t)."""
    if b == 0:
        return ""
    if b % 2 == 0:
        k = b // 2
        return "t" if k == 1 else "t^{%d}" % k
    return "t^{%d/2}" % b


def _latex_coeff(c: Fraction, a: int, b: int) -> str:
    factors = []
    if a:
        factors.append("q" if a == 1 else "q^{%d}" % a)
    tp = _latex_tpow(b)
    if tp:
        factors.append(tp)
    mono = " ".join(factors)
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c} {mono}"


def _content(p: LaurentQV) -> Fraction:
    """Positive rational content of a nonzero Laurent polynomial."""
    from math import gcd

    nums = [abs(c.numerator) for c in p.terms.values()]
    dens = [c.denominator for c in p.terms.values()]
    g = 0
    for n in nums:
        g = gcd(g, n)
    l = 1
    for d in dens:
        l = l * d // gcd(l, d)
    return Fraction(g, l)


class RatQV:
    """Quotient of two LaurentQV; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentQV, den: LaurentQV | None = None):
        if den is None:
            den = LaurentQV.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = LaurentQV.one()
        else:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "RatQV":
        return RatQV(LaurentQV.zero())

    @staticmethod
    def one() -> "RatQV":
        return RatQV(LaurentQV.one())

    @staticmethod
    def scalar(c) -> "RatQV":
        return RatQV(LaurentQV.scalar(c))

    @staticmethod
    def from_laurent(p: LaurentQV) -> "RatQV":
        return RatQV(p)

    @staticmethod
    def _raw(num: LaurentQV, den: LaurentQV) -> "RatQV":
        """Trusted constructor: den already canonical (used for shared
        denominators produced by the character assemblies)."""
        out = RatQV.__new__(RatQV)
        if num.is_zero():
            out.num = num
            out.den = LaurentQV.one()
        else:
            out.num = num
            out.den = den
        return out

    # -- field structure -----------------------------------------------------

    def __add__(self, other: "RatQV") -> "RatQV":
        if self.den == other.den:
            return RatQV(self.num + other.num, self.den)
        return RatQV(self.num * other.den + other.num * self.den,
                     self.den * other.den)

    def __neg__(self) -> "RatQV":
        return RatQV(-self.num, self.den)

    def __sub__(self, other: "RatQV") -> "RatQV":
        return self + (-other)

    def __mul__(self, other: "RatQV") -> "RatQV":
        return RatQV(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RatQV":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatQV(self.den, self.num)

    def __truediv__(self, other: "RatQV") -> "RatQV":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatQV):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatQV is not hashable (no canonical form)")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # -- evaluation and specialization ----------------------------------------

    def eval_at(self, q0, v0) -> Fraction:
        d = self.den.eval_at(q0, v0)
        if d == 0:
            raise ZeroDivisionError(
                f"denominator {self.den.latex()} vanishes at q={q0}, v={v0}")
        return self.num.eval_at(q0, v0) / d

    def eval_float(self, q0: float, v0: float) -> float:
        return self.num.eval_float(q0, v0) / self.den.eval_float(q0, v0)

    def specialize_q0(self) -> "RatQV":
        """Limit q -> 0, after cancelling any common power of q."""
        if self.num.is_zero():
            return RatQV.zero()
        a, b = self.num.min_qdeg(), self.den.min_qdeg()
        if a > b:
            return RatQV.zero()
        if a < b:
            raise ZeroDivisionError("pole at q = 0")
        return RatQV(self.num.coeff_of_qpower(a), self.den.coeff_of_qpower(b))

    def specialize_v0(self) -> "RatQV":
        """Limit v -> 0 (equivalently t -> 0)."""
        if self.num.is_zero():
            return RatQV.zero()
        a, b = self.num.min_vdeg(), self.den.min_vdeg()
        if a > b:
            return RatQV.zero()
        if a < b:
            raise ZeroDivisionError("pole at t = 0")
        return RatQV(self.num.coeff_of_vpower(a), self.den.coeff_of_vpower(b))

    def specialize_q0t0(self) -> Fraction:
        """Value at q = t = 0; requires the iterated limit to be a scalar."""
        r = self.specialize_q0().specialize_v0()
        if r.num.is_zero():
            return Fraction(0)
        if set(r.num.terms) != {(0, 0)} or set(r.den.terms) != {(0, 0)}:
            raise ValueError("limit at q = t = 0 is not a scalar")
        return r.num.terms[(0, 0)] / r.den.terms[(0, 0)]

    def as_scalar(self) -> Fraction:
        """The value of a constant RatQV."""
        if self.num.is_zero():
            return Fraction(0)
        if set(self.den.terms) == {(0, 0)} and set(self.num.terms) <= {(0, 0)}:
            return self.num.terms.get((0, 0), Fraction(0)) / self.den.terms[(0, 0)]
        raise ValueError("not a scalar")

    # -- printing --------------------------------------------------------------

    def __repr__(self):
        return f"RatQV({self.latex()})"

    def latex(self) -> str:
        if self.den == LaurentQV.one():
            return self.num.latex()
        return r"\frac{%s}{%s}" % (self.num.latex(), self.den.latex())


def _normalize(num: LaurentQV, den: LaurentQV) -> Tuple[LaurentQV, LaurentQV]:
    """Shift so the denominator starts at (0, 0), fix content and sign."""
    qa = min(a for (a, _b) in den.terms)
    vb = min(b for (_a, b) in den.terms)
    if (qa, vb) != (0, 0):
        num = num.shift(-qa, -vb)
        den = den.shift(-qa, -vb)
    cn, cd = _content(num), _content(den)
    # divide out the shared rational content only, preserving the value
    from math import gcd

    g = Fraction(gcd(cn.numerator, cd.numerator),
                 (cn.denominator * cd.denominator) //
                 gcd(cn.denominator, cd.denominator))
    if g and g != 1:
        inv = 1 / g
        num = num.scale(inv)
        den = den.scale(inv)
    lead = den.terms[min(den.terms)]
    if lead < 0:
        num = num.scale(-1)
        den = den.scale(-1)
    return num, den


def jack_limit(b: Fraction, lam_pairing: int, rho_pairing: int,
               gamma: Fraction) -> Fraction:
    """q -> 1 limit of a single edge degree under t = q**gamma.

    Both Bruhat and quantum edge factors tend to
    1 / (gamma**-1 * b * <lambda, beta^vee> + <rho, beta^vee>); the power-of-q
    and power-of-t prefactors tend to 1.
    """
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    return 1 / ((1 / gamma) * Fraction(b) * lam_pairing + rho_pairing)


# ---------------------------------------------------------------------------
# Factored sums: Laurent numerator over a multiset of (1 - q^a t^c) factors.
# ---------------------------------------------------------------------------


def factor_poly(a: int, c: int) -> LaurentQV:
    """The denominator factor 1 - q**a t**c."""
    return LaurentQV({(0, 0): Fraction(1), (a, 2 * c): Fraction(-1)})


# ---------------------------------------------------------------------------
# Formal sums over the weight lattice.
# ---------------------------------------------------------------------------


class CharacterElement:
    """Finite formal sum of e**mu with RatQV coefficients.

    Weights are tuples of integers in the fundamental-weight basis.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, RatQV] | None = None):
        clean: Dict[tuple, RatQV] = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    clean[tuple(w)] = c
        self.terms = clean

    @staticmethod
    def exponential(weight: Iterable[int]) -> "CharacterElement":
        return CharacterElement({tuple(weight): RatQV.one()})

    def coeff(self, weight: Iterable[int]) -> RatQV:
        return self.terms.get(tuple(weight), RatQV.zero())

    def weights(self) -> Iterator[tuple]:
        return iter(self.terms)

    def __add__(self, other: "CharacterElement") -> "CharacterElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        res = CharacterElement.__new__(CharacterElement)
        res.terms = out
        return res

    def scale(self, c: RatQV) -> "CharacterElement":
        if c.is_zero():
            return CharacterElement()
        return CharacterElement({w: x * c for w, x in self.terms.items()})

    def map_weights(self, f) -> "CharacterElement":
        """Apply a weight map (e.g. a Weyl group element) to every exponent."""
        out = CharacterElement()
        for w, c in self.terms.items():
            out = out + CharacterElement({tuple(f(w)): c})
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterElement):
            return NotImplemented
        return char_equal(self, other)

    def __repr__(self):
        bits = [f"e^{w}: {c.latex()}" for w, c in sorted(self.terms.items())]
        return "CharacterElement{" + ", ".join(bits) + "}"

    def latex(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w, c in sorted(self.terms.items()):
            bits.append(r"\left(%s\right) e^{%s}" % (c.latex(), list(w)))
        return " + ".join(bits)


def _random_point(rng: random.Random) -> Tuple[Fraction, Fraction]:
    q0 = Fraction(rng.randint(2, 97), rng.randint(2, 97))
    v0 = Fraction(rng.randint(2, 97), rng.randint(2, 97))
    return q0, v0


def ratqv_equal(a: RatQV, b: RatQV, rng: random.Random | None = None,
                npoints: int = 20) -> bool:
    """Exact equality, with a random-evaluation filter ahead of the
    cross-multiplication when the denominators differ."""
    if a.den == b.den:
        return a.num == b.num
    if rng is not None:
        tried = 0
        while tried < npoints:
            q0, v0 = _random_point(rng)
            try:
                if a.eval_at(q0, v0) != b.eval_at(q0, v0):
                    return False
            except ZeroDivisionError:
                continue
            tried += 1
    return a == b


def char_equal(a: CharacterElement, b: CharacterElement,
               rng: random.Random | None = None, npoints: int = 20) -> bool:
    """Exact equality of two character elements, weight by weight."""
    for w in set(a.terms) | set(b.terms):
        if not ratqv_equal(a.coeff(w), b.coeff(w), rng=rng, npoints=npoints):
            return False
    return True


# ---------------------------------------------------------------------------
# JSON round-tripping.
# ---------------------------------------------------------------------------


def laurent_to_json(p: LaurentQV) -> list:
    return [[a, b, str(c)] for (a, b), c in sorted(p.terms.items())]


def laurent_from_json(data: list) -> LaurentQV:
    return LaurentQV({(int(a), int(b)): Fraction(c) for a, b, c in data})


def ratqv_to_json(x: RatQV) -> dict:
    return {"num": laurent_to_json(x.num), "den": laurent_to_json(x.den)}


def ratqv_from_json(data: dict) -> RatQV:
    return RatQV(laurent_from_json(data["num"]), laurent_from_json(data["den"]))


def character_to_json(ch: CharacterElement) -> list:
    return [{"weight": list(w), "coeff": ratqv_to_json(c)}
            for w, c in sorted(ch.terms.items())]


def character_from_json(data: list) -> CharacterElement:
    out = CharacterElement()
    for item in data:
        out = out + CharacterElement(
            {tuple(item["weight"]): ratqv_from_json(item["coeff"])})
    return out


def character_to_json_str(ch: CharacterElement) -> str:
    return json.dumps(character_to_json(ch), indent=2, sort_keys=True)
