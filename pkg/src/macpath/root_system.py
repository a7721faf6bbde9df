"""Finite root systems and Weyl groups, in exact integer coordinates.

Coordinates: roots live in the simple-root basis, coroots in the
simple-coroot basis, weights in the fundamental-weight basis.  With the
Cartan matrix entry ``cartan[i][j] = <alpha_j, alpha_i^vee>`` every pairing
used downstream is an integer dot product:

    <mu, beta^vee>  =  sum_i mu[i] * coroot_coords(beta)[i]

A Weyl group element is stored as the permutation it induces on the set of
all roots (positive roots first, then their negatives); the permutation is
the canonical form used for equality and hashing, and the negatives-count
in its first half is the length.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

Coords = Tuple[int, ...]

WEYL_ORDER = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2 ** n * _factorial(n),
    "C": lambda n: 2 ** n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}

WEYL_ENUMERATION_CAP = 50000


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def cartan_matrix(letter: str, n: int) -> Tuple[Coords, ...]:
    """Cartan matrix with entries <alpha_j, alpha_i^vee>, Bourbaki numbering."""
    def chain(pairs):
        m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j, a, b in pairs:
            m[i][j] = a
            m[j][i] = b
        return tuple(tuple(row) for row in m)

    simple = [(i, i + 1, -1, -1) for i in range(n - 1)]
    if letter == "A":
        if n < 1:
            raise ValueError("type A needs rank >= 1")
        return chain(simple)
    if letter == "B":
        if n < 2:
            raise ValueError("type B needs rank >= 2")
        # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        return chain(simple[:-1] + [(n - 2, n - 1, -1, -2)])
    if letter == "C":
        if n < 2:
            raise ValueError("type C needs rank >= 2")
        return chain(simple[:-1] + [(n - 2, n - 1, -2, -1)])
    if letter == "D":
        if n < 4:
            raise ValueError("type D needs rank >= 4")
        pairs = [(i, i + 1, -1, -1) for i in range(n - 3)]
        pairs += [(n - 3, n - 2, -1, -1), (n - 3, n - 1, -1, -1)]
        return chain(pairs)
    if letter == "E":
        if n not in (6, 7, 8):
            raise ValueError("type E needs rank 6, 7 or 8")
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        edges += [(5, 6)] if n >= 7 else []
        edges += [(6, 7)] if n == 8 else []
        return chain([(i, j, -1, -1) for i, j in edges])
    if letter == "F":
        if n != 4:
            raise ValueError("type F needs rank 4")
        return chain([(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)])
    if letter == "G":
        if n != 2:
            raise ValueError("type G needs rank 2")
        # alpha_1 short: <alpha_2, alpha_1^vee> = -3
        return chain([(0, 1, -3, -1)])
    raise ValueError(f"unsupported Cartan type {letter!r}")


def parse_cartan_type(label: str) -> Tuple[str, int]:
    label = label.strip()
    if len(label) < 2 or label[0].upper() not in "ABCDEFG":
        raise ValueError(f"cannot parse Cartan type {label!r}")
    try:
        rank = int(label[1:])
    except ValueError:
        raise ValueError(f"cannot parse Cartan type {label!r}") from None
    return label[0].upper(), rank


class RootSystem:
    """Immutable root/coroot/weight data for one finite Cartan type."""

    def __init__(self, letter: str, rank: int):
        self.letter = letter
        self.rank = rank
        self.type_label = f"{letter}{rank}"
        self.cartan = cartan_matrix(letter, rank)
        self._build_roots()
        self.rho = (1,) * rank
        self.weyl_order = WEYL_ORDER[letter](rank)
        self._weyl_table = None
        self._bruhat_cache: Dict[Tuple[int, ...], FrozenSet[Tuple[int, ...]]] = {}

    # -- construction -------------------------------------------------------

    def _reflect_root(self, i: int, c: Coords) -> Coords:
        pairing = sum(self.cartan[i][j] * c[j] for j in range(self.rank))
        out = list(c)
        out[i] -= pairing
        return tuple(out)

    def _reflect_coroot(self, i: int, d: Coords) -> Coords:
        pairing = sum(self.cartan[j][i] * d[j] for j in range(self.rank))
        out = list(d)
        out[i] -= pairing
        return tuple(out)

    def _build_roots(self) -> None:
        n = self.rank
        simple = []
        for i in range(n):
            e = tuple(1 if j == i else 0 for j in range(n))
            simple.append((e, e))
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for c, d in frontier:
                for i in range(n):
                    pair = (self._reflect_root(i, c), self._reflect_coroot(i, d))
                    if pair not in seen:
                        seen.add(pair)
                        nxt.append(pair)
            frontier = nxt
        pos = sorted((p for p in seen if all(x >= 0 for x in p[0])),
                     key=lambda p: (sum(p[0]), p[0]))
        self.npos = len(pos)
        roots = [p[0] for p in pos] + [tuple(-x for x in p[0]) for p in pos]
        coroots = [p[1] for p in pos] + [tuple(-x for x in p[1]) for p in pos]
        self.roots: Tuple[Coords, ...] = tuple(roots)
        self.coroots: Tuple[Coords, ...] = tuple(coroots)
        self.root_index: Dict[Coords, int] = {c: k for k, c in enumerate(roots)}
        self.simple_indices: Tuple[int, ...] = tuple(
            self.root_index[tuple(1 if j == i else 0 for j in range(n))]
            for i in range(n))
        # weight coordinates of each root: wc[i] = <root, alpha_i^vee>
        self.root_weight_coords: Tuple[Coords, ...] = tuple(
            tuple(sum(self.cartan[i][j] * c[j] for j in range(n)) for i in range(n))
            for c in roots)
        self.coroot_heights: Tuple[int, ...] = tuple(sum(d) for d in coroots)
        heights = [sum(c) for c in roots[:self.npos]]
        self.highest_root_index = max(range(self.npos), key=lambda k: heights[k])
        self.highest_short_root_index = max(
            range(self.npos), key=lambda k: self.coroot_heights[k])

    # -- basic queries --------------------------------------------------------

    def negate_index(self, k: int) -> int:
        return k + self.npos if k < self.npos else k - self.npos

    def is_positive_index(self, k: int) -> bool:
        return k < self.npos

    def positive_root_indices(self) -> range:
        return range(self.npos)

    def pair_weight_coroot(self, mu: Sequence, k: int) -> int:
        """<mu, beta^vee> for the root with index k."""
        d = self.coroots[k]
        return sum(m * x for m, x in zip(mu, d))

    def pair_rho_coroot(self, k: int) -> int:
        return self.coroot_heights[k]

    def fundamental_weight(self, i: int) -> Coords:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def root_as_weight(self, k: int) -> Coords:
        """Root number k written in the fundamental-weight basis."""
        return self.root_weight_coords[k]

    def weights_to_root_coords(self, wc: Sequence) -> Tuple[Fraction, ...]:
        """Solve cartan * c = wc; exact rational solution."""
        n = self.rank
        a = [[Fraction(self.cartan[i][j]) for j in range(n)] + [Fraction(wc[i])]
             for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if a[r][col])
            a[col], a[piv] = a[piv], a[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return tuple(a[i][n] for i in range(n))

    # -- Weyl elements -----------------------------------------------------------

    def identity(self) -> "WeylElement":
        return WeylElement(self, tuple(range(2 * self.npos)))

    def simple_reflection(self, i: int) -> "WeylElement":
        perm = []
        for k in range(2 * self.npos):
            c = self._reflect_root(i, self.roots[k])
            perm.append(self.root_index[c])
        return WeylElement(self, tuple(perm))

    def reflection(self, k: int) -> "WeylElement":
        """The reflection s_beta for the root with index k."""
        beta_wc = self.root_weight_coords[k]
        coroot = self.coroots[k]
        perm = []
        for j in range(2 * self.npos):
            c = self.roots[j]
            pairing = sum(x * y for x, y in zip(self.root_weight_coords[j], coroot))
            # s_beta(v) = v - <v, beta^vee> beta, in root coordinates
            bc = self.roots[k]
            img = tuple(cj - pairing * bj for cj, bj in zip(c, bc))
            perm.append(self.root_index[img])
        return WeylElement(self, tuple(perm))

    def from_word(self, word: Iterable[int]) -> "WeylElement":
        w = self.identity()
        for i in word:
            w = w * self.simple_reflection(i)
        return w

    def longest_element(self) -> "WeylElement":
        w = self.identity()
        while True:
            for i in range(self.rank):
                if w.apply_root_index(self.simple_indices[i]) < self.npos:
                    w = w * self.simple_reflection(i)
                    break
            else:
                return w

    def weyl_elements(self) -> Tuple["WeylElement", ...]:
        return self.weyl_table().elements

    def weyl_table(self) -> "WeylGroupTable":
        if self._weyl_table is None:
            if self.weyl_order > WEYL_ENUMERATION_CAP:
                raise ValueError(
                    f"|W| = {self.weyl_order} exceeds enumeration cap for "
                    f"{self.type_label}")
            self._weyl_table = WeylGroupTable(self)
        return self._weyl_table

    def __repr__(self):
        return f"RootSystem({self.type_label})"


@lru_cache(maxsize=None)
def build_root_system(letter: str, rank: int) -> RootSystem:
    """Root system for the given type; raises on unsupported input."""
    return RootSystem(letter.upper(), int(rank))


def root_system_from_label(label: str) -> RootSystem:
    letter, rank = parse_cartan_type(label)
    return build_root_system(letter, rank)


class WeylElement:
    """Group element as a permutation of the full root list."""

    __slots__ = ("rs", "perm", "_len", "_inv", "_hash")

    def __init__(self, rs: RootSystem, perm: Tuple[int, ...]):
        self.rs = rs
        self.perm = perm
        self._len = None
        self._inv = None
        self._hash = None

    def __eq__(self, other):
        return (isinstance(other, WeylElement) and self.rs is other.rs
                and self.perm == other.perm)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.perm)
        return self._hash

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p, q = self.perm, other.perm
        return WeylElement(self.rs, tuple(p[q[k]] for k in range(len(p))))

    def inverse(self) -> "WeylElement":
        if self._inv is None:
            out = [0] * len(self.perm)
            for k, pk in enumerate(self.perm):
                out[pk] = k
            self._inv = WeylElement(self.rs, tuple(out))
            self._inv._inv = self
        return self._inv

    def length(self) -> int:
        if self._len is None:
            npos = self.rs.npos
            # l(u) = |Delta^+ cap u^{-1} Delta^-| = #{alpha > 0 : u(alpha) < 0}
            self._len = sum(1 for k in range(npos) if self.perm[k] >= npos)
        return self._len

    def is_identity(self) -> bool:
        return self.length() == 0

    def apply_root_index(self, k: int) -> int:
        return self.perm[k]

    def apply_weight(self, mu: Sequence) -> Coords:
        """Image of a weight (fundamental coordinates)."""
        inv = self.inverse().perm
        rs = self.rs
        out = []
        for i in range(rs.rank):
            k = inv[rs.simple_indices[i]]
            out.append(sum(m * d for m, d in zip(mu, rs.coroots[k])))
        return tuple(out)

    def descends_right(self, i: int) -> bool:
        """True iff l(w s_i) < l(w), i.e. w(alpha_i) < 0."""
        return self.perm[self.rs.simple_indices[i]] >= self.rs.npos

    def reduced_word(self) -> Tuple[int, ...]:
        """A reduced word, by repeatedly removing the smallest right descent."""
        w = self
        collected = []
        while True:
            for i in range(self.rs.rank):
                if w.descends_right(i):
                    collected.append(i)
                    w = w * self.rs.simple_reflection(i)
                    break
            else:
                break
        assert w.length() == 0
        return tuple(reversed(collected))

    def __repr__(self):
        return f"W({format_word(self.reduced_word())})"


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    return u * v


def invert(w: WeylElement) -> WeylElement:
    return w.inverse()


def length(w: WeylElement) -> int:
    return w.length()


def apply_weyl(w: WeylElement, x):
    """Apply w to a weight tuple (or anything supporting the same pairing)."""
    return w.apply_weight(x)


class WeylGroupTable:
    """Dense index tables over the full group, for hot loops."""

    def __init__(self, rs: RootSystem):
        elements = [rs.identity()]
        index = {elements[0].perm: 0}
        gens = [rs.simple_reflection(i) for i in range(rs.rank)]
        frontier = [elements[0]]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    u = w * g
                    if u.perm not in index:
                        index[u.perm] = len(elements)
                        elements.append(u)
                        nxt.append(u)
            frontier = nxt
        assert len(elements) == rs.weyl_order
        self.rs = rs
        self.elements: Tuple[WeylElement, ...] = tuple(elements)
        self.index: Dict[Tuple[int, ...], int] = index
        self.lengths: Tuple[int, ...] = tuple(w.length() for w in elements)
        self.w0_index = self.index[rs.longest_element().perm]
        self._rmul: Dict[int, Tuple[int, ...]] = {}
        self._lmul: Dict[int, Tuple[int, ...]] = {}

    def id_of(self, w: WeylElement) -> int:
        return self.index[w.perm]

    def rmul_by_reflection(self, k: int) -> Tuple[int, ...]:
        """Table sending each element id w to the id of w * s_{beta_k}."""
        if k not in self._rmul:
            s = self.rs.reflection(k)
            self._rmul[k] = tuple(self.index[(w * s).perm] for w in self.elements)
        return self._rmul[k]

    def lmul_by_reflection(self, k: int) -> Tuple[int, ...]:
        if k not in self._lmul:
            s = self.rs.reflection(k)
            self._lmul[k] = tuple(self.index[(s * w).perm] for w in self.elements)
        return self._lmul[k]


# ---------------------------------------------------------------------------
# Parabolic quotients.
# ---------------------------------------------------------------------------


class ParabolicData:
    """Data of W_S inside W: longest element and minimal coset reps."""

    def __init__(self, rs: RootSystem, S: Iterable[int]):
        self.rs = rs
        self.S = frozenset(S)
        if not self.S <= set(range(rs.rank)):
            raise ValueError(f"S = {sorted(self.S)} is not a subset of I")
        self.longest_WS = self._longest_in_WS()
        self._reps = None

    def _longest_in_WS(self) -> WeylElement:
        w = self.rs.identity()
        while True:
            for i in sorted(self.S):
                if not w.descends_right(i):
                    w = w * self.rs.simple_reflection(i)
                    break
            else:
                return w

    def min_coset_reps(self) -> Tuple[WeylElement, ...]:
        """The set W^S of minimal-length coset representatives."""
        if self._reps is None:
            npos = self.rs.npos
            reps = []
            for w in self.rs.weyl_elements():
                if all(w.perm[self.rs.simple_indices[i]] < npos for i in self.S):
                    reps.append(w)
            self._reps = tuple(reps)
        return self._reps

    def wall_root_indices(self) -> FrozenSet[int]:
        """Indices of the positive roots in Delta_S^+."""
        out = set()
        for k in self.rs.positive_root_indices():
            c = self.rs.roots[k]
            if all(c[j] == 0 for j in range(self.rs.rank) if j not in self.S):
                out.add(k)
        return frozenset(out)


def parabolic(rs: RootSystem, S: Iterable[int]) -> ParabolicData:
    return ParabolicData(rs, S)


def min_coset_rep(w: WeylElement, S: Iterable[int]) -> WeylElement:
    """The representative of w W_S with all S-descents removed."""
    S = set(S)
    while True:
        for i in sorted(S):
            if w.descends_right(i):
                w = w * w.rs.simple_reflection(i)
                break
        else:
            return w


def s_lambda(rs: RootSystem, lam: Sequence) -> FrozenSet[int]:
    """S_lambda = { i : <lambda, alpha_i^vee> = 0 }."""
    return frozenset(i for i in range(rs.rank) if lam[i] == 0)


def is_dominant(lam: Sequence) -> bool:
    return all(x >= 0 for x in lam)


def orbit_with_reps(rs: RootSystem, lam: Sequence) -> Dict[Coords, WeylElement]:
    """Map from each weight in W*lambda to one group element reaching it."""
    lam = tuple(lam)
    reps = {lam: rs.identity()}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            w = reps[mu]
            for i in range(rs.rank):
                s = rs.simple_reflection(i)
                nu = s.apply_weight(mu)
                if nu not in reps:
                    reps[nu] = s * w
                    nxt.append(nu)
        frontier = nxt
    return reps


def v_of_mu(rs: RootSystem, lam: Sequence, mu: Sequence) -> WeylElement:
    """The minimal coset representative v(mu) in W^S with v(mu) lambda = mu."""
    if not is_dominant(lam):
        raise ValueError("lambda must be dominant")
    reps = orbit_with_reps(rs, lam)
    mu = tuple(mu)
    if mu not in reps:
        raise ValueError(f"{mu} is not in the orbit of {tuple(lam)}")
    return min_coset_rep(reps[mu], s_lambda(rs, lam))


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Bruhat order via the subword criterion on one reduced word of v."""
    if u.length() > v.length():
        return False
    rs = u.rs
    cache = rs._bruhat_cache
    key = v.perm
    if key not in cache:
        below = {rs.identity().perm}
        for i in v.reduced_word():
            s = rs.simple_reflection(i)
            below |= {(WeylElement(rs, p) * s).perm for p in below}
        cache[key] = frozenset(below)
    return u.perm in cache[key]


def dominance_less(rs: RootSystem, nu: Sequence, lam: Sequence) -> bool:
    """Strict dominance: lambda - nu a nonzero N-combination of simple roots."""
    diff = tuple(a - b for a, b in zip(lam, nu))
    if all(x == 0 for x in diff):
        return False
    coords = rs.weights_to_root_coords(diff)
    return all(c.denominator == 1 and c >= 0 for c in coords)


# ---------------------------------------------------------------------------
# String forms.
# ---------------------------------------------------------------------------


def parse_weight(text: str, rank: int) -> Coords:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != rank:
        raise ValueError(f"expected {rank} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed weight string {text!r}") from None


def parse_word(text: str, rs: RootSystem) -> WeylElement:
    """Parse words like ``s1*s2*s1`` or ``e`` (letters are 1-based)."""
    text = text.strip()
    if text in ("e", ""):
        return rs.identity()
    word = []
    for chunk in text.split("*"):
        chunk = chunk.strip()
        if not chunk.startswith("s"):
            raise ValueError(f"malformed word {text!r}")
        try:
            i = int(chunk[1:]) - 1
        except ValueError:
            raise ValueError(f"malformed word {text!r}") from None
        if not 0 <= i < rs.rank:
            raise ValueError(f"letter {chunk} out of range in {text!r}")
        word.append(i)
    return rs.from_word(word)


def format_word(word: Sequence[int]) -> str:
    if not word:
        return "e"
    return "*".join(f"s{i + 1}" for i in word)


def format_element(w: WeylElement) -> str:
    return format_word(w.reduced_word())
