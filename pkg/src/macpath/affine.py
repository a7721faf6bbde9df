"""Untwisted affinization of the dual root system and adapted words.

The ambient affine roots are written beta = bar(beta) + deg(beta) * delta
with bar(beta) a coroot of the finite system; an :class:`AffineRoot` stores
the index of the finite root whose coroot is bar(beta), plus the degree.
Elements of the extended affine Weyl group are pairs t(x) * w with x in the
weight lattice and w finite; lengths and inversion sets are computed per
finite root by exact counting.

The adapted reduced word of m_{lambda_-} realizes the inversion list sorted
by the map Phi (ratio ascending, label descending in the reflection order):
peeling from the right, the current maximal inversion must be a simple
affine root, which forces the word letter by letter.  All claimed
properties of the word are replayed after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Tuple

from .dbg import ReflectionOrder
from .root_system import RootSystem, WeylElement

AFFINE_NODE = -1  # internal marker for the extra simple reflection s_0


class AffineRoot(NamedTuple):
    """bar(beta) + deg * delta, bar(beta) = coroot of the root with this index."""

    finite: int
    deg: int

    def is_positive(self, rs: RootSystem) -> bool:
        return self.deg > 0 or (self.deg == 0 and rs.is_positive_index(self.finite))


class ExtAffineWeylElement:
    """t(translation) * direction in the extended affine Weyl group."""

    __slots__ = ("rs", "translation", "direction")

    def __init__(self, rs: RootSystem, translation: Tuple[int, ...],
                 direction: WeylElement):
        self.rs = rs
        self.translation = tuple(translation)
        self.direction = direction

    @staticmethod
    def identity(rs: RootSystem) -> "ExtAffineWeylElement":
        return ExtAffineWeylElement(rs, (0,) * rs.rank, rs.identity())

    @staticmethod
    def translation_of(rs: RootSystem, x: Sequence[int]) -> "ExtAffineWeylElement":
        return ExtAffineWeylElement(rs, tuple(x), rs.identity())

    @staticmethod
    def from_finite(w: WeylElement) -> "ExtAffineWeylElement":
        return ExtAffineWeylElement(w.rs, (0,) * w.rs.rank, w)

    def wt(self) -> Tuple[int, ...]:
        return self.translation

    def dir(self) -> WeylElement:
        return self.direction

    def __mul__(self, other: "ExtAffineWeylElement") -> "ExtAffineWeylElement":
        # t(a) u * t(b) v = t(a + u b) (u v)
        shift = self.direction.apply_weight(other.translation)
        trans = tuple(a + s for a, s in zip(self.translation, shift))
        return ExtAffineWeylElement(self.rs, trans, self.direction * other.direction)

    def inverse(self) -> "ExtAffineWeylElement":
        inv = self.direction.inverse()
        trans = tuple(-x for x in inv.apply_weight(self.translation))
        return ExtAffineWeylElement(self.rs, trans, inv)

    def __eq__(self, other):
        return (isinstance(other, ExtAffineWeylElement)
                and self.translation == other.translation
                and self.direction == other.direction)

    def __hash__(self):
        return hash((self.translation, self.direction.perm))

    def act_affine_root(self, beta: AffineRoot) -> AffineRoot:
        """t(x) v . (b + r delta) = v b + (r - <x, v b>) delta."""
        k = self.direction.apply_root_index(beta.finite)
        c = self.rs.pair_weight_coroot(self.translation, k)
        return AffineRoot(k, beta.deg - c)

    def __repr__(self):
        from .root_system import format_element
        return f"Ext(t{list(self.translation)} * {format_element(self.direction)})"


def ext_mul(x: ExtAffineWeylElement, y: ExtAffineWeylElement) -> ExtAffineWeylElement:
    return x * y


def ext_length(x: ExtAffineWeylElement) -> int:
    """|positive affine roots sent negative|, counted per finite root."""
    rs = x.rs
    total = 0
    for k in range(2 * rs.npos):
        a_min = 0 if rs.is_positive_index(k) else 1
        kk = x.direction.apply_root_index(k)
        c = rs.pair_weight_coroot(x.translation, kk)
        total += max(0, c - a_min)
        if c >= a_min and not rs.is_positive_index(kk):
            total += 1
    return total


def inversion_set(x: ExtAffineWeylElement) -> Tuple[AffineRoot, ...]:
    """All positive affine roots beta with x(beta) negative."""
    rs = x.rs
    out: List[AffineRoot] = []
    for k in range(2 * rs.npos):
        a_min = 0 if rs.is_positive_index(k) else 1
        kk = x.direction.apply_root_index(k)
        c = rs.pair_weight_coroot(x.translation, kk)
        for a in range(a_min, c):
            out.append(AffineRoot(k, a))
        if c >= a_min and not rs.is_positive_index(kk):
            out.append(AffineRoot(k, c))
    return tuple(out)


def simple_affine_root(rs: RootSystem, i: int) -> AffineRoot:
    """alpha_i^vee for i in I, or delta - phi^vee for the affine node."""
    if i == AFFINE_NODE:
        return AffineRoot(rs.negate_index(rs.highest_short_root_index), 1)
    return AffineRoot(rs.simple_indices[i], 0)


def simple_affine_index(rs: RootSystem, beta: AffineRoot) -> int | None:
    """Index in I of a simple affine root, AFFINE_NODE for alpha_0, else None."""
    if beta.deg == 0:
        try:
            return rs.simple_indices.index(beta.finite)
        except ValueError:
            return None
    if beta.deg == 1 and beta.finite == rs.negate_index(rs.highest_short_root_index):
        return AFFINE_NODE
    return None


def affine_simple_reflection(rs: RootSystem, i: int) -> ExtAffineWeylElement:
    if i == AFFINE_NODE:
        phi = rs.highest_short_root_index
        return ExtAffineWeylElement(rs, rs.root_as_weight(phi), rs.reflection(phi))
    return ExtAffineWeylElement.from_finite(rs.simple_reflection(i))


def affine_reflection(rs: RootSystem, beta: AffineRoot) -> ExtAffineWeylElement:
    """s_{bar(beta) + a delta} = t(-a bar(beta)^vee) s_{bar(beta)}."""
    k = beta.finite
    kpos = k if rs.is_positive_index(k) else rs.negate_index(k)
    wc = rs.root_as_weight(k)
    trans = tuple(-beta.deg * x for x in wc)
    return ExtAffineWeylElement(rs, trans, rs.reflection(kpos))


def m_of(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
         order: ReflectionOrder | None = None) -> ExtAffineWeylElement:
    """Shortest element of the coset t(mu) W, as t(mu) v(mu) v(lambda_-)^{-1}."""
    from .root_system import v_of_mu
    if order is not None and tuple(mu) == order.mu:
        v_mu, v_lm = order.v_mu, order.v_lam_minus
    else:
        w0 = rs.longest_element()
        v_mu = v_of_mu(rs, lam, mu)
        v_lm = v_of_mu(rs, lam, w0.apply_weight(lam))
    return ExtAffineWeylElement(rs, tuple(mu), v_mu * v_lm.inverse())


def phi_map(rs: RootSystem, lam_minus: Sequence[int], beta: AffineRoot,
            w0: WeylElement) -> Tuple[Fraction, int]:
    """Phi(beta) = ((<lam_-, bar b> - deg b) / <lam_-, bar b>, w0 bar(b)^vee)."""
    pairing = rs.pair_weight_coroot(lam_minus, beta.finite)
    if pairing <= 0:
        raise ValueError("beta is not in the inversion set of m_{lambda_-}")
    ratio = Fraction(pairing - beta.deg, pairing)
    label = w0.apply_root_index(beta.finite)
    return ratio, label


@dataclass
class AdaptedWord:
    """Reduced word u s_{l_1} ... s_{l_L} for m_{lambda_-} adapted to Phi.

    ``letters[j]`` is a finite index in I or AFFINE_NODE.  ``gammas`` is the
    inversion list sorted by Phi; by construction the inversion sequence
    beta^OS of the word replays to exactly this list.  ``ratios`` are the
    d_k, ``degrees`` the a_k.  ``K`` and ``M`` split off the walk positions
    for m_mu and m_lambda; ``sigma_factor`` is the length-zero prefix u.
    """

    rs: RootSystem
    order: ReflectionOrder
    sigma_factor: ExtAffineWeylElement
    letters: Tuple[int, ...]
    gammas: Tuple[AffineRoot, ...]
    degrees: Tuple[int, ...]
    ratios: Tuple[Fraction, ...]
    labels: Tuple[int, ...]  # w0 bar(beta^OS_k)^vee, positive root indices
    K: int
    M: int
    L: int

    def m_lambda_minus(self) -> ExtAffineWeylElement:
        out = self.sigma_factor
        for i in self.letters:
            out = out * affine_simple_reflection(self.rs, i)
        return out


def order_inversions(rs: RootSystem, order: ReflectionOrder
                     ) -> Tuple[Tuple[AffineRoot, ...], Tuple[Fraction, ...],
                                Tuple[int, ...]]:
    """Inversions of m_{lambda_-} sorted by Phi; also their d-ratios and labels."""
    lam_minus = order.lam_minus
    w0 = rs.longest_element()
    m_lm = m_of(rs, order.lam, lam_minus, order)
    invs = inversion_set(m_lm)
    keyed = []
    for beta in invs:
        ratio, label = phi_map(rs, lam_minus, beta, w0)
        # ties sort by the label descending in the reflection order; a smaller
        # position in the beta_j list is a larger label
        keyed.append(((ratio, order.position[label]), beta, ratio, label))
    keyed.sort(key=lambda item: item[0])
    seen = set(item[0] for item in keyed)
    if len(seen) != len(keyed):
        raise AssertionError("Phi is not injective on the inversion set")
    gammas = tuple(item[1] for item in keyed)
    ratios = tuple(item[2] for item in keyed)
    labels = tuple(item[3] for item in keyed)
    return gammas, ratios, labels


def adapted_reduced_word(rs: RootSystem, order: ReflectionOrder) -> AdaptedWord:
    """Construct and verify the adapted reduced word for m_{lambda_-}."""
    gammas, ratios, labels = order_inversions(rs, order)
    L = len(gammas)
    letters: List[int] = [0] * L
    t = ExtAffineWeylElement.identity(rs)
    for k in range(L, 0, -1):
        delta = t.act_affine_root(gammas[k - 1])
        i = simple_affine_index(rs, delta)
        if i is None:
            raise AssertionError(
                f"peeling failed at position {k}: {delta} is not simple")
        letters[k - 1] = i
        t = affine_simple_reflection(rs, i) * t

    m_lm = m_of(rs, order.lam, order.lam_minus, order)
    word = ExtAffineWeylElement.identity(rs)
    for i in letters:
        word = word * affine_simple_reflection(rs, i)
    u = m_lm * word.inverse()
    if ext_length(u) != 0:
        raise AssertionError("sigma factor has nonzero length")

    out = AdaptedWord(rs=rs, order=order, sigma_factor=u, letters=tuple(letters),
                      gammas=gammas, degrees=tuple(b.deg for b in gammas),
                      ratios=ratios, labels=labels,
                      K=order.K, M=order.M, L=L)
    _verify_adapted_word(out)
    return out


def _verify_adapted_word(word: AdaptedWord) -> None:
    rs, order = word.rs, word.order
    L, M = word.L, word.M
    # replay beta^OS_j = s_{l_L} ... s_{l_{j+1}} alpha^vee_{l_j} = gamma_j
    suffix = ExtAffineWeylElement.identity(rs)
    for j in range(L, 0, -1):
        beta = suffix.act_affine_root(simple_affine_root(rs, word.letters[j - 1]))
        if beta != word.gammas[j - 1]:
            raise AssertionError(f"inversion replay failed at {j}")
        suffix = suffix * affine_simple_reflection(rs, word.letters[j - 1])
    # d-sequence: weakly increasing, < 1, zero exactly on the first M slots
    for k in range(L):
        if not (0 <= word.ratios[k] < 1):
            raise AssertionError("d_k out of range")
        if k and word.ratios[k - 1] > word.ratios[k]:
            raise AssertionError("d-sequence not weakly increasing")
        if (word.ratios[k] == 0) != (k < M):
            raise AssertionError("d_k = 0 does not match k <= M")
        deg = word.degrees[k]
        pairing = rs.pair_weight_coroot(order.lam_minus,
                                        word.gammas[k].finite)
        if not 0 < deg <= pairing:
            raise AssertionError("degree outside (0, <lam_-, bar beta>]")
    # the first M letters conjugate through u to the finite word fixed by the
    # reflection order, and the suffix spells m_lambda
    u = word.sigma_factor
    for k in range(M):
        conj = u * affine_simple_reflection(rs, word.letters[k]) * u.inverse()
        expect = ExtAffineWeylElement.from_finite(
            rs.simple_reflection(order.letters[k]))
        if conj != expect:
            raise AssertionError("conjugated prefix letter mismatch")
    m_lam = m_of(rs, order.lam, order.lam, order)
    tail = u
    for i in word.letters[M:]:
        tail = tail * affine_simple_reflection(rs, i)
    if tail != m_lam:
        raise AssertionError("suffix does not spell m_lambda")
    if ext_length(m_lam) != L - M:
        raise AssertionError("suffix length mismatch")
    # w0 bar(beta^OS_k)^vee realizes beta_k of the finite order, for k <= M
    for k in range(M):
        if word.labels[k] != order.beta_indices[k]:
            raise AssertionError("finite labels disagree with the root order")


_adapted_cache: Dict[tuple, AdaptedWord] = {}


def adapted_word_for(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]
                     ) -> Tuple[ReflectionOrder, AdaptedWord]:
    """Reflection order and adapted word for the pair (lambda, mu), cached."""
    key = (rs.type_label, tuple(lam), tuple(mu))
    if key not in _adapted_cache:
        order = ReflectionOrder(rs, lam, mu)
        _adapted_cache[key] = adapted_reduced_word(rs, order)
    word = _adapted_cache[key]
    return word.order, word


def adapted_word_json(word: AdaptedWord) -> dict:
    """Debug dump; finite letters are 1-based, the affine node is 0."""
    return {
        "letters": [0 if i == AFFINE_NODE else i + 1 for i in word.letters],
        "inversions": [
            {"coroot": list(word.rs.coroots[g.finite]), "deg": g.deg,
             "d": str(d)}
            for g, d in zip(word.gammas, word.ratios)
        ],
        "K": word.K, "M": word.M, "L": word.L,
    }
