"""Alcove walks, their weighted sums, and the bijection onto chain pairs.

A walk picks a subset J of positions in the adapted reduced word of m_mu
and folds the corresponding affine reflections; its statistic multiplies
one binomial factor per folded position, marked Bruhat or quantum by the
finite direction before the fold.  The nonsymmetric and symmetric sums are
evaluated by a dynamic program over (position, finite direction): walks
sharing a suffix share their future contributions, so the 2^L leaves never
need to be expanded term by term.  Explicit walk enumeration (lazy, with
incremental fold updates) is kept alongside as the oracle interface, and
the map ``xi`` carries each walk to a chain pair with the same weight and
statistic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from .affine import (AdaptedWord, AffineRoot, ExtAffineWeylElement,
                     adapted_word_for, affine_reflection, ext_length, m_of)
from .dbg import BRUHAT, QUANTUM, ReflectionOrder
from .pqls import PqlsChain, PqlsPair
from .qt import (CharacterElement, LaurentQV, RatQV, factor_poly,
                 NUMPY_KEY_LIMIT as _NUMPY_KEY_LIMIT,
                 merge_packed_contributions as _merge_contributions)
from .root_system import RootSystem, WeylElement


@dataclass(frozen=True)
class WalkPosition:
    """Static data of one foldable position in the adapted word."""

    k: int                 # 1-based position in the word
    gamma: AffineRoot      # beta^OS_k, finite part a negative coroot
    deg: int               # a_k = deg(beta^OS_k)
    rho_pair: int          # <rho, -bar(beta^OS_k)>
    ratio: Fraction        # d_k
    edge_label: int        # -bar(beta)^vee, a positive root index
    pair_label: int        # w0 bar(beta)^vee, the chain-side label


class WalkContext:
    """Adapted word and per-position tables for one (lambda, mu)."""

    def __init__(self, rs: RootSystem, lam: Sequence[int], mu: Sequence[int]):
        self.rs = rs
        self.lam = tuple(lam)
        self.mu = tuple(mu)
        self.order, self.word = adapted_word_for(rs, lam, mu)
        self.m_mu = m_of(rs, lam, mu, self.order)
        self.m_lambda = m_of(rs, lam, lam, self.order)
        self.w0 = rs.longest_element()
        word = self.word
        self.positions: Tuple[WalkPosition, ...] = tuple(
            WalkPosition(
                k=k,
                gamma=word.gammas[k - 1],
                deg=word.degrees[k - 1],
                rho_pair=rs.pair_rho_coroot(
                    rs.negate_index(word.gammas[k - 1].finite)),
                ratio=word.ratios[k - 1],
                edge_label=rs.negate_index(word.gammas[k - 1].finite),
                pair_label=word.labels[k - 1],
            )
            for k in range(word.K + 1, word.L + 1))
        self.position_by_k = {p.k: p for p in self.positions}
        self.gamma_to_k = {word.gammas[k - 1]: k
                           for k in range(word.K + 1, word.L + 1)}

    def walk_count(self) -> int:
        return 1 << len(self.positions)


@dataclass
class AlcoveWalk:
    """One folded walk: steps z_i, labels, and Bruhat/quantum markings."""

    ctx: WalkContext
    start_w: WeylElement
    J: Tuple[int, ...]
    steps: Tuple[ExtAffineWeylElement, ...]
    markings: Tuple[str, ...]

    def ed(self) -> ExtAffineWeylElement:
        return self.steps[-1]

    def labels(self) -> Tuple[AffineRoot, ...]:
        return tuple(self.ctx.position_by_k[k].gamma for k in self.J)

    def l_statistic(self) -> RatQV:
        num = LaurentQV.one()
        den = LaurentQV.one()
        for k, kind in zip(self.J, self.markings):
            pos = self.ctx.position_by_k[k]
            if kind == BRUHAT:
                num = num * LaurentQV({(0, -1): Fraction(1),
                                       (0, 1): Fraction(-1)})
            else:
                num = num * LaurentQV(
                    {(pos.deg, 2 * pos.rho_pair - 1): Fraction(1),
                     (pos.deg, 2 * pos.rho_pair + 1): Fraction(-1)})
            den = den * factor_poly(pos.deg, pos.rho_pair)
        return RatQV(num, den)

    def factor_signature(self) -> Tuple[Tuple[str, int, int], ...]:
        """Per-fold (kind, q-exponent, t-exponent), in walk order."""
        return tuple((kind, self.ctx.position_by_k[k].deg,
                      self.ctx.position_by_k[k].rho_pair)
                     for k, kind in zip(self.J, self.markings))


def enumerate_walks(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
                    w: WeylElement | None = None,
                    ctx: WalkContext | None = None) -> Iterator[AlcoveWalk]:
    """All 2^{l(m_mu)} walks of B(w; m_mu), folded incrementally."""
    if ctx is None:
        ctx = WalkContext(rs, lam, mu)
    if w is None:
        w = rs.identity()
    start = ExtAffineWeylElement.from_finite(w) * ctx.m_mu
    reflections = [affine_reflection(rs, p.gamma) for p in ctx.positions]
    n = len(ctx.positions)

    def rec(i: int, J: List[int], steps: List[ExtAffineWeylElement],
            markings: List[str]) -> Iterator[AlcoveWalk]:
        if i == n:
            yield AlcoveWalk(ctx, w, tuple(J), tuple(steps), tuple(markings))
            return
        yield from rec(i + 1, J, steps, markings)
        pos = ctx.positions[i]
        z = steps[-1]
        z2 = z * reflections[i]
        kind = BRUHAT if z2.dir().length() > z.dir().length() else QUANTUM
        J.append(pos.k)
        steps.append(z2)
        markings.append(kind)
        yield from rec(i + 1, J, steps, markings)
        J.pop()
        steps.pop()
        markings.pop()

    yield from rec(0, [], [start], [])


def walk_from_positions(ctx: WalkContext, w: WeylElement,
                        J: Sequence[int]) -> AlcoveWalk:
    """Replay the walk with the given folded positions (ascending)."""
    J = tuple(J)
    if any(a >= b for a, b in zip(J, J[1:])):
        raise ValueError("positions must be strictly increasing")
    rs = ctx.rs
    z = ExtAffineWeylElement.from_finite(w) * ctx.m_mu
    steps = [z]
    markings: List[str] = []
    for k in J:
        pos = ctx.position_by_k[k]
        z2 = z * affine_reflection(rs, pos.gamma)
        markings.append(BRUHAT if z2.dir().length() > z.dir().length()
                        else QUANTUM)
        steps.append(z2)
        z = z2
    return AlcoveWalk(ctx, w, J, tuple(steps), tuple(markings))


def is_walk_label_sequence(ctx: WalkContext, labels: Sequence[AffineRoot]) -> bool:
    """Whether a label sequence arises from some walk: strictly increasing
    positions in the adapted order (every reflection step is a graph edge)."""
    ks = []
    for g in labels:
        k = ctx.gamma_to_k.get(g)
        if k is None:
            return False
        ks.append(k)
    return all(a < b for a, b in zip(ks, ks[1:]))


# ---------------------------------------------------------------------------
# Character assembly by dynamic programming over (position, direction).
#
# Every fold position contributes its binomial 1 - q^a t^c to the
# denominator at most once, so the whole sum is evaluated over the single
# common denominator D = prod over positions.  Scaling the suffix sums by
# the product of the remaining binomials turns the recursion into pure
# Laurent-polynomial arithmetic:
#
#   V_j(dir) = (1 - q^{a_j} t^{c_j}) V_{j+1}(dir)
#              + n_j(dir) e^{shift} V_{j+1}(dir s_j)
# ---------------------------------------------------------------------------


def _walk_dp(ctx: WalkContext, first: int,
             seeds: List[Tuple[int, Tuple[int, ...], int]]
             ) -> Tuple[CharacterElement, LaurentQV]:
    """Forward fold over the walk positions from the given seeds.

    Each seed is (direction id, base weight, v-offset); only directions
    actually reached carry state.  The state per direction is one flat dict
    keyed by an integer packing (weight, q-exponent, v-exponent), so both
    branches of a fold are constant key offsets on integer coefficients.
    Returns the character and the common denominator.
    """
    rs = ctx.rs
    table = rs.weyl_table()
    nW = len(table.elements)
    rank = rs.rank
    lengths = table.lengths
    positions = [p for p in ctx.positions if p.k >= first]

    shifts = []
    for p in positions:
        wc = rs.root_as_weight(p.edge_label)
        shifts.append([tuple(p.deg * x for x in table.elements[d].apply_weight(wc))
                       for d in range(nW)])
    wbound = [1] * rank
    for _d, base, _v in seeds:
        for i in range(rank):
            wbound[i] = max(wbound[i], abs(base[i]) + 1)
    for srow in shifts:
        for i in range(rank):
            wbound[i] += max(abs(s[i]) for s in srow)
    qbound = sum(p.deg for p in positions) + 1
    vbound = (rs.npos + max((abs(v) for _d, _b, v in seeds), default=0)
              + sum(2 * p.rho_pair + 1 for p in positions) + 1)
    sv = 2 * vbound + 1
    sq = 2 * qbound + 1
    strides = [sv, sv * sq]
    for i in range(rank - 1, 0, -1):
        strides.append(strides[-1] * (2 * wbound[i] + 1))
    strides = strides[::-1]

    def pack(wvec, qe, ve):
        out = ve + qe * sv
        for i in range(rank):
            out += wvec[i] * strides[i]
        return out

    offset = pack(tuple(wbound), qbound, vbound)
    # int64 path needs headroom for keys and for coefficients (signed
    # walk counts, bounded by the seed count times 2^positions)
    use_numpy = offset < _NUMPY_KEY_LIMIT // 4 and len(positions) <= 40
    denominator = LaurentQV.one()
    zero = (0,) * rank

    if use_numpy:
        state_np: Dict[int, Tuple[np.ndarray, np.ndarray]] = {}
        for d, base, voff in seeds:
            key = pack(base, 0, voff)
            if d in state_np:
                state_np[d] = _merge_contributions(
                    [state_np[d],
                     (np.array([key], dtype=np.int64),
                      np.array([1], dtype=np.int64))])
            else:
                state_np[d] = (np.array([key], dtype=np.int64),
                               np.array([1], dtype=np.int64))
        for pos, srow in zip(positions, shifts):
            denominator = denominator * factor_poly(pos.deg, pos.rho_pair)
            rmul = table.rmul_by_reflection(pos.edge_label)
            d_binom = pack(zero, pos.deg, 2 * pos.rho_pair)
            contrib: Dict[int, list] = {}
            for d, (keys, coeffs) in state_np.items():
                contrib.setdefault(d, []).append((keys, coeffs))
                contrib[d].append((keys + d_binom, -coeffs))
                d2 = rmul[d]
                ws = pack(srow[d], 0, 0)
                d_lo = ws - 1 if lengths[d2] > lengths[d] \
                    else ws + d_binom - 1
                parts = contrib.setdefault(d2, [])
                parts.append((keys + d_lo, coeffs))
                parts.append((keys + (d_lo + 2), -coeffs))
            state_np = {d: _merge_contributions(parts)
                        for d, parts in contrib.items()}
        state = {d: dict(zip(keys.tolist(), coeffs.tolist()))
                 for d, (keys, coeffs) in state_np.items()}
    else:
        state = {}
        for d, base, voff in seeds:
            key = pack(base, 0, voff)
            bucket = state.setdefault(d, {})
            bucket[key] = bucket.get(key, 0) + 1
        for pos, srow in zip(positions, shifts):
            denominator = denominator * factor_poly(pos.deg, pos.rho_pair)
            rmul = table.rmul_by_reflection(pos.edge_label)
            d_binom = pack(zero, pos.deg, 2 * pos.rho_pair)
            nxt: Dict[int, Dict[int, int]] = {}
            for d, bucket in state.items():
                # exclude branch: untouched binomial, stay at d
                acc = nxt.get(d)
                if acc is None:
                    acc = nxt[d] = dict(bucket)
                else:
                    for key, c in bucket.items():
                        if key in acc:
                            acc[key] += c
                        else:
                            acc[key] = c
                for key, c in bucket.items():
                    k2 = key + d_binom
                    if k2 in acc:
                        acc[k2] -= c
                    else:
                        acc[k2] = -c
                # include branch: fold the reflection, multiply the numerator
                d2 = rmul[d]
                ws = pack(srow[d], 0, 0)
                d_lo = ws - 1 if lengths[d2] > lengths[d] \
                    else ws + d_binom - 1
                d_hi = d_lo + 2
                acc2 = nxt.get(d2)
                if acc2 is None:
                    acc2 = nxt[d2] = {}
                for key, c in bucket.items():
                    k1 = key + d_lo
                    if k1 in acc2:
                        acc2[k1] += c
                    else:
                        acc2[k1] = c
                    k2 = key + d_hi
                    if k2 in acc2:
                        acc2[k2] -= c
                    else:
                        acc2[k2] = -c
            state = {d: {k: v for k, v in b.items() if v}
                     for d, b in nxt.items()}

    dims = [2 * b + 1 for b in wbound] + [sq, sv]
    acc_w: Dict[tuple, Dict[Tuple[int, int], int]] = {}
    for d, bucket in state.items():
        ell = lengths[d]
        for key, c in bucket.items():
            if not c:
                continue
            rest = key + offset
            comps = []
            for size in reversed(dims):
                rest, r = divmod(rest, size)
                comps.append(r)
            comps = comps[::-1]
            weight = tuple(comps[i] - wbound[i] for i in range(rank))
            mono = (comps[rank] - qbound, comps[rank + 1] - vbound + ell)
            slot = acc_w.setdefault(weight, {})
            if mono in slot:
                slot[mono] += c
            else:
                slot[mono] = c
    out = {}
    for wgt, terms in acc_w.items():
        num = LaurentQV(terms)
        if not num.is_zero():
            out[wgt] = RatQV._raw(num, denominator)
    return CharacterElement(out), denominator


def e_mu_ramyip(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
                ctx: WalkContext | None = None) -> CharacterElement:
    """E_mu(q, t) as the weighted sum over B(id; m_mu)."""
    if ctx is None:
        ctx = WalkContext(rs, lam, mu)
    table = rs.weyl_table()
    d0 = table.id_of(ctx.m_mu.dir())
    seeds = [(d0, ctx.m_mu.wt(), -table.lengths[d0])]
    ch, _den = _walk_dp(ctx, ctx.word.K + 1, seeds)
    return ch


def p_lambda_ramyip(rs: RootSystem, lam: Sequence[int],
                    ctx: WalkContext | None = None) -> CharacterElement:
    """P_lambda(q, t): the same sum over B(w; m_lambda) for all w in W^S."""
    if ctx is None:
        ctx = WalkContext(rs, lam, lam)
    table = rs.weyl_table()
    dir_m = ctx.m_lambda.dir()
    seeds = []
    for w in ctx.order.pd.min_coset_reps():
        d0 = table.id_of(w * dir_m)
        seeds.append((d0, w.apply_weight(ctx.m_lambda.wt()),
                      -table.lengths[d0]))
    ch, _den = _walk_dp(ctx, ctx.word.M + 1, seeds)
    return ch


def e_mu_by_walk_sum(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]
                     ) -> CharacterElement:
    """Oracle route: literal walk-by-walk summation of the same formula."""
    ctx = WalkContext(rs, lam, mu)
    ell0 = ctx.m_mu.dir().length()
    out = CharacterElement()
    for walk in enumerate_walks(rs, lam, mu, ctx=ctx):
        end = walk.ed()
        pre = RatQV(LaurentQV.v_power(end.dir().length() - ell0))
        term = CharacterElement({end.wt(): pre * walk.l_statistic()})
        out = out + term
    return out


def p_lambda_by_walk_sum(rs: RootSystem, lam: Sequence[int]) -> CharacterElement:
    ctx = WalkContext(rs, lam, lam)
    out = CharacterElement()
    for w in ctx.order.pd.min_coset_reps():
        ell0 = (w * ctx.m_lambda.dir()).length()
        for walk in enumerate_walks(rs, lam, lam, w=w, ctx=ctx):
            end = walk.ed()
            pre = RatQV(LaurentQV.v_power(end.dir().length() - ell0))
            out = out + CharacterElement({end.wt(): pre * walk.l_statistic()})
    return out


# ---------------------------------------------------------------------------
# The bijection with chain pairs.
# ---------------------------------------------------------------------------


def xi(walk: AlcoveWalk) -> PqlsPair:
    """Group folds by equal d-ratio and push the directions through w0."""
    ctx = walk.ctx
    rs = ctx.rs
    w0 = ctx.w0
    xs = [z.dir() for z in walk.steps]
    ds = [ctx.position_by_k[k].ratio for k in walk.J]
    labels = [ctx.position_by_k[k].pair_label for k in walk.J]
    times: List[Fraction] = [Fraction(0)]
    chains: List[PqlsChain] = []
    i = 0
    r = len(walk.J)
    # leading block of d = 0 becomes the first chain (possibly empty)
    j = i
    while j < r and ds[j] == 0:
        j += 1
    chains.append(PqlsChain(xs[0] * w0, tuple(labels[i:j])))
    i = j
    while i < r:
        d = ds[i]
        j = i
        while j < r and ds[j] == d:
            j += 1
        times.append(d)
        chains.append(PqlsChain(xs[i] * w0, tuple(labels[i:j])))
        i = j
    times.append(Fraction(1))
    return PqlsPair(chains, times)


def xi_inverse(ctx: WalkContext, pair: PqlsPair,
               w: WeylElement | None = None) -> AlcoveWalk:
    """Locate each chain edge inside the adapted word and replay the walk."""
    rs = ctx.rs
    w0 = ctx.w0
    if w is None:
        w = rs.identity()
    lam_minus = ctx.order.lam_minus
    positions: List[int] = []
    for p, chain in enumerate(pair.chains):
        tau = pair.times[p]
        for k in chain.labels:
            finite = w0.apply_root_index(k)  # w0 beta^vee, a negative root
            pairing = -rs.pair_weight_coroot(lam_minus, finite)  # <lam_-, -w0 b^v>
            a = (tau - 1) * pairing
            if a.denominator != 1:
                raise ValueError("chain edge does not match any walk position")
            tilde = AffineRoot(finite, int(a))
            kk = ctx.gamma_to_k.get(tilde)
            if kk is None or kk <= ctx.word.K:
                raise ValueError("chain edge outside the m_mu suffix")
            positions.append(kk)
    if any(a >= b for a, b in zip(positions, positions[1:])):
        raise ValueError("recovered positions are not increasing")
    return walk_from_positions(ctx, w, positions)
