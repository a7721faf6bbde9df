"""Macdonald polynomials from the chain-pair model, with specializations.

``e_mu_pqls`` and ``p_lambda_pqls`` assemble the graded sums over chain
pairs.  Because a chain is a subset of its allowed label pool, the sum is
evaluated by a forward dynamic program over (breakpoint, current chain
end): between breakpoints the weight accrues linearly in the current
direction, and at a breakpoint an optional nonempty label subset moves the
end and multiplies the edge degrees.  Pair-by-pair summation is kept as an
oracle route for tests.

Specializations: q -> 0 (Hall-Littlewood, two routes which provably
disagree in print, see ``hall_littlewood``), q -> 1 with t = q^gamma
(Jack), and q = t = 0 against Freudenthal and Demazure character oracles.
"""

from __future__ import annotations

import numpy as np

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .dbg import BRUHAT, ReflectionOrder, classify_edge
from .pqls import (PqlsPair, candidate_times, enumerate_pair_orbit,
                   enumerate_pairs, labels_at_time, pr_pair)
from .qt import (CharacterElement, LaurentQV, RatQV, factor_poly, jack_limit,
                 NUMPY_KEY_LIMIT as _NUMPY_KEY_LIMIT,
                 merge_packed_contributions as _merge_contributions)
from .root_system import (RootSystem, WeylElement, is_dominant,
                          orbit_with_reps, parabolic, s_lambda, v_of_mu)

FKey = Tuple[Fraction, ...]


def _bruhat_num() -> LaurentQV:
    return LaurentQV({(0, -1): Fraction(1), (0, 1): Fraction(-1)})


def _quantum_num(qe: int, te: int) -> LaurentQV:
    return LaurentQV({(qe, 2 * te - 1): Fraction(1),
                      (qe, 2 * te + 1): Fraction(-1)})


def _decreasing_pool(order: ReflectionOrder, labels: Sequence[int]
                     ) -> Tuple[int, ...]:
    return tuple(sorted(labels, key=lambda k: order.position[k]))


def _pqls_dp(rs: RootSystem, lam: Tuple[int, ...], order: ReflectionOrder,
             seeds: Dict[int, int]) -> CharacterElement:
    """Breakpoint-and-slot dynamic program over the pair structure.

    The sum over pairs factors through binary choices, one per (breakpoint,
    label) slot taken in the chain's decreasing label order: skip the label
    (multiply by its untouched binomial) or append the edge (multiply by its
    degree numerator and move the chain end).  Between breakpoints the weight
    accrues linearly in the current end.  State per chain end id is one flat
    dict keyed by a packed integer (scaled weight accrual, q-exp, v-exp); the
    whole sum lands over the product of all slot binomials.

    ``seeds`` maps starting end ids to a v-power (the length prefactor).
    """
    table = rs.weyl_table()
    nW = len(table.elements)
    rank = rs.rank
    lam_images = [table.elements[d].apply_weight(lam) for d in range(nW)]
    cand = candidate_times(rs, lam)
    pools = [(Fraction(0), _decreasing_pool(order, order.chain0_label_indices()))]
    pools += [(tau, _decreasing_pool(order, labels_at_time(rs, lam, tau)))
              for tau in cand]

    lden = 1
    for k in rs.positive_root_indices():
        p = rs.pair_weight_coroot(lam, k)
        if p:
            lden = lden * p // __import__("math").gcd(lden, p)
    wbound = [1 + lden * max(abs(lam_images[d][i]) for d in range(nW))
              for i in range(rank)]
    qbound, vbound = 1, rs.npos + 1
    for tau, pool in pools:
        for k in pool:
            qe = int((1 - tau) * rs.pair_weight_coroot(lam, k))
            qbound += qe
            vbound += 2 * rs.pair_rho_coroot(k) + 1
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

    zero = (0,) * rank
    n_slots = sum(len(pool) for _tau, pool in pools)
    offset_probe = pack(tuple(wbound), qbound, vbound)
    use_numpy = offset_probe < _NUMPY_KEY_LIMIT // 4 and n_slots <= 40
    denominator = LaurentQV.one()
    prev = Fraction(0)
    if use_numpy:
        state_np: List[tuple | None] = [None] * nW
        for el, vpow in seeds.items():
            state_np[el] = (np.array([pack(zero, 0, vpow)], dtype=np.int64),
                            np.array([1], dtype=np.int64))
        for tau, pool in pools:
            dt = tau - prev
            prev = tau
            if dt:
                for el in range(nW):
                    if state_np[el] is not None:
                        shift = pack(tuple(int(dt * lden) * x
                                           for x in lam_images[el]), 0, 0)
                        keys, coeffs = state_np[el]
                        state_np[el] = (keys + shift, coeffs)
            for k in pool:
                qe = int((1 - tau) * rs.pair_weight_coroot(lam, k))
                te = rs.pair_rho_coroot(k)
                denominator = denominator * factor_poly(qe, te)
                d_binom = pack(zero, qe, 2 * te)
                rmul = table.rmul_by_reflection(k)
                contrib: List[list | None] = [None] * nW
                for el in range(nW):
                    if state_np[el] is None:
                        continue
                    keys, coeffs = state_np[el]
                    parts = contrib[el]
                    if parts is None:
                        parts = contrib[el] = []
                    parts.append((keys, coeffs))
                    parts.append((keys + d_binom, -coeffs))
                    el2 = rmul[el]
                    # edge el2 -> el: Bruhat when the target is longer
                    d_lo = -1 if table.lengths[el] > table.lengths[el2] \
                        else d_binom - 1
                    parts2 = contrib[el2]
                    if parts2 is None:
                        parts2 = contrib[el2] = []
                    parts2.append((keys + d_lo, coeffs))
                    parts2.append((keys + (d_lo + 2), -coeffs))
                state_np = [(_merge_contributions(p) if p else None)
                            for p in contrib]
        state = [
            dict(zip(p[0].tolist(), p[1].tolist())) if p is not None else None
            for p in state_np
        ]
    else:
        state: List[Dict[int, int] | None] = [None] * nW
        for el, vpow in seeds.items():
            state[el] = {pack(zero, 0, vpow): 1}
        for tau, pool in pools:
            dt = tau - prev
            prev = tau
            if dt:
                for el in range(nW):
                    if state[el]:
                        shift = pack(tuple(int(dt * lden) * x
                                           for x in lam_images[el]), 0, 0)
                        state[el] = {key + shift: c
                                     for key, c in state[el].items()}
            for k in pool:
                qe = int((1 - tau) * rs.pair_weight_coroot(lam, k))
                te = rs.pair_rho_coroot(k)
                denominator = denominator * factor_poly(qe, te)
                d_binom = pack(zero, qe, 2 * te)
                rmul = table.rmul_by_reflection(k)
                nxt: List[Dict[int, int] | None] = [None] * nW
                for el in range(nW):
                    bucket = state[el]
                    if not bucket:
                        continue
                    acc = nxt[el]
                    if acc is None:
                        acc = nxt[el] = dict(bucket)
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
                    el2 = rmul[el]
                    # edge el2 -> el: Bruhat when the target is longer
                    d_lo = -1 if table.lengths[el] > table.lengths[el2] \
                        else d_binom - 1
                    d_hi = d_lo + 2
                    acc2 = nxt[el2]
                    if acc2 is None:
                        acc2 = nxt[el2] = {}
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
                state = nxt
            # drop cancelled entries once per breakpoint
            state = [({k: v for k, v in b.items() if v} if b else None)
                     for b in state]

    dt = Fraction(1) - prev
    offset = pack(tuple(wbound), qbound, vbound)
    dims = [2 * b + 1 for b in wbound] + [sq, sv]

    acc_out: Dict[tuple, Dict[tuple, int]] = {}
    for el in range(nW):
        bucket = state[el]
        if not bucket:
            continue
        final_shift = tuple(int(dt * lden) * x for x in lam_images[el])
        ell = table.lengths[el]
        for key, c in bucket.items():
            if not c:
                continue
            rest = key + offset
            comps = []
            for size in reversed(dims):
                rest, r = divmod(rest, size)
                comps.append(r)
            comps = comps[::-1]
            scaled = tuple(comps[i] - wbound[i] + final_shift[i]
                           for i in range(rank))
            if any(x % lden for x in scaled):
                raise AssertionError("non-integral weight in the pair sum")
            weight = tuple(x // lden for x in scaled)
            mono = (comps[rank] - qbound, comps[rank + 1] - vbound - ell)
            slot = acc_out.setdefault(weight, {})
            if mono in slot:
                slot[mono] += c
            else:
                slot[mono] = c
    out = {}
    for wgt, terms in acc_out.items():
        num = LaurentQV(terms)
        if not num.is_zero():
            out[wgt] = RatQV._raw(num, denominator)
    return CharacterElement(out)


def e_mu_pqls(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
              order: ReflectionOrder | None = None) -> CharacterElement:
    """E_mu(q, t) summed over the chain pairs for mu."""
    lam = tuple(lam)
    if order is None:
        order = ReflectionOrder(rs, lam, mu)
    table = rs.weyl_table()
    start = order.v_mu * order.w0S
    return _pqls_dp(rs, lam, order, {table.id_of(start): start.length()})


def p_lambda_pqls(rs: RootSystem, lam: Sequence[int],
                  order: ReflectionOrder | None = None) -> CharacterElement:
    """P_lambda(q, t) summed over all translates of the mu = lambda pairs."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError("lambda must be dominant")
    if order is None:
        order = ReflectionOrder(rs, lam, lam)
    table = rs.weyl_table()
    seeds: Dict[int, int] = {}
    for w in order.pd.min_coset_reps():
        el = table.id_of(w * order.w0S)
        assert el not in seeds
        seeds[el] = table.lengths[el]
    return _pqls_dp(rs, lam, order, seeds)


# -- oracle routes (pair-by-pair, desk scale) --------------------------------


def e_mu_by_pair_sum(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]
                     ) -> CharacterElement:
    order = ReflectionOrder(rs, lam, mu)
    pre0 = (order.v_mu * order.w0S).length()
    out = CharacterElement()
    for pair in enumerate_pairs(rs, lam, mu, order):
        ell = pair.last_end().length()
        coeff = RatQV(LaurentQV.v_power(pre0 - ell)) * pair.r_statistic(order)
        out = out + CharacterElement({pr_pair(pair, order).wt(lam): coeff})
    return out


def p_lambda_by_pair_sum(rs: RootSystem, lam: Sequence[int]) -> CharacterElement:
    order = ReflectionOrder(rs, lam, lam)
    out = CharacterElement()
    for w, pair in enumerate_pair_orbit(rs, lam):
        pre0 = (w * order.w0S).length()
        ell = pair.last_end().length()
        coeff = RatQV(LaurentQV.v_power(pre0 - ell)) * pair.r_statistic(order)
        out = out + CharacterElement({pr_pair(pair, order).wt(lam): coeff})
    return out


# ---------------------------------------------------------------------------
# Jack limit: q -> 1 along t = q^gamma.
# ---------------------------------------------------------------------------


def jack(rs: RootSystem, lam: Sequence[int], gamma: Fraction
         ) -> CharacterElement:
    """Jack polynomial at parameter 1/gamma, with exact rational coefficients.

    Every edge degree collapses to 1 / (gamma^{-1} sigma <lam, b^v> + <rho, b^v>)
    and the power prefactors collapse to 1.
    """
    lam = tuple(lam)
    gamma = Fraction(gamma)
    order = ReflectionOrder(rs, lam, lam)
    table = rs.weyl_table()
    rank = rs.rank
    lam_images = [table.elements[d].apply_weight(lam)
                  for d in range(len(table.elements))]
    zero: FKey = (Fraction(0),) * rank
    state: Dict[int, Dict[FKey, Fraction]] = {}
    for w in order.pd.min_coset_reps():
        el = table.id_of(w * order.w0S)
        state.setdefault(el, {})[zero] = (state.get(el, {}).get(zero, Fraction(0))
                                          + 1)
    prev = Fraction(0)
    for tau in candidate_times(rs, lam):
        dt = tau - prev
        prev = tau
        accrued: Dict[int, Dict[FKey, Fraction]] = {}
        for el, bucket in state.items():
            shift = tuple(dt * x for x in lam_images[el])
            accrued[el] = {tuple(a + b for a, b in zip(key, shift)): val
                           for key, val in bucket.items()}
        pool = _decreasing_pool(order, labels_at_time(rs, lam, tau))
        state = {el: dict(bucket) for el, bucket in accrued.items()}
        rmul = {k: table.rmul_by_reflection(k) for k in pool}
        factor = {k: jack_limit(tau, rs.pair_weight_coroot(lam, k),
                                rs.pair_rho_coroot(k), gamma) for k in pool}

        def rec(el0: int, i: int, cur: int, fac: Fraction, used: bool):
            if i == len(pool):
                if used:
                    target = state.setdefault(cur, {})
                    for key, val in accrued[el0].items():
                        target[key] = target.get(key, Fraction(0)) + val * fac
                return
            rec(el0, i + 1, cur, fac, used)
            k = pool[i]
            rec(el0, i + 1, rmul[k][cur], fac * factor[k], True)

        for el in list(accrued):
            rec(el, 0, el, Fraction(1), False)
    dt = Fraction(1) - prev
    out: Dict[tuple, RatQV] = {}
    for el, bucket in state.items():
        shift = tuple(dt * x for x in lam_images[el])
        for key, val in bucket.items():
            weight = tuple(a + b for a, b in zip(key, shift))
            assert all(x.denominator == 1 for x in weight)
            weight = tuple(int(x) for x in weight)
            out[weight] = out.get(weight, RatQV.zero()) + RatQV.scalar(val)
    return CharacterElement(out)


# ---------------------------------------------------------------------------
# Hall-Littlewood: q -> 0, two routes plus the printed-value comparison.
# ---------------------------------------------------------------------------


def enumerate_pls(rs: RootSystem, lam: Sequence[int]) -> List[PqlsPair]:
    """Translated pairs all of whose chain edges are Bruhat."""
    out = []
    for _w, pair in enumerate_pair_orbit(rs, lam):
        good = True
        for chain in pair.chains:
            verts = chain.vertices()
            for m, k in enumerate(chain.labels):
                if classify_edge(verts[m + 1], k) != BRUHAT:
                    good = False
                    break
            if not good:
                break
        if good:
            out.append(pair)
    return out


def character_q0(ch: CharacterElement) -> CharacterElement:
    return CharacterElement({w: c.specialize_q0() for w, c in ch.terms.items()})


def character_q0t0(ch: CharacterElement) -> Dict[tuple, Fraction]:
    out = {}
    for w, c in ch.terms.items():
        val = c.specialize_q0t0()
        if val:
            out[w] = val
    return out


@dataclass
class HallLittlewoodReport:
    """Both q = 0 routes and whether they agree.

    ``from_specialization`` sets q = 0 in the full graded sum, keeping the
    half-integral power prefactor; ``literal_sum`` is the prefactor-free
    all-Bruhat formula.  The two disagree (by design of the check): the
    prefactor-free corollary is inconsistent with the q = 0 limit of the
    full sum, and a printed example value differs from both.
    """

    from_specialization: CharacterElement
    literal_sum: CharacterElement
    routes_agree: bool


def hall_littlewood(rs: RootSystem, lam: Sequence[int],
                    p_full: CharacterElement | None = None
                    ) -> HallLittlewoodReport:
    lam = tuple(lam)
    if p_full is None:
        p_full = p_lambda_pqls(rs, lam)
    route_a = character_q0(p_full)
    order = ReflectionOrder(rs, lam, lam)
    route_b = CharacterElement()
    for pair in enumerate_pls(rs, lam):
        total = sum(len(c.labels) for c in pair.chains)
        coeff = RatQV(_bruhat_num() ** total)
        route_b = route_b + CharacterElement(
            {pr_pair(pair, order).wt(lam): coeff})
    return HallLittlewoodReport(route_a, route_b, route_a == route_b)


# ---------------------------------------------------------------------------
# Classical character oracles.
# ---------------------------------------------------------------------------


def _symmetrizer(rs: RootSystem) -> Tuple[Fraction, ...]:
    """d_i with d_i * cartan[i][j] symmetric, normalized to d_min = 1."""
    n = rs.rank
    d: List[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(n):
            if i != j and rs.cartan[i][j] and d[j] is None:
                d[j] = d[i] * Fraction(rs.cartan[i][j], rs.cartan[j][i])
                frontier.append(j)
    if any(x is None for x in d):
        raise ValueError("disconnected Cartan matrix")
    lo = min(x for x in d)
    return tuple(x / lo for x in d)


def _inner(rs: RootSystem, d: Tuple[Fraction, ...], mu: Sequence, nu: Sequence
           ) -> Fraction:
    """W-invariant form (mu, nu), both in fundamental coordinates."""
    coords = rs.weights_to_root_coords(nu)
    return sum(c * di * m for c, di, m in zip(coords, d, mu))


def weight_support(rs: RootSystem, lam: Tuple[int, ...]) -> List[tuple]:
    """All weights of the irreducible module: dom(nu) <= lam under dominance."""
    from .root_system import dominance_less
    dominant_cache: Dict[tuple, bool] = {}

    def ok(nu: tuple) -> bool:
        if nu not in dominant_cache:
            dom = _dominant_rep(rs, nu)
            dominant_cache[nu] = dom == lam or dominance_less(rs, dom, lam)
        return dominant_cache[nu]

    seen = {lam}
    frontier = [lam]
    alphas = [rs.root_as_weight(rs.simple_indices[i]) for i in range(rs.rank)]
    while frontier:
        nxt = []
        for nu in frontier:
            for a in alphas:
                m2 = tuple(x - y for x, y in zip(nu, a))
                if m2 not in seen and ok(m2):
                    seen.add(m2)
                    nxt.append(m2)
        frontier = nxt
    return sorted(seen)


def _dominant_rep(rs: RootSystem, nu: Sequence) -> tuple:
    nu = tuple(nu)
    while True:
        for i in range(rs.rank):
            if nu[i] < 0:
                nu = rs.simple_reflection(i).apply_weight(nu)
                break
        else:
            return nu


def weyl_character(rs: RootSystem, lam: Sequence[int]) -> CharacterElement:
    """Character of the irreducible module by the Freudenthal recursion."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError("lambda must be dominant")
    d = _symmetrizer(rs)
    support = set(weight_support(rs, lam))
    # process from lam downward: increasing height of lam - nu
    dominants = sorted((nu for nu in support if is_dominant(nu)),
                       key=lambda nu: sum(rs.weights_to_root_coords(
                           tuple(a - b for a, b in zip(lam, nu)))))
    rho = rs.rho
    mult: Dict[tuple, Fraction] = {}
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    norm_top = _inner(rs, d, lam_rho, lam_rho)
    for nu in dominants:
        if nu == lam:
            mult[lam] = Fraction(1)
            continue
        total = Fraction(0)
        for k in rs.positive_root_indices():
            alpha = rs.root_as_weight(k)
            j = 1
            while True:
                up = tuple(a + j * b for a, b in zip(nu, alpha))
                if up not in support:
                    break
                m = mult.get(_dominant_rep(rs, up))
                if m:
                    total += m * _inner(rs, d, up, alpha)
                j += 1
        nu_rho = tuple(a + b for a, b in zip(nu, rho))
        denom = norm_top - _inner(rs, d, nu_rho, nu_rho)
        if denom <= 0:
            raise AssertionError("Freudenthal denominator must be positive")
        mult[nu] = 2 * total / denom
    out: Dict[tuple, RatQV] = {}
    for nu in support:
        m = mult[_dominant_rep(rs, nu)]
        assert m.denominator == 1
        if m:
            out[nu] = RatQV.scalar(m)
    return CharacterElement(out)


def demazure_character(rs: RootSystem, lam: Sequence[int], w: WeylElement
                       ) -> CharacterElement:
    """Iterated isobaric divided differences along a reduced word of w."""
    lam = tuple(lam)
    terms: Dict[tuple, int] = {lam: 1}
    for i in reversed(w.reduced_word()):
        terms = _demazure_step(rs, terms, i)
    # words act leftmost-outermost: pi_{i_1} ... pi_{i_l} e^lam
    return CharacterElement({nu: RatQV.scalar(c) for nu, c in terms.items() if c})


def _demazure_step(rs: RootSystem, terms: Dict[tuple, int], i: int
                   ) -> Dict[tuple, int]:
    alpha = rs.root_as_weight(rs.simple_indices[i])
    out: Dict[tuple, int] = {}

    def add(nu: tuple, c: int):
        out[nu] = out.get(nu, 0) + c
        if not out[nu]:
            del out[nu]

    for nu, c in terms.items():
        k = nu[i]
        if k >= 0:
            for j in range(k + 1):
                add(tuple(a - j * b for a, b in zip(nu, alpha)), c)
        elif k <= -2:
            for j in range(1, -k):
                add(tuple(a + j * b for a, b in zip(nu, alpha)), -c)
    return out
