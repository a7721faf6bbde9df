"""Paths and chain pairs on the double Bruhat graph.

A path is a sequence of minimal coset representatives with rational
breakpoints, consecutive directions joined in the graph restricted at the
breakpoint time.  A pair is the richer datum: one label-decreasing
reflection chain per segment (decreasing in the tuple order; increasing
along the arrows), subject to the start/label conditions tied to mu.
Forgetting the chains and flooring the segment ends is the projection
``pr``; ``lift_path`` inverts it constructively.

Since every reflection step is an edge of the full graph, a chain is
exactly a subset of its allowed label set, sorted decreasingly; the whole
pair set is therefore a product of subset choices, which both the
enumeration and the generating-function assembly exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from .dbg import (ReflectionOrder, DirectedPath, classify_edge, deg_edge,
                  make_label_increasing, reachability_group, shortest_path)
from .qt import RatQV
from .root_system import (RootSystem, WeylElement, bruhat_leq, is_dominant,
                          min_coset_rep, parabolic, s_lambda)


def candidate_times(rs: RootSystem, lam: Sequence[int]) -> Tuple[Fraction, ...]:
    """Interior breakpoint candidates: k / <lam, beta^vee> in (0, 1)."""
    S = s_lambda(rs, lam)
    wall = parabolic(rs, S).wall_root_indices()
    out = set()
    for k in rs.positive_root_indices():
        if k in wall:
            continue
        pairing = rs.pair_weight_coroot(lam, k)
        for j in range(1, pairing):
            out.add(Fraction(j, pairing))
    return tuple(sorted(out))


def labels_at_time(rs: RootSystem, lam: Sequence[int], tau: Fraction
                   ) -> Tuple[int, ...]:
    """Roots outside Delta_S^+ whose pairing clears the denominator of tau."""
    S = s_lambda(rs, lam)
    wall = parabolic(rs, S).wall_root_indices()
    return tuple(k for k in rs.positive_root_indices()
                 if k not in wall
                 and (tau * rs.pair_weight_coroot(lam, k)).denominator == 1)


class PqlsPath:
    """(w_1, ..., w_s; tau_0, ..., tau_s) with all w_i in W^S."""

    __slots__ = ("dirs", "times")

    def __init__(self, dirs: Sequence[WeylElement], times: Sequence[Fraction]):
        self.dirs: Tuple[WeylElement, ...] = tuple(dirs)
        self.times: Tuple[Fraction, ...] = tuple(Fraction(t) for t in times)

    def __eq__(self, other):
        return (isinstance(other, PqlsPath) and self.dirs == other.dirs
                and self.times == other.times)

    def __hash__(self):
        return hash((tuple(w.perm for w in self.dirs), self.times))

    def steps(self) -> int:
        return len(self.dirs)

    def validate(self, rs: RootSystem, lam: Sequence[int]) -> None:
        if len(self.times) != len(self.dirs) + 1:
            raise ValueError("time/direction count mismatch")
        if self.times[0] != 0 or self.times[-1] != 1:
            raise ValueError("times must start at 0 and end at 1")
        if any(a >= b for a, b in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")
        S = s_lambda(rs, lam)
        for w in self.dirs:
            if min_coset_rep(w, S) != w:
                raise ValueError("direction not a minimal coset representative")
        for a, b in zip(self.dirs, self.dirs[1:]):
            if a == b:
                raise ValueError("consecutive directions must differ")
        for i in range(len(self.dirs) - 1):
            tau = self.times[i + 1]
            group = reachability_group(rs, lam, tau)
            if (self.dirs[i + 1].inverse() * self.dirs[i]).perm not in group:
                raise ValueError(
                    f"no directed path from step {i + 2} to step {i + 1} "
                    f"at time {tau}")

    def wt(self, lam: Sequence[int]) -> Tuple[int, ...]:
        """sum (tau_{i+1} - tau_i) w_{i+1} lambda; must land in P."""
        rank = len(lam)
        acc = [Fraction(0)] * rank
        for i, w in enumerate(self.dirs):
            seg = self.times[i + 1] - self.times[i]
            img = w.apply_weight(lam)
            for j in range(rank):
                acc[j] += seg * img[j]
        if any(x.denominator != 1 for x in acc):
            raise ValueError(f"non-integral weight {acc}: broken path")
        return tuple(int(x) for x in acc)

    def key(self) -> tuple:
        return (tuple(w.perm for w in self.dirs), self.times)

    def to_json(self) -> dict:
        from .root_system import format_element
        return {"dirs": [format_element(w) for w in self.dirs],
                "times": [str(t) for t in self.times]}

    def __repr__(self):
        from .root_system import format_element
        dirs = ", ".join(format_element(w) for w in self.dirs)
        times = ", ".join(str(t) for t in self.times)
        return f"PqlsPath(({dirs}; {times}))"


def path_from_json(rs: RootSystem, data: dict) -> PqlsPath:
    from .root_system import parse_word
    return PqlsPath([parse_word(s, rs) for s in data["dirs"]],
                    [Fraction(t) for t in data["times"]])


@dataclass(frozen=True)
class PqlsChain:
    """One label-decreasing chain w_0 <-b_1 w_1 <- ... <-b_t w_t."""

    start: WeylElement
    labels: Tuple[int, ...]

    def vertices(self) -> Tuple[WeylElement, ...]:
        rs = self.start.rs
        out = [self.start]
        for k in self.labels:
            out.append(out[-1] * rs.reflection(k))
        return tuple(out)

    def end(self) -> WeylElement:
        return self.vertices()[-1]


class PqlsPair:
    """Chains (one per segment) plus the breakpoint times."""

    __slots__ = ("chains", "times")

    def __init__(self, chains: Sequence[PqlsChain], times: Sequence[Fraction]):
        self.chains: Tuple[PqlsChain, ...] = tuple(chains)
        self.times: Tuple[Fraction, ...] = tuple(Fraction(t) for t in times)

    def __eq__(self, other):
        return (isinstance(other, PqlsPair) and self.chains == other.chains
                and self.times == other.times)

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        return (tuple((c.start.perm, c.labels) for c in self.chains), self.times)

    def segments(self) -> int:
        return len(self.chains)

    def last_end(self) -> WeylElement:
        return self.chains[-1].end()

    def translate(self, w: WeylElement) -> "PqlsPair":
        return PqlsPair([PqlsChain(w * c.start, c.labels) for c in self.chains],
                        self.times)

    def validate(self, order: ReflectionOrder, w: WeylElement | None = None) -> None:
        rs = order.rs
        if w is None:
            w = rs.identity()
        s = len(self.chains)
        if len(self.times) != s + 1:
            raise ValueError("times/chains mismatch")
        if self.times[0] != 0 or self.times[-1] != 1:
            raise ValueError("times must run from 0 to 1")
        if any(a >= b for a, b in zip(self.times, self.times[1:])):
            raise ValueError("times must increase")
        # (iv) with translation: w_{0,0} = w v(mu) w0(S)
        if self.chains[0].start != w * order.v_mu * order.w0S:
            raise ValueError("pair does not start at w v(mu) w0(S)")
        chain0_allowed = set(order.chain0_label_indices())
        for p, chain in enumerate(self.chains):
            for a, b in zip(chain.labels, chain.labels[1:]):
                if not order.precedes(b, a):
                    raise ValueError("chain labels not decreasing")
            for k in chain.labels:
                if k in order.wall_roots:
                    raise ValueError("chain label inside Delta_S^+")
                if p == 0:
                    # (iii) w0(S) beta in Delta^+ cap v(mu)^{-1} Delta^-
                    if k not in chain0_allowed:
                        raise ValueError("first chain label violates (iii)")
                else:
                    # (i) sigma_p <lam, beta^vee> integral
                    pairing = rs.pair_weight_coroot(order.lam, k)
                    if (self.times[p] * pairing).denominator != 1:
                        raise ValueError("chain label violates (i)")
            if p >= 1 and not chain.labels:
                raise ValueError("interior chains must be nonempty")
        for p in range(s - 1):
            if self.chains[p].end() != self.chains[p + 1].start:
                raise ValueError("chains do not concatenate")

    def r_statistic(self, order: ReflectionOrder) -> RatQV:
        """Product of the (sigma_p, lambda)-degrees over all chain edges."""
        out = RatQV.one()
        for p, chain in enumerate(self.chains):
            b = self.times[p]
            verts = chain.vertices()
            for m, k in enumerate(chain.labels):
                # edge w_{p,m} -> w_{p,m-1} with source w_{p,m}
                out = out * deg_edge(verts[m + 1], k, b, order.lam)
        return out

    def to_json(self) -> dict:
        from .root_system import format_element
        rs = self.chains[0].start.rs
        chains = []
        for c in self.chains:
            verts = c.vertices()
            chains.append({
                "start": format_element(c.start),
                "steps": [{"label": list(rs.roots[k]),
                           "to": format_element(v)}
                          for k, v in zip(c.labels, verts[1:])],
            })
        return {"chains": chains, "times": [str(t) for t in self.times]}

    def __repr__(self):
        from .root_system import format_element
        rs = self.chains[0].start.rs
        bits = []
        for c in self.chains:
            verts = c.vertices()
            text = format_element(verts[0])
            for k, v in zip(c.labels, verts[1:]):
                text += f" <-{rs.roots[k]}- {format_element(v)}"
            bits.append("(" + text + ")")
        times = ", ".join(str(t) for t in self.times)
        return f"PqlsPair({'; '.join(bits)}; {times})"


def pr_pair(pair: PqlsPair, order: ReflectionOrder) -> PqlsPath:
    """(floor(w_{0,t_0}), ..., floor(w_{s-1,t_{s-1}}); sigma), merged."""
    S = order.S
    dirs: List[WeylElement] = []
    times: List[Fraction] = [Fraction(0)]
    for p, chain in enumerate(pair.chains):
        d = min_coset_rep(chain.end(), S)
        if dirs and dirs[-1] == d:
            times[-1] = pair.times[p + 1]  # merge: drop the breakpoint
        else:
            dirs.append(d)
            times.append(pair.times[p + 1])
    return PqlsPath(dirs, times)


# ---------------------------------------------------------------------------
# Enumeration.
# ---------------------------------------------------------------------------


def enumerate_paths(rs: RootSystem, lam: Sequence[int]) -> Iterator[PqlsPath]:
    """All paths of shape lambda, built breakpoint by breakpoint."""
    if not is_dominant(lam):
        raise ValueError("lambda must be dominant")
    S = s_lambda(rs, lam)
    reps = parabolic(rs, S).min_coset_reps()
    cand = candidate_times(rs, lam)
    groups = [reachability_group(rs, lam, t) for t in cand]

    def rec(dirs: List[WeylElement], times: List[Fraction], idx: int
            ) -> Iterator[PqlsPath]:
        yield PqlsPath(dirs, times + [Fraction(1)])
        cur = dirs[-1]
        for j in range(idx, len(cand)):
            for w in reps:
                if w == cur:
                    continue
                if (w.inverse() * cur).perm in groups[j]:
                    yield from rec(dirs + [w], times + [cand[j]], j + 1)

    for w1 in reps:
        yield from rec([w1], [Fraction(0)], 0)


def enumerate_bpqls_mu(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]
                       ) -> Iterator[PqlsPath]:
    """Paths whose first direction is Bruhat-below v(mu)."""
    from .root_system import v_of_mu
    v_mu = v_of_mu(rs, lam, mu)
    for path in enumerate_paths(rs, lam):
        if bruhat_leq(path.dirs[0], v_mu):
            yield path


def _decreasing(order: ReflectionOrder, labels: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(labels, key=lambda k: order.position[k]))


def _subsets(items: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    n = len(items)
    for mask in range(1 << n):
        yield tuple(items[i] for i in range(n) if mask >> i & 1)


def enumerate_pairs(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
                    order: ReflectionOrder | None = None) -> Iterator[PqlsPair]:
    """All pairs of shape lambda for mu: subsets of allowed labels per slot.

    A chain with strictly decreasing labels is determined by its label set,
    so the first chain ranges over subsets of the condition-(iii) pool and
    each interior breakpoint over nonempty subsets of its divisibility pool.
    """
    if order is None:
        order = ReflectionOrder(rs, lam, mu)
    start = order.v_mu * order.w0S
    chain0_pool = _decreasing(order, order.chain0_label_indices())
    cand = candidate_times(rs, lam)
    pools = [_decreasing(order, labels_at_time(rs, lam, t)) for t in cand]

    def rec(chains: List[PqlsChain], times: List[Fraction], idx: int
            ) -> Iterator[PqlsPair]:
        yield PqlsPair(chains, times + [Fraction(1)])
        for j in range(idx, len(cand)):
            if not pools[j]:
                continue
            cur_end = chains[-1].end()
            for labels in _subsets(pools[j]):
                if not labels:
                    continue
                chain = PqlsChain(cur_end, _decreasing(order, labels))
                yield from rec(chains + [chain], times + [cand[j]], j + 1)

    for labels0 in _subsets(chain0_pool):
        chain0 = PqlsChain(start, _decreasing(order, labels0))
        yield from rec([chain0], [Fraction(0)], 0)


def enumerate_pair_orbit(rs: RootSystem, lam: Sequence[int]
                         ) -> Iterator[Tuple[WeylElement, PqlsPair]]:
    """The disjoint union of w-translates of the mu = lambda pairs."""
    order = ReflectionOrder(rs, lam, lam)
    reps = order.pd.min_coset_reps()
    for pair in enumerate_pairs(rs, lam, lam, order):
        for w in reps:
            yield w, pair.translate(w)


# ---------------------------------------------------------------------------
# Lifting a path to a pair.
# ---------------------------------------------------------------------------


def _greedy_subword(rs: RootSystem, letters: Sequence[int], target: WeylElement
                    ) -> List[int] | None:
    """Positions (0-based, into ``letters``) of a subword multiplying to target.

    Scans from the right, taking a letter exactly when it shortens what is
    left of the target; standard for the subword criterion.
    """
    chosen: List[int] = []
    u = target
    for p in range(len(letters) - 1, -1, -1):
        if u.is_identity():
            break
        s = rs.simple_reflection(letters[p])
        if (u * s).length() < u.length():
            chosen.append(p)
            u = u * s
    if not u.is_identity():
        return None
    return sorted(chosen)


def lift_path(rs: RootSystem, path: PqlsPath, order: ReflectionOrder) -> PqlsPair:
    """A pair projecting to the given path, per the fiber construction."""
    path.validate(rs, order.lam)
    w1 = path.dirs[0]
    if not bruhat_leq(w1, order.v_mu):
        raise ValueError("path is not below v(mu)")
    vmu_letters = order.letters[order.K:order.M]
    chosen = _greedy_subword(rs, vmu_letters, w1)
    if chosen is None:
        raise AssertionError("subword extraction failed despite Bruhat bound")
    complement = [p for p in range(len(vmu_letters)) if p not in set(chosen)]
    labels0 = tuple(order.beta_indices[order.K + p] for p in complement)
    chain0 = PqlsChain(order.v_mu * order.w0S, labels0)
    if min_coset_rep(chain0.end(), order.S) != w1:
        raise AssertionError("first chain does not land on w_1 W_S")

    chains = [chain0]
    for i in range(len(path.dirs) - 1):
        tau = path.times[i + 1]
        cur_end = chains[-1].end()
        raw = shortest_path(path.dirs[i + 1], cur_end, tau, order.lam)
        inc = make_label_increasing(raw, order, tau, order.lam,
                                    strip_parabolic_prefix=True)
        # the arrow-direction path start .. end becomes the chain read
        # backwards: tuple labels are the arrow labels reversed
        chain = PqlsChain(cur_end, tuple(reversed(inc.labels)))
        if chain.end() != inc.vertices[0]:
            raise AssertionError("chain reconstruction mismatch")
        if not chain.labels:
            raise AssertionError("empty interior chain during lift")
        chains.append(chain)
    pair = PqlsPair(chains, path.times)
    pair.validate(order)
    projected = pr_pair(pair, order)
    if projected != path:
        raise AssertionError("lift does not project back to the path")
    return pair
