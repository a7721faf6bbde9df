"""Root operators on the path set, one pair per root of either sign.

A path is read as the piecewise-linear map t -> eta(t); for a root alpha
the height function H(t) = <eta(t), alpha^vee> is piecewise linear with
rational breakpoints, H(0) = 0.  Writing m for the smallest integer value
H attains (never positive), the raising operator reflects the window
between the last visit to m+1 before the first visit to m; the lowering
operator reflects the window between the first visit to m and the last
visit to m+1 after it.  All minima and crossing times are exact rationals.

The expected counts eps = -m and phi = H(1) - m, the crystal axioms, and
connectedness by raising words are verified wholesale over an enumerated
path set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .pqls import PqlsPath, enumerate_paths
from .root_system import RootSystem, WeylElement, min_coset_rep, s_lambda


def path_value(path: PqlsPath, lam: Sequence[int], t: Fraction
               ) -> Tuple[Fraction, ...]:
    """eta(t), exactly, in fundamental coordinates."""
    t = Fraction(t)
    rank = len(lam)
    acc = [Fraction(0)] * rank
    for i, w in enumerate(path.dirs):
        a, b = path.times[i], path.times[i + 1]
        if t <= a:
            break
        seg = min(t, b) - a
        img = w.apply_weight(lam)
        for j in range(rank):
            acc[j] += seg * img[j]
    return tuple(acc)


def h_function(rs: RootSystem, path: PqlsPath, lam: Sequence[int], alpha: int
               ) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    """Breakpoints and values of H(t) = <eta(t), alpha^vee>."""
    values = [Fraction(0)]
    for i, w in enumerate(path.dirs):
        slope = rs.pair_weight_coroot(w.apply_weight(lam), alpha)
        values.append(values[-1] + (path.times[i + 1] - path.times[i]) * slope)
    return path.times, tuple(values)


def m_value(rs: RootSystem, path: PqlsPath, lam: Sequence[int], alpha: int
            ) -> int:
    """min({H(t)} cap Z); H(0) = 0 is always attained, so m <= 0."""
    import math
    _, values = h_function(rs, path, lam, alpha)
    m = 0
    for a, b in zip(values, values[1:]):
        lo, hi = min(a, b), max(a, b)
        lo_int = math.ceil(lo)
        if lo_int <= hi:
            m = min(m, lo_int)
    return m


def _first_hit(times: Sequence[Fraction], values: Sequence[Fraction],
               level: int) -> Fraction:
    """Smallest t with H(t) = level."""
    for i in range(len(values) - 1):
        a, b = values[i], values[i + 1]
        if a == level:
            return times[i]
        if min(a, b) <= level <= max(a, b) and a != b:
            return times[i] + (Fraction(level) - a) / (b - a) * (times[i + 1]
                                                                 - times[i])
    if values[-1] == level:
        return times[-1]
    raise AssertionError("level not attained")


def _last_hit_before(times: Sequence[Fraction], values: Sequence[Fraction],
                     level: int, bound: Fraction) -> Fraction:
    """Largest t <= bound with H(t) = level."""
    best = None
    for i in range(len(values) - 1):
        t0, t1 = times[i], times[i + 1]
        if t0 > bound:
            break
        a, b = values[i], values[i + 1]
        hi = min(t1, bound)
        if a == b:
            if a == level:
                best = hi
            continue
        bv = a + (b - a) * (hi - t0) / (t1 - t0)
        if min(a, bv) <= level <= max(a, bv):
            best = t0 + (Fraction(level) - a) / (b - a) * (t1 - t0)
    if best is None:
        raise AssertionError("level not attained in range")
    return best


def _last_hit_after(times: Sequence[Fraction], values: Sequence[Fraction],
                    level: int, bound: Fraction) -> Fraction:
    """Largest t in [bound, 1] with H(t) = level."""
    best = None
    for i in range(len(values) - 1):
        t0, t1 = times[i], times[i + 1]
        if t1 < bound:
            continue
        a, b = values[i], values[i + 1]
        if a == b:
            if a == level and t1 >= bound:
                best = t1
            continue
        if min(a, b) <= level <= max(a, b):
            t = t0 + (Fraction(level) - a) / (b - a) * (t1 - t0)
            if t >= bound:
                best = t
    if best is None:
        raise AssertionError("level not attained in range")
    return best


def _normalize(dirs: List[WeylElement], times: List[Fraction]) -> PqlsPath:
    """Drop zero-length segments, then merge adjacent equal directions."""
    nd: List[WeylElement] = []
    nt: List[Fraction] = [times[0]]
    for i, w in enumerate(dirs):
        if times[i] == times[i + 1]:
            continue
        if nd and nd[-1] == w:
            nt[-1] = times[i + 1]
        else:
            nd.append(w)
            nt.append(times[i + 1])
    return PqlsPath(nd, nt)


def _reflect_window(rs: RootSystem, path: PqlsPath, lam: Sequence[int],
                    alpha: int, t0: Fraction, t1: Fraction) -> PqlsPath:
    """Replace eta by s_alpha-reflected growth on [t0, t1] (tail follows)."""
    S = s_lambda(rs, lam)
    kpos = alpha if rs.is_positive_index(alpha) else rs.negate_index(alpha)
    s_alpha = rs.reflection(kpos)
    dirs, times = list(path.dirs), list(path.times)
    p = next(i for i in range(len(dirs)) if times[i] <= t0 < times[i + 1])
    q = next(i for i in range(len(dirs)) if times[i] < t1 <= times[i + 1])
    new_dirs = (dirs[:p + 1]
                + [min_coset_rep(s_alpha * dirs[u], S) for u in range(p, q + 1)]
                + dirs[q:])
    new_times = (times[:p + 1] + [t0] + times[p + 1:q + 1] + [t1]
                 + times[q + 1:])
    return _normalize(new_dirs, new_times)


def e_op(rs: RootSystem, lam: Sequence[int], path: PqlsPath, alpha: int
         ) -> Optional[PqlsPath]:
    """Raising operator for the root with index alpha (any sign)."""
    times, values = h_function(rs, path, lam, alpha)
    m = m_value(rs, path, lam, alpha)
    if m == 0:
        return None
    t1 = _first_hit(times, values, m)
    t0 = _last_hit_before(times, values, m + 1, t1)
    out = _reflect_window(rs, path, lam, alpha, t0, t1)
    out.validate(rs, lam)
    return out


def f_op(rs: RootSystem, lam: Sequence[int], path: PqlsPath, alpha: int
         ) -> Optional[PqlsPath]:
    """Lowering operator for the root with index alpha (any sign)."""
    times, values = h_function(rs, path, lam, alpha)
    m = m_value(rs, path, lam, alpha)
    if values[-1] == m:
        return None
    t0 = _first_hit(times, values, m)
    t1 = _last_hit_after(times, values, m + 1, t0)
    out = _reflect_window(rs, path, lam, alpha, t0, t1)
    out.validate(rs, lam)
    return out


def eps(rs: RootSystem, lam: Sequence[int], path: PqlsPath, alpha: int) -> int:
    return -m_value(rs, path, lam, alpha)


def phi(rs: RootSystem, lam: Sequence[int], path: PqlsPath, alpha: int) -> int:
    _, values = h_function(rs, path, lam, alpha)
    h1 = values[-1]
    assert h1.denominator == 1
    return int(h1) - m_value(rs, path, lam, alpha)


def straight_path(rs: RootSystem) -> PqlsPath:
    return PqlsPath([rs.identity()], [Fraction(0), Fraction(1)])


# ---------------------------------------------------------------------------
# Wholesale verification.
# ---------------------------------------------------------------------------


@dataclass
class AxiomReport:
    checked_paths: int = 0
    checked_pairs: int = 0
    vacuous_phi_minus_infinity: bool = True
    failures: List[str] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.failures


def verify_axioms(rs: RootSystem, lam: Sequence[int],
                  paths: Iterable[PqlsPath] | None = None) -> AxiomReport:
    """All seven axiom schemata over every (path, root) combination."""
    lam = tuple(lam)
    report = AxiomReport()
    if paths is None:
        paths = list(enumerate_paths(rs, lam))
    else:
        paths = list(paths)
    index = {p.key(): p for p in paths}
    roots = list(range(2 * rs.npos))
    for b in paths:
        try:
            b.validate(rs, lam)
            wt_b = b.wt(lam)
        except ValueError as exc:
            report.failures.append(f"invalid-path {b!r}: {exc}")
            continue
        report.checked_paths += 1
        for alpha in roots:
            report.checked_pairs += 1
            e_b = e_op(rs, lam, b, alpha)
            f_b = f_op(rs, lam, b, alpha)
            ve = eps(rs, lam, b, alpha)
            vp = phi(rs, lam, b, alpha)
            alpha_wt = rs.root_as_weight(alpha)
            # (i) phi = eps + <wt, alpha^vee>
            if vp != ve + rs.pair_weight_coroot(wt_b, alpha):
                report.failures.append(f"axiom-i {b!r} alpha={rs.roots[alpha]}")
            # (ii)/(iv): raising
            if e_b is not None:
                if e_b.key() not in index:
                    report.failures.append(
                        f"closure-e {b!r} alpha={rs.roots[alpha]}")
                if e_b.wt(lam) != tuple(x + y for x, y in zip(wt_b, alpha_wt)):
                    report.failures.append(
                        f"axiom-ii {b!r} alpha={rs.roots[alpha]}")
                if eps(rs, lam, e_b, alpha) != ve - 1 or \
                        phi(rs, lam, e_b, alpha) != vp + 1:
                    report.failures.append(
                        f"axiom-iv {b!r} alpha={rs.roots[alpha]}")
                # (vi) one direction: b = e(b') => f(b') ... here f(e(b)) = b
                if f_op(rs, lam, e_b, alpha) != b:
                    report.failures.append(
                        f"axiom-vi-fe {b!r} alpha={rs.roots[alpha]}")
            elif ve != 0:
                report.failures.append(
                    f"eps-count {b!r} alpha={rs.roots[alpha]}")
            # (iii)/(v): lowering
            if f_b is not None:
                if f_b.key() not in index:
                    report.failures.append(
                        f"closure-f {b!r} alpha={rs.roots[alpha]}")
                if f_b.wt(lam) != tuple(x - y for x, y in zip(wt_b, alpha_wt)):
                    report.failures.append(
                        f"axiom-iii {b!r} alpha={rs.roots[alpha]}")
                if eps(rs, lam, f_b, alpha) != ve + 1 or \
                        phi(rs, lam, f_b, alpha) != vp - 1:
                    report.failures.append(
                        f"axiom-v {b!r} alpha={rs.roots[alpha]}")
                if e_op(rs, lam, f_b, alpha) != b:
                    report.failures.append(
                        f"axiom-vi-ef {b!r} alpha={rs.roots[alpha]}")
            elif vp != 0:
                report.failures.append(
                    f"phi-count {b!r} alpha={rs.roots[alpha]}")
            # (vii) is about phi = -infinity, which never arises: eps and phi
            # are finite nonnegative integers here
            if ve < 0 or vp < 0:
                report.vacuous_phi_minus_infinity = False
                report.failures.append(
                    f"negative-count {b!r} alpha={rs.roots[alpha]}")
            # closed forms against iterated application
            cnt, cur = 0, b
            while True:
                nxt = e_op(rs, lam, cur, alpha)
                if nxt is None:
                    break
                cnt, cur = cnt + 1, nxt
            if cnt != ve:
                report.failures.append(
                    f"eps-iteration {b!r} alpha={rs.roots[alpha]}")
            cnt, cur = 0, b
            while True:
                nxt = f_op(rs, lam, cur, alpha)
                if nxt is None:
                    break
                cnt, cur = cnt + 1, nxt
            if cnt != vp:
                report.failures.append(
                    f"phi-iteration {b!r} alpha={rs.roots[alpha]}")
    return report


@dataclass
class ConnectednessReport:
    raising_words: Dict[tuple, Tuple[int, ...]]
    closure_equals_enumeration: bool

    def ok(self) -> bool:
        return self.closure_equals_enumeration and all(
            w is not None for w in self.raising_words.values())


def connectedness(rs: RootSystem, lam: Sequence[int]) -> ConnectednessReport:
    """Raising word to the straight path for every vertex, via f-closure.

    BFS from (e; 0, 1) along all lowering operators; if f_alpha(x) = y then
    the raising word of y is alpha followed by the word of x.  The closure
    must exhaust the enumerated path set.
    """
    lam = tuple(lam)
    start = straight_path(rs)
    words: Dict[tuple, Tuple[int, ...]] = {start.key(): ()}
    frontier = [start]
    roots = list(range(2 * rs.npos))
    while frontier:
        nxt = []
        for x in frontier:
            wx = words[x.key()]
            for alpha in roots:
                y = f_op(rs, lam, x, alpha)
                if y is not None and y.key() not in words:
                    words[y.key()] = (alpha,) + wx
                    nxt.append(y)
        frontier = nxt
    full = {p.key() for p in enumerate_paths(rs, lam)}
    # replay each word as a sanity check
    for p in enumerate_paths(rs, lam):
        word = words.get(p.key())
        if word is None:
            continue
        cur = p
        for alpha in word:
            cur = e_op(rs, lam, cur, alpha)
            assert cur is not None
        assert cur == start
    return ConnectednessReport(words, set(words) == full)


@dataclass
class CrystalGraph:
    vertices: List[PqlsPath]
    edges: List[Tuple[int, int, int]]  # (source index, root index, target index)


def crystal_graph(rs: RootSystem, lam: Sequence[int]) -> CrystalGraph:
    lam = tuple(lam)
    vertices = sorted(enumerate_paths(rs, lam), key=lambda p: p.key())
    pos = {p.key(): i for i, p in enumerate(vertices)}
    edges = []
    for i, b in enumerate(vertices):
        for alpha in range(2 * rs.npos):
            y = f_op(rs, lam, b, alpha)
            if y is not None:
                edges.append((i, alpha, pos[y.key()]))
    return CrystalGraph(vertices, edges)


def export_dot(rs: RootSystem, graph: CrystalGraph) -> str:
    from .dbg import root_label
    lines = ["digraph pseudo_crystal {"]
    for i, p in enumerate(graph.vertices):
        dirs = ",".join("*".join(f"s{j + 1}" for j in w.reduced_word()) or "e"
                        for w in p.dirs)
        times = ",".join(str(t) for t in p.times)
        lines.append(f'  n{i} [label="({dirs}; {times})"];')
    for i, alpha, j in graph.edges:
        lines.append(f'  n{i} -> n{j} [label="{root_label(rs, alpha)}"];')
    lines.append("}")
    return "\n".join(lines)


def compare_negative_root_ops(rs: RootSystem, lam: Sequence[int]) -> Dict[str, int]:
    """Empirical relation between e_{-alpha} and f_alpha over all paths."""
    lam = tuple(lam)
    stats = {"e_neg_equals_f": 0, "e_neg_differs_f": 0, "both_null": 0,
             "one_null": 0}
    paths = list(enumerate_paths(rs, lam))
    for b in paths:
        for k in rs.positive_root_indices():
            neg = rs.negate_index(k)
            a = e_op(rs, lam, b, neg)
            c = f_op(rs, lam, b, k)
            if a is None and c is None:
                stats["both_null"] += 1
            elif a is None or c is None:
                stats["one_null"] += 1
            elif a == c:
                stats["e_neg_equals_f"] += 1
            else:
                stats["e_neg_differs_f"] += 1
    return stats
