"""The double Bruhat graph and its lambda/b-restricted subgraphs.

DBG has vertex set W and an edge u -> u s_beta for every u in W and every
positive root beta; the edge is Bruhat when the length goes up and quantum
when it goes down.  DBG_{b lambda} keeps the edges whose label satisfies
b <lambda, beta^vee> in Z.  Because every allowed reflection gives an edge
at every vertex, reachability in DBG_{b lambda} is membership in a coset of
the subgroup generated by the allowed reflections; that subgroup is cached
per (lambda, b).

Also here: the total order on positive roots built from a reduced word of
the longest element (largest label first), and the rewriting that turns an
arbitrary directed path into a label-increasing one with the same endpoints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .qt import LaurentQV, RatQV, factor_poly
from .root_system import (ParabolicData, RootSystem, WeylElement,
                          min_coset_rep, parabolic, s_lambda, v_of_mu)

BRUHAT = "bruhat"
QUANTUM = "quantum"


def classify_edge(u: WeylElement, label: int) -> str:
    """Kind of the edge u -> u s_beta for the root with index ``label``."""
    target = u * u.rs.reflection(label)
    if target.length() > u.length():
        return BRUHAT
    return QUANTUM


def edge_allowed(rs: RootSystem, b: Fraction, lam: Sequence, label: int) -> bool:
    return (Fraction(b) * rs.pair_weight_coroot(lam, label)).denominator == 1


def allowed_labels(rs: RootSystem, lam: Sequence, b: Fraction) -> Tuple[int, ...]:
    """Positive-root indices usable as edge labels in DBG_{b lambda}."""
    b = Fraction(b)
    return tuple(k for k in rs.positive_root_indices()
                 if edge_allowed(rs, b, lam, k))


_reach_cache: Dict[tuple, FrozenSet[Tuple[int, ...]]] = {}


def reachability_group(rs: RootSystem, lam: Sequence, b: Fraction
                       ) -> FrozenSet[Tuple[int, ...]]:
    """Perms of the subgroup generated by the reflections allowed at (lam, b)."""
    key = (rs.type_label, tuple(lam), Fraction(b))
    if key not in _reach_cache:
        gens = [rs.reflection(k) for k in allowed_labels(rs, lam, b)]
        seen = {rs.identity().perm}
        frontier = [rs.identity()]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    u = w * g
                    if u.perm not in seen:
                        seen.add(u.perm)
                        nxt.append(u)
            frontier = nxt
        _reach_cache[key] = frozenset(seen)
    return _reach_cache[key]


def exists_path(u: WeylElement, v: WeylElement, b: Fraction,
                lam: Sequence) -> bool:
    """Is there a directed path from u to v in DBG_{b lambda}?

    Every allowed reflection is an edge at every vertex, so this is exactly
    the condition u^{-1} v in <s_beta : beta allowed>.
    """
    return (u.inverse() * v).perm in reachability_group(u.rs, lam, b)


def deg_edge(u: WeylElement, label: int, b: Fraction, lam: Sequence) -> RatQV:
    """(b, lambda)-degree of the edge u -> u s_beta.

    Bruhat:   t^{-1/2} (1-t) / (1 - q^{(1-b)<lam,b^v>} t^{<rho,b^v>})
    quantum:  q^{(1-b)<lam,b^v>} t^{<rho,b^v> - 1/2} (1-t) / (same)
    """
    rs = u.rs
    b = Fraction(b)
    lam_pair = rs.pair_weight_coroot(lam, label)
    if (b * lam_pair).denominator != 1:
        raise ValueError("edge not allowed in DBG_{b lambda}")
    qe = (1 - b) * lam_pair
    assert qe.denominator == 1 and qe > 0
    qe = int(qe)
    te = rs.pair_rho_coroot(label)
    den = factor_poly(qe, te)
    if classify_edge(u, label) == BRUHAT:
        num = LaurentQV({(0, -1): Fraction(1), (0, 1): Fraction(-1)})
    else:
        num = LaurentQV({(qe, 2 * te - 1): Fraction(1),
                         (qe, 2 * te + 1): Fraction(-1)})
    return RatQV(num, den)


# ---------------------------------------------------------------------------
# Reflection order from a reduced word of w0.
# ---------------------------------------------------------------------------


class ReflectionOrder:
    """Total order on Delta^+ from fixed reduced words, with the mu-split.

    Reduced words are fixed for v(lambda_-) v(mu)^{-1}, v(mu) and w0(S); their
    concatenation spells w0.  With beta_j = s_{i_N} ... s_{i_{j+1}} alpha_{i_j}
    the order is beta_1 > beta_2 > ... > beta_N; the first M labels sweep
    Delta^+ minus Delta_S^+ and the tail sweeps Delta_S^+.
    """

    def __init__(self, rs: RootSystem, lam: Sequence, mu: Sequence):
        self.rs = rs
        self.lam = tuple(lam)
        self.mu = tuple(mu)
        self.S = s_lambda(rs, lam)
        self.pd = parabolic(rs, self.S)
        w0 = rs.longest_element()
        self.lam_minus = w0.apply_weight(lam)
        self.v_mu = v_of_mu(rs, lam, mu)
        self.v_lam_minus = v_of_mu(rs, lam, self.lam_minus)
        self.w0S = self.pd.longest_WS

        prefix = (self.v_lam_minus * self.v_mu.inverse()).reduced_word()
        middle = self.v_mu.reduced_word()
        suffix = self.w0S.reduced_word()
        self.K = len(prefix)
        self.M = self.K + len(middle)
        self.N = self.M + len(suffix)
        self.letters: Tuple[int, ...] = tuple(prefix) + tuple(middle) + tuple(suffix)
        if self.N != rs.npos:
            raise AssertionError("concatenated word is not reduced")
        if rs.from_word(self.letters) != w0:
            raise AssertionError("concatenated word does not spell w0")

        betas: List[int] = [0] * self.N
        t = rs.identity()
        for j in range(self.N, 0, -1):
            betas[j - 1] = t.apply_root_index(rs.simple_indices[self.letters[j - 1]])
            t = t * rs.simple_reflection(self.letters[j - 1])
        self.beta_indices: Tuple[int, ...] = tuple(betas)
        self.position: Dict[int, int] = {k: j + 1
                                         for j, k in enumerate(self.beta_indices)}
        self.wall_roots = self.pd.wall_root_indices()

    def precedes(self, a: int, b: int) -> bool:
        """a < b in the reflection order (larger position = smaller root)."""
        return self.position[a] > self.position[b]

    def sort_key(self, a: int) -> int:
        """Key increasing along the order (beta_N first, beta_1 last)."""
        return -self.position[a]

    def chain0_label_indices(self) -> Tuple[int, ...]:
        """Labels permitted in the first chain: w0(S) beta in Inv(v(mu))."""
        rs = self.rs
        out = []
        for k in rs.positive_root_indices():
            img = self.w0S.apply_root_index(k)
            if not rs.is_positive_index(img):
                continue
            if not rs.is_positive_index(self.v_mu.apply_root_index(img)):
                out.append(k)
        return tuple(out)


# ---------------------------------------------------------------------------
# Directed paths and the label-increasing rewriting.
# ---------------------------------------------------------------------------


class DirectedPath:
    """A directed path in DBG: vertices v_0, ..., v_q and labels of each step."""

    def __init__(self, vertices: Sequence[WeylElement], labels: Sequence[int]):
        if len(vertices) != len(labels) + 1:
            raise ValueError("vertex/label count mismatch")
        self.vertices = list(vertices)
        self.labels = list(labels)

    def validate(self, b: Fraction | None = None,
                 lam: Sequence | None = None) -> None:
        for x, k, y in zip(self.vertices, self.labels, self.vertices[1:]):
            if y != x * x.rs.reflection(k):
                raise ValueError("step is not a DBG edge")
            if b is not None and not edge_allowed(x.rs, b, lam, k):
                raise ValueError("step label not allowed in DBG_{b lambda}")

    def __len__(self):
        return len(self.labels)


def make_label_increasing(path: DirectedPath, order: ReflectionOrder,
                          b: Fraction, lam: Sequence,
                          strip_parabolic_prefix: bool = False) -> DirectedPath:
    """Rewrite a path into one with the same endpoints and increasing labels.

    Follows the exchange rewriting of the parabolic-graph lemma: the leading
    label is pushed past a sorted tail, either cancelling, standing, or
    being exchanged to a strictly smaller leading label.  The output is at
    most as long as the input.  With ``strip_parabolic_prefix`` the sorted
    Delta_S^+-labeled initial segment is removed, moving the start inside
    its W_S-coset and leaving labels in Delta^+ minus Delta_S^+ only.
    """
    path.validate(b, lam)
    rs = order.rs

    def sort(vertices: List[WeylElement], labels: List[int]
             ) -> Tuple[List[WeylElement], List[int]]:
        q = len(labels)
        if q <= 1:
            return vertices, labels
        tv, tl = sort(vertices[1:], labels[1:])
        while True:
            if len(tl) < q - 1:
                return sort([vertices[0]] + tv, [labels[0]] + tl)
            xi, zeta = labels[0], tl[0]
            if xi == zeta:
                # w -> w s_xi -> w: the two steps cancel
                return tv[1:], tl[1:]
            if order.precedes(xi, zeta):
                return [vertices[0]] + tv, [xi] + tl
            # exchange: w ->zeta w s_zeta ->|s_zeta xi| z_1
            w = vertices[0]
            mid = w * rs.reflection(zeta)
            new_label = rs.reflection(zeta).apply_root_index(xi)
            if not rs.is_positive_index(new_label):
                new_label = rs.negate_index(new_label)
            vertices = [w, mid] + tv[1:]
            labels = [zeta, new_label] + tl[1:]
            q = len(labels)
            tv, tl = sort(vertices[1:], labels[1:])

    vs, ls = sort(list(path.vertices), list(path.labels))
    out = DirectedPath(vs, ls)
    out.validate(b, lam)
    for a, c in zip(out.labels, out.labels[1:]):
        assert order.precedes(a, c), "labels not increasing"
    if strip_parabolic_prefix:
        i = 0
        while i < len(out.labels) and out.labels[i] in order.wall_roots:
            i += 1
        out = DirectedPath(out.vertices[i:], out.labels[i:])
    return out


def shortest_path(u: WeylElement, v: WeylElement, b: Fraction,
                  lam: Sequence) -> DirectedPath:
    """Some directed path from u to v in DBG_{b lambda} (BFS over labels)."""
    rs = u.rs
    labels = allowed_labels(rs, lam, b)
    if u == v:
        return DirectedPath([u], [])
    prev: Dict[Tuple[int, ...], Tuple[WeylElement, int]] = {}
    seen = {u.perm}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for k in labels:
                y = x * rs.reflection(k)
                if y.perm in seen:
                    continue
                seen.add(y.perm)
                prev[y.perm] = (x, k)
                if y == v:
                    vs, ls = [y], []
                    cur = y
                    while cur != u:
                        p, k2 = prev[cur.perm]
                        vs.append(p)
                        ls.append(k2)
                        cur = p
                    return DirectedPath(vs[::-1], ls[::-1])
                nxt.append(y)
        frontier = nxt
    raise ValueError("no path in DBG_{b lambda}")


# ---------------------------------------------------------------------------
# DOT export.
# ---------------------------------------------------------------------------


def root_label(rs: RootSystem, k: int) -> str:
    c = rs.roots[k]
    bits = []
    for i, x in enumerate(c):
        if x == 0:
            continue
        prefix = "" if x == 1 else ("-" if x == -1 else f"{x}")
        bits.append(f"{prefix}a{i + 1}")
    return "+".join(bits).replace("+-", "-") if bits else "0"


def export_dot(rs: RootSystem, lam: Sequence | None = None,
               b: Fraction | None = None) -> str:
    """DOT text of DBG (or DBG_{b lambda}); quantum edges dashed."""
    from .root_system import format_element

    if lam is not None and b is not None:
        labels = allowed_labels(rs, lam, b)
        name = f"dbg_{rs.type_label}_b{b}"
    else:
        labels = tuple(rs.positive_root_indices())
        name = f"dbg_{rs.type_label}"
    lines = [f'digraph "{name}" {{']
    elements = rs.weyl_elements()
    for w in elements:
        lines.append(f'  "{format_element(w)}";')
    for w in elements:
        for k in labels:
            u = w * rs.reflection(k)
            style = "solid" if classify_edge(w, k) == BRUHAT else "dashed"
            lines.append(
                f'  "{format_element(w)}" -> "{format_element(u)}" '
                f'[label="{root_label(rs, k)}", style={style}];')
    lines.append("}")
    return "\n".join(lines)
