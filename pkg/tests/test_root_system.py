import itertools

import pytest

from macpath.root_system import (WeylElement, bruhat_leq, build_root_system,
                                 dominance_less, format_element,
                                 min_coset_rep, orbit_with_reps, parabolic,
                                 parse_cartan_type, parse_weight, parse_word,
                                 root_system_from_label, s_lambda, v_of_mu)

POSITIVE_COUNTS = {"A1": 1, "A2": 3, "B2": 4, "C2": 4, "G2": 6,
                   "A3": 6, "B3": 9, "C3": 9, "D4": 12, "F4": 24, "E6": 36}


@pytest.mark.parametrize("label,count", sorted(POSITIVE_COUNTS.items()))
def test_positive_root_counts(label, count):
    rs = root_system_from_label(label)
    assert rs.npos == count
    for i in range(rs.rank):
        assert rs.cartan[i][i] == 2
        for j in range(rs.rank):
            if i != j:
                assert rs.cartan[i][j] <= 0
    # <w_i, a_j^vee> = delta_ij and <rho, a_i^vee> = 1
    for i in range(rs.rank):
        for j in range(rs.rank):
            assert rs.pair_weight_coroot(rs.fundamental_weight(i),
                                         rs.simple_indices[j]) == (i == j)
        assert rs.pair_rho_coroot(rs.simple_indices[i]) == 1


def test_unsupported_types():
    with pytest.raises(ValueError):
        root_system_from_label("A0")
    with pytest.raises(ValueError):
        root_system_from_label("B1")
    with pytest.raises(ValueError):
        root_system_from_label("H3")
    with pytest.raises(ValueError):
        parse_cartan_type("2A")


def test_g2_pairings():
    g2 = root_system_from_label("G2")
    # brute-force sum of simple-coroot coefficients of the highest coroot
    assert g2.pair_rho_coroot(g2.highest_short_root_index) == 5
    assert g2.longest_element().length() == 6


def test_simple_reflection_action():
    rs = root_system_from_label("A2")
    s1 = rs.simple_reflection(0)
    # s_1 w_1 = w_1 - a_1
    a1 = rs.root_as_weight(rs.simple_indices[0])
    expect = tuple(x - y for x, y in zip((1, 0), a1))
    assert s1.apply_weight((1, 0)) == expect


def test_longest_element_and_w0_action():
    rs = root_system_from_label("A2")
    w0 = rs.longest_element()
    assert w0.length() == 3
    assert w0.reduced_word() == (0, 1, 0)
    # w0 on dominant lambda is -lambda after the diagram involution
    assert w0.apply_weight((2, 1)) == (-1, -2)
    # s_theta applied to rho: rho - 2 theta
    th = rs.root_index[(1, 1)]
    s_th = rs.reflection(th)
    theta_wt = rs.root_as_weight(th)
    assert s_th.apply_weight(rs.rho) == tuple(
        r - 2 * t for r, t in zip(rs.rho, theta_wt))
    assert rs.pair_rho_coroot(th) == 2


def test_length_parity_under_reflections():
    rs = root_system_from_label("B2")
    for w in rs.weyl_elements():
        for k in rs.positive_root_indices():
            u = w * rs.reflection(k)
            assert (u.length() - w.length()) % 2 == 1


def test_word_roundtrip_all_of_b2_and_a2():
    for label in ("A2", "B2"):
        rs = root_system_from_label(label)
        for w in rs.weyl_elements():
            word = w.reduced_word()
            assert len(word) == w.length()
            assert rs.from_word(word) == w


def test_enumeration_matches_word_closure():
    # brute force: all products of words up to length |positive roots|
    for label in ("A2", "B2"):
        rs = root_system_from_label(label)
        seen = {rs.identity().perm: 0}
        frontier = [rs.identity()]
        for _ in range(rs.npos):
            nxt = []
            for w in frontier:
                for i in range(rs.rank):
                    u = w * rs.simple_reflection(i)
                    if u.perm not in seen:
                        seen[u.perm] = u.length()
                        nxt.append(u)
            frontier = nxt
        assert len(seen) == rs.weyl_order
        by_enum = {w.perm: w.length() for w in rs.weyl_elements()}
        assert seen == by_enum


def test_bruhat_order():
    rs = root_system_from_label("A2")
    s1, s2 = rs.simple_reflection(0), rs.simple_reflection(1)
    w0 = rs.longest_element()
    for w in rs.weyl_elements():
        assert bruhat_leq(rs.identity(), w)
        assert bruhat_leq(w, w0)
    assert not bruhat_leq(s1, s2)
    assert bruhat_leq(s1 * s2, w0)
    assert not bruhat_leq(w0, s1 * s2)


def test_parabolic_factorization():
    rs = root_system_from_label("B2")
    for S in ({0}, {1}, {0, 1}, set()):
        pd = parabolic(rs, S)
        reps = pd.min_coset_reps()
        ws = {w.perm for w in _generate(rs, S)}
        for w in rs.weyl_elements():
            rep = min_coset_rep(w, S)
            assert rep in reps
            u = rep.inverse() * w
            assert u.perm in ws
            assert w.length() == rep.length() + u.length()
            assert bruhat_leq(rep, w)


def _generate(rs, S):
    out = {rs.identity()}
    frontier = [rs.identity()]
    while frontier:
        nxt = []
        for w in frontier:
            for i in S:
                u = w * rs.simple_reflection(i)
                if u not in out:
                    out.add(u)
                    nxt.append(u)
        frontier = nxt
    return out


def test_s_lambda_and_coset_reps():
    rs = root_system_from_label("A2")
    assert s_lambda(rs, (1, 1)) == frozenset()
    assert s_lambda(rs, (0, 0)) == frozenset({0, 1})
    w0 = rs.longest_element()
    s1, s2 = rs.simple_reflection(0), rs.simple_reflection(1)
    assert min_coset_rep(w0, {1}) == s2 * s1
    assert min_coset_rep(w0, {0}) == s1 * s2


def test_v_of_mu():
    rs = root_system_from_label("A2")
    lam = (1, 1)
    w0 = rs.longest_element()
    assert v_of_mu(rs, lam, lam).is_identity()
    assert v_of_mu(rs, lam, w0.apply_weight(lam)) == w0
    # fundamental weight: stabilizer is a parabolic, reps must be minimal
    lam = (1, 0)
    s2s1 = rs.simple_reflection(1) * rs.simple_reflection(0)
    mu = s2s1.apply_weight(lam)
    v = v_of_mu(rs, lam, mu)
    assert v.apply_weight(lam) == mu
    assert v == min_coset_rep(v, s_lambda(rs, lam))
    with pytest.raises(ValueError):
        v_of_mu(rs, (1, 1), (5, 5))


def test_dominance():
    rs = root_system_from_label("A2")
    assert not dominance_less(rs, (1, 1), (1, 1))
    assert dominance_less(rs, (0, 0), (1, 1))  # rho = a1 + a2
    assert not dominance_less(rs, (1, 0), (0, 1))
    assert not dominance_less(rs, (0, 1), (1, 0))


def test_parsing():
    rs = root_system_from_label("A2")
    assert parse_weight("1,1", 2) == (1, 1)
    with pytest.raises(ValueError):
        parse_weight("1", 2)
    with pytest.raises(ValueError):
        parse_weight("a,b", 2)
    w0 = rs.longest_element()
    assert parse_word("s1*s2*s1", rs) == w0
    assert parse_word("e", rs).is_identity()
    with pytest.raises(ValueError):
        parse_word("s3", rs)
    with pytest.raises(ValueError):
        parse_word("x1*s2", rs)
    assert format_element(w0) == "s1*s2*s1"


def test_orbit_sizes():
    rs = root_system_from_label("B2")
    assert len(orbit_with_reps(rs, (1, 1))) == 8
    assert len(orbit_with_reps(rs, (1, 0))) == 4
    assert len(orbit_with_reps(rs, (0, 0))) == 1
