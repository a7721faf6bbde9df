from fractions import Fraction as F

import pytest

from macpath.dbg import ReflectionOrder
from macpath.pqls import (PqlsChain, PqlsPair, PqlsPath, candidate_times,
                          enumerate_bpqls_mu, enumerate_pair_orbit,
                          enumerate_pairs, enumerate_paths, labels_at_time,
                          lift_path, path_from_json, pr_pair)
from macpath.qt import LaurentQV, RatQV, factor_poly
from macpath.root_system import orbit_with_reps, root_system_from_label


@pytest.fixture(scope="module")
def a2():
    return root_system_from_label("A2")


def test_candidate_times(a2):
    assert candidate_times(a2, (1, 1)) == (F(1, 2),)
    assert candidate_times(a2, (1, 0)) == ()
    assert candidate_times(a2, (2, 0)) == (F(1, 2),)
    assert candidate_times(a2, (2, 1)) == (F(1, 3), F(1, 2), F(2, 3))
    assert labels_at_time(a2, (1, 1), F(1, 2)) == (a2.root_index[(1, 1)],)


def test_trivial_paths(a2):
    p = PqlsPath([a2.identity()], [F(0), F(1)])
    p.validate(a2, (1, 1))
    assert p.wt((1, 1)) == (1, 1)
    paths0 = list(enumerate_paths(a2, (0, 0)))
    assert len(paths0) == 1 and paths0[0].dirs[0].is_identity()


def test_path_counts(a2):
    assert len(list(enumerate_paths(a2, (1, 1)))) == 12
    rs1 = root_system_from_label("A1")
    assert len(list(enumerate_paths(rs1, (1,)))) == 2
    with pytest.raises(ValueError):
        list(enumerate_paths(a2, (-1, 0)))


def test_path_validation_errors(a2):
    s1 = a2.simple_reflection(0)
    with pytest.raises(ValueError):
        PqlsPath([s1, s1], [F(0), F(1, 2), F(1)]).validate(a2, (1, 1))
    with pytest.raises(ValueError):
        PqlsPath([s1], [F(0), F(1, 2)]).validate(a2, (1, 1))
    s2 = a2.simple_reflection(1)
    with pytest.raises(ValueError):
        # no path from s2 to s1 at time 1/5
        PqlsPath([s1, s2], [F(0), F(1, 5), F(1)]).validate(a2, (1, 1))


def test_wt_of_half_paths(a2):
    s1 = a2.simple_reflection(0)
    s2s1 = a2.simple_reflection(1) * s1
    p = PqlsPath([s1, s2s1], [F(0), F(1, 2), F(1)])
    p.validate(a2, (1, 1))
    assert p.wt((1, 1)) == (0, 0)


def test_bpqls_mu_counts(a2):
    lam = (1, 1)
    w0 = a2.longest_element()
    all_paths = {p.key() for p in enumerate_paths(a2, lam)}
    low = {p.key() for p in enumerate_bpqls_mu(a2, lam, w0.apply_weight(lam))}
    assert low == all_paths
    top = list(enumerate_bpqls_mu(a2, lam, lam))
    assert all(p.dirs[0].is_identity() for p in top)
    s1lam = a2.simple_reflection(0).apply_weight(lam)
    mid = list(enumerate_bpqls_mu(a2, lam, s1lam))
    assert {p.dirs[0] for p in mid} == {a2.identity(), a2.simple_reflection(0)}


def test_sixteen_pairs_and_conditions(a2):
    lam = (1, 1)
    w0 = a2.longest_element()
    mu = w0.apply_weight(lam)
    order = ReflectionOrder(a2, lam, mu)
    pairs = list(enumerate_pairs(a2, lam, mu, order))
    assert len(pairs) == len({p.key() for p in pairs}) == 16
    for p in pairs:
        p.validate(order)
    a1 = a2.root_index[(1, 0)]
    a2r = a2.root_index[(0, 1)]
    th = a2.root_index[(1, 1)]
    eta16 = PqlsPair([PqlsChain(w0, (a2r, th, a1)),
                      PqlsChain(a2.identity(), (th,))], [F(0), F(1, 2), F(1)])
    eta16.validate(order)
    assert eta16.key() in {p.key() for p in pairs}
    bad = PqlsPair([PqlsChain(w0, (a2r, th, a1)),
                    PqlsChain(a2.identity(), (th,))], [F(0), F(1, 3), F(1)])
    with pytest.raises(ValueError):
        bad.validate(order)


def test_pair_count_is_walk_count():
    for label, lam in (("A2", (1, 1)), ("A2", (2, 1)), ("B2", (1, 1)),
                       ("A1", (2,))):
        rs = root_system_from_label(label)
        from macpath.affine import ext_length, m_of
        for mu in orbit_with_reps(rs, lam):
            order = ReflectionOrder(rs, lam, mu)
            n = sum(1 for _ in enumerate_pairs(rs, lam, mu, order))
            assert n == 1 << ext_length(m_of(rs, lam, mu))


def test_mu_equals_lambda_has_empty_first_chain(a2):
    order = ReflectionOrder(a2, (1, 1), (1, 1))
    for pair in enumerate_pairs(a2, (1, 1), (1, 1), order):
        assert pair.chains[0].labels == ()
    assert sum(1 for _ in enumerate_pair_orbit(a2, (1, 1))) == 12


def test_projection_image_and_lift(a2):
    lam = (1, 1)
    for mu in orbit_with_reps(a2, lam):
        order = ReflectionOrder(a2, lam, mu)
        bset = {p.key() for p in enumerate_bpqls_mu(a2, lam, mu)}
        image = {pr_pair(p, order).key()
                 for p in enumerate_pairs(a2, lam, mu, order)}
        assert image == bset
        for path in enumerate_bpqls_mu(a2, lam, mu):
            pair = lift_path(a2, path, order)
            pair.validate(order)
            assert pr_pair(pair, order) == path
    # translated projections cover everything
    order = ReflectionOrder(a2, lam, lam)
    full = {p.key() for p in enumerate_paths(a2, lam)}
    image = {pr_pair(p, order).key() for _w, p in enumerate_pair_orbit(a2, lam)}
    assert image == full


def test_projection_image_b2_fundamental():
    rs = root_system_from_label("B2")
    lam = (0, 1)
    for mu in orbit_with_reps(rs, lam):
        order = ReflectionOrder(rs, lam, mu)
        bset = {p.key() for p in enumerate_bpqls_mu(rs, lam, mu)}
        image = {pr_pair(p, order).key()
                 for p in enumerate_pairs(rs, lam, mu, order)}
        assert image == bset
        for path in enumerate_bpqls_mu(rs, lam, mu):
            assert pr_pair(lift_path(rs, path, order), order) == path


def test_lift_matches_paper_row(a2):
    lam = (1, 1)
    w0 = a2.longest_element()
    order = ReflectionOrder(a2, lam, w0.apply_weight(lam))
    s1s2 = a2.simple_reflection(0) * a2.simple_reflection(1)
    path = PqlsPath([s1s2], [F(0), F(1)])
    pair = lift_path(a2, path, order)
    a1 = a2.root_index[(1, 0)]
    assert pair == PqlsPair([PqlsChain(w0, (a1,))], [F(0), F(1)])
    with pytest.raises(ValueError):
        lift_path(a2, PqlsPath([w0], [F(0), F(1)]),
                  ReflectionOrder(a2, lam, lam))


def test_r_statistic_paper_rows(a2):
    lam = (1, 1)
    th = a2.root_index[(1, 1)]
    order = ReflectionOrder(a2, lam, lam)
    one_minus_t = LaurentQV({(0, 0): F(1), (0, 2): F(-1)})
    s1s2 = a2.simple_reflection(0) * a2.simple_reflection(1)
    eta4 = PqlsPair([PqlsChain(s1s2, ()), PqlsChain(s1s2, (th,))],
                    [F(0), F(1, 2), F(1)])
    assert eta4.r_statistic(order) == RatQV(one_minus_t.shift(0, -1),
                                            factor_poly(1, 2))
    eta1 = PqlsPair([PqlsChain(a2.identity(), ()),
                     PqlsChain(a2.identity(), (th,))], [F(0), F(1, 2), F(1)])
    assert eta1.r_statistic(order) == RatQV(one_minus_t.shift(1, 3),
                                            factor_poly(1, 2))
    chainfree = PqlsPair([PqlsChain(a2.longest_element(), ())], [F(0), F(1)])
    assert chainfree.r_statistic(order) == RatQV.one()


def test_integral_weights_and_chain_monotonicity():
    rs = root_system_from_label("B2")
    lam = (1, 1)
    for mu in orbit_with_reps(rs, lam):
        order = ReflectionOrder(rs, lam, mu)
        for pair in enumerate_pairs(rs, lam, mu, order):
            pr_pair(pair, order).wt(lam)  # raises if non-integral
            for chain in pair.chains:
                for x, y in zip(chain.labels, chain.labels[1:]):
                    assert order.precedes(y, x)
                    assert x not in order.wall_roots


def test_json_roundtrip(a2):
    p = PqlsPath([a2.simple_reflection(0),
                  a2.simple_reflection(1) * a2.simple_reflection(0)],
                 [F(0), F(1, 2), F(1)])
    assert path_from_json(a2, p.to_json()) == p
    order = ReflectionOrder(a2, (1, 1), (-1, -1))
    from macpath.golden import pair_from_json
    for pair in enumerate_pairs(a2, (1, 1), (-1, -1), order):
        assert pair_from_json(a2, pair.to_json()) == pair
