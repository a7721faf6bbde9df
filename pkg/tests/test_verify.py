import random

import pytest

from macpath import verify


def test_paper_a2_suite():
    rep = verify.paper_a2(random.Random(1))
    assert rep.ok(), "\n".join(rep.lines)


def test_hl_discrepancy_suite():
    rep = verify.hl_discrepancy(random.Random(2))
    assert rep.ok(), "\n".join(rep.lines)


def test_jack_suite():
    rep = verify.jack_suite()
    assert rep.ok(), "\n".join(rep.lines)


def test_cross_formula_small():
    rep = verify.cross_formula(["A1", "A2"], max_coord=1, cap_log2=20,
                               rng=random.Random(3))
    assert rep.ok(), "\n".join(rep.lines)


def test_bijection_small():
    rep = verify.bijection(["A1", "A2"], max_coord=1, cap_log2=20, sample=32)
    assert rep.ok(), "\n".join(rep.lines)


def test_bijection_kernel_matches_object_route():
    # the fused kernel at full sampling agrees with the object-level maps
    from macpath.root_system import root_system_from_label
    rs = root_system_from_label("B2")
    rep = verify.Report("probe")
    ok = verify.bijection_case(rs, (1, 1), (1, 1), sample=1 << 10, rep=rep)
    assert ok, "\n".join(rep.lines)


def test_specializations_small():
    rep = verify.specializations(["A1", "A2"], max_coord=1)
    assert rep.ok(), "\n".join(rep.lines)


def test_demazure_small():
    rep = verify.demazure_match(["A1", "A2"], max_coord=1)
    assert rep.ok(), "\n".join(rep.lines)


def test_crystal_suite_small():
    rep = verify.crystal_suite(["A1"], max_coord=2)
    assert rep.ok(), "\n".join(rep.lines)
