"""String group construction, the intersection condition, duality."""

import pytest

from polyflag.presentation import (Word, Presentation, make_presentation,
                                   REFLECTION, ROTATION)
from polyflag.stringc import (
    SggiViolation, build_string_group, is_string_c_group,
    intersection_condition_exhaustive, dual,
)


def cox(*periods):
    return build_string_group(
        make_presentation(REFLECTION, len(periods) + 1, list(periods)))


def test_rejects_rotation_kind():
    pres = make_presentation(ROTATION, 3, [4, 4])
    with pytest.raises(ValueError):
        build_string_group(pres)


def test_generator_collapse_detected():
    pres = make_presentation(REFLECTION, 2, [2],
                             extra_relators=[Word.gen(0)])
    with pytest.raises(SggiViolation, match="r0 collapses"):
        build_string_group(pres)


def test_non_involution_detected():
    g0, g1 = Word.gen(0), Word.gen(1)
    pres = Presentation(
        num_generators=2, kind=REFLECTION,
        relators=(g0 ** 3, g1 ** 2, (g0 * g1) ** 2))
    with pytest.raises(SggiViolation, match="r0 is not an involution"):
        build_string_group(pres)


def test_distant_non_commutation_detected():
    g0, g1, g2 = Word.gen(0), Word.gen(1), Word.gen(2)
    pres = Presentation(
        num_generators=3, kind=REFLECTION,
        relators=(g0 ** 2, g1 ** 2, g2 ** 2, (g0 * g1) ** 2,
                  (g1 * g2) ** 2, (g0 * g2) ** 3))
    with pytest.raises(SggiViolation, match="r0 and r2 do not commute"):
        build_string_group(pres)


def test_simplex_is_c_group():
    group = cox(3, 3)
    assert group.order == 24
    assert group.schlafli_symbol() == (3, 3)
    verdict = is_string_c_group(group)
    assert verdict.ok
    assert bool(verdict)
    assert verdict.witness is None


def test_parabolic_orders_octahedron():
    group = cox(3, 4)
    assert group.parabolic_order(()) == 1
    assert group.parabolic_order((1,)) == 2
    assert group.parabolic_order((0, 1)) == 6
    assert group.parabolic_order((1, 2)) == 8
    assert group.parabolic_order((0, 2)) == 4
    assert group.parabolic_order((0, 1, 2)) == 48


def test_parabolic_orbit_is_cached():
    group = cox(3, 3)
    a = group.parabolic_orbit((0, 1))
    b = group.parabolic_orbit([1, 0])
    assert a is b  # same frozenset key


def test_recursive_matches_exhaustive_small():
    for group in (cox(3, 3), cox(4, 3), cox(2, 2), cox(3, 3, 3)):
        assert is_string_c_group(group).ok
        assert intersection_condition_exhaustive(group).ok


def test_collapsed_sggi_fails_with_minimal_witness():
    pres = make_presentation(
        REFLECTION, 3, [2, 2],
        extra_relators=[Word.gen(0) * Word.gen(2)])
    group = build_string_group(pres)
    assert group.order == 4
    verdict = is_string_c_group(group)
    assert not verdict.ok
    assert tuple(verdict.witness.left) == (0,)
    assert tuple(verdict.witness.right) == (2,)
    assert verdict.witness.intersection_order == 2
    assert verdict.witness.expected_order == 1
    exhaustive = intersection_condition_exhaustive(group)
    assert not exhaustive.ok
    assert exhaustive.witness == verdict.witness


def test_dual_reverses_symbol():
    group = cox(3, 4)
    d = dual(group)
    assert d.order == group.order
    assert d.schlafli_symbol() == (4, 3)
    assert is_string_c_group(d).ok


def test_double_dual_identity():
    group = cox(4, 3, 3)
    dd = dual(dual(group))
    assert dd.pres == group.pres
    assert dd.table.action == group.table.action
    assert [g.images.tolist() for g in dd.gens] == [
        g.images.tolist() for g in group.gens]


def test_dual_parabolic_orders_mirror():
    group = cox(3, 4)
    d = dual(group)
    n = group.rank
    for subset in [(0,), (0, 1), (1, 2), (0, 2)]:
        mirrored = tuple(n - 1 - i for i in subset)
        assert (group.parabolic_order(subset)
                == d.parabolic_order(mirrored))


def test_degenerate_period_two_is_still_c_group():
    group = cox(2, 2)
    assert group.order == 8
    assert is_string_c_group(group).ok


def test_attained_symbol_can_drop_below_declared():
    # forcing (r0r1)^2 = 1 on a declared period-4 symbol halves it
    pres = make_presentation(
        REFLECTION, 2, [4],
        extra_relators=[(Word.gen(0) * Word.gen(1)) ** 2])
    group = build_string_group(pres)
    assert group.pres.declared_schlafli == (4,)
    assert group.schlafli_symbol() == (2,)
