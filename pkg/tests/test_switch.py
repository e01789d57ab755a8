import itertools
import random

import pytest

from birack import (InputError, PairMap, Permutation, StructureError,
                    SwitchMap, check_biquandle, check_commute, check_formed,
                    check_fully_formed, check_yang_baxter, swap_map,
                    twitch_to_switch, yang_baxter_identities)

from conftest import eval_cycles, random_fully_formed_switch, random_switch


def test_apply_catalog_example(catalog):
    # D is identity so the first output is y itself; row 2 of up fixes 1.
    assert catalog["R5_40"].component("s").apply(1, 2) == (2, 1)


def test_apply_identity_rows_swaps():
    sw = SwitchMap.identity(4)
    for x in range(1, 5):
        for y in range(1, 5):
            assert sw.apply(x, y) == (y, x)


def test_apply_r6_114_from_independent_evaluator(catalog):
    # Expected value computed by the independent cycle evaluator.
    up_row_1 = eval_cycles("(2 3)(4 5 6)", 6)
    expected = (1, up_row_1[1])
    assert expected == (1, 1)
    assert catalog["R6_114"].component("s").apply(1, 1) == expected


def test_apply_label_range():
    sw = SwitchMap.identity(3)
    with pytest.raises(InputError):
        sw.apply(0, 1)
    with pytest.raises(InputError):
        sw.apply(1, 4)


def test_invert_identity_switch():
    sw = SwitchMap.identity(3)
    inverse = sw.invert()
    for x in range(1, 4):
        for y in range(1, 4):
            assert inverse.apply(y, x) == (x, y)


def test_invert_computed_image(catalog):
    sw = catalog["R5_40"].component("s")
    assert sw.apply(1, 2) == (2, 1)
    assert sw.invert().apply(2, 1) == (1, 2)


def test_invert_round_trip_random():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(2, 4)
        sw = random_fully_formed_switch(rng, n)
        inverse = sw.invert()
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                assert inverse.apply(*sw.apply(x, y)) == (x, y)
                assert sw.apply(*inverse.apply(x, y)) == (x, y)


def test_invert_requires_fully_formed():
    # Formed (rows are bijections) but the pair map collides.
    sw = SwitchMap.from_rows([(2, 1), (2, 1)], [(1, 2), (2, 1)])
    if sw.fully_formed:  # pragma: no cover - guard for the chosen example
        pytest.skip("example unexpectedly fully formed")
    with pytest.raises(StructureError, match="preimages"):
        sw.invert()


def test_bar_maps_are_row_inverses():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 5)
        sw = random_switch(rng, n)
        for x in range(1, n + 1):
            for a in range(1, n + 1):
                assert sw.up_bar(sw.up_of(x, a), a) == x
                assert sw.up_of(sw.up_bar(x, a), a) == x
                assert sw.down_bar(sw.down_of(x, a), a) == x


# -- sideways map and its reverse ------------------------------------------


def test_sideways_identity_switch_by_definition_chase():
    # Build the twitch directly from the defining relation on n = 2 and
    # compare pointwise: S(u, x) = (v, y) <=> T(x, y) = (u, v).
    sw = SwitchMap.identity(2)
    expected = {}
    for u in range(1, 3):
        for x in range(1, 3):
            v, y = sw.apply(u, x)
            expected[(x, y)] = (u, v)
    twitch = sw.sideways
    for (x, y), uv in expected.items():
        assert twitch.apply(x, y) == uv
    # For identity rows this is the swap pattern (u, v) = (y, x).
    assert all(twitch.apply(x, y) == (y, x) for x in range(1, 3) for y in range(1, 3))


def test_sideways_round_trip_catalog(catalog):
    for birack in catalog.values():
        sw = birack.component("s")
        assert twitch_to_switch(sw.sideways) == sw


def test_sideways_round_trip_random():
    rng = random.Random(31)
    for _ in range(40):
        sw = random_fully_formed_switch(rng, rng.randint(2, 5))
        assert twitch_to_switch(sw.sideways) == sw


def test_sideways_is_bijection_for_formed_switches():
    rng = random.Random(37)
    for _ in range(40):
        sw = random_switch(rng, rng.randint(1, 5))
        assert sw.sideways.is_bijection


def test_twitch_to_switch_invertible_but_not_formed():
    # Difference twitch on five labels: T(x, y) = (y - x, x - y) mod 5.
    # The switch it defines is invertible but its down rows are constant.
    n = 5
    twitch = PairMap.from_function(
        n, lambda x, y: ((y - x) % n + 1, (x - y) % n + 1))
    with pytest.raises(StructureError, match="not formed"):
        twitch_to_switch(twitch)


def test_twitch_to_switch_collision_witness():
    # A constant first component sends two twitch cells to one switch cell.
    twitch = PairMap.from_function(2, lambda x, y: (1, y))
    with pytest.raises(StructureError, match="receives two images"):
        twitch_to_switch(twitch)


# -- report-style checks -----------------------------------------------------


def test_check_formed_witness():
    result = check_formed([(1, 1, 2), (2, 3, 1), (3, 1, 2)],
                          [(1, 2, 3)] * 3)
    assert not result.passed
    assert "up row 1" in result.witness


def test_catalog_formed_and_fully_formed(catalog):
    for birack in catalog.values():
        sw = birack.component("s")
        rows_up = [p.images for p in sw.up]
        rows_down = [p.images for p in sw.down]
        assert check_formed(rows_up, rows_down).passed
        assert check_fully_formed(sw).passed


def test_biquandle_checks(catalog):
    result = check_biquandle(catalog["R5_40"].component("s"))
    assert not result.passed
    assert "x=1" in result.witness  # 1^1 = 3 while 1_1 = 1
    assert check_biquandle(SwitchMap.identity(3)).passed
    assert not check_biquandle(catalog["BR6_125"].component("s")).passed


def test_yang_baxter_catalog(catalog):
    for birack in catalog.values():
        sw = birack.component("s")
        assert check_yang_baxter(sw, sw).passed
        assert yang_baxter_identities(sw).passed


def test_yang_baxter_size_mismatch(catalog):
    with pytest.raises(InputError):
        check_yang_baxter(SwitchMap.identity(3), SwitchMap.identity(4))


def test_swap_dominates_any_self_compatible_switch(catalog):
    # The mixed triple-move pattern with the swap in the dominating role
    # holds for every switch; brute force over all triples confirms.
    for birack in catalog.values():
        sw = birack.component("s")
        tau = SwitchMap.identity(sw.size)
        assert check_yang_baxter(tau, sw).passed


def test_yang_baxter_failure_witness():
    bad = SwitchMap.from_rows([(2, 1), (1, 2)])
    result = check_yang_baxter(bad, bad)
    assert not result.passed
    assert "triple" in result.witness


def test_two_checkers_agree_exhaustively_n2():
    perms = list(itertools.permutations((1, 2)))
    for rows in itertools.product(perms, repeat=4):
        sw = SwitchMap.from_rows(rows[:2], rows[2:])
        assert check_yang_baxter(sw, sw).passed == yang_baxter_identities(sw).passed


def test_two_checkers_agree_random():
    rng = random.Random(41)
    for _ in range(300):
        sw = random_switch(rng, rng.randint(2, 4))
        assert check_yang_baxter(sw, sw).passed == yang_baxter_identities(sw).passed


def test_commute_trivial_cases(catalog):
    sw = catalog["R5_40"].component("s")
    assert check_commute(sw, sw).passed
    assert check_commute(SwitchMap.identity(5), sw).passed


def test_commute_matches_brute_force():
    rng = random.Random(43)
    for _ in range(60):
        n = rng.randint(2, 4)
        sa = random_fully_formed_switch(rng, n)
        sb = random_fully_formed_switch(rng, n)
        pa, pb = sa.pair_map, sb.pair_map
        ta, tb = sa.sideways, sb.sideways
        tai, tbi = ta.inverse(), tb.inverse()
        expected = (
            all(pa.apply(*pb.apply(x, y)) == pb.apply(*pa.apply(x, y))
                for x in range(1, n + 1) for y in range(1, n + 1))
            and ta.compose(tbi) == tb.compose(tai)
            and tai.compose(tb) == tbi.compose(ta)
        )
        assert check_commute(sa, sb).passed == expected


def test_commute_detects_failure():
    rng = random.Random(47)
    found = False
    for _ in range(200):
        sa = random_fully_formed_switch(rng, 3)
        sb = random_fully_formed_switch(rng, 3)
        if not check_commute(sa, sb).passed:
            found = True
            break
    assert found


def test_relabelled_preserves_structure(catalog):
    rng = random.Random(53)
    sw = catalog["BR6_125"].component("s")
    from birack.permutation import random_permutation

    perm = random_permutation(6, rng)
    moved = sw.relabelled(perm)
    for x in range(1, 7):
        for y in range(1, 7):
            z, w = sw.apply(x, y)
            assert moved.apply(perm(x), perm(y)) == (perm(z), perm(w))
    assert moved.fully_formed
    assert check_yang_baxter(moved, moved).passed


def test_degenerate_size_one():
    sw = SwitchMap.identity(1)
    assert sw.fully_formed
    assert sw.is_biquandle
    assert check_yang_baxter(sw, sw).passed
    assert yang_baxter_identities(sw).passed
    assert sw.stabilization_period == 1


def test_swap_map_values():
    tau = swap_map(3)
    assert tau.apply(1, 3) == (3, 1)
    assert tau.compose(tau).apply(2, 3) == (2, 3)
