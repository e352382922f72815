import json
import random
from pathlib import Path

import pytest

from cubulate import (
    BudgetExceeded,
    EquivarianceViolation,
    Generator,
    HalfSpaceNotPreserved,
    InputError,
    NotBijective,
    WallSpace,
    act_on_point,
    act_on_section,
    act_on_wall,
    admissible_flips,
    build_complex,
    check_equivariance,
    flip,
    inverse_generator,
    load_generators,
    orbit_and_stabilizer,
    principal_section,
    validate_generator,
)
from cubulate.families import gen_crossing, gen_nested

FIXTURES = Path(__file__).parent / "fixtures"


def swap_bits(p, i, j):
    bi, bj = p >> i & 1, p >> j & 1
    return p & ~(1 << i) & ~(1 << j) | bi << j | bj << i


def cube_swap(space, i, j, name):
    return validate_generator(space, [swap_bits(p, i, j) for p in space.points()], name)


def test_identity_generator():
    sp = gen_crossing(3)
    g = validate_generator(sp, list(range(8)), "e")
    assert g.wall_perm == (0, 1, 2)
    assert g.side_swap == (0, 0, 0)
    assert g.inverse_perm == g.perm


def test_coordinate_swap_swaps_walls():
    sp = gen_crossing(3)
    g = cube_swap(sp, 0, 1, "s01")
    assert g.wall_perm == (1, 0, 2)
    assert g.side_swap == (0, 0, 0)


def test_nested_reflection_swaps_sides():
    sp = gen_nested(4)
    r = validate_generator(sp, [4 - x for x in range(5)], "r")
    # wall {x>=i} maps to {x<=4-i}, the complement of wall {x>=5-i}
    assert r.wall_perm == (3, 2, 1, 0)
    assert r.side_swap == (1, 1, 1, 1)


def test_not_bijective():
    sp = gen_crossing(2)
    with pytest.raises(NotBijective):
        validate_generator(sp, [0, 0, 1, 2], "g")
    with pytest.raises(NotBijective):
        validate_generator(sp, [0, 1], "g")


def test_half_space_not_preserved():
    sp = gen_crossing(3)
    with pytest.raises(HalfSpaceNotPreserved):
        validate_generator(sp, [7, 1, 2, 3, 4, 5, 6, 0], "bad")


def test_act_on_point_and_wall():
    sp = gen_crossing(3)
    g = cube_swap(sp, 0, 1, "s01")
    assert act_on_point(g, 1) == 2
    assert act_on_wall(g, 0) == 1
    assert act_on_wall(g, 2) == 2


def test_act_on_section_examples():
    sp = gen_crossing(3)
    e = validate_generator(sp, list(range(8)), "e")
    s = principal_section(sp, 5)
    assert act_on_section(sp, e, s) == s

    two = WallSpace(2, [[1]])
    swap = validate_generator(two, [1, 0], "t")
    a = principal_section(two, 0)
    b = principal_section(two, 1)
    assert act_on_section(two, swap, a) == b
    assert act_on_section(two, swap, b) == a

    g = cube_swap(sp, 0, 1, "s01")
    sigma0 = principal_section(sp, 0)
    assert act_on_section(sp, g, sigma0) == sigma0


def test_action_maps_principal_to_principal():
    cases = [
        (gen_crossing(3), [swap_bits(p, 1, 2) for p in range(8)]),
        (gen_nested(4), [4 - x for x in range(5)]),
    ]
    for sp, perm in cases:
        g = validate_generator(sp, perm, "g")
        for p in sp.points():
            got = act_on_section(sp, g, principal_section(sp, p))
            assert got == principal_section(sp, act_on_point(g, p))


def test_action_commutes_with_flips():
    for sp, perm in (
        (gen_crossing(3), [swap_bits(p, 0, 1) for p in range(8)]),
        (gen_nested(3), [3 - x for x in range(4)]),
    ):
        g = validate_generator(sp, perm, "g")
        X = build_complex(sp)
        for s in X.vertices:
            gs = act_on_section(sp, g, s)
            for w in admissible_flips(sp, s):
                assert act_on_section(sp, g, flip(sp, s, w)) == flip(
                    sp, gs, act_on_wall(g, w)
                )


def test_inverse_generator_roundtrip():
    sp = gen_crossing(3)
    g = cube_swap(sp, 1, 2, "s12")
    inv = inverse_generator(sp, g)
    X = build_complex(sp)
    for s in X.vertices:
        assert act_on_section(sp, inv, act_on_section(sp, g, s)) == s


def test_check_equivariance_passes():
    sp = gen_crossing(3)
    X = build_complex(sp)
    for name, (i, j) in (("s01", (0, 1)), ("s12", (1, 2))):
        report = check_equivariance(sp, X, cube_swap(sp, i, j, name))
        assert report["generator"] == name
        assert report["cubes"] == 7

    spn = gen_nested(4)
    Xn = build_complex(spn)
    r = validate_generator(spn, [4 - x for x in range(5)], "r")
    report = check_equivariance(spn, Xn, r)
    assert report["vertices"] == 5
    assert report["edges"] == 4


def test_check_equivariance_catches_forged_wall_map():
    sp = gen_nested(4)
    X = build_complex(sp)
    forged = Generator(
        name="forged",
        perm=tuple(range(5)),
        wall_perm=(3, 2, 1, 0),
        side_swap=(0, 0, 0, 0),
        inverse_perm=tuple(range(5)),
    )
    with pytest.raises(EquivarianceViolation):
        check_equivariance(sp, X, forged)


def test_orbit_identity_only():
    sp = gen_crossing(3)
    X = build_complex(sp)
    e = validate_generator(sp, list(range(8)), "e")
    orb = orbit_and_stabilizer(sp, X, [e], X.base)
    assert orb.orbit == (X.index_of(X.base),)


def test_orbit_sizes_under_swap_group():
    sp = gen_crossing(3)
    X = build_complex(sp)
    gens = [cube_swap(sp, 0, 1, "s01"), cube_swap(sp, 1, 2, "s12")]
    orb = orbit_and_stabilizer(sp, X, gens, X.base)
    assert len(orb.orbit) == 1
    neighbor = X.neighbors(X.index_of(X.base))[0][1]
    orb = orbit_and_stabilizer(sp, X, gens, neighbor)
    assert len(orb.orbit) == 3
    assert all(w[-1] in ("s01", "s12") for w in orb.stabilizer_words)


def test_orbit_budget():
    sp = gen_crossing(3)
    X = build_complex(sp)
    gens = [cube_swap(sp, 0, 1, "s01"), cube_swap(sp, 1, 2, "s12")]
    with pytest.raises(BudgetExceeded):
        orbit_and_stabilizer(sp, X, gens, X.base, word_length=12, max_words=50)


def test_load_generators():
    sp = gen_crossing(3)
    data = json.loads((FIXTURES / "generators_swaps.json").read_text())
    gens = load_generators(sp, data)
    assert [g.name for g in gens] == ["s01", "s12"]
    with pytest.raises(InputError):
        load_generators(sp, {"generators": [{"name": "x"}]})
    with pytest.raises(InputError):
        load_generators(sp, {"generators": []})
    dup = {
        "generators": [
            {"name": "a", "perm": list(range(8))},
            {"name": "a", "perm": list(range(8))},
        ]
    }
    with pytest.raises(InputError):
        load_generators(sp, dup)
    bad = json.loads((FIXTURES / "generators_bad.json").read_text())
    with pytest.raises(HalfSpaceNotPreserved):
        load_generators(sp, bad)


def test_equivariance_with_seeded_relabeled_space():
    # relabel points of a random-ish space by a permutation that fixes
    # the wall family as a whole: the identity is always safe
    rng = random.Random(99)
    from helpers import random_wall_space

    sp = random_wall_space(rng, point_count=6, wall_count=4)
    X = build_complex(sp)
    e = validate_generator(sp, list(range(6)), "e")
    report = check_equivariance(sp, X, e)
    assert report["vertices"] == len(X.vertices)
