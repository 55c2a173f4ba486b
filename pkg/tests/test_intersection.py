import pytest

from tropint import bergman as bg
from tropint import fan as fn
from tropint import intersection as it
from tropint import matroid as mt
from tropint.cone import Cone
from tropint.errors import NotSubcycle, PointNotOnCycle


def pair_matroid():
    """Rank 2 on 4 elements with flats {1,2} and {3,4}: U_{1,2} + U_{1,2}."""
    return mt.from_bases(4, [0b0101, 0b1001, 0b0110, 0b1010])


def line_in_r3():
    """B(U_{1,3}): the diagonal line of R^3."""
    return bg.bergman_fan(mt.uniform(1, 3))


def test_unit_law():
    u23 = mt.uniform(2, 3)
    b = bg.bergman_fan(u23)
    line = line_in_r3()
    assert fn.cycle_equals(it.intersect_on_matroid(u23, b, b), b)
    assert fn.cycle_equals(it.intersect_on_matroid(u23, b, line), line)
    assert fn.cycle_equals(it.intersect_on_matroid(u23, line, b), line)


def test_negative_self_intersection():
    # B(N) squared inside B(U_{3,4}) is the all-ones line with weight -1.
    u34 = mt.uniform(3, 4)
    n2 = pair_matroid()
    x = bg.bergman_fan(n2)
    prod = it.intersect_on_matroid(u34, x, x)
    assert prod.dim == 1
    assert len(prod.weights) == 1
    cone = next(iter(prod.weights))
    assert cone.rays == () and cone.lin == ((1, 1, 1, 1),)
    assert prod.weights[cone] == -1
    assert fn.is_balanced(prod)[0]


def test_product_on_free_matroid_matches_matroid_intersection():
    # On trop(free) = R^3: B(U_{2,3}) . B(U_{2,3}) = B(U_{2,3} wedge U_{2,3}).
    free3 = mt.uniform(3, 3)
    u23 = mt.uniform(2, 3)
    b = bg.bergman_fan(u23)
    prod = it.intersect_on_matroid(free3, b, b)
    wedge, rank = mt.matroid_intersection(u23, u23)
    assert rank == 1
    assert wedge.is_loopfree()
    assert fn.cycle_equals(prod, bg.bergman_fan(wedge))
    assert fn.cycle_equals(prod, line_in_r3())


def test_commutativity_and_factor_independence():
    u34 = mt.uniform(3, 4)
    x = bg.bergman_fan(pair_matroid())
    line = bg.bergman_fan(mt.uniform(1, 4))
    ab = it.intersect_on_matroid(u34, x, line)
    ba = it.intersect_on_matroid(u34, line, x)
    other = it.intersect_on_matroid(u34, x, line, factor=1)
    assert fn.cycle_equals(ab, ba)
    assert fn.cycle_equals(ab, other)


def test_diagonal_cycle_variant_agrees():
    u23 = mt.uniform(2, 3)
    b = bg.bergman_fan(u23)
    line = line_in_r3()
    direct = it.intersect_on_matroid(u23, b, line)
    via = it.intersect_via_diagonal_cycle(u23, b, line)
    assert fn.cycle_equals(direct, via)


def test_support_containment_and_balance():
    u34 = mt.uniform(3, 4)
    x = bg.bergman_fan(pair_matroid())
    prod = it.intersect_on_matroid(u34, x, x)
    for cone in prod.weights:
        for p in list(cone.rays) + [cone.interior_point()]:
            assert fn.contains_point(x, p)
    assert fn.is_balanced(prod)[0]


def test_not_subcycle_rejected():
    u23 = mt.uniform(2, 3)
    off = fn.make_cycle(3, 1, [(Cone.from_generators(3, [(1, 0, 0)]), 1)])
    with pytest.raises(NotSubcycle):
        it.intersect_on_matroid(u23, bg.bergman_fan(u23), off)


def test_shaw_recursion_agrees_with_direct():
    u23 = mt.uniform(2, 3)
    b = bg.bergman_fan(u23)
    line = line_in_r3()
    e = it.first_non_coloop(u23)
    assert e is not None
    rec = it.intersect_shaw_recursion(u23, e, b, line)
    assert fn.cycle_equals(rec, it.intersect_on_matroid(u23, b, line))
    rec2 = it.intersect_shaw_recursion(u23, e, line, line)
    assert fn.cycle_equals(rec2, it.intersect_on_matroid(u23, line, line))


def test_shaw_recursion_unit_case():
    u23 = mt.uniform(2, 3)
    b = bg.bergman_fan(u23)
    rec = it.intersect_shaw_recursion(u23, it.first_non_coloop(u23), b, b)
    assert fn.cycle_equals(rec, b)


def test_first_non_coloop():
    assert it.first_non_coloop(mt.uniform(3, 3)) is None
    assert it.first_non_coloop(mt.uniform(2, 3)) == 0


def test_morphism_validation():
    u23 = mt.uniform(2, 3)
    u22 = mt.uniform(2, 2)
    it.Morphism(u23, u22, [(1, 0, 0), (0, 1, 0)])  # a valid projection
    with pytest.raises(NotSubcycle):
        it.Morphism(u23, mt.uniform(1, 2), [(1, 0, 0), (0, 1, 0)])


def test_pullback_identity():
    u23 = mt.uniform(2, 3)
    ident = it.Morphism(u23, u23, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    line = line_in_r3()
    assert fn.cycle_equals(it.pullback(ident, line), line)


def test_pullback_of_target_fan_is_source_fan():
    u23 = mt.uniform(2, 3)
    u22 = mt.uniform(2, 2)
    proj = it.Morphism(u23, u22, [(1, 0, 0), (0, 1, 0)])
    assert fn.cycle_equals(it.pullback(proj, bg.bergman_fan(u22)),
                           bg.bergman_fan(u23))


def test_pullback_along_cross_projection():
    # p : trop(M) x trop(M') -> trop(M) pulls C back to C x trop(M').
    u22 = mt.uniform(2, 2)
    u11 = mt.uniform(1, 1)
    big = mt.direct_sum(u11, u11)  # trop = R^2 with its fine structure
    proj = it.Morphism(big, u11, [(1, 0)])
    point = fn.make_cycle(1, 0, [(Cone.from_generators(1, []), 1)])
    pulled = it.pullback(proj, point)
    vertical = fn.make_cycle(2, 1, [
        (Cone.from_generators(2, [(0, 1)]), 1),
        (Cone.from_generators(2, [(0, -1)]), 1)])
    assert fn.cycle_equals(pulled, vertical)
    _ = u22


def test_projection_formula():
    # C . f_* D = f_* (f^* C . D) for the coordinate projection.
    u23 = mt.uniform(2, 3)
    u22 = mt.uniform(2, 2)
    rows = [(1, 0, 0), (0, 1, 0)]
    f = it.Morphism(u23, u22, rows)
    c = bg.bergman_fan(mt.uniform(1, 2))  # subcycle of trop(U_{2,2})
    d = line_in_r3()
    left = it.intersect_on_matroid(u22, c, fn.push_forward(rows, 2, d))
    right = fn.push_forward(
        rows, 2, it.intersect_on_matroid(u23, it.pullback(f, c), d))
    assert fn.cycle_equals(left, right)


def test_pullback_multiplicative():
    u23 = mt.uniform(2, 3)
    u22 = mt.uniform(2, 2)
    f = it.Morphism(u23, u22, [(1, 0, 0), (0, 1, 0)])
    c = bg.bergman_fan(u22)
    cp = bg.bergman_fan(mt.uniform(1, 2))
    left = it.pullback(f, it.intersect_on_matroid(u22, c, cp))
    right = it.intersect_on_matroid(u23, it.pullback(f, c),
                                    it.pullback(f, cp))
    assert fn.cycle_equals(left, right)


def test_pullback_functorial():
    # (g o f)^* = f^* g^* along two stacked coordinate projections.
    u23 = mt.uniform(2, 3)
    u22 = mt.uniform(2, 2)
    u11 = mt.uniform(1, 1)
    f = it.Morphism(u23, u22, [(1, 0, 0), (0, 1, 0)])
    g = it.Morphism(u22, u11, [(1, 0)])
    gf = it.Morphism(u23, u11, [(1, 0, 0)])
    e = bg.bergman_fan(u11)
    assert fn.cycle_equals(it.pullback(gf, e),
                           it.pullback(f, it.pullback(g, e)))


def test_graph_point_law():
    # ({x} x Y) . graph(f) is the single point (x, f(x)) with weight 1.
    u22 = mt.uniform(2, 2)
    u11 = mt.uniform(1, 1)
    big = mt.direct_sum(u22, u11)
    f = it.Morphism(u22, u11, [(1, 1)])
    gamma = it.graph(f)
    # Conical setting: take x = 0, so {x} x Y is the vertical line.
    point_cross_y = fn.cross_product(
        fn.make_cycle(2, 0, [(Cone.from_generators(2, []), 1)]),
        fn.make_cycle(1, 1, [(Cone.from_generators(1, [], [(1,)]), 1)]))
    prod = it.intersect_on_matroid(big, point_cross_y, gamma)
    assert prod.dim == 0
    assert fn.degree_zero_dim(prod) == 1
    assert fn.contains_point(prod, (0, 0, 0))


def test_local_product_check():
    u34 = mt.uniform(3, 4)
    x = bg.bergman_fan(pair_matroid())
    assert it.local_product_check(u34, x, x, (0, 0, 0, 0))
    # A generic point of the product's support.
    assert it.local_product_check(u34, x, x, (1, 1, 1, 1))
    with pytest.raises(PointNotOnCycle):
        it.local_product_check(u34, x, x, (1, 0, 0, 0))


def test_intersect_mod_lineality():
    # Products of quotient presentations round-trip through the lift.
    u23 = mt.uniform(2, 3)
    ones = (1, 1, 1)
    b_mod = fn.quotient_by_lineality(bg.bergman_fan(u23), [ones])
    prod = it.intersect_mod_lineality(u23, [ones], b_mod, b_mod)
    assert fn.cycle_equals(prod, b_mod)


def test_cross_product_compatibility():
    # (A1 x A2) . (B1 x B2) = (A1 . B1) x (A2 . B2) in trop(M) x trop(M).
    u23 = mt.uniform(2, 3)
    big = mt.direct_sum(u23, u23)
    a1 = bg.bergman_fan(u23)
    a2 = line_in_r3()
    left = it.intersect_on_matroid(big, fn.cross_product(a1, a2),
                                   fn.cross_product(a2, a1))
    r11 = it.intersect_on_matroid(u23, a1, a2)
    r22 = it.intersect_on_matroid(u23, a2, a1)
    assert fn.cycle_equals(left, fn.cross_product(r11, r22))


def test_automorphism_invariance():
    # Relabeling the ground set commutes with the product.
    u34 = mt.uniform(3, 4)
    perm_rows = [(0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0)]
    x = bg.bergman_fan(pair_matroid())
    line = bg.bergman_fan(mt.uniform(1, 4))
    prod = it.intersect_on_matroid(u34, x, line)
    alpha_prod = fn.push_forward(perm_rows, 4, prod)
    prod_alpha = it.intersect_on_matroid(
        u34, fn.push_forward(perm_rows, 4, x),
        fn.push_forward(perm_rows, 4, line))
    assert fn.cycle_equals(alpha_prod, prod_alpha)


def test_zero_cycle_short_circuits():
    u23 = mt.uniform(2, 3)
    z = fn.Cycle.zero(3)
    assert it.intersect_on_matroid(u23, bg.bergman_fan(u23), z).is_zero()
    assert it.intersect_on_matroid(u23, z, z).is_zero()
