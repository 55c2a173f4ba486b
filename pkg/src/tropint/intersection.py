"""Intersection products on matroid fans, pull-backs, and local checks.

The product of two subcycles of trop(M) cuts the diagonal out of C x D with
the rank-defect functions and pushes the result back to one factor.
"""

from . import bergman as bg
from . import fan as fn
from . import lattice as la
from . import matroid as mt
from .errors import NotSubcycle, PointNotOnCycle


def _projection_rows(n_total, start, count):
    return [tuple(1 if j == start + i else 0 for j in range(n_total))
            for i in range(count)]


def _check_subcycle(m, cycle):
    """Spot-check that a cycle's generators lie on the Bergman support."""
    for cone in cycle.weights:
        points = list(cone.rays) + [cone.interior_point()]
        for p in points:
            if bg.sublevel_decomposition(m, p) is None:
                raise NotSubcycle(
                    "cycle is not supported on the matroid fan")


def intersect_on_matroid(m, c_cycle, d_cycle, factor=0):
    """The intersection product C.D of two subcycles of trop(M)."""
    n = m.n
    if c_cycle.is_zero() or d_cycle.is_zero():
        return fn.Cycle.zero(n)
    _check_subcycle(m, c_cycle)
    _check_subcycle(m, d_cycle)
    try:
        product = bg.product_refined(c_cycle, d_cycle, m)
    except PointNotOnCycle as exc:
        raise NotSubcycle(str(exc))
    cut = bg.apply_function_chain(bg.diagonal_functions(m), product)
    rows = _projection_rows(2 * n, factor * n, n)
    return fn.push_forward(rows, n, cut)


def intersect_via_diagonal_cycle(m, c_cycle, d_cycle):
    """Same product computed as the diagonal cycle times C x D in trop(M)^2."""
    n = m.n
    mm = mt.direct_sum(m, m)
    product = intersect_on_matroid(mm, bg.diagonal_fan(m),
                                   fn.cross_product(c_cycle, d_cycle))
    return fn.push_forward(_projection_rows(2 * n, 0, n), n, product)


def intersect_mod_lineality(m, lineality, c_cycle, d_cycle):
    """Product of cycles presented on trop(M)/L: lift, intersect, quotient."""
    lifted_c = fn.lift_through_quotient(c_cycle, lineality, m.n)
    lifted_d = fn.lift_through_quotient(d_cycle, lineality, m.n)
    product = intersect_on_matroid(m, lifted_c, lifted_d)
    return fn.quotient_by_lineality(product, lineality)


class Morphism:
    """Integer-linear map between matroid fans, with spot validation."""

    def __init__(self, source_matroid, target_matroid, rows):
        self.source = source_matroid
        self.target = target_matroid
        self.rows = [tuple(r) for r in rows]
        src = bg.bergman_fan(source_matroid)
        for cone in src.weights:
            for g in list(cone.rays) + list(cone.lin):
                img = la.mat_vec(self.rows, g)
                neg = tuple(-x for x in img)
                on = bg.sublevel_decomposition(target_matroid, img) is not None
                if g in cone.lin:
                    on = on and bg.sublevel_decomposition(
                        target_matroid, neg) is not None
                if not on:
                    raise NotSubcycle(
                        "map does not send the source fan into the target fan")

    def apply(self, v):
        return la.mat_vec(self.rows, v)

    def graph_rows(self):
        n = self.source.n
        ident = [tuple(1 if j == i else 0 for j in range(n))
                 for i in range(n)]
        return ident + self.rows


def graph(morphism, cycle=None):
    """The graph cycle of f over a subcycle of the source (default: all)."""
    if cycle is None:
        cycle = bg.bergman_fan(morphism.source)
    total = morphism.source.n + morphism.target.n
    return fn.push_forward(morphism.graph_rows(), total, cycle)


def pullback(morphism, cycle):
    """f*C = projection of the graph of f intersected with X x C."""
    m, n_mat = morphism.source, morphism.target
    n, k = m.n, n_mat.n
    big = mt.direct_sum(m, n_mat)
    x_fan = bg.bergman_fan(m)
    gamma = graph(morphism)
    xc = fn.cross_product(x_fan, cycle)
    product = intersect_on_matroid(big, gamma, xc)
    return fn.push_forward(_projection_rows(n + k, 0, n), n, product)


def first_non_coloop(m):
    """Smallest element whose removal keeps the rank, or None if free."""
    full = m.full_mask
    for i in range(m.n):
        if m.rank(full & ~(1 << i)) == m.total_rank:
            return i
    return None


def _delete_rows(n, e):
    return [tuple(1 if j == i else 0 for j in range(n))
            for i in range(n) if i != e]


def intersect_shaw_recursion(m, e, c_cycle, d_cycle):
    """Recursive product via the modification along a non-coloop element.

    C.D = pi^*(pi_*C . pi_*D) + pi^*pi_*C . delta_D + delta_C . pi^*pi_*D
        + delta_C . delta_D  with delta_C = C - pi^*pi_*C; the first term
    recurses on the deletion, the others use the diagonal product.
    """
    if m.total_rank == m.n:
        return intersect_on_matroid(m, c_cycle, d_cycle)
    deleted = mt.deletion(m, 1 << e)
    rows = _delete_rows(m.n, e)
    pi = Morphism(m, deleted, rows)
    pc = fn.push_forward(rows, m.n - 1, c_cycle)
    pd = fn.push_forward(rows, m.n - 1, d_cycle)
    lift_c = pullback(pi, pc)
    lift_d = pullback(pi, pd)
    delta_c = fn.add(c_cycle, fn.scale(lift_c, -1))
    delta_d = fn.add(d_cycle, fn.scale(lift_d, -1))
    first = pullback(pi, intersect_shaw_recursion(
        deleted, first_non_coloop(deleted), pc, pd))
    terms = [first,
             intersect_on_matroid(m, lift_c, delta_d),
             intersect_on_matroid(m, delta_c, lift_d),
             intersect_on_matroid(m, delta_c, delta_d)]
    out = fn.Cycle.zero(m.n)
    for t in terms:
        out = fn.add(out, t) if not t.is_zero() else out
    return out


def _star_or_zero(cycle, p):
    try:
        return fn.star_at(cycle, p)
    except PointNotOnCycle:
        return fn.Cycle.zero(cycle.ambient)


def local_product_check(m, c_cycle, d_cycle, p):
    """Does the star of C.D at p equal the product of the stars in trop(M_p)?"""
    if bg.sublevel_decomposition(m, p) is None:
        raise PointNotOnCycle("point is outside the matroid fan")
    local = mt.induced_matroid_at(m, p)
    star_c = _star_or_zero(c_cycle, p)
    star_d = _star_or_zero(d_cycle, p)
    if star_c.is_zero() or star_d.is_zero():
        local_prod = fn.Cycle.zero(m.n)
    else:
        local_prod = intersect_on_matroid(local, star_c, star_d)
    product = intersect_on_matroid(m, c_cycle, d_cycle)
    star_prod = _star_or_zero(product, p)
    return fn.cycle_equals(star_prod, local_prod)
