"""Bergman fans (fine subdivision) and the piecewise-linear functions on them.

The fine subdivision has one unimodular cone per maximal chain of flats: the
cone spanned by the vectors V_F = -sum_{i in F} e_i for the proper flats of
the chain, plus the lineality line R*(1,...,1).  Point location is purely
combinatorial: the sublevel sets of a point must all be flats.
"""

from fractions import Fraction

from . import fan as fn
from . import lattice as la
from . import matroid as mt
from .cone import Cone
from .errors import HasLoop, NotElementaryQuotient, PointNotOnCycle


def flat_vector(mask, n):
    """V_F = -sum of unit vectors of the flat's elements."""
    return tuple(-1 if (mask >> i) & 1 else 0 for i in range(n))


def _ones(n):
    return tuple(1 for _ in range(n))


def chain_cone(chain, n):
    """Cone of a chain of flats (last entry = ground set spans lineality)."""
    rays = [flat_vector(f, n) for f in chain if f != (1 << n) - 1]
    return Cone.from_generators(n, rays, [_ones(n)])


def bergman_fan(m):
    """The fine subdivision of trop(M): weight 1 on every chain cone."""
    if not m.is_loopfree():
        raise HasLoop("Bergman fans require loopfree matroids")
    pieces = [(chain_cone(chain, m.n), 1) for chain in m.maximal_chains()]
    return fn.make_cycle(m.n, m.total_rank, pieces)


def sublevel_decomposition(m, p):
    """Proper sublevel sets of p with their gap coefficients, or None.

    Returns (pairs, top) with pairs = [(flat mask, coefficient >= 0), ...]
    for the proper sublevel sets and top = max coordinate, so that
    p = sum coeff * V_flat + top * (1,...,1).  None when some sublevel set is
    not a flat (p outside the Bergman support).
    """
    if len(p) != m.n:
        return None
    if all(isinstance(x, int) for x in p):
        vals = list(p)
    else:
        vals = [Fraction(x) for x in p]
    levels = sorted(set(vals))
    pairs = []
    for j in range(len(levels) - 1):
        mask = 0
        for i, v in enumerate(vals):
            if v <= levels[j]:
                mask |= 1 << i
        if not m.is_flat(mask):
            return None
        pairs.append((mask, levels[j + 1] - levels[j]))
    return pairs, levels[-1]


class BergmanStructure:
    """Combinatorial locate() for the fine subdivision, without materializing it."""

    def __init__(self, m):
        self.matroid = m

    def locate(self, p):
        dec = sublevel_decomposition(self.matroid, p)
        if dec is None:
            return None
        pairs, _ = dec
        return chain_cone(self._complete([mask for mask, _ in pairs]),
                          self.matroid.n)

    def _complete(self, partial):
        """Deterministically extend a partial chain to a maximal one."""
        m = self.matroid
        chain = []
        current = 0
        for target in list(partial) + [m.full_mask]:
            while current != target:
                nxt = min(c for c in m.covers(current) if c & target == c)
                chain.append(nxt)
                current = nxt
        return chain


def ray_value_function(m, ray_value):
    """PL function on trop(M) from values on the flat vectors V_F.

    ``ray_value(mask)`` gives the value on V_F for every flat F including the
    ground set; the function is linear on every fine cone.
    """
    full = m.full_mask

    def value(p):
        dec = sublevel_decomposition(m, p)
        if dec is None:
            raise PointNotOnCycle("point is outside the Bergman support")
        pairs, top = dec
        total = -top * ray_value(full)
        for mask, coeff in pairs:
            total += coeff * ray_value(mask)
        return total

    return fn.PLFunction(value, structure=BergmanStructure(m))


def diagonal_fan(m):
    return bergman_fan(mt.diagonal_matroid(m))


def diagonal_functions(m):
    """The rank(M) cutter functions for the diagonal inside trop(M)^2.

    On the ray of the flat A|B of M+M the i-th function is -1 exactly when
    rank(A) + rank(B) - rank(A u B) >= i.
    """
    mm = mt.direct_sum(m, m)
    emask = m.full_mask
    rt = m.rank_table

    def make(i):
        def ray_value(mask):
            a = mask & emask
            b = mask >> m.n
            defect = rt[a] + rt[b] - rt[a | b]
            return -1 if defect >= i else 0
        return ray_value_function(mm, ray_value)

    return [make(i) for i in range(1, m.total_rank + 1)]


def modification_function(m, n_mat):
    """The function on trop(M) whose divisor is trop(N), for a rank-1 quotient."""
    if not mt.is_quotient(m, n_mat) or (
            m.total_rank - n_mat.total_rank != 1):
        raise NotElementaryQuotient(
            "need a quotient with rank gap exactly 1")
    return ray_value_function(
        m, lambda mask: n_mat.rank_table[mask] - m.rank_table[mask])


def quotient_chain_functions(m, n_mat):
    """Functions whose sequential divisors descend trop(M) to trop(N)."""
    k = m.total_rank - n_mat.total_rank
    ladder = [mt.intermediate_matroid(m, n_mat, i) for i in range(k + 1)]
    out = []
    # Descend from the top: the i-th divisor turns the fan of ladder[i] into
    # the fan of ladder[i-1].
    for i in range(k, 0, -1):
        lower, upper = ladder[i - 1], ladder[i]
        out.append(ray_value_function(
            m, lambda mask, lo=lower, up=upper:
                lo.rank_table[mask] - up.rank_table[mask]))
    return out


def apply_function_chain(functions, cycle):
    for phi in functions:
        cycle = fn.divisor(phi, cycle)
        if cycle.is_zero():
            return cycle
    return cycle


def refine_to_fine(cycle, m):
    """Refine a fan-structured subcycle so each facet lies in one fine cone.

    Splitting by all coordinate-difference hyperplanes fixes the ordering of
    the coordinates on each piece, hence its chain of sublevel sets; a fan cut
    by one global arrangement is again a fan, so no merging pass is needed.
    """
    if cycle.is_zero():
        return cycle
    n = cycle.ambient
    hyps = []
    for a in range(n):
        for b in range(a + 1, n):
            h = [0] * n
            h[a] = 1
            h[b] = -1
            hyps.append(tuple(h))
    refined = fn.refine_by_hyperplanes(cycle, hyps)
    for cone in refined.weights:
        if sublevel_decomposition(m, cone.interior_point()) is None:
            raise PointNotOnCycle("cycle support leaves the matroid fan")
    return refined


# -- refinement of products to the fine structure of M+M -------------------

def _cone_chain(cone, n):
    """Recover the chain of flat masks from a chain-form cone, else None."""
    if len(cone.lin) != 1 or cone.lin[0] != _ones(n):
        return None
    masks = []
    for r in cone.rays:
        if any(x not in (0, -1) for x in r):
            return None
        masks.append(mt.mask_of(i for i, x in enumerate(r) if x == -1))
    masks.sort(key=lambda a: mt.popcount(a))
    for a, b in zip(masks, masks[1:]):
        if a & b != a or a == b:
            return None
    return masks


def _is_chain_cycle(cycle, m):
    for cone in cycle.weights:
        chain = _cone_chain(cone, m.n)
        if chain is None:
            return False
        if not all(m.is_flat(f) for f in chain):
            return False
    return True


def product_refined(c_cycle, d_cycle, m):
    """C x D subdivided so the diagonal functions are linear on each facet.

    When both cycles consist of chain cones of B(M) the refinement is the
    combinatorial staircase subdivision into chain cones of B(M+M); otherwise
    the product is refined against the fine structure of M+M directly.
    """
    mm = mt.direct_sum(m, m)
    if c_cycle.is_zero() or d_cycle.is_zero():
        return fn.Cycle.zero(2 * m.n)
    if not (_is_chain_cycle(c_cycle, m) and _is_chain_cycle(d_cycle, m)):
        product = fn.cross_product(c_cycle, d_cycle)
        return refine_to_fine(product, mm)
    n = m.n
    full = m.full_mask
    pieces = []
    for sc, wc in c_cycle.weights.items():
        chain_c = _cone_chain(sc, n) + [full]
        for sd, wd in d_cycle.weights.items():
            chain_d = _cone_chain(sd, n) + [full]
            for path in _staircases(len(chain_c), len(chain_d)):
                rays = []
                for x, y in path:
                    a = chain_c[x - 1] if x else 0
                    b = chain_d[y - 1] if y else 0
                    if a == full and b == full:
                        continue
                    rays.append(flat_vector(a | (b << n), 2 * n))
                pieces.append((Cone.from_generators(2 * n, rays,
                                                    [_ones(2 * n)]),
                               wc * wd))
    return fn.make_cycle(2 * n, c_cycle.dim + d_cycle.dim, pieces)


def _staircases(a, b):
    """Monotone lattice paths from (0,0) to (a,b), excluding the start."""
    out = []

    def walk(x, y, acc):
        if x == a and y == b:
            out.append(acc)
            return
        if x < a:
            walk(x + 1, y, acc + [(x + 1, y)])
        if y < b:
            walk(x, y + 1, acc + [(x, y + 1)])

    walk(0, 0, [])
    return out


# -- modifications ---------------------------------------------------------

def modification_lift(m, n_mat, cycle):
    """Completed graph of the modification function over a subcycle of B(M).

    The graph of phi over the cycle is completed by downward cells in the new
    coordinate so the result is balanced; pushing forward along the
    coordinate projection returns the input cycle.
    """
    phi = modification_function(m, n_mat)
    total = m.n + 1
    if cycle.is_zero():
        return fn.Cycle.zero(total)
    refined = refine_to_fine(cycle, m)
    pieces = []
    for sigma, w in refined.weights.items():
        rays = [tuple(r) + (_as_int(phi.value(r)),) for r in sigma.rays]
        lin = [tuple(v) + (_as_int(phi.value(v)),) for v in sigma.lin]
        graph_cone = Cone.from_generators(total, rays, lin)
        basis = sigma.span_basis()
        images = [tuple(b) + (_as_int(fn._linear_value_on(sigma, phi, b)),)
                  for b in basis]
        pieces.append((graph_cone, w * la.lattice_span_index(images)))
    div = fn.divisor(phi, refined)
    down = tuple([0] * m.n + [-1])
    for tau, w in div.weights.items():
        rays = [tuple(r) + (_as_int(phi.value(r)),) for r in tau.rays]
        lin = [tuple(v) + (_as_int(phi.value(v)),) for v in tau.lin]
        pieces.append((Cone.from_generators(total, rays + [down], lin), w))
    return fn.make_cycle(total, refined.dim, pieces)


def _as_int(x):
    x = Fraction(x)
    assert x.denominator == 1
    return int(x)
