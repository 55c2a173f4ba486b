"""Weighted balanced fans in Z^n and the operations of tropical cycle calculus.

A cycle is a pure-dimensional list of weighted cones through the origin.  All
operations are exact; weights are integers and balancing is checked with
lattice normal vectors.
"""

from fractions import Fraction

from . import lattice as la
from .cone import Cone, normal_vector
from .errors import (
    NonConicalSlice,
    NotALinealitySpace,
    NotBalanced,
    NotInjective,
    NotLinearOnFacet,
    NotPure,
    NotZeroDimensional,
    PointNotOnCycle,
)


class Cycle:
    """A weighted fan: map from cones to nonzero integer weights.

    The zero cycle has no facets and dimension -1.
    """

    __slots__ = ("ambient", "dim", "weights")

    def __init__(self, ambient, dim, weights):
        self.ambient = ambient
        self.weights = {c: w for c, w in weights.items() if w != 0}
        self.dim = dim if self.weights else -1

    @staticmethod
    def zero(ambient):
        return Cycle(ambient, -1, {})

    def is_zero(self):
        return not self.weights

    def facet_items(self):
        """Deterministically ordered (cone, weight) pairs."""
        return sorted(self.weights.items(), key=lambda cw: cw[0].key())

    def __repr__(self):
        return f"<Cycle ambient={self.ambient} dim={self.dim} facets={len(self.weights)}>"


def make_cycle(ambient, dim, pieces):
    """Cycle from (cone, weight) pairs; merges equal cones, drops zeros."""
    weights = {}
    for cone, w in pieces:
        weights[cone] = weights.get(cone, 0) + w
    return Cycle(ambient, dim, weights)


# -- fan-ification ---------------------------------------------------------

def _hyperplane_set(cones):
    """All span equations and facet hyperplanes of the cones, deduplicated."""
    out = []
    seen = set()
    for c in cones:
        eqs, ineqs = c.hrep()
        for a in list(eqs) + list(ineqs):
            a = la.primitive(a)
            if la.is_zero_vec(a):
                continue
            for i, x in enumerate(a):
                if x != 0:
                    if x < 0:
                        a = tuple(-y for y in a)
                    break
            if a not in seen:
                seen.add(a)
                out.append(a)
    out.sort()
    return out


def _split_by_hyperplanes(cone, hyperplanes):
    """Subdivide a cone until it is sign-definite for every hyperplane."""
    pending = [cone]
    done = []
    while pending:
        c = pending.pop()
        for a in hyperplanes:
            has_pos = has_neg = False
            for g in c.rays:
                d = la.dot(a, g)
                if d > 0:
                    has_pos = True
                elif d < 0:
                    has_neg = True
            for g in c.lin:
                if la.dot(a, g) != 0:
                    has_pos = has_neg = True
            if has_pos and has_neg:
                plus, minus = c.split(a)
                pending.append(plus)
                pending.append(minus)
                break
        else:
            done.append(c)
    return done


def fanify(ambient, dim, pieces):
    """Turn overlapping weighted cones into a fan; merge coincident cones.

    Splits every cone by every other cone's defining hyperplanes, making all
    pieces sign-definite with respect to the whole collection; overlapping
    full-dimensional pieces then coincide and merge by weight addition.
    """
    pieces = [(c, w) for c, w in pieces if w != 0]
    if not pieces:
        return Cycle.zero(ambient)
    hyperplanes = _hyperplane_set([c for c, _ in pieces])
    out = []
    for c, w in pieces:
        for piece in _split_by_hyperplanes(c, hyperplanes):
            if piece.dim() == dim:
                out.append((piece, w))
    return make_cycle(ambient, dim, out)


def refine_by_hyperplanes(cycle, hyperplanes):
    """Subdivide every facet until it is sign-definite for each hyperplane."""
    if cycle.is_zero():
        return cycle
    out = []
    for c, w in cycle.weights.items():
        for piece in _split_by_hyperplanes(c, hyperplanes):
            if piece.dim() == cycle.dim:
                out.append((piece, w))
    return make_cycle(cycle.ambient, cycle.dim, out)


def common_refinement(cycle, structure):
    """Refine a cycle so that every facet lies inside one structure cone.

    The structure only needs a ``locate(point) -> Cone`` method returning a
    maximal cone containing the point (or None off support).
    """
    if cycle.is_zero():
        return cycle
    pieces = []
    for c, w in cycle.weights.items():
        pending = [c]
        while pending:
            sigma = pending.pop()
            p = sigma.interior_point()
            tau = structure.locate(p)
            if tau is None:
                raise PointNotOnCycle(
                    "cycle support leaves the reference structure")
            eqs, ineqs = tau.hrep()
            split_normal = None
            for a in list(eqs) + list(ineqs):
                has_pos = has_neg = False
                for g in sigma.rays:
                    d = la.dot(a, g)
                    if d > 0:
                        has_pos = True
                    elif d < 0:
                        has_neg = True
                for g in sigma.lin:
                    if la.dot(a, g) != 0:
                        has_pos = has_neg = True
                if has_pos and has_neg:
                    split_normal = a
                    break
            if split_normal is None:
                pieces.append((sigma, w))
            else:
                plus, minus = sigma.split(split_normal)
                if plus.dim() == cycle.dim:
                    pending.append(plus)
                if minus.dim() == cycle.dim:
                    pending.append(minus)
    return fanify(cycle.ambient, cycle.dim, pieces)


# -- linear extensions of PL functions -------------------------------------

class PLFunction:
    """Piecewise integer-linear conical function given by a point evaluator.

    ``hyperplanes``, when present, lists hyperplanes whose induced
    subdivision makes the function linear on each sign-definite cone.
    ``structure`` alternatively names a fan structure on whose cones the
    function is linear.
    """

    def __init__(self, value_fn, hyperplanes=None, structure=None):
        self._value_fn = value_fn
        self.hyperplanes = hyperplanes
        self.structure = structure

    def value(self, p):
        return self._value_fn(p)


def linear_form(covector):
    return PLFunction(lambda p: la.dot(covector, p), hyperplanes=[])


def max_of_linear(covectors):
    """max of the given linear forms; hyperplanes are pairwise differences."""
    covectors = [tuple(c) for c in covectors]
    hyps = []
    for i in range(len(covectors)):
        for j in range(i + 1, len(covectors)):
            d = la.vec_sub(covectors[i], covectors[j])
            if not la.is_zero_vec(d):
                hyps.append(la.primitive(d))
    return PLFunction(lambda p: max(la.dot(c, p) for c in covectors),
                      hyperplanes=hyps)


def standard_hyperplane_function(n):
    """max(0, x_1, ..., x_n): the tropical hyperplane cutter."""
    forms = [tuple(0 for _ in range(n))]
    forms += [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return max_of_linear(forms)


def _linear_value_on(cone, phi, target, cache=None):
    """phi's linear extension from the cone, evaluated at target in span."""
    if cache is not None and id(cone) in cache:
        cov = cache[id(cone)]
    else:
        gens = cone.generators()
        vals = [Fraction(phi.value(g)) for g in gens]
        cov = la.solve_rational(gens, vals)
        if cov is None:
            raise NotLinearOnFacet("function is not linear on a facet")
        total = tuple(sum(g[i] for g in gens) for i in range(cone.ambient))
        if la.dot(cov, total) != Fraction(phi.value(total)):
            raise NotLinearOnFacet("function is not linear on a facet")
        if cache is not None:
            cache[id(cone)] = cov
    return la.dot(cov, target)


# -- balancing and divisors ------------------------------------------------

def _codim1_groups(cycle):
    groups = {}
    for sigma, w in cycle.weights.items():
        for face, outside in sigma.facets():
            groups.setdefault(face, []).append((sigma, w, outside))
    return groups


def is_balanced(cycle):
    """(True, None) or (False, first violating codimension-one face)."""
    if cycle.is_zero():
        return True, None
    dims = {c.dim() for c in cycle.weights}
    if dims != {cycle.dim}:
        raise NotPure("cycle has facets of mixed dimension")
    for tau, lst in sorted(_codim1_groups(cycle).items(),
                           key=lambda kv: kv[0].key()):
        total = tuple(0 for _ in range(cycle.ambient))
        for sigma, w, outside in lst:
            u = normal_vector(sigma, tau, outside)
            total = la.vec_add(total, la.vec_scale(u, w))
        if not la.in_span(tau.generators(), total):
            return False, tau
    return True, None


def divisor(phi, cycle):
    """The codimension-one cycle cut out by a piecewise-linear function.

    The function must already be linear on each facet (refine first).
    """
    if cycle.is_zero():
        return cycle
    cache = {}
    pieces = []
    for tau, lst in _codim1_groups(cycle).items():
        total = tuple(0 for _ in range(cycle.ambient))
        s = Fraction(0)
        for sigma, w, outside in lst:
            u = normal_vector(sigma, tau, outside)
            if u in sigma.rays:
                s += w * Fraction(phi.value(u))
            else:
                s += w * _linear_value_on(sigma, phi, u, cache)
            total = la.vec_add(total, la.vec_scale(u, w))
        if la.is_zero_vec(total):
            tau_val = Fraction(0)
        else:
            if not la.in_span(tau.generators(), total):
                raise NotBalanced("input cycle is not balanced")
            if tau.generators():
                tau_val = _linear_value_on(tau, phi, total, cache)
            else:
                tau_val = Fraction(0)
        s -= tau_val
        assert s.denominator == 1
        if s != 0:
            pieces.append((tau, int(s)))
    return make_cycle(cycle.ambient, cycle.dim - 1, pieces)


# -- products, images, quotients -------------------------------------------

def _embed(v, offset, total):
    out = [0] * total
    for i, x in enumerate(v):
        out[offset + i] = x
    return tuple(out)


def cross_product(x_cycle, y_cycle):
    n = x_cycle.ambient
    m = y_cycle.ambient
    if x_cycle.is_zero() or y_cycle.is_zero():
        return Cycle.zero(n + m)
    pieces = []
    for cx, wx in x_cycle.weights.items():
        rx = [_embed(r, 0, n + m) for r in cx.rays]
        lx = [_embed(v, 0, n + m) for v in cx.lin]
        for cy, wy in y_cycle.weights.items():
            ry = [_embed(r, n, n + m) for r in cy.rays]
            ly = [_embed(v, n, n + m) for v in cy.lin]
            pieces.append((Cone.from_generators(n + m, rx + ry, lx + ly),
                           wx * wy))
    return make_cycle(n + m, x_cycle.dim + y_cycle.dim, pieces)


def lattice_index(rows, sigma):
    """Index of the image of sigma's span lattice inside its saturation."""
    basis = sigma.span_basis()
    images = [la.mat_vec(rows, b) for b in basis]
    if la.matrix_rank(images) != len(basis):
        raise NotInjective("map collapses the cone")
    return la.lattice_span_index(images)


def push_forward(rows, target_ambient, cycle):
    """Image cycle under an integer linear map given by matrix rows."""
    if cycle.is_zero():
        return Cycle.zero(target_ambient)
    pieces = []
    for sigma, w in cycle.weights.items():
        img = sigma.image(rows, target_ambient)
        if img.dim() < cycle.dim:
            continue
        pieces.append((img, w * lattice_index(rows, sigma)))
    return fanify(target_ambient, cycle.dim, pieces)


def star_at(cycle, p):
    """Local fan of directions v with p + eps*v on the cycle."""
    if cycle.is_zero():
        raise PointNotOnCycle("zero cycle has empty support")
    pieces = []
    for sigma, w in cycle.weights.items():
        if not sigma.contains(p):
            continue
        eqs, ineqs = sigma.hrep()
        tight = [a for a in ineqs if la.dot(a, p) == 0]
        pieces.append((Cone.from_hrep(cycle.ambient, list(eqs), tight), w))
    if not pieces:
        raise PointNotOnCycle("point is outside the cycle support")
    return make_cycle(cycle.ambient, cycle.dim, pieces)


def _quotient_rows(lineality, ambient):
    basis = la.span_lattice_basis(list(lineality), ambient)
    return la.integer_kernel_basis(basis, ambient), basis


def quotient_by_lineality(cycle, lineality):
    """Quotient cycle in Z^(n-l) by a common lineality sublattice."""
    rows, basis = _quotient_rows(lineality, cycle.ambient)
    m = len(rows)
    if cycle.is_zero():
        return Cycle.zero(m)
    for sigma in cycle.weights:
        for v in basis:
            if not (sigma.contains(v)
                    and sigma.contains(tuple(-x for x in v))):
                raise NotALinealitySpace(
                    "vector is not in every facet's lineality space")
    pieces = [(sigma.image(rows, m), w) for sigma, w in cycle.weights.items()]
    return make_cycle(m, cycle.dim - len(basis), pieces)


def _section_rows(qrows, ambient):
    """Integer right inverse of the quotient map (columns as rows)."""
    m = len(qrows)
    transpose = [tuple(r[i] for r in qrows) for i in range(ambient)]
    h, u = la.hnf_with_transform(transpose)
    for j in range(m):
        expected = tuple(1 if i == j else 0 for i in range(m))
        assert tuple(h[j]) == expected
    return [tuple(u[j]) for j in range(m)]  # section of e_j = this row


def lift_through_quotient(cycle, lineality, ambient):
    """Preimage cycle under the quotient map fixed by the lineality lattice."""
    rows, basis = _quotient_rows(lineality, ambient)
    if cycle.is_zero():
        return Cycle.zero(ambient)
    secs = _section_rows(rows, ambient)

    def lift(v):
        out = [0] * ambient
        for j, c in enumerate(v):
            for i in range(ambient):
                out[i] += c * secs[j][i]
        return tuple(out)

    pieces = []
    for sigma, w in cycle.weights.items():
        rays = [lift(r) for r in sigma.rays]
        lin = [lift(v) for v in sigma.lin] + list(basis)
        pieces.append((Cone.from_generators(ambient, rays, lin), w))
    return make_cycle(ambient, cycle.dim + len(basis), pieces)


def face_at_infinity(cycle, coords):
    """Limit cycle as the given coordinates go to -infinity together.

    Keeps the facets whose recession contains the direction -sum(e_r), slices
    them with the equal-coordinate plane for those coordinates and projects
    the slice forgetting them, with lattice-index weights.
    """
    coords = sorted(set(coords))
    n = cycle.ambient
    k = len(coords)
    keep = [i for i in range(n) if i not in coords]
    m = len(keep)
    if cycle.is_zero():
        return Cycle.zero(m)
    proj = [tuple(1 if j == i else 0 for j in range(n)) for i in keep]
    w_dir = tuple(-1 if i in coords else 0 for i in range(n))
    extra_eqs = []
    for r in coords[1:]:
        e = [0] * n
        e[coords[0]] = 1
        e[r] = -1
        extra_eqs.append(tuple(e))
    pieces = []
    for sigma, w in cycle.weights.items():
        if not sigma.contains(w_dir):
            continue
        eqs, ineqs = sigma.hrep()
        gamma = Cone.from_hrep(n, list(eqs) + extra_eqs, list(ineqs))
        img = gamma.image(proj, m)
        if img.dim() != cycle.dim - k:
            continue
        basis = gamma.span_basis()
        images = [la.mat_vec(proj, b) for b in basis]
        pieces.append((img, w * la.lattice_span_index(images)))
    out = fanify(m, cycle.dim - k, pieces)
    ok, _ = is_balanced(out)
    if not ok:
        raise NonConicalSlice("face at infinity is not a balanced fan")
    return out


# -- degrees and plumbing --------------------------------------------------

def degree_zero_dim(cycle):
    if cycle.is_zero():
        return 0
    if cycle.dim != 0:
        raise NotZeroDimensional("cycle has positive dimension")
    return sum(cycle.weights.values())


def projective_degree(cycle):
    if cycle.is_zero():
        return 0
    phi = standard_hyperplane_function(cycle.ambient)
    current = cycle
    for _ in range(cycle.dim):
        current = refine_by_hyperplanes(current, phi.hyperplanes)
        current = divisor(phi, current)
        if current.is_zero():
            return 0
    return degree_zero_dim(current)


def scale(cycle, factor):
    if factor == 0 or cycle.is_zero():
        return Cycle.zero(cycle.ambient)
    return Cycle(cycle.ambient, cycle.dim,
                 {c: factor * w for c, w in cycle.weights.items()})


def add(x_cycle, y_cycle):
    if x_cycle.ambient != y_cycle.ambient:
        raise NotPure("ambient dimensions differ")
    if x_cycle.is_zero():
        return y_cycle
    if y_cycle.is_zero():
        return x_cycle
    if x_cycle.dim != y_cycle.dim:
        raise NotPure("cannot add cycles of different dimensions")
    pieces = list(x_cycle.weights.items()) + list(y_cycle.weights.items())
    return fanify(x_cycle.ambient, x_cycle.dim, pieces)


def cycle_equals(x_cycle, y_cycle):
    if x_cycle.ambient != y_cycle.ambient:
        return False
    if x_cycle.is_zero() or y_cycle.is_zero():
        return x_cycle.is_zero() and y_cycle.is_zero()
    if x_cycle.dim != y_cycle.dim:
        return False
    return add(x_cycle, scale(y_cycle, -1)).is_zero()


def contains_point(cycle, p):
    return any(c.contains(p) for c in cycle.weights)
