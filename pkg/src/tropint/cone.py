"""Exact rational polyhedral cones through the origin.

A cone is the nonnegative span of finitely many rays plus the real span of a
lineality lattice.  Both a generator description and a facet-inequality
description are kept (the latter derived on demand by the double-description
method, run on the dual cone).
"""

from fractions import Fraction
from math import gcd

from . import lattice as la


def _dd(ncols, equations, inequalities):
    """Double description: V-representation of {x : eq.x = 0, ineq.x >= 0}.

    Returns (rays, lineality_basis); rays are primitive and irredundant
    (extreme modulo the lineality space).
    """
    lin = [tuple(r) for r in la.identity_matrix(ncols)]
    rays = []
    processed = []  # constraints already incorporated (for adjacency tests)

    def absorb_into_lineality(a, keep_positive_ray):
        nonlocal lin, rays
        piv = None
        for v in lin:
            if la.dot(a, v) != 0:
                piv = v
                break
        if piv is None:
            return False
        if la.dot(a, piv) < 0:
            piv = tuple(-x for x in piv)
        pa = la.dot(a, piv)
        new_lin = []
        for w in lin:
            if w is piv or tuple(-x for x in w) == piv or w == piv:
                continue
            adj = la.primitive(tuple(pa * w[i] - la.dot(a, w) * piv[i]
                                     for i in range(ncols)))
            if not la.is_zero_vec(adj):
                new_lin.append(adj)
        new_rays = []
        for r in rays:
            adj = la.primitive(tuple(pa * r[i] - la.dot(a, r) * piv[i]
                                     for i in range(ncols)))
            if not la.is_zero_vec(adj):
                new_rays.append(adj)
        new_rays = list(dict.fromkeys(new_rays))
        if keep_positive_ray:
            new_rays.append(la.primitive(piv))
        lin = new_lin
        rays = new_rays
        return True

    def cut(a, equation):
        nonlocal rays
        vals = {r: la.dot(a, r) for r in rays}
        pos = [r for r in rays if vals[r] > 0]
        zero = [r for r in rays if vals[r] == 0]
        neg = [r for r in rays if vals[r] < 0]
        keep = zero if equation else pos + zero
        combos = []
        if pos and neg:
            tights = {r: frozenset(i for i, c in enumerate(processed)
                                   if la.dot(c, r) == 0)
                      for r in rays}
            for p in pos:
                for m in neg:
                    common = tights[p] & tights[m]
                    adjacent = True
                    for r in rays:
                        if r == p or r == m:
                            continue
                        if common <= tights[r]:
                            adjacent = False
                            break
                    if adjacent:
                        comb = la.primitive(tuple(
                            vals[p] * m[i] - vals[m] * p[i]
                            for i in range(ncols)))
                        if not la.is_zero_vec(comb):
                            combos.append(comb)
        rays = list(dict.fromkeys(keep + combos))

    for a in equations:
        a = tuple(a)
        if not absorb_into_lineality(a, keep_positive_ray=False):
            cut(a, equation=True)
        processed.append(a)
    for a in inequalities:
        a = tuple(a)
        if not absorb_into_lineality(a, keep_positive_ray=True):
            cut(a, equation=False)
        processed.append(a)

    return list(rays), [tuple(v) for v in lin]


class Cone:
    """Immutable cone; equality and hashing use a canonical key."""

    __slots__ = ("ambient", "rays", "lin", "_key", "_cache")

    def __init__(self, ambient, rays, lin):
        self.ambient = ambient
        self.rays = tuple(tuple(r) for r in rays)
        self.lin = tuple(tuple(v) for v in lin)
        self._key = None
        self._cache = {}

    @staticmethod
    def from_generators(ambient, rays, lineality=()):
        """Build a cone; detects hidden lineality and redundant generators."""
        lin_basis = la.span_lattice_basis(list(lineality), ambient)
        rays = [la.primitive(r) for r in rays if not la.is_zero_vec(r)]
        rays = [r for r in rays if not la.in_span(lin_basis, r)]
        rays = list(dict.fromkeys(rays))
        if not rays:
            return Cone(ambient, [], lin_basis)
        gens = rays + list(lin_basis)
        if la.matrix_rank(gens) == len(gens):
            return Cone(ambient, sorted(rays), lin_basis)
        # General case: canonicalize through the dual description.
        dual_rays, dual_lin = _dd(ambient, list(lin_basis), rays)
        prim_rays, prim_lin = _dd(ambient, dual_lin, dual_rays)
        lin_basis = la.span_lattice_basis(list(prim_lin), ambient)
        prim_rays = [r for r in prim_rays if not la.in_span(lin_basis, r)]
        cone = Cone(ambient, sorted(set(prim_rays)), lin_basis)
        cone._cache["hrep"] = ([tuple(e) for e in dual_lin],
                               [tuple(r) for r in dual_rays])
        return cone

    @staticmethod
    def from_hrep(ambient, equations, inequalities):
        rays, lin = _dd(ambient, equations, inequalities)
        return Cone.from_generators(ambient, rays, lin)

    # -- canonical key ----------------------------------------------------

    def key(self):
        if self._key is None:
            if self.lin:
                q = self.quotient_map()
                imgs = sorted(la.primitive(la.mat_vec(q, r)) for r in self.rays)
            else:
                imgs = sorted(self.rays)
            self._key = (self.ambient, tuple(imgs), self.lin)
        return self._key

    def quotient_map(self):
        """Deterministic surjective integer map with kernel = span(lin)."""
        if "qmap" not in self._cache:
            k = la.integer_kernel_basis(list(self.lin), self.ambient)
            self._cache["qmap"] = [tuple(row) for row in k]
        return self._cache["qmap"]

    def canonical_rays(self):
        """Deterministic ray representatives (stable across constructions)."""
        if not self.lin:
            return sorted(self.rays)
        if "canon_rays" not in self._cache:
            q = self.quotient_map()
            out = []
            for img in self.key()[1]:
                sol = la.solve_rational(q, img)
                den = 1
                for x in sol:
                    den = den * x.denominator // gcd(den, x.denominator)
                lift = la.primitive(tuple(int(x * den) for x in sol))
                out.append(lift)
            self._cache["canon_rays"] = sorted(out)
        return self._cache["canon_rays"]

    def __eq__(self, other):
        return isinstance(other, Cone) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"<Cone dim={self.dim()} rays={len(self.rays)} lin={len(self.lin)}>"

    # -- derived data -----------------------------------------------------

    def generators(self):
        return list(self.rays) + list(self.lin)

    def dim(self):
        if "dim" not in self._cache:
            gens = self.generators()
            self._cache["dim"] = la.matrix_rank(gens) if gens else 0
        return self._cache["dim"]

    def span_basis(self):
        """Saturated lattice basis (HNF) of span(cone) ∩ Z^n."""
        if "span" not in self._cache:
            gens = self.generators()
            self._cache["span"] = la.span_lattice_basis(gens, self.ambient)
        return self._cache["span"]

    def span_key(self):
        return tuple(self.span_basis())

    def hrep(self):
        """(equations, inequalities): facet description, both irredundant."""
        if "hrep" not in self._cache:
            if self.is_simplicial():
                self._cache["hrep"] = self._hrep_simplicial()
            else:
                dual_rays, dual_lin = _dd(self.ambient, list(self.lin),
                                          list(self.rays))
                self._cache["hrep"] = ([tuple(e) for e in dual_lin],
                                       [tuple(r) for r in dual_rays])
        return self._cache["hrep"]

    def _hrep_simplicial(self):
        """Direct facet description for independent generators.

        Equations cut out the span; one inequality per ray, dual to the
        generator basis (positive on its ray, zero on the other generators).
        """
        gens = self.generators()
        eqs = [tuple(e) for e in la.integer_kernel_basis(gens, self.ambient)
               ] if gens else [tuple(e)
                               for e in la.identity_matrix(self.ambient)]
        ineqs = []
        nrows = len(gens)
        rhs_list = la.identity_matrix(nrows)[:len(self.rays)]
        for sol in la.solve_rational_columns(gens, rhs_list):
            den = 1
            for x in sol:
                den = den * x.denominator // gcd(den, x.denominator)
            ineqs.append(la.primitive(tuple(int(x * den) for x in sol)))
        return eqs, ineqs

    def is_simplicial(self):
        gens = self.generators()
        return not gens or la.matrix_rank(gens) == len(gens)

    def is_unimodular(self):
        if "uni" not in self._cache:
            gens = self.generators()
            self._cache["uni"] = (bool(gens)
                                  and la.matrix_rank(gens) == len(gens)
                                  and la.lattice_span_index(gens) == 1)
        return self._cache["uni"]

    def contains(self, p):
        eqs, ineqs = self.hrep()
        return (all(la.dot(e, p) == 0 for e in eqs)
                and all(la.dot(a, p) >= 0 for a in ineqs))

    def interior_point(self):
        """A point in the relative interior (sum of the extreme rays)."""
        if not self.rays:
            return tuple(0 for _ in range(self.ambient))
        return tuple(sum(r[i] for r in self.rays) for i in range(self.ambient))

    def intersect(self, other):
        e1, i1 = self.hrep()
        e2, i2 = other.hrep()
        return Cone.from_hrep(self.ambient, list(e1) + list(e2),
                              list(i1) + list(i2))

    def split(self, a):
        """(cone ∩ {a.x >= 0}, cone ∩ {a.x <= 0})."""
        eqs, ineqs = self.hrep()
        plus = Cone.from_hrep(self.ambient, list(eqs), list(ineqs) + [tuple(a)])
        minus = Cone.from_hrep(self.ambient, list(eqs),
                               list(ineqs) + [tuple(-x for x in a)])
        return plus, minus

    def facets(self):
        """Codimension-one faces, each with a generator outside the face."""
        if "facets" in self._cache:
            return self._cache["facets"]
        out = []
        if self.is_simplicial():
            for i in range(len(self.rays)):
                rest = self.rays[:i] + self.rays[i + 1:]
                out.append((Cone(self.ambient, sorted(rest), self.lin),
                            self.rays[i]))
        else:
            _, ineqs = self.hrep()
            for a in ineqs:
                tight = [r for r in self.rays if la.dot(a, r) == 0]
                outside = next(r for r in self.rays if la.dot(a, r) > 0)
                face = Cone.from_generators(self.ambient, tight, self.lin)
                out.append((face, outside))
        self._cache["facets"] = out
        return out

    def image(self, matrix, ambient_out):
        """Image cone under an integer linear map (generator images)."""
        rays = [la.mat_vec(matrix, r) for r in self.rays]
        lin = [la.mat_vec(matrix, v) for v in self.lin]
        return Cone.from_generators(ambient_out, rays, lin)


def normal_vector(sigma, tau, outside_gen):
    """Primitive lattice normal vector of sigma relative to its facet tau.

    Returns an integer vector u in the span lattice of sigma whose class
    generates N_sigma / N_tau, oriented towards sigma (same side as
    ``outside_gen``).
    """
    if sigma.is_unimodular():
        return tuple(outside_gen)
    ns = sigma.span_basis()
    nt = tau.span_basis()
    cols = list(zip(*ns))
    coords = []
    for v in list(nt) + [tuple(outside_gen)]:
        sol = la.solve_rational(cols, v)
        assert sol is not None
        coords.append(sol)
    k = len(ns)
    tau_coords = []
    for c in coords[:-1]:
        assert all(x.denominator == 1 for x in c)
        tau_coords.append(tuple(int(x) for x in c))
    v_coords = coords[-1]
    if tau_coords:
        kern = la.integer_kernel_basis(tau_coords, k)
        assert len(kern) == 1
        g = la.primitive(kern[0])
    else:
        assert k == 1
        g = (1,)
    gv = sum(Fraction(a) * b for a, b in zip(g, v_coords))
    assert gv != 0
    if gv < 0:
        g = tuple(-x for x in g)
    u_coords = la.solve_gcd_one(g, 1)
    return tuple(sum(c * ns[i][j] for i, c in enumerate(u_coords))
                 for j in range(sigma.ambient))
