"""Moduli fans of marked rational tropical curves.

The space of n-marked trees is modelled on the Bergman fan of the complete
graph K_{n-1} modulo its lineality line; the doubling map sends it into the
space of leaf-distance vectors modulo the image of the marking map, where the
target lattice is generated by the one-edge split trees.
"""

from . import bergman as bg
from . import fan as fn
from . import lattice as la
from . import matroid as mt
from .cone import Cone
from .errors import OutOfRange

MAX_MARKS = 7


def mark_pairs(n):
    """Unordered mark pairs in lexicographic order (coordinates of R^C(n,2))."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def split_vector(n, part):
    """Distance vector of the one-edge tree separating ``part`` from the rest."""
    part = set(part)
    return tuple(1 if ((i in part) != (j in part)) else 0
                 for i, j in mark_pairs(n))


def marking_map_columns(n):
    """Images of the unit vectors under a -> ((a_i + a_j))_{i,j}."""
    pairs = mark_pairs(n)
    return [tuple(1 if k in p else 0 for p in pairs) for k in range(n)]


def _mat_mul(a, b):
    bt = list(zip(*b))
    return [tuple(la.dot(row, col) for col in bt) for row in a]


def flat_components(matroid, mask):
    """Vertex sets (size >= 2) of the edge subgraph of a graphic flat."""
    edges = matroid.edge_list
    nv = 1 + max(max(e) for e in edges)
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx, (u, v) in enumerate(edges):
        if (mask >> idx) & 1:
            parent[find(u)] = find(v)
    groups = {}
    for v in range(nv):
        groups.setdefault(find(v), []).append(v)
    return [sorted(g) for g in groups.values() if len(g) >= 2]


class ModuliSpace:
    """The n-marked curve fan together with its tree-space identification.

    Attributes:
      fan         -- B(K_{n-1}) / lineality line, in quotient coordinates
      chart_rows  -- integer matrix of the identification, written from the
                     quotient chart to the basis of the split-tree lattice;
                     unimodular by construction (asserted)
    """

    def __init__(self, n):
        if n < 3:
            raise OutOfRange("need at least 3 marks")
        if n > MAX_MARKS:
            raise OutOfRange("mark count exceeds the supported cap")
        self.n = n
        self.matroid = mt.graphic_complete(n - 1)
        n_edges = self.matroid.n
        ones = tuple(1 for _ in range(n_edges))
        self.fan = fn.quotient_by_lineality(bg.bergman_fan(self.matroid),
                                            [ones])
        self._build_chart()

    def _build_chart(self):
        n = self.n
        pairs = mark_pairs(n)
        npairs = len(pairs)
        n_edges = self.matroid.n
        # Doubling map on the ambient spaces: pairs through the last mark go
        # to zero, the others to twice the matching edge coordinate.
        edge_index = {e: k for k, e in enumerate(self.matroid.edge_list)}
        doubling = []
        for (i, j) in pairs:
            row = [0] * n_edges
            if j != n - 1:
                row[edge_index[(i, j)]] = 2
            doubling.append(tuple(row))
        # Quotient charts on both sides.
        src_basis = la.span_lattice_basis(
            [tuple(1 for _ in range(n_edges))], n_edges)
        src_rows = la.integer_kernel_basis(src_basis, n_edges)
        # Section of the source chart as a matrix Z^(m1) -> Z^(edges).
        section_matrix = [tuple(col) for col in
                          zip(*fn._section_rows(src_rows, n_edges))]
        tgt_basis = la.span_lattice_basis(marking_map_columns(n), npairs)
        tgt_rows = la.integer_kernel_basis(tgt_basis, npairs)
        self._target_rows = tgt_rows
        # Lattice of split trees, in target chart coordinates.
        split_images = []
        for part_mask in range(1, 1 << (n - 1)):
            part = [i for i in range(n - 1) if (part_mask >> i) & 1]
            if len(part) < 2 or len(part) > n - 2:
                continue
            split_images.append(la.mat_vec(tgt_rows, split_vector(n, part)))
        lam_basis = la.row_hnf(split_images)
        m2 = npairs - len(tgt_basis)
        assert len(lam_basis) == m2
        self._lam_basis = lam_basis
        # Chart-level map, rewritten in the split-tree basis.
        chart_cols = _mat_mul(tgt_rows, _mat_mul(doubling, section_matrix))
        assert len(chart_cols) == m2 and len(chart_cols[0]) == len(src_rows)
        lam_cols = list(zip(*lam_basis))
        t_cols = []
        for col in zip(*chart_cols):
            sol = la.solve_rational(lam_cols, col)
            assert sol is not None and all(x.denominator == 1 for x in sol)
            t_cols.append([int(x) for x in sol])
        self.chart_rows = [tuple(r) for r in zip(*t_cols)]
        assert len(self.chart_rows) == m2 == len(src_rows)
        assert abs(la.det_int(self.chart_rows)) == 1

    def split_coordinates(self, part):
        """A split tree M_{I|J} written in the split-tree lattice basis."""
        img = la.mat_vec(self._target_rows, split_vector(self.n, part))
        cols = list(zip(*self._lam_basis))
        sol = la.solve_rational(cols, img)
        assert sol is not None and all(x.denominator == 1 for x in sol)
        return tuple(int(x) for x in sol)

    def image_fan(self):
        """The curve fan pushed to the split-tree coordinates."""
        return fn.push_forward(self.chart_rows, len(self.chart_rows), self.fan)

    def ray_image(self, flat_mask):
        """Image of the quotient class of V_F in split-tree coordinates."""
        n_edges = self.matroid.n
        src_basis = la.span_lattice_basis(
            [tuple(1 for _ in range(n_edges))], n_edges)
        src_rows = la.integer_kernel_basis(src_basis, n_edges)
        v = bg.flat_vector(flat_mask, n_edges)
        return la.mat_vec(self.chart_rows, la.mat_vec(src_rows, v))


def moduli_mn(n):
    return ModuliSpace(n)


def full_space_cycle(ambient):
    """R^ambient as a one-cone cycle of weight one."""
    if ambient == 0:
        return fn.make_cycle(0, 0, [(Cone.from_generators(0, [], []), 1)])
    return fn.make_cycle(ambient, ambient, [
        (Cone.from_generators(ambient, [], la.identity_matrix(ambient)), 1)])


def moduli_mlab_presentation(n, deg, r):
    """Unquotiented model of parameterised curves: B(K) x R^(r+1).

    Every facet carries the two-dimensional lineality spanned by the all-ones
    vectors of the two summands.
    """
    total = n + deg
    if total < 3:
        raise OutOfRange("need at least 3 ends in total")
    if total > MAX_MARKS:
        raise OutOfRange("end count exceeds the supported cap")
    if r < 0:
        raise OutOfRange("negative ambient dimension")
    k_mat = mt.graphic_complete(total - 1)
    return fn.cross_product(bg.bergman_fan(k_mat), full_space_cycle(r + 1))


def moduli_mlab(n, deg, r):
    """Fan of n-marked degree-deg parameterised curves in R^r.

    The model is the marked-curve fan of n + deg ends crossed with R^r,
    presented as the quotient of B(K_{n+deg-1}) x R^(r+1) by the two all-ones
    lines.
    """
    if r == 0:
        return moduli_mn(n + deg).fan
    pres = moduli_mlab_presentation(n, deg, r)
    total = n + deg
    n_edges = mt.graphic_complete(total - 1).n
    ambient = n_edges + r + 1
    l1 = tuple(1 if i < n_edges else 0 for i in range(ambient))
    l2 = tuple(0 if i < n_edges else 1 for i in range(ambient))
    return fn.quotient_by_lineality(pres, [l1, l2])
