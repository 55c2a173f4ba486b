"""Loopfree matroids with exact rank tables and the standard constructions.

Subsets of the ground set are plain int bitmasks ("masks"): element i of the
ground set {0, ..., n-1} corresponds to bit i.  The rank table has one entry
per mask, so every rank query is a table lookup.
"""

import os
from fractions import Fraction
from itertools import combinations

from .errors import (
    GroundSetMismatch,
    HasLoop,
    IndexOutOfRange,
    InvalidRank,
    NotAMatroid,
    NotAQuotient,
    SizeOverflow,
)

HARD_CAP = 20


def max_ground_set():
    cap = int(os.environ.get("TROPINT_MAX_GROUND_SET", HARD_CAP))
    return min(cap, HARD_CAP)


def mask_of(elements):
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return mask.bit_count()


class Matroid:
    """A matroid given by its full rank table."""

    def __init__(self, n, rank_table, label=None, check=True, allow_loops=False):
        if n > max_ground_set():
            raise SizeOverflow(f"ground set of size {n} exceeds the cap")
        if len(rank_table) != 1 << n:
            raise NotAMatroid("rank table has the wrong length")
        self.n = n
        self.rank_table = rank_table
        self.label = label
        self._cache = {}
        if check:
            self._check_basic(allow_loops)

    def _check_basic(self, allow_loops):
        rt = self.rank_table
        if rt[0] != 0:
            raise NotAMatroid("rank of the empty set must be 0")
        full = (1 << self.n) - 1
        for i in range(self.n):
            bit = 1 << i
            for a in range(1 << self.n):
                if a & bit:
                    continue
                d = rt[a | bit] - rt[a]
                if d < 0 or d > 1:
                    raise NotAMatroid("unit-increase axiom fails")
            if not allow_loops and rt[bit] != 1:
                raise HasLoop(f"element {i + 1} is a loop")
        # Local submodularity (third criterion), exhaustive for small n.
        if self.n <= 7:
            for a in range(1 << self.n):
                ra = rt[a]
                stuck = [i for i in range(self.n)
                         if not (a >> i) & 1 and rt[a | (1 << i)] == ra]
                for x, y in combinations(stuck, 2):
                    if rt[a | (1 << x) | (1 << y)] != ra:
                        raise NotAMatroid("local submodularity fails")
        _ = full

    # -- basic queries ----------------------------------------------------

    def rank(self, mask):
        return self.rank_table[mask]

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    @property
    def total_rank(self):
        return self.rank_table[self.full_mask]

    def is_loopfree(self):
        return all(self.rank_table[1 << i] == 1 for i in range(self.n))

    def loops(self):
        return [i for i in range(self.n) if self.rank_table[1 << i] == 0]

    def closure(self, mask):
        r = self.rank_table[mask]
        out = mask
        for i in range(self.n):
            bit = 1 << i
            if not mask & bit and self.rank_table[mask | bit] == r:
                out |= bit
        return out

    def is_flat(self, mask):
        return self.closure(mask) == mask

    def flats(self):
        if "flats" not in self._cache:
            self._cache["flats"] = [m for m in range(1 << self.n)
                                    if self.closure(m) == m]
        return self._cache["flats"]

    def proper_flats(self):
        """Flats other than the empty set and the full ground set."""
        full = self.full_mask
        return [f for f in self.flats() if f != 0 and f != full]

    def covers(self, flat):
        """Flats covering the given flat (rank exactly one more)."""
        out = set()
        for i in range(self.n):
            bit = 1 << i
            if not flat & bit:
                out.add(self.closure(flat | bit))
        return sorted(out)

    def maximal_chains(self):
        """All maximal chains of flats from the first proper flat up to E.

        A chain is a tuple of flats (F_1 < ... < F_p = E), excluding the
        empty set.
        """
        if "chains" in self._cache:
            return self._cache["chains"]
        full = self.full_mask
        out = []

        def descend(flat, acc):
            if flat == full:
                out.append(tuple(acc))
                return
            for nxt in self.covers(flat):
                descend(nxt, acc + [nxt])

        descend(self.closure(0), [])
        self._cache["chains"] = out
        return out

    def bases(self):
        if "bases" not in self._cache:
            r = self.total_rank
            self._cache["bases"] = [
                m for m in range(1 << self.n)
                if popcount(m) == r and self.rank_table[m] == r]
        return self._cache["bases"]

    def independent(self, mask):
        return self.rank_table[mask] == popcount(mask)

    def __eq__(self, other):
        return (isinstance(other, Matroid) and self.n == other.n
                and self.rank_table == other.rank_table)

    def __hash__(self):
        return hash((self.n, tuple(self.rank_table)))

    def __repr__(self):
        name = self.label or "Matroid"
        return f"<{name}: n={self.n}, rank={self.total_rank}>"


# -- constructors ---------------------------------------------------------

def from_bases(n, bases, label=None, check=True):
    """Matroid from a list of basis masks (rank = max intersection size)."""
    bases = sorted(set(bases))
    if not bases:
        raise NotAMatroid("no bases given")
    size = popcount(bases[0])
    if any(popcount(b) != size for b in bases):
        raise NotAMatroid("bases are not equicardinal")
    if check:
        _check_exchange(n, bases)
    table = [0] * (1 << n)
    for a in range(1 << n):
        table[a] = max(popcount(a & b) for b in bases)
    for i in range(n):
        if table[1 << i] == 0:
            raise HasLoop(f"element {i + 1} is in no basis")
    return Matroid(n, table, label=label, check=False)


def _check_exchange(n, bases):
    base_set = set(bases)
    pairs = combinations(bases, 2)
    if n > 12:
        pairs = list(combinations(bases, 2))[:2000]
    for b1, b2 in pairs:
        diff = b1 & ~b2
        for x in elements_of(diff):
            ok = False
            for y in elements_of(b2 & ~b1):
                if (b1 & ~(1 << x)) | (1 << y) in base_set:
                    ok = True
                    break
            if not ok:
                raise NotAMatroid("basis exchange axiom fails")


def uniform(k, n, label=None):
    if k < 1 or k > n:
        raise InvalidRank(f"invalid rank {k} for {n} elements")
    table = [min(popcount(a), k) for a in range(1 << n)]
    return Matroid(n, table, label=label or f"U({k},{n})", check=False)


def complete_graph_edges(m):
    """Edges of K_m in lexicographic order, as vertex pairs."""
    return [(i, j) for i in range(m) for j in range(i + 1, m)]


def graphic_complete(m, label=None):
    """The graphic matroid of the complete graph K_m."""
    if m < 2:
        raise InvalidRank("need at least 2 vertices")
    edges = complete_graph_edges(m)
    n = len(edges)
    table = [0] * (1 << n)
    for a in range(1 << n):
        # rank = m - number of connected components of the edge subgraph
        parent = list(range(m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for idx, (u, v) in enumerate(edges):
            if (a >> idx) & 1:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        comps = len({find(x) for x in range(m)})
        table[a] = m - comps
    mat = Matroid(n, table, label=label or f"K({m})", check=False)
    mat.edge_list = edges
    return mat


# -- constructions --------------------------------------------------------

def _subset_project(mask, kept):
    """Re-index mask bits: kept[i_new] = old index."""
    out = 0
    for new, old in enumerate(kept):
        if (mask >> old) & 1:
            out |= 1 << new
    return out


def deletion(q, r_mask):
    """Delete the elements in r_mask; rank is inherited.

    The result keeps the remaining elements in order and records the
    correspondence in ``parent_index_map`` (new index -> old index).
    """
    kept = [i for i in range(q.n) if not (r_mask >> i) & 1]
    n = len(kept)
    table = [0] * (1 << n)
    for a in range(1 << n):
        old = mask_of(kept[i] for i in elements_of(a))
        table[a] = q.rank_table[old]
    out = Matroid(n, table, check=False, allow_loops=True)
    out.parent_index_map = tuple(kept)
    return out


def contraction(q, r_mask):
    """Contract the elements in r_mask; may contain loops (tagged)."""
    kept = [i for i in range(q.n) if not (r_mask >> i) & 1]
    n = len(kept)
    rr = q.rank_table[r_mask]
    table = [0] * (1 << n)
    for a in range(1 << n):
        old = mask_of(kept[i] for i in elements_of(a))
        table[a] = q.rank_table[old | r_mask] - rr
    out = Matroid(n, table, check=False, allow_loops=True)
    out.parent_index_map = tuple(kept)
    return out


def direct_sum(m1, m2, label=None):
    n = m1.n + m2.n
    if n > max_ground_set():
        raise SizeOverflow(f"direct sum would have {n} elements")
    mask1 = (1 << m1.n) - 1
    table = [0] * (1 << n)
    for a in range(1 << n):
        table[a] = m1.rank_table[a & mask1] + m2.rank_table[a >> m1.n]
    return Matroid(n, table, label=label, check=False, allow_loops=True)


def diagonal_matroid(m):
    """The matroid on E ⊔ E with rank(A ⊔ B) = rank(A ∪ B)."""
    n = 2 * m.n
    if n > max_ground_set():
        raise SizeOverflow(f"diagonal matroid would have {n} elements")
    mask1 = (1 << m.n) - 1
    table = [0] * (1 << n)
    for a in range(1 << n):
        table[a] = m.rank_table[(a & mask1) | (a >> m.n)]
    return Matroid(n, table, check=False)


def is_quotient(m, n_mat):
    """True iff every flat of n_mat is a flat of m (same ground set)."""
    if m.n != n_mat.n:
        raise GroundSetMismatch("matroids live on different ground sets")
    mflats = set(m.flats())
    return all(f in mflats for f in n_mat.flats())


def quotient_witness(m, n_mat):
    """The minimal matroid Q on E ⊔ R with Q∖R = m and Q/R = n_mat."""
    if not is_quotient(m, n_mat):
        raise NotAQuotient("second matroid is not a quotient of the first")
    r, s = m.total_rank, n_mat.total_rank
    k = r - s
    total = m.n + k
    if total > max_ground_set():
        raise SizeOverflow(f"witness would have {total} elements")
    table = [0] * (1 << total)
    emask = (1 << m.n) - 1
    for a in range(1 << total):
        i = a & emask
        j = popcount(a >> m.n)
        table[a] = min(m.rank_table[i] + j, n_mat.rank_table[i] + k)
    q = Matroid(total, table, check=False)
    q.witness_elements = tuple(range(m.n, total))
    return q


def intermediate_matroid(m, n_mat, i):
    """The i-th matroid in the quotient ladder from n_mat (i=0) up to m."""
    if not is_quotient(m, n_mat):
        raise NotAQuotient("second matroid is not a quotient of the first")
    k = m.total_rank - n_mat.total_rank
    if i < 0 or i > k:
        raise IndexOutOfRange(f"step {i} outside 0..{k}")
    table = [min(n_mat.rank_table[a] + i, m.rank_table[a])
             for a in range(1 << m.n)]
    return Matroid(m.n, table, check=False)


def induced_matroid_at(m, p):
    """The matroid M_p whose bases are the p-minimum-weight bases of m."""
    if len(p) != m.n:
        raise GroundSetMismatch("point has wrong length")
    p = [Fraction(x) for x in p]
    best = None
    keep = []
    for b in m.bases():
        w = sum(p[i] for i in elements_of(b))
        if best is None or w < best:
            best = w
            keep = [b]
        elif w == best:
            keep.append(b)
    return from_bases_allow_loops(m.n, keep)


def from_bases_allow_loops(n, bases):
    table = [0] * (1 << n)
    for a in range(1 << n):
        table[a] = max(popcount(a & b) for b in bases)
    return Matroid(n, table, check=False, allow_loops=True)


def connected_components(m):
    """Partition of the ground set into connected components (masks)."""
    full = m.full_mask
    rt = m.rank_table
    total = rt[full]
    separators = [s for s in range(1 << m.n)
                  if rt[s] + rt[full & ~s] == total]
    comps = []
    for i in range(m.n):
        acc = full
        for s in separators:
            if (s >> i) & 1:
                acc &= s
        comps.append(acc)
    return sorted(set(comps))


def matroid_intersection(n1, n2):
    """The matroid intersection N ∧ N' (bases: minimal basis intersections).

    Returns (matroid, rank).  The matroid may contain loops (it does whenever
    its rank is smaller than the ground-set size allows).
    """
    if n1.n != n2.n:
        raise GroundSetMismatch("matroids live on different ground sets")
    inters = {b1 & b2 for b1 in n1.bases() for b2 in n2.bases()}
    minimal = [a for a in inters
               if not any(b != a and b & a == b for b in inters)]
    sizes = {popcount(a) for a in minimal}
    # Minimal sets of a matroid's basis family are equicardinal; guard anyway.
    size = min(sizes)
    minimal = [a for a in minimal if popcount(a) == size]
    mat = from_bases_allow_loops(n1.n, minimal)
    return mat, mat.total_rank
