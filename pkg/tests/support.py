"""Shared helpers for the test suite: matroid corpus and oracles."""

from itertools import combinations, permutations

from tropint import matroid as mt


def _subsets_of_size(n, r):
    return [mt.mask_of(c) for c in combinations(range(n), r)]


def _exchange_ok(bases, n):
    blist = list(bases)
    bset = set(blist)
    for b1 in blist:
        for b2 in blist:
            if b1 == b2:
                continue
            only1 = b1 & ~b2
            x = only1 & (-only1)
            while x:
                ok = False
                only2 = b2 & ~b1
                y = only2 & (-only2)
                while y:
                    if (b1 & ~x) | y in bset:
                        ok = True
                        break
                    only2 &= ~y
                    y = only2 & (-only2)
                if not ok:
                    return False
                only1 &= ~x
                x = only1 & (-only1)
    return True


def _canonical_form(m):
    """Minimum rank table over all relabelings of the ground set."""
    best = None
    rt = m.rank_table
    for perm in permutations(range(m.n)):
        table = []
        for a in range(1 << m.n):
            b = 0
            for i in range(m.n):
                if (a >> i) & 1:
                    b |= 1 << perm[i]
            table.append(rt[b])
        table = tuple(table)
        if best is None or table < best:
            best = table
    return best


def loopfree_matroids_up_to(n_max):
    """All loopfree matroids on at most n_max elements, up to isomorphism."""
    out = []
    seen = set()
    for n in range(1, n_max + 1):
        full = (1 << n) - 1
        for r in range(1, n + 1):
            subsets = _subsets_of_size(n, r)
            k = len(subsets)
            for pick in range(1, 1 << k):
                bases = [subsets[i] for i in range(k) if (pick >> i) & 1]
                union = 0
                for b in bases:
                    union |= b
                if union != full:
                    continue  # some element in no basis: a loop
                if not _exchange_ok(bases, n):
                    continue
                m = mt.from_bases(n, bases, check=False)
                key = (n, _canonical_form(m))
                if key not in seen:
                    seen.add(key)
                    out.append(m)
    return out


def brute_rank(bases, mask):
    """Rank as the largest intersection with a basis."""
    return max(mt.popcount(b & mask) for b in bases)


# -- tree-space oracle ------------------------------------------------------

def tree_splits(n):
    """All splits I|J of n marks with both sides of size >= 2; I avoids n-1."""
    out = []
    for pick in range(1, 1 << (n - 1)):
        part = [i for i in range(n - 1) if (pick >> i) & 1]
        if 2 <= len(part) <= n - 2:
            out.append(tuple(part))
    return out


def splits_compatible(a, b, n):
    """Two splits are compatible when some pair of sides is nested/disjoint."""
    sa = set(a)
    sb = set(b)
    ca = set(range(n)) - sa
    cb = set(range(n)) - sb
    for x in (sa, ca):
        for y in (sb, cb):
            if not (x & y):
                return True
    return False


def tree_fan_cones(n):
    """Maximal compatible split collections: the cones of the tree fan."""
    splits = tree_splits(n)
    size = n - 3
    out = []

    def grow(start, acc):
        if len(acc) == size:
            out.append(tuple(acc))
            return
        for i in range(start, len(splits)):
            s = splits[i]
            if all(splits_compatible(s, t, n) for t in acc):
                grow(i + 1, acc + [s])

    grow(0, [])
    return out
