"""Integer partitions and Young diagram combinatorics.

Partitions are plain tuples of positive integers in weakly decreasing
order, so they are hashable and can be used as cache keys.  Cells are
``(row, col)`` pairs with 0-based indices.
"""

from functools import lru_cache

Partition = tuple


def partition(parts=()):
    """Return ``parts`` as a validated partition tuple (zeros are dropped)."""
    lam = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in lam):
        raise ValueError(f"negative part in {parts!r}")
    if any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts!r}")
    return lam


def size(lam):
    return sum(lam)


@lru_cache(maxsize=None)
def conjugate(lam):
    """Column lengths of the Young diagram of ``lam``."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def cells(lam):
    """All cells of ``lam`` in row-major order."""
    return [(i, j) for i, p in enumerate(lam) for j in range(p)]


def _check_cell(lam, cell):
    i, j = cell
    if i < 0 or j < 0 or i >= len(lam) or j >= lam[i]:
        raise ValueError(f"cell {cell} is not in {lam}")


def arm(lam, cell):
    """Number of cells strictly to the right of ``cell``."""
    _check_cell(lam, cell)
    i, j = cell
    return lam[i] - (j + 1)


def leg(lam, cell):
    """Number of cells strictly below ``cell``."""
    _check_cell(lam, cell)
    i, j = cell
    return conjugate(lam)[j] - (i + 1)


def arm_leg_pairs(lam):
    """List of ``(arm, leg)`` over the cells of ``lam``."""
    lt = conjugate(lam)
    return [(lam[i] - j - 1, lt[j] - i - 1) for i, j in cells(lam)]


def relative_arm(lam, cell):
    """Arm of ``cell`` measured against ``lam``; the cell need not lie in it.

    This is the quantity ``lam_i - j - 1`` that enters Nekrasov-type
    pairings of two different partitions, and it can be negative.
    """
    i, j = cell
    row = lam[i] if i < len(lam) else 0
    return row - j - 1


def relative_leg(lam, cell):
    i, j = cell
    lt = conjugate(lam)
    col = lt[j] if j < len(lt) else 0
    return col - i - 1


def norm_sq(lam):
    """Sum of squared parts."""
    return sum(p * p for p in lam)


def kappa(lam):
    return norm_sq(lam) - norm_sq(conjugate(lam))


def contains(mu, lam):
    """True iff the diagram of ``mu`` sits inside the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


@lru_cache(maxsize=None)
def enumerate_partitions(n):
    """All partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(remaining, largest), 0, -1):
            prefix.append(k)
            rec(remaining - k, k, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_up_to(n):
    """All partitions of size at most ``n``, grouped by increasing size."""
    return [lam for k in range(n + 1) for lam in enumerate_partitions(k)]


def tuples(r, n):
    """All ``r``-tuples of partitions with total size ``n``."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if r == 1:
        return [(lam,) for lam in enumerate_partitions(n)]
    out = []
    for k in range(n, -1, -1):
        for head in enumerate_partitions(k):
            for rest in tuples(r - 1, n - k):
                out.append((head,) + rest)
    return out


def tuple_size(lams):
    return sum(size(lam) for lam in lams)


@lru_cache(maxsize=None)
def sub_partitions(lam):
    """All partitions contained in ``lam`` (including the empty one and ``lam``)."""
    out = []

    def rec(i, bound, prefix):
        if i == len(lam) or bound == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(bound, lam[i]), -1, -1):
            if k == 0:
                out.append(tuple(prefix))
            else:
                prefix.append(k)
                rec(i + 1, k, prefix)
                prefix.pop()

    rec(0, lam[0] if lam else 0, [])
    return tuple(sorted(set(out), key=lambda m: (sum(m), m)))


def transpose_cell(cell):
    return (cell[1], cell[0])


def z_factor(mu):
    """The centralizer order z_mu = prod_k k^{m_k} m_k!."""
    from math import factorial

    out = 1
    for k in set(mu):
        m = mu.count(k)
        out *= k**m * factorial(m)
    return out
