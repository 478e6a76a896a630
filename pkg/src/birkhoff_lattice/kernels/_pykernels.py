"""Numpy implementations of the dense-matrix kernels.

These are the fallback when the compiled extension is missing, and the
reference the compiled kernels are tested against.
"""
import numpy as np


def transitive_closure(rel):
    r = np.array(rel, dtype=bool)
    for k in range(r.shape[0]):
        r |= r[:, k : k + 1] & r[k : k + 1, :]
    return r.astype(np.uint8)


def cover_matrix(leq):
    lt = np.array(leq, dtype=bool)
    np.fill_diagonal(lt, False)
    li = lt.astype(np.int64)
    between = (li @ li) > 0
    return (lt & ~between).astype(np.uint8)


def _first_failure(fail):
    n = fail.shape[0]
    upper = np.triu(np.ones((n, n), dtype=bool))
    idx = np.flatnonzero(fail & upper)
    return None if idx.size == 0 else divmod(int(idx[0]), n)


def lattice_tables(leq):
    r = np.asarray(leq, dtype=bool)
    n = r.shape[0]
    ri = r.astype(np.int64)
    up = ri.sum(axis=1)
    down = ri.sum(axis=0)
    join = np.full((n, n), -1, dtype=np.int32)
    meet = np.full((n, n), -1, dtype=np.int32)
    join_fail = np.zeros((n, n), dtype=bool)
    meet_fail = np.zeros((n, n), dtype=bool)
    for i in range(n):
        # ubs[j, k]: k is above both i and j
        ubs = r[i][None, :] & r
        least = ubs & (up[None, :] == ubs.sum(axis=1)[:, None])
        join_fail[i] = ~least.any(axis=1)
        join[i] = np.where(join_fail[i], -1, least.argmax(axis=1))
        lbs = r[:, i][None, :] & r.T
        greatest = lbs & (down[None, :] == lbs.sum(axis=1)[:, None])
        meet_fail[i] = ~greatest.any(axis=1)
        meet[i] = np.where(meet_fail[i], -1, greatest.argmax(axis=1))
    jf = _first_failure(join_fail)
    mf = _first_failure(meet_fail)
    if jf is not None or mf is not None:
        candidates = [(p, kind) for p, kind in ((jf, "join"), (mf, "meet")) if p is not None]
        # join wins ties, matching the compiled loop
        (i, j), kind = min(candidates, key=lambda t: (t[0], t[1] != "join"))
        return join, meet, (i, j, kind)
    return join, meet, None


def distributive_witness(join, meet):
    jt = np.asarray(join)
    mt = np.asarray(meet)
    n = jt.shape[0]
    for a in range(n):
        lhs = mt[a][jt]
        rhs = jt[mt[a][:, None], mt[a][None, :]]
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            b, c = divmod(int(bad[0]), n)
            return (a, b, c)
    return None
