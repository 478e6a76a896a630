# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the dense-matrix kernels.

Signatures and results match :mod:`birkhoff_lattice.kernels._pykernels`
exactly, including which witness is reported on failure.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def transitive_closure(rel):
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] out = np.ascontiguousarray(rel, dtype=np.uint8).copy()
    cdef unsigned char[:, ::1] r = out
    cdef Py_ssize_t n = r.shape[0]
    cdef Py_ssize_t i, j, k
    for k in range(n):
        for i in range(n):
            if r[i, k]:
                for j in range(n):
                    if r[k, j]:
                        r[i, j] = 1
    return out


def cover_matrix(leq):
    cdef const unsigned char[:, ::1] r = np.ascontiguousarray(leq, dtype=np.uint8)
    cdef Py_ssize_t n = r.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] out = np.zeros((n, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] c = out
    cdef Py_ssize_t i, j, k
    cdef bint between
    for i in range(n):
        for j in range(n):
            if i == j or not r[i, j]:
                continue
            between = False
            for k in range(n):
                if k != i and k != j and r[i, k] and r[k, j]:
                    between = True
                    break
            if not between:
                c[i, j] = 1
    return out


def lattice_tables(leq):
    """Return ``(join, meet, witness)``; ``witness`` is ``None`` or ``(i, j, kind)``."""
    cdef const unsigned char[:, ::1] r = np.ascontiguousarray(leq, dtype=np.uint8)
    cdef Py_ssize_t n = r.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=2] join_arr = np.full((n, n), -1, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=2] meet_arr = np.full((n, n), -1, dtype=np.int32)
    cdef int[:, ::1] jt = join_arr
    cdef int[:, ::1] mt = meet_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] up_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] down_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] up = up_arr
    cdef long long[::1] down = down_arr
    cdef Py_ssize_t i, j, k
    cdef long long count_up, count_down
    cdef int found_join, found_meet
    for i in range(n):
        for k in range(n):
            if r[i, k]:
                up[i] += 1
                down[k] += 1
    for i in range(n):
        for j in range(i, n):
            count_up = 0
            count_down = 0
            for k in range(n):
                if r[i, k] and r[j, k]:
                    count_up += 1
                if r[k, i] and r[k, j]:
                    count_down += 1
            found_join = -1
            found_meet = -1
            for k in range(n):
                if found_join < 0 and r[i, k] and r[j, k] and up[k] == count_up:
                    found_join = <int>k
                if found_meet < 0 and r[k, i] and r[k, j] and down[k] == count_down:
                    found_meet = <int>k
            if found_join < 0:
                return join_arr, meet_arr, (int(i), int(j), "join")
            if found_meet < 0:
                return join_arr, meet_arr, (int(i), int(j), "meet")
            jt[i, j] = found_join
            jt[j, i] = found_join
            mt[i, j] = found_meet
            mt[j, i] = found_meet
    return join_arr, meet_arr, None


def distributive_witness(join, meet):
    """First ``(a, b, c)`` in row-major order with a∧(b∨c) != (a∧b)∨(a∧c)."""
    cdef const int[:, ::1] jt = np.ascontiguousarray(join, dtype=np.int32)
    cdef const int[:, ::1] mt = np.ascontiguousarray(meet, dtype=np.int32)
    cdef Py_ssize_t n = jt.shape[0]
    cdef Py_ssize_t a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mt[a, jt[b, c]] != jt[mt[a, b], mt[a, c]]:
                    return (int(a), int(b), int(c))
    return None
