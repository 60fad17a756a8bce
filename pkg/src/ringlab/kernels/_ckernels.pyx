# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled loops over int16 Cayley tables.

Signatures and results match ``ringlab.kernels._fallback``; these versions
take the tables directly and exit each per-element scan early.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef short idx_t


def nil_exponents(const idx_t[:, ::1] mul, int zero):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t a
    cdef int tort, hare, power, k
    out_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] out = out_arr
    for a in range(n):
        if a == zero:
            out[a] = 1
            continue
        tort = <int>a
        hare = mul[a, a]
        while hare != zero and tort != hare:
            tort = mul[tort, a]
            hare = mul[mul[hare, a], a]
        if hare != zero:
            continue
        power = <int>a
        k = 1
        while power != zero:
            power = mul[power, a]
            k += 1
        out[a] = k
    return out_arr


def unit_mask(const idx_t[:, ::1] mul, int one):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t a, b
    out_arr = np.zeros(n, dtype=bool)
    cdef cnp.npy_bool[::1] out = out_arr
    for a in range(n):
        for b in range(n):
            if mul[a, b] == one and mul[b, a] == one:
                out[a] = 1
                break
    return out_arr


def quasi_regular_mask(const idx_t[:, ::1] add, const idx_t[:, ::1] mul, const idx_t[::1] neg,
                       int one, const cnp.npy_bool[::1] units, int side):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t x, r
    cdef int prod
    cdef bint ok
    out_arr = np.zeros(n, dtype=bool)
    cdef cnp.npy_bool[::1] out = out_arr
    for x in range(n):
        ok = True
        for r in range(n):
            prod = mul[r, x] if side == 0 else mul[x, r]
            if not units[add[one, neg[prod]]]:
                ok = False
                break
        out[x] = ok
    return out_arr


def axiom_violation(const idx_t[:, ::1] add, const idx_t[:, ::1] mul, const idx_t[::1] neg,
                    int zero, int one):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t a, b, c
    for a in range(n):
        if add[a, zero] != a:
            return (0, a, -1, -1)
    for a in range(n):
        if add[a, neg[a]] != zero:
            return (1, a, -1, -1)
    for a in range(n):
        for b in range(n):
            if add[a, b] != add[b, a]:
                return (2, a, b, -1)
    for a in range(n):
        if mul[a, one] != a or mul[one, a] != a:
            return (3, a, -1, -1)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if add[add[a, b], c] != add[a, add[b, c]]:
                    return (4, a, b, c)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                    return (5, a, b, c)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
                    return (6, a, b, c)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[add[a, b], c] != add[mul[a, c], mul[b, c]]:
                    return (7, a, b, c)
    return None


def nilclean_search(const idx_t[:, ::1] add, const idx_t[:, ::1] mul, const idx_t[::1] neg,
                    targets, idems, const cnp.npy_bool[::1] nil, signs, bint commuting):
    cdef const long long[::1] t = np.ascontiguousarray(targets, dtype=np.int64)
    cdef const long long[::1] es = np.ascontiguousarray(idems, dtype=np.int64)
    cdef const signed char[::1] sg = np.ascontiguousarray(signs, dtype=np.int8)
    cdef Py_ssize_t m = t.shape[0]
    cdef Py_ssize_t i, j, s
    cdef int a, e, q
    out_sign_arr = np.zeros(m, dtype=np.int8)
    out_e_arr = np.full(m, -1, dtype=np.int64)
    out_q_arr = np.full(m, -1, dtype=np.int64)
    cdef signed char[::1] out_sign = out_sign_arr
    cdef long long[::1] out_e = out_e_arr
    cdef long long[::1] out_q = out_q_arr
    cdef bint found
    for i in range(m):
        a = <int>t[i]
        found = False
        for s in range(sg.shape[0]):
            for j in range(es.shape[0]):
                e = <int>es[j]
                if sg[s] > 0:
                    q = add[a, neg[e]]
                else:
                    q = add[a, e]
                if not nil[q]:
                    continue
                if commuting and mul[e, q] != mul[q, e]:
                    continue
                out_sign[i] = sg[s]
                out_e[i] = e
                out_q[i] = q
                found = True
                break
            if found:
                break
    return out_sign_arr, out_e_arr, out_q_arr


def clean_search(const idx_t[:, ::1] add, const idx_t[:, ::1] mul, const idx_t[::1] neg,
                 targets, units, const cnp.npy_bool[::1] idem, signs):
    cdef const long long[::1] t = np.ascontiguousarray(targets, dtype=np.int64)
    cdef const long long[::1] us = np.ascontiguousarray(units, dtype=np.int64)
    cdef const signed char[::1] sg = np.ascontiguousarray(signs, dtype=np.int8)
    cdef Py_ssize_t m = t.shape[0]
    cdef Py_ssize_t i, j, s
    cdef int a, u, e
    out_sign_arr = np.zeros(m, dtype=np.int8)
    out_u_arr = np.full(m, -1, dtype=np.int64)
    out_e_arr = np.full(m, -1, dtype=np.int64)
    cdef signed char[::1] out_sign = out_sign_arr
    cdef long long[::1] out_u = out_u_arr
    cdef long long[::1] out_e = out_e_arr
    cdef bint found
    for i in range(m):
        a = <int>t[i]
        found = False
        for j in range(us.shape[0]):
            u = <int>us[j]
            for s in range(sg.shape[0]):
                if sg[s] > 0:
                    e = add[a, neg[u]]
                else:
                    e = add[u, neg[a]]
                if idem[e] and mul[u, e] == mul[e, u]:
                    out_sign[i] = sg[s]
                    out_u[i] = u
                    out_e[i] = e
                    found = True
                    break
            if found:
                break
    return out_sign_arr, out_u_arr, out_e_arr
