# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled monomial kernel; semantics identical to syzal._kernel_py."""

BACKEND = "c"


def mono_deg(tuple a):
    cdef long s = 0
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        s += <long> a[i]
    return s


def mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = (<long> a[i]) + (<long> b[i])
    return tuple(out)


def mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if (<long> a[i]) > (<long> b[i]):
            return False
    return True


def mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    cdef long x, y
    for i in range(n):
        x = <long> a[i]
        y = <long> b[i]
        if y > x:
            return None
        out[i] = x - y
    return tuple(out)


def mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    cdef long x, y
    for i in range(n):
        x = <long> a[i]
        y = <long> b[i]
        out[i] = x if x > y else y
    return tuple(out)


def mono_coprime(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if (<long> a[i]) != 0 and (<long> b[i]) != 0:
            return False
    return True


def cmp_grevlex(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long da = 0, db = 0, x, y
    for i in range(n):
        da += <long> a[i]
        db += <long> b[i]
    if da != db:
        return -1 if da < db else 1
    for i in range(n - 1, -1, -1):
        x = <long> a[i]
        y = <long> b[i]
        if x != y:
            return 1 if x < y else -1
    return 0


def cmp_grlex(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long da = 0, db = 0, x, y
    for i in range(n):
        da += <long> a[i]
        db += <long> b[i]
    if da != db:
        return -1 if da < db else 1
    for i in range(n):
        x = <long> a[i]
        y = <long> b[i]
        if x != y:
            return -1 if x < y else 1
    return 0
