# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see ``_pykernels`` for the contract."""

from array import array


def sieve_tables(Py_ssize_t limit):
    cdef bytearray table = bytearray([1]) * (limit + 1)
    cdef unsigned char[::1] t = table
    cdef Py_ssize_t q, j
    t[0] = 0
    t[1] = 0
    q = 2
    while q * q <= limit:
        if t[q]:
            j = q * q
            while j <= limit:
                t[j] = 0
                j += q
        q += 1
    prefix = array("I", bytes(4 * (limit + 1)))
    cdef unsigned int[::1] pre = prefix
    cdef unsigned int running = 0
    for j in range(limit + 1):
        running += t[j]
        pre[j] = running
    return table, prefix


def primes_from_table(table):
    cdef const unsigned char[::1] t = table
    cdef Py_ssize_t n = t.shape[0], i, k = 0
    for i in range(n):
        k += t[i]
    out = array("I", bytes(4 * k))
    cdef unsigned int[::1] o = out
    k = 0
    for i in range(n):
        if t[i]:
            o[k] = <unsigned int>i
            k += 1
    return out


def factorial_exponents(primes, long long n):
    cdef const unsigned int[::1] ps = primes
    cdef Py_ssize_t i, k = ps.shape[0]
    cdef long long q, m, e
    out = []
    for i in range(k):
        q = ps[i]
        if q > n:
            break
        e = 0
        m = n
        while m:
            m //= q
            e += m
        out.append(e)
    return out


def alt_degrees(primes, prefix, long long n):
    cdef const unsigned int[::1] ps = primes
    cdef const unsigned int[::1] pre = prefix
    cdef Py_ssize_t i, k = ps.shape[0]
    cdef long long r, m, c
    out = array("q", bytes(8 * k))
    cdef long long[::1] o = out
    for i in range(k):
        r = ps[i]
        if r == 2:
            o[i] = pre[n - 4] - 1 if n >= 6 else 0
            continue
        m = n - r
        c = pre[m] - 1 if m >= 2 else 0
        if r <= m:
            c -= 1
        if r + 4 <= n:
            c += 1
        o[i] = c
    return out.tolist()


def sym_degrees(primes, prefix, long long n):
    cdef const unsigned int[::1] ps = primes
    cdef const unsigned int[::1] pre = prefix
    cdef Py_ssize_t i, k = ps.shape[0]
    cdef long long r, m, c
    out = array("q", bytes(8 * k))
    cdef long long[::1] o = out
    for i in range(k):
        r = ps[i]
        m = n - r
        c = pre[m]
        if r <= m:
            c -= 1
        o[i] = c
    return out.tolist()
