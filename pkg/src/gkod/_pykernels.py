"""Pure-Python implementations of the hot kernels.

Used when the compiled ``_ckernels`` extension is unavailable, or when
``GKOD_PURE_PYTHON`` is set. Both modules expose the same four functions and
must return identical values.
"""

from array import array
from itertools import accumulate, compress


def sieve_tables(limit):
    """Return ``(is_prime, prefix)`` for ``0..limit``.

    ``is_prime`` is a bytearray of 0/1 flags, ``prefix`` an ``array('I')``
    whose entry x counts the primes <= x.
    """
    table = bytearray([1]) * (limit + 1)
    table[0] = 0
    table[1] = 0
    q = 2
    while q * q <= limit:
        if table[q]:
            start = q * q
            table[start::q] = bytes(len(range(start, limit + 1, q)))
        q += 1
    prefix = array("I", accumulate(table))
    return table, prefix


def primes_from_table(table):
    return array("I", compress(range(len(table)), table))


def factorial_exponents(primes, n):
    """Legendre exponents of n! for every prime in ``primes`` that is <= n."""
    out = []
    for q in primes:
        if q > n:
            break
        e = 0
        m = n
        while m:
            m //= q
            e += m
        out.append(e)
    return out


def alt_degrees(primes, prefix, n):
    """Vertex degrees of GK(A_n) for the ascending vertex list ``primes``.

    Uses prefix prime counts; no edge is materialized. ``primes`` must be the
    vertex list of GK(A_n), so 2 is included only for n >= 4.
    """
    out = []
    for r in primes:
        if r == 2:
            out.append(prefix[n - 4] - 1 if n >= 6 else 0)
            continue
        m = n - r
        # odd primes <= n - r
        c = prefix[m] - 1 if m >= 2 else 0
        if r <= m:
            c -= 1
        if r + 4 <= n:
            c += 1
        out.append(c)
    return out


def sym_degrees(primes, prefix, n):
    """Vertex degrees of GK(S_n): distinct primes r, s adjacent iff r + s <= n."""
    out = []
    for r in primes:
        m = n - r
        c = prefix[m]
        if r <= m:
            c -= 1
        out.append(c)
    return out
