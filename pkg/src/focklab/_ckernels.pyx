# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fermionic kernels; see ``_kernels_py`` for the reference semantics."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef enum:
    MAXB = 512


cdef tuple _pack(long *buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return tuple([buf[j] for j in range(n)])


def black_positions2(tuple lam, long h, long n):
    cdef Py_ssize_t L = len(lam)
    cdef long i, part
    out = []
    for i in range(1, n + 1):
        part = <long>lam[i - 1] if i <= L else 0
        out.append(2 * (h - i + part) + 1)
    return out


def psi(tuple lam, long h, long m2):
    cdef Py_ssize_t L = len(lam), i, count = 0
    cdef long b0 = (m2 - 1) // 2 - h
    cdef long beta
    cdef long buf[MAXB]
    if b0 <= -(L + 1):
        return None
    if L + 1 > MAXB:
        raise OverflowError("partition too long for compiled kernel")
    for i in range(L):
        beta = <long>lam[i] - i - 1
        if beta == b0:
            return None
        if beta < b0:
            break
        count += 1
    for i in range(count):
        buf[i] = <long>lam[i] - 1
    buf[count] = b0 + count
    for i in range(count, L):
        buf[i + 1] = <long>lam[i]
    return (-1 if count & 1 else 1), _pack(buf, L + 1)


def psi_star(tuple lam, long h, long m2):
    cdef Py_ssize_t L = len(lam), i, j
    cdef long b0 = (m2 - 1) // 2 - h
    cdef long beta
    cdef long *buf
    if b0 <= -(L + 1):
        j = -b0
        buf = <long *>malloc(j * sizeof(long))
        try:
            for i in range(L):
                buf[i] = <long>lam[i] + 1
            for i in range(L, j - 1):
                buf[i] = 1
            return (-1 if (j - 1) & 1 else 1), _pack(buf, j - 1)
        finally:
            free(buf)
    for i in range(L):
        beta = <long>lam[i] - i - 1
        if beta == b0:
            buf = <long *>malloc((L + 1) * sizeof(long))
            try:
                for j in range(i):
                    buf[j] = <long>lam[j] + 1
                for j in range(i + 1, L):
                    buf[j - 1] = <long>lam[j]
                return (-1 if i & 1 else 1), _pack(buf, L - 1)
            finally:
                free(buf)
        if beta < b0:
            return None
    return None


def psi_psi_star(tuple lam, long h, long m2, long n2):
    r = psi_star(lam, h, n2)
    if r is None:
        return None
    s1, mid = r
    r = psi(mid, h - 1, m2)
    if r is None:
        return None
    return s1 * r[0], r[1]


def bead_moves(tuple lam, long k):
    cdef Py_ssize_t L = len(lam), N, i, j, above, pos
    cdef long K, t, jumped
    cdef long *betas
    cdef long *nb
    cdef bint hit
    out = []
    if k == 0:
        return out
    K = k if k > 0 else -k
    N = L if k > 0 else L + K
    betas = <long *>malloc((N + 1) * sizeof(long))
    nb = <long *>malloc((N + 1) * sizeof(long))
    try:
        for i in range(N):
            betas[i] = (<long>lam[i] if i < L else 0) - i - 1
        for i in range(N):
            t = betas[i] - k
            if k > 0 and t < -L:
                continue
            hit = False
            above = 0
            for j in range(N):
                if betas[j] == t:
                    hit = True
                    break
                if betas[j] > t:
                    above += 1
            if hit:
                continue
            if k > 0:
                jumped = above - (i + 1)
            else:
                jumped = i - above
            # rebuild sorted beta list with betas[i] replaced by t
            pos = 0
            for j in range(N):
                if j == i:
                    continue
                if pos == (above - 1 if k > 0 else above):
                    nb[pos] = t
                    pos += 1
                nb[pos] = betas[j]
                pos += 1
            if pos < N:
                nb[pos] = t
            for j in range(N):
                nb[j] = nb[j] + j + 1
            out.append(((-1 if jumped & 1 else 1), _pack(nb, N)))
    finally:
        free(betas)
        free(nb)
    return out
