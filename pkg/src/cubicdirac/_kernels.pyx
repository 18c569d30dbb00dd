# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels.

Same contract as ``_kernels_py``.  Each routine first tries a C ``long long``
path with explicit overflow checks; on overflow (or inputs that do not fit)
it reruns on Python integers, so results are always exact.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static inline int cd_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int cd_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int cd_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint cd_mul(long long a, long long b, long long *r) nogil
    bint cd_sub(long long a, long long b, long long *r) nogil
    bint cd_add(long long a, long long b, long long *r) nogil


cdef long long* _to_c(list rows, Py_ssize_t nrows, Py_ssize_t ncols) except? NULL:
    cdef long long* buf = <long long*>malloc(max(nrows * ncols, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef list row
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                buf[i * ncols + j] = row[j]
    except OverflowError:
        free(buf)
        return NULL
    return buf


cdef list _from_c(long long* buf, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t i, j
    cdef list out = []
    cdef list row
    for i in range(nrows):
        row = [0] * ncols
        for j in range(ncols):
            row[j] = buf[i * ncols + j]
        out.append(row)
    return out


def matmul(list a, list b, Py_ssize_t ncols):
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t k = len(b)
    cdef long long* ca
    cdef long long* cb
    cdef long long* cc
    cdef Py_ssize_t i, j, t
    cdef long long x, prod, acc
    cdef bint ovf = False
    if m == 0 or ncols == 0:
        return [[0] * ncols for _ in range(m)]
    ca = _to_c(a, m, k)
    if ca != NULL:
        cb = _to_c(b, k, ncols)
        if cb == NULL:
            free(ca)
        else:
            cc = <long long*>malloc(m * ncols * sizeof(long long))
            if cc == NULL:
                free(ca)
                free(cb)
                raise MemoryError()
            with nogil:
                for i in range(m * ncols):
                    cc[i] = 0
                for i in range(m):
                    if ovf:
                        break
                    for t in range(k):
                        x = ca[i * k + t]
                        if x == 0:
                            continue
                        for j in range(ncols):
                            if cb[t * ncols + j] == 0:
                                continue
                            if cd_mul(x, cb[t * ncols + j], &prod) or \
                                    cd_add(cc[i * ncols + j], prod, &acc):
                                ovf = True
                                break
                            cc[i * ncols + j] = acc
                        if ovf:
                            break
            free(ca)
            free(cb)
            if not ovf:
                out = _from_c(cc, m, ncols)
                free(cc)
                return out
            free(cc)
    return _matmul_obj(a, b, ncols)


cdef list _matmul_obj(list a, list b, Py_ssize_t ncols):
    cdef list bnz = []
    cdef list row, acc, nz
    cdef Py_ssize_t kk, j
    cdef object x, t
    for row in b:
        bnz.append([(j, t) for j, t in enumerate(row) if t])
    cdef list out = []
    for row in a:
        acc = [0] * ncols
        for kk in range(len(row)):
            x = row[kk]
            if x:
                nz = bnz[kk]
                for j, t in nz:
                    acc[j] += x * t
        out.append(acc)
    return out


def rref_den(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef long long* m
    if nrows == 0 or ncols == 0:
        return [list(src) for src in rows], 1, []
    m = _to_c(rows, nrows, ncols)
    if m != NULL:
        try:
            res = _rref_c(m, nrows, ncols)
        finally:
            free(m)
        if res is not None:
            return res
    return _rref_obj(rows, ncols)


cdef object _rref_c(long long* m, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef long long den = 1
    cdef long long p, a, u, v, w
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef bint ovf = False
    cdef list pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                a = m[r * ncols + j]
                m[r * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = a
        p = m[r * ncols + c]
        with nogil:
            for i in range(nrows):
                if i == r:
                    continue
                a = m[i * ncols + c]
                if a != 0:
                    for j in range(ncols):
                        if cd_mul(p, m[i * ncols + j], &u) or \
                                cd_mul(a, m[r * ncols + j], &v) or cd_sub(u, v, &w):
                            ovf = True
                            break
                        m[i * ncols + j] = w // den
                elif p != den:
                    for j in range(ncols):
                        if cd_mul(p, m[i * ncols + j], &u):
                            ovf = True
                            break
                        m[i * ncols + j] = u // den
                if ovf:
                    break
        if ovf:
            return None
        den = p
        pivots.append(c)
        r += 1
    out = _from_c(m, nrows, ncols)
    if den < 0:
        out = [[-x for x in row] for row in out]
        den = -den
    return out, den, pivots


cdef tuple _rref_obj(list rows, Py_ssize_t ncols):
    cdef list m = [list(src) for src in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef object den = 1
    cdef object p, a
    cdef list pivots = []
    cdef list prow, row
    cdef Py_ssize_t r = 0, c, i, piv
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            a = row[c]
            if a:
                m[i] = [(p * x - a * y) // den for x, y in zip(row, prow)]
            elif p != den and any(row):
                m[i] = [p * x // den for x in row]
        den = p
        pivots.append(c)
        r += 1
    if den < 0:
        m = [[-x for x in row] for row in m]
        den = -den
    return m, den, pivots
