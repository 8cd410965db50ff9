# distutils: language = c++
"""Compiled sparse convolution kernel (int64 fast path).

Same contract as ``laurentmed._pykernels.convolve``.  Returns ``None`` when
an input coefficient, a packed key or an accumulated coefficient leaves the
int64 range; the caller then reruns the exact pure-Python kernel.
"""
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libcpp.algorithm cimport sort

cdef extern from *:
    """
    static inline int lm_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int lm_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int lm_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint lm_mul_ovf(long long a, long long b, long long *r) nogil
    bint lm_add_ovf(long long a, long long b, long long *r) nogil
    bint lm_sub_ovf(long long a, long long b, long long *r) nogil

ctypedef pair[long long, long long] term_t

cdef bint _desc(const term_t &x, const term_t &y) noexcept nogil:
    return x.first > y.first

cdef long long KEY_LIMIT = 1LL << 62


cdef bint _bounds(Py_ssize_t n, vector[long long] &e, Py_ssize_t count,
                  vector[long long] &lo, vector[long long] &hi) noexcept nogil:
    cdef Py_ssize_t t, i
    cdef long long v
    lo.assign(n, 0)
    hi.assign(n, 0)
    for i in range(n):
        lo[i] = e[i]
        hi[i] = e[i]
    for t in range(1, count):
        for i in range(n):
            v = e[t * n + i]
            if v < lo[i]:
                lo[i] = v
            elif v > hi[i]:
                hi[i] = v
    return True


def convolve(Py_ssize_t n, exps_a, coefs_a, exps_b, coefs_b):
    cdef Py_ssize_t count_a = len(coefs_a), count_b = len(coefs_b)
    if count_a == 0 or count_b == 0:
        return [], []
    if n == 0:
        return None
    cdef vector[long long] ea, eb, ca, cb
    try:
        ea = exps_a
        eb = exps_b
        ca = coefs_a
        cb = coefs_b
    except OverflowError:
        return None

    cdef vector[long long] lo_a, hi_a, lo_b, hi_b, spans, strides
    _bounds(n, ea, count_a, lo_a, hi_a)
    _bounds(n, eb, count_b, lo_b, hi_b)
    spans.assign(n, 0)
    strides.assign(n, 0)
    cdef Py_ssize_t i, ta, tb
    cdef long long da, db, span, total = 1
    for i in range(n - 1, -1, -1):
        if lm_sub_ovf(hi_a[i], lo_a[i], &da) or lm_sub_ovf(hi_b[i], lo_b[i], &db):
            return None
        if lm_add_ovf(da, db, &span) or lm_add_ovf(span, 1, &span):
            return None
        spans[i] = span
        strides[i] = total
        if lm_mul_ovf(total, span, &total) or total >= KEY_LIMIT:
            return None

    cdef vector[long long] keys_a, keys_b
    keys_a.resize(count_a)
    keys_b.resize(count_b)
    cdef long long k
    for ta in range(count_a):
        k = 0
        for i in range(n):
            k += (ea[ta * n + i] - lo_a[i]) * strides[i]
        keys_a[ta] = k
    for tb in range(count_b):
        k = 0
        for i in range(n):
            k += (eb[tb * n + i] - lo_b[i]) * strides[i]
        keys_b[tb] = k

    cdef unordered_map[long long, long long] acc
    cdef long long prod, cur
    cdef bint overflow = False
    acc.reserve(min(<long long>count_a * count_b, total))
    with nogil:
        for tb in range(count_b):
            for ta in range(count_a):
                if lm_mul_ovf(ca[ta], cb[tb], &prod):
                    overflow = True
                    break
                k = keys_a[ta] + keys_b[tb]
                cur = acc[k]
                if lm_add_ovf(cur, prod, &cur):
                    overflow = True
                    break
                acc[k] = cur
            if overflow:
                break
    if overflow:
        return None

    cdef vector[term_t] terms
    cdef term_t item
    terms.reserve(acc.size())
    for item in acc:
        if item.second != 0:
            terms.push_back(item)
    sort(terms.begin(), terms.end(), _desc)

    cdef list out_exps = []
    cdef list out_coefs = []
    cdef vector[long long] lo
    lo.resize(n)
    for i in range(n):
        lo[i] = lo_a[i] + lo_b[i]
    for item in terms:
        for i in range(n):
            out_exps.append((item.first // strides[i]) % spans[i] + lo[i])
        out_coefs.append(item.second)
    return out_exps, out_coefs
