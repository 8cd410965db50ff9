"""Pure-Python sparse convolution kernel.

Reference implementation of the kernel contract; ``_ckernels.pyx`` must
produce identical output.  Exponent vectors travel as flat lists of length
``terms * n`` and coefficients as Python ints.  Output terms are sorted by
exponent in descending lexicographic order with zero coefficients dropped.
"""


def _bounds(n, exps, count):
    lo = list(exps[:n])
    hi = list(exps[:n])
    for t in range(1, count):
        base = t * n
        for i in range(n):
            v = exps[base + i]
            if v < lo[i]:
                lo[i] = v
            elif v > hi[i]:
                hi[i] = v
    return lo, hi


def packing(n, exps_a, count_a, exps_b, count_b):
    """Offsets and strides of the mixed-radix packing used by ``convolve``.

    The first coordinate gets the largest stride, so packed keys compare
    exactly like the exponent tuples do.
    """
    lo_a, hi_a = _bounds(n, exps_a, count_a)
    lo_b, hi_b = _bounds(n, exps_b, count_b)
    spans = [hi_a[i] - lo_a[i] + hi_b[i] - lo_b[i] + 1 for i in range(n)]
    strides = [0] * n
    acc = 1
    for i in range(n - 1, -1, -1):
        strides[i] = acc
        acc *= spans[i]
    return lo_a, lo_b, spans, strides, acc


def _pack(n, exps, count, lo, strides):
    keys = []
    for t in range(count):
        base = t * n
        k = 0
        for i in range(n):
            k += (exps[base + i] - lo[i]) * strides[i]
        keys.append(k)
    return keys


def convolve(n, exps_a, coefs_a, exps_b, coefs_b):
    """Product of two sparse integer-coefficient Laurent polynomials."""
    count_a, count_b = len(coefs_a), len(coefs_b)
    if not count_a or not count_b:
        return [], []
    if n == 0:
        c = coefs_a[0] * coefs_b[0]
        return ([], [c]) if c else ([], [])
    lo_a, lo_b, spans, strides, _ = packing(n, exps_a, count_a, exps_b, count_b)
    keys_a = _pack(n, exps_a, count_a, lo_a, strides)
    keys_b = _pack(n, exps_b, count_b, lo_b, strides)
    acc = {}
    get = acc.get
    pairs_a = list(zip(keys_a, coefs_a))
    for kb, cb in zip(keys_b, coefs_b):
        for ka, ca in pairs_a:
            k = ka + kb
            acc[k] = get(k, 0) + ca * cb
    out_exps = []
    out_coefs = []
    lo = [lo_a[i] + lo_b[i] for i in range(n)]
    for k in sorted(acc, reverse=True):
        c = acc[k]
        if not c:
            continue
        for i in range(n):
            out_exps.append((k // strides[i]) % spans[i] + lo[i])
        out_coefs.append(c)
    return out_exps, out_coefs
