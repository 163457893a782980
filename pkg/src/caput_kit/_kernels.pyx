# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled brute-force kernels (permutation sweeps and block counting)."""

cdef enum:
    MAXN = 20

cdef long long _encode(int *a, int n, int *seen, int *m):
    cdef int i, j, length
    cdef long long key = 0
    for i in range(n):
        seen[i] = 0
        m[i] = 0
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = a[j]
            length += 1
        m[length - 1] += 1
    for i in range(n - 1, -1, -1):
        key = key * (n + 1) + m[i]
    return key


cdef tuple _decode(long long key, int n):
    m = []
    cdef int i
    for i in range(n):
        m.append(<int>(key % (n + 1)))
        key //= (n + 1)
    while m and m[len(m) - 1] == 0:
        m.pop()
    return tuple(m)


def cycle_multiplicities(images):
    cdef int n = len(images)
    if n > MAXN:
        raise ValueError(f"n={n} exceeds kernel limit {MAXN}")
    cdef int a[MAXN]
    cdef int seen[MAXN]
    cdef int m[MAXN]
    cdef int i
    for i in range(n):
        a[i] = images[i]
    return _decode(_encode(a, n, seen, m), n)


def cycle_type_histogram(int n, block_of=None):
    if n < 0 or n > 12:
        raise ValueError(f"n={n} outside kernel range 0..12")
    cdef int a[MAXN]
    cdef int c[MAXN]
    cdef int blk[MAXN]
    cdef int seen[MAXN]
    cdef int m[MAXN]
    cdef int i, t, ok
    cdef bint filt = block_of is not None
    counts = {}
    for i in range(n):
        a[i] = i
        c[i] = 0
        blk[i] = block_of[i] if filt else 0
    # Heap's algorithm, iterative
    key = _encode(a, n, seen, m)
    counts[key] = 1
    i = 1
    while i < n:
        if c[i] < i:
            if i % 2 == 0:
                t = a[0]; a[0] = a[i]; a[i] = t
            else:
                t = a[c[i]]; a[c[i]] = a[i]; a[i] = t
            ok = 1
            if filt:
                for t in range(n):
                    if blk[a[t]] != blk[t]:
                        ok = 0
                        break
            if ok:
                key = _encode(a, n, seen, m)
                counts[key] = counts.get(key, 0) + 1
            c[i] += 1
            i = 1
        else:
            c[i] = 0
            i += 1
    return {_decode(k, n): v for k, v in counts.items()}


cdef inline unsigned int _image_mask(unsigned int s, int *a, int n):
    cdef unsigned int out = 0
    cdef int x
    for x in range(n):
        if s & (1u << x):
            out |= 1u << a[x]
    return out


cdef inline int _popcount(unsigned int s):
    cdef int k = 0
    while s:
        s &= s - 1
        k += 1
    return k


cdef long long _count(unsigned int remaining, int *a, int n, int *shape, int p, int i):
    if i == p:
        return 1
    cdef long long total = 0
    cdef unsigned int sub = remaining
    cdef int want = shape[i]
    # walk every submask of `remaining`, including the empty one
    while True:
        if _popcount(sub) == want and _image_mask(sub, a, n) == sub:
            total += _count(remaining & ~sub, a, n, shape, p, i + 1)
        if sub == 0:
            break
        sub = (sub - 1) & remaining
    return total


def count_invariant_blockings(images, shape):
    cdef int n = len(images)
    cdef int p = len(shape)
    if n > MAXN:
        raise ValueError(f"n={n} exceeds kernel limit {MAXN}")
    cdef int a[MAXN]
    cdef int sh[MAXN]
    cdef int i
    for i in range(n):
        a[i] = images[i]
    for i in range(p):
        sh[i] = shape[i]
    return _count((1u << n) - 1u, a, n, sh, p, 0)
