# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels for the hot inner loops.

Same contracts as _kernels_py.  Keys are packed into a single 64-bit word
(12 bits per coordinate, rank <= 5); coefficients use checked 64-bit
arithmetic.  Any value outside the safe ranges raises OverflowError and
the dispatcher reruns the call on the exact pure backend.
"""

from libc.stdint cimport int64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

cdef int MAX_RANK = 5
cdef int64_t FIELD = 4096
cdef int64_t HALF = 2048
cdef int64_t COEFF_LIMIT = (<int64_t>1) << 31
cdef int64_t ACC_LIMIT = (<int64_t>1) << 62


cdef inline int64_t _pack(int64_t* x, int rank) except? -1:
    cdef int64_t key = 0
    cdef int i
    for i in range(rank):
        if x[i] >= HALF or x[i] < -HALF:
            raise OverflowError("coordinate outside packed range")
        key |= (x[i] + HALF) << (12 * i)
    return key


cdef inline void _unpack(int64_t key, int rank, int64_t* out) noexcept:
    cdef int i
    for i in range(rank):
        out[i] = ((key >> (12 * i)) & (FIELD - 1)) - HALF


cdef int _load_support(object coeffs, int rank, vector[int64_t]& keys,
                       vector[int64_t]& vals) except -1:
    cdef int64_t buf[8]
    cdef int i
    cdef int64_t c
    for k, v in coeffs.items():
        if len(k) != rank:
            raise OverflowError("rank changed mid-support")
        c = v
        if c >= COEFF_LIMIT or c <= -COEFF_LIMIT:
            raise OverflowError("coefficient outside checked range")
        for i in range(rank):
            buf[i] = k[i]
            if buf[i] >= HALF or buf[i] < -HALF:
                raise OverflowError("coordinate outside packed range")
        keys.push_back(_pack(buf, rank))
        vals.push_back(c)
    return 0


cdef object _emit(unordered_map[int64_t, int64_t]& acc, int rank):
    cdef int64_t buf[8]
    cdef int i
    out = {}
    for it in acc:
        if it.second != 0:
            _unpack(it.first, rank, buf)
            out[tuple([buf[i] for i in range(rank)])] = it.second
    return out


cdef inline int _rank_of(object coeffs) except -1:
    for k in coeffs:
        return len(k)
    return -1


def convolve(dict a, dict b):
    """Sparse Laurent product with packed keys and checked arithmetic."""
    if not a or not b:
        return {}
    cdef int rank = _rank_of(a)
    if rank > MAX_RANK or rank < 0:
        raise OverflowError("rank too large for packed keys")
    cdef vector[int64_t] ka, ca, kb, cb
    _load_support(a, rank, ka, ca)
    _load_support(b, rank, kb, cb)
    # packed addition is carry-free because each field sum needs one extra
    # bit at most; verify against half the field range
    cdef int64_t buf[8]
    cdef size_t i, j
    cdef int t
    cdef int64_t maxa = 0, maxb = 0, v
    for i in range(ka.size()):
        _unpack(ka[i], rank, buf)
        for t in range(rank):
            v = buf[t] if buf[t] >= 0 else -buf[t]
            if v > maxa:
                maxa = v
    for i in range(kb.size()):
        _unpack(kb[i], rank, buf)
        for t in range(rank):
            v = buf[t] if buf[t] >= 0 else -buf[t]
            if v > maxb:
                maxb = v
    if maxa + maxb >= HALF:
        raise OverflowError("key sum outside packed range")
    cdef int64_t offset = 0
    for t in range(rank):
        offset |= HALF << (12 * t)
    cdef unordered_map[int64_t, int64_t] acc
    acc.reserve(ka.size() * 2)
    cdef int64_t key, prod, cur
    for i in range(ka.size()):
        for j in range(kb.size()):
            key = ka[i] + kb[j] - offset
            prod = ca[i] * cb[j]
            cur = acc[key] + prod
            if cur >= ACC_LIMIT or cur <= -ACC_LIMIT:
                raise OverflowError("accumulator outside checked range")
            acc[key] = cur
    return _emit(acc, rank)


def weyl_sum(mats, dets, shifts, dict coeffs):
    """Sum over listed group elements of det * e^(M k + t)."""
    if not coeffs:
        return {}
    cdef int rank = _rank_of(coeffs)
    if rank > MAX_RANK:
        raise OverflowError("rank too large for packed keys")
    cdef vector[int64_t] keys, vals
    _load_support(coeffs, rank, keys, vals)
    cdef int nw = len(mats)
    cdef vector[int64_t] flat
    cdef vector[int64_t] dts
    cdef vector[int64_t] shf
    cdef int w, i2, j2
    for w in range(nw):
        m = mats[w]
        for i2 in range(rank):
            row = m[i2]
            for j2 in range(rank):
                flat.push_back(row[j2])
        dts.push_back(dets[w])
        t = shifts[w]
        for i2 in range(rank):
            shf.push_back(t[i2])
    cdef unordered_map[int64_t, int64_t] acc
    acc.reserve(keys.size() * nw)
    cdef int64_t buf[8]
    cdef int64_t img[8]
    cdef size_t kidx
    cdef int64_t s, key, cur
    cdef int64_t* mbase
    for w in range(nw):
        for kidx in range(keys.size()):
            _unpack(keys[kidx], rank, buf)
            for i2 in range(rank):
                s = shf[w * rank + i2]
                for j2 in range(rank):
                    s += flat[(w * rank + i2) * rank + j2] * buf[j2]
                img[i2] = s
            key = _pack(img, rank)
            cur = acc[key] + dts[w] * vals[kidx]
            if cur >= ACC_LIMIT or cur <= -ACC_LIMIT:
                raise OverflowError("accumulator outside checked range")
            acc[key] = cur
    return _emit(acc, rank)


def dominant_collect(dict coeffs, basis, coroots, max_steps):
    """Chamber reduction with sign; singular monomials are dropped."""
    if not coeffs:
        return {}
    cdef int rank = _rank_of(coeffs)
    if rank > MAX_RANK:
        raise OverflowError("rank too large for packed keys")
    cdef int nb = len(basis)
    cdef vector[int64_t] bas, cor
    cdef int i, j
    for i in range(nb):
        for j in range(rank):
            bas.push_back(basis[i][j])
            cor.push_back(coroots[i][j])
    cdef vector[int64_t] keys, vals
    _load_support(coeffs, rank, keys, vals)
    cdef unordered_map[int64_t, int64_t] acc
    acc.reserve(keys.size())
    cdef int64_t x[8]
    cdef size_t kidx
    cdef int64_t p, key, cur
    cdef int sign, moved, singular, steps
    cdef long cap = max_steps
    for kidx in range(keys.size()):
        _unpack(keys[kidx], rank, x)
        sign = 1
        steps = 0
        singular = 0
        while True:
            moved = 0
            for i in range(nb):
                p = 0
                for j in range(rank):
                    p += cor[i * rank + j] * x[j]
                if p == 0:
                    singular = 1
                    break
                if p < 0:
                    for j in range(rank):
                        x[j] -= p * bas[i * rank + j]
                    sign = -sign
                    moved = 1
                    steps += 1
            if singular or not moved:
                break
            if steps > cap:
                raise OverflowError("ascent step cap hit")
        if singular:
            continue
        key = _pack(x, rank)
        cur = acc[key] + sign * vals[kidx]
        if cur >= ACC_LIMIT or cur <= -ACC_LIMIT:
            raise OverflowError("accumulator outside checked range")
        acc[key] = cur
    return _emit(acc, rank)


def orbit_expand(items, basis, coroots):
    """Orbit sums of dominant weights under the reflection group."""
    if not items:
        return {}
    cdef int rank = len(items[0][0])
    if rank > MAX_RANK:
        raise OverflowError("rank too large for packed keys")
    cdef int nb = len(basis)
    cdef vector[int64_t] bas, cor
    cdef int i, j
    for i in range(nb):
        for j in range(rank):
            bas.push_back(basis[i][j])
            cor.push_back(coroots[i][j])
    cdef unordered_map[int64_t, int64_t] acc
    cdef unordered_set[int64_t] seen
    cdef vector[int64_t] stack
    cdef int64_t x[8]
    cdef int64_t y[8]
    cdef int64_t mult, key, p, nkey, cur
    for start, m in items:
        mult = m
        if mult >= COEFF_LIMIT or mult <= -COEFF_LIMIT:
            raise OverflowError("multiplicity outside checked range")
        for j in range(rank):
            x[j] = start[j]
        key = _pack(x, rank)
        seen.clear()
        stack.clear()
        seen.insert(key)
        stack.push_back(key)
        while stack.size() > 0:
            key = stack.back()
            stack.pop_back()
            _unpack(key, rank, x)
            for i in range(nb):
                p = 0
                for j in range(rank):
                    p += cor[i * rank + j] * x[j]
                if p > 0:
                    for j in range(rank):
                        y[j] = x[j] - p * bas[i * rank + j]
                    nkey = _pack(y, rank)
                    if seen.find(nkey) == seen.end():
                        seen.insert(nkey)
                        stack.push_back(nkey)
        for it in seen:
            cur = acc[it] + mult
            if cur >= ACC_LIMIT or cur <= -ACC_LIMIT:
                raise OverflowError("accumulator outside checked range")
            acc[it] = cur
    return _emit(acc, rank)
