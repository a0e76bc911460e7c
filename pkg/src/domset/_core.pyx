# cython: language_level=3
"""Compiled search kernels.

Mirror of ``domset._pure`` — same functions, same array layouts, and the same
xoshiro256** draw sequence over the shared ``rng_state`` words, so results are
bit-identical across backends.  See ``domset._pure`` for the API contract.
"""

from time import perf_counter

BACKEND_NAME = "compiled"

STOP_TIME = 0
STOP_BOUND = 1
STOP_ITER = 2
STOP_CYCLE_END = 3

cdef double _U01 = 1.0 / 9007199254740992.0  # 2**-53


cdef inline unsigned long long _rng_next(unsigned long long* s):
    cdef unsigned long long s0 = s[0]
    cdef unsigned long long s1 = s[1]
    cdef unsigned long long s2 = s[2]
    cdef unsigned long long s3 = s[3]
    cdef unsigned long long x = s1 * 5ULL
    cdef unsigned long long result = ((x << 7) | (x >> 57)) * 9ULL
    cdef unsigned long long t = s1 << 17
    s2 ^= s0
    s3 ^= s1
    s1 ^= s2
    s0 ^= s3
    s2 ^= t
    s3 = (s3 << 45) | (s3 >> 19)
    s[0] = s0
    s[1] = s1
    s[2] = s2
    s[3] = s3
    return result


cdef inline unsigned long long _rng_below(unsigned long long* s, unsigned long long bound):
    cdef unsigned long long x, r
    while True:
        x = _rng_next(s)
        r = x % bound
        if x - r <= (<unsigned long long>0) - bound:
            return r


cdef inline double _rng_u01(unsigned long long* s):
    return <double>(_rng_next(s) >> 11) * _U01


def decode(long long[:] indptr, int[:] indices, int[:] order,
           long long[:] stamp, long long epoch, int[:] members_out):
    cdef Py_ssize_t n = order.shape[0]
    cdef Py_ssize_t i
    cdef long long k
    cdef int v, u
    cdef long long remaining = n
    cdef int size = 0
    cdef bint take
    for i in range(n):
        if remaining == 0:
            break
        v = order[i]
        take = stamp[v] != epoch
        if not take:
            for k in range(indptr[v], indptr[v + 1]):
                if stamp[indices[k]] != epoch:
                    take = True
                    break
        if take:
            if stamp[v] != epoch:
                stamp[v] = epoch
                remaining -= 1
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if stamp[u] != epoch:
                    stamp[u] = epoch
                    remaining -= 1
            members_out[size] = v
            size += 1
    return size


def decode_weighted(long long[:] indptr, int[:] indices, double[:] weights,
                    int[:] order, long long[:] stamp, long long epoch,
                    int[:] members_out):
    cdef int size = decode(indptr, indices, order, stamp, epoch, members_out)
    cdef double total = 0.0
    cdef int i
    for i in range(size):
        total += weights[members_out[i]]
    return size, total


def rlso_loop(long long[:] indptr, int[:] indices, int[:] order,
              long long[:] stamp, long long epoch, int[:] members_buf,
              int[:] cur_members, int cur_size,
              unsigned long long[:] rng_state,
              long long max_iters, long long lower_bound, double time_limit,
              long long check_every, double t0, list trace):
    cdef Py_ssize_t n = order.shape[0]
    cdef unsigned long long* s = &rng_state[0]
    cdef long long iters = 0
    cdef long long evals = 0
    cdef long long j, k, remaining
    cdef Py_ssize_t i
    cdef int x, v, u, size
    cdef bint take
    cdef int stop = STOP_TIME
    while True:
        if lower_bound >= 0 and cur_size <= lower_bound:
            stop = STOP_BOUND
            break
        if max_iters >= 0 and iters >= max_iters:
            stop = STOP_ITER
            break
        if iters % check_every == 0 and perf_counter() - t0 >= time_limit:
            stop = STOP_TIME
            break
        if n >= 2:
            j = 1 + <long long>_rng_below(s, <unsigned long long>(n - 1))
            x = order[j]
            for k in range(j, 0, -1):
                order[k] = order[k - 1]
            order[0] = x
            epoch += 1
            remaining = n
            size = 0
            for i in range(n):
                if remaining == 0:
                    break
                v = order[i]
                take = stamp[v] != epoch
                if not take:
                    for k in range(indptr[v], indptr[v + 1]):
                        if stamp[indices[k]] != epoch:
                            take = True
                            break
                if take:
                    if stamp[v] != epoch:
                        stamp[v] = epoch
                        remaining -= 1
                    for k in range(indptr[v], indptr[v + 1]):
                        u = indices[k]
                        if stamp[u] != epoch:
                            stamp[u] = epoch
                            remaining -= 1
                    members_buf[size] = v
                    size += 1
            evals += 1
            if size <= cur_size:
                for i in range(size):
                    cur_members[i] = members_buf[i]
                if size < cur_size:
                    trace.append((perf_counter() - t0, <double>size))
                cur_size = size
            else:
                x = order[0]
                for k in range(0, j):
                    order[k] = order[k + 1]
                order[j] = x
        iters += 1
    return cur_size, iters, evals, epoch, stop


def msrls_cycle(long long[:] indptr, int[:] indices, double[:] weights,
                int[:] order, long long[:] stamp, long long epoch,
                int[:] members_buf, int[:] cur_members, int cur_size,
                double cur_weight, int[:] best_members, int best_size,
                double best_weight, long long stall_cap, long long extended_cap,
                unsigned long long[:] rng_state, double time_limit,
                double lower_bound, long long check_every, double t0,
                list trace):
    cdef Py_ssize_t n = order.shape[0]
    cdef unsigned long long* s = &rng_state[0]
    cdef long long iters = 0
    cdef long long evals = 0
    cdef long long stall = 0
    cdef bint ext = False
    cdef long long j, k, remaining
    cdef Py_ssize_t i
    cdef int x, v, u, size
    cdef double w
    cdef bint take
    cdef int stop = STOP_TIME
    while True:
        if lower_bound >= 0.0 and best_weight <= lower_bound + 1e-9:
            stop = STOP_BOUND
            break
        if stall > (extended_cap if ext else stall_cap):
            stop = STOP_CYCLE_END
            break
        if iters % check_every == 0 and perf_counter() - t0 >= time_limit:
            stop = STOP_TIME
            break
        if n >= 2:
            j = 1 + <long long>_rng_below(s, <unsigned long long>(n - 1))
            x = order[j]
            for k in range(j, 0, -1):
                order[k] = order[k - 1]
            order[0] = x
            epoch += 1
            remaining = n
            size = 0
            w = 0.0
            for i in range(n):
                if remaining == 0:
                    break
                v = order[i]
                take = stamp[v] != epoch
                if not take:
                    for k in range(indptr[v], indptr[v + 1]):
                        if stamp[indices[k]] != epoch:
                            take = True
                            break
                if take:
                    if stamp[v] != epoch:
                        stamp[v] = epoch
                        remaining -= 1
                    for k in range(indptr[v], indptr[v + 1]):
                        u = indices[k]
                        if stamp[u] != epoch:
                            stamp[u] = epoch
                            remaining -= 1
                    members_buf[size] = v
                    size += 1
                    w += weights[v]
            evals += 1
            if w >= cur_weight:
                stall += 1
            else:
                stall = 0
            if w <= cur_weight:
                for i in range(size):
                    cur_members[i] = members_buf[i]
                cur_size = size
                cur_weight = w
                if w < best_weight:
                    best_weight = w
                    best_size = size
                    for i in range(size):
                        best_members[i] = members_buf[i]
                    ext = True
                    trace.append((perf_counter() - t0, w))
            else:
                x = order[0]
                for k in range(0, j):
                    order[k] = order[k + 1]
                order[j] = x
        iters += 1
    return cur_size, cur_weight, best_size, best_weight, iters, evals, epoch, stop


def ant_construct(long long[:] indptr, int[:] indices, double[:] tau,
                  int[:] gain, long long[:] stamp, long long epoch,
                  int[:] members_out, unsigned long long[:] rng_state,
                  bint restrict_adjacent):
    cdef Py_ssize_t n = tau.shape[0]
    cdef unsigned long long* s = &rng_state[0]
    cdef Py_ssize_t v
    cdef long long k, k2
    cdef int u, pick, last = -1
    cdef int size = 0
    cdef long long nondom = n
    cdef double total, r, acc
    cdef bint restricted
    for v in range(n):
        gain[v] = <int>(indptr[v + 1] - indptr[v]) + 1
    while nondom > 0:
        restricted = False
        total = 0.0
        if restrict_adjacent and last >= 0:
            for k in range(indptr[last], indptr[last + 1]):
                u = indices[k]
                if gain[u] > 0:
                    total += tau[u]
            if total > 0.0:
                restricted = True
        if not restricted:
            total = 0.0
            for v in range(n):
                if gain[v] > 0:
                    total += tau[v]
        r = _rng_u01(s) * total
        acc = 0.0
        pick = -1
        if restricted:
            for k in range(indptr[last], indptr[last + 1]):
                u = indices[k]
                if gain[u] > 0:
                    acc += tau[u]
                    pick = u
                    if acc > r:
                        break
        else:
            for v in range(n):
                if gain[v] > 0:
                    acc += tau[v]
                    pick = <int>v
                    if acc > r:
                        break
        members_out[size] = pick
        size += 1
        if stamp[pick] != epoch:
            stamp[pick] = epoch
            nondom -= 1
            gain[pick] -= 1
            for k2 in range(indptr[pick], indptr[pick + 1]):
                gain[indices[k2]] -= 1
        for k in range(indptr[pick], indptr[pick + 1]):
            u = indices[k]
            if stamp[u] != epoch:
                stamp[u] = epoch
                nondom -= 1
                gain[u] -= 1
                for k2 in range(indptr[u], indptr[u + 1]):
                    gain[indices[k2]] -= 1
        last = pick
    return size


def ls_remove_redundant(long long[:] indptr, int[:] indices, int[:] members,
                        int size, int[:] dom_count, int[:] cand_buf,
                        double p_r, unsigned long long[:] rng_state):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef unsigned long long* s = &rng_state[0]
    cdef Py_ssize_t v
    cdef long long k
    cdef int i, u, pick, ncand, best_deg, d, idx
    cdef bint ok
    for v in range(n):
        dom_count[v] = 0
    for i in range(size):
        v = members[i]
        dom_count[v] += 1
        for k in range(indptr[v], indptr[v + 1]):
            dom_count[indices[k]] += 1
    while True:
        ncand = 0
        for i in range(size):
            v = members[i]
            if dom_count[v] < 2:
                continue
            ok = True
            for k in range(indptr[v], indptr[v + 1]):
                if dom_count[indices[k]] < 2:
                    ok = False
                    break
            if ok:
                cand_buf[ncand] = <int>v
                ncand += 1
        if ncand == 0:
            break
        if _rng_u01(s) < p_r:
            pick = cand_buf[<int>_rng_below(s, <unsigned long long>ncand)]
        else:
            pick = cand_buf[0]
            best_deg = <int>(indptr[pick + 1] - indptr[pick])
            for i in range(1, ncand):
                u = cand_buf[i]
                d = <int>(indptr[u + 1] - indptr[u])
                if d < best_deg or (d == best_deg and u < pick):
                    pick = u
                    best_deg = d
        idx = 0
        while members[idx] != pick:
            idx += 1
        for i in range(idx, size - 1):
            members[i] = members[i + 1]
        size -= 1
        dom_count[pick] -= 1
        for k in range(indptr[pick], indptr[pick + 1]):
            dom_count[indices[k]] -= 1
    return size
