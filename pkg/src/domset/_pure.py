"""Pure-Python search kernels.

This module and the compiled extension ``domset._core`` implement the same
kernel API over the same array layouts and, crucially, the same random stream:
both advance the xoshiro256** state words passed in ``rng_state`` with
identical draw sequences, so a run produces bit-identical results whichever
backend executes it.  ``domset.kernels`` picks the backend at import time.

Hot loops convert the CSR arrays to Python lists once per call; results are
written back into the caller's numpy buffers before returning.

Kernel API (all arrays are numpy, shapes noted per function):

* ``decode`` / ``decode_weighted`` — scan a vertex order, adding a vertex iff
  it or one of its neighbors is still non-dominated; stop as soon as no
  non-dominated vertex remains.
* ``rlso_loop`` — jump-move local search over permutations, minimizing set
  size, equal-or-better acceptance.
* ``msrls_cycle`` — one cycle of the weighted multi-start variant: same move,
  weight-based acceptance, stall counter with extension on global-best
  improvement.
* ``ant_construct`` — pheromone-proportional dominating-set construction.
* ``ls_remove_redundant`` — iterated removal of redundant vertices.
"""

from __future__ import annotations

from time import perf_counter

BACKEND_NAME = "pure-python"

STOP_TIME = 0
STOP_BOUND = 1
STOP_ITER = 2
STOP_CYCLE_END = 3

_M = (1 << 64) - 1
_U01 = 2.0**-53


def _rng_load(rng_state):
    return [int(rng_state[0]), int(rng_state[1]), int(rng_state[2]), int(rng_state[3])]


def _rng_store(rng_state, s):
    rng_state[0] = s[0]
    rng_state[1] = s[1]
    rng_state[2] = s[2]
    rng_state[3] = s[3]


def _rng_next(s):
    s0, s1, s2, s3 = s
    x = (s1 * 5) & _M
    result = ((((x << 7) | (x >> 57)) & _M) * 9) & _M
    t = (s1 << 17) & _M
    s2 ^= s0
    s3 ^= s1
    s1 ^= s2
    s0 ^= s3
    s2 ^= t
    s3 = ((s3 << 45) | (s3 >> 19)) & _M
    s[0] = s0
    s[1] = s1
    s[2] = s2
    s[3] = s3
    return result


def _rng_below(s, bound):
    while True:
        x = _rng_next(s)
        r = x % bound
        if x - r <= _M - bound + 1:
            return r


def _rng_u01(s):
    return (_rng_next(s) >> 11) * _U01


def decode(indptr, indices, order, stamp, epoch, members_out):
    """Map a vertex order to a dominating set; returns its size.

    ``stamp[u] == epoch`` marks ``u`` dominated within this call; the caller
    must pass an ``epoch`` value not currently present in ``stamp``.
    """
    ip = indptr.tolist()
    ix = indices.tolist()
    od = order.tolist()
    st = stamp.tolist()
    n = len(od)
    remaining = n
    size = 0
    for i in range(n):
        if remaining == 0:
            break
        v = od[i]
        take = st[v] != epoch
        if not take:
            for k in range(ip[v], ip[v + 1]):
                if st[ix[k]] != epoch:
                    take = True
                    break
        if take:
            if st[v] != epoch:
                st[v] = epoch
                remaining -= 1
            for k in range(ip[v], ip[v + 1]):
                u = ix[k]
                if st[u] != epoch:
                    st[u] = epoch
                    remaining -= 1
            members_out[size] = v
            size += 1
    stamp[:] = st
    return size


def decode_weighted(indptr, indices, weights, order, stamp, epoch, members_out):
    """Weighted decode: returns ``(size, total weight)`` of the decoded set."""
    size = decode(indptr, indices, order, stamp, epoch, members_out)
    wt = weights.tolist()
    total = 0.0
    for i in range(size):
        total += wt[members_out[i]]
    return size, total


def rlso_loop(
    indptr,
    indices,
    order,
    stamp,
    epoch,
    members_buf,
    cur_members,
    cur_size,
    rng_state,
    max_iters,
    lower_bound,
    time_limit,
    check_every,
    t0,
    trace,
):
    """Jump-move local search minimizing dominating-set size.

    ``order`` holds the incumbent permutation (updated in place), and
    ``cur_members[:cur_size]`` the incumbent set.  A proposal moves a random
    non-first element to the front, decodes, and is accepted iff not larger.
    Stops on ``cur_size <= lower_bound`` (if >= 0), ``max_iters`` proposals
    (if >= 0), or ``time_limit`` seconds after ``t0`` (checked every
    ``check_every`` iterations).  Returns
    ``(cur_size, iterations, evaluations, epoch, stop_code)``.
    """
    ip = indptr.tolist()
    ix = indices.tolist()
    od = order.tolist()
    st = stamp.tolist()
    cm = cur_members.tolist()
    mb = [0] * len(od)
    n = len(od)
    s = _rng_load(rng_state)
    iters = 0
    evals = 0
    try:
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
                j = 1 + _rng_below(s, n - 1)
                x = od[j]
                od[1 : j + 1] = od[0:j]
                od[0] = x
                epoch += 1
                remaining = n
                size = 0
                for i in range(n):
                    if remaining == 0:
                        break
                    v = od[i]
                    take = st[v] != epoch
                    if not take:
                        for k in range(ip[v], ip[v + 1]):
                            if st[ix[k]] != epoch:
                                take = True
                                break
                    if take:
                        if st[v] != epoch:
                            st[v] = epoch
                            remaining -= 1
                        for k in range(ip[v], ip[v + 1]):
                            u = ix[k]
                            if st[u] != epoch:
                                st[u] = epoch
                                remaining -= 1
                        mb[size] = v
                        size += 1
                evals += 1
                if size <= cur_size:
                    cm[:size] = mb[:size]
                    if size < cur_size:
                        trace.append((perf_counter() - t0, float(size)))
                    cur_size = size
                else:
                    x = od[0]
                    od[0:j] = od[1 : j + 1]
                    od[j] = x
            iters += 1
    finally:
        _rng_store(rng_state, s)
        order[:] = od
        stamp[:] = st
        cur_members[:] = cm
    return cur_size, iters, evals, epoch, stop


def msrls_cycle(
    indptr,
    indices,
    weights,
    order,
    stamp,
    epoch,
    members_buf,
    cur_members,
    cur_size,
    cur_weight,
    best_members,
    best_size,
    best_weight,
    stall_cap,
    extended_cap,
    rng_state,
    time_limit,
    lower_bound,
    check_every,
    t0,
    trace,
):
    """One search cycle of the weighted multi-start local search.

    Runs jump+decode proposals from the freshly initialized incumbent until
    the stall counter exceeds its cap.  The stall counter increments when the
    proposal's weight is >= the incumbent's and resets on strict improvement;
    proposals with weight <= the incumbent's are accepted.  Improving the
    global best switches the cycle's cap from ``stall_cap`` to
    ``extended_cap`` for the rest of the cycle and updates
    ``best_members[:best_size]`` in place.  Returns
    ``(cur_size, cur_weight, best_size, best_weight, iterations,
    evaluations, epoch, stop_code)``.
    """
    ip = indptr.tolist()
    ix = indices.tolist()
    wt = weights.tolist()
    od = order.tolist()
    st = stamp.tolist()
    cm = cur_members.tolist()
    bm = best_members.tolist()
    mb = [0] * len(od)
    n = len(od)
    s = _rng_load(rng_state)
    iters = 0
    evals = 0
    stall = 0
    ext = False
    try:
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
                j = 1 + _rng_below(s, n - 1)
                x = od[j]
                od[1 : j + 1] = od[0:j]
                od[0] = x
                epoch += 1
                remaining = n
                size = 0
                w = 0.0
                for i in range(n):
                    if remaining == 0:
                        break
                    v = od[i]
                    take = st[v] != epoch
                    if not take:
                        for k in range(ip[v], ip[v + 1]):
                            if st[ix[k]] != epoch:
                                take = True
                                break
                    if take:
                        if st[v] != epoch:
                            st[v] = epoch
                            remaining -= 1
                        for k in range(ip[v], ip[v + 1]):
                            u = ix[k]
                            if st[u] != epoch:
                                st[u] = epoch
                                remaining -= 1
                        mb[size] = v
                        size += 1
                        w += wt[v]
                evals += 1
                if w >= cur_weight:
                    stall += 1
                else:
                    stall = 0
                if w <= cur_weight:
                    cm[:size] = mb[:size]
                    cur_size = size
                    cur_weight = w
                    if w < best_weight:
                        best_weight = w
                        best_size = size
                        bm[:size] = mb[:size]
                        ext = True
                        trace.append((perf_counter() - t0, w))
                else:
                    x = od[0]
                    od[0:j] = od[1 : j + 1]
                    od[j] = x
            iters += 1
    finally:
        _rng_store(rng_state, s)
        order[:] = od
        stamp[:] = st
        cur_members[:] = cm
        best_members[:] = bm
    return cur_size, cur_weight, best_size, best_weight, iters, evals, epoch, stop


def ant_construct(indptr, indices, tau, gain, stamp, epoch, members_out, rng_state, restrict_adjacent):
    """Build a dominating set by pheromone-proportional vertex draws.

    Eligible vertices are those whose closed neighborhood still contains a
    non-dominated vertex (tracked in the ``gain`` scratch array, overwritten
    here).  With ``restrict_adjacent``, the pool is narrowed to eligible
    neighbors of the previously added vertex whenever that sub-pool is
    nonempty.  Returns the constructed size.
    """
    ip = indptr.tolist()
    ix = indices.tolist()
    tu = tau.tolist()
    st = stamp.tolist()
    n = len(tu)
    gn = [0] * n
    for v in range(n):
        gn[v] = ip[v + 1] - ip[v] + 1
    s = _rng_load(rng_state)
    nondom = n
    last = -1
    size = 0
    try:
        while nondom > 0:
            restricted = False
            total = 0.0
            if restrict_adjacent and last >= 0:
                for k in range(ip[last], ip[last + 1]):
                    u = ix[k]
                    if gn[u] > 0:
                        total += tu[u]
                if total > 0.0:
                    restricted = True
            if not restricted:
                total = 0.0
                for v in range(n):
                    if gn[v] > 0:
                        total += tu[v]
            r = _rng_u01(s) * total
            acc = 0.0
            pick = -1
            if restricted:
                for k in range(ip[last], ip[last + 1]):
                    u = ix[k]
                    if gn[u] > 0:
                        acc += tu[u]
                        pick = u
                        if acc > r:
                            break
            else:
                for v in range(n):
                    if gn[v] > 0:
                        acc += tu[v]
                        pick = v
                        if acc > r:
                            break
            members_out[size] = pick
            size += 1
            if st[pick] != epoch:
                st[pick] = epoch
                nondom -= 1
                gn[pick] -= 1
                for k2 in range(ip[pick], ip[pick + 1]):
                    gn[ix[k2]] -= 1
            for k in range(ip[pick], ip[pick + 1]):
                u = ix[k]
                if st[u] != epoch:
                    st[u] = epoch
                    nondom -= 1
                    gn[u] -= 1
                    for k2 in range(ip[u], ip[u + 1]):
                        gn[ix[k2]] -= 1
            last = pick
    finally:
        _rng_store(rng_state, s)
        stamp[:] = st
        gain[:] = gn
    return size


def ls_remove_redundant(indptr, indices, members, size, dom_count, cand_buf, p_r, rng_state):
    """Strip redundant vertices from ``members[:size]``; returns the new size.

    While any member's closed neighborhood is covered at least twice
    throughout, one such vertex is removed: a uniformly random one with
    probability ``p_r``, otherwise the one of minimum degree (ties by lowest
    id).  Member order is preserved.  ``dom_count``/``cand_buf`` are scratch.
    """
    ip = indptr.tolist()
    ix = indices.tolist()
    mem = members.tolist()
    n = len(indptr) - 1
    dom = [0] * n
    for i in range(size):
        v = mem[i]
        dom[v] += 1
        for k in range(ip[v], ip[v + 1]):
            dom[ix[k]] += 1
    s = _rng_load(rng_state)
    try:
        while True:
            cand = []
            for i in range(size):
                v = mem[i]
                if dom[v] < 2:
                    continue
                ok = True
                for k in range(ip[v], ip[v + 1]):
                    if dom[ix[k]] < 2:
                        ok = False
                        break
                if ok:
                    cand.append(v)
            if not cand:
                break
            if _rng_u01(s) < p_r:
                pick = cand[_rng_below(s, len(cand))]
            else:
                pick = cand[0]
                best_deg = ip[pick + 1] - ip[pick]
                for v in cand[1:]:
                    d = ip[v + 1] - ip[v]
                    if d < best_deg or (d == best_deg and v < pick):
                        pick = v
                        best_deg = d
            idx = mem.index(pick)
            del mem[idx]
            mem.append(0)  # keep list length; tail beyond size is dont-care
            size -= 1
            dom[pick] -= 1
            for k in range(ip[pick], ip[pick + 1]):
                dom[ix[k]] -= 1
    finally:
        _rng_store(rng_state, s)
        members[:] = mem
    return size
