# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled binary CSP kernel; same contract as ``_pykernels`` for up to 64 values."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

from . import _pykernels

MAX_VALUES = 64


cdef struct Problem:
    int n
    int nvals
    int *arc_start      # n + 1 offsets into arc_y / arc_tab
    int *arc_y
    uint64_t **arc_tab  # pointer to nvals masks
    uint64_t *tables
    int *queue
    char *pending


cdef inline int lowbit(uint64_t m) nogil:
    cdef int i = 0
    while not (m & 1):
        m >>= 1
        i += 1
    return i


cdef bint propagate(Problem *p, uint64_t *doms, int start_all, int only) nogil:
    cdef int head = 0, tail = 0, x, y, k, v
    cdef uint64_t dx, support, new, m
    cdef int n = p.n
    cdef uint64_t *tab
    if start_all:
        for x in range(n):
            p.queue[tail] = x
            tail += 1
            p.pending[x] = 1
    else:
        p.queue[tail] = only
        tail += 1
        p.pending[only] = 1
    # circular queue of capacity n
    cdef int count = tail
    tail = tail % n
    while count:
        x = p.queue[head]
        head = (head + 1) % n
        count -= 1
        p.pending[x] = 0
        dx = doms[x]
        for k in range(p.arc_start[x], p.arc_start[x + 1]):
            y = p.arc_y[k]
            tab = p.arc_tab[k]
            support = 0
            m = dx
            while m:
                v = lowbit(m)
                support |= tab[v]
                m &= m - 1
            new = doms[y] & support
            if new != doms[y]:
                if new == 0:
                    # clear pending flags before bailing out
                    while count:
                        p.pending[p.queue[head]] = 0
                        head = (head + 1) % n
                        count -= 1
                    return False
                doms[y] = new
                if not p.pending[y]:
                    p.pending[y] = 1
                    p.queue[tail] = y
                    tail = (tail + 1) % n
                    count += 1
    return True


cdef object search(Problem *p, uint64_t *init, bint first_only):
    cdef int n = p.n
    cdef int i, depth
    cdef uint64_t low
    out = []
    # trail[d] holds the domains before branching at variable d
    cdef uint64_t *trail = <uint64_t *> malloc(sizeof(uint64_t) * n * (n + 1))
    cdef uint64_t *cand = <uint64_t *> malloc(sizeof(uint64_t) * (n + 1))
    cdef uint64_t *doms
    if trail == NULL or cand == NULL:
        free(trail)
        free(cand)
        raise MemoryError()
    try:
        memcpy(trail, init, sizeof(uint64_t) * n)
        if not propagate(p, trail, 1, 0):
            return out
        depth = 0
        cand[0] = trail[0]
        while depth >= 0:
            if cand[depth] == 0:
                depth -= 1
                continue
            low = cand[depth] & (~cand[depth] + 1)
            cand[depth] ^= low
            doms = trail + (depth + 1) * n
            memcpy(doms, trail + depth * n, sizeof(uint64_t) * n)
            doms[depth] = low
            if not propagate(p, doms, 0, depth):
                continue
            if depth + 1 == n:
                sol = []
                for i in range(n):
                    sol.append(lowbit(doms[i]))
                out.append(tuple(sol))
                if first_only:
                    return out
                continue
            depth += 1
            cand[depth] = doms[depth]
        return out
    finally:
        free(trail)
        free(cand)


def _run(domains, arcs, bint first_only):
    cdef int n = len(domains)
    cdef int nvals = 0
    cdef int narcs = 0, k, x, v
    cdef Problem p
    cdef uint64_t *init
    for d in domains:
        nvals = max(nvals, int(d).bit_length())
    for lst in arcs:
        narcs += len(lst)
        for _, table in lst:
            nvals = max(nvals, len(table))
    if nvals > MAX_VALUES:
        return None
    if n == 0:
        return [()]
    if any(d == 0 for d in domains):
        return []
    nvals = max(nvals, 1)
    p.n = n
    p.nvals = nvals
    p.arc_start = <int *> malloc(sizeof(int) * (n + 1))
    p.arc_y = <int *> malloc(sizeof(int) * max(narcs, 1))
    p.arc_tab = <uint64_t **> malloc(sizeof(uint64_t *) * max(narcs, 1))
    p.tables = <uint64_t *> malloc(sizeof(uint64_t) * max(narcs, 1) * nvals)
    p.queue = <int *> malloc(sizeof(int) * n)
    p.pending = <char *> malloc(n)
    init = <uint64_t *> malloc(sizeof(uint64_t) * n)
    try:
        k = 0
        for x in range(n):
            p.arc_start[x] = k
            p.pending[x] = 0
            init[x] = <uint64_t> domains[x]
            for y, table in arcs[x]:
                p.arc_y[k] = y
                p.arc_tab[k] = p.tables + k * nvals
                for v in range(nvals):
                    p.arc_tab[k][v] = <uint64_t> table[v] if v < len(table) else 0
                k += 1
        p.arc_start[n] = k
        return search(&p, init, first_only)
    finally:
        free(p.arc_start)
        free(p.arc_y)
        free(p.arc_tab)
        free(p.tables)
        free(p.queue)
        free(p.pending)
        free(init)


def solve_first(domains, arcs):
    sols = _run(domains, arcs, True)
    if sols is None:
        return _pykernels.solve_first(domains, arcs)
    return list(sols[0]) if sols else None


def all_solutions(domains, arcs):
    sols = _run(domains, arcs, False)
    if sols is None:
        return _pykernels.all_solutions(domains, arcs)
    return sols


def arc_consistent(domains, arcs):
    return _pykernels.arc_consistent(domains, arcs)
