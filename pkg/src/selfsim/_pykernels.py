"""Pure-Python binary CSP kernel (reference implementation of ``_ckernels``).

Domains are bitmasks over value indices.  ``arcs[x]`` lists ``(y, table)``
pairs where ``table[v]`` is the mask of values of ``y`` compatible with
``x = v``; callers supply both directions of every constraint.  Variables
are branched in index order and values in increasing order, with full arc
consistency maintained, so the first solution found is the
lexicographically least one.
"""


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _propagate(doms, arcs, queue):
    queue = list(queue)
    pending = set(queue)
    while queue:
        x = queue.pop()
        pending.discard(x)
        dx = doms[x]
        for y, table in arcs[x]:
            support = 0
            for v in _bits(dx):
                support |= table[v]
            new = doms[y] & support
            if new != doms[y]:
                if not new:
                    return False
                doms[y] = new
                if y not in pending:
                    pending.add(y)
                    queue.append(y)
    return True


def _search(domains, arcs, first_only):
    n = len(domains)
    doms = list(domains)
    out = []
    if any(d == 0 for d in doms):
        return out
    if not _propagate(doms, arcs, range(n)):
        return out
    if n == 0:
        return [()]
    # explicit stack of (index, remaining candidate mask, saved domains)
    stack = [(0, doms[0], doms)]
    while stack:
        i, cand, saved = stack.pop()
        if not cand:
            continue
        low = cand & -cand
        stack.append((i, cand ^ low, saved))
        doms = list(saved)
        doms[i] = low
        if not _propagate(doms, arcs, [i]):
            continue
        if i + 1 == n:
            out.append(tuple(d.bit_length() - 1 for d in doms))
            if first_only:
                return out
            continue
        stack.append((i + 1, doms[i + 1], doms))
    return out


def solve_first(domains, arcs):
    sols = _search(domains, arcs, True)
    return list(sols[0]) if sols else None


def all_solutions(domains, arcs):
    return _search(domains, arcs, False)


def arc_consistent(domains, arcs):
    """Arc-consistent domains, or ``None`` if some domain empties."""
    doms = list(domains)
    if any(d == 0 for d in doms):
        return None
    return doms if _propagate(doms, arcs, range(len(doms))) else None


def iter_solutions(domains, arcs):
    """Lazy version of :func:`all_solutions`, in the same order."""
    n = len(domains)
    doms = list(domains)
    if any(d == 0 for d in doms) or not _propagate(doms, arcs, range(n)):
        return
    if n == 0:
        yield ()
        return
    stack = [(0, doms[0], doms)]
    while stack:
        i, cand, saved = stack.pop()
        if not cand:
            continue
        low = cand & -cand
        stack.append((i, cand ^ low, saved))
        doms = list(saved)
        doms[i] = low
        if not _propagate(doms, arcs, [i]):
            continue
        if i + 1 == n:
            yield tuple(d.bit_length() - 1 for d in doms)
            continue
        stack.append((i + 1, doms[i + 1], doms))
