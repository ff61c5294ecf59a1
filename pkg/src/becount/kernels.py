"""Hot loops shared by the coloring check, the decomposer and the baseline.

Every function here takes CSR adjacency (``indptr``, ``indices`` with sorted
rows) and plain integer arrays, so it compiles under numba and also runs
unchanged as Python when the JIT is disabled (see :mod:`becount._jit`).
"""

import numpy as np

from ._jit import njit


@njit
def _bfs(indptr, indices, s, mark, stamp, seen, r, buf):
    seen[s] = r
    buf[0] = s
    head = 0
    tail = 1
    while head < tail:
        v = buf[head]
        head += 1
        for e in range(indptr[v], indptr[v + 1]):
            u = indices[e]
            if mark[u] == stamp and seen[u] != r:
                seen[u] = r
                buf[tail] = u
                tail += 1
    return tail


@njit
def _eliminate(indptr, indices, colors, verts, nv, mark, stamp, seen, rnd, ccount,
               queue, queue2, tstart, tpar, tdep, parent_g, depth_g):
    """Recursive centre elimination over the vertices with ``mark == stamp``.

    Writes parent/depth of every eliminated vertex into ``parent_g`` and
    ``depth_g`` and returns the forest height, or -1 as soon as some
    component has no uniquely coloured vertex.  ``mark`` is consumed.
    """
    ntask = 0
    base = rnd[0]
    for i in range(nv):
        v = verts[i]
        if seen[v] <= base:
            rnd[0] += 1
            _bfs(indptr, indices, v, mark, stamp, seen, rnd[0], queue2)
            tstart[ntask] = v
            tpar[ntask] = -1
            tdep[ntask] = 1
            ntask += 1
    height = 0
    while ntask > 0:
        ntask -= 1
        s = tstart[ntask]
        par = tpar[ntask]
        d = tdep[ntask]
        rnd[0] += 1
        r = rnd[0]
        cs = _bfs(indptr, indices, s, mark, stamp, seen, r, queue)
        for i in range(cs):
            ccount[colors[queue[i]]] += 1
        center = -1
        best = -1
        for i in range(cs):
            v = queue[i]
            c = colors[v]
            if ccount[c] == 1 and (best < 0 or c < best):
                best = c
                center = v
        for i in range(cs):
            ccount[colors[queue[i]]] = 0
        if center < 0:
            return -1
        parent_g[center] = par
        depth_g[center] = d
        if d > height:
            height = d
        mark[center] = 0
        for i in range(cs):
            w = queue[i]
            if w != center and seen[w] == r:
                rnd[0] += 1
                _bfs(indptr, indices, w, mark, stamp, seen, rnd[0], queue2)
                tstart[ntask] = w
                tpar[ntask] = center
                tdep[ntask] = d + 1
                ntask += 1
    return height


@njit
def centered_forest(indptr, indices, colors, verts, ncolors):
    """Centre-elimination forest of the subgraph induced by ``verts``.

    Returns ``(height, parent, depth)`` with ``parent``/``depth`` aligned to
    ``verts`` (parent -1 for roots).  ``height`` is -1 if the coloring is not
    centered on some component; the arrays are then incomplete.
    """
    n = indptr.shape[0] - 1
    nv = verts.shape[0]
    mark = np.zeros(n, dtype=np.int64)
    seen = np.zeros(n, dtype=np.int64)
    parent_g = np.full(n, -1, dtype=np.int64)
    depth_g = np.zeros(n, dtype=np.int64)
    for i in range(nv):
        mark[verts[i]] = 1
    rnd = np.zeros(1, dtype=np.int64)
    ccount = np.zeros(ncolors, dtype=np.int64)
    m = max(nv, 1)
    queue = np.empty(m, dtype=np.int64)
    queue2 = np.empty(m, dtype=np.int64)
    tstart = np.empty(m, dtype=np.int64)
    tpar = np.empty(m, dtype=np.int64)
    tdep = np.empty(m, dtype=np.int64)
    height = _eliminate(indptr, indices, colors, verts, nv, mark, 1, seen, rnd, ccount,
                        queue, queue2, tstart, tpar, tdep, parent_g, depth_g)
    parent = np.empty(nv, dtype=np.int64)
    depth = np.empty(nv, dtype=np.int64)
    for i in range(nv):
        parent[i] = parent_g[verts[i]]
        depth[i] = depth_g[verts[i]]
    return height, parent, depth


@njit
def first_uncentered_set(indptr, indices, colors, class_ptr, class_verts, qptr, qidx,
                         k, size, must):
    """Search for a color set of at most ``size`` colors whose induced
    subgraph is not centered; return it sorted (empty array if none).

    Only color sets that are connected in the class quotient graph
    (``qptr``/``qidx``: color ``a`` adjacent to ``b`` iff some edge joins the
    classes) can carry a connected subgraph, so the search walks those with
    the ESU scheme, rooted at each color in turn (or only at ``must``, which
    restricts the search to sets containing it).  A set is tested when it
    has ``size`` colors or no quotient neighbour left to extend with; every
    smaller connected set lies inside one of those.
    """
    n = indptr.shape[0] - 1
    mark = np.zeros(n, dtype=np.int64)
    seen = np.zeros(n, dtype=np.int64)
    parent_g = np.full(n, -1, dtype=np.int64)
    depth_g = np.zeros(n, dtype=np.int64)
    rnd = np.zeros(1, dtype=np.int64)
    ccount = np.zeros(max(k, 1), dtype=np.int64)
    m = max(n, 1)
    verts = np.empty(m, dtype=np.int64)
    queue = np.empty(m, dtype=np.int64)
    queue2 = np.empty(m, dtype=np.int64)
    tstart = np.empty(m, dtype=np.int64)
    tpar = np.empty(m, dtype=np.int64)
    tdep = np.empty(m, dtype=np.int64)

    empty = np.empty(0, dtype=np.int64)
    if size <= 0 or k == 0:
        return empty
    cover = np.zeros(k, dtype=np.int64)
    sub = np.empty(size, dtype=np.int64)
    ext = np.empty((size, k), dtype=np.int64)
    ext_len = np.zeros(size, dtype=np.int64)
    stamp = 0
    lo = must if must >= 0 else 0
    hi = must + 1 if must >= 0 else k
    for root in range(lo, hi):
        floor = -1 if must >= 0 else root
        depth = 0
        sub[0] = root
        ncov = 0
        cover[root] += 1
        if cover[root] == 1:
            ncov += 1
        ext_len[0] = 0
        for e in range(qptr[root], qptr[root + 1]):
            u = qidx[e]
            cover[u] += 1
            if cover[u] == 1:
                ncov += 1
            if u > floor:
                ext[0, ext_len[0]] = u
                ext_len[0] += 1
        fresh = True
        while depth >= 0:
            if fresh:
                fresh = False
                if depth + 1 == size or ncov == depth + 1:
                    stamp += 1
                    nv = 0
                    for t in range(depth + 1):
                        c = sub[t]
                        for e in range(class_ptr[c], class_ptr[c + 1]):
                            v = class_verts[e]
                            mark[v] = stamp
                            verts[nv] = v
                            nv += 1
                    h = _eliminate(indptr, indices, colors, verts, nv, mark, stamp, seen, rnd,
                                   ccount, queue, queue2, tstart, tpar, tdep, parent_g, depth_g)
                    if h < 0:
                        out = np.empty(depth + 1, dtype=np.int64)
                        for t in range(depth + 1):
                            out[t] = sub[t]
                        return np.sort(out)
            if depth + 1 < size and ext_len[depth] > 0:
                ext_len[depth] -= 1
                w = ext[depth, ext_len[depth]]
                nl = ext_len[depth]
                for t in range(nl):
                    ext[depth + 1, t] = ext[depth, t]
                for e in range(qptr[w], qptr[w + 1]):
                    u = qidx[e]
                    if cover[u] == 0 and u > floor:
                        ext[depth + 1, nl] = u
                        nl += 1
                ext_len[depth + 1] = nl
                for e in range(qptr[w], qptr[w + 1]):
                    u = qidx[e]
                    cover[u] += 1
                    if cover[u] == 1:
                        ncov += 1
                cover[w] += 1
                depth += 1
                sub[depth] = w
                fresh = True
            else:
                c = sub[depth]
                cover[c] -= 1
                if cover[c] == 0:
                    ncov -= 1
                for e in range(qptr[c], qptr[c + 1]):
                    u = qidx[e]
                    cover[u] -= 1
                    if cover[u] == 0:
                        ncov -= 1
                depth -= 1
    return empty


@njit
def _has_edge(indptr, indices, u, v):
    lo = indptr[u]
    hi = indptr[u + 1]
    while lo < hi:
        mid = (lo + hi) // 2
        x = indices[mid]
        if x == v:
            return True
        if x < v:
            lo = mid + 1
        else:
            hi = mid
    return False


@njit
def backtrack_count(indptr, indices, order_parent, hadj, hdeg):
    """Count induced embeddings by backtracking over a fixed motif order.

    Position ``i`` of the search order has motif degree ``hdeg[i]``; its
    candidates are the host neighbours of the image of position
    ``order_parent[i]`` (every vertex for position 0).  ``hadj[i, j]`` is 1
    iff positions ``i`` and ``j`` are adjacent in the motif.
    """
    n = indptr.shape[0] - 1
    h = hdeg.shape[0]
    mapped = np.full(h, -1, dtype=np.int64)
    ptr = np.zeros(h, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    count = 0
    i = 0
    while i >= 0:
        if i == 0:
            base = 0
            lim = n
        else:
            p = mapped[order_parent[i]]
            base = indptr[p]
            lim = indptr[p + 1] - base
        found = -1
        while ptr[i] < lim:
            c = ptr[i] if i == 0 else indices[base + ptr[i]]
            ptr[i] += 1
            if used[c] or indptr[c + 1] - indptr[c] < hdeg[i]:
                continue
            ok = True
            for j in range(i):
                if j == order_parent[i]:
                    continue
                if _has_edge(indptr, indices, mapped[j], c) != (hadj[i, j] == 1):
                    ok = False
                    break
            if ok:
                found = c
                break
        if found < 0:
            i -= 1
            if i >= 0:
                used[mapped[i]] = False
                mapped[i] = -1
            continue
        if i == h - 1:
            count += 1
            continue
        mapped[i] = found
        used[found] = True
        i += 1
        ptr[i] = 0
    return count


@njit
def _grow(arr, need):
    if need <= arr.shape[0]:
        return arr
    cap = arr.shape[0] * 2
    while cap < need:
        cap *= 2
    out = np.empty(cap, dtype=arr.dtype)
    out[:arr.shape[0]] = arr
    return out


@njit
def _find(par, v):
    r = v
    while par[r] != r:
        r = par[r]
    while par[v] != r:
        nxt = par[v]
        par[v] = r
        v = nxt
    return r


@njit
def color_set_components(indptr, indices, class_ptr, class_verts, k, h, exact, min_size):
    """Walk every color set of at most ``h`` colors in DFS order (a prefix
    before its extensions, colors increasing) and collect the components of
    each induced subgraph that have at least ``min_size`` vertices.

    Components are maintained with one union-find array per prefix level:
    extending a prefix copies its array and unions the new class in.  With
    ``exact`` only sets of exactly ``h`` colors are reported.  Returns
    ``(visited, sets, set_ptr, comp_ptr, comp_verts)``: ``sets`` holds one
    row per reported set (padded with -1) and ``set_ptr`` / ``comp_ptr``
    index its components and their vertices (ascending, components ordered
    by smallest vertex).
    """
    n = indptr.shape[0] - 1
    par = np.full((max(h, 1), n), -1, dtype=np.int64)
    cnt = np.zeros(n, dtype=np.int64)
    slot = np.full(n, -1, dtype=np.int64)
    buf = np.empty(max(n, 1), dtype=np.int64)
    cur = np.empty(max(h, 1), dtype=np.int64)

    sets = np.full(16 * max(h, 1), -1, dtype=np.int64)
    set_ptr = np.zeros(17, dtype=np.int64)
    comp_ptr = np.zeros(17, dtype=np.int64)
    comp_verts = np.empty(64, dtype=np.int64)
    nsets = 0
    ncomp = 0
    nverts = 0
    visited = 0
    if h <= 0 or k <= 0:
        return visited, sets[:0].reshape((0, max(h, 1))), set_ptr[:1], comp_ptr[:1], comp_verts[:0]

    depth = 0
    cur[0] = 0
    while depth >= 0:
        c = cur[depth]
        if c >= k:
            depth -= 1
            if depth >= 0:
                cur[depth] += 1
            continue
        # extend the prefix partition by class c
        row = par[depth]
        if depth == 0:
            for v in range(n):
                row[v] = -1
        else:
            prev = par[depth - 1]
            for v in range(n):
                row[v] = prev[v]
        for e in range(class_ptr[c], class_ptr[c + 1]):
            v = class_verts[e]
            row[v] = v
        for e in range(class_ptr[c], class_ptr[c + 1]):
            v = class_verts[e]
            for f in range(indptr[v], indptr[v + 1]):
                u = indices[f]
                if row[u] >= 0:
                    ru = _find(row, u)
                    rv = _find(row, v)
                    if ru != rv:
                        if ru < rv:
                            row[rv] = ru
                        else:
                            row[ru] = rv
        visited += 1
        size = depth + 1
        if not exact or size == h:
            nb = 0
            for t in range(size):
                col = cur[t]
                for e in range(class_ptr[col], class_ptr[col + 1]):
                    buf[nb] = class_verts[e]
                    nb += 1
            members = np.sort(buf[:nb])
            for i in range(nb):
                cnt[_find(row, members[i])] += 1
            first_comp = ncomp
            for i in range(nb):
                r = _find(row, members[i])
                if cnt[r] >= min_size and slot[r] < 0:
                    slot[r] = ncomp
                    ncomp += 1
                    comp_ptr = _grow(comp_ptr, ncomp + 1)
                    comp_ptr[ncomp] = comp_ptr[ncomp - 1] + cnt[r]
            if ncomp > first_comp:
                comp_verts = _grow(comp_verts, comp_ptr[ncomp])
                fill = np.zeros(ncomp - first_comp, dtype=np.int64)
                for i in range(nb):
                    r = _find(row, members[i])
                    s = slot[r]
                    if s >= 0:
                        comp_verts[comp_ptr[s] + fill[s - first_comp]] = members[i]
                        fill[s - first_comp] += 1
                nverts = comp_ptr[ncomp]
                sets = _grow(sets, (nsets + 1) * h)
                for t in range(h):
                    sets[nsets * h + t] = cur[t] if t < size else -1
                nsets += 1
                set_ptr = _grow(set_ptr, nsets + 1)
                set_ptr[nsets] = ncomp
            for i in range(nb):
                r = _find(row, members[i])
                cnt[r] = 0
                slot[r] = -1
        if size < h and c + 1 < k:
            depth += 1
            cur[depth] = c + 1
        else:
            cur[depth] += 1
    return (visited, sets[:nsets * h].reshape((nsets, h)), set_ptr[:nsets + 1],
            comp_ptr[:ncomp + 1], comp_verts[:nverts])
