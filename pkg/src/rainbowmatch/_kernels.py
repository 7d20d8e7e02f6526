"""Bitmask kernels behind the matching, decomposition and rainbow solvers.

Graphs on n <= ~22 vertices are handled as arrays of int64 adjacency
bitmasks (``adj[v]`` = neighbours of v).  Every hot loop lives here so it
can be compiled with numba; set ``RAINBOW_NO_NUMBA=1`` to run the identical
code as plain Python (orders of magnitude slower -- useful as a debugging
baseline, see benchmarks/bench_kernels.py).
"""

from __future__ import annotations

import os

import numpy as np

USE_NUMBA = os.environ.get("RAINBOW_NO_NUMBA", "0") not in ("1", "true", "yes")

if USE_NUMBA:
    from numba import njit
else:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _lowbit_index(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


# ---------------------------------------------------------------------------
# Matching numbers of all induced subgraphs (subset DP)
# ---------------------------------------------------------------------------


@njit(cache=True)
def matching_table_into(adj, dp):
    """Fill dp[mask] = maximum matching size of the subgraph induced by `mask`."""
    n = adj.shape[0]
    dp[0] = 0
    for mask in range(1, 1 << n):
        low = mask & (-mask)
        v = _lowbit_index(low)
        rest = mask ^ low
        best = dp[rest]
        nbrs = adj[v] & rest
        while nbrs:
            ub = nbrs & (-nbrs)
            nbrs ^= ub
            cand = 1 + dp[rest ^ ub]
            if cand > best:
                best = cand
        dp[mask] = best


@njit(cache=True)
def matching_table(adj):
    n = adj.shape[0]
    dp = np.zeros(1 << n, dtype=np.int8)
    matching_table_into(adj, dp)
    return dp


# ---------------------------------------------------------------------------
# Gallai-Edmonds: canonical partition, components, brute-force oracle, checks
# ---------------------------------------------------------------------------


@njit(cache=True)
def ge_masks(adj, dp):
    """Canonical partition (D, A, C) as bitmasks.

    D = vertices v with nu(G - v) = nu(G), i.e. missed by some maximum
    matching; A = neighbours of D outside it; C = the rest.
    """
    n = adj.shape[0]
    full = (1 << n) - 1
    nu = dp[full]
    D = 0
    for v in range(n):
        if dp[full ^ (1 << v)] == nu:
            D |= 1 << v
    A = 0
    for v in range(n):
        if not (D >> v) & 1 and adj[v] & D:
            A |= 1 << v
    return D, A, full ^ D ^ A


@njit(cache=True)
def component_masks(adj, sub, out):
    """Connected components of the subgraph induced by `sub`, in order of
    their lowest vertex.  Returns the component count."""
    cnt = 0
    left = sub
    while left:
        comp = left & (-left)
        frontier = comp
        while frontier:
            new = 0
            f = frontier
            while f:
                lb = f & (-f)
                f ^= lb
                new |= adj[_lowbit_index(lb)] & sub
            frontier = new & ~comp
            comp |= frontier
        out[cnt] = comp
        cnt += 1
        left &= ~comp
    return cnt


@njit(cache=True)
def missed_by_maximum_matchings(adj):
    """Union of vertices missed by at least one maximum matching, found by
    enumerating every matching explicitly (no reuse of the subset DP)."""
    n = adj.shape[0]
    full = (1 << n) - 1
    best = -1
    missed = 0
    pool_st = np.empty(n + 2, np.int64)
    cov_st = np.empty(n + 2, np.int64)
    cand_st = np.empty(n + 2, np.int64)
    pivot_st = np.empty(n + 2, np.int64)
    d = 0
    pool_st[0] = full
    cov_st[0] = 0
    cand_st[0] = -1
    while d >= 0:
        if cand_st[d] == -1:
            pool = pool_st[d]
            cov = cov_st[d]
            size = _popcount(cov) >> 1
            if pool == 0:
                if size > best:
                    best = size
                    missed = full & ~cov
                elif size == best:
                    missed |= full & ~cov
                d -= 1
                continue
            if size + (_popcount(pool) >> 1) < best:
                d -= 1
                continue
            low = pool & (-pool)
            pivot_st[d] = low
            cand_st[d] = adj[_lowbit_index(low)] & pool
            # branch 1: pivot stays unmatched
            pool_st[d + 1] = pool ^ low
            cov_st[d + 1] = cov
            cand_st[d + 1] = -1
            d += 1
        elif cand_st[d] != 0:
            ub = cand_st[d] & (-cand_st[d])
            cand_st[d] ^= ub
            low = pivot_st[d]
            pool_st[d + 1] = pool_st[d] ^ low ^ ub
            cov_st[d + 1] = cov_st[d] | low | ub
            cand_st[d + 1] = -1
            d += 1
        else:
            d -= 1
    return missed


@njit(cache=True)
def bip_matching(nbr, n_right, match_right):
    """Maximum bipartite matching (BFS augmenting paths).

    nbr[i] = bitmask of right-side neighbours of left vertex i.  Fills
    match_right (right index -> left index, -1 if free) and returns the size.
    """
    m = nbr.shape[0]
    for i in range(n_right):
        match_right[i] = -1
    size = 0
    parent_right = np.empty(n_right, np.int64)
    prev_left = np.empty(m, np.int64)
    queue = np.empty(m, np.int64)
    for a0 in range(m):
        for i in range(n_right):
            parent_right[i] = -1
        for i in range(m):
            prev_left[i] = -1
        qh = 0
        qt = 0
        queue[qt] = a0
        qt += 1
        found = -1
        while qh < qt and found < 0:
            a = queue[qh]
            qh += 1
            nb = nbr[a]
            while nb:
                lb = nb & (-nb)
                nb ^= lb
                b = _lowbit_index(lb)
                if parent_right[b] >= 0:
                    continue
                parent_right[b] = a
                if match_right[b] < 0:
                    found = b
                    break
                a2 = match_right[b]
                if prev_left[a2] < 0 and a2 != a0:
                    prev_left[a2] = lb
                    queue[qt] = a2
                    qt += 1
        if found >= 0:
            b = found
            while b >= 0:
                a = parent_right[b]
                nb2 = prev_left[a]
                match_right[b] = a
                if a == a0 or nb2 < 0:
                    break
                b = _lowbit_index(nb2)
            size += 1
    return size


@njit(cache=True)
def ge_verify(adj, dp, D, A, C):
    """Check the five structural properties of the canonical partition.

    Returns a bitmask of failures: bit 0 (a) factor-critical D-components,
    bit 1 (b) perfect matching on C, bit 2 (c) positive surplus from A,
    bit 3 (d) canonical maximum matching exists, bit 4 (e) size formula.
    """
    n = adj.shape[0]
    full = (1 << n) - 1
    fails = 0
    comps = np.empty(n if n > 0 else 1, np.int64)
    q = component_masks(adj, D, comps)
    odd_sum = 0
    for i in range(q):
        comp = comps[i]
        sz = _popcount(comp)
        if sz % 2 == 0:
            fails |= 1
        odd_sum += (sz - 1) >> 1
        m = comp
        while m:
            lb = m & (-m)
            m ^= lb
            if dp[comp ^ lb] != (sz - 1) >> 1:
                fails |= 1
    if 2 * dp[C] != _popcount(C):
        fails |= 2
    s = _popcount(A)
    if s > 0:
        a_nbr = np.empty(s, np.int64)
        t = 0
        m = A
        while m:
            lb = m & (-m)
            m ^= lb
            av = _lowbit_index(lb)
            cm = 0
            for i in range(q):
                if adj[av] & comps[i]:
                    cm |= 1 << i
            a_nbr[t] = cm
            t += 1
        for S in range(1, 1 << s):
            un = 0
            ss = S
            while ss:
                lb = ss & (-ss)
                ss ^= lb
                un |= a_nbr[_lowbit_index(lb)]
            if _popcount(un) <= _popcount(S):
                fails |= 4
                break
        match_right = np.empty(q if q > 0 else 1, np.int64)
        if bip_matching(a_nbr, q, match_right) < s:
            fails |= 8
    # size of the canonical matching: A saturated into distinct components,
    # near-perfect inside each D-component, perfect on C
    if dp[full] != s + odd_sum + (_popcount(C) >> 1):
        fails |= 8
    if 2 * dp[full] != n - q + s:
        fails |= 16
    return fails


@njit(cache=True)
def ge_exhaustive_scan(n):
    """Run decompose-vs-oracle and the five-property check on every labelled
    graph on n vertices.  Returns (#D mismatches, #property failures,
    first offending edge mask or -1)."""
    E = n * (n - 1) // 2
    eu = np.empty(E, np.int64)
    ev = np.empty(E, np.int64)
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            eu[idx] = u
            ev[idx] = v
            idx += 1
    adj = np.zeros(n, np.int64)
    dp = np.zeros(1 << n, np.int8)
    mismatches = 0
    prop_failures = 0
    first_bad = -1
    for gmask in range(1 << E):
        for v in range(n):
            adj[v] = 0
        gm = gmask
        while gm:
            lb = gm & (-gm)
            gm ^= lb
            i = _lowbit_index(lb)
            adj[eu[i]] |= 1 << ev[i]
            adj[ev[i]] |= 1 << eu[i]
        matching_table_into(adj, dp)
        D, A, C = ge_masks(adj, dp)
        if missed_by_maximum_matchings(adj) != D:
            mismatches += 1
            if first_bad < 0:
                first_bad = gmask
        if ge_verify(adj, dp, D, A, C) != 0:
            prop_failures += 1
            if first_bad < 0:
                first_bad = gmask
    return mismatches, prop_failures, first_bad


# ---------------------------------------------------------------------------
# Exact maximum rainbow matching (branch and bound)
# ---------------------------------------------------------------------------


@njit(cache=True)
def rainbow_search(colmat, c, need, out_u, out_v):
    """Exact maximum rainbow matching in an edge-colored complete graph.

    colmat is the symmetric n x n color matrix with entries 1..c.  Branches
    on the lowest uncovered vertex (match it with any unused color, or leave
    it unmatched), pruning with min(remaining vertices / 2, unused colors).
    With need > 0 the search stops at the first rainbow matching of `need`
    edges.  The best witness is written to out_u/out_v; returns its size.
    """
    n = colmat.shape[0]
    full = (1 << n) - 1
    used = np.zeros(c + 1, np.uint8)
    avail_st = np.empty(n + 2, np.int64)
    pivot_st = np.empty(n + 2, np.int64)
    part_st = np.empty(n + 2, np.int64)
    state_st = np.empty(n + 2, np.int8)
    edge_color_st = np.zeros(n + 2, np.int64)
    cur_u = np.empty(n // 2 + 2, np.int64)
    cur_v = np.empty(n // 2 + 2, np.int64)
    best = 0
    cnt = 0
    d = 0
    avail_st[0] = full
    state_st[0] = 0
    edge_color_st[0] = 0
    while d >= 0:
        state = state_st[d]
        if state == 0:
            if cnt > best:
                best = cnt
                for j in range(cnt):
                    out_u[j] = cur_u[j]
                    out_v[j] = cur_v[j]
                if need > 0 and best >= need:
                    return best
            avail = avail_st[d]
            rem = _popcount(avail) >> 1
            if c - cnt < rem:
                rem = c - cnt
            if cnt + rem <= best or avail == 0:
                state_st[d] = 3
                continue
            low = avail & (-avail)
            pivot_st[d] = low
            part_st[d] = avail ^ low
            state_st[d] = 1
            continue
        if state == 1:
            pushed = False
            while part_st[d]:
                ub = part_st[d] & (-part_st[d])
                part_st[d] ^= ub
                pv = _lowbit_index(pivot_st[d])
                u = _lowbit_index(ub)
                col = colmat[pv, u]
                if used[col]:
                    continue
                used[col] = 1
                cur_u[cnt] = pv
                cur_v[cnt] = u
                cnt += 1
                avail_st[d + 1] = avail_st[d] ^ pivot_st[d] ^ ub
                state_st[d + 1] = 0
                edge_color_st[d + 1] = col
                d += 1
                pushed = True
                break
            if pushed:
                continue
            # all partners tried: branch where the pivot stays unmatched
            state_st[d] = 2
            avail_st[d + 1] = avail_st[d] ^ pivot_st[d]
            state_st[d + 1] = 0
            edge_color_st[d + 1] = 0
            d += 1
            continue
        # state 2 or 3: frame exhausted; undo the edge that created it
        if edge_color_st[d] > 0:
            used[edge_color_st[d]] = 0
            cnt -= 1
        d -= 1
    return best


@njit(cache=True)
def completion_sweep(colmat, fu, fv, palette, c, k, exhaustive, trials, seed):
    """Complete a partially colored K_n over all (or `trials` random) palette
    assignments of the free edges fu/fv and count completions that contain
    no rainbow k-matching.  Returns (#checked, #without rainbow kK2,
    odometer index of the first counterexample or -1)."""
    n = colmat.shape[0]
    f = fu.shape[0]
    p = palette.shape[0]
    ou = np.empty(n // 2 + 2, np.int64)
    ov = np.empty(n // 2 + 2, np.int64)
    bad = 0
    first_bad = -1
    checked = 0
    if exhaustive:
        digits = np.zeros(f, np.int64)
        for j in range(f):
            colmat[fu[j], fv[j]] = palette[0]
            colmat[fv[j], fu[j]] = palette[0]
        total = 1
        for j in range(f):
            total *= p
        for it in range(total):
            checked += 1
            if rainbow_search(colmat, c, k, ou, ov) < k:
                bad += 1
                if first_bad < 0:
                    first_bad = it
            # odometer increment
            j = f - 1
            while j >= 0:
                digits[j] += 1
                if digits[j] < p:
                    colmat[fu[j], fv[j]] = palette[digits[j]]
                    colmat[fv[j], fu[j]] = palette[digits[j]]
                    break
                digits[j] = 0
                colmat[fu[j], fv[j]] = palette[0]
                colmat[fv[j], fu[j]] = palette[0]
                j -= 1
    else:
        np.random.seed(seed)
        for it in range(trials):
            for j in range(f):
                col = palette[np.random.randint(0, p)]
                colmat[fu[j], fv[j]] = col
                colmat[fv[j], fu[j]] = col
            checked += 1
            if rainbow_search(colmat, c, k, ou, ov) < k:
                bad += 1
                if first_bad < 0:
                    first_bad = it
    return checked, bad, first_bad


@njit(cache=True)
def sample_surjective_colorings(n, c, k, trials, seed, out_colmat):
    """Sample `trials` uniform colorings of K_n conditioned on using all c
    colors (rejection sampling) and count those with no rainbow k-matching.
    The first counterexample is left in out_colmat."""
    np.random.seed(seed)
    colmat = np.zeros((n, n), np.int32)
    counts = np.zeros(c + 1, np.int64)
    ou = np.empty(n // 2 + 2, np.int64)
    ov = np.empty(n // 2 + 2, np.int64)
    bad = 0
    t = 0
    while t < trials:
        for i in range(c + 1):
            counts[i] = 0
        for u in range(n):
            for v in range(u + 1, n):
                col = 1 + np.random.randint(0, c)
                colmat[u, v] = col
                colmat[v, u] = col
                counts[col] += 1
        surjective = True
        for col in range(1, c + 1):
            if counts[col] == 0:
                surjective = False
                break
        if not surjective:
            continue
        t += 1
        if rainbow_search(colmat, c, k, ou, ov) < k:
            bad += 1
            if bad == 1:
                for u in range(n):
                    for v in range(n):
                        out_colmat[u, v] = colmat[u, v]
    return bad


# ---------------------------------------------------------------------------
# Anti-Ramsey oracle: exhaustive search over colorings as restricted-growth
# strings in canonical edge order
# ---------------------------------------------------------------------------


@njit(cache=True)
def _prefix_rainbow_exists(eu, ev, color, m, avoid, banned, need, used):
    """Rainbow matching of `need` edges among the first m colored edges,
    avoiding the vertex set `avoid` and the color `banned`?"""
    if need <= 0:
        return True
    pos_st = np.empty(need + 1, np.int64)
    pick_st = np.empty(need + 1, np.int64)
    cover = avoid
    cnt = 0
    pos = 0
    while True:
        found = -1
        i = pos
        while i + (need - cnt) <= m:
            if not ((cover >> eu[i]) & 1 or (cover >> ev[i]) & 1):
                col = color[i]
                if col != banned and not used[col]:
                    found = i
                    break
            i += 1
        if found >= 0:
            used[color[found]] = 1
            cover |= (1 << eu[found]) | (1 << ev[found])
            pos_st[cnt] = pos
            pick_st[cnt] = found
            cnt += 1
            if cnt == need:
                for j in range(cnt):
                    used[color[pick_st[j]]] = 0
                return True
            pos = found + 1
        else:
            if cnt == 0:
                return False
            cnt -= 1
            picked = pick_st[cnt]
            used[color[picked]] = 0
            cover ^= (1 << eu[picked]) | (1 << ev[picked])
            pos = picked + 1
    return False


@njit(cache=True)
def f_oracle_search(n, k, budget):
    """Maximum color count of a K_n edge-coloring with no rainbow k-matching.

    Colorings are enumerated as restricted-growth strings over the canonical
    edge order, so color-permutation symmetry is broken exactly once.  A
    prefix is pruned as soon as its colored edges contain a rainbow kK2, or
    when even all-fresh colors on the remaining edges cannot beat the
    incumbent.  Returns (best, best_coloring, nodes, exact_flag); the
    certificate is the lexicographically least maximizing string.
    """
    E = n * (n - 1) // 2
    eu = np.empty(E, np.int64)
    ev = np.empty(E, np.int64)
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            eu[idx] = u
            ev[idx] = v
            idx += 1
    color = np.zeros(E, np.int64)
    maxc = np.zeros(E + 1, np.int64)
    best = 0
    best_color = np.zeros(E, np.int64)
    used = np.zeros(E + 2, np.uint8)
    nodes = 0
    exact = 1
    i = 0
    while i >= 0:
        if i == E:
            if maxc[E] > best:
                best = maxc[E]
                for j in range(E):
                    best_color[j] = color[j]
            i -= 1
            continue
        c_try = color[i] + 1
        if c_try > maxc[i] + 1 or maxc[i] + (E - i) <= best:
            color[i] = 0
            i -= 1
            continue
        color[i] = c_try
        nodes += 1
        if nodes > budget:
            exact = 0
            break
        avoid = (1 << eu[i]) | (1 << ev[i])
        if _prefix_rainbow_exists(eu, ev, color, i, avoid, c_try, k - 1, used):
            continue
        maxc[i + 1] = maxc[i] if maxc[i] >= c_try else c_try
        i += 1
    return best, best_color, nodes, exact


# ---------------------------------------------------------------------------
# Brute-force extremal numbers
# ---------------------------------------------------------------------------


@njit(cache=True)
def ext_scan(n):
    """ans[t] = max edge count over all labelled graphs on n vertices whose
    matching number is at most t (exhaustive over all 2^C(n,2) graphs)."""
    E = n * (n - 1) // 2
    eu = np.empty(E, np.int64)
    ev = np.empty(E, np.int64)
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            eu[idx] = u
            ev[idx] = v
            idx += 1
    adj = np.zeros(n, np.int64)
    dp = np.zeros(1 << n, np.int8)
    ans = np.full(n // 2 + 1, -1, np.int64)
    full = (1 << n) - 1
    for gmask in range(1 << E):
        for v in range(n):
            adj[v] = 0
        gm = gmask
        edges = 0
        while gm:
            lb = gm & (-gm)
            gm ^= lb
            i = _lowbit_index(lb)
            adj[eu[i]] |= 1 << ev[i]
            adj[ev[i]] |= 1 << eu[i]
            edges += 1
        matching_table_into(adj, dp)
        nu = dp[full]
        if edges > ans[nu]:
            ans[nu] = edges
    for t in range(1, n // 2 + 1):
        if ans[t - 1] > ans[t]:
            ans[t] = ans[t - 1]
    return ans


@njit(cache=True)
def ext_bipartite_scan(m, n_right):
    """ans[t] = max edges of a bipartite graph with fixed sides (m, n_right)
    and matching number at most t (exhaustive over all 2^(m*n_right) graphs)."""
    E = m * n_right
    nbr = np.zeros(m, np.int64)
    match_right = np.empty(n_right, np.int64)
    top = m if m < n_right else n_right
    ans = np.full(top + 1, -1, np.int64)
    for gmask in range(1 << E):
        gm = gmask
        for a in range(m):
            nbr[a] = (gm >> (a * n_right)) & ((1 << n_right) - 1)
        nu = bip_matching(nbr, n_right, match_right)
        edges = _popcount(gmask)
        if edges > ans[nu]:
            ans[nu] = edges
    for t in range(1, top + 1):
        if ans[t - 1] > ans[t]:
            ans[t] = ans[t - 1]
    return ans


@njit(cache=True)
def deficiency_exhaustive(nbr, m):
    """max(|S| - |N(S)|) over all S subseteq A by direct subset enumeration.
    Returns (d, first witness subset as a bitmask over A indices)."""
    best = 0
    best_s = 0
    for S in range(1, 1 << m):
        un = 0
        ss = S
        while ss:
            lb = ss & (-ss)
            ss ^= lb
            un |= nbr[_lowbit_index(lb)]
        val = _popcount(S) - _popcount(un)
        if val > best:
            best = val
            best_s = S
    return best, best_s
