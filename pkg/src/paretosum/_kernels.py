"""Compiled inner loops for the array-heavy algorithms.

Inputs are the coordinate arrays of two Pareto sets (ax, ay strictly
increasing / decreasing, likewise bx, by). Matrix cell (i, j) is
(ax[i] + bx[j], ay[i] + by[j]); columns are indexed by j and are sorted
Pareto sequences in i. All kernels are allocation-light and return plain
tuples; the wrappers in base.py / successive.py own the contracts.
"""

from __future__ import annotations

import numpy as np
from numba import njit

I64 = np.int64


@njit(cache=True)
def _grow(arr, cap):
    out = np.empty(cap, I64)
    out[: arr.shape[0]] = arr
    return out


@njit(cache=True)
def brute_force_kernel(ax, ay, bx, by):
    """Pairwise-comparison survivors, column-major candidate order.

    Every candidate is compared against all matrix cells (computed on
    demand, one column at a time, nearest columns first), stopping only
    when a dominator turns up; a surviving candidate has been compared
    against the whole matrix, so each check costs O(|M|) comparisons.
    Returns (survivor_x, survivor_y, checks, cells): candidate-level
    dominance checks and individual cell comparisons.
    """
    na = ax.shape[0]
    nb = bx.shape[0]
    cap = 256
    out_x = np.empty(cap, I64)
    out_y = np.empty(cap, I64)
    m = 0
    checks = 0
    cells = 0
    for j in range(nb):
        for i in range(na):
            px = ax[i] + bx[j]
            py = ay[i] + by[j]
            checks += 1
            dominated = False
            for d in range(nb):
                j2 = j - d
                for side in range(2):
                    if side == 1:
                        if d == 0:
                            continue
                        j2 = j + d
                    if j2 < 0 or j2 >= nb:
                        continue
                    qx0 = bx[j2]
                    qy0 = by[j2]
                    for i2 in range(na):
                        qx = ax[i2] + qx0
                        qy = ay[i2] + qy0
                        if qx <= px and qy <= py and (qx < px or qy < py):
                            dominated = True
                            break
                    cells += i2 + 1
                    if dominated:
                        break
                if dominated or (j - d < 0 and j + d >= nb):
                    break
            if not dominated:
                if m == cap:
                    cap *= 2
                    out_x = _grow(out_x, cap)
                    out_y = _grow(out_y, cap)
                out_x[m] = px
                out_y[m] = py
                m += 1
    return out_x[:m], out_y[:m], checks, cells


@njit(cache=True)
def _column_dominates(ax, ay, bx, by, j2, px, py):
    """BS column test: does column j2 contain a cell strictly dominating p?

    Two binary searches give the witness interval [i_lo, i_hi] of cells that
    are coordinate-wise <= p; domination holds unless the interval is the
    single cell equal to p (distinct cells of one column never coincide).
    """
    na = ax.shape[0]
    tx = px - bx[j2]
    lo = 0
    hi = na
    while lo < hi:
        mid = (lo + hi) >> 1
        if ax[mid] <= tx:
            lo = mid + 1
        else:
            hi = mid
    i_hi = lo - 1
    if i_hi < 0:
        return False
    ty = py - by[j2]
    lo = 0
    hi = na
    while lo < hi:
        mid = (lo + hi) >> 1
        if ay[mid] > ty:
            lo = mid + 1
        else:
            hi = mid
    i_lo = lo
    if i_lo > i_hi:
        return False
    if i_hi > i_lo:
        return True
    return ax[i_lo] + bx[j2] != px or ay[i_lo] + by[j2] != py


@njit(cache=True)
def _dominated_by_search(ax, ay, bx, by, i, j, px, py):
    """Scan columns outward from j with per-direction cutoffs.

    A column whose minimum cell y exceeds p.y cannot dominate p, and
    neither can any column further left; the symmetric cutoff on minimum
    cell x ends the rightward direction.
    """
    na = ax.shape[0]
    nb = bx.shape[0]
    ay_min = ay[na - 1]
    ax_min = ax[0]
    left = j - 1
    right = j + 1
    left_open = True
    right_open = True
    while left_open or right_open:
        if left_open:
            if left < 0 or ay_min + by[left] > py:
                left_open = False
            else:
                if _column_dominates(ax, ay, bx, by, left, px, py):
                    return True
                left -= 1
        if right_open:
            if right >= nb or ax_min + bx[right] > px:
                right_open = False
            else:
                if _column_dominates(ax, ay, bx, by, right, px, py):
                    return True
                right += 1
    return False


@njit(cache=True)
def binary_search_kernel(ax, ay, bx, by):
    """BS survivors: per candidate, per-column double binary search."""
    na = ax.shape[0]
    nb = bx.shape[0]
    cap = 256
    out_x = np.empty(cap, I64)
    out_y = np.empty(cap, I64)
    m = 0
    checks = 0
    for j in range(nb):
        for i in range(na):
            px = ax[i] + bx[j]
            py = ay[i] + by[j]
            checks += 1
            if not _dominated_by_search(ax, ay, bx, by, i, j, px, py):
                if m == cap:
                    cap *= 2
                    out_x = _grow(out_x, cap)
                    out_y = _grow(out_y, cap)
                out_x[m] = px
                out_y[m] = py
                m += 1
    return out_x[:m], out_y[:m], checks


@njit(cache=True)
def _mark_intervals(ax, ay, bx, by, px, py, ilo, ihi):
    """Record, per column, the row interval dominated by confirmed point p.

    Cells with both coordinates >= p form one contiguous row interval per
    column; only the longest interval seen so far is kept per column.
    """
    na = ax.shape[0]
    nb = bx.shape[0]
    for j2 in range(nb):
        tx = px - bx[j2]
        lo = 0
        hi = na
        while lo < hi:
            mid = (lo + hi) >> 1
            if ax[mid] < tx:
                lo = mid + 1
            else:
                hi = mid
        s = lo  # first row with x >= p.x
        if s >= na:
            continue
        ty = py - by[j2]
        lo = 0
        hi = na
        while lo < hi:
            mid = (lo + hi) >> 1
            if ay[mid] >= ty:
                lo = mid + 1
            else:
                hi = mid
        t = lo - 1  # last row with y >= p.y
        if t < s:
            continue
        if t - s > ihi[j2] - ilo[j2]:
            ilo[j2] = s
            ihi[j2] = t
    return


@njit(cache=True)
def priority_binary_search_kernel(ax, ay, bx, by, seed_i, seed_j):
    """PBS survivors: BS checks with seeded dominated intervals and a visit
    order that prioritizes the rows/columns of the convex-seed cells.

    seed_i/seed_j hold the cell provenance of the convex seed C'. Returns
    (survivor_x, survivor_y, checks, skipped); survivors exclude C' itself.
    """
    na = ax.shape[0]
    nb = bx.shape[0]
    ilo = np.empty(nb, I64)
    ihi = np.empty(nb, I64)
    for j in range(nb):
        ilo[j] = 1
        ihi[j] = 0
    row_seeded = np.zeros(na, np.bool_)
    col_seeded = np.zeros(nb, np.bool_)
    for s in range(seed_i.shape[0]):
        i = seed_i[s]
        j = seed_j[s]
        row_seeded[i] = True
        col_seeded[j] = True
        _mark_intervals(ax, ay, bx, by, ax[i] + bx[j], ay[i] + by[j], ilo, ihi)

    cap = 256
    out_x = np.empty(cap, I64)
    out_y = np.empty(cap, I64)
    m = 0
    checks = 0
    skipped = 0
    for phase in range(3):
        for j in range(nb):
            if (phase == 0) != col_seeded[j]:
                continue
            for i in range(na):
                if phase == 0:
                    pass
                elif (phase == 1) != row_seeded[i]:
                    continue
                if ilo[j] <= i <= ihi[j]:
                    skipped += 1
                    continue
                px = ax[i] + bx[j]
                py = ay[i] + by[j]
                checks += 1
                if not _dominated_by_search(ax, ay, bx, by, i, j, px, py):
                    if m == cap:
                        cap *= 2
                        out_x = _grow(out_x, cap)
                        out_y = _grow(out_y, cap)
                    out_x[m] = px
                    out_y[m] = py
                    m += 1
                    _mark_intervals(ax, ay, bx, by, px, py, ilo, ihi)
    return out_x[:m], out_y[:m], checks, skipped


@njit(cache=True)
def sort_compare_init(ax, ay, bx, by, hx, hy, hi, hj):
    """Fill the frontier heap with the first matrix row (already heap-ordered
    because row cells are lexicographically increasing in j)."""
    nb = bx.shape[0]
    for j in range(nb):
        hx[j] = ax[0] + bx[j]
        hy[j] = ay[0] + by[j]
        hi[j] = 0
        hj[j] = j
    return nb


@njit(cache=True)
def sort_compare_chunk(ax, ay, bx, by, hx, hy, hi, hj, state, out_x, out_y):
    """Pop/emit/advance until the heap empties or the chunk buffer fills.

    state: [heap_size, started, last_y, heap_peak, cells]. Returns emitted
    count; heap empty iff state[0] == 0 afterwards.
    """
    na = ax.shape[0]
    size = state[0]
    started = state[1]
    last_y = state[2]
    peak = state[3]
    cells = state[4]
    cap = out_x.shape[0]
    m = 0
    while size > 0 and m < cap:
        px = hx[0]
        py = hy[0]
        pi = hi[0]
        pj = hj[0]
        cells += 1
        # pop root
        size -= 1
        if size > 0:
            x = hx[size]
            y = hy[size]
            ii = hi[size]
            jj = hj[size]
            k = 0
            while True:
                c = 2 * k + 1
                if c >= size:
                    break
                if c + 1 < size and (hx[c + 1] < hx[c] or (hx[c + 1] == hx[c] and hy[c + 1] < hy[c])):
                    c += 1
                if hx[c] < x or (hx[c] == x and hy[c] < y):
                    hx[k] = hx[c]
                    hy[k] = hy[c]
                    hi[k] = hi[c]
                    hj[k] = hj[c]
                    k = c
                else:
                    break
            hx[k] = x
            hy[k] = y
            hi[k] = ii
            hj[k] = jj
        if started == 0 or py < last_y:
            out_x[m] = px
            out_y[m] = py
            m += 1
            last_y = py
            started = 1
        # advance down the column past cells dominated by the last emission
        i2 = pi + 1
        while i2 < na:
            cells += 1
            if ay[i2] + by[pj] < last_y:
                break
            i2 += 1
        if i2 < na:
            x2 = ax[i2] + bx[pj]
            y2 = ay[i2] + by[pj]
            k = size
            size += 1
            while k > 0:
                parent = (k - 1) >> 1
                if hx[parent] > x2 or (hx[parent] == x2 and hy[parent] > y2):
                    hx[k] = hx[parent]
                    hy[k] = hy[parent]
                    hi[k] = hi[parent]
                    hj[k] = hj[parent]
                    k = parent
                else:
                    break
            hx[k] = x2
            hy[k] = y2
            hi[k] = i2
            hj[k] = pj
            if size > peak:
                peak = size
    state[0] = size
    state[1] = started
    state[2] = last_y
    state[3] = peak
    state[4] = cells
    return m


@njit(cache=True)
def sweep_kernel(ax, ay, bx, by, x_min, y_max, has_xmax, x_max, has_ymin, y_min, delta):
    """Single left-to-right staircase sweep for the range minimum.

    Walks upward per column while the cell above still satisfies the
    lower-left constraints (x >= x_min, y < y_max); the boundary cell is the
    column's only candidate and is accepted if it also satisfies the optional
    x_max / y_min bounds. With delta > 1, row walks and column advances in
    the dead zone attempt delta-jumps first and fall back to single steps.

    Returns (found, i, j, cells_inspected, jumps).
    """
    na = ax.shape[0]
    nb = bx.shape[0]
    best_i = -1
    best_j = -1
    best_x = I64(0)
    best_y = I64(0)
    cells = 0
    jumps = 0
    i = na - 1
    j = 0
    while j < nb:
        cx = ax[i] + bx[j]
        cy = ay[i] + by[j]
        cells += 1
        if cx < x_min or cy >= y_max:
            # only possible while still on the bottom row: the column has no
            # cell inside the lower-left constraints
            if delta > 1:
                while j + delta < nb:
                    cells += 1
                    if ax[i] + bx[j + delta] < x_min or ay[i] + by[j + delta] >= y_max:
                        j += delta
                        jumps += 1
                    else:
                        break
            j += 1
            continue
        while i > 0:
            if delta > 1 and i - delta >= 0:
                cells += 1
                if ax[i - delta] + bx[j] >= x_min and ay[i - delta] + by[j] < y_max:
                    i -= delta
                    jumps += 1
                    continue
            cells += 1
            if ax[i - 1] + bx[j] >= x_min and ay[i - 1] + by[j] < y_max:
                i -= 1
            else:
                break
        cx = ax[i] + bx[j]
        cy = ay[i] + by[j]
        ok = True
        if has_xmax and cx >= x_max:
            ok = False
        if has_ymin and cy < y_min:
            ok = False
        if ok and (best_i < 0 or cx < best_x or (cx == best_x and cy < best_y)):
            best_i = i
            best_j = j
            best_x = cx
            best_y = cy
        j += 1
    return best_i >= 0, best_i, best_j, cells, jumps


@njit(cache=True)
def binary_oracle_kernel(ax, ay, bx, by, x_min, y_max, has_xmax, x_max, has_ymin, y_min):
    """Range minimum via four binary searches per column.

    Returns (found, i, j, probes) where probes counts column probes.
    """
    na = ax.shape[0]
    nb = bx.shape[0]
    best_i = -1
    best_j = -1
    best_x = I64(0)
    best_y = I64(0)
    probes = 0
    for j in range(nb):
        probes += 1
        # f_x: first row with x >= x_min
        tx = x_min - bx[j]
        lo = 0
        hi = na
        while lo < hi:
            mid = (lo + hi) >> 1
            if ax[mid] < tx:
                lo = mid + 1
            else:
                hi = mid
        f = lo
        # f_y: first row with y < y_max
        ty = y_max - by[j]
        lo = 0
        hi = na
        while lo < hi:
            mid = (lo + hi) >> 1
            if ay[mid] >= ty:
                lo = mid + 1
            else:
                hi = mid
        if lo > f:
            f = lo
        if f >= na:
            continue
        last = na - 1
        if has_xmax:
            # l_x: last row with x < x_max
            tx = x_max - bx[j]
            lo = 0
            hi = na
            while lo < hi:
                mid = (lo + hi) >> 1
                if ax[mid] < tx:
                    lo = mid + 1
                else:
                    hi = mid
            if lo - 1 < last:
                last = lo - 1
        if has_ymin:
            # l_y: last row with y >= y_min
            ty = y_min - by[j]
            lo = 0
            hi = na
            while lo < hi:
                mid = (lo + hi) >> 1
                if ay[mid] >= ty:
                    lo = mid + 1
                else:
                    hi = mid
            if lo - 1 < last:
                last = lo - 1
        if f > last:
            continue
        cx = ax[f] + bx[j]
        cy = ay[f] + by[j]
        if best_i < 0 or cx < best_x or (cx == best_x and cy < best_y):
            best_i = f
            best_j = j
            best_x = cx
            best_y = cy
    return best_i >= 0, best_i, best_j, probes


_WARMED = False


def warm() -> None:
    """Trigger JIT compilation (disk-cached) of every kernel on a tiny instance."""
    global _WARMED
    if _WARMED:
        return
    ax = np.array([0, 2], I64)
    ay = np.array([3, 0], I64)
    brute_force_kernel(ax, ay, ax, ay)
    binary_search_kernel(ax, ay, ax, ay)
    priority_binary_search_kernel(ax, ay, ax, ay, np.array([0], I64), np.array([0], I64))
    hx = np.empty(2, I64)
    hy = np.empty(2, I64)
    hi = np.empty(2, I64)
    hj = np.empty(2, I64)
    state = np.zeros(5, I64)
    state[0] = sort_compare_init(ax, ay, ax, ay, hx, hy, hi, hj)
    out = np.empty(8, I64)
    sort_compare_chunk(ax, ay, ax, ay, hx, hy, hi, hj, state, out, out.copy())
    sweep_kernel(ax, ay, ax, ay, I64(0), I64(10), False, I64(0), False, I64(0), 2)
    binary_oracle_kernel(ax, ay, ax, ay, I64(0), I64(10), False, I64(0), False, I64(0))
    _WARMED = True
