# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the pure-Python kernels in ``pure``.

Same signatures and same results; permutation sweeps run entirely in C with
lexicographic permutation stepping.  Inputs longer than the fixed buffers
are delegated to the pure implementation.
"""

from . import pure as _pure

cdef enum:
    MAXN = 48


cdef int _insert_sch(int* values, int n, int rows[MAXN][MAXN + 2], int* lens) nogil:
    """Run the triangular insertion of values[0..n-1]; returns row count."""
    cdef int nrows = 0
    cdef int k, alpha, i, j, L, beta
    for k in range(n):
        alpha = values[k]
        i = 0
        while True:
            if i == nrows:
                rows[i][0] = alpha
                lens[i] = 1
                nrows += 1
                break
            L = lens[i]
            if alpha > rows[i][L - 1]:
                rows[i][L] = alpha
                lens[i] = L + 1
                break
            j = 0
            while rows[i][j] < alpha:
                j += 1
            if (j + 1) % 2 == 0:
                beta = rows[i][j]
                rows[i][j] = alpha
                alpha = beta
                i += 1
            elif j + 1 < L:
                beta = rows[i][j + 1]
                rows[i][j + 1] = rows[i][j]
                rows[i][j] = alpha
                alpha = beta
                i += 1
            else:
                rows[i][L] = rows[i][j]
                rows[i][j] = alpha
                lens[i] = L + 1
                break
    return nrows


cdef int _insert_rs(int* values, int n, int rows[MAXN][MAXN + 2], int* lens) nogil:
    cdef int nrows = 0
    cdef int k, alpha, i, j, L, beta
    for k in range(n):
        alpha = values[k]
        i = 0
        while True:
            if i == nrows:
                rows[i][0] = alpha
                lens[i] = 1
                nrows += 1
                break
            L = lens[i]
            if alpha > rows[i][L - 1]:
                rows[i][L] = alpha
                lens[i] = L + 1
                break
            j = 0
            while rows[i][j] < alpha:
                j += 1
            beta = rows[i][j]
            rows[i][j] = alpha
            alpha = beta
            i += 1
    return nrows


cdef bint _contains(int* seq, int n, int* pat, int k) nogil:
    cdef int chosen[MAXN]
    return _contains_rec(seq, n, pat, k, chosen, 0, 0)


cdef bint _contains_rec(int* seq, int n, int* pat, int k, int* chosen,
                        int m, int start) nogil:
    cdef int idx, t, v
    cdef bint ok
    for idx in range(start, n - (k - m) + 1):
        v = seq[idx]
        ok = True
        for t in range(m):
            if (pat[t] < pat[m]) != (chosen[t] < v):
                ok = False
                break
        if ok:
            chosen[m] = v
            if m + 1 == k:
                return True
            if _contains_rec(seq, n, pat, k, chosen, m + 1, idx + 1):
                return True
    return False


cdef bint _single_row_pred(int* values, int n) nogil:
    cdef int i, a, b, lo, hi
    for i in range(0, n - 1, 2):
        a = values[i]
        b = values[i + 1]
        if a < b:
            lo = a; hi = b
        else:
            lo = b; hi = a
        if lo != i + 1 or hi != i + 2:
            return False
    if n % 2 == 1 and values[n - 1] != n:
        return False
    return True


cdef bint _next_permutation(int* perm, int n) nogil:
    cdef int i = n - 2
    cdef int j, tmp, lo, hi
    while i >= 0 and perm[i] >= perm[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while perm[j] <= perm[i]:
        j -= 1
    tmp = perm[i]; perm[i] = perm[j]; perm[j] = tmp
    lo = i + 1; hi = n - 1
    while lo < hi:
        tmp = perm[lo]; perm[lo] = perm[hi]; perm[hi] = tmp
        lo += 1; hi -= 1
    return True


def sch_rows(values):
    cdef int n = len(values)
    if n > MAXN:
        return _pure.sch_rows(values)
    return _rows_impl(values, n, True)


def rs_rows(values):
    cdef int n = len(values)
    if n > MAXN:
        return _pure.rs_rows(values)
    return _rows_impl(values, n, False)


cdef _rows_impl(values, int n, bint schroeder):
    cdef int buf[MAXN]
    cdef int rows[MAXN][MAXN + 2]
    cdef int lens[MAXN]
    cdef int qrows[MAXN][MAXN + 2]
    cdef int qlens[MAXN]
    cdef int k, alpha, i, j, L, beta, nrows
    for k in range(n):
        buf[k] = values[k]
    nrows = 0
    # rerun the insertion, recording where each step grows the shape
    for k in range(n):
        alpha = buf[k]
        i = 0
        while True:
            if i == nrows:
                rows[i][0] = alpha
                lens[i] = 1
                qrows[i][0] = k + 1
                qlens[i] = 1
                nrows += 1
                break
            L = lens[i]
            if alpha > rows[i][L - 1]:
                rows[i][L] = alpha
                lens[i] = L + 1
                qrows[i][qlens[i]] = k + 1
                qlens[i] += 1
                break
            j = 0
            while rows[i][j] < alpha:
                j += 1
            if not schroeder:
                beta = rows[i][j]
                rows[i][j] = alpha
                alpha = beta
                i += 1
            elif (j + 1) % 2 == 0:
                beta = rows[i][j]
                rows[i][j] = alpha
                alpha = beta
                i += 1
            elif j + 1 < L:
                beta = rows[i][j + 1]
                rows[i][j + 1] = rows[i][j]
                rows[i][j] = alpha
                alpha = beta
                i += 1
            else:
                rows[i][L] = rows[i][j]
                rows[i][j] = alpha
                lens[i] = L + 1
                qrows[i][qlens[i]] = k + 1
                qlens[i] += 1
                break
    p_out = tuple(tuple(rows[i][j] for j in range(lens[i])) for i in range(nrows))
    q_out = tuple(tuple(qrows[i][j] for j in range(qlens[i])) for i in range(nrows))
    return p_out, q_out


def contains_pattern(values, pattern):
    cdef int n = len(values)
    cdef int k = len(pattern)
    if k == 0:
        return True
    if k > n:
        return False
    if n > MAXN:
        return _pure.contains_pattern(values, pattern)
    cdef int seq[MAXN]
    cdef int pat[MAXN]
    cdef int i
    for i in range(n):
        seq[i] = values[i]
    for i in range(k):
        pat[i] = pattern[i]
    return bool(_contains(seq, n, pat, k))


def single_row_predicate(values):
    cdef int n = len(values)
    if n > MAXN:
        return _pure.single_row_predicate(values)
    cdef int seq[MAXN]
    cdef int i
    for i in range(n):
        seq[i] = values[i]
    return bool(_single_row_pred(seq, n))


def sweep_row_col(int n):
    if n < 1 or n > 12:
        raise ValueError("sweep supports 1 <= n <= 12")
    cdef int perm[MAXN]
    cdef int rows[MAXN][MAXN + 2]
    cdef int lens[MAXN]
    cdef int pat123[3]
    cdef int pat213[3]
    cdef int i, nrows
    cdef bint ins_row, ins_col, pred_row, pred_col
    cdef long row_count = 0, col_count = 0
    pat123[0] = 1; pat123[1] = 2; pat123[2] = 3
    pat213[0] = 2; pat213[1] = 1; pat213[2] = 3
    for i in range(n):
        perm[i] = i + 1
    row_mismatches = []
    col_mismatches = []
    while True:
        nrows = _insert_sch(perm, n, rows, lens)
        ins_row = nrows == 1
        ins_col = lens[0] <= 2
        if ins_row:
            row_count += 1
        if ins_col:
            col_count += 1
        pred_row = _single_row_pred(perm, n)
        pred_col = not _contains(perm, n, pat123, 3) and not _contains(perm, n, pat213, 3)
        if ins_row != pred_row:
            row_mismatches.append(tuple(perm[i] for i in range(n)))
        if ins_col != pred_col:
            col_mismatches.append(tuple(perm[i] for i in range(n)))
        if not _next_permutation(perm, n):
            break
    return row_count, col_count, row_mismatches, col_mismatches


def sweep_rs_shapes(int n):
    if n < 1 or n > 12:
        raise ValueError("sweep supports 1 <= n <= 12")
    cdef int perm[MAXN]
    cdef int rows[MAXN][MAXN + 2]
    cdef int lens[MAXN]
    cdef int i, nrows
    for i in range(n):
        perm[i] = i + 1
    counts = {}
    while True:
        nrows = _insert_rs(perm, n, rows, lens)
        shape = tuple(lens[i] for i in range(nrows))
        counts[shape] = counts.get(shape, 0) + 1
        if not _next_permutation(perm, n):
            break
    return counts


def sweep_sch_shapes(int n):
    if n < 1 or n > 12:
        raise ValueError("sweep supports 1 <= n <= 12")
    cdef int perm[MAXN]
    cdef int rows[MAXN][MAXN + 2]
    cdef int lens[MAXN]
    cdef int i, nrows
    for i in range(n):
        perm[i] = i + 1
    counts = {}
    while True:
        nrows = _insert_sch(perm, n, rows, lens)
        shape = tuple(lens[i] for i in range(nrows))
        counts[shape] = counts.get(shape, 0) + 1
        if not _next_permutation(perm, n):
            break
    return counts
