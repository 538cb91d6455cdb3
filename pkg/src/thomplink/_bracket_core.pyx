# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled state-sum kernel: exact tallies over all 2**c resolutions.

Same contract as thomplink._bracket_py.state_counts; arc labels must be
0 .. n_arcs-1 and n_arcs is at most a few dozen, so the per-state
union-find reset stays cheap.
"""

from libc.stdlib cimport free, malloc

KERNEL = "compiled"


def state_counts(flat, int n_arcs):
    cdef int c = len(flat) // 4
    cdef int m = n_arcs
    if c > 30:
        raise ValueError("state space too large for exact enumeration")
    cdef unsigned long long n_states = 1ULL << c
    cdef int *ends = <int *> malloc(4 * c * sizeof(int))
    cdef int *parent = <int *> malloc(m * sizeof(int)) if m else NULL
    cdef long long *tally = <long long *> malloc((c + 1) * (m + 1) * sizeof(long long))
    if (ends == NULL and c) or (parent == NULL and m) or tally == NULL:
        free(ends); free(parent); free(tally)
        raise MemoryError()
    cdef int i, j, b_count, merges, x, y, rx, ry, a0, a1, a2, a3
    cdef unsigned long long state
    for i in range(4 * c):
        ends[i] = flat[i]
    for i in range((c + 1) * (m + 1)):
        tally[i] = 0
    try:
        for state in range(n_states):
            for i in range(m):
                parent[i] = i
            merges = 0
            b_count = 0
            for j in range(c):
                a0 = ends[4 * j]; a1 = ends[4 * j + 1]
                a2 = ends[4 * j + 2]; a3 = ends[4 * j + 3]
                if (state >> j) & 1:
                    b_count += 1
                    x = a0; y = a3
                else:
                    x = a0; y = a1
                rx = x
                while parent[rx] != rx:
                    parent[rx] = parent[parent[rx]]
                    rx = parent[rx]
                ry = y
                while parent[ry] != ry:
                    parent[ry] = parent[parent[ry]]
                    ry = parent[ry]
                if rx != ry:
                    parent[rx] = ry
                    merges += 1
                if (state >> j) & 1:
                    x = a1; y = a2
                else:
                    x = a2; y = a3
                rx = x
                while parent[rx] != rx:
                    parent[rx] = parent[parent[rx]]
                    rx = parent[rx]
                ry = y
                while parent[ry] != ry:
                    parent[ry] = parent[parent[ry]]
                    ry = parent[ry]
                if rx != ry:
                    parent[rx] = ry
                    merges += 1
            tally[b_count * (m + 1) + (m - merges)] += 1
        return [
            [tally[i * (m + 1) + j] for j in range(m + 1)]
            for i in range(c + 1)
        ]
    finally:
        free(ends)
        free(parent)
        free(tally)
