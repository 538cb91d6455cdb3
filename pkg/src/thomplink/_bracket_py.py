"""Pure-Python state-sum kernel; fallback when the compiled core is absent.

``state_counts`` enumerates all 2**c resolutions of a PD code with c
crossings and tallies, for each number of B-smoothings and each resulting
loop count, how many states produce that combination.  Loop counting uses
union-find over the 2c arc labels (labels must be 0 .. n_arcs-1).
"""

from __future__ import annotations

KERNEL = "python"


def state_counts(flat: list[int], n_arcs: int) -> list[list[int]]:
    c = len(flat) // 4
    counts = [[0] * (n_arcs + 1) for _ in range(c + 1)]
    parent = list(range(n_arcs))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for state in range(1 << c):
        for i in range(n_arcs):
            parent[i] = i
        merges = 0
        b_count = 0
        for j in range(c):
            a0, a1, a2, a3 = flat[4 * j : 4 * j + 4]
            if (state >> j) & 1:
                b_count += 1
                joins = ((a0, a3), (a1, a2))
            else:
                joins = ((a0, a1), (a2, a3))
            for x, y in joins:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
                    merges += 1
        counts[b_count][n_arcs - merges] += 1
    return counts
