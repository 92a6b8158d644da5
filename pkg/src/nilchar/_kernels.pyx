# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled partition-function kernel.

Same contract as `_kernels_py.partition_table`, with counts held in int64.
Any count that would overflow, and any table too large for the rectangular
layout, raises OverflowError; the dispatcher falls back to the pure kernel.
"""

from libc.stdlib cimport free, malloc

cdef long long LLONG_MAX = 9223372036854775807
cdef long long MAX_ENTRIES = 33554432  # 2^25 int64 slots (256 MiB)


def partition_table(roots, bounds):
    cdef int rank = len(bounds)
    cdef int nroots = len(roots)
    cdef int i, j, k
    cdef long long ncells = 1, width = 1, total

    for b in bounds:
        if b < 0:
            raise ValueError("bounds must be non-negative")
        ncells *= b + 1
        width += b
    for r in roots:
        if len(r) != rank or any(v < 0 for v in r) or not any(r):
            raise ValueError(f"invalid root coordinates {r}")
    total = ncells * width
    if total > MAX_ENTRIES:
        raise OverflowError("partition table too large for the compiled kernel")

    cdef long long *tab = <long long *> malloc(total * sizeof(long long))
    cdef long long *deg = <long long *> malloc(ncells * sizeof(long long))
    cdef long long *stride = <long long *> malloc(rank * sizeof(long long))
    cdef long long *dims = <long long *> malloc(rank * sizeof(long long))
    cdef long long *coords = <long long *> malloc(rank * sizeof(long long))
    cdef long long *rc = <long long *> malloc(nroots * rank * sizeof(long long))
    if tab == NULL or deg == NULL or stride == NULL or dims == NULL or coords == NULL or rc == NULL:
        free(tab); free(deg); free(stride); free(dims); free(coords); free(rc)
        raise MemoryError()

    cdef long long idx, src, d, off, v, add, dsrc
    cdef bint valid
    try:
        for i in range(rank):
            dims[i] = bounds[i] + 1
        stride[rank - 1] = 1
        for i in range(rank - 2, -1, -1):
            stride[i] = stride[i + 1] * dims[i + 1]
        for i in range(nroots):
            for j in range(rank):
                rc[i * rank + j] = roots[i][j]
        for idx in range(total):
            tab[idx] = 0
        for idx in range(ncells):
            deg[idx] = -1  # max nonzero q-degree per cell; -1 = unreachable
        tab[0] = 1
        deg[0] = 0

        for i in range(nroots):
            off = 0
            for j in range(rank):
                off += rc[i * rank + j] * stride[j]
            for j in range(rank):
                coords[j] = 0
            for idx in range(ncells):
                valid = True
                for j in range(rank):
                    if coords[j] < rc[i * rank + j]:
                        valid = False
                        break
                if valid:
                    dsrc = deg[idx - off]
                    if dsrc >= 0:
                        src = (idx - off) * width
                        for d in range(dsrc + 1):
                            add = tab[src + d]
                            if add:
                                v = tab[idx * width + d + 1]
                                if v > LLONG_MAX - add:
                                    raise OverflowError("partition count exceeds int64")
                                tab[idx * width + d + 1] = v + add
                        if dsrc + 1 > deg[idx]:
                            deg[idx] = dsrc + 1
                # odometer
                for j in range(rank - 1, -1, -1):
                    coords[j] += 1
                    if coords[j] < dims[j]:
                        break
                    coords[j] = 0

        out = {}
        for j in range(rank):
            coords[j] = 0
        for idx in range(ncells):
            last = -1
            for d in range(deg[idx] + 1):
                if tab[idx * width + d]:
                    last = d
            if last >= 0:
                key = tuple(coords[j] for j in range(rank))
                out[key] = tuple(tab[idx * width + d] for d in range(last + 1))
            for j in range(rank - 1, -1, -1):
                coords[j] += 1
                if coords[j] < dims[j]:
                    break
                coords[j] = 0
        return out
    finally:
        free(tab)
        free(deg)
        free(stride)
        free(dims)
        free(coords)
        free(rc)
