# homology/linalg.py
"""
Rank computations over GF(p).

p = 2 runs on bit-packed rows (Python ints used as bitsets, XOR elimination);
odd p runs on numpy int64 rows reduced mod p.
"""

import numpy as np


def gf2_rank(rows):
    """
    Rank over GF(2) of rows given as int bitsets.

    Keeps a basis keyed by leading bit; each row is reduced against it.
    """
    basis = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            pivot = basis.get(lead)
            if pivot is None:
                basis[lead] = row
                break
            row ^= pivot
    return len(basis)


def pack_rows(matrix):
    """Bit-pack the rows of a 0/1 numpy matrix into Python ints"""
    matrix = np.asarray(matrix, dtype=np.uint8) & 1
    if matrix.size == 0:
        return [0] * matrix.shape[0]
    packed = np.packbits(matrix, axis=1)
    return [int.from_bytes(row.tobytes(), "big") for row in packed]


def rank_mod_p(matrix, p):
    """Rank of an integer matrix over GF(p), p an odd prime"""
    work = np.array(matrix, dtype=np.int64) % p
    if work.size == 0:
        return 0
    n_rows, n_cols = work.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        candidates = np.nonzero(work[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank + candidates[0]
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        inverse = pow(int(work[rank, col]), -1, p)
        work[rank] = (work[rank] * inverse) % p
        factors = work[rank + 1:, col]
        targets = np.nonzero(factors)[0]
        if targets.size:
            rows = rank + 1 + targets
            work[rows] = (work[rows] - np.outer(factors[targets], work[rank])) % p
        rank += 1
    return rank


def rank_over(matrix, p):
    """Rank of `matrix` over GF(p), choosing the kernel by characteristic"""
    if p == 2:
        return gf2_rank(pack_rows(matrix))
    return rank_mod_p(matrix, p)
