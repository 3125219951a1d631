# ============================================================================
# VERTEX SETS AS BITMASKS
# ============================================================================
"""
Vertex sets are plain ints: bit v-1 is set when vertex v belongs to the set.
Vertices are 1-based on the outside, 0-based bit positions on the inside.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from core.conf import toolkit_setting
from core.exceptions import CapExceeded

logger = logging.getLogger(__name__)


def mask_of(vertices):
    """
    Build a bitmask from 1-based vertex labels

    Example:
        >>> mask_of([1, 3])
        5
    """
    mask = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex labels start at 1, got {v}")
        mask |= 1 << (v - 1)
    return mask


def iter_bits(mask):
    """Yield 0-based bit positions of `mask` in ascending order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertices_of(mask):
    """1-based vertex labels of `mask`, ascending"""
    return tuple(b + 1 for b in iter_bits(mask))


def full_mask(n):
    return (1 << n) - 1


def popcount(mask):
    return bin(mask).count("1")


def submasks(mask):
    """All submasks of `mask` (including 0 and `mask`), in ascending numeric order"""
    bits = list(iter_bits(mask))
    for index in range(1 << len(bits)):
        sub = 0
        for position, bit in enumerate(bits):
            if index >> position & 1:
                sub |= 1 << bit
        yield sub


def subsets_of_size(n, size):
    """Masks of all `size`-subsets of [n], in lexicographic order of their vertices"""
    for combo in combinations(range(n), size):
        mask = 0
        for bit in combo:
            mask |= 1 << bit
        yield mask


def check_cap(n, cap=None, force=False):
    """
    Refuse exhaustive 2^n enumerations beyond the configured cap.

    `force` lifts the soft cap but never the hard ceiling.
    """
    cap = toolkit_setting('TOOLKIT_ENUMERATION_CAP', cap)
    hard_cap = toolkit_setting('TOOLKIT_HARD_CAP')
    if n > hard_cap or (n > cap and not force):
        logger.warning("Refusing enumeration over 2^%s subsets (cap %s)", n, cap)
        raise CapExceeded(n, cap if n <= hard_cap else hard_cap)


def chunk_ranges(total, chunk_bits=None):
    """Split range(total) into consecutive blocks of 2^chunk_bits"""
    chunk_bits = toolkit_setting('TOOLKIT_CHUNK_BITS', chunk_bits)
    step = 1 << chunk_bits
    return [(start, min(start + step, total)) for start in range(0, total, step)]


def map_chunks(worker, total, payload, jobs=None, chunk_bits=None):
    """
    Run `worker(payload, start, stop)` over consecutive blocks of range(total).

    Results come back in block order whatever the job count, so callers can
    merge them deterministically. Workers must be module-level functions and
    must not touch Django settings (they may run in a fresh process).
    """
    jobs = toolkit_setting('TOOLKIT_JOBS', jobs)
    ranges = chunk_ranges(total, chunk_bits)
    if jobs <= 1 or len(ranges) <= 1:
        return [worker(payload, start, stop) for start, stop in ranges]

    logger.debug("Dispatching %s blocks to %s workers", len(ranges), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(worker, payload, start, stop) for start, stop in ranges]
        return [future.result() for future in futures]
