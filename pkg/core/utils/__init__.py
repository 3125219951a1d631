# core/utils/__init__.py
"""
Core utility functions organized by category.

Usage:
    # Import specific functions
    from core.utils.subsets import iter_bits, mask_of, subsets_of_size
    from core.utils.precision import decimal_log, guarded_floor

    # Or import commonly used functions directly from core.utils
    from core.utils import iter_bits, mask_of
"""

# Commonly used functions available directly from core.utils
from .subsets import iter_bits, mask_of, vertices_of, check_cap

# Make submodules easily importable
from . import subsets
from . import precision

__all__ = [
    # Direct exports
    'iter_bits',
    'mask_of',
    'vertices_of',
    'check_cap',

    # Submodules
    'subsets',
    'precision',
]
