"""The two size bounds the solver certifies against.

Both are evaluated in floating point exactly as written, with no rounding:
certificates compare integer set sizes against the real value.
"""

from __future__ import annotations

import math

from .errors import InvalidInput

__all__ = ["transversal_bound", "cubic_packing_threshold"]


def transversal_bound(l: int, k: int) -> float:
    """Guaranteed transversal size for covering k-fold packings of long cycles.

    For k = 1 the bound is 0: when no cycle of length >= l exists, the empty
    set is the certificate.  For k >= 2:

        6*k*l + 10*k*log2(k) + 40*k + 10*k*log2(log2(k))

    The last term is 0 at k = 2 since log2(log2(2)) = 0.
    """
    if k < 1:
        raise InvalidInput(f"k must be at least 1, got {k}")
    if l < 3:
        raise InvalidInput(f"l must be at least 3, got {l}")
    if k == 1:
        return 0.0
    return (
        6.0 * k * l
        + 10.0 * k * math.log2(k)
        + 40.0 * k
        + 10.0 * k * math.log2(math.log2(k))
    )


def cubic_packing_threshold(k: int) -> float:
    """Order above which every 3-regular multigraph holds k disjoint cycles.

        s_1 = 1,   s_k = 4*k*(log2(k) + log2(log2(k)) + 4)  for k >= 2.

    s_2 = 40 and s_4 = 112 exactly.
    """
    if k < 1:
        raise InvalidInput(f"k must be at least 1, got {k}")
    if k == 1:
        return 1.0
    return 4.0 * k * (math.log2(k) + math.log2(math.log2(k)) + 4.0)
