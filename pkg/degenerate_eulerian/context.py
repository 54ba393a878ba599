# -*- coding: utf-8 -*-
"""
Shared context for sequence computations and identity checks.

Holds the Eulerian and Stirling triangles every context-dependent value
is built from, and a memo of those values. A fresh context is pristine;
overriding a triangle entry turns it into a fault-injection context whose
memo is cleared so that every dependent value is recomputed.
"""

import logging
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, List, Tuple

from .classical import EulerianTriangle, StirlingTriangles

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class SequenceContext:
    """
    Shared state for the degenerate-sequence functions and the identity catalog.

    Provides:
    - Eulerian triangle entries ⟨n,m⟩ (recurrence-built)
    - Signed Stirling numbers of both kinds
    - A per-context memo for values derived from the triangles
    - Single-entry overrides for fault injection
    """

    eulerian_triangle: EulerianTriangle = field(default_factory=EulerianTriangle)
    stirling_triangles: StirlingTriangles = field(default_factory=StirlingTriangles)
    overrides: List[Tuple[str, int, int, int]] = field(default_factory=list)

    _memo: Dict[Hashable, Any] = field(default_factory=dict, repr=False)
    _lock: threading.RLock = field(default_factory=threading.RLock, repr=False)

    # =========================================================================
    # Triangle Access
    # =========================================================================

    def eulerian(self, n: int, m: int) -> int:
        return self.eulerian_triangle.entry(n, m)

    def stirling1(self, n: int, k: int) -> int:
        return self.stirling_triangles.s1(n, k)

    def stirling2(self, n: int, k: int) -> int:
        return self.stirling_triangles.s2(n, k)

    @property
    def is_pristine(self) -> bool:
        return not self.overrides

    # =========================================================================
    # Memo
    # =========================================================================

    def memoized(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        """
        Return the memoized value for key, computing it on a miss.

        Computation happens outside the lock; on a race the first published
        value wins.
        """
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        logger.debug("memo miss %s", key)
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    def clear_memo(self) -> None:
        with self._lock:
            self._memo.clear()

    # =========================================================================
    # Fault Injection
    # =========================================================================

    def override_stirling1(self, n: int, k: int, value: int) -> None:
        """Replace S_1(n,k); rows above n are rebuilt from the corrupted row."""
        self.stirling_triangles.override_s1(n, k, value)
        self.overrides.append(("stirling1", n, k, value))
        self.clear_memo()

    def override_stirling2(self, n: int, k: int, value: int) -> None:
        self.stirling_triangles.override_s2(n, k, value)
        self.overrides.append(("stirling2", n, k, value))
        self.clear_memo()

    def override_eulerian(self, n: int, m: int, value: int) -> None:
        """Replace ⟨n,m⟩; rows above n are rebuilt from the corrupted row."""
        self.eulerian_triangle.override(n, m, value)
        self.overrides.append(("eulerian", n, m, value))
        self.clear_memo()


_DEFAULT_CONTEXT = SequenceContext()


def default_context() -> SequenceContext:
    """The shared pristine context used when callers pass none."""
    return _DEFAULT_CONTEXT
