# -*- coding: utf-8 -*-
"""
Identity registry and the comparison recorder handed to every check.

Checks register themselves with the @identity decorator, naming the
operation that produces each side. A side may not be produced by the same
operation as the other side.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from sympy.polys.domains import QQ

from .algebra import VARIABLES, MPoly, RatFun, Rational, evaluate, format_rational, render, to_ratfun
from .config import FAST_MODE_CONFIG
from .context import SequenceContext
from .errors import PoleEncountered, UnknownIdentity
from .models import CheckMode, Counterexample, IdentityInfo
from .series import Series

logger = logging.getLogger(__name__)


class CheckFailed(Exception):
    """Raised inside a check once its first counterexample is recorded."""


# =============================================================================
# Comparison Recorder
# =============================================================================

def _is_algebraic(value: Any) -> bool:
    return not isinstance(value, bool) and isinstance(value, (int, Rational, MPoly, RatFun))


def _mentioned(value: RatFun) -> List[str]:
    return [v for v in VARIABLES if value.mentions(v)]


@dataclass
class CheckRun:
    """
    State of one verification: the index bounds, the context the sides are
    computed in, and the first disagreement found.
    """
    ctx: SequenceContext
    n_max: int
    m_max: Optional[int] = None
    mode: CheckMode = "exact"
    comparisons: int = 0
    counterexample: Optional[Counterexample] = None
    notes: List[str] = field(default_factory=list)
    covered: Dict[str, Any] = field(default_factory=dict)
    _rng: random.Random = field(default_factory=lambda: random.Random(FAST_MODE_CONFIG["seed"]), repr=False)

    def cover(self, **ranges: Any) -> None:
        """Record the effective index ranges, e.g. cover(n=(0, 8))."""
        for name, bounds in ranges.items():
            self.covered[name] = list(bounds) if isinstance(bounds, tuple) else bounds

    def note(self, text: str) -> None:
        self.notes.append(text)

    def compare(self, indices: Dict[str, int], left: Any, right: Any, label: Optional[str] = None) -> None:
        """Compare both sides; the first mismatch is recorded and ends the check."""
        self.comparisons += 1
        if self.mode == "fast" and _is_algebraic(left) and _is_algebraic(right):
            point = self._disagreement_point(to_ratfun(left), to_ratfun(right))
            if point is not None:
                self._fail(indices, left, right, label, point)
            return
        if _is_algebraic(left) and _is_algebraic(right):
            if to_ratfun(left) == to_ratfun(right):
                return
        elif left == right:
            return
        self._fail(indices, left, right, label)

    def compare_series(
        self,
        indices: Dict[str, int],
        index_name: str,
        left: Series,
        right: Series,
        label: Optional[str] = None,
    ) -> None:
        """Compare two series coefficient by coefficient up to the smaller order."""
        for j in range(min(left.order, right.order) + 1):
            self.compare({**indices, index_name: j}, left[j], right[j], label)

    def record_error(self, error: Exception) -> None:
        """Turn an exception raised while computing a side into a counterexample."""
        self.counterexample = Counterexample(
            indices={},
            left=f"{type(error).__name__}: {error}",
            right="",
            difference="",
            label="computation failed",
        )

    # -------------------------------------------------------------------------

    def _disagreement_point(self, left: RatFun, right: RatFun) -> Optional[Dict[str, str]]:
        variables = sorted(set(_mentioned(left)) | set(_mentioned(right)), key=VARIABLES.index)
        if not variables:
            return None if left == right else {}
        low, high = FAST_MODE_CONFIG["numerator_range"]
        den_low, den_high = FAST_MODE_CONFIG["denominator_range"]
        tried = 0
        evaluated = 0
        while evaluated < FAST_MODE_CONFIG["points"] and tried < 10 * FAST_MODE_CONFIG["points"]:
            tried += 1
            point = {
                v: QQ(self._rng.randint(low, high), self._rng.randint(den_low, den_high))
                for v in variables
            }
            try:
                a, b = evaluate(left, point), evaluate(right, point)
            except PoleEncountered:
                continue
            evaluated += 1
            if a != b:
                return {v: format_rational(value) for v, value in point.items()}
        return None

    def _fail(
        self,
        indices: Dict[str, int],
        left: Any,
        right: Any,
        label: Optional[str],
        point: Optional[Dict[str, str]] = None,
    ) -> None:
        if _is_algebraic(left) and _is_algebraic(right):
            difference = render(to_ratfun(left) - to_ratfun(right))
        else:
            difference = ""
        self.counterexample = Counterexample(
            indices=dict(indices),
            left=render(left),
            right=render(right),
            difference=difference,
            label=label,
            point=point,
        )
        raise CheckFailed(self.counterexample)


# =============================================================================
# Registry
# =============================================================================

@dataclass(frozen=True)
class IdentityCheck:
    tag: str
    description: str
    anchor: str
    left_source: str
    right_source: str
    two_index: bool
    func: Callable[[CheckRun], None]

    def info(self) -> IdentityInfo:
        return IdentityInfo(
            tag=self.tag,
            description=self.description,
            anchor=self.anchor,
            left_source=self.left_source,
            right_source=self.right_source,
            two_index=self.two_index,
        )


_REGISTRY: Dict[str, IdentityCheck] = {}


def identity(
    tag: str,
    *,
    description: str,
    anchor: str,
    left: str,
    right: str,
    two_index: bool = False,
) -> Callable[[Callable[[CheckRun], None]], Callable[[CheckRun], None]]:
    """
    Register a check function under ``tag``.

    ``left`` and ``right`` name the operations producing the two sides.
    """
    def decorator(func: Callable[[CheckRun], None]) -> Callable[[CheckRun], None]:
        if tag in _REGISTRY:
            raise ValueError(f"identity {tag} registered twice")
        if left == right:
            raise ValueError(f"identity {tag}: both sides come from {left}")
        _REGISTRY[tag] = IdentityCheck(tag, description, anchor, left, right, two_index, func)
        return func

    return decorator


def get_check(tag: str) -> IdentityCheck:
    try:
        return _REGISTRY[tag]
    except KeyError:
        raise UnknownIdentity(tag) from None


def registered() -> List[IdentityCheck]:
    """All checks in registration order."""
    return list(_REGISTRY.values())


def registered_tags() -> Tuple[str, ...]:
    return tuple(_REGISTRY)
