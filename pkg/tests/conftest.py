# -*- coding: utf-8 -*-
"""Shared fixtures."""

import pytest

from degenerate_eulerian.classical import eulerian_number, stirling1
from degenerate_eulerian.context import SequenceContext


@pytest.fixture
def fresh_ctx():
    """A pristine context that no other test shares."""
    return SequenceContext()


@pytest.fixture
def stirling_corrupted_ctx():
    """S_1(4,2) off by one; rows above 4 rebuilt from the corrupted row."""
    ctx = SequenceContext()
    ctx.override_stirling1(4, 2, stirling1(4, 2) + 1)
    return ctx


@pytest.fixture
def eulerian_corrupted_ctx():
    """⟨3,1⟩ = 5 instead of 4."""
    ctx = SequenceContext()
    ctx.override_eulerian(3, 1, eulerian_number(3, 1) + 1)
    return ctx
