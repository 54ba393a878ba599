# -*- coding: utf-8 -*-
from degenerate_eulerian.algebra import LAM, T
from degenerate_eulerian.context import SequenceContext, default_context
from degenerate_eulerian.degenerate import deg_eulerian_poly


def test_fresh_context_is_pristine(fresh_ctx):
    assert fresh_ctx.is_pristine
    assert fresh_ctx.eulerian(3, 1) == 4
    assert fresh_ctx.stirling1(4, 2) == 11
    assert fresh_ctx.stirling2(4, 2) == 7


def test_default_context_is_shared():
    assert default_context() is default_context()
    assert default_context().is_pristine


def test_memoized_computes_once(fresh_ctx):
    calls = []

    def compute():
        calls.append(1)
        return 42

    assert fresh_ctx.memoized(("answer",), compute) == 42
    assert fresh_ctx.memoized(("answer",), compute) == 42
    assert len(calls) == 1


def test_override_clears_memo(fresh_ctx):
    assert deg_eulerian_poly(2, fresh_ctx) == 1 + T - LAM
    fresh_ctx.override_stirling1(2, 1, 0)
    assert not fresh_ctx.is_pristine
    assert fresh_ctx.overrides == [("stirling1", 2, 1, 0)]
    assert deg_eulerian_poly(2, fresh_ctx) == 1 + T


def test_corrupted_contexts_do_not_leak(stirling_corrupted_ctx, eulerian_corrupted_ctx):
    assert stirling_corrupted_ctx.stirling1(4, 2) == 12
    assert eulerian_corrupted_ctx.eulerian(3, 1) == 5
    assert SequenceContext().stirling1(4, 2) == 11
    assert default_context().eulerian(3, 1) == 4
