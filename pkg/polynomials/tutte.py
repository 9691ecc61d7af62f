"""Tutte polynomial and the leading-term polynomial lambda of binary matroids"""
import logging
from collections import Counter

from django.conf import settings

from gf2.linalg import gray_code_ranks, popcount
from matroid_lab.exceptions import check_gate
from matroids.binary import contract, delete, is_coloop, is_loop

from .bivariate import ONE, X, Y, shifted_monomial, sum_shifted

logger = logging.getLogger(__name__)


def _gate(m):
    check_gate('Tutte polynomial', m.size, settings.POLYNOMIAL_MAX_VERTICES)


def rank_counts(m):
    """Counter of ``(r(V) - r(S), |S| - r(S))`` over every subset S, ranks updated along a Gray code"""
    full = m.rank
    counts = Counter()
    for s, r in gray_code_ranks([(0, column) for column in m.columns]):
        counts[full - r, popcount(s) - r] += 1
    return counts


def tutte_subset(m):
    _gate(m)
    return sum_shifted(rank_counts(m))


def tutte_recursive(m):
    """Deletion-contraction on the first ground element; loops give y, coloops x"""
    _gate(m)
    return _tutte(m, {})


def _tutte(m, memo):
    if m.size == 0:
        return ONE
    key = (m.size, m.cycle_space.basis)
    if key in memo:
        return memo[key]
    v = m.ground[0]
    if is_loop(m, v):
        result = Y * _tutte(delete(m, v), memo)
    elif is_coloop(m, v):
        result = X * _tutte(contract(m, v), memo)
    else:
        result = _tutte(contract(m, v), memo) + _tutte(delete(m, v), memo)
    memo[key] = result
    return result


def lambda_leading(m):
    """lambda_M = (y - 1)^(|V| - r(V)), the term of t(M) at the full ground set"""
    return shifted_monomial(0, m.nullity)


def substituted_lambda(m, size):
    """(x - 1)^size lambda_M(1 + (y - 1)/(x - 1)) with the division cleared"""
    return shifted_monomial(size - m.nullity, m.nullity)
