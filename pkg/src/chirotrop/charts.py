"""Positive parameterizations of the four chirotopal configuration spaces X^chi(3,6).

Each chart sends y in Q_{>0}^4 to a 3x6 matrix whose maximal minors have a
fixed sign pattern, and a cross-ratio formula in the minors recovers y.
Everything is evaluated in exact rational arithmetic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from .chirotope import Chirotope, parse_negative_triple_notation
from .reports import Report

Matrix = list[list[Fraction]]
Minors = dict[tuple[int, int, int], Fraction]


def _type4(y):
    y1, y2, y3, y4 = y
    return [
        [1, 0, 0, y1 * y3, y1 * y3 + y1 * y4 + y2 * y4, y3 * y1 + y4 * y1 + y1 + y2 + y2 * y4 + 1],
        [0, 1, 0, -y3, -y3 - y4, -y3 - y4 - 1],
        [0, 0, 1, 1, 1, 1],
    ]


def _type3(y):
    y1, y2, y3, y4 = y
    d = y2 * y4 * y1 + y4 * y1 + y1 + y4 + 1
    return [
        [1, 0, 0, 1, (y1 + 1) / y1, (y1 * y3 + y3 + 1) / (y1 * y3)],
        [
            0, 1, 0, -1,
            -(y1 + 1) * (y2 * y4 + y4 + 1) / d,
            -(y1 * y3 * y2 + y3 * y2 + y2 + y1 * y3 + y3) * (y2 * y4 + y4 + 1) / ((y2 + 1) * y3 * d),
        ],
        [0, 0, 1, 1, 1, 1],
    ]


def _type2(y):
    y1, y2, y3, y4 = y
    num = (
        y1 * y2 * y3 + y2 * y3 + y1 * y2 * y4 * y3 + y2 * y4 * y3 + y4 * y3 + y3
        + y1 * y2 * y4 + y2 * y4 + y4 + 1
    )
    return [
        [1, 0, 0, 1, -1 / y1, -num / (y1 * (y3 + 1) * (y1 * y2 * y4 + y2 * y4 + y4 + 1))],
        [0, 1, 0, 1, y2 / (y2 + 1), y2 / ((y2 + 1) * (y3 + 1))],
        [0, 0, 1, 1, 1, 1],
    ]


def _type1(y):
    y1, y2, y3, y4 = y
    den = y2 * y3 + y2 * y4 * y3 + y4 * y3 + y3 + y1 * y2 * y4 + y2 * y4 + y4 + 1
    return [
        [1, 0, 0, 1, -1 / y3, (y2 * y3 + y3 + 1) / (y2 * y3)],
        [
            0, 1, 0, 1,
            (y1 * y2 + y2 + 1) * (y4 + 1) / (y1 * y2 * y4 + y2 * y4 + y4 + 1),
            -y1 * (y2 * y3 + y3 + 1) * (y4 + 1) / den,
        ],
        [0, 0, 1, 1, 1, 1],
    ]


def _p(m: Minors, label: int) -> Fraction:
    a, b, c = (int(ch) for ch in str(label))
    return m[(a, b, c)]


def _recover4(m):
    p = lambda s: _p(m, s)  # noqa: E731
    return (
        p(145) * p(156) * p(234) / (p(125) * p(134) * p(456)),
        p(124) * p(156) * p(345) / (p(125) * p(134) * p(456)),
        p(125) * p(126) * p(134) / (p(123) * p(124) * p(156)),
        p(126) * p(145) / (p(124) * p(156)),
    )


def _recover3(m):
    p = lambda s: _p(m, s)  # noqa: E731
    return (
        p(125) * p(234) / (p(123) * p(245)),
        p(156) * p(235) / (p(125) * p(356)),
        p(126) * p(245) / (p(124) * p(256)),
        -p(145) * p(356) / (p(135) * p(456)),
    )


def _recover2(m):
    p = lambda s: _p(m, s)  # noqa: E731
    return (
        -p(125) * p(234) / (p(124) * p(235)),
        -p(124) * p(135) / (p(123) * p(145)),
        -p(123) * p(156) / (p(125) * p(136)),
        p(235) * p(456) / (p(256) * p(345)),
    )


def _recover1(m):
    p = lambda s: _p(m, s)  # noqa: E731
    return (
        -p(124) * p(136) * p(256) * p(345) / (p(126) * p(134) * p(245) * p(356)),
        -p(126) * p(245) / (p(125) * p(246)),
        -p(125) * p(234) / (p(124) * p(235)),
        -p(125) * p(134) * p(236) * p(456) / (p(123) * p(145) * p(256) * p(346)),
    )


@dataclass(frozen=True)
class ChartSpec:
    chart_type: int
    matrix_evaluator: Callable[[Sequence[Fraction]], list]
    target_negatives: str
    recovery_formulas: Callable[[Minors], tuple[Fraction, ...]]

    @property
    def target_chirotope(self) -> Chirotope:
        return parse_negative_triple_notation(self.target_negatives, 3, 6)


CHARTS: dict[int, ChartSpec] = {
    1: ChartSpec(1, _type1, "134,135,145,235,245,346,356", _recover1),
    2: ChartSpec(2, _type2, "134,135,136,235,236,245,246,256", _recover2),
    3: ChartSpec(3, _type3, "456", _recover3),
    4: ChartSpec(4, _type4, "+", _recover4),
}


def _positive_params(y: Sequence) -> tuple[Fraction, ...]:
    if len(y) != 4:
        raise ValueError("charts take four parameters")
    ys = tuple(Fraction(v) for v in y)
    if any(v <= 0 for v in ys):
        raise ValueError(f"parameters must be positive, got {ys}")
    return ys


def evaluate_chart(chart_type: int, y: Sequence) -> Matrix:
    """The 3x6 matrix of the given chart at positive rational ``y``."""
    spec = CHARTS[chart_type]
    rows = spec.matrix_evaluator(_positive_params(y))
    return [[Fraction(v) for v in row] for row in rows]


def det3(a, b, c) -> Fraction:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def maximal_minors(matrix: Matrix) -> Minors:
    """All 20 maximal minors ``p_{abc}`` (columns a<b<c, 1-based)."""
    cols = [[matrix[r][c] for r in range(3)] for c in range(6)]
    return {
        (a, b, c): det3(cols[a - 1], cols[b - 1], cols[c - 1])
        for a, b, c in combinations(range(1, 7), 3)
    }


class NonGenericPointError(ValueError):
    pass


def minor_sign_vector(matrix: Matrix) -> Chirotope:
    minors = maximal_minors(matrix)
    zero = [k for k, v in minors.items() if v == 0]
    if zero:
        raise NonGenericPointError(f"vanishing minors {zero}: not a generic point")
    return Chirotope(3, 6, tuple(1 if minors[k] > 0 else -1 for k in sorted(minors)))


def recover_parameters(chart_type: int, minors: Minors) -> tuple[Fraction, ...]:
    try:
        return CHARTS[chart_type].recovery_formulas(minors)
    except ZeroDivisionError:
        raise NonGenericPointError("zero denominator in the recovery formulas") from None


def random_positive_rational(rng: random.Random, max_num: int = 50, max_den: int = 20) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def verify_charts(samples: int = 100, seed: int = 0) -> Report:
    """Sign pattern and exact round trip for every chart at random points."""
    rep = Report("charts")
    rng = random.Random(seed)
    for t in sorted(CHARTS):
        target = CHARTS[t].target_chirotope
        good = 0
        for _ in range(samples):
            y = tuple(random_positive_rational(rng) for _ in range(4))
            M = evaluate_chart(t, y)
            try:
                chi = minor_sign_vector(M)
            except NonGenericPointError as exc:
                rep.fail(f"type {t} at y={y}: {exc}")
                continue
            if chi != target:
                rep.fail(f"type {t} at y={y}: sign vector {chi} != {target}")
                continue
            back = recover_parameters(t, maximal_minors(M))
            if back != y:
                rep.fail(f"type {t} at y={y}: recovered {back}")
                continue
            good += 1
        rep.details[f"type {t}"] = f"{good}/{samples} samples ok, target {target.negative_notation()}"
    rep.summary = f"{len(CHARTS)} charts x {samples} samples (seed {seed})"
    return rep
