"""Exact integer helpers shared by the counting modules."""

from __future__ import annotations


class IntegrityError(ArithmeticError):
    """An identity that must hold exactly did not; this is a bug, not bad input."""


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise IntegrityError(f"{num} is not divisible by {den}")
    return q
