"""Processing-cost weights and the performance measure."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def as_fraction(value) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or float literal."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # go through repr so 0.01 means 1/100, not the nearest binary double
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class CostParams:
    commcost: Fraction = Fraction(0)
    infcost: Fraction = Fraction(0)
    retcost: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("commcost", "infcost", "retcost"):
            value = as_fraction(getattr(self, name))
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")
            object.__setattr__(self, name, value)

    def __str__(self):
        return (f"commcost={format_number(self.commcost)} infcost={format_number(self.infcost)} "
                f"retcost={format_number(self.retcost)}")


def performance(raw, messages: int, inferences: int, retrievals: int, costs: CostParams) -> Fraction:
    """Raw score minus the cost-weighted message, inference and retrieval totals."""
    for name, count in (("messages", messages), ("inferences", inferences), ("retrievals", retrievals)):
        if count < 0:
            raise ValueError(f"{name} must be non-negative")
    return (Fraction(raw)
            - costs.commcost * messages
            - costs.infcost * inferences
            - costs.retcost * retrievals)


def format_number(value) -> str:
    """Exact decimal text for terminating fractions, ``p/q`` otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    scaled = value * 10**digits
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled.numerator), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
