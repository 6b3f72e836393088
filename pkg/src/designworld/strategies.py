"""Discourse strategies: how a proposal is expanded into communicative acts."""

from __future__ import annotations

from .acts import Propose, Reject, Say
from .domain import Option

ALL_IMPLICIT = "all-implicit"
EXPLICIT_WARRANT = "explicit-warrant"
CONDITIONAL_WARRANT = "conditional-warrant"

STRATEGIES = (ALL_IMPLICIT, EXPLICIT_WARRANT, CONDITIONAL_WARRANT)

ALIASES = {
    "ai": ALL_IMPLICIT,
    "ew": EXPLICIT_WARRANT,
    "cw": CONDITIONAL_WARRANT,
}


def canonical(name: str) -> str:
    key = name.strip().lower()
    key = ALIASES.get(key, key)
    if key not in STRATEGIES:
        raise ValueError(f"unknown strategy {name!r}; expected one of {', '.join(STRATEGIES)}")
    return key


def warrant(speaker: str, hearer: str, option: Option, value: int) -> Say:
    return Say(speaker, hearer, option.number, option, value)


def expand_proposal(strategy: str, speaker: str, hearer: str, option: Option, value: int,
                    counter: bool = False) -> list:
    """Acts realizing one proposal (or counter-proposal when ``counter``).

    All-Implicit sends the bare proposal; Explicit-Warrant precedes it with a
    ``say`` of the option's score.  Conditional-Warrant needs a hearer model
    and is expanded by :func:`designworld.planop.instantiate_motivation`.
    """
    act = (Reject if counter else Propose)(speaker, hearer, option)
    if strategy == ALL_IMPLICIT:
        return [act]
    if strategy == EXPLICIT_WARRANT:
        return [warrant(speaker, hearer, option, value), act]
    raise ValueError(f"strategy {strategy!r} cannot be expanded without a hearer model")
