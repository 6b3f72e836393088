"""Communicative acts and their one-line s-expression wire format.

    (propose agent-bill agent-kim option-10: put-act (agent-bill green rug room-1))
    (reject agent-kim agent-bill option-56: put-act (agent-kim purple couch room-1))
    (say agent-ted agent-ben bel-10: score (option-10: put-act (agent-ted green rug room-1) 56))
    (open agent-bill agent-kim room-1)
    (close agent-bill agent-kim room-1)
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sexpr
from .domain import Option
from .sexpr import ParseError


@dataclass(frozen=True)
class Act:
    speaker: str
    hearer: str

    def __post_init__(self):
        if self.speaker == self.hearer:
            raise ValueError("speaker and hearer must differ")


@dataclass(frozen=True)
class Propose(Act):
    option: Option


@dataclass(frozen=True)
class Reject(Act):
    """Rejection carried as a counter-proposal."""

    option: Option


@dataclass(frozen=True)
class Say(Act):
    belief: int
    option: Option
    value: int


@dataclass(frozen=True)
class Open(Act):
    room: str


@dataclass(frozen=True)
class Close(Act):
    room: str


def _agent(name: str) -> str:
    return f"agent-{name}"


def _put_act(option: Option) -> str:
    return (f"{option.id}: put-act ({_agent(option.agent)} "
            f"{option.color} {option.kind} {option.room})")


def render_act(act: Act) -> str:
    head = f"{_agent(act.speaker)} {_agent(act.hearer)}"
    if isinstance(act, Propose):
        return f"(propose {head} {_put_act(act.option)})"
    if isinstance(act, Reject):
        return f"(reject {head} {_put_act(act.option)})"
    if isinstance(act, Say):
        return f"(say {head} bel-{act.belief}: score ({_put_act(act.option)} {act.value}))"
    if isinstance(act, Open):
        return f"(open {head} {act.room})"
    if isinstance(act, Close):
        return f"(close {head} {act.room})"
    raise TypeError(f"not an act: {act!r}")


def _name(token, what: str) -> str:
    if not isinstance(token, str) or not token.startswith("agent-") or len(token) == 6:
        raise ParseError(f"expected agent symbol for {what}, got {sexpr.dumps(token)!r}", 0)
    return token[len("agent-"):]


def _tagged_number(token, prefix: str) -> int:
    if not (isinstance(token, str) and token.startswith(prefix) and token.endswith(":")):
        raise ParseError(f"expected '{prefix}N:', got {sexpr.dumps(token)!r}", 0)
    try:
        return int(token[len(prefix):-1])
    except ValueError:
        raise ParseError(f"bad number in {token!r}", 0) from None


def _option(tag, verb, body) -> Option:
    number = _tagged_number(tag, "option-")
    if verb != "put-act":
        raise ParseError(f"expected put-act, got {sexpr.dumps(verb)!r}", 0)
    if not isinstance(body, list) or len(body) != 4 or any(isinstance(t, list) for t in body):
        raise ParseError("put-act needs (agent color kind room)", 0)
    return Option(number, _name(body[0], "put-act"), body[1], body[2], body[3])


def parse_act(text: str) -> Act:
    expr = sexpr.loads(text.strip())
    if not isinstance(expr, list) or len(expr) < 3:
        raise ParseError("expected (verb speaker hearer ...)", 0)
    verb, speaker, hearer, rest = expr[0], _name(expr[1], "speaker"), _name(expr[2], "hearer"), expr[3:]
    if verb in ("propose", "reject"):
        if len(rest) != 3:
            raise ParseError(f"{verb} takes an option", 0)
        cls = Propose if verb == "propose" else Reject
        return cls(speaker, hearer, _option(*rest))
    if verb == "say":
        if len(rest) != 3 or rest[1] != "score" or not isinstance(rest[2], list) or len(rest[2]) != 4:
            raise ParseError("say takes 'bel-N: score (option ... value)'", 0)
        belief = _tagged_number(rest[0], "bel-")
        *opt, value = rest[2]
        try:
            value = int(value)
        except (TypeError, ValueError):
            raise ParseError(f"bad score value {sexpr.dumps(value)!r}", 0) from None
        return Say(speaker, hearer, belief, _option(*opt), value)
    if verb in ("open", "close"):
        if len(rest) != 1 or isinstance(rest[0], list):
            raise ParseError(f"{verb} takes a room", 0)
        return (Open if verb == "open" else Close)(speaker, hearer, rest[0])
    raise ParseError(f"unknown act {sexpr.dumps(verb)!r}", 0)
