"""Abbreviation layer.

Negation, trivialization, disjunction, equality, the containment
orders, singlehood, membership, the universes, quantifiers, and
intersection, each expanded down to the core constructors.  The mode
argument selects between the two systems: "classical" (the default)
expands disjunction through negation and intersection through a class,
while "extended" uses the primitive intersection sign.
"""

from __future__ import annotations

from .syntax import (
    ABSURD,
    EMPTY,
    Class,
    Cont,
    Fed,
    Inter,
    fresh_var,
    var,
)
from .subst import bind_index

MODES = ("classical", "extended")


def not_(a) -> Cont:
    return Cont(a, ABSURD)


def triv(a) -> Cont:
    return Cont(EMPTY, a)


def eq(a, b) -> Fed:
    return Fed(0, Cont(a, b), Cont(b, a))


def neq(a, b) -> Cont:
    return not_(eq(a, b))


def subeq(a, b, level=0):
    """The containment order: a below b, at a type level."""
    assert level >= 0
    if level == 0:
        return Cont(b, a)
    return eq(b, Fed(level, a, b))


def or_(a, b, mode="classical"):
    assert mode in MODES
    if mode == "extended":
        return triv(Inter(triv(a), triv(b)))
    return not_(Fed(0, not_(a), not_(b)))


def sing(subject, witness=None, level=0, mode="classical"):
    """Singlehood of the subject at a type level.

    The witness variable defaults to the first canonical variable not
    appearing in the subject.
    """
    assert level >= 0 and mode in MODES
    if witness is None:
        witness = fresh_var(subject)
    if level == 0:
        return Fed(
            0,
            neq(triv(subject), subject),
            Cont(
                Cont(subject, witness),
                or_(triv(witness), eq(subject, witness), mode),
            ),
        )
    return Cont(
        subeq(witness, subject, level),
        or_(triv(witness), eq(witness, subject), mode),
    )


def in_(a, b, witness=None, level=0, mode="classical"):
    """Membership: a is single and sits below b, at a type level."""
    if witness is None:
        witness = fresh_var(a, b)
    return Fed(0, sing(a, witness, level, mode), subeq(a, b, level))


def universe(level=0) -> Class:
    """The class with the empty condition at a type level."""
    return Class(level, var(0), EMPTY)


def all_(x, phi):
    """Universal quantifier: the class of x with condition phi fills the universe."""
    return eq(universe(0), bind_index(phi, x, 0))


def ex_(x, phi):
    """Existential quantifier: the class of x with condition phi is not empty."""
    return not_(eq(EMPTY, bind_index(phi, x, 0)))


def inter(a, b, mode="classical"):
    """Intersection: primitive in the extended mode, a class otherwise."""
    assert mode in MODES
    if mode == "extended":
        return Inter(a, b)
    x = fresh_var(a, b)
    w = fresh_var(a, b, avoid=(x,))
    cond = Fed(0, in_(x, a, w), in_(x, b, w))
    return bind_index(cond, x, 0)
