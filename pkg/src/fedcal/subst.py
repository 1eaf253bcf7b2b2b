"""Guarded substitution and the index meta-operations.

Substitution replaces exactly the unshielded instances of a target
variable.  Binding wraps those instances in index stops and closes the
result in a class node; instantiation writes a value back in for the
index.  Index replacement is a separate meta-operation: index stops
shield their variable from substitution proper.
"""

from __future__ import annotations

from .syntax import (
    Obj,
    Empty,
    CStop,
    VStop,
    IStop,
    Fed,
    Cont,
    Inter,
    Class,
    Num,
)

_GUARDS = (CStop, VStop, IStop)


def _map_children(t, f):
    # structure-preserving child map; returns t itself when nothing changed
    if isinstance(t, (Empty, Num)):
        return t
    if isinstance(t, Fed):
        left, right = f(t.left), f(t.right)
        if left is t.left and right is t.right:
            return t
        return Fed(t.level, left, right)
    if isinstance(t, (Cont, Inter)):
        left, right = f(t.left), f(t.right)
        if left is t.left and right is t.right:
            return t
        return type(t)(left, right)
    if isinstance(t, Class):
        body = f(t.body)
        return t if body is t.body else Class(t.level, t.index, body)
    body = f(t.body)
    return t if body is t.body else type(t)(body)


def substitute(alpha, target, value):
    """Replace every unshielded instance of target in alpha by value."""
    assert isinstance(target, VStop) and isinstance(value, Obj)

    def rec(t):
        if t == target:
            return value
        if isinstance(t, _GUARDS):
            return t
        return _map_children(t, rec)

    return rec(alpha)


def instance_kind(alpha, position) -> str:
    """Classify the instance at a position: "appears" when it is open to
    substitution, "occurs-guarded" when some stop shields it."""
    t = alpha
    for i in position:
        if isinstance(t, _GUARDS):
            return "occurs-guarded"
        t = t.children()[i]
    return "appears"


def bind_index(condition, x, level=0) -> Class:
    """Abstract x out of condition: wrap its unshielded instances in
    index stops and close the result in a class node at the level."""
    assert isinstance(x, VStop)
    body = substitute(condition, x, IStop(x))
    return Class(level, x, body)


def instantiate_index(cls, value):
    """Write value in for the class's own index throughout its body.

    Replacement reaches through stops; a nested class over the same
    variable re-binds, so its body is left alone.
    """
    assert isinstance(cls, Class) and isinstance(value, Obj)
    marker = IStop(cls.index)

    def rec(t):
        if t == marker:
            return value
        if isinstance(t, Class) and t.index == cls.index:
            return t
        return _map_children(t, rec)

    return rec(cls.body)
