"""Core object syntax.

Objects are immutable trees built from the empty constant, postfix
stops, federation, containment, intersection, class abstraction,
braces and structure-constant literals.  Equality and hashing are
structural.  Variables are chains of variable stops over the empty
object; the first fourteen get the usual one-letter surface names.
"""

from __future__ import annotations


class Obj:
    """Base class for syntax nodes.  Instances are treated as immutable."""

    __slots__ = ("_hash",)
    _fields: tuple = ()

    def __eq__(self, other):
        if self is other:
            return True
        if type(self) is not type(other) or self._hash != other._hash:
            return False
        for name in self._fields:
            if getattr(self, name) != getattr(other, name):
                return False
        return True

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        args = ", ".join(repr(getattr(self, f)) for f in self._fields)
        return "%s(%s)" % (type(self).__name__, args)

    def children(self) -> tuple:
        return ()


class Empty(Obj):
    """The empty object, the only atomic constant."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            inst = object.__new__(cls)
            inst._hash = hash("Empty")
            cls._instance = inst
        return cls._instance


class CStop(Obj):
    """Constant stop: shields its body from substitution permanently."""

    __slots__ = ("body",)
    _fields = ("body",)

    def __init__(self, body):
        assert isinstance(body, Obj)
        self.body = body
        self._hash = hash(("CStop", body._hash))

    def children(self):
        return (self.body,)


class VStop(Obj):
    """Variable stop.  Every object of this shape is a variable."""

    __slots__ = ("body",)
    _fields = ("body",)

    def __init__(self, body):
        assert isinstance(body, Obj)
        self.body = body
        self._hash = hash(("VStop", body._hash))

    def children(self):
        return (self.body,)


class IStop(Obj):
    """Index stop: marks a bound occurrence inside a class body."""

    __slots__ = ("body",)
    _fields = ("body",)

    def __init__(self, body):
        assert isinstance(body, Obj)
        self.body = body
        self._hash = hash(("IStop", body._hash))

    def children(self):
        return (self.body,)


class Fed(Obj):
    """Federation of two objects, carrying a type level (0 = plain)."""

    __slots__ = ("level", "left", "right")
    _fields = ("level", "left", "right")

    def __init__(self, level, left, right):
        assert isinstance(level, int) and level >= 0
        assert isinstance(left, Obj) and isinstance(right, Obj)
        self.level = level
        self.left = left
        self.right = right
        self._hash = hash(("Fed", level, left._hash, right._hash))

    def children(self):
        return (self.left, self.right)


class Cont(Obj):
    """Containment: left contains right.  Formulas are exactly these."""

    __slots__ = ("left", "right")
    _fields = ("left", "right")

    def __init__(self, left, right):
        assert isinstance(left, Obj) and isinstance(right, Obj)
        self.left = left
        self.right = right
        self._hash = hash(("Cont", left._hash, right._hash))

    def children(self):
        return (self.left, self.right)


class Inter(Obj):
    """Primitive intersection (the extended system; defined in the classical one)."""

    __slots__ = ("left", "right")
    _fields = ("left", "right")

    def __init__(self, left, right):
        assert isinstance(left, Obj) and isinstance(right, Obj)
        self.left = left
        self.right = right
        self._hash = hash(("Inter", left._hash, right._hash))

    def children(self):
        return (self.left, self.right)


class Class(Obj):
    """Class abstraction at a type level.

    The body is stored with bound occurrences already wrapped as
    IStop(index); the index slot records which variable was bound and
    is metadata, not a child position.
    """

    __slots__ = ("level", "index", "body")
    _fields = ("level", "index", "body")

    def __init__(self, level, index, body):
        assert isinstance(level, int) and level >= 0
        assert isinstance(index, Obj) and isinstance(body, Obj)
        self.level = level
        self.index = index
        self.body = body
        self._hash = hash(("Class", level, index._hash, body._hash))

    def children(self):
        return (self.body,)


class Brace(Obj):
    """Brace: packs its body one membership layer up."""

    __slots__ = ("body",)
    _fields = ("body",)

    def __init__(self, body):
        assert isinstance(body, Obj)
        self.body = body
        self._hash = hash(("Brace", body._hash))

    def children(self):
        return (self.body,)


class Antibrace(Obj):
    """Antibrace: undoes a brace (well-formed only over a brace or a variable)."""

    __slots__ = ("body",)
    _fields = ("body",)

    def __init__(self, body):
        assert isinstance(body, Obj)
        self.body = body
        self._hash = hash(("Antibrace", body._hash))

    def children(self):
        return (self.body,)


class Num(Obj):
    """Structure-constant literal #m, m >= 1 (#0 is just the empty object)."""

    __slots__ = ("value",)
    _fields = ("value",)

    def __init__(self, value):
        assert isinstance(value, int) and value >= 1
        self.value = value
        self._hash = hash(("Num", value))


EMPTY = Empty()
ABSURD = CStop(EMPTY)


def num(m):
    """Structure constant for m >= 0; 0 gives the empty object."""
    assert isinstance(m, int) and m >= 0
    return EMPTY if m == 0 else Num(m)


# surface names of the canonical variables, in enumeration order
_SURFACE = ("a", "b", "c", "d", "x", "y", "z", "A", "B", "C", "D", "X", "Y", "Z")
_var_cache: list = []


def var(i) -> VStop:
    """The i-th canonical variable: i+1 nested variable stops over O."""
    assert isinstance(i, int) and i >= 0
    while len(_var_cache) <= i:
        base = _var_cache[-1] if _var_cache else EMPTY
        _var_cache.append(VStop(base))
    return _var_cache[i]


def var_name(i) -> str:
    return _SURFACE[i] if i < len(_SURFACE) else "v%d" % i


def name_to_index(name):
    """Inverse of var_name, or None for names that are not variable names."""
    if name in _SURFACE:
        return _SURFACE.index(name)
    if len(name) > 1 and name[0] == "v" and name[1:].isdigit():
        return int(name[1:])
    return None


def canonical_index(obj):
    """Position of a canonical variable in the enumeration, else None."""
    n = 0
    t = obj
    while isinstance(t, VStop):
        t = t.body
        n += 1
    return n - 1 if n > 0 and isinstance(t, Empty) else None


def is_variable(obj) -> bool:
    return isinstance(obj, VStop)


_GUARDS = (CStop, VStop, IStop)


def appears(obj, v) -> bool:
    """True when v has an instance in obj not shielded by any stop."""
    assert isinstance(v, VStop)
    if obj == v:
        return True
    if isinstance(obj, _GUARDS):
        return False
    return any(appears(c, v) for c in obj.children())


def occurs(obj, sub) -> bool:
    """True when sub is a subtree of obj, stop bodies and index slots included."""
    if obj == sub:
        return True
    if isinstance(obj, Class) and occurs(obj.index, sub):
        return True
    return any(occurs(c, sub) for c in obj.children())


def appearing_variables(obj) -> list:
    """Variables with an unshielded instance, in first-encounter order."""
    out: list = []

    def walk(t):
        if isinstance(t, VStop):
            if t not in out:
                out.append(t)
            return
        if isinstance(t, _GUARDS):
            return
        for c in t.children():
            walk(c)

    walk(obj)
    return out


def fresh_var(*parts, avoid=()) -> VStop:
    """First canonical variable appearing in no part and not in avoid."""
    i = 0
    while True:
        v = var(i)
        if v not in avoid and not any(appears(p, v) for p in parts):
            return v
        i += 1


def closed(obj) -> bool:
    """No variable appears; shielded occurrences are allowed."""
    if isinstance(obj, VStop):
        return False
    if isinstance(obj, (CStop, IStop)):
        return True
    return all(closed(c) for c in obj.children())


def is_formula(obj) -> bool:
    return isinstance(obj, Cont)


def weight(obj) -> int:
    """Evaluation weight of a closed object."""
    assert closed(obj), "weight is only defined on closed objects"
    return _weight(obj)


def _weight(t):
    if isinstance(t, (Empty, Num)):
        return 0
    if isinstance(t, Fed):
        return max(_weight(t.left), _weight(t.right))
    if isinstance(t, (Cont, Inter)):
        # intersections rewrite through a table just as containments do
        return max(_weight(t.left), _weight(t.right)) + 1
    # every stop, class, and brace is transparent
    return _weight(t.body)


def subobjects(obj) -> list:
    """Preorder (position, subtree, class degree) triples, root included."""
    out: list = []

    def walk(t, pos, deg):
        out.append((pos, t, deg))
        if isinstance(t, Class):
            walk(t.body, pos + (0,), deg + 1)
        else:
            for i, c in enumerate(t.children()):
                walk(c, pos + (i,), deg)

    walk(obj, (), 0)
    return out


def subobject_at(obj, pos):
    t = obj
    for i in pos:
        t = t.children()[i]
    return t


def structural_query(obj) -> dict:
    """One-shot report: appearing variables, class indices, closedness,
    formula-hood, and the subobject list with per-position class degrees."""
    free = appearing_variables(obj)
    subs = subobjects(obj)
    indices: list = []
    for _, t, _ in subs:
        if isinstance(t, Class) and t.index not in indices:
            indices.append(t.index)
    return {
        "appearing": free,
        "indices": indices,
        "closed": not free,
        "formula": is_formula(obj),
        "subobjects": subs,
    }


def validate_formation(obj) -> list:
    """Check obj against the formation rules.

    Returns a list of (position, message) pairs, empty when the object
    is well formed.  Index stops must sit on a variable and under a
    class binding that variable; a class may not let its own binder
    variable appear unshielded in the body; antibraces may only sit on
    a brace or on a bare variable.
    """
    bad: list = []

    def walk(t, pos, binders):
        if isinstance(t, IStop):
            if not isinstance(t.body, VStop):
                bad.append((pos, "index stop on a non-variable"))
            elif t.body not in binders:
                bad.append((pos, "index stop outside any class binding its variable"))
            walk(t.body, pos + (0,), binders)
        elif isinstance(t, Class):
            if not isinstance(t.index, VStop):
                bad.append((pos, "class index is not a variable"))
            else:
                if appears(t.body, t.index):
                    bad.append((pos, "binder variable appears unbound in the class body"))
                binders = binders + (t.index,)
            walk(t.body, pos + (0,), binders)
        elif isinstance(t, Antibrace):
            if not isinstance(t.body, (Brace, VStop)):
                bad.append((pos, "antibrace over a non-brace"))
            walk(t.body, pos + (0,), binders)
        else:
            for i, c in enumerate(t.children()):
                walk(c, pos + (i,), binders)

    walk(obj, (), ())
    return bad
