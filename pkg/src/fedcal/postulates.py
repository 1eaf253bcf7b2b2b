"""The postulate emitters.

Fixed axioms are produced as objects over the canonical variables
a, b, c, d; the comprehension and extensionality schemata and the
singlehood expansion take their parameters explicitly.  Derived
witness variables are always the first canonical variables not
appearing in the assembled parts, so every emission is deterministic.

The classical mode drops the primitive-intersection axioms; the
extended mode admits them together with the typed and brace groups.
"""

from __future__ import annotations

from .syntax import ABSURD, EMPTY, Antibrace, Brace, Cont, Fed, Inter, appears, fresh_var, var
from .subst import bind_index, substitute
from .sugar import MODES, eq, in_, neq, not_, or_, sing, subeq, universe

_a, _b, _c, _d, _x = var(0), var(1), var(2), var(3), var(4)


def _fixed(mode):
    a, b, c, d = _a, _b, _c, _d
    return {
        "A1": Cont(Fed(0, Cont(c, a), Cont(c, Cont(a, b))), Cont(c, b)),
        "A2": Cont(Fed(0, Cont(d, Cont(a, b)), Cont(d, Cont(b, c))), Cont(d, Cont(a, c))),
        "A3": Cont(Fed(0, Cont(c, a), Cont(c, b)), Cont(c, Fed(0, a, b))),
        "A4a": Cont(Fed(0, a, b), a),
        "A4b": Cont(Fed(0, a, b), b),
        "A5a": Cont(a, Inter(a, b)),
        "A5b": Cont(b, Inter(a, b)),
        "A6": Cont(Fed(0, Cont(a, c), Cont(b, c)), Cont(Inter(a, b), c)),
        "A7": Cont(a, a),
        "A8": Cont(a, EMPTY),
        "A9": Cont(ABSURD, a),
        "A10": Cont(Cont(EMPTY, a), Cont(Cont(EMPTY, b), Fed(0, a, b))),
        "A11": Cont(Cont(a, b), Cont(EMPTY, Cont(a, b))),
        "A12": Cont(Cont(Cont(Cont(a, b), ABSURD), ABSURD), Cont(a, b)),
        "C1": sing(Brace(a), mode=mode),
        "C2": eq(Antibrace(Brace(a)), a),
        "C3": Cont(
            eq(a, b),
            Fed(0, eq(Brace(a), Brace(b)), eq(Antibrace(a), Antibrace(b))),
        ),
    }


_EXTENDED_EXTRAS = (
    "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10",
    "B12a", "B12b", "C1", "C2", "C3",
)


def axiom_ids(mode="classical"):
    """Names of the fixed axioms usable in a mode (schemata excluded)."""
    assert mode in MODES
    base = ["A1", "A2", "A3", "A4a", "A4b"]
    if mode == "extended":
        base += ["A5a", "A5b", "A6"]
    base += ["A7", "A8", "A9", "A10", "A11", "A12", "A14a", "A14b"]
    if mode == "extended":
        base += list(_EXTENDED_EXTRAS)
    return tuple(base)


def axiom_object(name, level=1, m=None, mode="classical"):
    """The object of a fixed axiom.

    Typed-group names take the level (default 1); B9 additionally
    takes the lower level m (default level - 1).  The comprehension
    schemata A13 and B11 are produced by comprehension_instance.
    """
    assert mode in MODES
    fixed = _fixed(mode)
    if name in fixed:
        return fixed[name]
    if name in ("A14a", "A14b"):
        return extensionality_instance(0, name[-1], _x, _a, mode)
    if name in ("A13", "B11"):
        raise ValueError("%s is a schema; use comprehension_instance" % name)
    if name in ("B12a", "B12b"):
        assert level >= 1
        return extensionality_instance(level, name[-1], _x, _a, mode)
    if name.startswith("B"):
        return _typed_axiom(name, level, m, mode)
    raise ValueError("unknown axiom %r" % name)


def _typed_axiom(name, n, m, mode):
    assert n >= 1
    a, b, c = _a, _b, _c
    if name == "B1":
        return eq(Fed(n, Fed(n, a, b), c), Fed(n, a, Fed(n, b, c)))
    if name == "B2":
        return eq(Fed(n, a, EMPTY), a)
    if name == "B3":
        return eq(Fed(n, a, ABSURD), ABSURD)
    if name == "B4":
        return eq(Fed(n, a, b), Fed(n, b, a))
    if name == "B5":
        return eq(Fed(n, a, a), a)
    if name == "B6":
        return Cont(eq(a, b), eq(Fed(n, a, c), Fed(n, b, c)))
    if name == "B7":
        w = fresh_var(a)
        return Cont(sing(a, w, n - 1, mode), sing(a, w, n, mode))
    if name == "B8":
        w = fresh_var(a)
        return Cont(sing(a, w, n, mode), subeq(a, universe(n - 1), n - 1))
    if name == "B9":
        if m is None:
            m = n - 1
        assert 0 <= m < n
        w = fresh_var(a, b)
        return Cont(
            not_(sing(a, w, n, mode)),
            Cont(
                Fed(0, neq(b, EMPTY), neq(b, a)),
                Fed(
                    0,
                    Fed(0, eq(Fed(m, a, b), ABSURD), not_(subeq(a, b, m))),
                    not_(subeq(b, a, m)),
                ),
            ),
        )
    if name == "B10":
        w = fresh_var(a, b, c)
        return Cont(
            in_(a, Fed(n, b, c), w, n, mode),
            or_(in_(a, b, w, n, mode), in_(a, c, w, n, mode), mode),
        )
    raise ValueError("unknown axiom %r" % name)


def comprehension_instance(level, x, alpha, subject=None, witness=None, mode="classical"):
    """Membership in the class of x with condition alpha, as an equality
    of formulas: subject in the class on one side, singlehood of the
    subject conjoined with the instantiated condition on the other.

    The subject defaults to the first canonical variable not appearing
    in alpha and distinct from x; the witness, shared by both sides, to
    the next one after that.
    """
    assert level >= 0 and mode in MODES
    if subject is None:
        subject = fresh_var(alpha, avoid=(x,))
    if witness is None:
        witness = fresh_var(alpha, avoid=(x, subject))
    assert not appears(alpha, subject)
    cls = bind_index(alpha, x, level)
    lhs = in_(subject, cls, witness, level, mode)
    rhs = Fed(0, sing(subject, witness, level, mode), substitute(alpha, x, subject))
    return eq(lhs, rhs)


def extensionality_instance(level, variant, x=None, a=None, mode="classical"):
    """The two extensionality axioms, at any type level.

    Variant "a": the class of x with condition "x in a" sits below a.
    Variant "b": when a sits below the universe, a sits below that
    class.  At level 0 the containments print through the containment
    sign itself, matching the untyped axiom pair.
    """
    assert level >= 0 and variant in ("a", "b") and mode in MODES
    if x is None:
        x = _x
    if a is None:
        a = _a
    assert x != a
    cls = bind_index(in_(x, a, None, level, mode), x, level)
    if variant == "a":
        if level == 0:
            return Cont(a, cls)
        return subeq(cls, a, level)
    if level == 0:
        return Cont(Cont(universe(0), a), Cont(cls, a))
    return Cont(subeq(a, universe(level), level), subeq(a, cls, level))


def sing_expansion(level, subject, witness=None, mode="classical"):
    """Expansion of the singlehood predicate at a type level."""
    return sing(subject, witness, level, mode)


def class_rule(premise, x, level=0):
    """Conclusion of the class rule from a premise of the shape
    gamma :> (alpha :> beta), abstracting x (which must not appear in
    gamma).  At level 0 the two classes sit in a containment with the
    beta-class on the left; at higher levels they sit in the typed
    containment order, alpha-class below beta-class.
    """
    assert isinstance(premise, Cont) and isinstance(premise.right, Cont)
    gamma = premise.left
    alpha, beta = premise.right.left, premise.right.right
    assert not appears(gamma, x), "the abstracted variable appears in the guard"
    ca = bind_index(alpha, x, level)
    cb = bind_index(beta, x, level)
    if level == 0:
        return Cont(gamma, Cont(cb, ca))
    return Cont(gamma, subeq(ca, cb, level))
