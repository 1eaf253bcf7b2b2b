"""Finite structures and valuation.

A k-structure has constants O, 1, ..., 2^k - 1 and the absurd value,
with each concrete constant read through its base-2 expansion: the
individuals are the k powers of two.  Federation is bitwise union with
the absurd value absorbing; a containment holds (value O) exactly when
the right side's atoms sit inside the left side's, the absurd value
containing everything and contained only in itself; intersection, in
the extended mode, is bitwise meet with the absurd value as identity.

Closed objects are evaluated in two stages: declassification replaces
classes by the federation of the individuals passing their conditions,
deepest self-contained classes first, and direct evaluation then
rewrites weight-one containments through the tables, round by round.
A separate one-pass recursive valuation serves as a cross-check.
"""

from __future__ import annotations

import itertools

from .syntax import (
    ABSURD,
    EMPTY,
    Antibrace,
    Brace,
    Class,
    CStop,
    Cont,
    Empty,
    Fed,
    IStop,
    Inter,
    Num,
    VStop,
    appearing_variables,
    canonical_index,
    closed,
    num,
    subobjects,
    var,
    _weight,
)
from .subst import instantiate_index, substitute
from .sugar import MODES
from .postulates import axiom_ids, axiom_object, comprehension_instance


class _Absurd:
    """The absurd value of every k-structure."""

    __slots__ = ()

    def __repr__(self):
        return "_|_"


BOT = _Absurd()


def domain(k):
    """All values of the k-structure, in order: O, 1, ..., 2^k - 1, absurd."""
    assert k >= 0
    return list(range(2 ** k)) + [BOT]


def individuals(k):
    """The k atoms: the powers of two up to 2^(k-1)."""
    return [2 ** i for i in range(k)]


def _check_value(k, v):
    assert v is BOT or (isinstance(v, int) and 0 <= v < 2 ** k), "value outside the structure"


def table_lookup(k, op, a, b):
    """Table entry for a two-place sign applied to two domain values."""
    _check_value(k, a)
    _check_value(k, b)
    if op == "fed":
        if a is BOT or b is BOT:
            return BOT
        return a | b
    if op == "cont":
        if a is BOT:
            return 0
        if b is BOT:
            return BOT
        return 0 if (a | b) == a else BOT
    if op == "inter":
        if a is BOT:
            return b
        if b is BOT:
            return a
        return a & b
    raise ValueError("unknown table %r" % op)


def full_table(k, op):
    """The whole table as a square matrix over domain(k)."""
    dom = domain(k)
    return [[table_lookup(k, op, a, b) for b in dom] for a in dom]


def value_to_obj(v):
    """The weight-zero object denoting a domain value."""
    if v is BOT:
        return ABSURD
    return num(v)


def statable_report(obj, k, mode="classical"):
    """Why an object cannot be stated in the k-structure: a list of
    (position, message) pairs, empty when it is statable."""
    assert mode in MODES
    bad = []

    def walk(t, pos):
        if isinstance(t, Num):
            if t.value >= 2 ** k:
                bad.append((pos, "constant #%d needs more than %d atoms" % (t.value, k)))
        elif isinstance(t, CStop):
            if not isinstance(t.body, Empty):
                bad.append((pos, "constant stop over a non-empty body"))
        elif isinstance(t, (VStop, IStop, Empty)):
            pass
        elif isinstance(t, Fed):
            if t.level > 0:
                bad.append((pos, "typed federation has no table"))
            else:
                walk(t.left, pos + (0,))
                walk(t.right, pos + (1,))
        elif isinstance(t, Cont):
            walk(t.left, pos + (0,))
            walk(t.right, pos + (1,))
        elif isinstance(t, Inter):
            if mode == "classical":
                bad.append((pos, "intersection sign outside the extended mode"))
            else:
                walk(t.left, pos + (0,))
                walk(t.right, pos + (1,))
        elif isinstance(t, Class):
            if t.level > 0:
                bad.append((pos, "typed class has no table"))
            else:
                walk(t.body, pos + (0,))
        elif isinstance(t, (Brace, Antibrace)):
            bad.append((pos, "braces have no table"))
        else:
            raise TypeError(t)

    walk(obj, ())
    return bad


def statable(obj, k, mode="classical") -> bool:
    return not statable_report(obj, k, mode)


def _ground_value(t, k):
    # value of a weight-zero, class-free, closed object
    if isinstance(t, Empty):
        return 0
    if isinstance(t, Num):
        return t.value
    if isinstance(t, CStop):
        return BOT
    if isinstance(t, Fed):
        return table_lookup(k, "fed", _ground_value(t.left, k), _ground_value(t.right, k))
    raise AssertionError("object of positive weight in a ground position")


def _self_contained(cls):
    # no index stop under this class points at a binder outside it
    def walk(t, stack):
        if isinstance(t, IStop):
            return t.body in stack
        if isinstance(t, Class):
            return walk(t.body, stack + (t.index,))
        return all(walk(c, stack) for c in t.children())

    return walk(cls.body, (cls.index,))


def _has_class(t):
    if isinstance(t, Class):
        return True
    return any(_has_class(c) for c in t.children())


def _declassify_round(t, k, mode):
    # replace the self-contained classes of greatest class degree
    marks = [
        (pos, deg)
        for pos, node, deg in subobjects(t)
        if isinstance(node, Class) and _self_contained(node)
    ]
    assert marks, "no self-contained class to process"
    dmax = max(deg for _, deg in marks)
    chosen = {pos for pos, deg in marks if deg == dmax}
    # equal class subterms (equality duplicates them) share one valuation
    cache = {}

    def valued(node):
        if node not in cache:
            cache[node] = value_to_obj(_class_value(node, k, mode))
        return cache[node]

    def rebuild(node, pos):
        if pos in chosen:
            return valued(node)
        if isinstance(node, Class):
            return Class(node.level, node.index, rebuild(node.body, pos + (0,)))
        if isinstance(node, (Empty, Num)):
            return node
        if isinstance(node, Fed):
            return Fed(node.level, rebuild(node.left, pos + (0,)), rebuild(node.right, pos + (1,)))
        if isinstance(node, (Cont, Inter)):
            return type(node)(rebuild(node.left, pos + (0,)), rebuild(node.right, pos + (1,)))
        return type(node)(rebuild(node.body, pos + (0,)))

    return rebuild(t, ())


def _class_value(cls, k, mode):
    acc = 0
    for i in individuals(k):
        grounded = instantiate_index(cls, num(i))
        if _eval(grounded, k, mode) == 0:
            acc = table_lookup(k, "fed", acc, i)
    return acc


def _direct_round(t, k, mode):
    # rewrite every weight-one containment or intersection in one pass
    if isinstance(t, (Cont, Inter)) and _weight(t) == 1:
        op = "cont" if isinstance(t, Cont) else "inter"
        return value_to_obj(
            table_lookup(k, op, _ground_value(t.left, k), _ground_value(t.right, k))
        )
    if isinstance(t, Fed):
        return Fed(t.level, _direct_round(t.left, k, mode), _direct_round(t.right, k, mode))
    if isinstance(t, (Cont, Inter)):
        return type(t)(_direct_round(t.left, k, mode), _direct_round(t.right, k, mode))
    return t


def _eval(t, k, mode):
    while _has_class(t):
        t = _declassify_round(t, k, mode)
    while _weight(t) > 0:
        t = _direct_round(t, k, mode)
    return _ground_value(t, k)


def evaluate(obj, k, mode="classical"):
    """Value of a closed statable object in the k-structure."""
    assert closed(obj), "evaluation needs a closed object"
    report = statable_report(obj, k, mode)
    assert not report, "not statable in k=%d: %s" % (k, report[0][1])
    return _eval(obj, k, mode)


def denote(obj, k, mode="classical"):
    """One-pass recursive valuation; independent of the tables and the
    staged procedure, used as a cross-check."""
    assert closed(obj) and statable(obj, k, mode)
    memo = {}

    def rec(t):
        if t in memo:
            return memo[t]
        memo[t] = got = _denote_node(t, k, rec)
        return got

    return rec(obj)


def _denote_node(t, k, rec):
    if isinstance(t, Empty):
        return 0
    if isinstance(t, Num):
        return t.value
    if isinstance(t, CStop):
        return BOT
    if isinstance(t, Fed):
        l, r = rec(t.left), rec(t.right)
        if l is BOT or r is BOT:
            return BOT
        return l | r
    if isinstance(t, Cont):
        l, r = rec(t.left), rec(t.right)
        if l is BOT:
            return 0
        if r is BOT:
            return BOT
        return 0 if l | r == l else BOT
    if isinstance(t, Inter):
        l, r = rec(t.left), rec(t.right)
        if l is BOT:
            return r
        if r is BOT:
            return l
        return l & r
    if isinstance(t, Class):
        total = 0
        for i in range(k):
            one = 2 ** i
            if rec(instantiate_index(t, num(one))) == 0:
                total |= one
        return total
    raise TypeError(t)


def _sorted_variables(obj):
    free = appearing_variables(obj)
    canon = sorted(
        (v for v in free if canonical_index(v) is not None), key=canonical_index
    )
    rest = [v for v in free if canonical_index(v) is None]
    return canon + rest


def classify(obj, k, mode="classical"):
    """Evaluate under every assignment.

    Returns a report with the variables in assignment order, the map
    from attainable values to their first witnessing assignments, and
    the constant value when only one value is attained (else None).
    """
    report = statable_report(obj, k, mode)
    assert not report, "not statable in k=%d: %s" % (k, report[0][1])
    names = _sorted_variables(obj)
    attainable = {}
    for values in itertools.product(domain(k), repeat=len(names)):
        t = obj
        for v, val in zip(names, values):
            t = substitute(t, v, value_to_obj(val))
        got = _eval(t, k, mode)
        if got not in attainable:
            attainable[got] = values
    valid = next(iter(attainable)) if len(attainable) == 1 else None
    return {"variables": names, "attainable": attainable, "valid": valid}


def countermodel(obj, k_max=3, mode="classical"):
    """Search the structures k = 0 .. k_max, smallest first, for an
    assignment giving the object a value other than O.  Structures
    where the object is not statable are skipped.  Returns None when
    the object is valid throughout, else a report with the structure,
    the first bad assignment in lexicographic value order, and the
    value it produces."""
    names = _sorted_variables(obj)
    for k in range(k_max + 1):
        if not statable(obj, k, mode):
            continue
        for values in itertools.product(domain(k), repeat=len(names)):
            t = obj
            for v, val in zip(names, values):
                t = substitute(t, v, value_to_obj(val))
            got = _eval(t, k, mode)
            if got != 0:
                return {
                    "k": k,
                    "assignment": dict(zip(names, values)),
                    "value": got,
                }
    return None


def safe_conditions(x, k):
    """Deterministic family of comprehension conditions on the index x
    whose instances stay sound in the k-structure: the trivial truths
    and falsehood, containments of the index below each constant, and
    federations of those."""
    base = [EMPTY, ABSURD, Cont(x, EMPTY), Cont(x, x)]
    base += [Cont(num(c), x) for c in range(1, 2 ** k)]
    out = list(base)
    for i, p in enumerate(base):
        for q in base[i:]:
            out.append(Fed(0, p, q))
    return out


def soundness_sweep(ks=(0, 1, 2, 3), mode="classical", scripts=()):
    """Check that every statable fixed axiom, every comprehension
    instance over the safe condition family, and every supplied
    (name, theorem) pair is O-valid in each listed structure.
    Returns counts and any failures found."""
    x = var(4)
    checked = 0
    instances = 0
    failures = []
    for k in ks:
        for name, theorem in scripts:
            if not statable(theorem, k, mode):
                continue
            checked += 1
            rep = classify(theorem, k, mode)
            if set(rep["attainable"]) != {0}:
                failures.append((k, name, rep["attainable"]))
        for name in axiom_ids(mode):
            obj = axiom_object(name, mode=mode)
            if not statable(obj, k, mode):
                continue
            checked += 1
            rep = classify(obj, k, mode)
            if set(rep["attainable"]) != {0}:
                failures.append((k, name, rep["attainable"]))
        for cond in safe_conditions(x, k):
            inst = comprehension_instance(0, x, cond, mode=mode)
            if not statable(inst, k, mode):
                continue
            checked += 1
            instances += 1
            rep = classify(inst, k, mode)
            if set(rep["attainable"]) != {0}:
                failures.append((k, "comprehension over " + repr(cond), rep["attainable"]))
    return {"checked": checked, "instances": instances, "failures": failures}
