"""Proof strings: proofs as reducible trees.

A proof string is a tree whose leaves are axiom references and whose
inner nodes are the three proof-forming moves: substitution into a
proved object, detachment of a contained object, and the class rule.
Reducing a string recomputes the theorem it proves, failing loudly
when a node's children do not fit its move.

The converters translate between strings and the numbered script
form.  A string unfolds into a script with one step per node; a
script folds into a string after its shorthand steps (combination,
citations) are expanded into the primitive moves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .postulates import axiom_ids, axiom_object, class_rule, comprehension_instance
from .scripts import ProofError, Step
from .subst import substitute
from .surface import render
from .syntax import (
    Cont,
    Obj,
    VStop,
    appearing_variables,
    appears,
    canonical_index,
    var,
)


@dataclass(frozen=True)
class AxiomLeaf:
    """An axiom by name; typed names carry the level, the
    comprehension schemata carry (level, bound variable, condition)."""
    name: str
    params: tuple = ()


@dataclass(frozen=True)
class Subst:
    """Substitute for a variable throughout the proved object."""
    child: object
    target: VStop
    substituend: Obj


@dataclass(frozen=True)
class Cut:
    """Detach: right must prove (left's theorem) :> result."""
    left: object
    right: object


@dataclass(frozen=True)
class ClassRule:
    """Abstract a variable into classes on both sides."""
    child: object
    x: VStop
    level: int = 0


def _leaf_theorem(leaf, mode):
    name, params = leaf.name, leaf.params
    if name in ("A13", "B11"):
        if len(params) != 3:
            raise ProofError(
                "%s needs (level, variable, condition) parameters" % name)
        level, x, alpha = params
        try:
            return comprehension_instance(level, x, alpha, mode=mode)
        except (ValueError, AssertionError) as err:
            raise ProofError("%s: %s" % (name, err))
    if name not in axiom_ids(mode):
        raise ProofError("axiom %s is not available in %s mode"
                         % (name, mode))
    try:
        if params:
            return axiom_object(name, *params, mode=mode)
        return axiom_object(name, mode=mode)
    except (ValueError, AssertionError) as err:
        raise ProofError("%s: %s" % (name, err))


def _apply_class_rule(premise, x, level):
    if not (isinstance(premise, Cont) and isinstance(premise.right, Cont)):
        raise ProofError(
            "class-rule violation: premise %s is not of the form "
            "c :> (p :> q)" % render(premise))
    if appears(premise.left, x):
        raise ProofError(
            "class-rule violation: %s appears in the guard %s"
            % (render(x), render(premise.left)))
    return class_rule(premise, x, level)


def reduce_proof_string(proof, mode="classical"):
    """Reduce a proof string to the theorem it proves."""
    if isinstance(proof, AxiomLeaf):
        return _leaf_theorem(proof, mode)
    if isinstance(proof, Subst):
        base = reduce_proof_string(proof.child, mode)
        return substitute(base, proof.target, proof.substituend)
    if isinstance(proof, Cut):
        left = reduce_proof_string(proof.left, mode)
        right = reduce_proof_string(proof.right, mode)
        if not (isinstance(right, Cont) and right.left == left):
            raise ProofError(
                "cut mismatch: %s does not contain %s on the left"
                % (render(right), render(left)))
        return right.right
    if isinstance(proof, ClassRule):
        premise = reduce_proof_string(proof.child, mode)
        return _apply_class_rule(premise, proof.x, proof.level)
    raise TypeError("not a proof string: %r" % (proof,))


def string_to_script(proof, mode="classical"):
    """Unfold a proof string into a script, one step per node."""
    steps = []

    def emit(formula, just):
        label = len(steps) + 1
        steps.append(Step(label, formula, just))
        return label

    def walk(node):
        if isinstance(node, AxiomLeaf):
            theorem = _leaf_theorem(node, mode)
            if node.name in ("A13", "B11"):
                level, x, alpha = node.params
                just = ("comp", x, alpha, level)
            else:
                level = node.params[0] if node.params else None
                just = ("axiom", node.name, level)
            return emit(theorem, just), theorem
        if isinstance(node, Subst):
            label, theorem = walk(node.child)
            new = substitute(theorem, node.target, node.substituend)
            return emit(new, ("sub", label, node.target,
                              node.substituend)), new
        if isinstance(node, Cut):
            li, ti = walk(node.left)
            lj, tj = walk(node.right)
            if not (isinstance(tj, Cont) and tj.left == ti):
                raise ProofError(
                    "cut mismatch: %s does not contain %s on the left"
                    % (render(tj), render(ti)))
            return emit(tj.right, ("exch", li, lj)), tj.right
        if isinstance(node, ClassRule):
            label, theorem = walk(node.child)
            conclusion = _apply_class_rule(theorem, node.x, node.level)
            return emit(conclusion,
                        ("class", label, node.x, node.level)), conclusion
        raise TypeError("not a proof string: %r" % (node,))

    walk(proof)
    return steps


def _fresh_temps(count, *parts):
    """Canonical variables above everything appearing in the parts."""
    top = -1
    for part in parts:
        for v in appearing_variables(part):
            top = max(top, canonical_index(v))
    return [var(top + 1 + i) for i in range(count)]


def inst_string(proof, theorem, mapping):
    """Simultaneous substitution on a proof string.

    The mapping sends variables to objects; clashes between targets and
    values are avoided by renaming through temporary variables first.
    Returns the extended string and its theorem.
    """
    targets = list(mapping)
    values = [mapping[x] for x in targets]
    temps = _fresh_temps(len(targets), theorem, *targets, *values)
    current = proof
    got = theorem
    for x, t in zip(targets, temps):
        current = Subst(current, x, t)
        got = substitute(got, x, t)
    for t, value in zip(temps, values):
        current = Subst(current, t, value)
        got = substitute(got, t, value)
    return current, got


def script_to_string(steps, mode="classical", library_scripts=None):
    """Fold a checked assumption-free script into a proof string.

    Combination steps expand into the two trivialization axioms and
    cuts; citation steps inline the named library script, which must
    itself be assumption-free.  The result reduces to the script's
    final theorem.
    """
    library_scripts = library_scripts or {}
    inlined = {}

    def library_string(name):
        if name not in inlined:
            if name not in library_scripts:
                raise ProofError("unknown citation %r" % name)
            inlined[name] = script_to_string(
                library_scripts[name], mode, library_scripts)
        return inlined[name]

    strings = {}
    formulas = {}
    result = None
    for step in steps:
        result = _step_string(step, strings, formulas, mode, library_string)
        strings[step.label] = result
        formulas[step.label] = step.formula
    if result is None:
        raise ProofError("a script needs at least one step")
    return result


def _step_string(step, strings, formulas, mode, library_string):
    just = step.just
    tag = just[0]
    if tag == "axiom":
        name, level = just[1], just[2]
        return AxiomLeaf(name, () if level is None else (level,))
    if tag == "comp":
        _, x, alpha, level = just
        name = "B11" if level >= 1 else "A13"
        return AxiomLeaf(name, (level, x, alpha))
    if tag == "ext":
        _, variant, level = just
        if level == 0:
            return AxiomLeaf("A14" + variant)
        return AxiomLeaf("B12" + variant, (level,))
    if tag == "sub":
        _, i, x, beta = just
        return Subst(strings[i], x, beta)
    if tag == "exch":
        _, i, j = just
        return Cut(strings[i], strings[j])
    if tag == "class":
        _, i, x, level = just
        return ClassRule(strings[i], x, level)
    if tag == "comb":
        _, i, j = just
        return _comb_string(strings[i], formulas[i], strings[j],
                            formulas[j], mode)
    if tag == "cite":
        return library_string(just[1])
    raise ProofError(
        "step %d: %s steps cannot fold into a proof string"
        % (step.label, tag), step.label)


def _comb_string(pa, fa, pb, fb, mode):
    """(proof of a, proof of b) -> proof of a , b via trivialization."""
    if not (isinstance(fa, Cont) and isinstance(fb, Cont)):
        raise ProofError("combination needs two formulas")
    a11 = axiom_object("A11", mode=mode)
    av, bv = var(0), var(1)
    lift_a, _ = inst_string(AxiomLeaf("A11"), a11,
                            {av: fa.left, bv: fa.right})
    lift_b, _ = inst_string(AxiomLeaf("A11"), a11,
                            {av: fb.left, bv: fb.right})
    triv_a = Cut(pa, lift_a)
    triv_b = Cut(pb, lift_b)
    a10 = axiom_object("A10", mode=mode)
    pair, _ = inst_string(AxiomLeaf("A10"), a10, {av: fa, bv: fb})
    return Cut(triv_b, Cut(triv_a, pair))
