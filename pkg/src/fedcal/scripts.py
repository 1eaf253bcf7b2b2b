"""Proof scripts: numbered derivations and their checkers.

A script is a list of steps, each carrying a label, an object, and a
justification.  The formal checker recomputes every step from its
justification and accepts only when the recomputed object matches the
written one, so a script is evidence that can be re-verified from the
postulate emitters alone.  A second checker admits assumption and
discharge steps and polices the bookkeeping that makes them sound.

Text form, one step per line, ``--`` starting a comment:

    1. a :> a ; A7
    2. (O :> a) :> (O :> a) ; sub 1 a := O :> a

Justifications:

    A7              fixed axiom by name
    B5@2            typed axiom at level 2
    comp x <object> comprehension with bound variable x (@n for level n)
    ext-a / ext-b   extensionality halves (@n for the typed forms)
    exch i j        detachment: step j must contain step i on the left
    sub i x := <object>
    class i x       class introduction on x (@n for level n)
    comb i j        combination of two formulas
    cite <name>     a library theorem by name
    assume          open an assumption (discipline checker only)
    discharge i     close assumption i (discipline checker only)
"""

from __future__ import annotations

import re

from .postulates import (
    axiom_ids,
    axiom_object,
    class_rule,
    comprehension_instance,
    extensionality_instance,
)
from .subst import substitute
from .surface import parse, render
from .syntax import (
    Cont,
    Fed,
    VStop,
    appearing_variables,
    appears,
    canonical_index,
    validate_formation,
)


class ProofError(Exception):
    """A script or proof string failed to check."""

    def __init__(self, message, label=None):
        super().__init__(message)
        self.label = label


class Step:
    """One line of a script."""

    __slots__ = ("label", "formula", "just")

    def __init__(self, label, formula, just):
        self.label = label
        self.formula = formula
        self.just = just

    def __eq__(self, other):
        if not isinstance(other, Step):
            return NotImplemented
        return (self.label, self.formula, self.just) == (
            other.label, other.formula, other.just)

    def __hash__(self):
        return hash((self.label, self.formula, self.just))

    def __repr__(self):
        return "Step(%d, %r, %r)" % (self.label, self.formula, self.just)


_LINE_RE = re.compile(r"^(\d+)\.\s*(.*)$")
_AXIOM_RE = re.compile(r"^([ABC]\d+[ab]?)(?:\s*@(\d+))?$")
_EXCH_RE = re.compile(r"^exch\s+(\d+)\s+(\d+)$")
_SUB_RE = re.compile(r"^sub\s+(\d+)\s+(\S+)\s*:=\s*(\S.*)$")
_CLASS_RE = re.compile(r"^class\s+(\d+)\s+(\S+?)(?:\s*@(\d+))?$")
_COMP_RE = re.compile(r"^comp\s+(\S+)\s+(\S.*?)(?:\s*@(\d+))?$")
_EXT_RE = re.compile(r"^ext-([ab])(?:\s*@(\d+))?$")
_COMB_RE = re.compile(r"^comb\s+(\d+)\s+(\d+)$")
_CITE_RE = re.compile(r"^cite\s+(\S+)$")
_DISCHARGE_RE = re.compile(r"^discharge\s+(\d+)$")


def _parse_var(text, mode, where):
    got = parse(text, mode)
    if not isinstance(got, VStop):
        raise ProofError("%s: %r is not a variable" % (where, text))
    return got


def parse_justification(text, mode="classical"):
    """Parse one justification into its tagged tuple form."""
    text = text.strip()
    if text == "assume":
        return ("assume",)
    m = _DISCHARGE_RE.match(text)
    if m:
        return ("discharge", int(m.group(1)))
    m = _EXCH_RE.match(text)
    if m:
        return ("exch", int(m.group(1)), int(m.group(2)))
    m = _SUB_RE.match(text)
    if m:
        x = _parse_var(m.group(2), mode, "sub")
        return ("sub", int(m.group(1)), x, parse(m.group(3), mode))
    m = _CLASS_RE.match(text)
    if m:
        x = _parse_var(m.group(2), mode, "class")
        level = int(m.group(3)) if m.group(3) else 0
        return ("class", int(m.group(1)), x, level)
    m = _COMP_RE.match(text)
    if m:
        x = _parse_var(m.group(1), mode, "comp")
        level = int(m.group(3)) if m.group(3) else 0
        return ("comp", x, parse(m.group(2), mode), level)
    m = _EXT_RE.match(text)
    if m:
        level = int(m.group(2)) if m.group(2) else 0
        return ("ext", m.group(1), level)
    m = _COMB_RE.match(text)
    if m:
        return ("comb", int(m.group(1)), int(m.group(2)))
    m = _CITE_RE.match(text)
    if m:
        return ("cite", m.group(1))
    m = _AXIOM_RE.match(text)
    if m:
        level = int(m.group(2)) if m.group(2) else None
        return ("axiom", m.group(1), level)
    raise ProofError("cannot parse justification %r" % text)


def parse_script(text, mode="classical"):
    """Parse a proof script from its text form."""
    steps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("--"):
            continue
        m = _LINE_RE.match(line)
        if not m:
            raise ProofError(
                "line %d: expected 'n. <object> ; <justification>'" % lineno)
        body = m.group(2)
        if ";" not in body:
            raise ProofError("line %d: missing ';' before the justification"
                             % lineno)
        ftext, jtext = body.split(";", 1)
        steps.append(Step(int(m.group(1)), parse(ftext.strip(), mode),
                          parse_justification(jtext, mode)))
    if not steps:
        raise ProofError("a script needs at least one step")
    return steps


def format_justification(just):
    """Text form of a justification tuple."""
    tag = just[0]
    if tag == "axiom":
        name, level = just[1], just[2]
        return name if level is None else "%s@%d" % (name, level)
    if tag == "exch":
        return "exch %d %d" % (just[1], just[2])
    if tag == "sub":
        return "sub %d %s := %s" % (just[1], render(just[2]), render(just[3]))
    if tag == "class":
        base = "class %d %s" % (just[1], render(just[2]))
        return base if just[3] == 0 else base + " @%d" % just[3]
    if tag == "comp":
        base = "comp %s %s" % (render(just[1]), render(just[2]))
        return base if just[3] == 0 else base + " @%d" % just[3]
    if tag == "ext":
        base = "ext-" + just[1]
        return base if just[2] == 0 else base + " @%d" % just[2]
    if tag == "comb":
        return "comb %d %d" % (just[1], just[2])
    if tag == "cite":
        return "cite %s" % just[1]
    if tag == "assume":
        return "assume"
    if tag == "discharge":
        return "discharge %d" % just[1]
    raise ValueError("unknown justification %r" % (just,))


def format_script(steps):
    """Render a script back to its text form."""
    lines = ["%d. %s ; %s" % (s.label, render(s.formula),
                              format_justification(s.just))
             for s in steps]
    return "\n".join(lines) + "\n"


def _fetch(formulas, ref, label, dead=frozenset()):
    if ref in dead:
        raise ProofError(
            "step %d cites step %d inside a discharged segment"
            % (label, ref), label)
    if ref not in formulas:
        raise ProofError("step %d cites unknown step %d" % (label, ref),
                         label)
    return formulas[ref]


def _class_conclusion(premise, x, level, label):
    if not (isinstance(premise, Cont) and isinstance(premise.right, Cont)):
        raise ProofError(
            "step %d: class rule needs a premise of the form "
            "c :> (p :> q)" % label, label)
    if appears(premise.left, x):
        raise ProofError(
            "step %d: class rule variable %s appears in the guard %s"
            % (label, render(x), render(premise.left)), label)
    return class_rule(premise, x, level)


def _expected(step, formulas, mode, library, dead=frozenset()):
    """Recompute the object a justification produces."""
    just = step.just
    tag = just[0]
    label = step.label
    if tag == "axiom":
        name, level = just[1], just[2]
        if name in ("A13", "B11"):
            raise ProofError(
                "step %d: %s is a schema; justify with comp" % (label, name),
                label)
        if name not in axiom_ids(mode):
            raise ProofError("step %d: axiom %s is not available in %s mode"
                             % (label, name, mode), label)
        try:
            return axiom_object(name, level=1 if level is None else level,
                                mode=mode)
        except (ValueError, AssertionError) as err:
            raise ProofError("step %d: %s" % (label, err), label)
    if tag == "comp":
        _, x, alpha, level = just
        try:
            return comprehension_instance(level, x, alpha, mode=mode)
        except (ValueError, AssertionError) as err:
            raise ProofError("step %d: %s" % (label, err), label)
    if tag == "ext":
        _, variant, level = just
        try:
            return extensionality_instance(level, variant, mode=mode)
        except (ValueError, AssertionError) as err:
            raise ProofError("step %d: %s" % (label, err), label)
    if tag == "exch":
        _, i, j = just
        si = _fetch(formulas, i, label, dead)
        sj = _fetch(formulas, j, label, dead)
        if not (isinstance(sj, Cont) and sj.left == si):
            raise ProofError(
                "step %d: exchange needs step %d to contain step %d on "
                "the left" % (label, j, i), label)
        return sj.right
    if tag == "sub":
        _, i, x, beta = just
        return substitute(_fetch(formulas, i, label, dead), x, beta)
    if tag == "class":
        _, i, x, level = just
        return _class_conclusion(_fetch(formulas, i, label, dead), x, level,
                                 label)
    if tag == "comb":
        _, i, j = just
        si = _fetch(formulas, i, label, dead)
        sj = _fetch(formulas, j, label, dead)
        if not (isinstance(si, Cont) and isinstance(sj, Cont)):
            raise ProofError(
                "step %d: combination needs two formulas" % label, label)
        return Fed(0, si, sj)
    if tag == "cite":
        name = just[1]
        if name not in library:
            raise ProofError("step %d: unknown citation %r" % (label, name),
                             label)
        return library[name]
    if tag in ("assume", "discharge"):
        raise ProofError(
            "step %d: assumption steps need the discipline checker" % label,
            label)
    raise ProofError("step %d: unknown justification %r" % (label, just),
                     label)


def _take(step, formulas, mode, library, dead=frozenset()):
    expected = _expected(step, formulas, mode, library, dead)
    if expected != step.formula:
        raise ProofError(
            "step %d: expected %s, found %s"
            % (step.label, render(expected), render(step.formula)),
            step.label)
    problems = validate_formation(step.formula)
    if problems:
        raise ProofError("step %d: ill-formed object: %s"
                         % (step.label, problems[0][1]), step.label)


def check_script(steps, mode="classical", library=None):
    """Check a formal script and return its final theorem.

    Every step is recomputed from its justification; the written object
    must match exactly.  Labels must be strictly increasing and every
    reference must point at an earlier step.  Assumption steps are
    rejected here; use check_assumption_discipline for those.
    """
    if not steps:
        raise ProofError("a script needs at least one step")
    library = library or {}
    formulas = {}
    last = 0
    for step in steps:
        if step.label <= last:
            raise ProofError(
                "step %d: labels must be strictly increasing" % step.label,
                step.label)
        last = step.label
        _take(step, formulas, mode, library)
        formulas[step.label] = step.formula
    return steps[-1].formula


def check_assumption_discipline(steps, mode="classical", library=None):
    """Check a script that may open and discharge assumptions.

    Assumptions must be discharged last-in first-out.  A discharge of
    assumption i must carry (current form of i) :> (previous step).
    Substitution on a variable named by an open assumption is allowed
    but flagged, and every open assumption's tracked form is updated in
    lockstep.  The class rule is refused on named variables, and steps
    inside discharged segments cannot be cited afterwards.

    Returns a report dict with the final theorem (None while
    assumptions stay open), the flags, and a per-step trace.
    """
    if not steps:
        raise ProofError("a script needs at least one step")
    library = library or {}
    formulas = {}
    stack = []
    dead = set()
    flags = []
    trace = []
    last = 0
    prev_label = None
    for step in steps:
        if step.label <= last:
            raise ProofError(
                "step %d: labels must be strictly increasing" % step.label,
                step.label)
        last = step.label
        tag = step.just[0]
        if tag == "assume":
            problems = validate_formation(step.formula)
            if problems:
                raise ProofError("step %d: ill-formed assumption: %s"
                                 % (step.label, problems[0][1]), step.label)
            stack.append({"label": step.label, "current": step.formula})
        elif tag == "discharge":
            target = step.just[1]
            if not stack:
                raise ProofError(
                    "step %d: no open assumption to discharge" % step.label,
                    step.label)
            top = stack[-1]
            if top["label"] != target:
                raise ProofError(
                    "step %d: assumption %d must be discharged before %d"
                    % (step.label, top["label"], target), step.label)
            expected = Cont(top["current"], formulas[prev_label])
            if expected != step.formula:
                raise ProofError(
                    "step %d: expected %s, found %s"
                    % (step.label, render(expected), render(step.formula)),
                    step.label)
            stack.pop()
            # the whole segment, assumption included, becomes uncitable
            dead.update(l for l in formulas if top["label"] <= l < step.label)
        else:
            if tag == "sub":
                x = step.just[2]
                if any(appears(a["current"], x) for a in stack):
                    flags.append((step.label, x))
            if tag == "class":
                x = step.just[2]
                if any(appears(a["current"], x) for a in stack):
                    raise ProofError(
                        "step %d: class rule on the named variable %s"
                        % (step.label, render(x)), step.label)
            _take(step, formulas, mode, library, dead)
            if tag == "sub":
                _, _, x, beta = step.just
                for a in stack:
                    a["current"] = substitute(a["current"], x, beta)
        formulas[step.label] = step.formula
        prev_label = step.label
        named = {v for a in stack for v in appearing_variables(a["current"])}
        trace.append({
            "label": step.label,
            "open": tuple(a["label"] for a in stack),
            "named": tuple(sorted(named, key=canonical_index)),
        })
    theorem = steps[-1].formula if not stack else None
    return {"theorem": theorem, "flags": flags, "trace": trace,
            "open": tuple(a["label"] for a in stack)}
