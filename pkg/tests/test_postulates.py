import pytest

from fedcal import (
    ABSURD,
    EMPTY,
    Class,
    Cont,
    Fed,
    appearing_variables,
    axiom_ids,
    axiom_object,
    bind_index,
    class_rule,
    comprehension_instance,
    eq,
    extensionality_instance,
    in_,
    not_,
    occurs,
    parse,
    sing,
    sing_expansion,
    subeq,
    substitute,
    validate_formation,
    var,
)

a, b, c, d, x = (var(i) for i in range(5))


# hand transcriptions of the fixed axiom group, in surface syntax
GOLDEN = {
    "A1": "(c :> a) & (c :> (a :> b)) :> (c :> b)",
    "A2": "(d :> (a :> b)) & (d :> (b :> c)) :> (d :> (a :> c))",
    "A3": "(c :> a) & (c :> b) :> (c :> a & b)",
    "A4a": "a & b :> a",
    "A4b": "a & b :> b",
    "A5a": "a :> a /\\ b",
    "A5b": "b :> a /\\ b",
    "A6": "(a :> c) & (b :> c) :> (a /\\ b :> c)",
    "A7": "a :> a",
    "A8": "a :> O",
    "A9": "_|_ :> a",
    "A10": "(O :> a) :> ((O :> b) :> a & b)",
    "A11": "(a :> b) :> (O :> (a :> b))",
    "A12": "(((a :> b) :> _|_) :> _|_) :> (a :> b)",
    "A14a": "a :> {x | x in a}",
    "A14b": "(V :> a) :> ({x | x in a} :> a)",
}


class TestFixedAxioms:
    @pytest.mark.parametrize("name", sorted(GOLDEN))
    def test_against_surface_transcription(self, name):
        assert axiom_object(name, mode="extended") == parse(GOLDEN[name], mode="extended")

    @pytest.mark.parametrize("name", sorted(GOLDEN))
    def test_well_formed(self, name):
        assert validate_formation(axiom_object(name, mode="extended")) == []

    def test_mode_availability(self):
        classical = axiom_ids("classical")
        extended = axiom_ids("extended")
        for missing in ("A5a", "A5b", "A6", "B5", "C1"):
            assert missing not in classical
        assert set(classical) < set(extended)
        assert "A14b" in classical

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            axiom_object("A99")

    def test_schema_names_are_rejected(self):
        with pytest.raises(ValueError):
            axiom_object("A13")
        with pytest.raises(ValueError):
            axiom_object("B11")


class TestSingExpansion:
    def test_level_zero_transcription(self):
        want = parse("not (triv a = a) & ((a :> b) :> (triv b \\/ (a = b)))")
        assert sing_expansion(0, a, b) == want
        assert sing(a) == want  # default witness

    def test_level_one_transcription(self):
        want = parse("(a = b &1 a) :> (triv b \\/ (b = a))")
        assert sing_expansion(1, a, b) == want

    def test_witness_avoids_subject(self):
        assert sing(b) == sing_expansion(0, b, a)

    def test_extended_disjunction(self):
        t = sing_expansion(0, a, b, mode="extended")
        assert t != sing_expansion(0, a, b)
        assert validate_formation(t) == []


class TestTypedAxioms:
    def test_lattice_group(self):
        assert axiom_object("B5", 2) == parse("a &2 a = a")
        assert axiom_object("B1", 1) == parse("(a &1 b) &1 c = a &1 (b &1 c)")
        assert axiom_object("B2", 1) == parse("a &1 O = a")
        assert axiom_object("B3", 1) == parse("a &1 _|_ = _|_")
        assert axiom_object("B4", 3) == parse("a &3 b = b &3 a")
        assert axiom_object("B6", 1) == parse("(a = b) :> (a &1 c = b &1 c)")

    def test_b7_links_levels(self):
        t = axiom_object("B7", 1)
        assert t == Cont(sing(a, b, 0), sing(a, b, 1))

    def test_b8_steps_down(self):
        t = axiom_object("B8", 1)
        assert t.left == sing(a, b, 1)
        assert t.right == parse("a <: V")
        t2 = axiom_object("B8", 2)
        assert t2.right == subeq(a, Class(1, a, EMPTY), 1)

    def test_b9_is_curried_with_default_m(self):
        t = axiom_object("B9", 2)
        assert t.left == not_(sing(a, c, 2))
        assert isinstance(t.right, Cont)
        assert occurs(t, eq(Fed(1, a, b), ABSURD))
        none_above = axiom_object("B9", 1)
        assert occurs(none_above, eq(Fed(0, a, b), ABSURD))

    def test_b9_m_must_sit_below_n(self):
        with pytest.raises(AssertionError):
            axiom_object("B9", 1, m=1)

    def test_b10_shares_one_witness(self):
        t = axiom_object("B10", 1)
        assert set(appearing_variables(t)) == {a, b, c, d}
        assert t.left == in_(a, Fed(1, b, c), d, 1)

    def test_levels_are_checked(self):
        with pytest.raises(AssertionError):
            axiom_object("B5", 0)


class TestComprehension:
    def test_empty_condition(self):
        inst = comprehension_instance(0, x, EMPTY)
        want = eq(in_(a, Class(0, x, EMPTY), b), Fed(0, sing(a, b), EMPTY))
        assert inst == want

    def test_negative_condition(self):
        inst = comprehension_instance(0, x, not_(x))
        rhs = inst.left.right
        assert rhs == Fed(0, sing(a, b), not_(a))

    def test_type_one(self):
        inst = comprehension_instance(1, x, EMPTY)
        assert inst.left.left == in_(a, Class(1, x, EMPTY), b, 1)

    def test_subject_avoids_condition(self):
        inst = comprehension_instance(0, x, Cont(a, b))
        lhs = inst.left.left
        assert lhs.right.right == c  # the subject skips a and b

    def test_subject_never_in_condition(self):
        with pytest.raises(AssertionError):
            comprehension_instance(0, x, Cont(a, b), subject=a)

    def test_bound_body(self):
        inst = comprehension_instance(0, x, Cont(x, EMPTY))
        assert validate_formation(inst) == []
        assert inst.left.left == in_(a, bind_index(Cont(x, EMPTY), x), b)

    def test_instantiated_condition(self):
        inst = comprehension_instance(0, x, Cont(x, d))
        assert inst.left.right.right == Cont(a, d)
        assert inst.left.right.right == substitute(Cont(x, d), x, a)


class TestExtensionality:
    def test_level_zero_matches_fixed(self):
        assert extensionality_instance(0, "a") == parse("a :> {x | x in a}")
        assert extensionality_instance(0, "b") == parse("(V :> a) :> ({x | x in a} :> a)")
        assert axiom_object("A14a") == extensionality_instance(0, "a")

    def test_level_one_uses_typed_order(self):
        cls = bind_index(in_(x, a, None, 1), x, 1)
        assert extensionality_instance(1, "a") == subeq(cls, a, 1)
        t = extensionality_instance(1, "b")
        assert t.left == subeq(a, Class(1, a, EMPTY), 1)
        assert t.right == subeq(a, cls, 1)

    def test_b12_delegates(self):
        assert axiom_object("B12a", 1) == extensionality_instance(1, "a")
        assert axiom_object("B12b", 2) == extensionality_instance(2, "b")

    def test_custom_variables(self):
        t = extensionality_instance(0, "a", x=var(5), a=var(1))
        assert t.left == var(1)
        with pytest.raises(AssertionError):
            extensionality_instance(0, "a", x=a, a=a)


class TestClassRule:
    def test_basic_conclusion(self):
        premise = parse("c :> ((x :> a) :> (x :> b))")
        got = class_rule(premise, x)
        assert got == parse("c :> ({x | x :> b} :> {x | x :> a})")

    def test_vacuous_binder(self):
        premise = parse("c :> (a :> b)")
        got = class_rule(premise, x)
        assert got == Cont(c, Cont(Class(0, x, b), Class(0, x, a)))

    def test_guard_must_avoid_binder(self):
        with pytest.raises(AssertionError):
            class_rule(parse("x :> (a :> b)"), x)

    def test_typed_conclusion(self):
        premise = parse("c :> ((x :> a) :> (x :> b))")
        got = class_rule(premise, x, level=1)
        ca = bind_index(Cont(x, a), x, 1)
        cb = bind_index(Cont(x, b), x, 1)
        assert got == Cont(c, subeq(ca, cb, 1))

    def test_premise_shape_checked(self):
        with pytest.raises(AssertionError):
            class_rule(parse("a & b"), x)
