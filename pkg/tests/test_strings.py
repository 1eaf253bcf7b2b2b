"""Proof strings: reduction and the script converters."""

import pytest

from fedcal import (
    AxiomLeaf,
    ClassRule,
    Cont,
    Cut,
    EMPTY,
    ProofError,
    Subst,
    axiom_object,
    check_script,
    comprehension_instance,
    inst_string,
    parse,
    parse_script,
    reduce_proof_string,
    render,
    script_to_string,
    string_to_script,
    substitute,
    var,
)

a, b, x = var(0), var(1), var(4)


class TestReduce:
    def test_axiom_leaf(self):
        assert reduce_proof_string(AxiomLeaf("A7")) == parse("a :> a")

    def test_typed_leaf(self):
        got = reduce_proof_string(AxiomLeaf("B2", (2,)), mode="extended")
        assert got == axiom_object("B2", level=2, mode="extended")

    def test_comprehension_leaf(self):
        leaf = AxiomLeaf("A13", (0, x, parse("x :> #1")))
        got = reduce_proof_string(leaf)
        assert got == comprehension_instance(0, x, parse("x :> #1"))

    def test_comprehension_leaf_needs_params(self):
        with pytest.raises(ProofError, match="parameters"):
            reduce_proof_string(AxiomLeaf("A13"))

    def test_mode_gating(self):
        with pytest.raises(ProofError, match="not available"):
            reduce_proof_string(AxiomLeaf("A5a"))

    def test_subst(self):
        got = reduce_proof_string(Subst(AxiomLeaf("A7"), a, parse("O :> b")))
        assert got == parse("(O :> b) :> (O :> b)")

    def test_cut(self):
        # a :> O cut against A11[a:=a, b:=O] gives triviality of a :> O
        lift = Subst(AxiomLeaf("A11"), b, EMPTY)
        got = reduce_proof_string(Cut(AxiomLeaf("A8"), lift))
        assert got == parse("O :> (a :> O)")

    def test_cut_mismatch(self):
        with pytest.raises(ProofError, match="cut mismatch"):
            reduce_proof_string(Cut(AxiomLeaf("A7"), AxiomLeaf("A8")))

    def test_cut_right_not_containment(self):
        # a proof of a combination has a federation at the root, so it
        # cannot serve as the right leg of a cut
        triv_a = Cut(AxiomLeaf("A7"), Subst(AxiomLeaf("A11"), b, a))
        triv_b = Cut(AxiomLeaf("A8"), Subst(AxiomLeaf("A11"), b, EMPTY))
        pair = Subst(Subst(AxiomLeaf("A10"), a, parse("a :> a")),
                     b, parse("a :> O"))
        fed = Cut(triv_b, Cut(triv_a, pair))
        assert reduce_proof_string(fed) == parse("(a :> a) & (a :> O)")
        with pytest.raises(ProofError, match="cut mismatch"):
            reduce_proof_string(Cut(AxiomLeaf("A7"), fed))

    def test_class_rule(self):
        # O :> (x :> x), abstract x
        triv = Cut(Subst(AxiomLeaf("A7"), a, x),
                   Subst(Subst(AxiomLeaf("A11"), a, x), b, x))
        got = reduce_proof_string(ClassRule(triv, x))
        assert got == parse("O :> ({x | x'i} :> {x | x'i})")

    def test_class_rule_guard_violation(self):
        prem = Subst(AxiomLeaf("A7"), a, parse("x :> b"))
        with pytest.raises(ProofError, match="guard"):
            reduce_proof_string(ClassRule(prem, x))

    def test_class_rule_premise_shape(self):
        with pytest.raises(ProofError, match="class-rule"):
            reduce_proof_string(ClassRule(AxiomLeaf("A8"), x))

    def test_not_a_proof(self):
        with pytest.raises(TypeError):
            reduce_proof_string(parse("a :> a"))


class TestInst:
    def test_simultaneous_swap(self):
        base = AxiomLeaf("A4a")
        theorem = axiom_object("A4a")
        proof, got = inst_string(base, theorem, {a: b, b: a})
        assert got == parse("(b & a) :> b")
        assert reduce_proof_string(proof) == got

    def test_value_mentions_other_target(self):
        base = AxiomLeaf("A7")
        theorem = axiom_object("A7")
        proof, got = inst_string(base, theorem, {a: parse("a :> b")})
        assert got == parse("(a :> b) :> (a :> b)")
        assert reduce_proof_string(proof) == got


class TestConverters:
    def test_string_to_script_one_step_per_node(self):
        lift = Subst(AxiomLeaf("A11"), b, EMPTY)
        proof = Cut(AxiomLeaf("A8"), lift)
        steps = string_to_script(proof)
        assert [s.just[0] for s in steps] == ["axiom", "axiom", "sub", "exch"]
        assert check_script(steps) == reduce_proof_string(proof)

    def test_script_to_string_plain(self):
        text = """
        1. a :> a ; A7
        2. x :> x ; sub 1 a := x
        """
        steps = parse_script(text)
        proof = script_to_string(steps)
        assert reduce_proof_string(proof) == check_script(steps)

    def test_comb_expansion(self):
        text = """
        1. a :> a ; A7
        2. a :> O ; A8
        3. (a :> a) & (a :> O) ; comb 1 2
        """
        steps = parse_script(text)
        proof = script_to_string(steps)
        assert reduce_proof_string(proof) == check_script(steps)
        back = string_to_script(proof)
        assert check_script(back) == check_script(steps)
        assert all(s.just[0] in ("axiom", "sub", "exch") for s in back)

    def test_cite_inlining(self):
        lib_scripts = {"refl": parse_script("1. a :> a ; A7")}
        text = """
        1. a :> a ; cite refl
        2. x :> x ; sub 1 a := x
        """
        steps = parse_script(text)
        proof = script_to_string(steps, library_scripts=lib_scripts)
        assert reduce_proof_string(proof) == parse("x :> x")
        back = string_to_script(proof)
        assert check_script(back) == parse("x :> x")

    def test_unknown_cite(self):
        steps = parse_script("1. a :> a ; cite ghost")
        with pytest.raises(ProofError, match="citation"):
            script_to_string(steps)

    def test_assumption_steps_cannot_fold(self):
        text = """
        1. a :> b ; assume
        2. (a :> b) :> (a :> b) ; discharge 1
        """
        with pytest.raises(ProofError, match="fold"):
            script_to_string(parse_script(text))

    def test_class_script_round_trip(self):
        text = """
        1. a :> a ; A7
        2. x :> x ; sub 1 a := x
        3. (a :> b) :> (O :> (a :> b)) ; A11
        4. (x :> b) :> (O :> (x :> b)) ; sub 3 a := x
        5. (x :> x) :> (O :> (x :> x)) ; sub 4 b := x
        6. O :> (x :> x) ; exch 2 5
        7. O :> ({x | x'i} :> {x | x'i}) ; class 6 x
        """
        steps = parse_script(text)
        proof = script_to_string(steps)
        assert reduce_proof_string(proof) == check_script(steps)
        back = string_to_script(proof)
        assert check_script(back) == check_script(steps)

    def test_comp_and_ext_round_trip(self):
        obj = comprehension_instance(0, x, parse("x :> #1"))
        text = "1. %s ; comp x x :> #1" % render(obj)
        steps = parse_script(text)
        proof = script_to_string(steps)
        assert isinstance(proof, AxiomLeaf) and proof.name == "A13"
        assert reduce_proof_string(proof) == obj
        back = string_to_script(proof)
        assert check_script(back) == obj
