"""Proof kernel and finite-structure evaluator for a containment calculus."""

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
    Brace,
    Antibrace,
    Num,
    EMPTY,
    ABSURD,
    var,
    var_name,
    name_to_index,
    canonical_index,
    is_variable,
    num,
    appears,
    occurs,
    appearing_variables,
    fresh_var,
    closed,
    is_formula,
    weight,
    subobjects,
    subobject_at,
    structural_query,
    validate_formation,
)
from .subst import substitute, instance_kind, bind_index, instantiate_index
from .sugar import (
    not_,
    triv,
    eq,
    neq,
    subeq,
    or_,
    sing,
    in_,
    universe,
    all_,
    ex_,
    inter,
)
from .surface import parse, render, ParseError
from .postulates import (
    axiom_ids,
    axiom_object,
    comprehension_instance,
    extensionality_instance,
    sing_expansion,
    class_rule,
)
from .models import (
    BOT,
    domain,
    individuals,
    table_lookup,
    full_table,
    value_to_obj,
    statable,
    statable_report,
    evaluate,
    denote,
    classify,
    countermodel,
    safe_conditions,
    soundness_sweep,
)
from .scripts import (
    ProofError,
    Step,
    parse_script,
    parse_justification,
    format_script,
    format_justification,
    check_script,
    check_assumption_discipline,
)
from .strings import (
    AxiomLeaf,
    Subst,
    Cut,
    ClassRule,
    reduce_proof_string,
    string_to_script,
    script_to_string,
    inst_string,
)

__all__ = [name for name in dir() if not name.startswith("_")]
