"""Exhaustive verification of local edge-count bounds between small typed
vertex configurations: declarative scenarios, an exact enumerator, and the
shipped bound catalogues."""

from .catalogues import (
    CATALOGUE_IDS,
    BoundEntry,
    build_catalogue,
    evaluate_scenario,
    evaluate_scenarios,
    load_catalogue,
    run_catalogue,
    write_data_files,
)
from .scenarios import (
    CONSTRAINT_KINDS,
    MAX_FREE_SLOTS,
    MAX_VERTICES,
    SLOT_STATES,
    Constraint,
    EnumerationResult,
    Group,
    Objective,
    Scenario,
    dumps_scenarios,
    enumerate_max,
    fixture_constraints,
    load_scenarios,
    loads_scenarios,
    objective_slots,
    pair_sum,
    save_scenarios,
    scenario_from_dict,
    scenario_slot_states,
    scenario_to_dict,
    slots_between,
    validate_scenario,
)

__all__ = [
    "CATALOGUE_IDS",
    "CONSTRAINT_KINDS",
    "MAX_FREE_SLOTS",
    "MAX_VERTICES",
    "SLOT_STATES",
    "BoundEntry",
    "Constraint",
    "EnumerationResult",
    "Group",
    "Objective",
    "Scenario",
    "build_catalogue",
    "dumps_scenarios",
    "enumerate_max",
    "evaluate_scenario",
    "evaluate_scenarios",
    "fixture_constraints",
    "load_catalogue",
    "load_scenarios",
    "loads_scenarios",
    "objective_slots",
    "pair_sum",
    "run_catalogue",
    "save_scenarios",
    "scenario_from_dict",
    "scenario_slot_states",
    "scenario_to_dict",
    "slots_between",
    "validate_scenario",
    "write_data_files",
]
