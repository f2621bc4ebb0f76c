"""Bound catalogues verified by exhaustive enumeration.

Four catalogues ship with the package as JSON data files:

    table10x10     all 100 all-colors cells between the ten vertex classes
                   X12, X13, X23, Y1, Y2, Y3, Z1, Z2, Z3, R
    eq1_bullets    twelve two-color bounds between class pairs
    eq3_bullets    ten all-colors bounds between class pairs
    claims_local   thirteen neighborhood bounds with explicit premises

Every entry pairs a scenario with the bound it has to satisfy.  Evaluation
recomputes the exact maximum with ``enumerate_max`` and reports one of:

    verified     computed maximum <= bound
    tight        computed maximum == floor(bound)  (still verified)
    violated     computed maximum  > bound
    infeasible   the premises admit no configuration at all

The JSON data files are the runtime source of truth (``load_catalogue``);
the builders regenerate them and the test suite asserts the two stay in
sync.  Where a catalogue line covers a whole family of class pairs, the
shipped entry is the family member with the largest computed maximum, so
the check is the strongest single-scenario instance of that line.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from ..graphs import GraphInputError
from .scenarios import (
    Constraint,
    Group,
    Objective,
    Scenario,
    dumps_scenarios,
    enumerate_max,
    loads_scenarios,
    slots_between,
)

__all__ = [
    "CATALOGUE_IDS",
    "BoundEntry",
    "build_catalogue",
    "evaluate_scenario",
    "evaluate_scenarios",
    "load_catalogue",
    "run_catalogue",
    "write_data_files",
]

CATALOGUE_IDS = ("table10x10", "eq1_bullets", "eq3_bullets", "claims_local")

CLASS_NAMES = ("X12", "X13", "X23", "Y1", "Y2", "Y3", "Z1", "Z2", "Z3", "R")

# all-colors entries of the ten-class bound table, row class then column class
TABLE_BOUNDS: dict[str, tuple[int, ...]] = {
    "X12": (16, 12, 12, 12, 12, 12, 14, 14, 12, 7),
    "X13": (12, 16, 12, 12, 12, 12, 14, 12, 14, 7),
    "X23": (12, 12, 16, 12, 12, 12, 12, 14, 14, 7),
    "Y1": (12, 12, 12, 13, 12, 12, 13, 12, 12, 7),
    "Y2": (12, 12, 12, 12, 13, 12, 12, 13, 12, 7),
    "Y3": (12, 12, 12, 12, 12, 13, 12, 12, 13, 7),
    "Z1": (14, 14, 12, 13, 12, 12, 12, 12, 12, 6),
    "Z2": (14, 12, 14, 12, 13, 12, 12, 12, 12, 6),
    "Z3": (12, 14, 14, 12, 12, 13, 12, 12, 12, 6),
    "R": (7, 7, 7, 7, 7, 7, 6, 6, 6, 3),
}

# which structural rules accompany each kind of class pair (the rainbow rule
# and the five-edge pair cap are always present)
_PAIR_POLICIES: dict[tuple[str, str], tuple[str, ...]] = {
    ("X", "X"): (),
    ("X", "Y"): ("x_trimmed",),
    ("X", "Z"): ("x_trimmed",),
    ("R", "X"): ("x_trimmed",),
    ("Y", "Y"): ("x_maximality",),
    ("Y", "Z"): ("x_maximality",),
    ("R", "Y"): ("x_maximality", "y_trimmed"),
    ("Z", "Z"): ("x_maximality", "y_maximality"),
    ("R", "Z"): ("x_maximality", "y_maximality"),
    ("R", "R"): ("x_maximality", "y_maximality"),
}


@dataclass(frozen=True)
class BoundEntry:
    """One evaluated catalogue line."""

    scenario_id: str
    source: str
    bound: Fraction
    computed_max: int | None
    status: str
    nodes: int = 0

    def to_dict(self) -> dict:
        return {
            "scenario_id": self.scenario_id,
            "source": self.source,
            "bound": {"num": self.bound.numerator, "den": self.bound.denominator},
            "computed_max": self.computed_max,
            "status": self.status,
            "nodes": self.nodes,
        }


def evaluate_scenario(scenario: Scenario) -> BoundEntry:
    """Enumerate the scenario and grade its maximum against the bound."""
    result = enumerate_max(scenario)
    if not result.feasible:
        status, computed = "infeasible", None
    else:
        computed = result.maximum
        if computed > scenario.bound:
            status = "violated"
        elif computed == scenario.bound.numerator // scenario.bound.denominator:
            status = "tight"
        else:
            status = "verified"
    return BoundEntry(
        scenario_id=scenario.id,
        source=scenario.source,
        bound=scenario.bound,
        computed_max=computed,
        status=status,
        nodes=result.nodes,
    )


def evaluate_scenarios(scenarios, jobs: int | None = None) -> list[BoundEntry]:
    """Evaluate many scenarios, optionally across worker processes."""
    scenarios = list(scenarios)
    if jobs is not None and jobs > 1 and len(scenarios) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(evaluate_scenario, scenarios))
    return [evaluate_scenario(s) for s in scenarios]


# ---------------------------------------------------------------------------
# builders


def _class_group(name: str, members: tuple[str, ...]) -> Group:
    if name == "R":
        return Group("R", (), members)
    return Group(name[0], tuple(int(ch) for ch in name[1:]), members)


def _class_policy(row: str, col: str) -> tuple[str, ...]:
    return _PAIR_POLICIES[tuple(sorted((row[0], col[0])))]


def _pair_scenario(
    sid: str,
    source: str,
    row: str,
    col: str,
    obj_colors: tuple[int, ...],
    bound: Fraction,
    extras: tuple[str, ...] | None = None,
) -> Scenario:
    va = ("a1",) if row == "R" else ("a1", "a2")
    vb = ("b1",) if col == "R" else ("b1", "b2")
    rules = [
        Constraint("no_rainbow", pattern="directed"),
        Constraint("pair_edge_cap", value=5),
    ]
    for kind in _class_policy(row, col) if extras is None else extras:
        rules.append(Constraint(kind))
    return Scenario(
        id=sid,
        source=source,
        colors=3,
        vertices=va + vb,
        objective=Objective(colors=obj_colors, side_a=va, side_b=vb),
        bound=bound,
        groups=(_class_group(row, va), _class_group(col, vb)),
        constraints=tuple(rules),
    )


def _build_table10x10() -> list[Scenario]:
    out = []
    for row in CLASS_NAMES:
        for j, col in enumerate(CLASS_NAMES):
            out.append(
                _pair_scenario(
                    f"table:{row}-{col}",
                    f"table10x10 cell ({row}, {col})",
                    row,
                    col,
                    (1, 2, 3),
                    Fraction(TABLE_BOUNDS[row][j]),
                )
            )
    return out


def _build_eq1_bullets() -> list[Scenario]:
    entries = [
        ("eq1:01-xx", "X12", "X12", None, Fraction(16)),
        ("eq1:02-xy", "X12", "Y1", None, Fraction(40, 3)),
        ("eq1:03-xz", "X12", "Z1", None, Fraction(14)),
        ("eq1:04-yy", "Y1", "Y1", None, Fraction(104, 9)),
        ("eq1:05-yz", "Y1", "Z1", None, Fraction(12)),
        ("eq1:06-zz", "Z1", "Z1", None, Fraction(12)),
        ("eq1:07-other", "X12", "X13", None, Fraction(8)),
        ("eq1:08-xr", "X12", "R", None, Fraction(7)),
        ("eq1:09-yr", "Y1", "R", None, Fraction(6)),
        (
            "eq1:10-zr",
            "Z1",
            "R",
            ("x_maximality", "y_maximality", "z_trimmed"),
            Fraction(11, 2),
        ),
        ("eq1:11-other-r", "X13", "R", None, Fraction(4)),
        ("eq1:12-rr", "R", "R", ("z_maximality",), Fraction(2)),
    ]
    out = []
    for k, (sid, row, col, extras, bound) in enumerate(entries, start=1):
        out.append(
            _pair_scenario(
                sid,
                f"eq1_bullets item {k} ({row} vs {col}, colors 1,2)",
                row,
                col,
                (1, 2),
                bound,
                extras,
            )
        )
    return out


def _build_eq3_bullets() -> list[Scenario]:
    entries = [
        ("eq3:01-xx", "X12", "X12", None, Fraction(16)),
        ("eq3:02-xy", "X12", "Y1", None, Fraction(27, 2)),
        ("eq3:03-xz", "X12", "Z1", None, Fraction(14)),
        ("eq3:04-yy-same", "Y1", "Y1", None, Fraction(105, 8)),
        ("eq3:05-yy-cross", "Y1", "Y2", None, Fraction(201, 16)),
        ("eq3:06-yz-same", "Y1", "Z1", None, Fraction(13)),
        ("eq3:07-yz-cross", "Y1", "Z2", None, Fraction(25, 2)),
        ("eq3:08-other", "X12", "X13", None, Fraction(12)),
        ("eq3:09-zr", "Z1", "R", None, Fraction(6)),
        ("eq3:10-rr", "R", "R", None, Fraction(3)),
    ]
    out = []
    for k, (sid, row, col, extras, bound) in enumerate(entries, start=1):
        out.append(
            _pair_scenario(
                sid,
                f"eq3_bullets item {k} ({row} vs {col}, all colors)",
                row,
                col,
                (1, 2, 3),
                bound,
                extras,
            )
        )
    return out


def _claim_scenario(
    sid,
    source,
    colors,
    vertices,
    obj,
    bound,
    fixed=(),
    rules=(),
) -> Scenario:
    return Scenario(
        id=sid,
        source=source,
        colors=colors,
        vertices=vertices,
        objective=obj,
        bound=bound,
        fixed_edges=tuple(fixed),
        constraints=tuple(rules),
    )


def _double(color: int, a: str, b: str):
    return [(color, a, b, "present"), (color, b, a, "present")]


def _build_claims_local() -> list[Scenario]:
    rainbow_d = Constraint("no_rainbow", pattern="directed")
    rainbow_t = Constraint("no_rainbow", pattern="transitive")
    oriented = Constraint("oriented")

    def ge(colors, a, b, value, fwd_only=False):
        slots = (
            tuple((c, a, b) for c in colors)
            if fwd_only
            else slots_between(colors, (a,), (b,))
        )
        return Constraint("slot_sum", op=">=", value=value, slots=slots)

    def eq(colors, a, b, value):
        return Constraint(
            "slot_sum", op="==", value=value, slots=slots_between(colors, (a,), (b,))
        )

    out = []

    # a pair with double edges in two colors caps every adjacent color pair
    # at a third vertex
    out.append(
        _claim_scenario(
            "double-double:adjacent-colors:c4",
            "claims_local: two double colors on a pair, adjacent-color count"
            " at a third vertex (c=4)",
            4,
            ("u", "v", "x"),
            Objective(colors=(1, 2), side_a=("x",), side_b=("u", "v")),
            Fraction(4),
            fixed=_double(1, "u", "v") + _double(3, "u", "v"),
            rules=(rainbow_d,),
        )
    )
    out.append(
        _claim_scenario(
            "double-double:adjacent-colors-wrap:c5",
            "claims_local: two double colors on a pair, wrap-around color"
            " pair at a third vertex (c=5)",
            5,
            ("u", "v", "x"),
            Objective(colors=(5, 1), side_a=("x",), side_b=("u", "v")),
            Fraction(4),
            fixed=_double(1, "u", "v") + _double(3, "u", "v"),
            rules=(rainbow_d,),
        )
    )

    # two heavy pairs out of one vertex force the third pair to stay sparse
    all4 = (1, 2, 3, 4)
    out.append(
        _claim_scenario(
            "heavy-fan:third-pair:c4",
            "claims_local: two heavy pairs from one vertex, edges on the"
            " opposite pair (c=4)",
            4,
            ("u", "v", "w"),
            Objective(colors=all4, side_a=("v",), side_b=("w",)),
            Fraction(2),
            rules=(
                rainbow_d,
                eq(all4, "u", "v", 5),
                ge(all4, "u", "v", 3, fwd_only=True),
                eq(all4, "u", "w", 5),
                ge(all4, "u", "w", 3, fwd_only=True),
            ),
        )
    )

    # a fully occupied pair seen from a third vertex in two colors
    out.append(
        _claim_scenario(
            "full-pair:two-colors:c3",
            "claims_local: all six edges on a pair, two-color count at a"
            " third vertex (c=3)",
            3,
            ("u", "v", "w"),
            Objective(colors=(1, 2), side_a=("w",), side_b=("u", "v")),
            Fraction(4),
            fixed=[
                (c, a, b, "present")
                for c in (1, 2, 3)
                for a, b in (("u", "v"), ("v", "u"))
            ],
            rules=(rainbow_d,),
        )
    )

    # a double edge in the remaining color seen from a third vertex
    out.append(
        _claim_scenario(
            "double-pair:other-colors:c3",
            "claims_local: double edge in one color, other-color count at a"
            " third vertex (c=3)",
            3,
            ("u", "v", "w"),
            Objective(colors=(1, 2), side_a=("w",), side_b=("u", "v")),
            Fraction(4),
            fixed=_double(3, "u", "v"),
            rules=(rainbow_d,),
        )
    )

    # a single edge in the remaining color seen from a third vertex
    out.append(
        _claim_scenario(
            "single-edge:other-colors:c3",
            "claims_local: single edge in one color, other-color count at a"
            " third vertex (c=3)",
            3,
            ("u", "v", "w"),
            Objective(colors=(1, 2), side_a=("w",), side_b=("u", "v")),
            Fraction(6),
            fixed=[(3, "u", "v", "present")],
            rules=(rainbow_d,),
        )
    )

    # transitive pattern: a pair with two double colors, a vertex touching
    # both endpoints
    out.append(
        _claim_scenario(
            "two-doubles:touched-both:c4",
            "claims_local: two double colors on a pair, all edges at a vertex"
            " touching both endpoints (c=4, transitive)",
            4,
            ("u", "v", "x"),
            Objective(colors=all4, side_a=("x",), side_b=("u", "v")),
            Fraction(8),
            fixed=_double(1, "u", "v") + _double(2, "u", "v"),
            rules=(
                rainbow_t,
                ge(all4, "x", "u", 1),
                ge(all4, "x", "v", 1),
            ),
        )
    )

    # transitive pattern: one double color, no pair anywhere with two double
    # colors, a color shared by both links
    out.append(
        _claim_scenario(
            "one-double:shared-link:c4",
            "claims_local: one double color, a second color on both links"
            " (c=4, transitive)",
            4,
            ("u", "v", "x"),
            Objective(colors=all4, side_a=("x",), side_b=("u", "v")),
            Fraction(6),
            fixed=_double(1, "u", "v"),
            rules=(
                rainbow_t,
                Constraint("no_double_double"),
                ge((2,), "x", "u", 1),
                ge((2,), "x", "v", 1),
            ),
        )
    )
    out.append(
        _claim_scenario(
            "one-double:no-shared-link:c4",
            "claims_local: one double color, no color on both links"
            " (c=4, transitive)",
            4,
            ("u", "v", "x"),
            Objective(colors=all4, side_a=("x",), side_b=("u", "v")),
            Fraction(7),
            fixed=_double(1, "u", "v"),
            rules=(
                rainbow_t,
                Constraint("no_double_double"),
                Constraint(
                    "no_shared_color_link",
                    vertex="x",
                    pair=("u", "v"),
                    colors=(2, 3, 4),
                ),
            ),
        )
    )

    # single-direction graphs: a path of two thick arcs seen from a fourth
    # vertex
    for c in (3, 4):
        cols = tuple(range(1, c + 1))
        out.append(
            _claim_scenario(
                f"thick-path:fan:c{c}",
                "claims_local: two consecutive thick arcs, all edges at a"
                f" fourth vertex (c={c}, single-direction)",
                c,
                ("u", "v", "w", "x"),
                Objective(colors=cols, side_a=("x",), side_b=("u", "v", "w")),
                Fraction(2 * c),
                rules=(
                    rainbow_t,
                    oriented,
                    ge(cols, "u", "v", 3, fwd_only=True),
                    ge(cols, "v", "w", 3, fwd_only=True),
                ),
            )
        )

    # single-direction graphs: a thick pair not on any thick path
    for c in (3, 4):
        cols = tuple(range(1, c + 1))
        out.append(
            _claim_scenario(
                f"thick-pair:no-path:c{c}",
                "claims_local: three edges on a pair, no two consecutive"
                f" thick arcs, edges at a third vertex (c={c},"
                " single-direction)",
                c,
                ("u", "v", "x"),
                Objective(colors=cols, side_a=("x",), side_b=("u", "v")),
                Fraction(c + 1),
                rules=(
                    rainbow_t,
                    oriented,
                    Constraint("no_thick_path"),
                    ge(cols, "u", "v", 3),
                ),
            )
        )
    return out


_BUILDERS = {
    "table10x10": _build_table10x10,
    "eq1_bullets": _build_eq1_bullets,
    "eq3_bullets": _build_eq3_bullets,
    "claims_local": _build_claims_local,
}


def build_catalogue(which: str) -> list[Scenario]:
    """Regenerate the named catalogue from its builder."""
    try:
        builder = _BUILDERS[which]
    except KeyError:
        raise GraphInputError(
            f"unknown catalogue {which!r}; expected one of {CATALOGUE_IDS}"
        ) from None
    return builder()


def load_catalogue(which: str) -> list[Scenario]:
    """Load the named catalogue from the shipped JSON data file."""
    if which not in _BUILDERS:
        raise GraphInputError(
            f"unknown catalogue {which!r}; expected one of {CATALOGUE_IDS}"
        )
    text = resources.files("rtlab").joinpath("data", f"{which}.json").read_text(
        encoding="utf-8"
    )
    return loads_scenarios(text)


def run_catalogue(which: str, jobs: int | None = None) -> list[BoundEntry]:
    """Load and evaluate the named catalogue."""
    return evaluate_scenarios(load_catalogue(which), jobs=jobs)


def write_data_files(directory=None) -> list[Path]:
    """Write every catalogue's JSON data file; returns the paths written."""
    if directory is None:
        directory = Path(__file__).resolve().parent.parent / "data"
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for which in CATALOGUE_IDS:
        path = directory / f"{which}.json"
        path.write_text(dumps_scenarios(build_catalogue(which)), encoding="utf-8")
        paths.append(path)
    return paths
