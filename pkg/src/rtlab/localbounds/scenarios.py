"""Declarative bound checking on small colored-digraph configurations.

A *scenario* is a finite constraint-satisfaction instance on at most six
labeled vertices.  Every (color, ordered pair) edge slot is declared
``present``, ``absent``, or ``free``; structural rules restrict which
completions of the free slots are admissible; the objective counts how many
free slots with a color in a chosen set and endpoints split between two
chosen vertex sets can be made present simultaneously.  ``enumerate_max``
computes that maximum exactly, with a witness configuration — it is the
machine-checkable form of a case statement "between these two matched pairs
at most B edges fit".

Vertices can be grouped into typed pairs that carry a built-in edge fixture:

    X(i, j)  two vertices joined by double edges in colors i and j; every
             remaining color is left free but may carry at most one edge,
    Y(i)     a double edge in color i plus exactly one single edge in each
             other color (only the orientations of the singles are free),
    Z(i)     a double edge in color i plus exactly one edge in exactly one
             different color,
    R        a lone vertex with no fixture.

Constraint vocabulary (rules see the *total* configuration, fixture and
premise edges included):

    no_rainbow(pattern)       no rainbow directed / transitive triangle
    oriented                  no color carries both directions of any pair
    pair_edge_cap(value)      at most ``value`` edges between any two vertices
    slot_sum(slots, op, v)    sum of the listed slots' presence  op  v
    x_maximality              a pair with no X vertex has double edges in at
                              most one color
    y_maximality              a pair with no X or Y vertex has at most 3 edges
    z_maximality              a pair of R vertices has at most 2 edges in any
                              two colors
    x_trimmed                 a vertex outside X is joined by double edges in
                              two colors to at most one endpoint per X pair
    y_trimmed                 a vertex outside X and Y is joined by >= 4 edges
                              to at most one endpoint per Y pair
    z_trimmed                 an R vertex is joined by a double edge plus an
                              edge in another color to at most one endpoint
                              per Z pair
    no_double_double          no pair at all has double edges in two colors
    no_thick_path             no ordered triple (a, b, c) has >= 3 edges a->b
                              and >= 3 edges b->c
    no_shared_color_link(x, (u, v), colors)
                              no listed color has edges both on the pair
                              {x, u} and on the pair {x, v}

Free slots not reachable by the objective or by an ``==`` / ``>=`` slot sum
stay absent by default: every rule above is preserved under edge deletion,
so the maximum over such reduced configurations equals the maximum over all
of them.  The enumerator assigns whole unordered pairs at a time, fires each
rule as soon as the last pair it can see is decided, and propagates
two-pair rules through per-pair candidate bitmasks.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ..graphs import GraphInputError
from ..triangles import sdr_exists

__all__ = [
    "MAX_FREE_SLOTS",
    "MAX_VERTICES",
    "SLOT_STATES",
    "CONSTRAINT_KINDS",
    "Group",
    "Constraint",
    "Objective",
    "Scenario",
    "EnumerationResult",
    "slots_between",
    "pair_sum",
    "validate_scenario",
    "fixture_constraints",
    "scenario_slot_states",
    "objective_slots",
    "enumerate_max",
    "scenario_to_dict",
    "scenario_from_dict",
    "dumps_scenarios",
    "loads_scenarios",
    "save_scenarios",
    "load_scenarios",
]

MAX_VERTICES = 6
MAX_FREE_SLOTS = 36
SLOT_STATES = ("present", "absent", "free")
GROUP_KINDS = ("X", "Y", "Z", "R")

CONSTRAINT_KINDS = frozenset(
    {
        "no_rainbow",
        "oriented",
        "pair_edge_cap",
        "slot_sum",
        "x_maximality",
        "y_maximality",
        "z_maximality",
        "x_trimmed",
        "y_trimmed",
        "z_trimmed",
        "no_double_double",
        "no_thick_path",
        "no_shared_color_link",
    }
)

Slot = tuple[int, str, str]  # (color, from label, to label)


@dataclass(frozen=True)
class Group:
    """A typed vertex group: X/Y/Z pairs carry an edge fixture, R is free."""

    kind: str
    colors: tuple[int, ...]
    members: tuple[str, ...]


@dataclass(frozen=True)
class Constraint:
    """One structural rule; only the fields its kind needs are set."""

    kind: str
    pattern: str = ""
    op: str = ""
    value: int = 0
    slots: tuple[Slot, ...] = ()
    vertex: str = ""
    pair: tuple[str, ...] = ()
    colors: tuple[int, ...] = ()


@dataclass(frozen=True)
class Objective:
    """Count present free slots with a color in ``colors`` whose endpoints
    are split between ``side_a`` and ``side_b`` (both directions)."""

    colors: tuple[int, ...]
    side_a: tuple[str, ...]
    side_b: tuple[str, ...]


@dataclass(frozen=True)
class Scenario:
    id: str
    source: str
    colors: int
    vertices: tuple[str, ...]
    objective: Objective
    bound: Fraction
    groups: tuple[Group, ...] = ()
    fixed_edges: tuple[tuple[int, str, str, str], ...] = ()  # (color, from, to, state)
    constraints: tuple[Constraint, ...] = ()


@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of ``enumerate_max``: infeasibility is reported distinctly
    from a feasible scenario whose best objective value is 0."""

    feasible: bool
    maximum: int | None
    witness: tuple[Slot, ...] | None
    nodes: int
    free_slot_count: int

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "maximum": self.maximum,
            "witness": None if self.witness is None else [list(s) for s in self.witness],
            "nodes": self.nodes,
            "free_slot_count": self.free_slot_count,
        }


def slots_between(colors, side_a, side_b) -> tuple[Slot, ...]:
    """All ordered slots in the given colors running between the two sides."""
    out = []
    for color in colors:
        for a in side_a:
            for b in side_b:
                out.append((color, a, b))
                out.append((color, b, a))
    return tuple(sorted(set(out)))


def pair_sum(colors, a: str, b: str, op: str, value: int) -> Constraint:
    """A slot_sum over both directions of one vertex pair in given colors."""
    return Constraint(
        kind="slot_sum",
        op=op,
        value=value,
        slots=slots_between(colors, (a,), (b,)),
    )


def _group_vertex_sets(scenario: Scenario):
    """Vertex label sets (in X, in X or Y, in X, Y or Z)."""
    in_x, in_y, in_z = set(), set(), set()
    for g in scenario.groups:
        target = {"X": in_x, "Y": in_y, "Z": in_z}.get(g.kind)
        if target is not None:
            target.update(g.members)
    return in_x, in_x | in_y, in_x | in_y | in_z


def validate_scenario(scenario: Scenario) -> None:
    """Raise GraphInputError when the scenario is malformed."""
    s = scenario
    if not s.id:
        raise GraphInputError("scenario id must be nonempty")
    if not 1 <= s.colors <= 8:
        raise GraphInputError(f"color count must be in 1..8, got {s.colors}")
    if not 1 <= len(s.vertices) <= MAX_VERTICES:
        raise GraphInputError(
            f"scenario needs 1..{MAX_VERTICES} vertices, got {len(s.vertices)}"
        )
    if len(set(s.vertices)) != len(s.vertices):
        raise GraphInputError("vertex labels must be distinct")
    labels = set(s.vertices)

    grouped: set[str] = set()
    for g in s.groups:
        if g.kind not in GROUP_KINDS:
            raise GraphInputError(f"unknown group kind {g.kind!r}")
        want = 1 if g.kind == "R" else 2
        if len(g.members) != want:
            raise GraphInputError(f"{g.kind} group needs {want} member(s)")
        if not set(g.members) <= labels:
            raise GraphInputError(f"group members {g.members} not all vertices")
        if grouped & set(g.members):
            raise GraphInputError("groups must not share vertices")
        grouped.update(g.members)
        ncol = {"X": 2, "Y": 1, "Z": 1, "R": 0}[g.kind]
        if len(g.colors) != ncol or len(set(g.colors)) != ncol:
            raise GraphInputError(f"{g.kind} group needs {ncol} distinct color(s)")
        if any(not 1 <= col <= s.colors for col in g.colors):
            raise GraphInputError(f"group color out of range in {g.colors}")

    fixture_pairs = {
        frozenset(g.members) for g in s.groups if g.kind in ("X", "Y", "Z")
    }
    seen_fixed: set[Slot] = set()
    for color, src, dst, state in s.fixed_edges:
        if not 1 <= color <= s.colors:
            raise GraphInputError(f"fixed edge color {color} out of range")
        if src not in labels or dst not in labels or src == dst:
            raise GraphInputError(f"bad fixed edge endpoints ({src}, {dst})")
        if state not in SLOT_STATES:
            raise GraphInputError(f"bad slot state {state!r}")
        if (color, src, dst) in seen_fixed:
            raise GraphInputError(f"duplicate fixed edge {(color, src, dst)}")
        seen_fixed.add((color, src, dst))
        if frozenset((src, dst)) in fixture_pairs:
            raise GraphInputError(
                "fixed_edges may not touch a slot inside a typed group pair"
            )

    for con in s.constraints:
        _validate_constraint(s, con, labels)

    obj = s.objective
    if not obj.colors or len(set(obj.colors)) != len(obj.colors):
        raise GraphInputError("objective colors must be nonempty and distinct")
    if any(not 1 <= col <= s.colors for col in obj.colors):
        raise GraphInputError("objective color out of range")
    if not obj.side_a or not obj.side_b:
        raise GraphInputError("objective sides must be nonempty")
    if not (set(obj.side_a) <= labels and set(obj.side_b) <= labels):
        raise GraphInputError("objective sides must consist of scenario vertices")
    if set(obj.side_a) & set(obj.side_b):
        raise GraphInputError("objective sides must be disjoint")

    states = scenario_slot_states(s)
    for slot in objective_slots(s):
        if states[slot] != "free":
            raise GraphInputError(f"objective slot {slot} must stay free")
    free = sum(1 for st in states.values() if st == "free")
    if free > MAX_FREE_SLOTS:
        raise GraphInputError(
            f"{free} free slots exceed the ceiling of {MAX_FREE_SLOTS}"
        )


def _validate_constraint(s: Scenario, con: Constraint, labels: set[str]) -> None:
    if con.kind not in CONSTRAINT_KINDS:
        raise GraphInputError(f"unknown constraint kind {con.kind!r}")
    if con.kind == "no_rainbow":
        if con.pattern not in ("directed", "transitive"):
            raise GraphInputError(f"bad triangle pattern {con.pattern!r}")
    elif con.kind == "pair_edge_cap":
        if con.value < 0:
            raise GraphInputError("pair_edge_cap value must be >= 0")
    elif con.kind == "slot_sum":
        if con.op not in ("==", "<=", ">="):
            raise GraphInputError(f"bad slot_sum op {con.op!r}")
        if con.value < 0 or not con.slots:
            raise GraphInputError("slot_sum needs slots and value >= 0")
        if len(set(con.slots)) != len(con.slots):
            raise GraphInputError("slot_sum slots must be distinct")
        for color, src, dst in con.slots:
            if not 1 <= color <= s.colors or src not in labels or dst not in labels:
                raise GraphInputError(f"bad slot {(color, src, dst)} in slot_sum")
            if src == dst:
                raise GraphInputError("slot endpoints must differ")
    elif con.kind == "no_shared_color_link":
        if con.vertex not in labels:
            raise GraphInputError(f"unknown vertex {con.vertex!r}")
        if len(con.pair) != 2 or not set(con.pair) <= labels:
            raise GraphInputError(f"bad pair {con.pair}")
        if con.vertex in con.pair or con.pair[0] == con.pair[1]:
            raise GraphInputError("link vertex and pair must be three vertices")
        if not con.colors or any(not 1 <= col <= s.colors for col in con.colors):
            raise GraphInputError("no_shared_color_link needs valid colors")


def fixture_constraints(scenario: Scenario) -> tuple[Constraint, ...]:
    """The slot sums implied by the typed groups: X third-color slots carry
    at most one edge; Y singles are exactly one per other color; a Z pair
    has exactly one edge outside its double color."""
    out = []
    for g in scenario.groups:
        if g.kind == "R":
            continue
        a, b = g.members
        others = [col for col in range(1, scenario.colors + 1) if col not in g.colors]
        if g.kind == "X":
            for col in others:
                out.append(pair_sum((col,), a, b, "<=", 1))
        elif g.kind == "Y":
            for col in others:
                out.append(pair_sum((col,), a, b, "==", 1))
        elif g.kind == "Z":
            out.append(pair_sum(others, a, b, "==", 1))
    return tuple(out)


def scenario_slot_states(scenario: Scenario) -> dict[Slot, str]:
    """Resolve every (color, from, to) slot to present / absent / free.

    Group fixtures claim their intra-pair slots first, explicit fixed_edges
    come next, then objective slots and the slots of ==/>= slot sums default
    to free, and every remaining slot is absent.
    """
    states: dict[Slot, str] = {}
    for g in scenario.groups:
        if g.kind == "R":
            continue
        a, b = g.members
        for col in range(1, scenario.colors + 1):
            if col in g.colors:
                states[(col, a, b)] = states[(col, b, a)] = "present"
            else:
                states[(col, a, b)] = states[(col, b, a)] = "free"
    for color, src, dst, state in scenario.fixed_edges:
        states[(color, src, dst)] = state
    for slot in objective_slots(scenario):
        states.setdefault(slot, "free")
    for con in scenario.constraints:
        if con.kind == "slot_sum" and con.op in ("==", ">="):
            for slot in con.slots:
                states.setdefault(slot, "free")
    for color in range(1, scenario.colors + 1):
        for src in scenario.vertices:
            for dst in scenario.vertices:
                if src != dst:
                    states.setdefault((color, src, dst), "absent")
    return states


def objective_slots(scenario: Scenario) -> tuple[Slot, ...]:
    obj = scenario.objective
    return slots_between(obj.colors, obj.side_a, obj.side_b)


# ---------------------------------------------------------------------------
# JSON round trip


def _constraint_to_dict(con: Constraint) -> dict:
    out: dict = {"kind": con.kind}
    if con.pattern:
        out["pattern"] = con.pattern
    if con.op:
        out["op"] = con.op
    if con.kind in ("pair_edge_cap", "slot_sum"):
        out["value"] = con.value
    if con.slots:
        out["slots"] = [list(s) for s in con.slots]
    if con.vertex:
        out["vertex"] = con.vertex
    if con.pair:
        out["pair"] = list(con.pair)
    if con.colors:
        out["colors"] = list(con.colors)
    return out


def _constraint_from_dict(d: dict) -> Constraint:
    return Constraint(
        kind=d["kind"],
        pattern=d.get("pattern", ""),
        op=d.get("op", ""),
        value=int(d.get("value", 0)),
        slots=tuple((int(c), str(a), str(b)) for c, a, b in d.get("slots", ())),
        vertex=d.get("vertex", ""),
        pair=tuple(d.get("pair", ())),
        colors=tuple(int(c) for c in d.get("colors", ())),
    )


def scenario_to_dict(scenario: Scenario) -> dict:
    return {
        "id": scenario.id,
        "source": scenario.source,
        "colors": scenario.colors,
        "vertices": list(scenario.vertices),
        "groups": [
            {"kind": g.kind, "colors": list(g.colors), "members": list(g.members)}
            for g in scenario.groups
        ],
        "fixed_edges": [
            {"color": c, "from": src, "to": dst, "state": state}
            for c, src, dst, state in scenario.fixed_edges
        ],
        "constraints": [_constraint_to_dict(con) for con in scenario.constraints],
        "objective": {
            "colors": list(scenario.objective.colors),
            "between": [list(scenario.objective.side_a), list(scenario.objective.side_b)],
        },
        "bound": {
            "num": scenario.bound.numerator,
            "den": scenario.bound.denominator,
        },
    }


def scenario_from_dict(d: dict) -> Scenario:
    try:
        obj = d["objective"]
        side_a, side_b = obj["between"]
        scenario = Scenario(
            id=str(d["id"]),
            source=str(d.get("source", "")),
            colors=int(d["colors"]),
            vertices=tuple(str(v) for v in d["vertices"]),
            objective=Objective(
                colors=tuple(int(c) for c in obj["colors"]),
                side_a=tuple(str(v) for v in side_a),
                side_b=tuple(str(v) for v in side_b),
            ),
            bound=Fraction(int(d["bound"]["num"]), int(d["bound"]["den"])),
            groups=tuple(
                Group(
                    kind=str(g["kind"]),
                    colors=tuple(int(c) for c in g["colors"]),
                    members=tuple(str(m) for m in g["members"]),
                )
                for g in d.get("groups", ())
            ),
            fixed_edges=tuple(
                (int(e["color"]), str(e["from"]), str(e["to"]), str(e["state"]))
                for e in d.get("fixed_edges", ())
            ),
            constraints=tuple(
                _constraint_from_dict(c) for c in d.get("constraints", ())
            ),
        )
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise GraphInputError(f"malformed scenario record: {exc}") from exc
    validate_scenario(scenario)
    return scenario


def dumps_scenarios(scenarios) -> str:
    return json.dumps([scenario_to_dict(s) for s in scenarios], indent=2) + "\n"


def loads_scenarios(text: str) -> list[Scenario]:
    data = json.loads(text)
    if not isinstance(data, list):
        raise GraphInputError("scenario file must hold a JSON list")
    return [scenario_from_dict(d) for d in data]


def save_scenarios(path, scenarios) -> None:
    Path(path).write_text(dumps_scenarios(scenarios), encoding="utf-8")


def load_scenarios(path) -> list[Scenario]:
    return loads_scenarios(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# Enumeration engine


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _top_two_color_load(f: int, b: int) -> int:
    """Largest e_i + e_j over color pairs i < j for one vertex pair."""
    counts = sorted(
        ((f >> i & 1) + (b >> i & 1) for i in range((f | b).bit_length())),
        reverse=True,
    )
    counts += [0, 0]
    return counts[0] + counts[1]


class _Engine:
    def __init__(self, scenario: Scenario):
        validate_scenario(scenario)
        self.s = scenario
        self.c = scenario.colors
        self.index = {v: i for i, v in enumerate(scenario.vertices)}
        self.n = len(scenario.vertices)
        self.labels = scenario.vertices

        states = scenario_slot_states(scenario)
        self.base = [[0] * self.n for _ in range(self.n)]
        self.free: dict[tuple[int, int], list[tuple[int, bool]]] = {}
        free_count = 0
        for (color, src, dst), state in states.items():
            u, v = self.index[src], self.index[dst]
            if state == "present":
                self.base[u][v] |= 1 << (color - 1)
            elif state == "free":
                key = (min(u, v), max(u, v))
                self.free.setdefault(key, []).append((color, u < v))
                free_count += 1
        self.free_count = free_count
        for slots in self.free.values():
            slots.sort()

        self.obj_f = [[0] * self.n for _ in range(self.n)]
        for color, src, dst in objective_slots(scenario):
            self.obj_f[self.index[src]][self.index[dst]] |= 1 << (color - 1)

        in_x, in_xy, in_xyz = _group_vertex_sets(scenario)
        self.in_x = {self.index[v] for v in in_x}
        self.in_xy = {self.index[v] for v in in_xy}
        self.in_xyz = {self.index[v] for v in in_xyz}

        # live masks: start from the fixed-present configuration
        self.m = [row[:] for row in self.base]

        self.infeasible_static = False
        self.all_constraints = scenario.constraints + fixture_constraints(scenario)
        self._build_pair_options()
        if not self.infeasible_static:
            self._build_checkers()

    # -- pair-local rules ---------------------------------------------------

    def _local_predicates(self, u: int, v: int):
        preds = []
        for con in self.all_constraints:
            kind = con.kind
            if kind == "pair_edge_cap":
                cap = con.value
                preds.append(lambda f, b, cap=cap: _popcount(f) + _popcount(b) <= cap)
            elif kind == "oriented":
                preds.append(lambda f, b: not f & b)
            elif kind == "no_double_double":
                preds.append(lambda f, b: _popcount(f & b) <= 1)
            elif kind == "x_maximality":
                if u not in self.in_x and v not in self.in_x:
                    preds.append(lambda f, b: _popcount(f & b) <= 1)
            elif kind == "y_maximality":
                if u not in self.in_xy and v not in self.in_xy:
                    preds.append(lambda f, b: _popcount(f) + _popcount(b) <= 3)
            elif kind == "z_maximality":
                if u not in self.in_xyz and v not in self.in_xyz:
                    preds.append(lambda f, b: _top_two_color_load(f, b) <= 2)
            elif kind == "slot_sum":
                pairs = {frozenset((s[1], s[2])) for s in con.slots}
                if pairs == {frozenset((self.labels[u], self.labels[v]))}:
                    preds.append(self._pair_sum_predicate(con, u, v))
        return preds

    def _pair_sum_predicate(self, con: Constraint, u: int, v: int):
        fwd_mask = 0
        bwd_mask = 0
        for color, src, dst in con.slots:
            if self.index[src] == u:
                fwd_mask |= 1 << (color - 1)
            else:
                bwd_mask |= 1 << (color - 1)
        op, value = con.op, con.value

        def pred(f: int, b: int) -> bool:
            total = _popcount(f & fwd_mask) + _popcount(b & bwd_mask)
            if op == "==":
                return total == value
            if op == "<=":
                return total <= value
            return total >= value

        return pred

    def _build_pair_options(self) -> None:
        self.pair_keys: list[tuple[int, int]] = []
        self.options: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
        for u in range(self.n):
            for v in range(u + 1, self.n):
                preds = self._local_predicates(u, v)
                key = (u, v)
                slots = self.free.get(key)
                if not slots:
                    f, b = self.base[u][v], self.base[v][u]
                    if not all(p(f, b) for p in preds):
                        self.infeasible_static = True
                    continue
                opts = []
                for bits in range(1 << len(slots)):
                    f, b = self.base[u][v], self.base[v][u]
                    for k, (color, is_fwd) in enumerate(slots):
                        if bits >> k & 1:
                            if is_fwd:
                                f |= 1 << (color - 1)
                            else:
                                b |= 1 << (color - 1)
                    if all(p(f, b) for p in preds):
                        gain = _popcount(f & self.obj_f[u][v]) + _popcount(
                            b & self.obj_f[v][u]
                        )
                        opts.append((f, b, gain))
                if not opts:
                    self.infeasible_static = True
                    return
                opts.sort(key=lambda t: -t[2])
                self.pair_keys.append(key)
                self.options[key] = opts

    # -- multi-pair rules ---------------------------------------------------

    def _build_checkers(self) -> None:
        """Compile every rule that couples several pairs into (scope, fn)
        where scope is the set of undecided pair variables it can see."""
        m = self.m
        checkers: list[tuple[frozenset, object]] = []
        pairvars = set(self.pair_keys)

        def add(touched, fn):
            scope = frozenset(
                (min(a, b), max(a, b)) for a, b in touched
            ) & pairvars
            if not scope:
                if not fn():
                    self.infeasible_static = True
            else:
                checkers.append((scope, fn))

        cc = self.c
        for con in self.all_constraints:
            kind = con.kind
            if kind == "no_rainbow":
                directed = con.pattern == "directed"
                for a, b, c in itertools.combinations(range(self.n), 3):
                    if directed:
                        def fn(a=a, b=b, c=c):
                            return not (
                                sdr_exists(m[a][b], m[b][c], m[c][a])
                                or sdr_exists(m[b][a], m[c][b], m[a][c])
                            )
                    else:
                        def fn(a=a, b=b, c=c):
                            for p, q, r in itertools.permutations((a, b, c)):
                                if sdr_exists(m[p][q], m[q][r], m[p][r]):
                                    return False
                            return True
                    add([(a, b), (b, c), (a, c)], fn)
            elif kind == "no_thick_path":
                for a, b, c in itertools.permutations(range(self.n), 3):
                    def fn(a=a, b=b, c=c):
                        return _popcount(m[a][b]) < 3 or _popcount(m[b][c]) < 3
                    add([(a, b), (b, c)], fn)
            elif kind == "x_trimmed":
                for g in self.s.groups:
                    if g.kind != "X":
                        continue
                    ga, gb = (self.index[x] for x in g.members)
                    for w in range(self.n):
                        if w in self.in_x:
                            continue
                        def fn(w=w, ga=ga, gb=gb):
                            return (
                                _popcount(m[w][ga] & m[ga][w]) < 2
                                or _popcount(m[w][gb] & m[gb][w]) < 2
                            )
                        add([(w, ga), (w, gb)], fn)
            elif kind == "y_trimmed":
                for g in self.s.groups:
                    if g.kind != "Y":
                        continue
                    ga, gb = (self.index[x] for x in g.members)
                    for w in range(self.n):
                        if w in self.in_xy:
                            continue
                        def fn(w=w, ga=ga, gb=gb):
                            return (
                                _popcount(m[w][ga]) + _popcount(m[ga][w]) < 4
                                or _popcount(m[w][gb]) + _popcount(m[gb][w]) < 4
                            )
                        add([(w, ga), (w, gb)], fn)
            elif kind == "z_trimmed":
                for g in self.s.groups:
                    if g.kind != "Z":
                        continue
                    ga, gb = (self.index[x] for x in g.members)
                    for w in range(self.n):
                        if w in self.in_xyz:
                            continue
                        def fn(w=w, ga=ga, gb=gb):
                            return not (
                                self._z_qualifies(w, ga) and self._z_qualifies(w, gb)
                            )
                        add([(w, ga), (w, gb)], fn)
            elif kind == "no_shared_color_link":
                x = self.index[con.vertex]
                u, v = (self.index[p] for p in con.pair)
                mask = 0
                for color in con.colors:
                    mask |= 1 << (color - 1)
                def fn(x=x, u=u, v=v, mask=mask):
                    return not (m[x][u] | m[u][x]) & (m[x][v] | m[v][x]) & mask
                add([(x, u), (x, v)], fn)
            elif kind == "slot_sum":
                pairs = {
                    (
                        min(self.index[s[1]], self.index[s[2]]),
                        max(self.index[s[1]], self.index[s[2]]),
                    )
                    for s in con.slots
                }
                if len(pairs) <= 1:
                    continue  # handled as a pair-local rule
                slots_idx = [
                    (1 << (s[0] - 1), self.index[s[1]], self.index[s[2]])
                    for s in con.slots
                ]
                op, value = con.op, con.value
                def fn(slots_idx=slots_idx, op=op, value=value):
                    total = sum(1 for bit, a, b in slots_idx if m[a][b] & bit)
                    if op == "==":
                        return total == value
                    if op == "<=":
                        return total <= value
                    return total >= value
                add([(a, b) for _, a, b in slots_idx], fn)
        self.checkers = checkers

    def _z_qualifies(self, a: int, b: int) -> bool:
        """Double edge in some color plus an edge in a different color."""
        doubles = self.m[a][b] & self.m[b][a]
        either = self.m[a][b] | self.m[b][a]
        return doubles != 0 and _popcount(either) >= 2

    # -- search -------------------------------------------------------------

    def run(self) -> EnumerationResult:
        if self.infeasible_static:
            return EnumerationResult(False, None, None, 0, self.free_count)

        ctx = [k for k in self.pair_keys if not (self.obj_f[k[0]][k[1]] | self.obj_f[k[1]][k[0]])]
        ctx_set = set(ctx)
        objp = [k for k in self.pair_keys if k not in ctx_set]
        self.ctx_order = ctx
        self.obj_order = objp
        self.ctx_set = ctx_set
        ctx_pos = {k: i for i, k in enumerate(ctx)}
        obj_pos = {k: i for i, k in enumerate(objp)}

        # classify checkers once: fully-in-context ones fire during phase A,
        # the rest are split by how many objective pairs they still see
        self.ctx_fire: list[list] = [[] for _ in ctx]
        unary: list[list] = [[] for _ in objp]
        binary: dict[tuple[int, int], list] = {}
        runtime: list[list] = [[] for _ in objp]
        self.b_ctx_deps: dict[tuple[int, int], list] = {}
        for scope, fn in self.checkers:
            in_obj = sorted(obj_pos[k] for k in scope if k in obj_pos)
            if not in_obj:
                self.ctx_fire[max(ctx_pos[k] for k in scope)].append(fn)
            elif len(in_obj) == 1:
                unary[in_obj[0]].append((scope, fn))
            elif len(in_obj) == 2:
                key = (in_obj[0], in_obj[1])
                binary.setdefault(key, []).append((scope, fn))
            else:
                runtime[max(in_obj)].append(fn)
        self.unary = unary
        self.binary = binary
        self.runtime = runtime

        self.best = -1
        self.best_witness: tuple[Slot, ...] | None = None
        self.nodes = 0
        self.found = False
        self.compat_cache: dict = {}

        self._phase_a(0)

        if not self.found:
            return EnumerationResult(False, None, None, self.nodes, self.free_count)
        return EnumerationResult(
            True, self.best, self.best_witness, self.nodes, self.free_count
        )

    def _phase_a(self, idx: int) -> None:
        if idx == len(self.ctx_order):
            self._phase_b()
            return
        u, v = self.ctx_order[idx]
        for f, b, _gain in self.options[(u, v)]:
            self.nodes += 1
            self.m[u][v], self.m[v][u] = f, b
            if all(fn() for fn in self.ctx_fire[idx]):
                self._phase_a(idx + 1)
        self.m[u][v], self.m[v][u] = self.base[u][v], self.base[v][u]

    def _ctx_key(self, scopes) -> tuple:
        deps = sorted(
            {k for scope, _ in scopes for k in scope if k in self.ctx_set}
        )
        return tuple((self.m[a][b], self.m[b][a]) for a, b in deps)

    def _phase_b(self) -> None:
        order = self.obj_order
        if not order:
            # nothing to optimize beyond the context itself
            self._record_leaf(0)
            return
        cand = []
        for pos, key in enumerate(order):
            mask = (1 << len(self.options[key])) - 1
            for scope, fn in self.unary[pos]:
                mask &= self._filter_unary(key, fn, mask)
                if not mask:
                    return
            cand.append(mask)

        tables: dict[tuple[int, int], list[int]] = {}
        for (i, j), rules in self.binary.items():
            key = (order[i], order[j], i, j, self._ctx_key(rules))
            rows = self.compat_cache.get(key)
            if rows is None:
                rows = self._build_compat(order[i], order[j], rules)
                self.compat_cache[key] = rows
            tables[(i, j)] = rows

        self.b_tables: list[list[tuple[int, list[int]]]] = [[] for _ in order]
        for (i, j), rows in tables.items():
            self.b_tables[i].append((j, rows))

        self._dfs_b(0, 0, cand)

    def _filter_unary(self, key, fn, mask: int) -> int:
        u, v = key
        out = 0
        for idx, (f, b, _gain) in enumerate(self.options[key]):
            if not mask >> idx & 1:
                continue
            self.m[u][v], self.m[v][u] = f, b
            if fn():
                out |= 1 << idx
        self.m[u][v], self.m[v][u] = self.base[u][v], self.base[v][u]
        return out

    def _build_compat(self, kp, kq, rules) -> list[int]:
        (pu, pv), (qu, qv) = kp, kq
        rows = []
        for f, b, _gain in self.options[kp]:
            self.m[pu][pv], self.m[pv][pu] = f, b
            row = 0
            for idx, (qf, qb, _qgain) in enumerate(self.options[kq]):
                self.m[qu][qv], self.m[qv][qu] = qf, qb
                if all(fn() for _scope, fn in rules):
                    row |= 1 << idx
            rows.append(row)
        self.m[pu][pv], self.m[pv][pu] = self.base[pu][pv], self.base[pv][pu]
        self.m[qu][qv], self.m[qv][qu] = self.base[qu][qv], self.base[qv][qu]
        return rows

    def _max_gain(self, pos: int, mask: int) -> int:
        for idx, (_f, _b, gain) in enumerate(self.options[self.obj_order[pos]]):
            if mask >> idx & 1:
                return gain  # options are sorted by decreasing gain
        return 0

    def _dfs_b(self, pos: int, current: int, cand: list[int]) -> None:
        order = self.obj_order
        if pos == len(order):
            self._record_leaf(current)
            return
        ceiling = current + sum(
            self._max_gain(t, cand[t]) for t in range(pos, len(order))
        )
        if ceiling <= self.best:
            return
        u, v = order[pos]
        opts = self.options[(u, v)]
        mask = cand[pos]
        for idx, (f, b, gain) in enumerate(opts):
            if not mask >> idx & 1:
                continue
            self.nodes += 1
            self.m[u][v], self.m[v][u] = f, b
            nxt = cand
            dead = False
            for j, rows in self.b_tables[pos]:
                if nxt is cand:
                    nxt = cand[:]
                nxt[j] &= rows[idx]
                if not nxt[j]:
                    dead = True
                    break
            if not dead and all(fn() for fn in self.runtime[pos]):
                self._dfs_b(pos + 1, current + gain, nxt)
        self.m[u][v], self.m[v][u] = self.base[u][v], self.base[v][u]

    def _record_leaf(self, value: int) -> None:
        self.found = True
        if value > self.best:
            self.best = value
            slots = []
            for u in range(self.n):
                for v in range(self.n):
                    if u == v:
                        continue
                    mask = self.m[u][v]
                    color = 1
                    while mask:
                        if mask & 1:
                            slots.append((color, self.labels[u], self.labels[v]))
                        mask >>= 1
                        color += 1
            self.best_witness = tuple(sorted(slots))


def enumerate_max(scenario: Scenario) -> EnumerationResult:
    """Exact maximum of the scenario objective over all admissible
    completions of the free slots, with a witness configuration; scenarios
    with no admissible completion are reported as infeasible."""
    return _Engine(scenario).run()
