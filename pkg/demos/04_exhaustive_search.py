"""
Exhaustive search: exact optima over all colorings at small n
=============================================================

"""

from rtlab.search import SearchObjective, SearchProblem, solve, verify_witness
from rtlab.triangles import TrianglePattern, find_rainbow

# The branch-and-bound search ranges over every c-colored digraph on n
# vertices with no rainbow pattern and reports the exact optimum --
# either the most edges in total, or the best possible minimum over the
# color classes.  Symmetry reduction and an edge-budget bound keep the
# tree small enough to exhaust.

for oriented in (False, True):
    for pattern in TrianglePattern:
        problem = SearchProblem(n=3, c=3, pattern=pattern, oriented=oriented)
        result = solve(problem)
        print(f"n=3 c=3 {pattern.value:10s} oriented={oriented!s:5s} "
              f"max total = {result.value:2d}  (nodes {result.nodes})")

# With doubles allowed the optimum 12 means EVERY pair carries two of
# the three colors both ways; the witness realizes it.
problem = SearchProblem(n=3, c=3, pattern=TrianglePattern.DIRECTED)
result = solve(problem)
print()
print("witness edges:", result.witness.edges())
print("witness valid?", verify_witness(problem, result.witness, result.value))
print("witness pattern-free?", find_rainbow(result.witness, TrianglePattern.DIRECTED) is None)

# The other objective: make the SMALLEST color class as large as
# possible.  At n=3 each class can reach 4 of its 6 slots.
problem = SearchProblem(
    n=3, c=3, pattern=TrianglePattern.DIRECTED, objective=SearchObjective.MIN_COLOR
)
print()
print("max min-color at n=3:", solve(problem).value)

# A node budget turns the search into an anytime lower bound: it stops
# early and says so instead of silently claiming optimality.
problem = SearchProblem(n=4, c=3, pattern=TrianglePattern.DIRECTED)
capped = solve(problem, budget=50)
full = solve(problem)
print()
print(f"n=4 budget=50: value {capped.value} exhaustive={capped.exhaustive}")
print(f"n=4 unbounded: value {full.value} exhaustive={full.exhaustive}")
