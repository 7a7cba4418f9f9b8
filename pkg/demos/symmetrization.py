"""
Moving asymmetric boxes to grow the dimension
=============================================

Write a diagram on top of its conjugate and keep the overlap: that is
the base subdiagram, and it is symmetric.  The leftover boxes split
into A_u (above the diagonal) and A_d (below).  When no row or column
holds two leftovers, reflecting every A_d box to its mirror seat never
shrinks the dimension, and strictly grows it when both sides start
non-empty.
"""

from youngdim import (
    Box,
    YoungDiagram,
    balance,
    balance_sweep,
    balance_to_core,
    check_reflection_hook_identities,
    symmetrize,
    symmetrize_sweep,
)
from youngdim.errors import ShapeBlocked

# The worked pair: (4, 2, 2) holds one box on each side of the
# diagonal.  Reflecting the lower one lifts the dimension 56 -> 70.
lam = YoungDiagram([4, 2, 2])
up, down = lam.asymmetric_boxes()
print("A_u:", sorted(up), " A_d:", sorted(down))
print("base:", lam.base_subdiagram().rows)
rep = symmetrize(lam)
print("%s -> %s, dim %d -> %d" % (lam.rows, rep.output.rows, rep.dim_input, rep.dim_output))

# The dimension comparison rests on hook lengths pairing up between a
# box seat and its mirror seat across the base.  The identity checker
# recomputes both closed forms from scratch.
print("hook pairing:", check_reflection_hook_identities(
    YoungDiagram([3, 2, 1]), Box(1, 4), Box(3, 2)))

# Exhaustively over every diagram with up to 18 boxes: not one
# reflection lowered the dimension.
sweep = symmetrize_sweep(18)
print("checked %d, strict increases %d, equal %d, violations %d" % (
    sweep.checked, sweep.strict, sweep.equal, len(sweep.violations)))

# Line balancing is the iterated cousin: when column i is taller than
# row i by d, move ceil(d/2) boxes from the column top to the row end.
# Rounds of such moves either reach a diagram whose leftovers sit one
# per row below the diagonal, or report the shape as blocked.
rep = balance(YoungDiagram([1, 1, 1]), 1)
print("balance column 1: %s -> %s" % ((1, 1, 1), rep.output.rows))

rep = balance_to_core(YoungDiagram([6, 5, 1, 1]))
print("rounds: %s -> %s, dim %d -> %d" % (
    (6, 5, 1, 1), rep.output.rows, rep.dim_input, rep.dim_output))

try:
    balance_to_core(YoungDiagram([5, 5]))
except ShapeBlocked as err:
    print("blocked at:", err.diagram.rows)

# The same sweep idea for rounds: across all diagrams with up to 20
# boxes the endpoint dimension never drops.
sweep = balance_sweep(20)
print("checked %d, increased %d, equal %d, blocked %d, decreased %d" % (
    sweep.checked, sweep.increased, sweep.equal, len(sweep.blocked), len(sweep.decreased)))
