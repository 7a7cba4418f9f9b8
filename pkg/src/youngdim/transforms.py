"""Shape transforms that move asymmetric boxes across the main diagonal.

A diagram splits into its base subdiagram (the largest symmetric part)
plus asymmetric boxes above and below the diagonal.  When no row and no
column carries two asymmetric boxes, reflecting every below-diagonal
asymmetric box to its mirror position yields a valid diagram whose
dimension is strictly larger whenever both sides were occupied.  The
closed-form hook accounting behind that fact is checkable box by box,
and `check_reflection_hook_identities` does exactly that.

`balance` is the generalized move: it shifts half of a row/column
imbalance from the taller column onto its row.  `balance_to_core`
iterates such moves until the diagram (or its conjugate) lands in the
core subgraph; the dimension is expected, but not proven, to rise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Box, YoungDiagram, reflected
from .dimension import dim_exact
from .errors import (
    AsymmetricBoxesNotIsolated,
    BalanceNotApplicable,
    DegenerateOverlap,
    InvalidResultShape,
    NotAddable,
    PartitionError,
    ShapeBlocked,
)


@dataclass(frozen=True)
class TransformReport:
    input: YoungDiagram
    output: YoungDiagram
    dim_input: int
    dim_output: int
    strict_expected: bool


def _diagram_from_boxes(boxes) -> YoungDiagram:
    by_row: dict[int, set[int]] = {}
    for r, c in boxes:
        by_row.setdefault(r, set()).add(c)
    if not by_row:
        return YoungDiagram(())
    rows = []
    for i in range(1, max(by_row) + 1):
        cols = by_row.get(i, set())
        if cols != set(range(1, len(cols) + 1)):
            raise InvalidResultShape(f"row {i} is not contiguous: {sorted(cols)}")
        rows.append(len(cols))
    try:
        return YoungDiagram(rows)
    except PartitionError as exc:
        raise InvalidResultShape(f"box set is not a diagram: {rows}") from exc


def symmetrize(diagram: YoungDiagram) -> TransformReport:
    """Reflect all below-diagonal asymmetric boxes above the diagonal.

    Requires every row and column to hold at most one asymmetric box.
    With nothing below the diagonal the output is the input itself; with
    nothing above it the output is the conjugate, at equal dimension.
    When both sides are occupied the output dimension is strictly
    larger, and the report's strict_expected flag records that claim.
    """
    if not diagram.has_isolated_asymmetric_boxes():
        raise AsymmetricBoxesNotIsolated(
            f"a row or column of {diagram.rows} carries two asymmetric boxes"
        )
    up, down = diagram.asymmetric_boxes()
    target = set(diagram.base_subdiagram().boxes()) | set(up)
    target.update(reflected(b) for b in down)
    output = _diagram_from_boxes(target)
    return TransformReport(
        input=diagram,
        output=output,
        dim_input=dim_exact(diagram),
        dim_output=dim_exact(output),
        strict_expected=bool(up) and bool(down),
    )


def _expected_hooks(k: int, l: int, t: int, s: int):
    """Closed-form hook values for the four pivot boxes.

    Returns (boxes, before, after): the pivot boxes, their hooks in the
    diagram holding the below-diagonal box, and their hooks after that
    box is reflected above the diagonal.
    """
    if k < s:
        boxes = (Box(s, k), Box(t, k), Box(k, s), Box(k, t))
        before = (l - s + t - k - 1, l - t + s - k, t - k + l - s + 1, s - k + l - t)
        after = (l - s + t - k, l - t + s - k - 1, t - k + l - s, l - t + s - k + 1)
    else:
        boxes = (Box(s, k), Box(l, s), Box(k, s), Box(s, l))
        before = (l - s + t - k - 1, t - l + k - s, t - k + l - s + 1, k - s + t - l)
        after = (l - s + t - k, t - l + k - s - 1, t - k + l - s, k - s + t - l + 1)
    return boxes, before, after


def check_reflection_hook_identities(
    base: YoungDiagram, upper: Box, lower: Box
) -> bool:
    """Verify the hook accounting for one above/below box pair.

    `base` must be symmetric, `upper` = (k, l) with k < l and `lower` =
    (t, s) with t > s must both be addable to it.  The function builds
    the diagram with both boxes and the one with the lower box reflected,
    then checks that the four pivot hooks match their closed forms in
    both shapes and that the pivot hook product strictly drops, which is
    what makes the reflected diagram's dimension strictly larger.
    """
    if not base.is_symmetric():
        raise ValueError(f"base {base.rows} is not symmetric")
    k, l = upper
    t, s = lower
    if k >= l:
        raise NotAddable(f"upper box {tuple(upper)} is not above the diagonal")
    if t <= s:
        raise NotAddable(f"lower box {tuple(lower)} is not below the diagonal")
    if not base.can_add(upper):
        raise NotAddable(f"{tuple(upper)} is not addable to {base.rows}")
    if not base.can_add(lower):
        raise NotAddable(f"{tuple(lower)} is not addable to {base.rows}")
    if k == s:
        raise DegenerateOverlap(
            f"{tuple(upper)} and {tuple(lower)} are mirror images"
        )

    with_lower = base.add_box(upper).add_box(lower)
    with_reflected = base.add_box(upper).add_box(reflected(lower))
    boxes, before, after = _expected_hooks(k, l, t, s)

    for box, expect_before, expect_after in zip(boxes, before, after):
        if with_lower.hook_length(box) != expect_before:
            return False
        if with_reflected.hook_length(box) != expect_after:
            return False
    prod_before = prod_after = 1
    for box in boxes:
        prod_before *= with_lower.hook_length(box)
        prod_after *= with_reflected.hook_length(box)
    return prod_after < prod_before


def balance(diagram: YoungDiagram, index: int) -> TransformReport:
    """Move half of a column's excess over its row onto that row.

    With c the height of column `index` and r the length of row `index`,
    requires d = c - r > 0 and moves ceil(d / 2) boxes from the top of
    the column to the end of the row, one corner at a time.  Any step
    that would pass through an invalid shape raises ShapeBlocked with
    the stuck diagram attached.
    """
    if index < 1:
        raise ValueError(f"line index must be at least 1, got {index}")
    c = diagram.col_height(index)
    r = diagram.row_length(index)
    d = c - r
    if d <= 0:
        raise BalanceNotApplicable(
            f"column {index} (height {c}) does not exceed row {index} (length {r})"
        )
    moves = (d + 1) // 2
    cur = diagram
    for _ in range(moves):
        top = Box(cur.col_height(index), index)
        if not cur.can_remove(top):
            raise ShapeBlocked(
                f"box {tuple(top)} is not a removable corner", diagram=cur
            )
        cur = cur.remove_box(top)
    for _ in range(moves):
        nxt = Box(index, cur.row_length(index) + 1)
        if not cur.can_add(nxt):
            raise ShapeBlocked(f"box {tuple(nxt)} is not addable", diagram=cur)
        cur = cur.add_box(nxt)
    new_d = cur.col_height(index) - cur.row_length(index)
    assert new_d in (0, -1), f"balance left difference {new_d} at line {index}"
    return TransformReport(
        input=diagram,
        output=cur,
        dim_input=dim_exact(diagram),
        dim_output=dim_exact(cur),
        strict_expected=False,
    )


def balance_to_core(diagram: YoungDiagram) -> TransformReport:
    """Iterate balance rounds until the core subgraph is reached.

    Each round walks the line indices in ascending order and applies
    every unblocked move in place: a line whose column is taller is
    balanced directly, a line whose row is longer through the
    conjugate.  Membership is tested between rounds, not between the
    moves of one round; stopping inside a round on the first membership
    hit is what produces endpoint dimension drops, since a single move
    can land in the core one step below a much better round result.
    Raises ShapeBlocked when a round makes no move or the round results
    cycle.  The dimension is expected to never drop input to output,
    but that is measured by the sweeps, not asserted here.
    """
    cur = diagram
    seen = {cur.rows}
    while not (cur.in_core_subgraph() or cur.conjugate().in_core_subgraph()):
        moved = False
        bound = max(cur.row_count, cur.row_length(1))
        for i in range(1, bound + 1):
            d = cur.col_height(i) - cur.row_length(i)
            try:
                if d >= 1:
                    cur = balance(cur, i).output
                elif d <= -1:
                    cur = balance(cur.conjugate(), i).output.conjugate()
                else:
                    continue
            except ShapeBlocked:
                continue
            moved = True
        if not moved:
            raise ShapeBlocked("no balance step applies", diagram=cur)
        if cur.rows in seen:
            raise ShapeBlocked("balance rounds cycled", diagram=cur)
        seen.add(cur.rows)
    return TransformReport(
        input=diagram,
        output=cur,
        dim_input=dim_exact(diagram),
        dim_output=dim_exact(cur),
        strict_expected=False,
    )


@dataclass
class ReflectionSweep:
    """Tally of an exhaustive symmetrize run over all diagrams of a size range."""

    checked: int = 0
    strict: int = 0
    equal: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)


def symmetrize_sweep(max_n: int) -> ReflectionSweep:
    """Symmetrize every diagram of every size up to max_n.

    Diagrams whose asymmetric boxes are not isolated are skipped.  A
    violation is any strict case that fails to increase the dimension or
    any non-strict case whose dimension changes at all.
    """
    from .oracle import partitions

    sweep = ReflectionSweep()
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            if not lam.has_isolated_asymmetric_boxes():
                sweep.skipped += 1
                continue
            rep = symmetrize(lam)
            sweep.checked += 1
            ok = (
                rep.dim_output > rep.dim_input
                if rep.strict_expected
                else rep.dim_output == rep.dim_input
            )
            if not ok:
                sweep.violations.append(
                    (lam.rows, rep.output.rows, rep.dim_input, rep.dim_output)
                )
            elif rep.dim_output > rep.dim_input:
                sweep.strict += 1
            else:
                sweep.equal += 1
    return sweep


def reflection_hooks_sweep(max_base_size: int) -> tuple[int, list]:
    """Check the hook identities for every valid pair over every symmetric base.

    Returns (pairs checked, failures).  Mirror-image pairs are skipped as
    degenerate.
    """
    from .oracle import partitions

    checked = 0
    failures = []
    for n in range(0, max_base_size + 1):
        bases = [YoungDiagram(())] if n == 0 else [
            lam for lam in partitions(n) if lam.is_symmetric()
        ]
        for base in bases:
            addable = base.addable_boxes()
            uppers = [b for b in addable if b.row < b.col]
            lowers = [b for b in addable if b.row > b.col]
            for u in uppers:
                for w in lowers:
                    if u.row == w.col:
                        continue
                    checked += 1
                    if not check_reflection_hook_identities(base, u, w):
                        failures.append((base.rows, tuple(u), tuple(w)))
    return checked, failures


@dataclass
class BalanceSweep:
    """Tally of an exhaustive balance_to_core run."""

    checked: int = 0
    increased: int = 0
    equal: int = 0
    decreased: list = field(default_factory=list)
    blocked: list = field(default_factory=list)


def balance_sweep(max_n: int) -> BalanceSweep:
    from .oracle import partitions

    sweep = BalanceSweep()
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            sweep.checked += 1
            try:
                rep = balance_to_core(lam)
            except ShapeBlocked as exc:
                stuck = exc.diagram.rows if exc.diagram is not None else None
                sweep.blocked.append((lam.rows, stuck))
                continue
            if rep.dim_output > rep.dim_input:
                sweep.increased += 1
            elif rep.dim_output == rep.dim_input:
                sweep.equal += 1
            else:
                sweep.decreased.append(
                    (lam.rows, rep.output.rows, rep.dim_input, rep.dim_output)
                )
    return sweep
