import random

import pytest
from hypothesis import settings, strategies as st

from youngdim import GrowthPath, YoungDiagram

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@st.composite
def partition_diagrams(draw, max_n=14):
    """Random diagram with 1..max_n boxes, drawn row by row."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    rows = []
    remaining = n
    cap = n
    while remaining:
        part = draw(st.integers(min_value=1, max_value=min(cap, remaining)))
        rows.append(part)
        cap = part
        remaining -= part
    return YoungDiagram(rows)


def random_diagram(n, rng):
    """Uniform-ish random diagram of size n grown box by box."""
    cur = YoungDiagram(())
    for _ in range(n):
        cur = cur.add_box(rng.choice(cur.addable_boxes()))
    return cur


def random_growth_path(diagram, rng):
    """A random path from the empty diagram to the given one."""
    boxes = []
    cur = diagram
    while cur.size:
        corner = rng.choice(cur.removable_boxes())
        boxes.append(corner)
        cur = cur.remove_box(corner)
    boxes.reverse()
    return GrowthPath(start=YoungDiagram(()), steps=tuple(boxes))


@pytest.fixture
def rng():
    return random.Random(20240817)
