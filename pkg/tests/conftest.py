from __future__ import annotations

import pytest

from kteams.semirings import NATURALS, Semiring
from kteams.teams import KTeam

TABLE1_SCHEMA = ("x", "y", "z", "v", "w")
TABLE1_ROWS = ((0, 0, 1, 0, 0), (0, 1, 1, 0, 0), (1, 0, 0, 1, 0))


def table1(K: Semiring, a, b, c) -> KTeam:
    return KTeam(TABLE1_SCHEMA, K, TABLE1_ROWS, (a, b, c))


@pytest.fixture
def example_team() -> KTeam:
    """The running three-row example team over the naturals, (a,b,c)=(1,1,3)."""
    return table1(NATURALS, 1, 1, 3)
