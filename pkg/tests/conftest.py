import pytest

from starbench.witnesses import WitnessSpec, build


@pytest.fixture
def witness():
    """Builder shortcut: witness('U3', 4) or witness('U3', 5, 'bac')."""

    def make(family, n, order=None):
        return build(WitnessSpec(family, n, tuple(order) if order else None))

    return make
