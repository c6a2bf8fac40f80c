import pytest

import ghgraph as gg


@pytest.fixture
def circle():
    return gg.circle_graph()


@pytest.fixture
def segment01():
    return gg.segment_graph(0.0, 1.0)


@pytest.fixture
def segment02():
    return gg.segment_graph(0.0, 2.0)


@pytest.fixture
def theta345():
    return gg.theta_graph(3.0, 4.0, 5.0)


@pytest.fixture
def lollipop():
    # length-3 loop at p with a unit pendant edge down to the leaf q
    return gg.build_graph(
        ["p", "q"], [("loop", "p", "p", 3.0), ("stick", "p", "q", 1.0)]
    )


@pytest.fixture
def multi():
    # parallel edges u-v of different lengths, a self-loop at v, and a spur;
    # exercises every multigraph code path at once
    return gg.build_graph(
        ["u", "v", "w"],
        [
            ("a", "u", "v", 3.0),
            ("b", "u", "v", 1.0),
            ("self", "v", "v", 2.0),
            ("spur", "v", "w", 0.5),
        ],
    )
