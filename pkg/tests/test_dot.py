from adtgames.dot import to_dot


def test_fig1_has_two_dashed_edges(fig1):
    text = to_dot(fig1)
    assert text.startswith("digraph game {")
    assert text.count("style=dashed") == 2
    assert text.count("style=solid") == 2
    assert text.count('"(0,1)"') == 2


def test_counter_edge_dashed(example1):
    text = to_dot(example1)
    assert text.startswith("digraph adterm {")
    assert text.count("style=dashed") == 1
    assert text.count("shape=box") == 2  # or_o and G
    assert text.count("->") == 5
