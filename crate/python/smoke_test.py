"""Smoke test for the totdom_py extension module.

Build and install first:

    pip install --no-build-isolation -e crates/py
"""

import totdom_py as td


def main():
    g, orientations = td.fixture("fig8")
    assert (g.n, g.m) == (12, 22)
    sizes = {name: td.gamma_t(d)[0] for name, d in orientations}
    assert sizes == {"left": 11, "right": 3}, sizes

    k4 = td.Graph.from_graph6("C~")
    assert k4.graph6() == "C~"
    assert td.domt_range(k4) == (3, 3)
    assert td.recognize(k4)["family"] == "F2"

    paw = td.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 1)])
    assert td.recognize(paw)["family"] == "F1"
    assert td.recognize_result1_class(paw)["member"]
    d = td.extremal_orientation(paw)
    assert td.gamma_t(d)[0] == paw.n - 1

    petersen, _ = td.fixture("petersen")
    assert td.recognize(petersen) is None
    assert td.exists_extremal_orientation(petersen) is None

    fig9, w = td.generate_f1(5, chords=[1, 2, 3])
    assert fig9 == td.fixture("fig9(5)")[0]
    assert td.domt_range(fig9) == (3, 5)

    g7, w7 = td.generate_f3(4, "dwk3-via-xy", cycles=[4, 4], links=[1, 1])
    assert w7["case_tag"] == "dwk3-via-xy"

    c5 = td.Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    circuit = td.Orientation(c5, [(i, (i + 1) % 5) for i in range(5)])
    assert td.gamma_t(circuit)[0] == 5
    bad = td.Orientation(c5, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)])
    try:
        td.gamma_t(bad)
    except ValueError as e:
        assert "no total dominating set" in str(e)
    else:
        raise AssertionError("expected ValueError")

    k8 = td.Graph(8, [(u, v) for v in range(8) for u in range(v)])
    try:
        td.domt_range(k8)
    except td.BudgetError:
        pass
    else:
        raise AssertionError("expected BudgetError")

    summary = td.verify("main", max_n=5)
    assert summary["ok"] and summary["graph_count"] == 23, summary
    summary = td.verify("result2", graphs=[c5, k4])
    assert summary["positives"] == 1

    print("smoke test passed")


if __name__ == "__main__":
    main()
