"""Smoke test for the pyavecc extension module."""

from fractions import Fraction

import pyavecc as av


def main():
    k4 = av.Graph.from_graph6("C~")
    assert k4.n == 4 and k4.m == 6
    assert k4.average_eccentricity() == 1
    assert k4.invariants()["clique"] == 4

    broom = av.family("broom n=11 delta=6")
    assert broom.is_tree()
    assert broom.average_eccentricity() == av.closed_form("broom n=11 delta=6")
    profile = broom.profile()
    assert profile["radius"] <= profile["diameter"]

    relabeled = av.Graph(broom.n, [(broom.n - 1 - u, broom.n - 1 - v) for u, v in broom.edges()])
    assert relabeled.certificate() == broom.certificate()
    assert relabeled.is_isomorphic(broom)

    grown = av.pi_transform(broom, 0)
    assert grown.average_eccentricity() > broom.average_eccentricity()

    g = av.Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    shrunk = av.sigma_transform(g, 2, 3)
    assert shrunk.average_eccentricity() < g.average_eccentricity()

    assert len(av.enumerate("trees", 10)) == 106
    assert len(av.enumerate("graphs", 6)) == 112

    ids = [c["id"] for c in av.conjectures()]
    assert len(ids) == 13 and "A.478-U" in ids
    e = av.evaluate("A.478-U", av.family("path n=5"))
    assert e["status"] == "equality" and e["value"] == "31/5"

    report = av.scan("A.478-U", "trees", 4, 9, jobs=2)
    assert sum(o["violations"] for o in report["per_order"]) == 0

    refutation = av.refute_a100([20], [20])
    row = refutation["rows"][0]
    assert row["n"] == 422 and row["violated"]
    assert Fraction(row["product"]) > Fraction(row["bound"])

    root, argmax = av.lollipop_kstar(50)
    assert all(abs(k - root) <= 1 for k in argmax)

    try:
        av.family("broom n=5")
    except av.AveccError:
        pass
    else:
        raise AssertionError("bad family accepted")

    print("pyavecc smoke test passed")


if __name__ == "__main__":
    main()
