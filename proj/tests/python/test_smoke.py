import json
from fractions import Fraction

import pytest

import c0mono as c


def test_sequence_basics():
    s = c.Sequence([1, 2, 2], 2)
    assert s.prefix == [Fraction(1)]
    assert s.tail == 2
    assert s[1] == 1 and s[5] == 2
    assert c.Sequence.constant(1) == c.Sequence([], 1)
    assert (-1) * c.Sequence.constant(1) == c.Sequence([], -1)
    assert c.Sequence(["1/2"], 0).to_dict() == {"prefix": ["1/2"], "tail": "0"}
    with pytest.raises(IndexError):
        s[0]


def test_pairing_and_norms():
    e = c.Sequence.constant(1)
    assert c.pairing(e, c.unit_u(1)) == 0
    assert c.l1_norm(c.unit_u(1)) == 2
    assert c.sup_norm(c.Sequence([1], 2)) == 2
    with pytest.raises(c.NonSummable):
        c.pairing(e, e)


def test_gossez_and_solver():
    assert c.gossez_apply(c.unit_u(1)) == c.unit_v(1)
    assert c.gossez_apply(c.Sequence.unit(1)) == c.Sequence([0], -1)
    assert c.t_solve(-c.unit_v(1)) == c.unit_u(1)
    assert c.t_solve(c.Sequence.unit(1)) is None
    assert c.range_member(c.unit_u(4))


def test_certificates():
    e1 = c.Sequence.unit(1)
    assert c.distinctness(1, 2, e1) == Fraction(-1, 2)
    assert c.distinctness("1", Fraction(3), e1) == Fraction(-4, 3)
    with pytest.raises(c.InvalidParameter):
        c.distinctness(1, 1, e1)

    ep = c.extension_point(2, e1)
    assert ep.xstarstar == c.Sequence([Fraction(1, 2)], Fraction(5, 2))

    sampler = c.GraphSampler(5)
    points = [sampler.graph_point(16, 100) for _ in range(50)]
    assert all(c.closure_margin(ep, p) == 1 for p in points)
    assert c.fitzpatrick_gap(ep, points) == 1
    with pytest.raises(c.EmptySample):
        c.fitzpatrick_gap(ep, [])
    assert all(c.monotone_product(p, q) == 0 for p, q in zip(points, points[1:]))


def test_violation_witness():
    assert c.violation_witness(-c.unit_v(1), c.unit_u(1)) is None
    v = c.violation_witness(c.Sequence.unit(1), c.Sequence())
    assert v.kind == "recurrence_break" and v.index == 1
    assert v.product == -1
    assert v.witness.x == c.unit_v(1)


def test_run_suite():
    ok, text = c.run_suite(json.dumps({"samples": 100, "taus": ["1", "2", "3"]}))
    report = json.loads(text)
    assert ok and report["overall"] == "pass"
    ext = next(s for s in report["suites"] if s["name"] == "extensions")
    assert [d["product"] for d in ext["evidence"]["distinctness"]] == ["-1/2", "-4/3", "-1/6"]
    assert c.run_suite('{"samples": 50}')[1] == c.run_suite('{"samples": 50}')[1]
    with pytest.raises(c.ConfigError):
        c.run_suite('{"suites": []}')
