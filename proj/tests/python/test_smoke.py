import pytest

import tmono


def test_paley7_polynomials():
    p7 = tmono.paley(7)
    assert tmono.char_poly(p7) == [-24, -28, -42, -21, -14, 0, 0, 1]
    v = tmono.spectral_monomorphy(p7, 5)
    assert v["monomorphic"]
    assert v["common"] == [-2, -3, -4, 0, 0, 1]
    assert tmono.char_poly(p7, skew=True) == [0, 343, 0, 147, 0, 21, 0, 1]


def test_counterexample_witness():
    v = tmono.spectral_monomorphy(tmono.counterexample7(), 6, jobs=2)
    assert not v["monomorphic"]
    a, b = v["witness"]
    assert len(a) == len(b) == 6
    pa, pb = v["witness_polys"]
    assert pa != pb


def test_text_round_trip():
    t = tmono.Tournament.parse("3\n010\n001\n100\n")
    assert t.order == 3
    assert t.dominates(0, 1)
    assert tmono.Tournament.parse(t.serialize()) == t
    with pytest.raises(tmono.ParseError):
        tmono.Tournament.parse("3\n010\n001\n000\n")


def test_structure_and_classes():
    r = tmono.structure_report(tmono.paley(7))
    assert r["is_doubly_regular"] and r["t"] == 1 and r["three_cycle_count"] == 14
    assert tmono.classify_n2(tmono.transitive(6)) == "Transitive"
    assert tmono.classify_n2(tmono.counterexample7()) == "NotMonomorphic"
    assert tmono.classify_skew(tmono.reversed_transitive(8)) == ("SwitchOfTransitive", [0])
    assert tmono.classify_skew(tmono.counterexample7()) == ("Other", None)
    t21 = tmono.triple(tmono.paley(7), tmono.paley(7), tmono.counterexample7())
    assert all(t21.out_degree(v) == 10 for v in range(21))


def test_errors_map_to_python_exceptions():
    with pytest.raises(tmono.PreconditionError):
        tmono.paley(15)
    with pytest.raises(tmono.TmonoError):
        tmono.spectral_monomorphy(tmono.paley(7), 9)


def test_verify_and_census():
    assert set(tmono.verify_suites()) >= {"eq1", "gregory", "theorem2"}
    assert tmono.run_verify("gregory", trials=3)["passed"]
    r = tmono.run_census(6, 3, "prop3")
    assert r["monomorphic"] == 720 and r["exceptions"] == []
    assert tmono.run_census(6, 4, "problem1", skew=True, jobs=2) == tmono.run_census(6, 4, "problem1", skew=True)
