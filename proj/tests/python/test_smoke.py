import pytest

import invcurve as ic


def test_polynomial_round_trip():
    f = ic.Polynomial("x^5+y^5-x^2*y^2")
    assert ic.Polynomial(str(f)) == f
    assert f.total_degree() == 5
    assert str(f.diff_x()) == "5*x^4-2*x*y^2"


def test_syntax_error():
    with pytest.raises(ic.SyntaxError):
        ic.Polynomial("x^^2")
    with pytest.raises(ic.InvcurveError):
        ic.Polynomial("w+1")


def test_acampo_report():
    r = ic.analyze("x^5+y^5-x^2*y^2", minimal=False)
    assert r["milnor"]["mu"] == 16
    assert r["minimal_polynomial"] == "t^3+16/3125*t^2"
    assert r["exponent"] == 2
    assert r["kernel_condition"] is False
    assert r["generators"]["four_generator"]["generates"] is False
    assert "timings" not in r


def test_jordan_profiles():
    j = ic.jordan("x^5+y^5-x^2*y^2")
    at_zero = next(p for p in j["jordan"] if p["factor"] == "t")
    assert at_zero["blocks"] == [{"size": 2, "count": 1}, {"size": 1, "count": 9}]
    relaxed = ic.jordan("x^6*y^3-x^3*y^6-x^6+y^6+x^3-y^3", relaxed=True)
    assert relaxed["mu"] == 52


def test_not_tame():
    assert ic.analyze("x^2*y^2+x+y")["tame"]["tame"] is False
    with pytest.raises(ic.NotTame):
        ic.jordan("x^2*y^2+x+y")


def test_circle_pair():
    f = ic.Polynomial("x*y-1")
    w0 = ic.OneForm(ic.Polynomial("y^2"), ic.Polynomial("1"))
    winf = ic.OneForm(f, ic.Polynomial("0"))
    assert ic.is_tangent(w0, f) and ic.is_tangent(winf, f)
    assert ic.wedge(w0, winf) == -f
    assert ic.saito_constant(w0, winf, f) == "-1"
    assert ic.generates([w0, winf], f)
    pair = ic.minimal_generators(f)
    assert len(pair) == 2
    assert ic.same_module(pair, [w0, winf])
    x, y = ic.Polynomial("x"), ic.Polynomial("y")
    assert ic.d(f) == x * w0 - y * winf


def test_extension_field():
    f = ic.Polynomial("x^2+y^2-1", minpoly="z^2+1")
    assert len(ic.syzygy_generators(f)) >= 2
    r = ic.analyze("x^2+y^2-1", minpoly="z^2+1")
    assert r["tame"]["tame"] is True


def test_plot():
    svg = ic.render_svg(ic.Polynomial("x^2+y^2-1"), window=1.5, grid=40)
    assert svg.startswith("<svg") and "<path" in svg
    assert "<path" not in ic.render_svg(ic.Polynomial("1"))
    with pytest.raises(ic.DegenerateWindow):
        ic.render_svg(ic.Polynomial("x"), window=0)
    with pytest.raises(ic.MissingEmbedding):
        ic.render_svg(ic.Polynomial("x-z*y", minpoly="z^2-2"))


def test_corpus_subset():
    results = ic.corpus(["circle", "acampo"])
    assert [r["fixture"] for r in results] == ["circle", "acampo"]
    assert all(r["passed"] for r in results)
    assert "riccati" in ic.fixture_names()
