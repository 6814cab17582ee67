import math

import pytest

import wysiwyg as w


def t(delta):
    d = delta * delta - 1
    return (d - 2) / (d - 1)


def test_elements():
    a = w.Element("A")
    assert str(a) == "((.,.),.)/(.,(.,.))"
    assert (a * a.inverse()).is_identity()
    assert w.power_A(3) == a * a * a
    assert w.multiply_rewrite(a, w.Element("B")) == a * w.Element("B")
    assert w.sigma(a) == w.Element("B")
    assert w.Element("D").leaves == 4


def test_coefficients():
    assert str(w.coeff(w.Element("A"))) == "1"
    c = w.coeff(w.Element("D"), "psi")
    assert str(c) == "(δ^2-3)/(δ^2-2)"
    assert c(2.0) == pytest.approx(0.5)
    assert w.coeff_numeric(w.Element("D"), "omega", 2.0) == pytest.approx(0.25)
    assert w.brute_force_coefficient(w.Element("D"), "omega") == w.coeff(w.Element("D"), "omega")
    delta = w.delta_root(7)
    assert w.coeff_numeric(w.power_A(2), "omega", delta) == pytest.approx(t(delta) ** 2)


def test_experiments():
    rows = w.an_decay(6, 2.0)
    assert rows == pytest.approx([0.5**n for n in range(1, 7)])
    assert w.lemma43_threshold(w.Element("D"), w.Element("D"), 6) == 1
    assert w.sigma_limit_threshold(w.Element("A"), 5) == 1
    g = w.gram_numeric([w.Element("id"), w.Element("A")], "omega", 2.0)
    assert g == [[1.0, 0.5], [0.5, 1.0]]
    assert w.min_eigenvalue(g) == pytest.approx(0.5)


def test_errors_and_cli():
    with pytest.raises(w.DomainError, match="position 4"):
        w.Element("A^2 C")
    code, out, _ = w.run_cli(["coeff", "--elem", "D", "--delta", "2"])
    assert (code, out) == (0, "0.5\n")
    code, _, err = w.run_cli(["coeff", "--elem", "D", "--max-width", "2"])
    assert code == 2 and "reached" in err
    assert not math.isnan(w.coeff_numeric(w.Element("B"), "psi", 3.0))
