from math import factorial

import pytest

import tateops


def test_c2_ring_is_laurent():
    r = tateops.Ring("C2", -4, 4)
    assert [r.dim(n) for n in range(-4, 5)] == [1] * 9
    s = r.parse("s")
    assert r.describe(r.cup(s, r.parse("s^-1"))) == "1"


def binom(i, j):
    """Generalized binomial i(i-1)...(i-j+1)/j!, exact for negative i."""
    if j < 0:
        return 0
    num = 1
    for k in range(j):
        num *= i - k
    return num // factorial(j)


def test_c2_operations_match_binomials():
    r = tateops.Ring("C2", -6, 3)
    for i in range(-3, 4):
        x = r.basis(i, 0)
        for d in range(-6, 2 * i + 1):
            # coefficient of s^d in (s + s^2)^i
            assert r.Q(x, i - d).coords == [binom(i, 2 * i - d) % 2]


def test_v4_phi00():
    r = tateops.Ring("V4", -5, 0)
    x = r.parse("phi00")
    assert [r.describe(r.Q(x, s)) for s in range(1, 5)] == ["0", "phi11", "phi12+phi21", "phi13+phi22+phi31"]


def test_steenrod_on_degree_one():
    r = tateops.Ring(tateops.Group.catalog("D8"), -1, 4)
    a = r.parse("a")
    assert r.Sq(a, 1) == r.cup(a, a)
    assert r.Sq(a, 0) == a


def test_dual_operation_d8():
    r = tateops.Ring("D8", -5, 4)
    assert r.describe(r.dual_q(r.parse("c"), 2)) == "1"


def test_symbolic_odd_prime():
    assert tateops.symbolic_q("C3", "s", -1, p=3) == "s^3"
    assert tateops.symbolic_total("C2", "s", 1) == "s^2+s"


def test_suites_pass():
    assert set(tateops.suite_names()) >= {"cartan", "adem", "window-independence"}
    assert tateops.verify("adem", "Q8", seed=7)["ok"]
    assert tateops.verify("cartan", "V4", lo=-2, hi=2)["ok"]
    assert tateops.verify("kunneth", "C2xC2", lo=-3, depth=3)["ok"]


def test_productive_verdicts_agree():
    for v in tateops.productive("V4", -1, 2):
        assert v["annihilates"] == v["divisible"]


def test_errors():
    with pytest.raises(ValueError):
        tateops.Group.catalog("nonsense")
    r = tateops.Ring("V4", -2, 2)
    with pytest.raises(ValueError):
        r.parse("zz")
    with pytest.raises(ValueError):
        tateops.Group.from_table("order 2\n0 1\n1 1\n")
    other = tateops.Ring("C2", -2, 2)
    with pytest.raises(ValueError):
        r.Q(other.parse("s"), 0)
