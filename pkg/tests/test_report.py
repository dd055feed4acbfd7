import json

import pytest

from toric_codes.binomial import KernelError
from toric_codes.classify import one_pierced_test
from toric_codes.code import c1_code, example_code
from toric_codes.orders import Grevlex
from toric_codes.report import (BasisReport, binomial_dict, binomial_text, code_label,
                                monomial_text, parse_binomial, parse_binomials, sorted_basis,
                                verdict_dict, verdict_text)
from toric_codes.toric import make_binomial, monomial, toric_generators


def test_binomial_renderings():
    code = c1_code()
    b = make_binomial(code, monomial(code, (1,), (2,)), monomial(code, (1, 2)))
    assert binomial_text(code, b) == "t1*t2 - t12"
    assert binomial_dict(code, b) == {"plus": {"1": 1, "2": 1}, "minus": {"1,2": 1}}
    assert monomial_text(code, monomial(code, (1,), (1,))) == "t1^2"
    assert monomial_text(code, (0,) * 7) == "1"


def test_parse_binomial():
    code = c1_code()
    b = parse_binomial(code, "{1,3} {2,3} - {3} {1,2,3}")
    assert b.plus == monomial(code, (1, 3), (2, 3))
    assert parse_binomials(code, ["# comment", "", "{1} {2} - {1,2}"]) == [
        make_binomial(code, monomial(code, (1,), (2,)), monomial(code, (1, 2)))]
    with pytest.raises(KernelError):
        parse_binomial(code, "{1} - {2}")


def test_sorted_basis_puts_leads_first():
    code = c1_code()
    order = Grevlex()
    out = sorted_basis([b.negate() for b in toric_generators(code).binomials], order)
    for b in out:
        assert order.key(b.plus) > order.key(b.minus)
    assert [order.key(b.plus) for b in out] == sorted(order.key(b.plus) for b in out)


def test_report_json_round_trip():
    code = example_code()
    rep = BasisReport.build(code, "reduced", toric_generators(code).binomials, Grevlex())
    d = json.loads(rep.to_json())
    assert d["code"] == "ci" and d["order"] == "grevlex" and d["size"] == len(d["elements"])
    assert rep.to_text().splitlines()[1] == f"{d['size']} binomials"


def test_verdicts():
    v = one_pierced_test(example_code())
    assert verdict_dict(v)["value"] is True
    assert verdict_text(v).startswith("is_one_pierced_n3: true")


def test_code_label():
    from toric_codes.code import Code
    assert code_label(example_code()) == "ci"
    assert code_label(Code.from_supports(2, [(), (1,), (1, 2)])).startswith("{")
