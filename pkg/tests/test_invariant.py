"""End-to-end invariants: exact values, flags, specializations, families."""

import json
from pathlib import Path

import pytest

from torus_super.algebra import KNOT, LaurentPolynomial
from torus_super.invariant import (
    GeneratingFunction,
    KnotRequest,
    NonPolynomial,
    Superpolynomial,
    compute,
    generating_function,
    generating_function_from_json,
    generating_function_to_json,
    scan,
    specialize,
    superpolynomial_from_json,
    superpolynomial_to_json,
    verify_properties,
)

FIXTURES = Path(__file__).parent.parent / "src" / "torus_super" / "fixtures"


def knot(terms):
    return LaurentPolynomial(KNOT, terms)


def test_request_quotient_remainder():
    req = KnotRequest(3, 7)
    assert (req.quotient, req.remainder, req.gcd) == (2, 1, 1)
    assert req.n * req.quotient + req.remainder == req.m
    with pytest.raises(ValueError):
        KnotRequest(0, 3)
    with pytest.raises(ValueError):
        KnotRequest(2, -1)
    with pytest.raises(TypeError):
        KnotRequest(2.0, 3)


def test_trefoil():
    result = compute(2, 3)
    assert isinstance(result, Superpolynomial)
    assert result.terms == knot({(0, 0, 0): 1, (0, 4, 2): 1, (2, 2, 3): 1})
    assert result.flags.all_true


def test_two_five():
    result = compute(2, 5)
    assert result.terms == knot(
        {(0, 0, 0): 1, (0, 4, 2): 1, (0, 8, 4): 1, (2, 2, 3): 1, (2, 6, 5): 1}
    )


def test_even_pair_is_not_polynomial():
    result = compute(2, 4)
    assert isinstance(result, NonPolynomial)
    assert result.gcd == 2
    assert result.reason


def test_multiple_of_strands_is_not_polynomial():
    result = compute(3, 6)
    assert isinstance(result, NonPolynomial)
    assert result.gcd == 3


def test_unknots_are_trivial():
    for m in range(1, 7):
        result = compute(1, m)
        assert result.terms == LaurentPolynomial.one(KNOT)
        assert result.flags.all_true


def test_four_seven_top_block():
    result = compute(4, 7)
    top = {
        (eq, et): c for (ea, eq, et), c in result.terms.terms.items() if ea == 6
    }
    assert top == {(12, 15): 1, (16, 17): 1, (18, 19): 1, (20, 19): 1, (24, 21): 1}


def test_flags_and_normalization_shape():
    for n, m in [(2, 7), (3, 5), (4, 5)]:
        result = compute(n, m)
        assert result.flags.all_true
        assert result.terms.constant_term == 1
        assert result.terms.min_exponents() == (0, 0, 0)
        a_max = result.terms.max_exponents()[0]
        assert a_max == 2 * (n - 1)
        a_powers = {ea for (ea, _, _) in result.terms.terms}
        assert all(ea % 2 == 0 for ea in a_powers)
        # one (q + t) parity class per a-slice
        for ea in a_powers:
            parities = {(eq + et) % 2 for (sa, eq, et) in result.terms.terms if sa == ea}
            assert len(parities) == 1


def test_verify_properties_identity():
    flags = verify_properties(LaurentPolynomial.one(KNOT))
    assert flags.all_true


def test_matches_stored_fixture():
    for n, m in [(3, 7), (5, 6)]:
        want = (FIXTURES / f"{n}_{m}.json").read_text().strip()
        assert superpolynomial_to_json(compute(n, m)) == want


def test_json_round_trip():
    sp = compute(3, 4)
    back = superpolynomial_from_json(superpolynomial_to_json(sp))
    assert back.terms == sp.terms
    assert (back.n, back.m) == (sp.n, sp.m)
    payload = json.loads(superpolynomial_to_json(sp))
    assert payload["normalized"] is True
    assert payload["terms"] == sorted(payload["terms"])


def test_trefoil_specializations():
    trefoil = compute(2, 3)
    homfly = specialize(trefoil, "homfly")
    assert homfly == LaurentPolynomial(("a", "q"), {(0, 0): 1, (0, 4): 1, (2, 2): -1})
    jones = specialize(trefoil, "jones")
    assert jones == LaurentPolynomial(("q",), {(0,): 1, (4,): 1, (6,): -1})
    alexander = specialize(trefoil, "alexander")
    assert alexander == LaurentPolynomial(("q",), {(0,): 1, (2,): -1, (4,): 1})
    with pytest.raises(ValueError):
        specialize(trefoil, "kauffman")


def test_generating_function_two_strand_family():
    gf = generating_function(2, 1)
    assert set(gf.poles) == {(0, 0, 0), (0, 4, 2)}
    numerator = dict(gf.numerator)
    assert numerator[0] == LaurentPolynomial.one(KNOT)
    assert numerator[1] == knot({(2, 2, 3): 1})
    series = gf.series(3)
    for k in range(4):
        assert series[k] == compute(2, 2 * k + 1).terms


def test_generating_function_three_strand_poles():
    gf = generating_function(3, 1)
    assert set(gf.poles) == {(0, 0, 0), (0, 6, 4), (0, 12, 6)}
    assert set(generating_function(3, 2).poles) == {(0, 0, 0), (0, 6, 4), (0, 12, 6)}


@pytest.mark.parametrize("n,r", [(3, 2), (4, 1), (4, 3)])
def test_generating_function_series_matches_direct(n, r):
    gf = generating_function(n, r)
    series = gf.series(2)
    for k in range(3):
        assert series[k] == compute(n, n * k + r).terms


def test_generating_function_rejects_bad_families():
    with pytest.raises(ValueError):
        generating_function(4, 2)
    with pytest.raises(ValueError):
        generating_function(3, 0)
    with pytest.raises(ValueError):
        generating_function(3, 3)


def test_generating_function_json_round_trip():
    gf = generating_function(2, 1)
    back = generating_function_from_json(generating_function_to_json(gf))
    assert isinstance(back, GeneratingFunction)
    assert back.poles == gf.poles
    assert back.numerator == gf.numerator
    assert (back.n, back.r) == (2, 1)


def test_parallel_computation_is_deterministic():
    sequential = compute(3, 8)
    parallel = compute(3, 8, parallel=True)
    assert superpolynomial_to_json(sequential) == superpolynomial_to_json(parallel)


def test_scan_statuses():
    report = scan(3, 7)
    rows = {(row.n, row.m): row for row in report.rows}
    assert rows[(2, 4)].status == "nonpolynomial"
    assert rows[(2, 4)].gcd == 2
    assert rows[(2, 4)].term_count is None
    assert rows[(3, 7)].status == "ok"
    assert rows[(3, 7)].term_count == 30
    assert rows[(3, 7)].a_max == 4
    assert report.all_expected
    header = report.to_csv().splitlines()[0]
    assert header == "n,m,gcd,status,a_max,q_max,t_max,term_count,millis"


def test_scan_workers_agree_with_sequential():
    fields = lambda report: [
        (r.n, r.m, r.gcd, r.status, r.a_max, r.q_max, r.t_max, r.term_count)
        for r in report.rows
    ]
    assert fields(scan(3, 8, workers=3)) == fields(scan(3, 8))
