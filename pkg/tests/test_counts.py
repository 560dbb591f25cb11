import random

import pytest

from twoweight.codes import predict_wd
from twoweight.counts import (
    CaseData,
    CaseError,
    CountQuery,
    count_A,
    count_bruteforce,
    count_closed_form,
    weight_frequencies_from_counts,
)
from twoweight.defining_sets import Kind, build_d_lambda
from twoweight.gf import build_field


def queries(p, star_ok=True):
    for lam in range(p):
        for lam1 in range(p):
            yield lam, lam1, False
            if lam == 0 and star_ok:
                yield lam, lam1, True


def test_example_a_zero(f9):
    q = CountQuery(0, 0, 0, 1)
    assert count_bruteforce(f9, 2, q) == 6
    assert count_closed_form(3, 2, 0, 0, CaseData.of(f9, 0, 1)) == 6


def test_closed_form_examples():
    assert count_closed_form(3, 2, 0, 0, CaseData(False, False, 0)) == 12
    assert count_closed_form(3, 2, 0, 0, CaseData(False, True, 0), star=True) == 4
    # lam, lam1 != 0 and Tr(ab) != 0: eta(lam1^2 - 4 lam t)
    # p = 3: 1 - 4 = 0 gives eta = 0; 1 - 8 = 2 is a non-square
    assert count_closed_form(3, 2, 1, 1, CaseData(False, False, 1)) == 9
    assert count_closed_form(3, 2, 1, 1, CaseData(False, False, 2)) == 9 - 3


def test_star_is_unstarred_minus_y_zero_fiber(f9):
    for a, b in [(0, 1), (1, 0), (2, 5), (4, 4)]:
        for lam1 in range(3):
            full = count_bruteforce(f9, 2, CountQuery(0, lam1, a, b))
            star = count_bruteforce(f9, 2, CountQuery(0, lam1, a, b, star=True))
            fiber = sum(1 for x in range(1, 9) if f9.trace(f9.mul(b, x)) == lam1)
            assert full - star == fiber


def test_lam1_partition(f9):
    size = len(build_d_lambda(f9, 2, 1))
    for a, b in [(0, 1), (3, 0), (5, 7)]:
        assert sum(count_bruteforce(f9, 2, CountQuery(1, l1, a, b)) for l1 in range(3)) == size


@pytest.mark.parametrize("p,m,d", [(3, 2, 2), (3, 2, 1), (5, 2, 4), (5, 2, 3)])
def test_exhaustive_agreement(p, m, d):
    f = build_field(p, m)
    for a in range(f.q):
        for b in range(f.q):
            if a == 0 and b == 0:
                continue
            case = CaseData.of(f, a, b)
            for lam, lam1, star in queries(p):
                brute = count_bruteforce(f, d, CountQuery(lam, lam1, a, b, star))
                assert brute == count_closed_form(p, m, lam, lam1, case, star), (a, b, lam, lam1, star)


def test_sampled_agreement_f27():
    f = build_field(3, 3)
    rng = random.Random(20240601)
    pairs = set()
    while len(pairs) < 200:
        pairs.add((rng.randrange(f.q), rng.randrange(f.q)))
    pairs.discard((0, 0))
    for a, b in sorted(pairs):
        case = CaseData.of(f, a, b)
        for lam, lam1, star in queries(3):
            assert count_bruteforce(f, 2, CountQuery(lam, lam1, a, b, star)) == count_closed_form(3, 3, lam, lam1, case, star)


def test_undefined_cases_raise():
    with pytest.raises(CaseError):
        count_closed_form(3, 2, 0, 0, CaseData(True, True, 0))
    with pytest.raises(CaseError):
        count_closed_form(3, 2, 0, 0, CaseData(True, False, 1))
    with pytest.raises(CaseError):
        count_closed_form(3, 2, 1, 0, CaseData(False, False, 0), star=True)


@pytest.mark.parametrize("p,m,expected", [(3, 2, 24), (5, 2, 120), (3, 3, 234)])
def test_count_A(p, m, expected):
    f = build_field(p, m)
    total = 0
    for t in range(p):
        scan, closed = count_A(f, t)
        assert scan == closed == expected
        total += scan
    assert total == f.q * (f.q - 1)


@pytest.mark.parametrize("p,m", [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2)])
def test_tables_from_counts(p, m):
    assert weight_frequencies_from_counts(p, m, 0) == predict_wd(Kind.D0, p, m).counts
    assert weight_frequencies_from_counts(p, m, 0, star=True) == predict_wd(Kind.DSTAR, p, m).counts
    for lam in range(1, p):
        assert weight_frequencies_from_counts(p, m, lam) == predict_wd(Kind.DLAMBDA, p, m, lam).counts
