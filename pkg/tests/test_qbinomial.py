import itertools
import threading
from math import comb

import pytest
from hypothesis import given, strategies as st

from partition_lab.partitions import Partition, PartitionConstraint, conjugate, count_restricted
from partition_lab.qbinomial import (
    QPolynomial,
    SparsePoly,
    coefficient_witnesses,
    conjugate_witnesses_check,
    duality_check,
    grid_identity,
    grid_terms,
    interpretation_check,
    qbinom,
    rational_form_check,
    verify_finite_qbt,
    verify_infinite_qbt_truncated,
    verify_jacobi_truncated,
    verify_pascal,
)


def subset_oracle(n, k):
    """q^r coefficient of [n,k] = number of k-subsets of {0..n-1} with sum r + k(k-1)/2."""
    if k > n:
        return []
    base = k * (k - 1) // 2
    coeffs = [0] * (k * (n - k) + 1)
    for s in itertools.combinations(range(n), k):
        coeffs[sum(s) - base] += 1
    return coeffs


def test_qpolynomial_arithmetic():
    a = QPolynomial([1, 2, 0, 0])
    assert a.coeffs == (1, 2) and a.degree == 1
    b = QPolynomial([0, 1])
    assert (a + b).coeffs == (1, 3)
    assert (a * b).coeffs == (0, 1, 2)
    assert (a - a).coeffs == ()
    assert a.shift(3).coeffs == (0, 0, 0, 1, 2)
    assert a(2) == 5 and a.coeff(7) == 0
    assert str(QPolynomial([1, 1, 2])) == "1 + q + 2q^2"
    assert str(QPolynomial([1, -1])) == "1 - q"
    assert str(QPolynomial()) == "0"


def test_fixtures_4():
    assert qbinom(4, 2).coeffs == (1, 1, 2, 1, 1)
    assert [list(qbinom(4, k).coeffs) for k in range(5)] == [[1], [1, 1, 1, 1], [1, 1, 2, 1, 1], [1, 1, 1, 1], [1]]


def test_fixtures_6():
    expected = [
        [1],
        [1, 1, 1, 1, 1, 1],
        [1, 1, 2, 2, 3, 2, 2, 1, 1],
        [1, 1, 2, 3, 3, 3, 3, 2, 1, 1],
        [1, 1, 2, 2, 3, 2, 2, 1, 1],
        [1, 1, 1, 1, 1, 1],
        [1],
    ]
    assert [list(qbinom(6, k).coeffs) for k in range(7)] == expected


def test_qbinom_edge_cases():
    assert qbinom(3, 5).coeffs == ()
    for n in range(6):
        assert qbinom(n, 0).coeffs == (1,)
    with pytest.raises(ValueError):
        qbinom(-1, 0)


@pytest.mark.parametrize("n", range(0, 15))
def test_qbinom_matches_subset_oracle(n):
    for k in range(n + 1):
        assert list(qbinom(n, k).coeffs) == subset_oracle(n, k)


def test_structural_invariants():
    for n in range(21):
        for k in range(n + 1):
            g = qbinom(n, k)
            assert g.is_palindromic()
            assert g == qbinom(n, n - k)
            assert g(1) == comb(n, k)
            assert g.degree == k * (n - k)


def test_rational_form_cross_check():
    for n in range(13):
        for k in range(n + 1):
            assert rational_form_check(n, k)


def test_memo_is_consistent_under_threads():
    from partition_lab import qbinomial

    qbinomial._qbinom_memo.clear()
    results = []

    def work():
        results.append([qbinom(40, k) for k in range(41)])

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
    assert results[0][3] == QPolynomial(subset_oracle(40, 3))


def test_pascal():
    for n, k in [(2, 1), (6, 3), (10, 4)]:
        rep = verify_pascal(n, k)
        assert rep.ok and rep.details["first"] and rep.details["second"]
    for n in range(1, 16):
        for k in range(1, n + 1):
            rep = verify_pascal(n, k)
            assert rep.ok
            assert rep.details["exponent"] == (k if k < n else None)
    with pytest.raises(ValueError):
        verify_pascal(3, 0)


def test_finite_qbt():
    rep = verify_finite_qbt(1)
    assert rep.ok
    for n in range(13):
        assert verify_finite_qbt(n).ok
    with pytest.raises(ValueError):
        verify_finite_qbt(31)


def test_finite_qbt_hand_expansion_n2():
    # (1 + t)(1 + q t) = 1 + t + q t + q t^2
    lhs = SparsePoly.one(2).mul(SparsePoly({(0, 0): 1, (0, 1): 1})).mul(SparsePoly({(0, 0): 1, (1, 1): 1}))
    assert lhs.terms == {(0, 0): 1, (0, 1): 1, (1, 1): 1, (1, 2): 1}


def test_infinite_qbt():
    rep = verify_infinite_qbt_truncated(8, 8, 8)
    assert rep.ok and rep.details["q_max"] == 8 and rep.details["t_max"] == 8
    assert verify_infinite_qbt_truncated(1, 1, 1).ok
    clipped = verify_infinite_qbt_truncated(3, 10, 2)
    assert clipped.ok and clipped.details["clipped"]
    assert clipped.details["q_max"] == 3 and clipped.details["t_max"] == 2
    with pytest.raises(ValueError):
        verify_infinite_qbt_truncated(0, 1, 1)


def test_infinite_qbt_product_must_start_at_zero():
    # with only the factors j >= 1 every t-monomial carries q^j, j >= 1, so the
    # t q^0 coefficient (1 - a on the sum side) cannot match
    keep = lambda e: e[0] <= 3 and e[1] <= 1
    prod = SparsePoly.one(3)
    for j in range(1, 4):
        prod = prod.mul(SparsePoly({(0, 0, 0): 1, (j, 1, 1): -1}), keep)
        prod = prod.mul(SparsePoly({(0, 0, 0): 1, (j, 1, 0): 1}), keep)
    assert not any(e[1] == 1 and e[0] == 0 for e in prod.terms)
    assert verify_infinite_qbt_truncated(3, 3, 1).ok


def test_jacobi():
    assert verify_jacobi_truncated(5, 10).ok
    assert verify_jacobi_truncated(1, 2).ok
    with pytest.raises(ValueError, match="2J"):
        verify_jacobi_truncated(3, 7)


def test_jacobi_hand_expansion():
    # (1 + q z)(1 + q/z)(1 - q^2) through q^2: 1 + q z + q z^-1 + q^2 - q^2
    prod = SparsePoly.one(2)
    for f in ({(0, 0): 1, (1, 1): 1}, {(0, 0): 1, (1, -1): 1}, {(0, 0): 1, (2, 0): -1}):
        prod = prod.mul(SparsePoly(f), lambda e: e[0] <= 2)
    assert prod.terms == {(0, 0): 1, (1, 1): 1, (1, -1): 1}


def test_sparse_first_difference():
    a = SparsePoly({(0, 0): 1, (1, 2): 3})
    b = SparsePoly({(0, 0): 1, (1, 2): 4})
    assert a.first_difference(b) == ((1, 2), 3, 4)
    assert a.first_difference(a) is None


def test_interpretation_examples():
    rep = interpretation_check(3, 3, 3, witnesses=True)
    assert rep.ok and rep.coefficient == 3
    assert {p.to_digits() for p in rep.new_witnesses} == {"1144", "1234", "2224"}
    rep = interpretation_check(2, 4, 4, witnesses=True)
    assert rep.ok and rep.coefficient == 3
    # the printed [6 2] witnesses are the conjugates of the (3 parts, largest 5) witnesses
    assert {conjugate(p).to_digits() for p in rep.new_witnesses} == {"11333", "12233", "22223"}
    assert {p.to_digits() for p in coefficient_witnesses(6, 2, 4)} == {"11333", "12233", "22223"}
    assert {p.to_digits() for p in coefficient_witnesses(6, 3, 3)} == {"1144", "1234", "2224"}
    rep = interpretation_check(3, 2, 7)
    assert rep.coefficient == rep.new_count == rep.classical_count == 0
    with pytest.raises(ValueError):
        interpretation_check(8, 7, 0)


def test_interpretations_exhaustive():
    for total in range(13):
        for n in range(total + 1):
            m = total - n
            for r in range(n * m + 3):
                rep = interpretation_check(n, m, r)
                assert rep.ok, (n, m, r)


def test_published_witness_table():
    table = {
        0: ["1111111"],
        1: ["111112", "111122", "111222", "112222", "122222", "222222"],
        2: ["11113", "11123", "11133 11223", "11233 12223", "11333 12233 22223", "12333 22233",
            "13333 22333", "23333", "33333"],
        3: ["1114", "1124", "1134 1224", "1144 1234 2224", "1244 1334 2234", "1344 2244 2334",
            "1444 2344 3334", "2444 3344", "3444", "4444"],
        4: ["115", "125", "135 225", "145 235", "155 245 335", "255 345", "355 445", "455", "555"],
        5: ["16", "26", "36", "46", "56", "66"],
        6: ["7"],
    }
    for k, cells in table.items():
        for r, cell in enumerate(cells):
            assert {p.to_digits() for p in coefficient_witnesses(6, k, r)} == set(cell.split()), (k, r)
        assert coefficient_witnesses(6, k, len(cells)) == []


def test_conjugate_witness_sets():
    for n in range(1, 11):
        for k in range(n + 1):
            for r in range(k * (n - k) + 1):
                assert conjugate_witnesses_check(n, k, r)


def test_grid_identity():
    assert grid_identity(4).details["grid_sum"] == 5
    assert grid_identity(7).details["grid_sum"] == 15
    assert grid_terms(1) == [(1, 1, 1)]
    for N in range(1, 41):
        assert grid_identity(N).ok
    with pytest.raises(ValueError):
        grid_identity(61)


def test_grid_terms_are_signature_counts():
    for N in range(1, 16):
        for a, b, c in grid_terms(N):
            assert c == count_restricted(N, PartitionConstraint.exact(a, b))


def test_duality():
    rep = duality_check(10, 4, 4)
    assert rep.ok and rep.details["left"] == 3 and rep.details["bijection"]
    assert duality_check(9, 1, 9).details == {"left": 1, "right": 1, "bijection": True}
    rep = duality_check(13, 4, 4)
    assert rep.ok
    rep = duality_check(50, 7, 9)
    assert rep.ok and "bijection" not in rep.details
    with pytest.raises(ValueError):
        duality_check(61, 1, 1)


@given(st.integers(1, 30), st.integers(1, 30), st.integers(1, 30))
def test_duality_property(N, a, b):
    assert duality_check(N, a, b, enumerate_cap=24).ok


def test_witness_table_center_symmetry():
    # [6 2] and [6 4] witnesses at equal r are conjugate
    for r in range(9):
        left = {conjugate(p) for p in coefficient_witnesses(6, 2, r)}
        assert left == set(coefficient_witnesses(6, 4, r))
    assert conjugate(Partition.parse("2224")) == Partition.parse("1144")
