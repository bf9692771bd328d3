import pytest

import qeuler


def q_poly(coeffs):
    return qeuler.q_poly(coeffs)


def test_first_euler_numbers():
    assert qeuler.tangent_closed(1) == q_poly([1, 1])
    assert qeuler.tangent_closed(2) == q_poly([2, 5, 5, 3, 1])
    assert qeuler.secant_closed(2) == q_poly([2, 2, 1])
    assert qeuler.poly_to_string(qeuler.tangent_closed(2)) == "2 + 5q + 5q^2 + 3q^3 + q^4"


def test_routes_agree():
    for n in range(6):
        assert qeuler.gen_A(n) == qeuler.a_n_closed(n) == qeuler.laguerre_sum(n) == qeuler.ansatz_A(n)
        assert qeuler.gen_B(n) == qeuler.b_n_closed(n) == qeuler.ansatz_B(n) == qeuler.gen_dt(n)
    for n in range(5):
        assert qeuler.parity_independent_e(n) == qeuler.gen_alternating_312(n)


def zigzag(n):
    # Seidel's boustrophedon triangle.
    row = [1]
    for _ in range(n):
        nxt = [0]
        for x in reversed(row):
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]


def test_euler_numbers_at_one_are_exact_big_ints():
    for n in range(12):
        assert qeuler.evaluate(qeuler.secant_closed(n)) == zigzag(2 * n)
    value = qeuler.evaluate(qeuler.tangent_closed(20))
    assert value == zigzag(41)
    assert value > 2 ** 64


def test_statistics_and_bijection():
    s = qeuler.statistics([4, 3, 7, 1, 2, 6, 5])
    assert (s["cr"], s["wex"], s["asc"], s["p312"]) == (3, 4, 4, 3)
    assert qeuler.fv_map([4, 3, 7, 1, 2, 6, 5]) == (
        "U[+1,1,0] F[+1,1,1] U[+1,1,0] D[+1,0,0] U[+1,1,1] D[+1,0,1] D[+1,0,0]"
    )
    assert qeuler.tilde([2, 3, 1]) == [3, 4, 2, 1]


def test_json_round_trip():
    p = [(123456789012345678901234567890, 2, -3), (1, 1, 0)]
    text = qeuler.poly_to_json(p)
    assert qeuler.poly_from_json(text) == qeuler.poly_normalize(p)


def test_errors():
    with pytest.raises(qeuler.BudgetExceeded):
        qeuler.gen_A(11)
    with pytest.raises(qeuler.QeulerError):
        qeuler.gen_A(11)
    with pytest.raises(ValueError):
        qeuler.statistics([1, 1])


def test_verify_suite():
    passed, report = qeuler.run_suite("th2", n_max=4)
    assert passed
    assert "status pass" in report
    with pytest.raises(ValueError):
        qeuler.run_suite("nope")
