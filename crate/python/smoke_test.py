"""Smoke test for the pygroupdet extension.

Build and install first:
    pip install maturin
    pip install -e crates/py --no-build-isolation
"""

import pygroupdet as g


def det_sign_check():
    # Z3 circulant: a^3 + b^3 + c^3 - 3abc.
    for a, b, c in [(1, 1, -1), (2, 0, 1), (-3, 1, 4)]:
        want = a**3 + b**3 + c**3 - 3 * a * b * c
        assert g.determinant("Z3", [a, b, c]) == want, (a, b, c)


def main():
    assert g.determinant("Q8", [2, 1, 1, 1, 1, 1, 1, 1]) == 9
    assert g.determinant("A4", [1, 1, -1] + [0] * 9) == -27
    det_sign_check()

    cert = g.member("Q8", 45)
    assert cert["verdict"] and cert["params"]["p"] == "3"
    assert not g.member("Z12", 15)["verdict"]

    w = g.witness("Z2^3", 17)
    assert w["value"] == "17"
    assert g.determinant("Z2^3", [int(c) for c in w["coeffs"]]) == 17
    try:
        g.witness("Q8", 7)
    except g.NotInSet:
        pass
    else:
        raise AssertionError("7 is not in S(Q8)")

    big = 2**64 * 3**3
    assert g.determinant("Z1", [big]) == big
    assert g.member("Z12", -big)["verdict"]

    assert g.lambda_value("Z6xZ2") == 11
    assert g.set_window("Z3xZ3", 20) == [-19, -17, -10, -8, -1, 0, 1, 8, 10, 17, 19]
    report = g.verify("Z2^3", 1, 100)
    assert not report["soundness_violations"] and not report["completeness_misses"]
    assert ("A4", 12) in g.groups()
    try:
        g.determinant("Z15", [1] * 15)
    except ValueError:
        pass
    else:
        raise AssertionError("Z15 is unsupported")
    print("smoke test passed")


if __name__ == "__main__":
    main()
