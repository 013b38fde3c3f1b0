"""Smoke test for the hexcover extension module.

Build and run from the repository root:

    cargo build -p hexcover-py --features extension-module
    cp target/debug/libhexcover.so python/hexcover.so
    python3 python/smoke_test.py
"""

import math

import hexcover

SQUARE = [(0.0, 0.0), (10.0, 0.0), (10.0, 10.0), (0.0, 10.0)]
L_SHAPE = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]


def main():
    b = hexcover.bounds(SQUARE, theta=0.0)
    assert b.toth_upper == 54, b
    assert b.improved_upper == 53, b
    assert abs(b.lower_explicit - 30.533) < 1e-3, b
    assert abs(hexcover.RATIO_BOUND - 2.4703) < 1e-4
    assert hexcover.toth_upper(0.0, 0.0) == 1

    theta, f_min = hexcover.minimize_f(SQUARE)
    assert abs(hexcover.objective_f(SQUARE, theta) - f_min) < 1e-9
    assert 0.0 <= theta < math.pi / 3

    fixed = hexcover.cover(SQUARE)
    assert 31 <= fixed.count <= 53, fixed
    assert len(fixed.centers) == fixed.count == len(fixed)
    report = hexcover.verify(SQUARE, fixed)
    assert report.valid and report.cells_checked == fixed.count, report

    unit = hexcover.cover([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert unit.count == 1

    shape = hexcover.cover(L_SHAPE, algorithm="nonconvex")
    assert hexcover.verify(L_SHAPE, shape)

    try:
        hexcover.cover(L_SHAPE, algorithm="fixed")
    except ValueError as e:
        assert "convex" in str(e)
    else:
        raise AssertionError("non-convex input accepted by the fixed algorithm")

    try:
        hexcover.cover(SQUARE, algorithm="combined", budget=10)
    except hexcover.BudgetExceededError:
        pass
    else:
        raise AssertionError("budget not enforced")

    assert hexcover.lattice_point(1, 0) == (math.sqrt(3), 0.0)
    print("ok:", fixed, shape)


if __name__ == "__main__":
    main()
