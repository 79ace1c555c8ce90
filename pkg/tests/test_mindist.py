"""Minimum distance search tests: exhaustive, information-set, backends."""

import random

import numpy as np
import pytest

from toricode.codes import build_code, evaluate
from toricode.gf import make_field
from toricode.kernels import available_backends
from toricode.mindist import (
    max_zeroes,
    min_distance,
    min_distance_exhaustive,
    min_distance_isd,
)
from toricode.polytopes import (
    box,
    dilate,
    from_vertices,
    product,
    pyramid,
    standard_simplex,
)

TRIANGLE = [(1, 0), (0, 3), (3, 1)]
EX4_VERTICES = [(0, 3, 0), (1, 0, 0), (3, 1, 0), (1, 1, 2), (2, 3, 3)]

BACKENDS = available_backends()


def triangle_code(field):
    return build_code(from_vertices(2, TRIANGLE), field)


# ---------------------------------------------------------------------------
# golden examples
# ---------------------------------------------------------------------------

def test_triangle_gf5_distance_eight():
    r = min_distance_exhaustive(triangle_code(make_field(5)))
    assert (r.d, r.z_p, r.exact) == (8, 8, True)
    assert evaluate(triangle_code(make_field(5)), r.witness).weight == 8


def test_triangle_gf8_distance_28():
    code = triangle_code(make_field(2, 3))
    r = min_distance_exhaustive(code)
    assert (r.d, r.exact) == (28, True)
    assert max_zeroes(code) == 21


def test_origin_code_distance_is_block_length():
    code = build_code(from_vertices(1, [(0,)]), make_field(5))
    r = min_distance_exhaustive(code)
    assert r.d == 4 == code.block_length


def test_prism_isd_24():
    code = build_code(product(from_vertices(2, TRIANGLE), box([1])), make_field(5))
    r = min_distance_isd(code)
    assert (r.d, r.exact) == (24, True)


def test_pyramid_isd_32():
    code = build_code(pyramid(from_vertices(2, TRIANGLE)), make_field(5))
    r = min_distance_isd(code)
    assert (r.d, r.exact) == (32, True)


def test_ex4_isd_31():
    code = build_code(from_vertices(3, EX4_VERTICES), make_field(5))
    r = min_distance_isd(code)
    assert (r.d, r.exact) == (31, True)
    assert evaluate(code, r.witness).weight == 31


# ---------------------------------------------------------------------------
# method agreement and witness contracts
# ---------------------------------------------------------------------------

def small_code_instances():
    cases = []
    for p, m in [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3)]:
        field = make_field(p, m)
        q = field.q
        polys = [
            from_vertices(1, [(0,), (min(2, q - 2),)]) if q > 3 else box([1]),
            box([1, 1]) if q >= 3 else None,
            dilate(standard_simplex(2), 2) if q >= 5 else None,
            from_vertices(2, TRIANGLE) if q >= 5 else None,
        ]
        for poly in polys:
            if poly is None or not poly.fits_in_cube(q):
                continue
            if poly.dim > 1 and q > 7:
                continue  # keep the exhaustive reference cheap
            cases.append((field, poly))
    return cases


@pytest.mark.parametrize("field,poly", small_code_instances())
def test_exhaustive_and_isd_agree(field, poly):
    code = build_code(poly, field)
    r_ex = min_distance_exhaustive(code)
    r_isd = min_distance_isd(code)
    assert r_ex.exact and r_isd.exact
    assert r_ex.d == r_isd.d
    assert evaluate(code, r_ex.witness).weight == r_ex.d
    assert evaluate(code, r_isd.witness).weight == r_isd.d


def test_witness_is_first_in_enumeration_order():
    # reference scan in plain python over the documented message order
    field = make_field(3)
    code = build_code(box([1, 1]), field)
    q, k = field.q, code.k
    best = None
    order = []
    for lead in range(k):
        for tail in range(q ** (k - 1 - lead)):
            msg = [0] * k
            msg[lead] = 1
            t = tail
            for pos in range(k - 1, lead, -1):
                msg[pos] = t % q
                t //= q
            order.append(list(msg))
    for idx, msg in enumerate(order):
        w = evaluate(code, msg).weight
        if best is None or w < best[0]:
            best = (w, idx, msg)
    r = min_distance_exhaustive(code)
    assert r.d == best[0]
    assert list(r.witness) == best[2]


def test_singleton_bound_holds():
    for field, poly in small_code_instances():
        code = build_code(poly, field)
        r = min_distance(code)
        assert code.k + r.d <= code.block_length + 1


def test_distance_antitone_under_dilation():
    # L(P) grows with P, so d cannot increase along nested dilates
    field = make_field(7)
    prev = None
    for k in range(0, 4):
        code = build_code(dilate(standard_simplex(2), k), field)
        d = min_distance(code).d
        if prev is not None:
            assert d <= prev
        prev = d


# ---------------------------------------------------------------------------
# budget handling
# ---------------------------------------------------------------------------

def test_exhaustive_budget_prefix_is_nonexact_upper_bound():
    code = triangle_code(make_field(5))
    full = min_distance_exhaustive(code)
    capped = min_distance_exhaustive(code, budget=code.block_length * 50)
    assert not capped.exact
    assert capped.work_count == 50
    assert capped.lower == 1
    assert capped.upper >= full.d
    assert evaluate(code, capped.witness).weight == capped.d


def test_exhaustive_budget_too_small():
    code = triangle_code(make_field(5))
    with pytest.raises(ValueError, match="budget"):
        min_distance_exhaustive(code, budget=3)


def test_isd_budget_interval():
    code = build_code(product(from_vertices(2, TRIANGLE), box([1])), make_field(5))
    r = min_distance_isd(code, budget=5000 * code.block_length)
    if not r.exact:
        assert 1 <= r.lower <= r.upper
        assert evaluate(code, r.witness).weight == r.upper
    full = min_distance_isd(code)
    assert full.exact and full.d == 24
    assert r.upper >= full.d >= r.lower


def test_auto_method_dispatch():
    small = triangle_code(make_field(5))
    assert min_distance(small, method="auto").method == "exhaustive"
    big = build_code(from_vertices(3, EX4_VERTICES), make_field(5))
    assert min_distance(big, method="auto").method == "isd"
    with pytest.raises(ValueError):
        min_distance(small, method="nonsense")


def test_rejects_rank_deficient_code():
    field = make_field(3)
    seg = from_vertices(1, [(0,), (2,)])
    code = build_code(seg, field, allow_outside_cube=True)
    with pytest.raises(ValueError, match="full-rank"):
        min_distance_exhaustive(code)


# ---------------------------------------------------------------------------
# backend equivalence
# ---------------------------------------------------------------------------

@pytest.mark.skipif(len(BACKENDS) < 2, reason="numba not available")
def test_backends_agree_exhaustive():
    for field, poly in small_code_instances()[:6]:
        code = build_code(poly, field)
        r_nb = min_distance_exhaustive(code, backend="numba")
        r_np = min_distance_exhaustive(code, backend="numpy")
        assert r_nb.d == r_np.d
        assert np.array_equal(r_nb.witness, r_np.witness)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="numba not available")
def test_backends_agree_isd():
    code = build_code(pyramid(from_vertices(2, TRIANGLE)), make_field(5))
    r_nb = min_distance_isd(code, backend="numba")
    r_np = min_distance_isd(code, backend="numpy")
    assert r_nb.d == r_np.d == 32
    assert np.array_equal(r_nb.witness, r_np.witness)
    assert r_nb.work_count == r_np.work_count


@pytest.mark.skipif(len(BACKENDS) < 2, reason="numba not available")
def test_thread_count_does_not_change_result():
    code = build_code(product(from_vertices(2, TRIANGLE), box([1])), make_field(5))
    r1 = min_distance_isd(code, threads=1)
    r2 = min_distance_isd(code, threads=2)
    assert r1.d == r2.d
    assert np.array_equal(r1.witness, r2.witness)


# ---------------------------------------------------------------------------
# randomized cross-check against direct evaluation
# ---------------------------------------------------------------------------

def test_random_codes_match_direct_minimum():
    rng = random.Random(101)
    for _ in range(6):
        q = rng.choice([3, 4, 5])
        field = make_field(2, 2) if q == 4 else make_field(q)
        pts = [
            tuple(rng.randrange(0, q - 1) for _ in range(2))
            for _ in range(rng.randrange(2, 5))
        ]
        poly = from_vertices(2, pts)
        code = build_code(poly, field)
        if code.k > 6:
            continue
        # direct reference: evaluate every normalized message
        ref = None
        for lead in range(code.k):
            for tail in range(q ** (code.k - 1 - lead)):
                msg = [0] * code.k
                msg[lead] = 1
                t = tail
                for pos in range(code.k - 1, lead, -1):
                    msg[pos] = t % q
                    t //= q
                w = evaluate(code, msg).weight
                ref = w if ref is None else min(ref, w)
        assert min_distance_exhaustive(code).d == ref
        assert min_distance_isd(code).d == ref
