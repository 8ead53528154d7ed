"""Singular ray search and node classification."""

import pytest

from gsvkit.cyclo import CyclotomicField
from gsvkit.errors import GsvInputError
from gsvkit.linalg import matrix_rank
from gsvkit.poly import parse_polynomial
from gsvkit.singular import (AnsatzRoots, FloatHomotopy, Kind, UserList,
                             ansatz_candidates, classify_singularity,
                             find_singular_rays, normalize_ray, verify_transversal)

K5 = CyclotomicField(5)

FERMAT = parse_polynomial("s0^5+s1^5+s2^5+s3^5+s4^5", K5)
DWORK = parse_polynomial("s0^5+s1^5+s2^5+s3^5+s4^5-5*s0*s1*s2*s3*s4", K5)
CONE_FERMAT = parse_polynomial("s0^5+s1^5+s2^5+s3^5", K5)  # s4 absent
ONE_NODE = parse_polynomial(
    "s4^3*s0^2+s4^3*s1^2+s4^3*s2^2+s4^3*s3^2+s0^5+s1^5+s2^5+s3^5", K5)


def test_fermat_is_transversal():
    report = verify_transversal(FERMAT, AnsatzRoots())
    assert report.transversal is True
    assert report.complete and report.isolated
    assert report.rays == ()


def test_ansatz_candidate_count():
    # normalized grid: sum over lead position of (order+1)^(4-lead)
    assert sum(1 for _ in ansatz_candidates(K5)) == 6 ** 4 + 6 ** 3 + 6 ** 2 + 6 + 1


def test_cone_over_fermat_quartic_surface():
    report = verify_transversal(CONE_FERMAT, AnsatzRoots())
    assert report.transversal is False
    assert [r.coords_text() for r in report.rays] == [("0", "0", "0", "0", "1")]
    ray = report.rays[0]
    assert ray.classification.kind is Kind.NON_NODE
    assert ray.classification.corank == 4
    assert not report.isolated


def test_single_node_polynomial():
    rays = find_singular_rays(ONE_NODE, AnsatzRoots())
    assert len(rays) == 1
    assert rays[0].coords_text() == ("0", "0", "0", "0", "1")
    assert rays[0].classification.kind is Kind.NODE


def test_single_node_hessian_oracle():
    # chart s4 = 1: quadratic part s0^2 + .. + s3^2, so the chart Hessian at
    # the origin is 2*I, rank 4 by independent elimination
    hess = ONE_NODE.hessian()
    pt = [K5.zero] * 4 + [K5.one]
    rows = [[hess[i][j].evaluate(pt) for j in range(4)] for i in range(4)]
    assert rows == [[K5.element(2 if i == j else 0) for j in range(4)] for i in range(4)]
    assert matrix_rank(rows) == 4


def test_classify_rejects_origin_and_smooth_points():
    with pytest.raises(GsvInputError):
        classify_singularity(DWORK, [K5.zero] * 5)
    with pytest.raises(GsvInputError, match="not a singular ray"):
        classify_singularity(DWORK, [K5.one, K5.zero, K5.zero, K5.zero, K5.zero])


def test_classification_is_scaling_invariant():
    z = K5.zeta()
    scaled = [z ** 2 * K5.element(3) for _ in range(5)]
    cls = classify_singularity(DWORK, scaled)
    assert cls.kind is Kind.NODE


def test_dwork_ray_structure():
    rays = find_singular_rays(DWORK, AnsatzRoots())
    assert len(rays) == 125
    # every ray is normalized, exactly singular, and G vanishes on it
    gradient = DWORK.gradient()
    for ray in rays:
        pt = ray.representative
        assert pt[0] == K5.one
        assert all(g.evaluate(pt).is_zero() for g in gradient)
        assert DWORK.evaluate(pt).is_zero()
        assert ray.classification.kind is Kind.NODE


def test_dwork_exponent_oracle():
    # independent count: rays (1, z^a, z^b, z^c, z^d) satisfy the hand-written
    # gradient equations exactly when a+b+c+d = 0 mod 5, giving 5^3 solutions
    count = 0
    for a in range(5):
        for b in range(5):
            for c in range(5):
                d = (-(a + b + c)) % 5
                count += 1
                z = K5.zeta()
                pt = [K5.one, z ** a, z ** b, z ** c, z ** d]
                exps = [0, a, b, c, d]
                for i in range(5):
                    # 5 s_i^4 - 5 prod_{j != i} s_j = 0 in exponent form
                    lhs = (4 * exps[i]) % 5
                    rhs = sum(e for j, e in enumerate(exps) if j != i) % 5
                    assert lhs == rhs
                assert all(g.evaluate(pt).is_zero() for g in DWORK.gradient())
    assert count == 125


def test_find_rays_deterministic():
    first = find_singular_rays(DWORK, AnsatzRoots())
    second = find_singular_rays(DWORK, AnsatzRoots())
    assert first == second


def test_user_list_source():
    z = K5.zeta()
    points = (
        tuple([K5.one] * 5),                      # exponent sum 0 mod 5: singular
        (K5.one, z, z, z, z ** 2),                # exponent sum 5 = 0 mod 5: singular
        (K5.one, K5.one, K5.one, K5.one, z),      # exponent sum 1: not singular
        tuple([K5.zero] * 5),                     # origin: excised, not a ray
    )
    rays = find_singular_rays(DWORK, UserList(points))
    assert len(rays) == 2
    report = verify_transversal(DWORK, UserList(points))
    assert report.transversal is False and report.complete


def test_user_list_exhaustive_certifies_transversality():
    not_singular = ((K5.one,) * 5,)
    open_report = verify_transversal(FERMAT, UserList(not_singular))
    # the certificate still fires for a diagonal quintic
    assert open_report.transversal is True
    mixed = parse_polynomial("s0^5+s1^5+s2^5+s3^5+s4^5+s0^2*s1^3", K5)
    report = verify_transversal(mixed, UserList(not_singular))
    assert report.transversal is None and not report.complete
    report = verify_transversal(mixed, UserList(not_singular, exhaustive=True))
    assert report.transversal is True and report.complete


def test_inconclusive_search_is_flagged():
    mixed = parse_polynomial("s0^5+s1^5+s2^5+s3^5+s4^5+s0^2*s1^3", K5)
    report = verify_transversal(mixed, AnsatzRoots())
    assert report.transversal is None
    assert not report.complete
    assert report.rays == ()


def test_parallel_scan_matches_serial():
    serial = find_singular_rays(DWORK, AnsatzRoots(), jobs=1)
    parallel = find_singular_rays(DWORK, AnsatzRoots(), jobs=2)
    assert serial == parallel


def test_rejects_non_quintic_input():
    with pytest.raises(GsvInputError):
        verify_transversal(parse_polynomial("s0^4+s1^4+s2^4+s3^4+s4^4", K5),
                           AnsatzRoots())


def test_normalize_ray():
    z = K5.zeta()
    ray = normalize_ray([K5.zero, z ** 3, K5.one])
    assert ray[0].is_zero() and ray[1] == K5.one and ray[2] == z ** -3


def test_float_homotopy_certifies_grid_solutions():
    rays = find_singular_rays(ONE_NODE, FloatHomotopy(starts=150, seed=11))
    certified = [r for r in rays if r.classification.kind is not Kind.UNCLASSIFIED]
    assert any(r.coords_text() == ("0", "0", "0", "0", "1") for r in certified)
    report = verify_transversal(ONE_NODE, FloatHomotopy(starts=150, seed=11))
    assert not report.complete  # numeric searches are never certified complete


def test_float_homotopy_on_dwork():
    # best effort: a decent fraction of the 125 nodes, every certified hit a
    # true node appearing in the exact search
    rays = find_singular_rays(DWORK, FloatHomotopy(starts=250, seed=3))
    certified = [r for r in rays if r.classification.kind is not Kind.UNCLASSIFIED]
    assert len(certified) >= 50
    assert all(r.classification.kind is Kind.NODE for r in certified)
    exact = {r.coords_text() for r in find_singular_rays(DWORK, AnsatzRoots())}
    assert {r.coords_text() for r in certified} <= exact
