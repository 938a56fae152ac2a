from concurrent.futures import ThreadPoolExecutor

import pytest

from constants import NAKAYAMA_SEARCH_BUDGET, Routes
from errors import InvalidInputError, VerificationError
from models.serial import NakayamaAlgebra, NakayamaEnumeration, SerialModule
from services.nakayama import (
    SymmetricNakayama,
    classification_predicate,
    classify_numeric,
    condition_b,
    divides2n_check,
    newconditionb,
    numeric_grid,
    symmetric_nakayama,
)
from services.nakayama_oracle import MatrixOracle


def test_algebra_shape():
    algebra = NakayamaAlgebra(2, 3)
    assert algebra.loewy_length == 7
    assert len(algebra.non_projectives()) == 2 * 3 * 3
    assert algebra.composition_factors(SerialModule(2, 4)) == (2, 0, 1, 2)
    with pytest.raises(InvalidInputError):
        NakayamaAlgebra(0, 3)
    with pytest.raises(InvalidInputError):
        algebra.module(0, 8)


def test_syzygies():
    engine = symmetric_nakayama(1, 4)
    m = SerialModule(1, 2)
    assert engine.syzygy(m) == SerialModule(3, 3)
    assert engine.cosyzygy(engine.syzygy(m)) == m
    assert engine.syzygy(engine.syzygy(m)) == SerialModule(2, 2)
    assert engine.syzygy_power(m, -2) == SerialModule(0, 2)
    assert engine.syzygy_power(m, 2 * 4) == m
    with pytest.raises(InvalidInputError):
        engine.syzygy(SerialModule(0, 5))


def test_hom_counts():
    engine = symmetric_nakayama(1, 3)
    # projective cover P_0 -> M(0, 2) and the inclusion M(1, 1) -> M(0, 2)
    assert engine.hom_dim(SerialModule(0, 4), SerialModule(0, 2)) == 1
    assert engine.hom_dim(SerialModule(1, 1), SerialModule(0, 2)) == 1
    assert engine.hom_dim(SerialModule(0, 1), SerialModule(0, 2)) == 0
    assert engine.stable_hom_dim(SerialModule(0, 4), SerialModule(0, 2)) == 0
    assert engine.hom_dim(SerialModule(0, 4), SerialModule(0, 4)) == 2


def assert_oracle_matches_counting(a, n, top_zero_sources=False):
    engine = symmetric_nakayama(a, n)
    oracle = MatrixOracle(engine.algebra)
    modules = engine.algebra.indecomposables()
    # rotating tops is an algebra automorphism, so top-0 sources reach every pair up to rotation
    sources = [m for m in modules if m.top == 0] if top_zero_sources else modules
    for m in sources:
        for other in modules:
            assert oracle.hom_dim(m, other) == engine.hom_dim(m, other), (m, other)
            assert oracle.stable_hom_dim(m, other) == engine.stable_hom_dim(m, other), (m, other)


@pytest.mark.parametrize("a, n", [(1, 1), (1, 2), (1, 3), (2, 2), (1, 4), (3, 2), (4, 1)])
def test_matrix_oracle_agrees_with_counting(a, n):
    assert_oracle_matches_counting(a, n)


ORACLE_GRID = (
    [(1, n) for n in range(5, 9)]
    + [(2, n) for n in range(3, 9)]
    + [(3, n) for n in range(3, 9)]
    + [(4, n) for n in range(2, 5)]
)


@pytest.mark.slow
@pytest.mark.parametrize("a, n", ORACLE_GRID)
def test_matrix_oracle_on_larger_algebras(a, n):
    assert_oracle_matches_counting(a, n, top_zero_sources=True)


def test_matrix_oracle_is_rotation_invariant():
    engine = symmetric_nakayama(2, 3)
    oracle = MatrixOracle(engine.algebra)
    modules = engine.algebra.indecomposables()
    for m in modules:
        for other in modules:
            rotated = (SerialModule((m.top + 1) % 3, m.length), SerialModule((other.top + 1) % 3, other.length))
            assert oracle.stable_hom_dim(m, other) == oracle.stable_hom_dim(*rotated)


def test_ext_vanishes_on_projectives():
    engine = symmetric_nakayama(1, 3)
    assert engine.ext_dim(SerialModule(0, 4), SerialModule(1, 1), 1) == 0
    # a simple of the (1, 3) algebra first extends itself in degree 5
    assert [engine.ext_dim(SerialModule(1, 1), SerialModule(1, 1), r) for r in range(1, 7)] == [0, 0, 0, 0, 1, 1]


def test_numeric_examples():
    assert classify_numeric(1, 6, 2)
    assert classify_numeric(1, 6, 11)
    assert classify_numeric(2, 3, 2)
    assert classify_numeric(1, 4, 7)
    assert not classify_numeric(1, 6, 5)
    assert not classify_numeric(1, 1, 2)


def test_numeric_route_matches_the_closed_list():
    for row in numeric_grid():
        assert row["numeric"] == row["closed_form"], row


def test_default_grid_size():
    assert len(numeric_grid()) == sum(2 * a * n + 2 for a in range(1, 5) for n in range(1, 13))


def test_newconditionb_matches_condition_b():
    for n in range(1, 25):
        for d in range(2, 2 * n + 2):
            value = newconditionb(n, d)
            if value is None:
                assert (2 * n) % (d + 1)
            else:
                assert value == condition_b(1, n, d), (n, d)


def test_classification_predicate():
    assert classification_predicate(1, 5, 9)
    assert classification_predicate(2, 3, 2)
    assert not classification_predicate(2, 3, 3)
    assert not classification_predicate(1, 1, 1)


SEARCHABLE = [
    (a, n) for a in range(1, NAKAYAMA_SEARCH_BUDGET + 1) for n in range(1, 8) if a * n * n <= NAKAYAMA_SEARCH_BUDGET
]


@pytest.mark.parametrize("a, n", SEARCHABLE)
def test_brute_force_agrees_with_numeric(a, n):
    engine = symmetric_nakayama(a, n)
    for d in range(2, 2 * a * n + 4):
        found = engine.enumerate_d_ct(d)
        assert found.status == Routes.SEARCH
        assert found.verdict == classify_numeric(a, n, d), d
        for summands in found.summand_sets:
            assert engine.is_d_ct_module(summands, d)


def test_cluster_tilting_module_contains_all_projectives():
    engine = symmetric_nakayama(1, 3)
    found = engine.enumerate_d_ct(2)
    assert found.summand_sets
    for summands in found.summand_sets:
        assert set(engine.algebra.projectives()) <= set(summands)
        verdict, _ = engine.transcript([m for m in summands if m.length < 4], 2)
        assert not verdict


def test_budget_marks_not_attempted():
    found = symmetric_nakayama(1, 3).enumerate_d_ct(2, budget=4)
    assert found.status == Routes.NOT_ATTEMPTED
    assert found.verdict is None
    assert found.to_dict()["verdict"] is None


def test_divides2n_check():
    algebra = NakayamaAlgebra(1, 3)
    empty = NakayamaEnumeration(algebra, 3)
    full = NakayamaEnumeration(algebra, 3, summand_sets=[algebra.projectives()])
    assert divides2n_check(empty, 3, 3)
    assert not divides2n_check(full, 3, 3)
    assert divides2n_check(full, 3, 2)


def test_serre_orbits_partition_non_projectives():
    engine = symmetric_nakayama(1, 4)
    orbits = engine.serre_orbits(3)
    flat = [m for orbit in orbits for m in orbit]
    assert sorted(flat) == engine.algebra.non_projectives()


def test_d_must_be_at_least_two():
    with pytest.raises(InvalidInputError):
        symmetric_nakayama(1, 3).enumerate_d_ct(1)


def test_verification_error_carries_witness():
    error = VerificationError("broken", witness={"d": 3})
    assert error.witness == {"d": 3}


def test_condition_b_only_beyond_a1_at_the_sporadic_triple():
    for row in numeric_grid():
        if row["condition_b"] and row["a"] != 1:
            assert (row["a"], row["n"], row["d"]) == (2, 3, 2)


def test_ext_profiles_shared_across_threads():
    engine = SymmetricNakayama(NakayamaAlgebra(1, 5))
    modules = engine.algebra.non_projectives()
    pairs = [(m, other) for m in modules for other in modules] * 2
    with ThreadPoolExecutor(max_workers=8) as pool:
        profiles = list(pool.map(lambda pair: engine.ext_profile(*pair), pairs))
    fresh = SymmetricNakayama(NakayamaAlgebra(1, 5))
    assert profiles == [fresh.ext_profile(m, other) for m, other in pairs]
    assert len(engine._profiles) == len(modules) ** 2
