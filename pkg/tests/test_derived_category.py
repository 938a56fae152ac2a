import pytest

from constants import VERIFY_WINDOW_FACTOR
from errors import InvalidInputError, WindowExceededError
from models.derived import DerivedObject, ModuleForm
from services.derived_category import derived_category
from services.mesh_oracle import MeshOracle, mesh_oracle
from services.root_data import default_orientation, dynkin_diagram, projective_dimension_vectors


def test_a2_nakayama_data(a2):
    data = derived_category(a2).nakayama_data()
    assert data.sigma_of(2) == 1 and data.offset(2) == 0
    assert data.sigma_of(1) == 2 and data.offset(1) == 1


def test_a2_shift(a2):
    assert derived_category(a2).shift(DerivedObject(1, 0), 1) == DerivedObject(2, -2)


def test_d4_nakayama_permutation_is_trivial(d4):
    data = derived_category(d4).nakayama_data()
    assert data.sigma == (1, 2, 3, 4)
    assert data.offsets == (2, 2, 2, 2)


@pytest.mark.parametrize("family, rank", [("A", 3), ("D", 4), ("D", 5), ("E", 6)])
def test_tau_period_is_shift_by_minus_two(family, rank):
    orientation = default_orientation(dynkin_diagram(family, rank))
    category = derived_category(orientation)
    for i, dim in projective_dimension_vectors(orientation).items():
        assert category.to_module_form(DerivedObject(i, category.h)) == ModuleForm(dim, -2)


@pytest.mark.parametrize("family, rank", [("A", 2), ("A", 4), ("D", 4), ("E", 6)])
def test_shift_jump_matches_iteration(family, rank):
    category = derived_category(default_orientation(dynkin_diagram(family, rank)))
    for i in category.vertices:
        x = DerivedObject(i, 1)
        for r in range(-5, 6):
            assert category.shift(x, r) == category.shift_by_iteration(x, r)


@pytest.mark.parametrize("family, rank, count", [("A", 3, 6), ("D", 4, 12), ("E", 6, 36)])
def test_number_of_indecomposable_modules(family, rank, count):
    category = derived_category(default_orientation(dynkin_diagram(family, rank)))
    modules = category.indecomposable_modules()
    assert len(modules) == count
    assert all(category.is_module(x) for x, _ in modules)


def test_normal_form_is_inverted_by_from_module_form(d4):
    category = derived_category(d4)
    for x in category.window(1):
        form = category.to_module_form(x)
        assert category.from_module_form(form.dim_vector, form.shift) == x


def test_from_module_form_rejects_non_roots(a3):
    with pytest.raises(InvalidInputError):
        derived_category(a3).from_module_form((1, 0, 1), 0)


def test_unknown_vertex_rejected(a3):
    with pytest.raises(InvalidInputError):
        derived_category(a3).to_module_form(DerivedObject(7, 0))


def test_hom_between_projectives_counts_paths(a3):
    category = derived_category(a3)
    assert category.hom_dim(DerivedObject(2, 0), DerivedObject(1, 0)) == 1
    assert category.hom_dim(DerivedObject(1, 0), DerivedObject(2, 0)) == 0
    assert category.hom_dim(DerivedObject(3, 0), DerivedObject(1, 0)) == 1


def test_nu_sends_projectives_to_injectives(e6):
    category = derived_category(e6)
    for i in category.vertices:
        assert category.nu(category.projective(i)) == category.injective(i)


@pytest.mark.parametrize("family, rank", [("A", 3), ("D", 4)])
def test_serre_duality(family, rank):
    category = derived_category(default_orientation(dynkin_diagram(family, rank)))
    objects = category.window()
    for x in objects:
        for y in objects:
            assert category.hom_dim(x, y) == category.hom_dim(y, category.nu(x))


def test_auslander_reiten_formula(d4):
    category = derived_category(d4)
    objects = category.window()
    for x in objects:
        for y in objects:
            assert category.ext_dim(x, y, 1) == category.hom_dim(y, category.tau(x))


def test_half_calabi_yau():
    assert derived_category(default_orientation(dynkin_diagram("D", 4))).is_half_calabi_yau()
    assert not derived_category(default_orientation(dynkin_diagram("A", 3))).is_half_calabi_yau()
    assert not derived_category(default_orientation(dynkin_diagram("A", 2))).is_half_calabi_yau()


@pytest.mark.parametrize("family, rank", [("A", 4), ("D", 4), ("D", 5), ("E", 6)])
def test_mesh_oracle_agrees_with_euler_form(family, rank):
    orientation = default_orientation(dynkin_diagram(family, rank))
    category = derived_category(orientation)
    oracle = mesh_oracle(orientation)
    for i in category.vertices:
        x = DerivedObject(i, 3)
        for j in category.vertices:
            for l in range(3 - 3 * category.h, 3 + category.h):
                y = DerivedObject(j, l)
                assert oracle.hom_dim(x, y) == category.hom_dim(x, y), (x, y)


def test_mesh_oracle_on_other_orientation(a3_alternating):
    category = derived_category(a3_alternating)
    oracle = MeshOracle(a3_alternating)
    for i in category.vertices:
        for j in category.vertices:
            for l in range(-2 * category.h, 1):
                x, y = DerivedObject(i, 0), DerivedObject(j, l)
                assert oracle.hom_dim(x, y) == category.hom_dim(x, y)


def test_mesh_oracle_window(a3):
    oracle = MeshOracle(a3, window_factor=1)
    with pytest.raises(WindowExceededError):
        oracle.hom_dim(DerivedObject(1, 0), DerivedObject(1, -5))


ALL_TYPES = [("A", n) for n in range(1, 9)] + [("D", n) for n in range(4, 9)] + [("E", n) for n in (6, 7, 8)]


@pytest.mark.parametrize("family, rank", ALL_TYPES)
def test_functor_identities(family, rank):
    category = derived_category(default_orientation(dynkin_diagram(family, rank)))
    h = category.h
    data = category.nakayama_data()
    for i in category.vertices:
        assert data.offset(i) + data.offset(data.sigma_of(i)) + 2 == h
    for x in category.window():
        assert category.nu_power(x, h) == category.shift(x, h - 2)
        assert category.nu(category.shift(x, 1)) == category.g(x)
        assert category.shift(x, 2) == category.tau(x, -h)
        assert category.g(category.tau(x, -1)) == category.tau(x, -h)
        assert category.shift(category.tau(x), 1) == category.nu(x)
        assert category.nu_d(x, 1) == category.tau(x)
        assert category.hom_dim(x, x) == 1


@pytest.mark.parametrize("family, rank", ALL_TYPES)
def test_dualities_on_every_type(family, rank):
    category = derived_category(default_orientation(dynkin_diagram(family, rank)))
    span = VERIFY_WINDOW_FACTOR * category.h
    # Hom is tau-invariant, so sources of twist 0 reach every pair of the window
    for i in category.vertices:
        x = DerivedObject(i, 0)
        for j in category.vertices:
            for l in range(1 - span, span):
                y = DerivedObject(j, l)
                hom = category.hom_dim(x, y)
                assert hom == category.hom_dim(category.tau(x), category.tau(y)), (x, y)
                assert hom == category.hom_dim(y, category.nu(x)), (x, y)
                assert category.ext_dim(x, y, 1) == category.hom_dim(y, category.tau(x)), (x, y)


@pytest.mark.parametrize("family, rank", [("A", 1), ("D", 4), ("D", 6), ("E", 7), ("E", 8)])
def test_half_calabi_yau_types(family, rank):
    assert derived_category(default_orientation(dynkin_diagram(family, rank))).is_half_calabi_yau()


def test_d4_shift_is_tau_cubed(d4):
    category = derived_category(d4)
    assert category.g(DerivedObject(1, 0)) == DerivedObject(1, -5)
    for x in category.window():
        assert category.shift(x, 1) == category.tau(x, -3)


def test_a2_wrap_rule(a2):
    assert derived_category(a2).to_module_form(DerivedObject(2, 1)) == ModuleForm((1, 1), -1)


def test_modules_have_no_far_extensions(e6):
    category = derived_category(e6)
    modules = [x for x, _ in category.indecomposable_modules()]
    for x in modules:
        for y in modules:
            for r in (-3, -2, 2, 3):
                assert category.ext_dim(x, y, r) == 0
            assert category.hom_dim(x, category.tau(x)) == 0


def test_projectives_have_no_extensions(d4):
    category = derived_category(d4)
    for i in category.vertices:
        for j in category.vertices:
            for r in range(1, 6):
                assert category.ext_dim(category.projective(i), category.projective(j), r) == 0


@pytest.mark.slow
@pytest.mark.parametrize("family, rank", ALL_TYPES)
def test_mesh_oracle_on_every_type(family, rank):
    orientation = default_orientation(dynkin_diagram(family, rank))
    category = derived_category(orientation)
    oracle = mesh_oracle(orientation)
    for i in category.vertices:
        x = DerivedObject(i, 0)
        assert oracle.hom_dim(x, x) == 1
        assert oracle.hom_dim(x, category.tau(x)) == 0
        for y in category.window():
            y = y.translate(-2 * category.h)
            assert oracle.hom_dim(x, y) == category.hom_dim(x, y), (x, y)
