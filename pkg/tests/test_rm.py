import pytest

from rmcodes.binlinalg import row_space_subset
from rmcodes.boolfn import BooleanFunction, polarize
from rmcodes.binlinalg import rank
from rmcodes.codes import BudgetExceeded, contains_all_one, minimum_distance, weight_distribution
from rmcodes.gf2m import field
from rmcodes.rm import (
    SubcodeSpec,
    check_nesting,
    minimum_distance_by_cosets,
    quotient_basis,
    rank_lower_bound_check,
    rm1,
    rm2,
    simplex,
    subcode,
    symplectic_group,
    weight_distribution_by_cosets,
)

ALL_SPECS = [
    SubcodeSpec(m, d, fam)
    for m in range(3, 9)
    for fam in (["even"] if m % 2 == 0 else ["odd-first", "odd-second"])
    if m >= 4 or fam != "even"
    for d in range(1, (m // 2 if fam == "even" else (m - 1) // 2) + 1)
]


def test_rm_parameters():
    c = rm1(4)
    assert (c.n, c.k, minimum_distance(c)) == (16, 5, 8)
    c = rm2(4)
    assert (c.n, c.k, minimum_distance(c)) == (16, 11, 4)
    s = simplex(3)
    assert (s.n, s.k) == (7, 3)
    assert weight_distribution(s).weights == [0, 4]


def test_rm_ranges():
    with pytest.raises(ValueError):
        rm2(9)
    with pytest.raises(ValueError):
        rm1(0)


@pytest.mark.parametrize(
    "spec,params",
    [
        (SubcodeSpec(6, 3, "even"), (64, 10, 28)),
        (SubcodeSpec(8, 2, "even"), (256, 29, 96)),
        (SubcodeSpec(5, 2, "odd-first"), (32, 11, 12)),
        (SubcodeSpec(7, 2, "odd-first"), (128, 22, 48)),
    ],
)
def test_subcode_examples(spec, params):
    code = subcode(spec)
    d = minimum_distance_by_cosets(code, spec.m) if code.k > 21 else minimum_distance(code)
    assert (code.n, code.k, d) == params


@pytest.mark.parametrize("bad", [(5, 1, "even"), (2, 1, "even"), (6, 4, "even"), (4, 1, "odd-first"), (7, 4, "odd-second"), (7, 0, "odd-first")])
def test_spec_validation(bad):
    with pytest.raises(ValueError):
        SubcodeSpec(*bad)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label)
def test_subcode_structure(spec):
    code = subcode(spec)
    assert (code.n, code.k) == (spec.length, spec.dimension)
    assert row_space_subset(rm1(spec.m).generator, code.generator)
    assert contains_all_one(code)
    assert row_space_subset(code.generator, rm2(spec.m).generator)
    if code.k - spec.m - 1 > 22:
        # 2^28 cosets at m = 8, d = 1; the rank-2 early stop settles the distance
        assert minimum_distance_by_cosets(code, spec.m) == spec.min_distance
        return
    wd = weight_distribution_by_cosets(code, spec.m)
    assert set(wd.weights) <= spec.weight_set()
    assert wd.min_nonzero() == spec.min_distance
    if code.k <= 22:
        assert weight_distribution(code) == wd


def test_rm1_single_coset():
    wd = weight_distribution_by_cosets(rm1(5), 5)
    assert wd.counts == {0: 1, 16: 62, 32: 1}


def test_rm2_by_cosets_matches_enumeration():
    assert weight_distribution_by_cosets(rm2(4), 4) == weight_distribution(rm2(4))
    assert weight_distribution(rm2(4))[4] > 0


def test_m4_d2_distribution():
    wd = weight_distribution_by_cosets(subcode(SubcodeSpec(4, 2)), 4)
    assert wd.counts == {0: 1, 6: 48, 8: 30, 10: 48, 16: 1}
    assert wd == weight_distribution(subcode(SubcodeSpec(4, 2)))


def test_coset_method_requires_rm1():
    with pytest.raises(ValueError):
        weight_distribution_by_cosets(simplex(4), 4)


def test_odd_families_coincide_at_extremes():
    # odd-first at d and odd-second at t - d + 1 use the same number of cosets,
    # and at m = 3 (t = 1) both families are the single code with d = 1
    a = subcode(SubcodeSpec(3, 1, "odd-first"))
    b = subcode(SubcodeSpec(3, 1, "odd-second"))
    assert a.same_code(b)
    for m in (5, 7):
        t = (m - 1) // 2
        assert subcode(SubcodeSpec(m, 1, "odd-first")).same_code(subcode(SubcodeSpec(m, 1, "odd-second")))
        assert subcode(SubcodeSpec(m, t, "odd-first")).k == subcode(SubcodeSpec(m, t, "odd-second")).k


@pytest.mark.parametrize("m", [4, 6, 8])
def test_nesting_even(m):
    assert check_nesting(m)


@pytest.mark.parametrize("m", [5, 7])
def test_nesting_odd(m):
    assert check_nesting(m, "odd-first") and check_nesting(m, "odd-second")


def test_nesting_fails_across_unrelated_codes():
    # sanity check of the containment test itself
    assert not row_space_subset(rm2(4).generator, subcode(SubcodeSpec(4, 2)).generator)


def test_symplectic_group_m2():
    g = symplectic_group(2)
    assert [b.to_strings() for b in g.elements] == [["00", "00"], ["01", "10"]]
    assert g.is_closed() and g.ranks() == [0, 2]


@pytest.mark.parametrize("m", [4, 6, 8])
def test_symplectic_group(m):
    g = symplectic_group(m)
    assert len(g) == 2 ** (m // 2)
    assert g.is_closed()
    assert sorted(g.ranks()) == [0] + [m] * (len(g) - 1)
    assert all(b.is_symplectic() for b in g.elements)


@pytest.mark.slow
def test_symplectic_group_m10():
    g = symplectic_group(10)
    assert len(g) == 32 and g.is_closed() and sorted(g.ranks()) == [0] + [10] * 31


def test_symplectic_group_odd():
    with pytest.raises(ValueError):
        symplectic_group(5)


def test_rank_bound_examples():
    assert rank_lower_bound_check(SubcodeSpec(6, 2))
    assert rank_lower_bound_check(SubcodeSpec(4, 2))
    assert rank_lower_bound_check(SubcodeSpec(8, 4))


def test_rank_bound_budget():
    with pytest.raises(BudgetExceeded):
        rank_lower_bound_check(SubcodeSpec(8, 2), budget_bits=10)
    assert rank_lower_bound_check(SubcodeSpec(8, 1), budget_bits=10)


@pytest.mark.parametrize("m", [4, 6, 8])
def test_half_field_trace_functions_span_top_cosets(m):
    """xi -> T_{m/2}((gamma xi)^(1 + 2^(m/2))) lies in the d = m/2 code with full rank."""
    F = field(m)
    code = subcode(SubcodeSpec(m, m // 2))
    half = m // 2
    for gamma in range(1, F.size, max(1, F.size // 16)):
        table = 0
        for xi in range(F.size):
            norm = F.pow(F.mul(gamma, xi), 1 + (1 << half))
            table |= F.trace(norm, half) << xi
        assert table in code
        assert rank(polarize(BooleanFunction(m, table))) == m


def test_quotient_basis_size():
    code = subcode(SubcodeSpec(6, 2))
    assert len(quotient_basis(code, 6)) == code.k - 7
