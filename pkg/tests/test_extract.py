import numpy as np
import pytest

from conftest import EXPANDED_F8_N7_K5, GAMMA_DELTA0, GAMMA_DELTA1, GAMMA_DELTA4, GAMMA_K7
from grssub import matql
from grssub.errors import DimensionError, InvariantError, UnsupportedStructureError
from grssub.extension import ExtensionCtx, ext_mul, is_subfield
from grssub.extract import (
    assemble_constraint_matrix,
    conjugacy_check,
    conjugacy_permutation,
    expand_generator,
    extract_subfield_subcode,
    subcode_from_basis,
    subfield_encode,
    zero_groups,
)
from grssub.grscode import canonical_generator, cyclic_grs, encode, grs_code
from grssub.smallfield import gf


def test_expanded_generator_fixture(F8):
    assert np.array_equal(expand_generator(cyclic_grs(F8, 7, 5, 0)), EXPANDED_F8_N7_K5)


def test_expanded_generator_realises_multiplication(F16, rng):
    code = grs_code(F16, F16.from_int([1, 3, 7, 9, 12]), F16.from_int([2, 2, 5, 1, 14]), 3)
    f = F16.from_int(rng.integers(0, 16, size=(20, 3)))
    flat = matql.mat_mul(f.reshape(20, -1), expand_generator(code), F16.base)
    assert np.array_equal(flat.reshape(20, 5, 4), encode(code, f))


@pytest.mark.parametrize(
    "delta, fixture, expect",
    [(0, GAMMA_DELTA0, (4, 0, 0, 3)), (1, GAMMA_DELTA1, (3, 0, 1, 4)), (4, GAMMA_DELTA4, (1, 3, 1, 7))],
)
def test_constraint_basis_fixtures(F8, delta, fixture, expect):
    ssc = extract_subfield_subcode(cyclic_grs(F8, 7, 5, delta))
    assert np.array_equal(ssc.gamma_tilde, fixture)
    assert (ssc.k_prime, ssc.s_groups, ssc.t_groups, ssc.d_prime) == expect


def test_k_equals_n_fixture(F8):
    ssc = extract_subfield_subcode(cyclic_grs(F8, 7, 7, 0))
    assert np.array_equal(ssc.gamma_tilde, GAMMA_K7)
    assert (ssc.k_prime, ssc.d_prime) == (7, 1)


def test_kernel_rows_annihilate_constraints(F16, rng):
    code = grs_code(F16, F16.from_int(rng.permutation(np.arange(1, 16))[:10]),
                    F16.from_int(rng.integers(1, 16, size=10)), 6)
    ssc = extract_subfield_subcode(code)
    M = assemble_constraint_matrix(code)
    assert M.shape == (4 * 6, 3 * 10)
    if ssc.k_prime:
        assert not matql.mat_mul(ssc.gamma_tilde, M, F16.base).any()
    assert ssc.k_prime == 24 - matql.rank(M, F16.base)


def test_gamma_times_g_lies_in_subfield(F8):
    ssc = extract_subfield_subcode(cyclic_grs(F8, 7, 5, 1))
    G = canonical_generator(ssc.parent)
    for r in range(ssc.k_prime):
        acc = np.zeros((7, 3), dtype=np.uint8)
        for i in range(5):
            acc ^= ext_mul(ssc.gamma[r, i], G[i], F8)
        assert is_subfield(acc).all()
        assert np.array_equal(acc[:, 0], ssc.gprime[r])


def test_k1_repetition_code(F8):
    ssc = extract_subfield_subcode(cyclic_grs(F8, 7, 1, 0))
    assert ssc.k_prime == 1
    assert ssc.gprime.tolist() == [[1] * 7]
    assert ssc.d_prime == 7


def test_degree_one_extension_is_whole_code():
    ctx = ExtensionCtx(gf(5))
    code = cyclic_grs(ctx, 4, 2, 1)
    ssc = extract_subfield_subcode(code)
    assert assemble_constraint_matrix(code).shape == (2, 0)
    assert (ssc.k_prime, ssc.d_prime) == (2, code.d)


def test_subfield_encode(F8):
    ssc = extract_subfield_subcode(cyclic_grs(F8, 7, 5, 0))
    u = np.array([[1, 0, 0, 0], [0, 1, 1, 0], [1, 1, 1, 1]], dtype=np.uint8)
    words = subfield_encode(ssc, u)
    assert np.array_equal(words[0], ssc.gprime[0])
    assert np.array_equal(words[1], ssc.gprime[1] ^ ssc.gprime[2])
    with pytest.raises(DimensionError):
        subfield_encode(ssc, [1, 0])


def test_zero_groups():
    row = np.array([0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0])
    assert zero_groups(row, 3) == (1, 1)
    assert zero_groups(np.zeros(6), 3) == (2, 2)
    with pytest.raises(DimensionError):
        zero_groups(np.zeros(5), 3)


def test_empty_subcode_defaults(F16):
    code = grs_code(F16, F16.from_int([1, 2, 3]), F16.from_int([1, 1, 1]), 3)
    ssc = subcode_from_basis(code, np.zeros((0, 12), dtype=np.uint8))
    assert (ssc.k_prime, ssc.s_groups, ssc.t_groups) == (0, 0, 0)
    assert ssc.gprime.shape == (0, 3)


def test_bad_basis_rejected(F8):
    code = cyclic_grs(F8, 7, 5, 0)
    bogus = np.zeros((1, 15), dtype=np.uint8)
    bogus[0, 1] = 1  # the message f = x is not a subfield codeword
    with pytest.raises(InvariantError):
        subcode_from_basis(code, bogus)
    with pytest.raises(DimensionError):
        subcode_from_basis(code, np.zeros((1, 12), dtype=np.uint8))


def test_record(F8):
    rec = extract_subfield_subcode(cyclic_grs(F8, 7, 5, 4)).record()
    assert rec == {"n": 7, "k": 5, "d": 3, "k_prime": 1, "d_prime": 7, "s": 3, "t": 1}


def test_conjugacy_permutation(F8, F16):
    assert conjugacy_permutation(cyclic_grs(F8, 7, 5, 0)).tolist() == [0, 2, 4, 6, 1, 3, 5]
    assert conjugacy_permutation(cyclic_grs(F8, 7, 5, 1)).tolist() == [1, 3, 5, 0, 2, 4, 6]
    with pytest.raises(UnsupportedStructureError):
        conjugacy_permutation(grs_code(F16, F16.from_int([1, 2]), F16.from_int([1, 1]), 1))


@pytest.mark.parametrize("delta", range(7))
def test_constraint_rows_satisfy_conjugacy(F8, delta):
    code = cyclic_grs(F8, 7, 5, delta)
    ssc = extract_subfield_subcode(code)
    assert conjugacy_check(code, ssc.gamma).all()
    x = np.zeros((5, 3), dtype=np.uint8)
    x[1, 1] = 1
    assert not conjugacy_check(code, x)
