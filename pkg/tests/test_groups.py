import random
from fractions import Fraction

import pytest

from sympdec.errors import IndexOutOfRangeError, NotInGroupError, ShapeMismatchError
from sympdec.groups import (
    change_of_basis_p,
    direct_sum_sp,
    doubling,
    is_orthogonal,
    is_special_orthogonal,
    is_symplectic,
    is_symplectic_blocks,
    is_symplectic_gram,
    perm_pj,
    perm_pmn,
    r_fold_sum_sp,
    random_gl,
    random_so,
    random_sp,
    stabilization,
    stabilization_sj,
    symplectic_gram,
    tensor_sp_o,
    tensor_sp_sp,
    verify_l_conjugation,
    verify_mixed_product,
    verify_sj_conjugation,
    with_perturbed_entry,
)
from sympdec.matrix import ExactMatrix, block_diag


# -- membership predicates ---------------------------------------------------

def test_identity_is_symplectic():
    for m in (1, 2, 3):
        assert is_symplectic(ExactMatrix.identity(2 * m))


def test_gram_matrix_is_symplectic():
    # J^T J J = J because J^2 = -I
    for m in (1, 2):
        assert is_symplectic(symplectic_gram(m))


def test_rational_diagonal_example():
    assert is_symplectic(ExactMatrix.from_rows([[2, 0], [0, Fraction(1, 2)]]))


def test_odd_size_raises():
    with pytest.raises(ShapeMismatchError):
        is_symplectic(ExactMatrix.identity(3))


def test_gram_and_block_routes_form_a_biconditional():
    rng = random.Random(11)
    for k in range(30):
        m = rng.randint(1, 3)
        member = random_sp(m, seed=f"bicond:{k}")
        candidates = [member, with_perturbed_entry(member)]
        for cand in candidates:
            assert is_symplectic_gram(cand) == is_symplectic_blocks(cand)
    assert not is_symplectic(with_perturbed_entry(ExactMatrix.identity(4)))


def test_orthogonal_predicates():
    assert is_orthogonal(ExactMatrix.identity(3))
    refl = ExactMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    assert is_orthogonal(refl) and not is_special_orthogonal(refl)
    assert not is_orthogonal(with_perturbed_entry(ExactMatrix.identity(3)))


# -- direct sums and stabilizations -------------------------------------------

def test_direct_sum_of_identities():
    assert direct_sum_sp(ExactMatrix.identity(2), ExactMatrix.identity(2)).is_identity()


def test_direct_sum_with_identity_is_stabilization():
    a = random_sp(2, seed=3)
    assert direct_sum_sp(a, ExactMatrix.identity(4)) == stabilization(a, 2)


def test_direct_sum_closure_randomized():
    for k in range(20):
        a = random_sp(1 + k % 2, seed=f"ds:{k}:a")
        b = random_sp(1 + (k + 1) % 3, seed=f"ds:{k}:b")
        assert is_symplectic(direct_sum_sp(a, b))


def test_direct_sum_rejects_non_members():
    with pytest.raises(NotInGroupError):
        direct_sum_sp(with_perturbed_entry(ExactMatrix.identity(2)), ExactMatrix.identity(2))


def test_r_fold_sum():
    a = random_sp(1, seed=4)
    assert r_fold_sum_sp(a, 1) == a
    assert r_fold_sum_sp(ExactMatrix.identity(2), 2).is_identity()
    triple = r_fold_sum_sp(a, 3)
    assert triple == direct_sum_sp(a, direct_sum_sp(a, a))
    assert is_symplectic(triple)


def test_stabilization_sj_basics():
    a = random_sp(1, seed=5)
    # the first slot recovers the plain stabilization
    assert stabilization_sj(a, 1, 3) == stabilization(a, 2)
    assert stabilization_sj(ExactMatrix.identity(4), 2, 3).is_identity()
    for j in (1, 2, 3):
        assert is_symplectic(stabilization_sj(a, j, 3))
    with pytest.raises(IndexOutOfRangeError):
        stabilization_sj(a, 4, 3)
    with pytest.raises(IndexOutOfRangeError):
        stabilization_sj(a, 0, 3)


def test_sj_conjugation_identity():
    for n, r in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)]:
        for j in range(1, r):
            a = random_sp(n, seed=f"sjconj:{n}:{r}:{j}")
            assert verify_sj_conjugation(a, j, r)
    # worked case: third slot of three one-dimensional blocks
    a = random_sp(1, seed="worked")
    assert verify_sj_conjugation(a, 2, 3)
    assert verify_sj_conjugation(ExactMatrix.identity(2), 1, 2)


def test_perm_pj_is_a_transposition():
    p = perm_pj(1, 2, 3)
    assert (p @ p).is_identity()
    with pytest.raises(IndexOutOfRangeError):
        perm_pj(3, 2, 3)


# -- doubling -----------------------------------------------------------------

def test_doubling():
    assert doubling(ExactMatrix.identity(3)).is_identity()
    refl = ExactMatrix.from_rows([[1, 0], [0, -1]])
    d = doubling(refl)
    assert d == block_diag(refl, refl)
    assert is_symplectic(d)
    for k in range(10):
        assert is_symplectic(doubling(random_so(3, seed=k)))
    with pytest.raises(NotInGroupError):
        doubling(with_perturbed_entry(ExactMatrix.identity(2)))


# -- tensor products ----------------------------------------------------------

def test_tensor_sp_o_identities():
    assert tensor_sp_o(ExactMatrix.identity(4), ExactMatrix.identity(3)).is_identity()


def test_tensor_sp_o_center_to_center():
    m, n = 2, 3
    neg = -ExactMatrix.identity(2 * m)
    assert tensor_sp_o(neg, ExactMatrix.identity(n)) == -ExactMatrix.identity(2 * m * n)


def test_tensor_sp_o_closure_randomized():
    for k in range(15):
        a = random_sp(1 + k % 2, seed=f"tso:{k}:a")
        b = random_so(2 + k % 2, seed=f"tso:{k}:b")
        assert is_symplectic(tensor_sp_o(a, b))


def test_tensor_gram_compatibility():
    # the basis ordering makes J kron I literally the bigger J
    for m, n in [(1, 2), (2, 3)]:
        assert symplectic_gram(m).kron(ExactMatrix.identity(n)) == symplectic_gram(m * n)


def test_l_and_r_restrictions_fit_together():
    a = random_sp(2, seed="lr:a")
    b = random_so(3, seed="lr:b")
    left = tensor_sp_o(a, ExactMatrix.identity(3))
    right = tensor_sp_o(ExactMatrix.identity(4), b)
    assert left @ right == tensor_sp_o(a, b)


def test_orthonormal_change_of_basis():
    for m, n in [(1, 1), (1, 2), (2, 2)]:
        p = change_of_basis_p(m, n)
        g = symplectic_gram(m).kron(symplectic_gram(n))
        assert (p.transpose() @ g @ p).is_identity()


def test_tensor_sp_sp():
    assert tensor_sp_sp(ExactMatrix.identity(2), ExactMatrix.identity(2)).is_identity()
    for k in range(10):
        a = random_sp(1, seed=f"tss:{k}:a")
        b = random_sp(1 + k % 2, seed=f"tss:{k}:b")
        out = tensor_sp_sp(a, b)
        assert is_orthogonal(out)
        assert out.rows == 4 * 1 * (1 + k % 2)


def test_l_conjugation_identity():
    a = random_sp(1, seed="L:1")
    assert verify_l_conjugation(a, 1)       # trivial shuffle
    for m, n in [(1, 2), (2, 3), (3, 2)]:
        a = random_sp(m, seed=f"L:{m}:{n}")
        assert verify_l_conjugation(a, n)
    assert perm_pmn(1, 1).is_identity()


def test_mixed_product():
    assert verify_mixed_product(ExactMatrix.identity(2), ExactMatrix.identity(3))
    assert verify_mixed_product(random_gl(2, seed=1), random_gl(3, seed=2))
    # scalar case is the commutativity of the field
    assert verify_mixed_product(ExactMatrix.from_rows([[7]]), ExactMatrix.from_rows([[5]]))


# -- random element generators --------------------------------------------------

def test_random_sp_membership_and_determinism():
    for seed in range(8):
        a = random_sp(2, seed=seed)
        assert is_symplectic(a)
    assert random_sp(3, seed=42) == random_sp(3, seed=42)
    assert random_sp(3, seed=42) != random_sp(3, seed=43)


def test_random_so_membership_and_determinism():
    for seed in range(8):
        a = random_so(3, seed=seed)
        assert is_special_orthogonal(a)
    assert random_so(4, seed=1) == random_so(4, seed=1)
