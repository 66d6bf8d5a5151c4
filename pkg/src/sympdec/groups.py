"""Exact realizations of complex symplectic and orthogonal group elements.

Conventions
-----------
Sp(k) elements are 2k x 2k matrices preserving the standard skew form
J = [[0, I_k], [-I_k, 0]]; the four k x k quadrants of such a matrix are
its symplectic blocks (A11, A12, A21, A22).  Membership is decided two
independent ways (Gram identity M^T J M = J, and the block conditions:
A11^T A21 and A12^T A22 symmetric, A11^T A22 - A21^T A12 = I) and both
routes must agree.

The Kronecker basis is ordered left-factor-major, which makes
J_{2m} kron I_n literally equal to J_{2mn}, so the symplectic-times-
orthogonal tensor product is the plain Kronecker product.

Random elements are built by exact constructions (Cayley transforms for
SO, generator products for Sp), never by numerical orthogonalization, so
membership holds on the nose and every draw is reproducible from its seed.
"""

from __future__ import annotations

import random

from sympdec.cyclotomic import CycScalar
from sympdec.errors import IndexOutOfRangeError, NotInGroupError, ShapeMismatchError
from sympdec.matrix import ExactMatrix, block_diag, block_matrix, perm_matrix


# -- forms and predicates ----------------------------------------------------

def symplectic_gram(k: int) -> ExactMatrix:
    """The standard skew form J of size 2k: [[0, I], [-I, 0]]."""
    i = ExactMatrix.identity(k)
    z = ExactMatrix.zeros(k, k)
    return block_matrix([[z, i], [-i, z]])


def symplectic_blocks(m: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix, ExactMatrix]:
    """The four quadrants (A11, A12, A21, A22) of an even-sized square matrix."""
    if not m.is_square() or m.rows % 2:
        raise ShapeMismatchError("symplectic blocks need an even square matrix")
    k = m.rows // 2
    num = m.num

    def quad(r0, c0):
        out = []
        for i in range(k):
            p = ((r0 + i) * m.cols + c0) * 4
            out.extend(num[p:p + 4 * k])
        return ExactMatrix(k, k, out, m.den)

    return quad(0, 0), quad(0, k), quad(k, 0), quad(k, k)


def is_symplectic_gram(m: ExactMatrix) -> bool:
    """Gram route: M^T J M == J."""
    if not m.is_square() or m.rows % 2:
        raise ShapeMismatchError("symplectic matrices have even size")
    j = symplectic_gram(m.rows // 2)
    return m.transpose() @ j @ m == j


def is_symplectic_blocks(m: ExactMatrix) -> bool:
    """Block route: A11^T A21, A12^T A22 symmetric and A11^T A22 - A21^T A12 = I."""
    a11, a12, a21, a22 = symplectic_blocks(m)
    s1 = a11.transpose() @ a21
    if s1 != s1.transpose():
        return False
    s2 = a12.transpose() @ a22
    if s2 != s2.transpose():
        return False
    return (a11.transpose() @ a22 - a21.transpose() @ a12).is_identity()


def is_symplectic(m: ExactMatrix) -> bool:
    gram = is_symplectic_gram(m)
    blocks = is_symplectic_blocks(m)
    if gram != blocks:
        raise AssertionError("symplectic membership routes disagree; internal error")
    return gram


def is_orthogonal(m: ExactMatrix) -> bool:
    if not m.is_square():
        raise ShapeMismatchError("orthogonal matrices are square")
    return (m.transpose() @ m).is_identity()


def is_special_orthogonal(m: ExactMatrix) -> bool:
    return is_orthogonal(m) and m.det() == CycScalar.one()


def _require(condition: bool, what: str):
    if not condition:
        raise NotInGroupError(what)


# -- direct sums and stabilizations -------------------------------------------

def direct_sum_sp(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Interleaved direct sum Sp(m) x Sp(n) -> Sp(m+n), blockwise diag on quadrants."""
    _require(is_symplectic(a), "left summand is not symplectic")
    _require(is_symplectic(b), "right summand is not symplectic")
    a11, a12, a21, a22 = symplectic_blocks(a)
    b11, b12, b21, b22 = symplectic_blocks(b)
    return block_matrix([
        [block_diag(a11, b11), block_diag(a12, b12)],
        [block_diag(a21, b21), block_diag(a22, b22)],
    ])


def r_fold_sum_sp(a: ExactMatrix, r: int) -> ExactMatrix:
    """r-fold interleaved direct sum Sp(n) -> Sp(rn)."""
    if r < 1:
        raise IndexOutOfRangeError("r must be positive")
    _require(is_symplectic(a), "summand is not symplectic")
    a11, a12, a21, a22 = symplectic_blocks(a)
    rep = lambda x: block_diag(*([x] * r))
    return block_matrix([[rep(a11), rep(a12)], [rep(a21), rep(a22)]])


def stabilization(a: ExactMatrix, extra: int) -> ExactMatrix:
    """Pad Sp(m) to Sp(m+extra) with identity blocks (direct sum with I)."""
    if extra < 0:
        raise IndexOutOfRangeError("extra must be nonnegative")
    if extra == 0:
        return a
    return direct_sum_sp(a, ExactMatrix.identity(2 * extra))


def _sigma_j(x: ExactMatrix, j: int, n: int, r: int, fill: ExactMatrix) -> ExactMatrix:
    parts = [fill] * (j - 1) + [x] + [fill] * (r - j)
    return block_diag(*parts)


def stabilization_sj(a: ExactMatrix, j: int, r: int) -> ExactMatrix:
    """Place the blocks of a in the j-th of r diagonal slots: Sp(n) -> Sp(rn), 1 <= j <= r.

    The diagonal quadrants are padded with identity slots and the
    off-diagonal quadrants with zero slots, so that j = 1 recovers the
    plain stabilization (direct sum with the identity).
    """
    if not 1 <= j <= r:
        raise IndexOutOfRangeError(f"j = {j} not in 1..{r}")
    _require(is_symplectic(a), "input is not symplectic")
    n = a.rows // 2
    a11, a12, a21, a22 = symplectic_blocks(a)
    ident = ExactMatrix.identity(n)
    zero = ExactMatrix.zeros(n, n)
    return block_matrix([
        [_sigma_j(a11, j, n, r, ident), _sigma_j(a12, j, n, r, zero)],
        [_sigma_j(a21, j, n, r, zero), _sigma_j(a22, j, n, r, ident)],
    ])


def perm_pj(j: int, n: int, r: int) -> ExactMatrix:
    """Permutation swapping the j-th and (j+1)-st n x n diagonal slots of rn, 1 <= j <= r-1."""
    if not 1 <= j <= r - 1:
        raise IndexOutOfRangeError(f"j = {j} not in 1..{r - 1}")
    cols = list(range(r * n))
    lo = (j - 1) * n
    for t in range(n):
        cols[lo + t], cols[lo + n + t] = cols[lo + n + t], cols[lo + t]
    return perm_matrix(cols)


def verify_sj_conjugation(a: ExactMatrix, j: int, r: int) -> bool:
    """Exact identity s_{j+1}(A) = diag(P_j, P_j) s_j(A) diag(P_j, P_j)."""
    n = a.rows // 2
    p = perm_pj(j, n, r)
    pp = block_diag(p, p)
    # P_j is an involution, so conjugation uses the same matrix on both sides
    return stabilization_sj(a, j + 1, r) == pp @ stabilization_sj(a, j, r) @ pp


# -- doubling and tensor products ---------------------------------------------

def doubling(a: ExactMatrix) -> ExactMatrix:
    """O(n) -> Sp(n): A |-> diag(A, A)."""
    _require(is_orthogonal(a), "doubling input is not orthogonal")
    return block_diag(a, a)


def tensor_sp_o(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Sp(m) x O(n) -> Sp(mn) as the Kronecker product (J kron I = J on the nose)."""
    _require(is_symplectic(a), "left tensor factor is not symplectic")
    _require(is_orthogonal(b), "right tensor factor is not orthogonal")
    return a.kron(b)


def perm_pmn(m: int, n: int) -> ExactMatrix:
    """Shuffle with column (k*m + s) equal to e_{s*n + k}: conjugates X^{(+n)} to X kron I_n."""
    cols = [s * n + k for k in range(n) for s in range(m)]
    return perm_matrix(cols)


def verify_l_conjugation(a: ExactMatrix, n: int) -> bool:
    """Exact identity A kron I_n = diag(P,P) A^{(+n)} diag(P,P)^{-1} with P the m,n shuffle."""
    _require(is_symplectic(a), "input is not symplectic")
    m = a.rows // 2
    p = perm_pmn(m, n)
    pp = block_diag(p, p)
    left = a.kron(ExactMatrix.identity(n))
    return left == pp @ r_fold_sum_sp(a, n) @ pp.inverse()


def change_of_basis_p(m: int, n: int) -> ExactMatrix:
    """An exact matrix P with P^T (J_{2m} kron J_{2n}) P = I.

    G = J kron J is a symmetric signed involution with empty diagonal; its
    index pairs {a, a'} (G e_a = eps e_{a'}) yield the orthonormal columns
    (e_a + eps e_{a'})/sqrt2 and i (e_a - eps e_{a'})/sqrt2, taken in
    increasing order of the smaller index.  Any other choice differs by a
    complex-orthogonal change of basis.
    """
    g = symplectic_gram(m).kron(symplectic_gram(n))
    size = g.rows
    half = CycScalar.sqrt2() / 2          # 1/sqrt2
    ihalf = CycScalar.i() * half          # i/sqrt2
    zero = CycScalar.zero()
    cols: list[list[CycScalar]] = []
    seen = [False] * size
    for a in range(size):
        if seen[a]:
            continue
        partner = None
        eps = None
        for r in range(size):
            e = g.entry(r, a)
            if not e.is_zero():
                partner, eps = r, e
                break
        assert partner is not None and partner != a and not seen[partner]
        seen[a] = seen[partner] = True
        u = [zero] * size
        u[a] = half
        u[partner] = eps * half
        v = [zero] * size
        v[a] = ihalf
        v[partner] = -eps * ihalf
        cols.append(u)
        cols.append(v)
    return ExactMatrix.from_rows(list(map(list, zip(*cols))))


def tensor_sp_sp(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Sp(m) x Sp(n) -> O(4mn): Kronecker product conjugated to the orthonormal basis."""
    _require(is_symplectic(a), "left tensor factor is not symplectic")
    _require(is_symplectic(b), "right tensor factor is not symplectic")
    m, n = a.rows // 2, b.rows // 2
    p = change_of_basis_p(m, n)
    g = symplectic_gram(m).kron(symplectic_gram(n))
    p_inv = p.transpose() @ g             # P^T G P = I gives P^{-1} = P^T G
    return p_inv @ a.kron(b) @ p


def verify_mixed_product(a: ExactMatrix, b: ExactMatrix) -> bool:
    """Exact identity A kron B = (A kron I)(I kron B)."""
    left = a.kron(ExactMatrix.identity(b.rows))
    right = ExactMatrix.identity(a.rows).kron(b)
    return a.kron(b) == left @ right


# -- seeded exact random elements ----------------------------------------------

def _rng(label: str, seed) -> random.Random:
    return random.Random(f"sympdec:{label}:{seed}")


def _random_skew_gauss(n: int, rng: random.Random) -> ExactMatrix:
    """Skew-symmetric matrix over small Gaussian integers a + b*i."""
    i = CycScalar.i()
    rows = [[CycScalar.zero() for _ in range(n)] for _ in range(n)]
    for r in range(n):
        for c in range(r + 1, n):
            x = CycScalar(rng.randint(-2, 2)) + i * rng.randint(-2, 2)
            rows[r][c] = x
            rows[c][r] = -x
    return ExactMatrix.from_rows(rows)


def random_so(n: int, seed=0) -> ExactMatrix:
    """Cayley transform (I + K)(I - K)^{-1} of a random skew K; always in SO(n)."""
    rng = _rng(f"so:{n}", seed)
    ident = ExactMatrix.identity(n)
    while True:
        k = _random_skew_gauss(n, rng)
        if not (ident - k).det().is_zero():
            break
    return (ident + k) @ (ident - k).inverse()


def _random_unimodular(k: int, rng: random.Random) -> ExactMatrix:
    rows = [[CycScalar.one() if i == j else CycScalar.zero() for j in range(k)] for i in range(k)]
    for _ in range(2 * k + 2):
        i, j = rng.randrange(k), rng.randrange(k)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        rows[j] = [x + c * y for x, y in zip(rows[j], rows[i])]
    return ExactMatrix.from_rows(rows)


def _random_symmetric(k: int, rng: random.Random) -> ExactMatrix:
    rows = [[CycScalar.zero()] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            x = CycScalar(rng.randint(-2, 2))
            rows[i][j] = x
            rows[j][i] = x
    return ExactMatrix.from_rows(rows)


def random_sp(m: int, seed=0) -> ExactMatrix:
    """Product of exact symplectic generators: diag(A, A^{-T}) and shear blocks."""
    rng = _rng(f"sp:{m}", seed)
    ident = ExactMatrix.identity(m)
    zero = ExactMatrix.zeros(m, m)
    out = ExactMatrix.identity(2 * m)
    for _ in range(rng.randint(2, 4)):
        kind = rng.randrange(3)
        if kind == 0:
            a = _random_unimodular(m, rng)
            f = block_matrix([[a, zero], [zero, a.transpose().inverse()]])
        elif kind == 1:
            f = block_matrix([[ident, _random_symmetric(m, rng)], [zero, ident]])
        else:
            f = block_matrix([[ident, zero], [_random_symmetric(m, rng), ident]])
        out = out @ f
    return out


def random_gl(k: int, seed=0) -> ExactMatrix:
    """Random unimodular integer matrix (invertible by construction)."""
    return _random_unimodular(k, _rng(f"gl:{k}", seed))


def with_perturbed_entry(m: ExactMatrix, delta: int = 1) -> ExactMatrix:
    """Copy of m with delta added to the top-left entry; used to build non-members."""
    num = list(m.num)
    num[0] += delta * m.den
    return ExactMatrix(m.rows, m.cols, num, m.den)
