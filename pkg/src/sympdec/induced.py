"""Homomorphisms induced on homotopy groups by the group operations.

Each emitter returns an AbHom: an integer matrix on the chosen generators
of finitely generated abelian groups, with entries reduced modulo the
target orders and the well-definedness invariant enforced at construction.
Formulas refuse degrees outside their validity windows instead of
extrapolating; the windows are part of the mathematics.

Generators are identified along the stabilization maps, so a formula's
matrix is stated relative to that identification.  Trivial factors carry
no generators: a map written (x, y) -> v*y on 0 x Z/2 is emitted as the
1 x 1 matrix [v mod 2].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from sympdec.abgroup import FgAbGroup
from sympdec.errors import (
    BadBezoutError,
    EvenNError,
    MalformedHomError,
    NotCoprimeError,
    OutOfRangeError,
)
from sympdec.homotopy import TableAnswer, pi_classifying, pi_o, pi_psp, pi_so, pi_sp
from sympdec.intmatrix import IntMatrix, smith_normal_form


# -- homomorphisms of finitely generated abelian groups -----------------------

@dataclass(frozen=True)
class AbHom:
    """matrix columns are indexed by source generators, rows by target generators."""

    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix
    source_names: tuple[str, ...] = ()
    target_names: tuple[str, ...] = ()
    provenance: str = ""
    valid_range: str = ""

    def __post_init__(self):
        m = self.matrix
        if m.rows != self.target.ngens or m.cols != self.source.ngens:
            raise MalformedHomError(
                f"matrix is {m.rows}x{m.cols}, need {self.target.ngens}x{self.source.ngens}"
            )
        data = list(m.data)
        for r, order in enumerate(self.target.factors):
            if order:
                for c in range(m.cols):
                    data[r * m.cols + c] %= order
        object.__setattr__(self, "matrix", IntMatrix(m.rows, m.cols, data))
        for c, a in enumerate(self.source.factors):
            if a == 0:
                continue
            for r, t in enumerate(self.target.factors):
                e = self.matrix.entry(r, c)
                bad = (a * e) % t if t else (a * e)
                if bad:
                    raise MalformedHomError(
                        f"generator of order {a} maps to an element of infinite or "
                        f"incompatible order (entry {e} at row {r})"
                    )

    def to_json(self) -> dict:
        return {
            "source": list(self.source.factors),
            "target": list(self.target.factors),
            "source_names": list(self.source_names),
            "target_names": list(self.target_names),
            "matrix": self.matrix.row_lists(),
            "provenance": self.provenance,
            "valid_range": self.valid_range,
        }


@dataclass(frozen=True)
class ZDependent:
    """A homomorphism that depends on an undetermined mod-2 parameter z.

    Decisions must be evaluated for both candidates and agree; otherwise
    the caller reports the question as z-sensitive.
    """

    z0: AbHom
    z1: AbHom

    @property
    def candidates(self) -> tuple[tuple[int, AbHom], tuple[int, AbHom]]:
        return ((0, self.z0), (1, self.z1))


def identity_hom(g: FgAbGroup) -> AbHom:
    return AbHom(g, g, IntMatrix.identity(g.ngens))


def zero_hom(source: FgAbGroup, target: FgAbGroup) -> AbHom:
    return AbHom(source, target, IntMatrix.zeros(target.ngens, source.ngens))


def diagonal_hom(g: FgAbGroup) -> AbHom:
    """x -> (x, x) into the doubled group."""
    ident = IntMatrix.identity(g.ngens).row_lists()
    return AbHom(g, FgAbGroup.product(g, g), IntMatrix.from_rows(ident + ident))


def compose(outer: AbHom, inner: AbHom) -> AbHom:
    if inner.target != outer.source:
        raise MalformedHomError("composition chain mismatch")
    return AbHom(inner.source, outer.target, outer.matrix @ inner.matrix,
                 inner.source_names, outer.target_names)


def stack(top: AbHom, bottom: AbHom) -> AbHom:
    """Pair two homomorphisms with the same source: x -> (top(x), bottom(x))."""
    if top.source != bottom.source:
        raise MalformedHomError("stacked homomorphisms need a common source")
    rows = top.matrix.row_lists() + bottom.matrix.row_lists()
    return AbHom(
        top.source,
        FgAbGroup.product(top.target, bottom.target),
        IntMatrix(top.matrix.rows + bottom.matrix.rows, top.matrix.cols,
                  [x for row in rows for x in row]),
        top.source_names,
        top.target_names + bottom.target_names,
    )


def _presentation_matrix(h: AbHom) -> IntMatrix:
    """[matrix | target-order relation columns]."""
    m = h.matrix
    rel = [(r, order) for r, order in enumerate(h.target.factors) if order]
    rows = []
    for r in range(m.rows):
        extra = [order if rr == r else 0 for rr, order in rel]
        rows.append(m.row_lists()[r] + extra)
    return IntMatrix(m.rows, m.cols + len(rel), [x for row in rows for x in row])


def is_surjective(h: AbHom) -> bool:
    if h.target.ngens == 0:
        return True
    ext = _presentation_matrix(h)
    d, _, _ = smith_normal_form(ext)
    diag = d.diagonal()
    return len(diag) == h.target.ngens and all(x == 1 for x in diag)


def _kernel_lattice_generators(h: AbHom) -> list[list[int]]:
    """Integer vectors on source generators spanning the kernel preimage lattice."""
    ext = _presentation_matrix(h)
    d, _, v = smith_normal_form(ext)
    diag = d.diagonal()
    cols = []
    vr = v.row_lists()
    for j in range(ext.cols):
        if j >= len(diag) or diag[j] == 0:
            cols.append([vr[r][j] for r in range(ext.cols)][: h.source.ngens])
    return cols


def is_injective(h: AbHom) -> bool:
    if h.source.ngens == 0:
        return True
    for vec in _kernel_lattice_generators(h):
        for coord, order in zip(vec, h.source.factors):
            if order == 0:
                if coord:
                    return False
            elif coord % order:
                return False
    return True


def is_isomorphism(h: AbHom) -> bool:
    return is_surjective(h) and is_injective(h)


@dataclass(frozen=True)
class ImageDescriptor:
    """Image of a homomorphism into a cyclic group: the subgroup index*ambient."""

    modulus: int   # 0 for ambient Z, 1 for the trivial group, k >= 2 for Z/k
    index: int

    def __str__(self):
        if self.modulus == 1 or self.index == 0 or self.index == self.modulus:
            return "0"
        head = "" if self.index == 1 else str(self.index)
        tail = "Z" if self.modulus == 0 else f"(Z/{self.modulus})"
        return f"{head}{tail}" if head else tail

    def is_proper(self) -> bool:
        """True when the image is a proper subgroup of the ambient cyclic group."""
        if self.modulus == 1:
            return False
        # index is gcd-normalized, so the image is everything exactly at index 1
        return self.index != 1


def image_description(h: AbHom) -> ImageDescriptor:
    """Image subgroup for a cyclic (or trivial) target."""
    if h.target.ngens == 0:
        return ImageDescriptor(1, 0)
    if h.target.ngens != 1:
        raise MalformedHomError("image description requires a cyclic target")
    modulus = h.target.factors[0]
    g = 0
    for e in h.matrix.row_lists()[0]:
        g = gcd(g, e)
    if modulus:
        g = gcd(g, modulus)
        if g == modulus:
            g = 0
    return ImageDescriptor(modulus, g)


# -- degree bookkeeping helpers ------------------------------------------------

def _need(answer: TableAnswer, what: str) -> FgAbGroup:
    if not answer.is_group():
        raise OutOfRangeError(f"{what}: {answer.provenance}")
    return answer.group


def _require_range(cond: bool, bound: str):
    if not cond:
        raise OutOfRangeError(f"violated bound: {bound}")


def _linear(parts, coeffs, target, name, bound) -> AbHom:
    """Single-row formula hom: sum of coeff * generator over nontrivial factors."""
    tgroup, tname = target
    src = FgAbGroup.product(*[g for g, _ in parts])
    names = tuple(nm for g, nm in parts for _ in g.factors)
    col = [c for (g, _), c in zip(parts, coeffs) for _ in g.factors]
    rows = [col for _ in tgroup.factors]
    return AbHom(
        src,
        tgroup,
        IntMatrix(tgroup.ngens, len(col), [x for row in rows for x in row]),
        names,
        (tname,) * tgroup.ngens if tgroup.ngens else (),
        provenance=name,
        valid_range=bound,
    )


# -- the formula table ---------------------------------------------------------

def hom_direct_sum(i: int, m: int, n: int) -> AbHom:
    """Induced map of the symplectic direct sum: (x, y) -> x + y."""
    bound = f"i < 4*min(m,n)+2 = {4 * min(m, n) + 2}"
    _require_range(0 <= i < 4 * min(m, n) + 2, bound)
    return _linear(
        [(_need(pi_sp(i, m), "pi_i Sp(m)"), f"pi_{i} Sp({m})"),
         (_need(pi_sp(i, n), "pi_i Sp(n)"), f"pi_{i} Sp({n})")],
        [1, 1],
        (_need(pi_sp(i, m + n), "pi_i Sp(m+n)"), f"pi_{i} Sp({m + n})"),
        "direct sum: x + y",
        bound,
    )


def hom_r_fold(i: int, n: int, r: int) -> AbHom:
    """Induced map of the r-fold direct sum: x -> r*x."""
    if r < 1:
        raise OutOfRangeError("violated bound: r >= 1")
    bound = f"i < 4n+2 = {4 * n + 2}"
    _require_range(0 <= i < 4 * n + 2, bound)
    return _linear(
        [(_need(pi_sp(i, n), "pi_i Sp(n)"), f"pi_{i} Sp({n})")],
        [r],
        (_need(pi_sp(i, r * n), "pi_i Sp(rn)"), f"pi_{i} Sp({r * n})"),
        f"{r}-fold direct sum: {r}*x",
        bound,
    )


def hom_doubling(i: int, n: int) -> AbHom:
    """Induced map of the doubling homomorphism O(n) -> Sp(n)."""
    bound = f"i < n-1 = {n - 1}"
    _require_range(0 <= i < n - 1, bound)
    coeff = 2 if i % 8 in (3, 7) else 0
    return _linear(
        [(_need(pi_o(i, n), "pi_i O(n)"), f"pi_{i} O({n})")],
        [coeff],
        (_need(pi_sp(i, n), "pi_i Sp(n)"), f"pi_{i} Sp({n})"),
        "doubling: 2*x onto the even part in degrees 3, 7 (mod 8); zero otherwise",
        bound,
    )


def hom_tensor_sp_o(i: int, m: int, n: int) -> AbHom:
    """Induced map of the symplectic-orthogonal tensor product: n*x + 2m*y."""
    bound = f"i < 4m+2 = {4 * m + 2} and i < n-1 = {n - 1}"
    _require_range(0 <= i < 4 * m + 2 and i < n - 1, bound)
    return _linear(
        [(_need(pi_sp(i, m), "pi_i Sp(m)"), f"pi_{i} Sp({m})"),
         (_need(pi_o(i, n), "pi_i O(n)"), f"pi_{i} O({n})")],
        [n, 2 * m],
        (_need(pi_sp(i, m * n), "pi_i Sp(mn)"), f"pi_{i} Sp({m * n})"),
        "tensor product: n*x + 2m*y",
        bound,
    )


def hom_tensor_quotient(i: int, m: int, n: int) -> AbHom:
    """Induced map of the tensor product on the center quotient, n odd.

    The formula n*x + 2m*y applies for i > 1; in degrees 0 and 1 the map
    is emitted as the explicit zero map.
    """
    if n % 2 == 0:
        raise EvenNError("quotient tensor product needs odd n")
    bound = f"i < 4m+2 = {4 * m + 2}" + ("" if i < 2 else f" and i < n-1 = {n - 1}")
    _require_range(0 <= i < 4 * m + 2, bound)
    if i >= 2:
        _require_range(i < n - 1, bound)
    parts = [(_need(pi_psp(i, m), "pi_i PSp(m)"), f"pi_{i} PSp({m})"),
             (_need(pi_so(i, n), "pi_i SO(n)"), f"pi_{i} SO({n})")]
    target = (_need(pi_psp(i, m * n), "pi_i PSp(mn)"), f"pi_{i} PSp({m * n})")
    if i <= 1:
        return _linear(parts, [0, 0], target,
                       "quotient tensor product: zero in degrees 0, 1", bound)
    return _linear(parts, [n, 2 * m], target,
                   "quotient tensor product: n*x + 2m*y", bound)


def hom_tensor_sp_sp(i: int, m: int, n: int) -> AbHom:
    """Induced map of the symplectic-symplectic tensor product into O(4mn)."""
    _require_range(m <= n, "m <= n")
    bound = f"i < 4m+2 = {4 * m + 2} and i < 4mn-1 = {4 * m * n - 1}"
    _require_range(0 <= i < 4 * m + 2 and i < 4 * m * n - 1, bound)
    r = i % 8
    coeffs = {3: [n, m], 7: [4 * n, 4 * m]}.get(r, [0, 0])
    return _linear(
        [(_need(pi_sp(i, m), "pi_i Sp(m)"), f"pi_{i} Sp({m})"),
         (_need(pi_sp(i, n), "pi_i Sp(n)"), f"pi_{i} Sp({n})")],
        coeffs,
        (_need(pi_o(i, 4 * m * n), "pi_i O(4mn)"), f"pi_{i} O({4 * m * n})"),
        "orthonormalized tensor product: n*x + m*y in degree 3, 4(n*x + m*y) in degree 7 (mod 8), zero otherwise",
        bound,
    )


def hom_square_tensor(i: int, m: int) -> AbHom:
    """Induced map of the self tensor product A -> A (x) A into O(4m^2)."""
    bound = f"i < 4m+2 = {4 * m + 2} and i < 4m^2-1 = {4 * m * m - 1}"
    _require_range(0 <= i < 4 * m + 2 and i < 4 * m * m - 1, bound)
    r = i % 8
    coeff = {3: 2 * m, 7: 8 * m}.get(r, 0)
    return _linear(
        [(_need(pi_sp(i, m), "pi_i Sp(m)"), f"pi_{i} Sp({m})")],
        [coeff],
        (_need(pi_o(i, 4 * m * m), "pi_i O(4m^2)"), f"pi_{i} O({4 * m * m})"),
        "squared tensor product: 2m*x in degree 3, 8m*x in degree 7 (mod 8), zero otherwise",
        bound,
    )


def _check_bezout(m: int, n: int, u: int, v: int):
    if u < 1 or v < 1 or abs(v * n - 4 * u * m * m) != 1:
        raise BadBezoutError(f"need positive u, v with |v*n - 4*u*m^2| = 1; got u={u}, v={v}")


def hom_ttilde(i: int, m: int, n: int, u: int, v: int, z: int | None = None):
    """Induced map of the auxiliary homomorphism into SO(N), N = 4um^2 + vn.

    In degree 1 the first coefficient is an undetermined z in Z/2; pass
    z = 0 or 1 to pin it, or leave it None to receive both candidates.
    """
    _check_bezout(m, n, u, v)
    cap = min(4 * m + 2, n - 1)
    bound = f"i < min(4m+2, n-1) = {cap}"
    _require_range(0 <= i < cap, bound)
    nn = 4 * u * m * m + v * n
    parts = [(_need(pi_psp(i, m), "pi_i PSp(m)"), f"pi_{i} PSp({m})"),
             (_need(pi_so(i, n), "pi_i SO(n)"), f"pi_{i} SO({n})")]
    target = (_need(pi_so(i, nn), "pi_i SO(N)"), f"pi_{i} SO({nn})")
    if i == 1:
        def mk(zz):
            return _linear(parts, [zz, 1], target,
                           f"auxiliary map in degree 1: z*x + y with z = {zz}", bound)
        if z is None:
            return ZDependent(mk(0), mk(1))
        return mk(z % 2)
    r = i % 8
    if i > 1 and r in (0, 1):
        coeffs, name = [0, v], "auxiliary map: v*y in degrees 0, 1 (mod 8)"
    elif r == 3:
        coeffs, name = [2 * u * m, v], "auxiliary map: 2um*x + v*y in degree 3 (mod 8)"
    elif r == 7:
        coeffs, name = [8 * u * m, v], "auxiliary map: 8um*x + v*y in degree 7 (mod 8)"
    else:
        coeffs, name = [0, 0], "auxiliary map: zero in degrees 2, 4, 5, 6 (mod 8)"
    return _linear(parts, coeffs, target, name, bound)


def hom_j(i: int, m: int, n: int, u: int | None = None, v: int | None = None,
          z: int | None = None):
    """Classifying-space pairing of the quotient tensor map with the auxiliary map.

    Degrees are classifying-space degrees; the underlying group degree is
    i - 1.  Degree 2 depends on the mod-2 parameter z exactly as the
    degree-1 auxiliary map does.
    """
    if n % 2 == 0:
        raise EvenNError("pairing map needs odd n")
    if gcd(m, n) != 1:
        raise NotCoprimeError(f"need gcd(m, n) = 1; got gcd({m}, {n}) = {gcd(m, n)}")
    cap = min(4 * m + 3, n)
    bound = f"0 < i < min(4m+3, n) = {cap}"
    _require_range(0 < i < cap, bound)
    if u is None or v is None:
        from sympdec.lifting import bezout_uv
        w = bezout_uv(m, n)
        u, v = w.u, w.v
    _check_bezout(m, n, u, v)
    nn = 4 * u * m * m + v * n
    g = i - 1
    if i == 2:
        source = FgAbGroup.product(
            _need(pi_classifying("psp", 2, m), "pi_2 B PSp(m)"),
            _need(pi_classifying("so", 2, n), "pi_2 B SO(n)"),
        )
        target = FgAbGroup.product(
            _need(pi_classifying("psp", 2, m * n), "pi_2 B PSp(mn)"),
            _need(pi_classifying("so", 2, nn), "pi_2 B SO(N)"),
        )
        names_s = (f"pi_2 B PSp({m})", f"pi_2 B SO({n})")

        def mk(zz):
            return AbHom(source, target,
                         IntMatrix.from_rows([[1, 0], [zz % 2, 1]]),
                         names_s,
                         (f"pi_2 B PSp({m * n})", f"pi_2 B SO({nn})"),
                         provenance=f"pairing map in degree 2: (x, z*x + y) with z = {zz % 2}",
                         valid_range=bound)
        if z is None:
            return ZDependent(mk(0), mk(1))
        return mk(z)
    if i == 1:
        # degree-0 groups are all trivial
        trivial = FgAbGroup.trivial()
        return AbHom(trivial, trivial, IntMatrix.zeros(0, 0),
                     provenance="pairing map in degree 1: trivial groups",
                     valid_range=bound)
    top = hom_tensor_quotient(g, m, n)
    bottom = hom_ttilde(g, m, n, u, v, 0)
    h = stack(top, bottom)
    return AbHom(h.source, h.target, h.matrix, h.source_names, h.target_names,
                 provenance=f"pairing map at classifying degree {i} (group degree {g})",
                 valid_range=bound)
