"""Homotopy groups of the classical complex groups in their tabulated ranges.

Answers are exact group descriptions with a provenance string naming the
table rule used.  Degrees outside a family's tabulated range come back as
an explicit out-of-range marker, never as a guess; three unstable special
orthogonal degrees are recorded as torsion-only markers because only that
much is tabulated.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from sympdec.abgroup import FgAbGroup

GROUP = "group"
TORSION_ONLY = "torsion-only"
OUT_OF_RANGE = "out-of-range"

FAMILIES = ("sp", "psp", "so", "o", "u", "gl")

# stable tables, indexed by degree mod 8 (factor tuples for FgAbGroup)
_SP_STABLE = {0: (), 1: (), 2: (), 3: (0,), 4: (2,), 5: (2,), 6: (), 7: (0,)}
_SO_STABLE = {0: (2,), 1: (2,), 2: (), 3: (0,), 4: (), 5: (), 6: (), 7: (0,)}

# unstable special orthogonal degrees recorded only as torsion
_SO_TORSION_PAIRS = {(7, 3), (11, 5), (15, 7)}


@dataclass(frozen=True)
class TableAnswer:
    kind: str                      # GROUP, TORSION_ONLY or OUT_OF_RANGE
    group: FgAbGroup | None
    provenance: str

    @classmethod
    def of(cls, factors, provenance: str) -> "TableAnswer":
        return cls(GROUP, FgAbGroup(factors), provenance)

    @classmethod
    def torsion_only(cls, provenance: str) -> "TableAnswer":
        return cls(TORSION_ONLY, None, provenance)

    @classmethod
    def out_of_range(cls, provenance: str) -> "TableAnswer":
        return cls(OUT_OF_RANGE, None, provenance)

    def is_group(self) -> bool:
        return self.kind == GROUP

    def to_json(self) -> dict:
        body = list(self.group.factors) if self.kind == GROUP else self.kind
        return {"group": body, "provenance": self.provenance}


def pi_sp(i: int, n: int) -> TableAnswer:
    """Homotopy of the rank-n complex symplectic group (matrices of size 2n)."""
    _check(i, n)
    if i < 4 * n:
        return TableAnswer.of(
            _SP_STABLE[i % 8],
            f"symplectic stable table (8-periodic), i = {i} < 4n = {4 * n}",
        )
    if i in (4 * n, 4 * n + 1):
        factors = (2,) if n % 2 else ()
        return TableAnswer.of(
            factors,
            f"symplectic boundary degree {i}: Z/2 for odd n, trivial for even n (n = {n})",
        )
    if i == 4 * n + 2:
        order = factorial(2 * n + 1) * (2 if n % 2 else 1)
        return TableAnswer.of(
            (order,),
            f"first unstable symplectic degree 4n+2: cyclic of order (2n+1)!"
            f"{' doubled for odd n' if n % 2 else ''}",
        )
    return TableAnswer.out_of_range(
        f"degree {i} beyond tabulated symplectic range 4n+2 = {4 * n + 2}"
    )


def pi_psp(i: int, n: int) -> TableAnswer:
    """Homotopy of the projective symplectic group (quotient by the center)."""
    _check(i, n)
    if i == 0:
        return TableAnswer.of((), "projective symplectic group is connected")
    if i == 1:
        return TableAnswer.of((2,), "fundamental group of the center quotient is Z/2")
    inner = pi_sp(i, n)
    if inner.kind != GROUP:
        return inner
    return TableAnswer(GROUP, inner.group, f"center quotient agrees above degree 1; {inner.provenance}")


def pi_so(i: int, n: int) -> TableAnswer:
    """Homotopy of the complex special orthogonal group."""
    _check(i, n)
    if i == 0:
        return TableAnswer.of((), "special orthogonal group is connected")
    if 0 < i < n - 1:
        return TableAnswer.of(
            _SO_STABLE[i % 8],
            f"orthogonal stable table (8-periodic), i = {i} < n-1 = {n - 1}",
        )
    if (i, n) in _SO_TORSION_PAIRS:
        return TableAnswer.torsion_only(
            f"unstable degree ({i}, {n}) recorded as torsion-only"
        )
    return TableAnswer.out_of_range(
        f"degree {i} beyond tabulated orthogonal range n-2 = {n - 2}"
    )


def pi_o(i: int, n: int) -> TableAnswer:
    """Homotopy of the full complex orthogonal group (two components)."""
    _check(i, n)
    if i == 0:
        return TableAnswer.of((2,), "orthogonal group has two components")
    return pi_so(i, n)


def pi_u_gl(i: int, n: int) -> TableAnswer:
    """Homotopy of U(n) (equivalently GL(n, C)) in the stable range i < 2n."""
    _check(i, n)
    if i >= 2 * n:
        return TableAnswer.out_of_range(
            f"degree {i} beyond tabulated unitary range 2n-1 = {2 * n - 1}"
        )
    if i == 0:
        return TableAnswer.of((), "unitary group is connected")
    factors = (0,) if i % 2 else ()
    return TableAnswer.of(
        factors, f"unitary stable table (2-periodic), i = {i} < 2n = {2 * n}"
    )


_GROUP_TABLES = {
    "sp": pi_sp,
    "psp": pi_psp,
    "so": pi_so,
    "o": pi_o,
    "u": pi_u_gl,
    "gl": pi_u_gl,
}


def pi_classifying(family: str, i: int, n: int) -> TableAnswer:
    """Homotopy of the classifying space: degree shift pi_i B G = pi_{i-1} G.

    The single recorded exception: for the projective symplectic family at
    degree 4n+4 the shifted degree lies one past the boundary pair, and the
    value Z/2 is stored as a fixed constant rather than derived from the
    stable table.
    """
    if family not in _GROUP_TABLES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if i < 1:
        raise ValueError("classifying-space degrees start at 1")
    if family == "psp" and i == 4 * n + 4:
        return TableAnswer.of(
            (2,),
            "recorded constant: degree 4n+4 of the projective symplectic "
            "classifying space is Z/2 (one past the shifted boundary pair)",
        )
    inner = _GROUP_TABLES[family](i - 1, n)
    return TableAnswer(inner.kind, inner.group, f"classifying-space shift to degree {i - 1}; {inner.provenance}")


def pi_table(family: str, i: int, n: int, space: str = "group") -> TableAnswer:
    """Dispatch a table query for the CLI: space is 'group' or 'classifying'."""
    if space == "classifying":
        return pi_classifying(family, i, n)
    if space != "group":
        raise ValueError(f"unknown space {space!r}")
    if family not in _GROUP_TABLES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return _GROUP_TABLES[family](i, n)


def _check(i: int, n: int):
    if i < 0:
        raise ValueError("degree must be nonnegative")
    if n < 1:
        raise ValueError("size parameter must be positive")
