"""Batch verification suites behind the CLI verify command.

Every sample derives its randomness from (seed, suite, case label, index),
so reruns and parallel execution produce identical reports and every
failure record replays from its recorded inputs.  Matrix sizes are held
to the exact-arithmetic guard 2 * max_m * max_n * max_r <= 64.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import gcd

from sympdec import groups, induced
from sympdec.errors import BoundsTooLargeError
from sympdec.homotopy import pi_sp
from sympdec.induced import compose, diagonal_hom, hom_j, is_isomorphism
from sympdec.lifting import bezout_uv, connectivity_j
from sympdec.matrix import ExactMatrix

SUITES = ("closure", "lemmas", "mixed-product", "center", "formulas",
          "bezout", "J-iso", "all")

SIZE_GUARD = 64


@dataclass(frozen=True)
class Bounds:
    max_m: int = 2
    max_n: int = 3
    max_r: int = 2

    def check(self):
        if min(self.max_m, self.max_n, self.max_r) < 1:
            raise BoundsTooLargeError("bounds must be at least 1")
        if 2 * self.max_m * self.max_n * self.max_r > SIZE_GUARD:
            raise BoundsTooLargeError(
                f"2*max_m*max_n*max_r = {2 * self.max_m * self.max_n * self.max_r} "
                f"exceeds the size guard {SIZE_GUARD}"
            )


@dataclass
class VerifyReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, **inputs):
        self.cases += 1
        if not passed:
            self.failures.append(inputs)

    def to_json(self) -> dict:
        # elapsed time is reported on the human side only, keeping the JSON
        # byte-identical across runs with the same inputs and seed
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "ok": self.ok,
        }


def _case_seed(seed, suite: str, label: str, k: int) -> str:
    return f"{seed}:{suite}:{label}:{k}"


def run_closure(bounds: Bounds, samples: int, seed) -> VerifyReport:
    """Every construction lands in its claimed group, by exact predicate."""
    bounds.check()
    rep = VerifyReport("closure")

    def pick(label, k, lo, hi):
        return random.Random(_case_seed(seed, "closure", label, k)).randint(lo, hi)

    for k in range(samples):
        m = pick("ds:m", k, 1, bounds.max_m)
        n = pick("ds:n", k, 1, bounds.max_n)
        a = groups.random_sp(m, _case_seed(seed, "closure", "ds:A", k))
        b = groups.random_sp(n, _case_seed(seed, "closure", "ds:B", k))
        rep.record(groups.is_symplectic(groups.direct_sum_sp(a, b)),
                   op="direct-sum", k=k, m=m, n=n)

        n2 = pick("rf:n", k, 1, bounds.max_n)
        r = pick("rf:r", k, 1, bounds.max_r)
        a = groups.random_sp(n2, _case_seed(seed, "closure", "rf:A", k))
        rep.record(groups.is_symplectic(groups.r_fold_sum_sp(a, r)),
                   op="r-fold", k=k, n=n2, r=r)

        r = pick("sj:r", k, 1, bounds.max_r)
        j = pick("sj:j", k, 1, r)
        n3 = pick("sj:n", k, 1, bounds.max_n)
        a = groups.random_sp(n3, _case_seed(seed, "closure", "sj:A", k))
        rep.record(groups.is_symplectic(groups.stabilization_sj(a, j, r)),
                   op="stabilization-j", k=k, n=n3, r=r, j=j)

        n4 = pick("d:n", k, 1, 2 * bounds.max_n)
        b = groups.random_so(n4, _case_seed(seed, "closure", "d:A", k))
        rep.record(groups.is_symplectic(groups.doubling(b)),
                   op="doubling", k=k, n=n4)

        m5 = pick("to:m", k, 1, bounds.max_m)
        n5 = pick("to:n", k, 1, bounds.max_n)
        a = groups.random_sp(m5, _case_seed(seed, "closure", "to:A", k))
        b = groups.random_so(n5, _case_seed(seed, "closure", "to:B", k))
        rep.record(groups.is_symplectic(groups.tensor_sp_o(a, b)),
                   op="tensor-sp-o", k=k, m=m5, n=n5)

        m6 = pick("tt:m", k, 1, bounds.max_m)
        n6 = pick("tt:n", k, 1, bounds.max_n)
        a = groups.random_sp(m6, _case_seed(seed, "closure", "tt:A", k))
        b = groups.random_sp(n6, _case_seed(seed, "closure", "tt:B", k))
        rep.record(groups.is_orthogonal(groups.tensor_sp_sp(a, b)),
                   op="tensor-sp-sp", k=k, m=m6, n=n6)
    return rep


def run_lemmas(bounds: Bounds, samples: int, seed) -> VerifyReport:
    """Exact conjugation identities behind both stabilization lemmas."""
    bounds.check()
    rep = VerifyReport("lemmas")
    for n in range(1, bounds.max_n + 1):
        for r in range(2, bounds.max_r + 1):
            for j in range(1, r):
                for k in range(samples):
                    a = groups.random_sp(n, _case_seed(seed, "lemmas", f"sj:{n}:{r}:{j}", k))
                    rep.record(groups.verify_sj_conjugation(a, j, r),
                               op="sj-conjugation", n=n, r=r, j=j, k=k)
    for m in range(1, bounds.max_m + 1):
        for n in range(1, bounds.max_n + 1):
            for k in range(samples):
                a = groups.random_sp(m, _case_seed(seed, "lemmas", f"L:{m}:{n}", k))
                rep.record(groups.verify_l_conjugation(a, n),
                           op="L-conjugation", m=m, n=n, k=k)
    return rep


def run_mixed_product(bounds: Bounds, samples: int, seed) -> VerifyReport:
    """Kronecker mixed-product identity on random invertible matrices."""
    bounds.check()
    rep = VerifyReport("mixed-product")
    for k in range(samples):
        rng = random.Random(_case_seed(seed, "mixed-product", "pq", k))
        p = rng.randint(1, 2 * bounds.max_m)
        q = rng.randint(1, 2 * bounds.max_n)
        a = groups.random_gl(p, _case_seed(seed, "mixed-product", "A", k))
        b = groups.random_gl(q, _case_seed(seed, "mixed-product", "B", k))
        rep.record(groups.verify_mixed_product(a, b), op="mixed-product", k=k, p=p, q=q)
    return rep


def run_center(bounds: Bounds, samples: int, seed) -> VerifyReport:
    """The tensor product carries the center to the center."""
    bounds.check()
    rep = VerifyReport("center")
    for m in range(1, bounds.max_m + 1):
        for n in range(1, bounds.max_n + 1):
            neg = -ExactMatrix.identity(2 * m)
            got = groups.tensor_sp_o(neg, ExactMatrix.identity(n))
            rep.record(got == -ExactMatrix.identity(2 * m * n),
                       op="center-to-center", m=m, n=n)
            for k in range(samples):
                a = groups.random_sp(m, _case_seed(seed, "center", f"A:{m}:{n}", k))
                b = groups.random_so(n, _case_seed(seed, "center", f"B:{m}:{n}", k))
                rep.record(groups.tensor_sp_o(-a, b) == -groups.tensor_sp_o(a, b),
                           op="center-sign", m=m, n=n, k=k)
    return rep


def _tensor_decomposition_consistent(i: int, m: int, n: int) -> bool:
    """tensor formula equals its left part (n-fold sum) plus right part (m * doubling)."""
    tensor = induced.hom_tensor_sp_o(i, m, n)
    left = induced.hom_r_fold(i, m, n)
    right = induced.hom_doubling(i, n)
    expected_cols = []
    for col in range(left.matrix.cols):
        expected_cols.append([left.matrix.entry(r, col) for r in range(left.matrix.rows)])
    for col in range(right.matrix.cols):
        expected_cols.append([m * right.matrix.entry(r, col) for r in range(right.matrix.rows)])
    got = tensor.matrix
    if got.cols != len(expected_cols):
        return False
    for c, colvals in enumerate(expected_cols):
        if len(colvals) != got.rows:
            return False
        for r, val in enumerate(colvals):
            order = tensor.target.factors[r]
            want = val % order if order else val
            if got.entry(r, c) != want:
                return False
    return True


def _square_tensor_consistent(i: int, m: int) -> bool:
    """square tensor formula equals the two-variable formula composed with the diagonal."""
    square = induced.hom_square_tensor(i, m)
    both = induced.hom_tensor_sp_sp(i, m, m)
    diag = diagonal_hom(pi_sp(i, m).group)
    composed = compose(both, diag)
    return (square.source == composed.source and square.target == composed.target
            and square.matrix == composed.matrix)


def run_formulas(bounds: Bounds, samples: int, seed) -> VerifyReport:
    """Structural consistency of the induced-map formula table."""
    del samples, seed  # the enumeration is exhaustive over the bounds
    rep = VerifyReport("formulas")
    top = max(bounds.max_m, bounds.max_n, 5)
    for m in range(1, top + 1):
        for n in range(1, top + 1):
            for i in range(0, min(4 * m + 2, n - 1)):
                rep.record(_tensor_decomposition_consistent(i, m, n),
                           op="tensor-left-right", i=i, m=m, n=n)
        for i in range(0, min(4 * m + 2, 4 * m * m - 1)):
            rep.record(_square_tensor_consistent(i, m),
                       op="square-diagonal", i=i, m=m)
    return rep


def run_bezout(bounds: Bounds, samples: int, seed, max_m: int | None = None,
               max_n: int | None = None) -> VerifyReport:
    """Exhaustive witness identities over coprime m with odd n."""
    del samples, seed
    rep = VerifyReport("bezout")
    mm = max_m if max_m is not None else 5 * bounds.max_m
    nn = max_n if max_n is not None else 33 * bounds.max_n
    for m in range(1, mm + 1):
        for n in range(3, nn + 1, 2):
            if gcd(m, n) != 1:
                continue
            w = bezout_uv(m, n)
            identity = abs(w.v * n - 4 * w.u * m * m) == 1
            total = w.N == 4 * w.u * m * m + w.v * n
            again = bezout_uv(m, n)
            rep.record(identity and total and again == w and w.u > 0 and w.v > 0,
                       op="bezout", m=m, n=n, u=w.u, v=w.v, sign=w.sign, N=w.N)
    return rep


def run_j_iso(bounds: Bounds, samples: int, seed, max_m: int | None = None,
              max_n: int | None = None) -> VerifyReport:
    """Pairing map invertibility in every required degree, for both z values."""
    del samples, seed
    rep = VerifyReport("J-iso")
    mm = max_m if max_m is not None else max(2, 2 * bounds.max_m)
    nn = max_n if max_n is not None else max(9, 6 * bounds.max_n)
    for m in range(2, mm + 1):
        for n in range(9, nn + 1, 2):
            if gcd(m, n) != 1:
                continue
            w = bezout_uv(m, n)
            for i in range(1, min(4 * m + 3, n)):
                if i % 8 == 0:
                    continue
                for z in (0, 1):
                    h = hom_j(i, m, n, w.u, w.v, z)
                    rep.record(is_isomorphism(h), op="J-iso", m=m, n=n, i=i, z=z)
            rep.record(connectivity_j(m, n) == 7, op="J-connectivity", m=m, n=n)
    return rep


_RUNNERS = {
    "closure": run_closure,
    "lemmas": run_lemmas,
    "mixed-product": run_mixed_product,
    "center": run_center,
    "formulas": run_formulas,
    "bezout": run_bezout,
    "J-iso": run_j_iso,
}


def run_suite(name: str, bounds: Bounds, samples: int, seed) -> list[VerifyReport]:
    """Run one named suite (or all of them); returns one report per suite."""
    bounds.check()
    if samples < 1:
        raise ValueError("samples must be at least 1")
    names = list(_RUNNERS) if name == "all" else [name]
    if any(n not in _RUNNERS for n in names):
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
    reports = []
    for n in names:
        start = time.perf_counter()
        rep = _RUNNERS[n](bounds, samples, seed)
        rep.elapsed = time.perf_counter() - start
        reports.append(rep)
    return reports
