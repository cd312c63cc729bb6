"""Immanants of non-fundamental representation matrices.

An immanant of a lifted irrep matrix is still a finite combination of group
functions; the combination is recovered by least-squares regression over
Haar-sampled group elements.  Candidate group functions are restricted by
torus covariance (only pairs connecting the correct left/right weights can
contribute) and then pruned by a preliminary fit, so the final solve runs
over the empirically supported set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import math

import numpy as np

from .errors import DomainError, RankDeficiencyError
from .linalgimm import haar_random_unitary, immanant, permanent_ryser
from .reports import VerificationReport
from .symgroup import Partition, dim_sym
from .sunrep import (
    GTPattern,
    SUIrrepLabel,
    chain_label,
    dim_weyl,
    gt_basis,
    lift,
    weight_of,
)

DEFAULT_SEED = 1905


@dataclass(frozen=True)
class DCandidate:
    """One basis function D^{(irrep)}_{rt} in a decomposition ansatz."""

    irrep: SUIrrepLabel
    r: GTPattern
    t: GTPattern

    @property
    def diagonal(self) -> bool:
        return self.r == self.t

    def tag(self) -> str:
        return f"{tuple(self.irrep.row)}:{chain_label(self.r)};{chain_label(self.t)}"


@dataclass
class PlethysmProblem:
    """Decompose Imm^{partition} of the lifted ``base_irrep`` matrix."""

    base_irrep: SUIrrepLabel
    partition: Partition
    candidates: list[DCandidate]
    label: str = ""

    def __post_init__(self):
        if self.partition.n != dim_weyl(self.base_irrep):
            raise DomainError(
                f"partition {self.partition} must be a partition of the base matrix "
                f"side {dim_weyl(self.base_irrep)}"
            )


@dataclass
class DecompositionResult:
    coefficients: list[tuple[DCandidate, complex]]
    residual: float
    sample_count: int
    gram_condition: float
    pruned: list[tuple[DCandidate, complex]] = field(default_factory=list)

    def coefficient(self, cand: DCandidate) -> complex:
        for c, val in self.coefficients + self.pruned:
            if c == cand:
                return val
        raise KeyError(cand)

    def diagonal_sum(self) -> complex:
        return sum(v for c, v in self.coefficients if c.diagonal)

    def to_records(self) -> list[dict]:
        out = []
        for cand, val in self.coefficients:
            out.append(
                {
                    "irrep": list(cand.irrep.row),
                    "r": cand.r.as_lists(),
                    "t": cand.t.as_lists(),
                    "tag": cand.tag(),
                    "value": [float(val.real), float(val.imag)],
                    "rational": recognize_value(val.real) if abs(val.imag) < 1e-9 else None,
                    "pruned": False,
                }
            )
        for cand, val in self.pruned:
            out.append(
                {
                    "irrep": list(cand.irrep.row),
                    "r": cand.r.as_lists(),
                    "t": cand.t.as_lists(),
                    "tag": cand.tag(),
                    "value": [float(val.real), float(val.imag)],
                    "rational": None,
                    "pruned": True,
                }
            )
        return out


def _diagonal_product_weight(base: SUIrrepLabel) -> tuple[int, ...]:
    """Occupation of the product-over-all-basis-states tensor state."""
    occ = np.zeros(base.m, dtype=int)
    for p in gt_basis(base):
        occ += np.array(weight_of(p).occupation)
    return tuple(int(x) for x in occ)


def torus_candidates(base: SUIrrepLabel, irreps: list[SUIrrepLabel]) -> list[DCandidate]:
    """All D^{(irrep)}_{rt} whose left/right Cartan weights match the target.

    The immanant of a lifted matrix transforms under the maximal torus with
    the weight of the diagonal product state on both sides, so only pattern
    pairs at that Cartan weight can carry nonzero coefficients.
    """
    from .sunrep import WeightVector

    target = WeightVector(_diagonal_product_weight(base)).cartan
    cands = []
    for ir in irreps:
        pats = [p for p in gt_basis(ir) if weight_of(p).cartan == target]
        for r in pats:
            for t in pats:
                cands.append(DCandidate(ir, r, t))
    return cands


def su2_power_problem(two_j: int, partition: Partition) -> PlethysmProblem:
    """Imm^{partition} of the (2J+1)-dimensional SU(2) irrep matrix.

    Candidates are D^{J'}_{00} for every integer J' up to N * J.
    """
    base = SUIrrepLabel(2, (two_j, 0))
    n = partition.n
    top = n * two_j // 2
    irreps = [SUIrrepLabel(2, (2 * jp, 0)) for jp in range(top + 1)]
    cands = torus_candidates(base, irreps)
    return PlethysmProblem(base, partition, cands, label=f"su2:J={Fraction(two_j, 2)}")


# SU(3) irreps occurring in the symmetric sixth power of the two-box irrep,
# as u(3) rows inside the 12-box tensor space (round labels: (12,0), (8,2),
# (4,4), (6,0), (0,6), (0,0)).
SU3_SEXTIC_ROWS = (
    (12, 0, 0),
    (10, 2, 0),
    (8, 4, 0),
    (6, 0, 0),
    (6, 6, 0),
    (0, 0, 0),
)


def su3_sextic_permanent_problem() -> PlethysmProblem:
    """Permanent of the 6x6 matrix carrying the SU(3) two-box irrep."""
    base = SUIrrepLabel(3, (2, 0, 0))
    irreps = [SUIrrepLabel(3, row) for row in SU3_SEXTIC_ROWS]
    cands = torus_candidates(base, irreps)
    return PlethysmProblem(base, Partition(6), cands, label="su3:(2,0) permanent")


def _target_value(problem: PlethysmProblem, lifted: np.ndarray) -> complex:
    p = problem.partition
    if len(p) == 1:  # permanent: Ryser is exact and much faster than the n! sum
        return permanent_ryser(lifted)
    return immanant(p, lifted)


def fit_decomposition(
    problem: PlethysmProblem,
    samples: int = 60,
    seed: int = DEFAULT_SEED,
    prune_tol: float = 1e-9,
    cond_cap: float = 1e8,
) -> DecompositionResult:
    """Least-squares coefficients of the immanant over the candidate set.

    A preliminary fit over all candidates (with at least 3x as many samples
    as unknowns) locates the support; candidates below ``prune_tol`` are
    dropped and the survivors are refit at the requested sample count.
    Deterministic for a fixed seed.
    """
    cands = problem.candidates
    if not cands:
        raise DomainError("no candidates to fit")
    m = problem.base_irrep.m
    prelim_samples = max(samples, 3 * len(cands))

    cache: dict[int, tuple[complex, dict]] = {}
    irreps = sorted({c.irrep for c in cands}, key=lambda ir: ir.row)
    indices = {
        ir: {p: i for i, p in enumerate(gt_basis(ir))} for ir in irreps
    }

    def sample_row(i: int):
        if i not in cache:
            omega = haar_random_unitary(m, seed + i)
            base_mat = lift(problem.base_irrep, omega).matrix
            lifts = {ir: lift(ir, omega).matrix for ir in irreps}
            cache[i] = (_target_value(problem, base_mat), lifts)
        return cache[i]

    def design(nsamples: int, subset: list[DCandidate]):
        X = np.empty((nsamples, len(subset)), dtype=np.complex128)
        y = np.empty(nsamples, dtype=np.complex128)
        for i in range(nsamples):
            target, lifts = sample_row(i)
            y[i] = target
            for c, cand in enumerate(subset):
                idx = indices[cand.irrep]
                X[i, c] = lifts[cand.irrep][idx[cand.r], idx[cand.t]]
        return X, y

    def solve(X, y, subset):
        svals = np.linalg.svd(X, compute_uv=False)
        cond = float(svals[0] / svals[-1]) if svals[-1] > 0 else math.inf
        if cond > cond_cap:
            gram = np.abs(X.conj().T @ X)
            norms = np.sqrt(np.diagonal(gram).real)
            overlap = gram / np.outer(norms, norms)
            np.fill_diagonal(overlap, 0.0)
            a, b = np.unravel_index(np.argmax(overlap), overlap.shape)
            raise RankDeficiencyError(
                f"candidate functions are near-dependent (condition {cond:.3e}); "
                f"worst pair: {subset[a].tag()} ~ {subset[b].tag()}"
            )
        coef, *_ = np.linalg.lstsq(X, y, rcond=None)
        residual = float(np.abs(X @ coef - y).max())
        return coef, residual, cond

    X0, y0 = design(prelim_samples, cands)
    coef0, _, _ = solve(X0, y0, cands)
    survivors = [c for c, v in zip(cands, coef0) if abs(v) >= prune_tol]
    pruned = [(c, complex(v)) for c, v in zip(cands, coef0) if abs(v) < prune_tol]
    if not survivors:
        return DecompositionResult([], float(np.abs(y0).max()), prelim_samples, 1.0, pruned)
    if samples < 3 * len(survivors):
        raise DomainError(
            f"{samples} samples < 3x the {len(survivors)} supported candidates"
        )
    X1, y1 = design(samples, survivors)
    coef1, residual, cond = solve(X1, y1, survivors)
    return DecompositionResult(
        coefficients=[(c, complex(v)) for c, v in zip(survivors, coef1)],
        residual=residual,
        sample_count=samples,
        gram_condition=cond,
        pruned=pruned,
    )


def candidate_irreps_su2(two_j: int, partition: Partition, samples: int = 60, seed: int = DEFAULT_SEED):
    """Empirical J-support of Imm^{partition} over the spin-J irrep matrix.

    Returns (J as Fraction, coefficient) pairs for every supported J.
    """
    problem = su2_power_problem(two_j, partition)
    result = fit_decomposition(problem, samples=samples, seed=seed)
    out = []
    for cand, val in result.coefficients:
        out.append((Fraction(cand.irrep.row[0], 2), val))
    return out


def diagonal_sum_check(
    result: DecompositionResult, partition: Partition, tol: float = 1e-8
) -> VerificationReport:
    """Diagonal coefficients must sum to the S_N irrep dimension."""
    total = result.diagonal_sum()
    expected = dim_sym(partition)
    residual = abs(total - expected)
    return VerificationReport(
        suite="plethysm-diagonal-sum",
        partition=partition.parts,
        residual=float(residual),
        passed=bool(residual < tol),
        details={
            "diagonal_sum": [float(total.real), float(total.imag)],
            "expected": expected,
        },
    )


def _square_split(n: int) -> tuple[int, int]:
    """n = a^2 * c with c squarefree (trial division; n stays small here)."""
    a, c, d = 1, 1, 2
    while d * d <= n:
        power = 0
        while n % d == 0:
            n //= d
            power += 1
        a *= d ** (power // 2)
        if power % 2:
            c *= d
        d += 1
    return a, c * n


def recognize_value(x: float, tol: float = 1e-7, max_den: int = 1000) -> str | None:
    """Match a float against small rationals p/q or surds (a/b)*sqrt(c/d).

    A surd is accepted only when the squarefree parts c, d stay small, which
    keeps generic floats unmatched; unmatched values are reported as floats
    by the callers.
    """
    if x == 0.0:
        return "0"
    frac = Fraction(x).limit_denominator(max_den)
    if frac != 0 and abs(x - float(frac)) < tol:
        return str(frac)
    sq = Fraction(x * x).limit_denominator(max_den**4)
    if sq > 0:
        a, c = _square_split(sq.numerator)
        b, d = _square_split(sq.denominator)
        value = (a / b) * math.sqrt(c / d)
        if c <= max_den and d <= max_den and b <= max_den**2 and abs(abs(x) - value) < tol:
            sign = "-" if x < 0 else ""
            radicand = str(c) if d == 1 else f"{c}/{d}"
            if a == b:
                return f"{sign}sqrt({radicand})"
            return f"{sign}({a}/{b})*sqrt({radicand})"
    return None
