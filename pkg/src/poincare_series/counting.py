"""Weight counting for systems of binary forms.

A system is a multiset of form degrees d = (d_1, ..., d_s). Each form of
degree d_k contributes the weight ladder d_k, d_k - 2, ..., -d_k; the
number of degree-m monomials of a prescribed total weight counts the
lattice points of a transportation-type polytope, and differences of
those counts give the graded dimensions of the invariant and
semi-invariant algebras (equivalently, of the kernel and the image
closure of the associated Weitzenboeck derivation).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

KINDS = ("invariants", "semiinvariants")

# exponent -> multiplicity map of the shifted generating function
# prod over e of (1 - t z^e)^(-beta_e)
FactorExponents = dict


@dataclass(frozen=True)
class DegreeVector:
    """Degrees of the system, stored sorted descending; entries must be >= 1."""

    degrees: tuple

    def __post_init__(self):
        degs = tuple(sorted((int(d) for d in self.degrees), reverse=True))
        if not degs:
            raise ValueError("degree vector must be nonempty")
        if degs[-1] < 1:
            raise ValueError("degrees must be positive integers")
        object.__setattr__(self, "degrees", degs)

    @property
    def size(self) -> int:
        return len(self.degrees)

    @property
    def d_star(self) -> int:
        return self.degrees[0]

    @property
    def variable_count(self) -> int:
        # one ladder slot per coefficient of each form
        return sum(d + 1 for d in self.degrees)

    def weights(self) -> tuple:
        """Weight multiset {d_k - 2j : 0 <= j <= d_k}, descending."""
        out = []
        for d in self.degrees:
            out.extend(d - 2 * j for j in range(d + 1))
        return tuple(sorted(out, reverse=True))

    def __str__(self):
        return ",".join(str(d) for d in self.degrees)


def as_degree_vector(d) -> DegreeVector:
    if isinstance(d, DegreeVector):
        return d
    if isinstance(d, int):
        return DegreeVector((d,))
    return DegreeVector(tuple(d))


def build_factored_gf(d) -> FactorExponents:
    """Exponent multiplicities of the weight-shifted generating function.

    Shifting t -> t z^(d*) turns the weight w into the nonnegative
    exponent d* - w, so the result maps e in 0..2d* to the number of
    ladder slots with d* - weight = e. The multiplicities are symmetric
    about d* and sum to the number of variables.
    """
    d = as_degree_vector(d)
    shift = d.d_star
    beta: dict[int, int] = {}
    for w in d.weights():
        e = shift - w
        beta[e] = beta.get(e, 0) + 1
    return beta


@lru_cache(maxsize=None)
def _omega_row(degrees: tuple, m: int) -> tuple:
    """Counts of degree-m monomials for every reachable weight.

    Returns (offset, counts) with counts[w + offset] the number of
    monomials of total weight w. Classic unbounded-knapsack dynamic
    program: each variable adds (degree 1, its weight) any number of
    times.
    """
    d = DegreeVector(degrees)
    span = m * d.d_star
    width = 2 * span + 1
    table = [[0] * width for _ in range(m + 1)]
    table[0][span] = 1
    for w in d.weights():
        for deg in range(1, m + 1):
            prev = table[deg - 1]
            cur = table[deg]
            lo = max(0, w)
            hi = min(width, width + w)
            for idx in range(lo, hi):
                c = prev[idx - w]
                if c:
                    cur[idx] += c
    return span, tuple(table[m])


def omega(d, m: int, i: int) -> int:
    """Number of monomials of total degree m and weight i in the system's variables."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    d = as_degree_vector(d)
    span, row = _omega_row(d.degrees, m)
    idx = i + span
    if idx < 0 or idx >= len(row):
        return 0
    return row[idx]


def gamma(d, m: int, k: int) -> int:
    """Multiplicity of the weight-k isotypic piece in degree m: omega(k) - omega(k+2).

    Always nonnegative; a negative difference can only come from a
    counting bug, so it is raised, never returned.
    """
    value = omega(d, m, k) - omega(d, m, k + 2)
    if value < 0:
        raise RuntimeError(
            f"negative multiplicity gamma_{m}({d}; {k}); counting is inconsistent"
        )
    return value


def dimension(d, m: int, kind: str) -> int:
    """Graded dimension in degree m: invariant or semi-invariant count."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if kind == "invariants":
        return omega(d, m, 0) - omega(d, m, 2)
    return omega(d, m, 0) + omega(d, m, 1)


@dataclass(frozen=True)
class MultiplicityTable:
    """All isotypic multiplicities of one graded piece."""

    d: DegreeVector
    m: int
    entries: tuple  # ((k, gamma_k), ...) for k = 0..m*d_star

    def total(self) -> int:
        """Dimension of the full degree-m piece: sum of gamma_k * (k + 1)."""
        return sum(g * (k + 1) for k, g in self.entries)

    def expected_total(self) -> int:
        n = self.d.variable_count
        return comb(self.m + n - 1, n - 1)


def multiplicity_table(d, m: int) -> MultiplicityTable:
    d = as_degree_vector(d)
    entries = tuple((k, gamma(d, m, k)) for k in range(m * d.d_star + 1))
    return MultiplicityTable(d, m, entries)
