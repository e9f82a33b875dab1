"""Shared dataclasses for the severi_genus package.

These are the "shapes" of data passed between modules. They carry no formula
logic; the computations live in gw_counts, genus_invariants and
canonical_class.

HOW DATA FLOWS:
  1. gw_counts fills a GWTable with N_1..N_dmax
  2. genus_invariants reads the table and produces one GenusReport per degree
  3. canonical_class turns a ModuliSignature into a CanonicalExpansion
  4. the CLI wraps rows, warnings and Verdicts into an OutputDocument
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from .errors import DegreeOutOfRangeError, InvalidSignatureError


# ─────────────────────────────────────────────────────────────────────────────
# GROMOV-WITTEN TABLE
# ─────────────────────────────────────────────────────────────────────────────

@dataclass
class GWTable:
    """Memo table of N_1..N_max_degree, filled bottom-up by gw_counts.

    values[0] holds N_1. The table only ever grows; an entry, once written,
    is never changed. One thread writes, any number may read completed
    entries (gw_counts.shared_table() adds a lock around the writes).
    """
    values: list[int] = field(default_factory=list)

    @property
    def max_degree(self) -> int:
        return len(self.values)

    def __contains__(self, d: object) -> bool:
        return isinstance(d, int) and 1 <= d <= len(self.values)

    def __getitem__(self, d: int) -> int:
        if d < 1:
            raise DegreeOutOfRangeError(f"N_d is undefined for d={d}")
        if d > len(self.values):
            raise KeyError(f"N_{d} not computed yet (table holds 1..{len(self.values)})")
        return self.values[d - 1]

    def as_list(self) -> list[int]:
        return list(self.values)


# ─────────────────────────────────────────────────────────────────────────────
# GENUS REPORT
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(slots=True)
class GenusReport:
    """Every invariant computed for one degree d.

    Fields:
      N                  - N_d
      g                  - arithmetic genus of C_d (curve in the Severi variety)
      g_hat              - arithmetic genus of its Kontsevich-space model
      g_tilde            - geometric genus (common normalization)
      cusps              - 1-cuspidal rational curves through 3d-2 points
      lemma5_nodes       - genus contribution of the reducible-curve points of C_d
      M_relation         - M_d = (g_hat - g_tilde) / (3d-2); None for d < 3
      M_closed_form      - the printed closed form for M_d, exact; None for d < 3
      closed_form_ratio  - M_closed_form / M_relation; None for d < 3
      hat_nodes          - nodes of the Kontsevich-space model, (3d-2)·M_d
      identity_flags     - name → whether that consistency identity held
    """
    d:                 int
    N:                 int
    g:                 int
    g_hat:             int
    g_tilde:           int
    cusps:             int
    lemma5_nodes:      int
    M_relation:        int | None = None
    M_closed_form:     Fraction | None = None
    closed_form_ratio: Fraction | None = None
    hat_nodes:         int | None = None
    identity_flags: dict[str, bool] = field(default_factory=dict)

    @property
    def all_identities_hold(self) -> bool:
        return all(self.identity_flags.values())


# ─────────────────────────────────────────────────────────────────────────────
# MODULI SPACE + DIVISOR CLASSES
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class ModuliSignature:
    """The tuple (n, r, d) naming M_{0,n}(P^r, d) (genus is always 0)."""
    n: int
    r: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.d < 0:
            raise InvalidSignatureError(f"n and d must be >= 0, got n={self.n}, d={self.d}")
        if self.r < 2:
            raise InvalidSignatureError(f"only r >= 2 is handled, got r={self.r}")
        if self.d == 0 and self.n < 3:
            raise InvalidSignatureError(f"d=0 needs n >= 3 (M_0,n is empty otherwise), got n={self.n}")

    @property
    def is_excluded_case(self) -> bool:
        """[0,n,r,d] = [0,0,2,2]: the coarse-moduli reading of K fails here."""
        return (self.n, self.r, self.d) == (0, 2, 2)

    def to_dict(self) -> dict[str, int]:
        return {"n": self.n, "r": self.r, "d": self.d}


def is_stability_zero(i: int, j: int, n: int, d: int) -> bool:
    """True for D_{0,0}, D_{0,1}, D_{d,n-1}, D_{d,n}: the classes killed by stability."""
    return (i == 0 and j <= 1) or (i == d and j >= n - 1)


@dataclass(frozen=True, order=True, slots=True)
class BoundaryClassKey:
    """Canonical name (i, j) of the boundary class D_{i,j}.

    i is the degree on side A, j the number of markings on side A. Since
    D_{i,j} = D_{d-i,n-j}, the stored key is the lexicographically smaller of
    the two names.
    """
    i: int
    j: int

    @classmethod
    def canonical(cls, i: int, j: int, n: int, d: int) -> BoundaryClassKey:
        if not (0 <= i <= d and 0 <= j <= n):
            raise ValueError(f"(i, j)=({i}, {j}) outside 0..{d} x 0..{n}")
        # (i, j) and (d-i, n-j) name the same splitting from either side;
        # the smaller of the two is the one stored and compared.
        return cls(*min((i, j), (d - i, n - j)))

    def is_self_symmetric(self, n: int, d: int) -> bool:
        return 2 * self.i == d and 2 * self.j == n

    def label(self) -> str:
        return f"D({self.i},{self.j})"


@dataclass(frozen=True)
class CanonicalExpansion:
    """K expressed in the spanning set {H} ∪ {L_p} ∪ boundary classes.

    Sparse: a class with coefficient 0 is never stored, and l_coeff is the
    common coefficient of every L_p (it is 0 when n = 0). ``warnings`` holds
    machine-readable codes, see canonical_class.WARNING_TEXT.
    """
    signature: ModuliSignature
    h_coeff:   Fraction = Fraction(0)
    l_coeff:   Fraction = Fraction(0)
    boundary:  dict[BoundaryClassKey, Fraction] = field(default_factory=dict)
    warnings:  tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.signature.d == 0 and self.h_coeff != 0:
            raise ValueError("H = 0 when d = 0, so its coefficient must be 0")
        zeros = [k for k, c in self.boundary.items() if c == 0]
        if zeros:
            raise ValueError(f"zero coefficients must be dropped, found {zeros}")

    def sorted_boundary(self) -> list[tuple[BoundaryClassKey, Fraction]]:
        return sorted(self.boundary.items())


# ─────────────────────────────────────────────────────────────────────────────
# CLI OUTPUT
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(slots=True)
class Verdict:
    """One named pass/fail result of the verify suite."""
    name:   str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(slots=True)
class OutputDocument:
    """Everything one CLI command prints.

    rows hold strings only (decimal integers, "p/q" rationals, "*" or None
    for absent values), so no rendering path can produce a float.
    """
    command:    str
    parameters: dict[str, Any]
    rows:       list[dict[str, str | None]] = field(default_factory=list)
    warnings:   list[str] = field(default_factory=list)
    verdicts:   list[Verdict] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command":    self.command,
            "parameters": dict(self.parameters),
            "rows":       [dict(r) for r in self.rows],
            "warnings":   list(self.warnings),
            "verdicts":   [v.to_dict() for v in self.verdicts],
        }
