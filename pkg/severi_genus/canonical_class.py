"""Canonical class of M_{0,n}(P^r, d) as an exact divisor-class expansion.

Pic ⊗ Q is spanned (not necessarily freely) by

  H         maps meeting a fixed codimension-2 linear space (H = 0 if d = 0)
  L_p       pullback of O(1) by the p-th evaluation map, p = 1..n
  D_{i,j}   reduced sum of the boundary components whose domain splits into
            a side A of degree i carrying j markings and a side B with the rest

D_{i,j} = D_{d-i,n-j}, and D_{0,0}, D_{0,1}, D_{d,n-1}, D_{d,n} vanish by
stability. Three closed forms give K:

  d = 0          K = Σ_{j=2}^{⌊n/2⌋} ( j(n-j)/(n-1) - 2 ) D_{0,j}
  d > 0, n = 0   K = -(d+1)(r+1)/(2d) H + Σ_{i=1}^{⌊d/2⌋} ( (r+1)(d-i)i/(2d) - 2 ) D_{i,0}
  d > 0, n > 0   K = -((d+1)(r+1)d - 2n)/(2d²) H - (2/d) Σ_p L_p
                     + Σ ( ((r+1)(d-i)di + 2d²j - 4dij + 2ni²)/(2d²) - 2 ) D_{i,j}

The last sum is written over 0 <= i <= ⌊d/2⌋, 0 <= j <= n, which names the
self-symmetric classes (i = d/2) twice. The coefficient is invariant under
(i, j) → (d-i, n-j), so each class gets it exactly once here.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from .errors import InvalidSignatureError
from .exact_arith import ExactInt, ExactRational, binomial
from .models import (
    BoundaryClassKey,
    CanonicalExpansion,
    ModuliSignature,
    is_stability_zero,
)

log = logging.getLogger(__name__)

# ── warning codes ─────────────────────────────────────────────────────────────
EXCLUDED_CASE = "excluded_case_0_0_2_2"
PRODUCT_FACTOR = "product_factor_omitted"

WARNING_TEXT = {
    EXCLUDED_CASE: (
        "[0,n,r,d]=[0,0,2,2]: the automorphism-free locus has a divisorial "
        "complement, so K is not the coarse-space canonical class here"
    ),
    PRODUCT_FACTOR: (
        "d=0: M_0,n(P^r,0) = M_0,n x P^r; only the M_0,n factor is expanded, "
        "the canonical class of P^r is not in the spanning set"
    ),
}


# ─────────────────────────────────────────────────────────────────────────────
# BOUNDARY CLASSES
# ─────────────────────────────────────────────────────────────────────────────

def _require_space(n: int, d: int) -> None:
    if n < 0 or d < 0:
        raise InvalidSignatureError(f"n and d must be >= 0, got n={n}, d={d}")
    if d == 0 and n < 3:
        raise InvalidSignatureError(f"d=0 needs n >= 3, got n={n}")


def enumerate_boundary_classes(n: int, d: int) -> list[BoundaryClassKey]:
    """Every nonzero boundary class D_{i,j} once, in canonical-key order."""
    _require_space(n, d)
    # Both names of a class map to one key, so collecting into a set keeps
    # each class once; stability-zero splittings (a side of degree 0 with at
    # most one marking) are not divisors at all.
    keys = {
        BoundaryClassKey.canonical(i, j, n, d)
        for i in range(d + 1)
        for j in range(n + 1)
        if not is_stability_zero(i, j, n, d)
    }
    return sorted(keys)


def boundary_component_count(key: BoundaryClassKey, n: int, d: int) -> ExactInt:
    """Number of irreducible boundary components summed in D_{i,j}.

    Ordered splittings number C(n, j). A self-symmetric class sees each
    unordered splitting twice, unless n = 0 where A = B = ∅ is a single one.
    """
    # Choose which j of the n markings sit on side A.
    count = binomial(n, key.j)
    # Swapping the sides of a self-symmetric splitting gives the same
    # component again, so C(n, j) counts each one twice.
    if key.is_self_symmetric(n, d) and n > 0:
        return count // 2
    return count


def boundary_degree(expansion: CanonicalExpansion) -> ExactRational:
    """Σ coefficient · (number of components) over the boundary part."""
    n, d = expansion.signature.n, expansion.signature.d
    return sum(
        (coeff * boundary_component_count(key, n, d) for key, coeff in expansion.boundary.items()),
        Fraction(0),
    )


def coefficient_of(expansion: CanonicalExpansion, label: str | BoundaryClassKey) -> ExactRational:
    """Coefficient of "H", "L" (any L_p) or a boundary class; absent reads as 0."""
    if label == "H":
        return expansion.h_coeff
    if label == "L":
        return expansion.l_coeff
    if isinstance(label, BoundaryClassKey):
        return expansion.boundary.get(label, Fraction(0))
    raise KeyError(f"unknown divisor label {label!r}")


# ─────────────────────────────────────────────────────────────────────────────
# COEFFICIENT EXPRESSIONS
# ─────────────────────────────────────────────────────────────────────────────

def m0n_coefficient(n: int, j: int) -> ExactRational:
    """Coefficient of D_{0,j} on M_{0,n}."""
    return Fraction(j * (n - j), n - 1) - 2


def unmarked_coefficient(r: int, d: int, i: int) -> ExactRational:
    """Coefficient of D_{i,0} on M_{0,0}(P^r, d)."""
    return Fraction((r + 1) * (d - i) * i, 2 * d) - 2


def marked_coefficient(n: int, r: int, d: int, i: int, j: int) -> ExactRational:
    """Coefficient of D_{i,j} on M_{0,n}(P^r, d), d > 0."""
    numerator = (r + 1) * (d - i) * d * i + 2 * d * d * j - 4 * d * i * j + 2 * n * i * i
    return Fraction(numerator, 2 * d * d) - 2


def _sparse(coefficients: dict[BoundaryClassKey, Fraction]) -> dict[BoundaryClassKey, Fraction]:
    return {key: c for key, c in sorted(coefficients.items()) if c != 0}


def _marked_expansion(n: int, r: int, d: int) -> tuple[Fraction, Fraction, dict[BoundaryClassKey, Fraction]]:
    """(h, l, boundary) of the marked formula, without the n >= 1 restriction.

    n = 0 is allowed so the reduction to the unmarked formula can be checked.
    """
    h = -Fraction((d + 1) * (r + 1) * d - 2 * n, 2 * d * d)
    l = -Fraction(2, d) if n else Fraction(0)
    boundary = {
        key: marked_coefficient(n, r, d, key.i, key.j)
        for key in enumerate_boundary_classes(n, d)
    }
    return h, l, _sparse(boundary)


# ─────────────────────────────────────────────────────────────────────────────
# THE THREE CASES
# ─────────────────────────────────────────────────────────────────────────────

def canonical_class_m0n(n: int, r: int = 2) -> CanonicalExpansion:
    """K of M_{0,n} (the d = 0 case). ``r`` only labels the product P^r factor."""
    if n < 3:
        raise InvalidSignatureError(f"M_0,n needs n >= 3, got n={n}")
    signature = ModuliSignature(n=n, r=r, d=0)
    boundary = {BoundaryClassKey(0, j): m0n_coefficient(n, j) for j in range(2, n // 2 + 1)}
    return CanonicalExpansion(
        signature=signature,
        boundary=_sparse(boundary),
        warnings=(PRODUCT_FACTOR,),
    )


def canonical_class_unmarked(r: int, d: int) -> CanonicalExpansion:
    """K of M_{0,0}(P^r, d), d >= 1."""
    if d < 1:
        raise InvalidSignatureError("d=0 has no unmarked space; use canonical_class_m0n")
    signature = ModuliSignature(n=0, r=r, d=d)
    boundary = {BoundaryClassKey(i, 0): unmarked_coefficient(r, d, i) for i in range(1, d // 2 + 1)}
    warnings = (EXCLUDED_CASE,) if signature.is_excluded_case else ()
    if warnings:
        log.debug("signature (0,2,2): %s", WARNING_TEXT[EXCLUDED_CASE])
    return CanonicalExpansion(
        signature=signature,
        h_coeff=-Fraction((d + 1) * (r + 1), 2 * d),
        boundary=_sparse(boundary),
        warnings=warnings,
    )


def canonical_class_marked(n: int, r: int, d: int) -> CanonicalExpansion:
    """K of M_{0,n}(P^r, d), n >= 1, d >= 1."""
    if n < 1 or d < 1:
        raise InvalidSignatureError(f"the marked formula needs n >= 1 and d >= 1, got n={n}, d={d}")
    signature = ModuliSignature(n=n, r=r, d=d)
    h, l, boundary = _marked_expansion(n, r, d)
    return CanonicalExpansion(signature=signature, h_coeff=h, l_coeff=l, boundary=boundary)


def canonical_class(signature: ModuliSignature) -> CanonicalExpansion:
    """Pick the formula that applies to ``signature``."""
    if signature.d == 0:
        return canonical_class_m0n(signature.n, signature.r)
    if signature.n == 0:
        return canonical_class_unmarked(signature.r, signature.d)
    return canonical_class_marked(signature.n, signature.r, signature.d)


# ─────────────────────────────────────────────────────────────────────────────
# CONSISTENCY CHECKS
# ─────────────────────────────────────────────────────────────────────────────

def coefficient_symmetry_check(n: int, r: int, d: int) -> bool:
    """True iff the coefficient expression is unchanged by D_{i,j} → D_{d-i,n-j}.

    Every pair in 0..d x 0..n is tested, stability-zero ones included, since
    the identity is algebraic.
    """
    ModuliSignature(n=n, r=r, d=d)
    if d == 0:
        return all(m0n_coefficient(n, j) == m0n_coefficient(n, n - j) for j in range(n + 1))
    return all(
        marked_coefficient(n, r, d, i, j) == marked_coefficient(n, r, d, d - i, n - j)
        for i in range(d + 1)
        for j in range(n + 1)
    )


def reduces_to_unmarked(r: int, d: int) -> bool:
    """True iff the marked formula at n = 0 matches the unmarked one term by term."""
    h, l, boundary = _marked_expansion(0, r, d)
    unmarked = canonical_class_unmarked(r, d)
    return h == unmarked.h_coeff and l == 0 and boundary == unmarked.boundary
