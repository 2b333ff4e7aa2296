"""The ternary nu-function identity and Sole's conjectured identity, side by side.

Both sides of each identity are evaluated in double precision from the
closed forms in :mod:`zkmacwilliams.lattice`.  The ternary identity holds for
every A_3(C); the conjecture holds for A_2(C) and fails for A_k({0}), k >= 3.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .codes import DEFAULT_CAP, CodeZk
from .errors import DomainError, NonPositive, WrongModulus
from .lattice import LatticeAk, dual_nu_eval, lattice_det, nu_eval_closed


@dataclass(frozen=True)
class SideReport:
    lhs: float
    rhs: float

    @property
    def relative_diff(self) -> float:
        scale = max(abs(self.lhs), abs(self.rhs))
        return abs(self.lhs - self.rhs) / scale if scale else 0.0

    @property
    def abs_diff(self) -> float:
        return abs(self.lhs - self.rhs)


@dataclass(frozen=True)
class ParamPair:
    alpha: float
    beta: float
    relation: str  # "ternary" or "conjecture"


def _positive(x: float, name: str) -> None:
    if not x > 0:
        raise NonPositive(f"{name} must be positive, got {x}")


def _ternary_map(x: float) -> float:
    # e^(-2y) = 3 tanh(x) / (8 - 5 tanh(x)); the relation is symmetric in x, y
    t = math.tanh(x)
    ratio = 3 * t / (8 - 5 * t)
    if not 0 < ratio < 1:
        raise DomainError(f"3 tanh/(8 - 5 tanh) = {ratio} is outside (0, 1)")
    return -0.5 * math.log(ratio)


def beta_from_alpha_ternary(alpha: float) -> float:
    _positive(alpha, "alpha")
    return _ternary_map(alpha)


def alpha_from_beta_ternary(beta: float) -> float:
    _positive(beta, "beta")
    return _ternary_map(beta)


def alpha_from_beta_conjecture(beta: float) -> float:
    """artanh(e^(-2 beta)).  The relation e^(-2 beta) = tanh(alpha) is symmetric,
    so the same map also takes alpha to beta."""
    _positive(beta, "beta")
    return math.atanh(math.exp(-2 * beta))


beta_from_alpha_conjecture = alpha_from_beta_conjecture


def ternary_pair(alpha: float) -> ParamPair:
    return ParamPair(alpha, beta_from_alpha_ternary(alpha), "ternary")


def conjecture_pair(*, alpha: float | None = None, beta: float | None = None) -> ParamPair:
    """Fix exactly one of alpha, beta and derive the other."""
    if (alpha is None) == (beta is None):
        raise DomainError("fix exactly one of alpha and beta")
    if beta is not None:
        return ParamPair(alpha_from_beta_conjecture(beta), beta, "conjecture")
    return ParamPair(alpha, beta_from_alpha_conjecture(alpha), "conjecture")


def theorem4_sides(code: CodeZk, alpha: float, cap: int = DEFAULT_CAP) -> SideReport:
    """Both sides of the ternary identity for Lambda = A_3(C):

        3^n nu_{Lambda*}(tanh^3(b/2))
            = det(Lambda) [(1+tanh(b/2))(1-tanh^3(a/2)) / ((1-tanh(b/2))(1+tanh^3(a/2)))]^n nu_Lambda(tanh(a/2))

    with e^(-2b) = 3 tanh(a) / (8 - 5 tanh(a)).
    """
    if code.k != 3:
        raise WrongModulus(f"the ternary identity needs k = 3, got {code.k}")
    beta = beta_from_alpha_ternary(alpha)
    lat = LatticeAk.from_code(code)
    n = code.n
    sa, sb = math.tanh(alpha / 2), math.tanh(beta / 2)
    lhs = 3**n * dual_nu_eval(lat, sb**3, cap)
    factor = ((1 + sb) * (1 - sa**3)) / ((1 - sb) * (1 + sa**3))
    rhs = float(lattice_det(lat, cap)) * factor**n * nu_eval_closed(lat, sa, cap)
    return SideReport(lhs, rhs)


def sole_sides(lat: LatticeAk, beta: float | None = None, *, alpha: float | None = None,
               cap: int = DEFAULT_CAP) -> SideReport:
    """Both sides of the conjectured identity

        2^(n/2) nu_{Lambda*}(tanh^2(b/2)) = det(Lambda) sinh(2b)^(n/2) nu_Lambda(tanh(a/2))

    with e^(-2b) = tanh(a).  Pass ``beta`` (default direction) or ``alpha``.
    """
    pair = conjecture_pair(alpha=alpha, beta=beta)
    n = lat.n
    lhs = 2 ** (n / 2) * dual_nu_eval(lat, math.tanh(pair.beta / 2) ** 2, cap)
    rhs = (
        float(lattice_det(lat, cap))
        * math.sinh(2 * pair.beta) ** (n / 2)
        * nu_eval_closed(lat, math.tanh(pair.alpha / 2), cap)
    )
    return SideReport(lhs, rhs)


def counterexample_table(k_min: int = 3, k_max: int = 10, beta: float = 1.0,
                         *, alpha: float | None = None) -> list[tuple[int, SideReport]]:
    """One row per k: both conjecture sides for Lambda = A_k({0}) = kZ in dimension 1."""
    if not 3 <= k_min <= k_max:
        raise DomainError(f"need 3 <= k_min <= k_max, got {k_min}, {k_max}")
    rows = []
    for k in range(k_min, k_max + 1):
        lat = LatticeAk.from_code(CodeZk.zero(k, 1))
        if alpha is not None:
            rows.append((k, sole_sides(lat, alpha=alpha)))
        else:
            rows.append((k, sole_sides(lat, beta)))
    return rows


def table_csv(rows: list[tuple[int, SideReport]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "lhs", "rhs"])
    for k, rep in rows:
        writer.writerow([k, f"{rep.lhs:.4f}", f"{rep.rhs:.4f}"])
    return buf.getvalue()
