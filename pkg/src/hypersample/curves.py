"""Bound curves for confiners, hitting sets and random dispersers.

Notation: ``k`` is the (average) uniformity, ``r`` the sparsity |E|/|V| and ``x``
a density in [0, 1] (written ``p`` or ``delta`` depending on the bound).

* :func:`f` lower bound for sparse confiners, ``f_inverse`` its inverse in x;
* :func:`g` hitting-set-lemma curve of expander-walk hypergraphs;
* :func:`h` random-disperser curve (asymptotic in n);
* floors / tables of all lower bounds, the hard-optimisation functional and
  the disperser / vertex-expander translations.

Root finding is bracketing bisection only.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .distributions import binom
from .errors import BracketFailureError, DomainError, NoAdmissibleRootError, PreconditionError
from .sampling import density_size


def f(k: float, r: float, x: float) -> float:
    """1 - (1-x)^{1/(rk)} + (1-x)^{1/(rk)} (1 - (1-x)^{(rk-1)/(rk)})^k, for rk >= 1."""
    rk = r * k
    if k <= 0 or r <= 0 or rk < 1:
        raise DomainError(f"f needs k, r > 0 and rk >= 1, got k={k}, r={r}")
    if not 0 <= x <= 1:
        raise DomainError(f"x must lie in [0, 1], got {x}")
    u = (1 - x) ** (1 / rk)
    return 1 - u + u * (1 - (1 - x) ** ((rk - 1) / rk)) ** k


def f_inverse(k: float, r: float, y: float, tol: float = 1e-13) -> float:
    """The x in [0, 1] with f(k, r, x) = y (f is strictly increasing)."""
    f(k, r, 0.0)  # domain check
    if not 0 <= y <= 1:
        raise DomainError(f"y must lie in [0, 1], got {y}")
    if y in (0, 1):
        return float(y)
    lo, hi = 0.0, 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(k, r, mid) < y:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


def walk_lambda(d: float) -> float:
    """Spectral expansion 2 sqrt(d-1) / d of a Ramanujan d-regular graph."""
    return 2 * math.sqrt(d - 1) / d


def g_degree(k: int, r: float) -> float:
    """Degree d with r = d^{k-1}; snapped to an integer when within 1e-9 of one."""
    d = r ** (1 / (k - 1))
    if abs(d - round(d)) < 1e-9:
        d = float(round(d))
    return d


def g(k: int, r: float, x: float, lam: Optional[float] = None) -> float:
    """x (x + (1-x) lambda)^{k-1}: confinement guaranteed by the hitting set lemma for walk hypergraphs."""
    if int(k) != k or k < 2:
        raise DomainError(f"g needs an integer k >= 2, got {k}")
    if lam is None:
        d = g_degree(int(k), r)
        if d < 2:
            raise DomainError(f"g needs d = r^(1/(k-1)) >= 2, got d={d}")
        lam = walk_lambda(d)
    return x * (x + (1 - x) * lam) ** (int(k) - 1)


def disperser_sparsity(k: float, p: float, eps: float) -> float:
    """Smallest sparsity for which a random construction gives an (eps, p)-confiner of average uniformity <= k.

    Returns +inf where the denominator is not positive (no sparsity works).
    """
    L = math.log(1 / (1 - p))
    den = k - (math.log(1 / eps) + 1) / (1 - p)
    if den <= 0:
        return math.inf
    return (1 / eps * (L + 1) + 1) / den


def h(k: float, r: float, p: float, tol: float = 1e-13) -> float:
    """Smallest eps with disperser_sparsity(k, p, eps) <= r, i.e. the root of r = sparsity(eps).

    Raises NoAdmissibleRootError when even eps = 1 needs more than r edges per vertex.
    """
    if k <= 1 or r <= 0 or not 0 <= p < 1:
        raise DomainError(f"h needs k > 1, r > 0, p in [0, 1); got k={k}, r={r}, p={p}")
    eps_min = math.exp(1 - (1 - p) * k)
    if eps_min >= 1 or disperser_sparsity(k, p, 1.0) > r:
        raise NoAdmissibleRootError(f"no eps <= 1 reaches sparsity {r} for k={k}, p={p}")
    # the sparsity is +inf at eps_min and decreasing above it; scan a log grid for a bracket
    grid = np.geomspace(eps_min, 1.0, 64)
    lo = hi = None
    for a, b in zip(grid[:-1], grid[1:]):
        if disperser_sparsity(k, p, a) > r >= disperser_sparsity(k, p, b):
            lo, hi = float(a), float(b)
            break
    if lo is None:
        if disperser_sparsity(k, p, float(grid[0])) <= r:
            return float(grid[0])
        raise BracketFailureError("could not bracket the h root")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if disperser_sparsity(k, p, mid) > r:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return hi


def h_or_nan(k, r, p) -> float:
    try:
        return h(k, r, p)
    except (NoAdmissibleRootError, DomainError):
        return math.nan


def admits_sparsity(k: float, r: float, p: float, eps: float, n: Optional[int] = None) -> bool:
    """Does the random-disperser theorem give an (eps, p)-confiner with sparsity <= r (optionally at finite n)?"""
    if eps < math.exp(1 - (1 - p) * k):
        return False
    return disperser_sparsity(k, p, eps) + (1 / n if n else 0.0) <= r


@dataclass(frozen=True)
class HWithC:
    eps: float
    r_low: float
    r_high: float
    in_window: bool


def h_with_c(k: float, r: float, p: float, c: float, n: Optional[int] = None) -> HWithC:
    """eps <= (L + 1) / ((1-c) k (r - 1/n) - 1) with L = ln(1/(1-p)), together with the admissible r window.

    The window is 1/((1-c)k) + 1/n < r <= [e^{c(1-p)k-1} (L+1) + 1] / ((1-c)k); n=None means n -> infinity.
    """
    if not 0 < c < 1:
        raise DomainError("c must lie in (0, 1)")
    L = math.log(1 / (1 - p))
    inv_n = 1 / n if n else 0.0
    r_low = 1 / ((1 - c) * k) + inv_n
    r_high = (math.exp(c * (1 - p) * k - 1) * (L + 1) + 1) / ((1 - c) * k)
    den = (1 - c) * k * (r - inv_n) - 1
    eps = (L + 1) / den if den > 0 else math.inf
    return HWithC(eps, r_low, r_high, r_low < r <= r_high)


# --- worst-case floors and lower bounds ---------------------------------------

def worst_case_floor(n: int, k, p, uniform: bool = False):
    """Some density-p set confines at least this fraction of edges.

    General (average uniformity k): p^k - 2k/n, requires n >= 1/(p(1-p)).
    Uniform (every edge has k vertices, k integer): the exact average
    C(n-k, s-k) / C(n, s) with s = floor(pn), returned as a Fraction.
    """
    if uniform:
        if int(k) != k:
            raise DomainError("the uniform floor needs an integer k")
        k = int(k)
        s = density_size(p, n)
        return Fraction(binom(n - k, s - k), binom(n, s))
    if not 0 < p < 1 or n * p * (1 - p) < 1:
        raise PreconditionError(f"general floor needs n >= 1/(p(1-p)), got n={n}, p={p}")
    return p**k - 2 * k / n


def lower_bound_constant(k: float, delta: float) -> float:
    """(1/30) delta (1-delta)^2 min{1/k, (k-1)/2}."""
    return delta * (1 - delta) ** 2 * min(1 / k, (k - 1) / 2) / 30


def lower_bound_eps(k: float, r: float, delta: float) -> float:
    """min{delta^k + c/r, 1}: a density-delta set confining this much exists once n is large enough."""
    if k <= 1:
        raise DomainError(f"lower_bound_eps needs k > 1, got {k}")
    if r <= 0 or not 0 < delta < 1:
        raise DomainError("need r > 0 and delta in (0, 1)")
    return min(delta**k + lower_bound_constant(k, delta) / r, 1.0)


# --- hard optimisation ------------------------------------------------------

@dataclass(frozen=True)
class ProfileArgs:
    xs: tuple[float, ...]
    us: tuple[float, ...]
    k: float
    delta: float

    def __post_init__(self):
        if len(self.xs) != len(self.us) or not self.xs:
            raise PreconditionError("xs and us must be non-empty and of equal length")
        if abs(math.fsum(self.us) - 1) > 1e-12 or min(self.us) < 0:
            raise PreconditionError("us must be non-negative and sum to 1")
        if self.k < 1 or not 0 < self.delta < 1:
            raise PreconditionError("need k >= 1 and delta in (0, 1)")

    @property
    def d(self) -> float:
        return math.fsum(x * u for x, u in zip(self.xs, self.us))

    @property
    def r(self) -> float:
        return self.d / self.k


def gamma_bracket(xs: Sequence[float], us: Sequence[float], delta: float) -> tuple[float, float]:
    """1 - (1-delta)^{1/d} <= gamma <= 1 - (1-delta)^{1/min x}."""
    d = math.fsum(x * u for x, u in zip(xs, us))
    c = min(x for x, u in zip(xs, us) if u > 0)
    return 1 - (1 - delta) ** (1 / d), 1 - (1 - delta) ** (1 / c)


def covered_density(xs, us, gamma: float) -> float:
    """sum_i u_i (1 - (1-gamma)^{x_i})."""
    return math.fsum(u * (1 - (1 - gamma) ** x) for x, u in zip(xs, us))


def solve_gamma_real(xs: Sequence[float], us: Sequence[float], delta: float, tol: float = 1e-15) -> float:
    """The gamma in (0, 1) with covered_density(xs, us, gamma) = delta, by bisection on the bracket."""
    if min(xs) < 1:
        raise PreconditionError("all x_i must be >= 1")
    lo, hi = gamma_bracket(xs, us, delta)
    # widen by rounding slack; the bracket is a theorem, not a numerical guarantee
    lo, hi = max(0.0, lo - 1e-15), min(1.0, hi + 1e-15)
    if covered_density(xs, us, lo) > delta + 1e-13 or covered_density(xs, us, hi) < delta - 1e-13:
        raise BracketFailureError(f"gamma bracket [{lo}, {hi}] does not straddle delta={delta}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if covered_density(xs, us, mid) < delta:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


def hard_opt_F(args: ProfileArgs) -> tuple[float, float]:
    """(gamma, F) with F = gamma + (1-gamma) prod_i (1 - (1-gamma)^{x_i - 1})^{u_i x_i / r}."""
    if min(args.xs) <= 1:
        raise PreconditionError("hard_opt_F needs every x_i > 1")
    gamma = solve_gamma_real(args.xs, args.us, args.delta)
    r = args.r
    log_prod = math.fsum(u * x / r * math.log1p(-((1 - gamma) ** (x - 1))) for x, u in zip(args.xs, args.us))
    return gamma, gamma + (1 - gamma) * math.exp(log_prod)


# --- translations to dispersers and vertex expanders ---------------------------

def disperser_floor(u: int, ell: int, n: int, eps: Optional[float] = None) -> dict:
    """Lower bounds for an (n-u, eps)-disperser {0,1}^n x {0,1}^d -> {0,1}^m with entropy loss ell.

    ``eps_floor`` = (1 - 1/U)^{LU} - 2LU/N with U = 2^u, L = 2^ell, N = 2^n. When ``eps``
    is given, ``d_lower`` = -lg[eps - (1-1/U)^{LU}] holds only up to an additive
    O_u(1) term that is not specified, and is flagged as such.
    """
    if u < 0 or ell < 0 or n < 0:
        raise PreconditionError("u, ell, n must be non-negative")
    U, L, N = 2.0**u, 2.0**ell, 2.0**n
    base = (1 - 1 / U) ** (L * U)
    out = {"eps_floor": base - 2 * L * U / N, "eps_floor_limit": base, "approx_exp": math.exp(-L)}
    if eps is not None:
        gap = eps - base
        out["d_lower"] = -math.log2(gap) if gap > 0 else math.inf
        out["d_lower_note"] = "up to an unspecified additive O_u(1) constant"
    return out


def vertex_expander_ceiling(n: int, r: float, k: float, delta: float) -> dict:
    """Ceilings on the fraction of edges every ceil(delta n)-set must meet.

    ``finite``: min{1 - (1-delta)^k + 2k/n, 1}.
    ``asymptotic``: 1 - (1-delta)^k - c(k, 1-delta)/r with the explicit constant
    c(k, x) = x (1-x)^2 min{1/k, (k-1)/2} / 30; it needs k > 1 and n >= poly(r, k).
    """
    base = 1 - (1 - delta) ** k
    out = {"finite": min(base + 2 * k / n, 1.0), "asymptotic": None, "asymptotic_note": "requires k > 1 and n >= poly_delta(r, k)"}
    if k > 1:
        out["asymptotic"] = base - lower_bound_constant(k, 1 - delta) / r
    return out


NOT_CHECKED = "not checked: unspecified constants"


def confiner_lower_bound_table(k: float, r: float, p: float, n: int, min_degree: Optional[int] = None,
                               regular: bool = False, min_uniformity: Optional[int] = None) -> list[dict]:
    """All lower bounds on eps for an (eps, p)-confiner with n vertices, rn edges, average uniformity k.

    Each row: ``item``, ``value`` (None when not applicable), ``applicable`` and
    ``precondition`` ("met", "violated", "not applicable" or NOT_CHECKED).
    """
    rk = r * k
    rows = []

    def row(item, value, status, note=""):
        rows.append({"item": item, "value": value, "applicable": value is not None and status != "violated",
                     "precondition": status, "note": note})

    ok = n * p * (1 - p) >= 1
    row("i", p**k - 2 * k / n, "met" if ok else "violated")
    if k > 1:
        row("ii", p**k + min(1 / k, (k - 1) / 2) * p * (1 - p) ** 2 / (30 * r), NOT_CHECKED)
    else:
        row("ii", None, "not applicable", "requires k > 1")
    if rk >= 1 and k >= 1:
        status = NOT_CHECKED if (min_degree is not None and min_degree >= 1) else "not applicable"
        row("iii", f(k, 3 * r, p), status, "asymptotic; minus poly(k, 1/p) n^-0.078; needs min degree >= 1")
        strong = regular or (min_degree is not None and min_degree >= 3)
        row("iv", f(k, r, p), NOT_CHECKED if strong else "not applicable",
            "asymptotic; minus poly(k, 1/p) n^-0.078; needs regular or min degree >= 3")
    else:
        row("iii", None, "not applicable", "requires rk >= 1")
        row("iv", None, "not applicable", "requires rk >= 1")
    if rk >= 1:
        star_ok = n * p * (1 - p) >= 4 * k
        row("i*", 1 - (1 - p) ** (1 / rk) - 2 * k / (math.e * p * (1 - p) * n), "met" if star_ok else "violated")
        no_empty = min_uniformity is not None and min_uniformity >= 1
        row("iii*", 1 - f_inverse(rk, 3 / r, 1 - p), NOT_CHECKED if no_empty else "not applicable",
            "asymptotic; needs no empty hyperedges")
        big = min_uniformity is not None and min_uniformity >= 3
        row("iv*", 1 - f_inverse(rk, 1 / r, 1 - p), NOT_CHECKED if big else "not applicable",
            "asymptotic; needs min uniformity >= 3")
    else:
        for item in ("i*", "iii*", "iv*"):
            row(item, None, "not applicable", "requires rk >= 1")
    return rows


# --- curve export ---------------------------------------------------------------

CURVE_COLUMNS = ("f", "g", "h", "xk")


def curve_rows(k: float, r: float, grid: Iterable[float], which: Sequence[str] = CURVE_COLUMNS) -> list[dict]:
    out = []
    for x in grid:
        x = float(x)
        row = {"x": x}
        for name in CURVE_COLUMNS:
            if name not in which:
                continue
            try:
                if name == "f":
                    val = f(k, r, x)
                elif name == "g":
                    val = g(k, r, x)
                elif name == "h":
                    val = h(k, r, x)
                else:
                    val = x**k
            except (DomainError, NoAdmissibleRootError):
                val = math.nan
            row[name] = val
        out.append(row)
    return out


def parse_grid(spec: str) -> list[float]:
    """'a:b:count' (inclusive linspace) or a comma separated list."""
    if ":" in spec:
        a, b, cnt = spec.split(":")
        cnt = int(cnt)
        a, b = float(a), float(b)
        if cnt == 1:
            return [a]
        # round to kill linspace noise such as 0.30000000000000004
        return [round(a + (b - a) * i / (cnt - 1), 12) for i in range(cnt)]
    return [float(t) for t in spec.split(",") if t.strip()]


def curves_csv(rows: list[dict], which: Sequence[str] = CURVE_COLUMNS, digits: int = 6) -> str:
    cols = ["x"] + [c for c in CURVE_COLUMNS if c in which]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for row in rows:
        w.writerow(["nan" if math.isnan(row[c]) else f"{row[c]:.{digits}f}" for c in cols])
    return buf.getvalue()
