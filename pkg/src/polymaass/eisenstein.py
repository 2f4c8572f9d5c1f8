"""Evaluation routes for shifted-weight real-analytic Eisenstein series.

Two independent routes are provided. The lattice route sums the defining
double series over square shells inside its absolute-convergence region.
The Fourier route sums the completed series' explicit expansion (constant
term plus Whittaker modes) and is valid for every s away from the k=0
poles; it is the analytic continuation in practice.

Conventions. E_k(z,s) = 1/2 sum' y^s / (|mz+n|^{2s} (mz+n)^k) over nonzero
lattice points. The completed series multiplies by pi^{-s-k/2} Gamma(s +
k/2 + |k|/2); the doubly-completed series multiplies further by
(s + k/2)(s + k/2 - 1), which cancels every pole in s. The spectral center
is s = (1-k)/2, the fixed point of s -> 1-k-s.
"""

from __future__ import annotations

import cmath
import dataclasses
import math

import numpy as np

from .config import Config, DEFAULT
from .errors import AccuracyError, DomainError, PoleError, TailError
from .special import (
    EvalResult,
    WhittakerQuery,
    completed_zeta,
    completed_zeta_laurent_regular,
    gamma,
    sigma_power,
    whittaker_w,
)

__all__ = [
    "PointUHP",
    "SpectralParam",
    "TruncationPolicy",
    "default_policy",
    "lattice_sum_E",
    "constant_term",
    "fourier_eval_completed",
    "doubly_completed_eval",
    "taylor_coeff",
    "maass_G",
]

_EULER_GAMMA = 0.5772156649015328606065120900824024
_LOG_4PI = math.log(4.0 * math.pi)


@dataclasses.dataclass(frozen=True)
class PointUHP:
    """A point x + iy of the upper half plane."""

    x: float
    y: float

    def __post_init__(self):
        if not (self.y > 0.0 and math.isfinite(self.y) and math.isfinite(self.x)):
            raise DomainError(f"PointUHP requires finite x and y > 0, got y={self.y}")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


@dataclasses.dataclass(frozen=True)
class SpectralParam:
    """Weight and spectral coordinate (k, s); eigenvalue lambda = s(s+k-1)."""

    k: int
    s: complex

    def __post_init__(self):
        if not (isinstance(self.k, int) and self.k % 2 == 0):
            raise DomainError(f"weight must be an even integer, got {self.k}")

    def eigenvalue(self) -> complex:
        return self.s * (self.s + self.k - 1.0)

    def is_center(self) -> bool:
        return complex(self.s) == complex((1.0 - self.k) / 2.0)

    def dual(self) -> "SpectralParam":
        return SpectralParam(self.k, 1.0 - self.k - self.s)


@dataclasses.dataclass(frozen=True)
class TruncationPolicy:
    """Truncation radii and target tolerance for series evaluation."""

    lattice_radius: int = DEFAULT.default_lattice_radius
    mode_count: int = 8
    target_tol: float = DEFAULT.default_tol

    def __post_init__(self):
        if self.lattice_radius < 2:
            raise DomainError("lattice_radius must be >= 2")
        if self.mode_count < 1:
            raise DomainError("mode_count must be >= 1")
        if not (0.0 < self.target_tol < 1.0):
            raise DomainError("target_tol must lie in (0, 1)")


def default_policy(p: SpectralParam, z: PointUHP, tol: float = DEFAULT.default_tol,
                   config: Config = DEFAULT) -> TruncationPolicy:
    """Pick mode and lattice truncations for a requested tolerance.

    The Fourier mode count comes from the e^{-2 pi n y} decay of the modes;
    the lattice radius inverts the shell-sum tail bound (capped at the
    configured maximum radius, where TailError from the evaluator takes over).
    """
    n = int(math.ceil(max(1.0, -math.log(tol) / (2.0 * math.pi * z.y)))) + 2
    n = min(n, config.max_mode_count)
    sigma = complex(p.s).real
    expo = 2.0 * sigma + p.k - 2.0
    radius = config.default_lattice_radius
    if expo > 0.05:
        c = _lattice_min_norm(z.z)
        base = 4.0 * z.y ** sigma * c ** (-(2.0 * sigma + p.k)) / expo
        if base > 0.0:
            radius = int(math.ceil((base / tol) ** (1.0 / expo))) + 2
        radius = max(8, min(radius, 4000))
    return TruncationPolicy(lattice_radius=max(2, radius), mode_count=n, target_tol=tol)


# ---------------------------------------------------------------------------
# Lattice route


def _lattice_min_norm(z: complex) -> float:
    """min |uz + v| over the boundary of the sup-norm unit square.

    Scaling gives |mz + n| >= c(z) max(|m|, |n|) for all integer pairs.
    """
    x, y = z.real, z.imag
    norm2 = x * x + y * y
    # edge v = 1, u in [-1, 1]: minimise |u z + 1|
    u = max(-1.0, min(1.0, -x / norm2))
    e1 = abs(u * z + 1.0)
    # edge u = 1, v in [-1, 1]: minimise |z + v|
    v = max(-1.0, min(1.0, -x))
    e2 = abs(z + v)
    return min(e1, e2)


def _shell_points(r: int) -> tuple[np.ndarray, np.ndarray]:
    n_side = np.arange(-r, r + 1)
    m_side = np.arange(-r + 1, r)
    ms = np.concatenate([np.full(n_side.size, r), np.full(n_side.size, -r), m_side, m_side])
    ns = np.concatenate([n_side, n_side, np.full(m_side.size, r), np.full(m_side.size, -r)])
    return ms, ns


def lattice_sum_E(p: SpectralParam, z: PointUHP, t: TruncationPolicy,
                  config: Config = DEFAULT) -> EvalResult:
    """E_k(z,s) by direct shell-ordered lattice summation.

    Valid only inside the absolute-convergence region Re s > 1 - k/2 (a
    margin of 0.25 is enforced). Shells max(|m|,|n|) = r are accumulated in
    increasing r with compensated (Neumaier) summation so the result is
    independent of any internal vectorization.
    """
    k, s = p.k, complex(p.s)
    if s.real <= 1.0 - k / 2.0 + 0.25:
        raise DomainError(
            f"lattice route needs Re s > {1.0 - k / 2.0 + 0.25}, got {s.real}")
    zz = z.z
    y = z.y
    ys = cmath.exp(s * math.log(y))
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    for r in range(1, t.lattice_radius + 1):
        ms, ns = _shell_points(r)
        w = ms * zz + ns
        shell = np.exp(-2.0 * s * np.log(np.abs(w))) * w ** (-k)
        val = complex(shell.sum())
        # Neumaier compensated accumulation
        snew = total + val
        if abs(total) >= abs(val):
            comp += (total - snew) + val
        else:
            comp += (val - snew) + total
        total = snew
    total = 0.5 * ys * (total + comp)
    sigma = s.real
    c = _lattice_min_norm(zz)
    expo = 2.0 * sigma + k - 2.0
    tail = 4.0 * y ** sigma * c ** (-(2.0 * sigma + k)) \
        * t.lattice_radius ** (-expo) / expo
    if tail > t.target_tol * max(1.0, abs(total)):
        raise TailError(
            f"lattice tail bound {tail:.3e} exceeds target {t.target_tol:.3e} "
            f"at radius {t.lattice_radius}")
    return EvalResult(value=total, abs_error_estimate=tail, method="lattice_shells")


# ---------------------------------------------------------------------------
# Constant term of the completed series

# The completed constant term is
#   C0(y, s) = A(s) zhat(2s+k) y^s + B(s) zhat(2-2s-k) y^{1-k-s}
# with polynomial prefactors A, B encoded by their root lists. Every pole of
# a zhat factor away from the center s = (1-k)/2 coincides with a root of its
# prefactor, so deflating one linear factor into the zhat Laurent expansion
# gives a formula that stays exact through those points. At the center the
# two terms' poles cancel against each other instead; that point gets the
# logarithmic closed form, with a short interpolation bridge across the
# annulus where the generic formula loses digits to cancellation.


def _a_roots(k: int) -> list[float]:
    if k == 0:
        return []
    if k > 0:
        return [-float(j) for j in range(k // 2, k)]
    return [float(j) for j in range(1, (-k) // 2 + 1)]


def _b_roots(k: int) -> list[float]:
    if k == 0:
        return []
    if k > 0:
        return [-float(j) for j in range(0, k // 2)]
    return [float(j) for j in range((-k) // 2 + 1, -k + 1)]


def _b_sign(k: int) -> float:
    return -1.0 if (abs(k) // 2) % 2 else 1.0


def _poly_from_roots(s: complex, roots: list[float], skip: float | None = None) -> complex:
    acc = 1.0 + 0.0j
    skipped = False
    for r in roots:
        if not skipped and skip is not None and r == skip:
            skipped = True
            continue
        acc *= (s - r)
    return acc


def _phi(eps: complex, config: Config) -> complex:
    """phi(eps) = eps * zhat(2 eps); entire on |eps| < 1/2, phi(0) = -1/2."""
    if abs(eps) <= 0.15:
        return -0.5 + eps * completed_zeta_laurent_regular(-2.0 * eps)
    return eps * completed_zeta(2.0 * eps, config)


def _psi(eps: complex, config: Config) -> complex:
    """psi(eps) = eps * zhat(-2 eps); entire on |eps| < 1/2, psi(0) = 1/2."""
    if abs(eps) <= 0.15:
        return 0.5 + eps * completed_zeta_laurent_regular(2.0 * eps)
    return eps * completed_zeta(-2.0 * eps, config)


def _const_term_center(k: int, y: float) -> complex:
    """Closed-form C0 at the spectral center s = (1-k)/2.

    C0 = H (euler_gamma - log 4pi + log y + w_k) y^{(1-k)/2}, where H is
    (|k|-1)!!/2^{|k|/2} and w_k = 2(1 + 1/3 + ... + 1/(|k|-1)).
    """
    a = abs(k)
    h = 1.0
    for j in range(1, a, 2):
        h *= j
    h /= 2.0 ** (a // 2)
    wk = 2.0 * sum(1.0 / j for j in range(1, a, 2))
    return h * (_EULER_GAMMA - _LOG_4PI + math.log(y) + wk) * y ** ((1.0 - k) / 2.0)


def _const_term_generic(k: int, s: complex, y: float, config: Config) -> complex:
    """C0(y, s) away from the center annulus (exact at s = -k/2, 1 - k/2)."""
    eps1 = s + k / 2.0          # zhat(2s+k) = zhat(2 eps1)
    eps2 = s - (1.0 - k / 2.0)  # zhat(2-2s-k) = zhat(-2 eps2)
    ys = cmath.exp(s * cmath.log(y))
    yd = cmath.exp((1.0 - k - s) * cmath.log(y))
    if k == 0:
        t1 = completed_zeta(2.0 * s, config) * ys
        t2 = completed_zeta(2.0 - 2.0 * s, config) * yd
        return t1 + t2
    a_red = _poly_from_roots(s, _a_roots(k), skip=-k / 2.0)
    b_red = _b_sign(k) * _poly_from_roots(s, _b_roots(k), skip=1.0 - k / 2.0)
    return a_red * _phi(eps1, config) * ys + b_red * _psi(eps2, config) * yd


def constant_term(p: SpectralParam, y: float, config: Config = DEFAULT) -> complex:
    """Fourier constant term C0(y, s) of the completed series.

    Generic polynomial-times-zhat formula away from the spectral center,
    the logarithmic closed form exactly at the center, and a 4-point
    extrapolation bridge across the annulus 0 < |s - center| <= guard where
    the generic formula cancels catastrophically.

    Raises PoleError for k = 0 at s in {0, 1}.
    """
    if y <= 0.0:
        raise DomainError("constant_term requires y > 0")
    k, s = p.k, complex(p.s)
    if k == 0 and (s == 0.0 or s == 1.0):
        raise PoleError(f"completed weight-0 series has a pole at s={s}")
    center = (1.0 - k) / 2.0
    eps_c = s - center
    if eps_c == 0.0:
        return _const_term_center(k, y)
    if abs(eps_c) <= config.center_guard:
        return _bridge_interp(lambda sv: _const_term_generic(k, sv, y, config),
                              center, eps_c, config)
    return _const_term_generic(k, s, y, config)


def _bridge_interp(f, center: complex, eps: complex, config: Config) -> complex:
    """Cubic interpolation across a removable point from 4 samples on a ray.

    Samples f at center + t*h*d for t in {-2,-1,1,2} along the direction d
    of eps, with h safely outside the cancellation annulus, and evaluates
    the unique cubic at the requested offset. The integrand is analytic, so
    the error is O(h^4) against curvature scale ~ the distance to the next
    singular point (>= 1/2 here).
    """
    h = 4.0 * config.center_guard
    d = eps / abs(eps)
    t0 = abs(eps) / h
    ts = (-2.0, -1.0, 1.0, 2.0)
    vals = [f(center + t * h * d) for t in ts]
    acc = 0.0 + 0.0j
    for i, ti in enumerate(ts):
        w = 1.0
        for jj, tj in enumerate(ts):
            if jj != i:
                w *= (t0 - tj) / (ti - tj)
        acc += w * vals[i]
    return acc


def _dc_const_generic(k: int, s: complex, y: float, config: Config) -> complex:
    """(s+k/2)(s+k/2-1) C0(y, s), exact at every zhat pole except the center."""
    eps1 = s + k / 2.0
    eps2 = s - (1.0 - k / 2.0)
    ys = cmath.exp(s * cmath.log(y))
    yd = cmath.exp((1.0 - k - s) * cmath.log(y))
    if k == 0:
        return eps2 * _phi(eps1, config) * ys + eps1 * _psi(eps2, config) * yd
    a_red = _poly_from_roots(s, _a_roots(k), skip=-k / 2.0)
    b_red = _b_sign(k) * _poly_from_roots(s, _b_roots(k), skip=1.0 - k / 2.0)
    return eps1 * eps2 * (a_red * _phi(eps1, config) * ys + b_red * _psi(eps2, config) * yd)


def _dc_const(k: int, s: complex, y: float, config: Config) -> complex:
    center = (1.0 - k) / 2.0
    eps_c = s - center
    if eps_c == 0.0:
        return _center_prefactor(k) * _const_term_center(k, y)
    if abs(eps_c) <= config.center_guard:
        return _bridge_interp(lambda sv: _dc_const_generic(k, sv, y, config),
                              center, eps_c, config)
    return _dc_const_generic(k, s, y, config)


def _center_prefactor(k: int) -> float:
    # (s+k/2)(s+k/2-1) at s = (1-k)/2 is (1/2)(-1/2) = -1/4 for every k
    return -0.25


# ---------------------------------------------------------------------------
# Fourier route


def _mode_poly(k: int, s: complex, positive: bool) -> complex:
    """The Gamma-ratio prefactor of mode n; a polynomial in s in every case."""
    if positive:
        if k >= 0:
            return 1.0 + 0.0j
        acc = 1.0 + 0.0j
        for j in range(k, 0):
            acc *= (s + j)
        return acc
    if k >= 0:
        acc = 1.0 + 0.0j
        for j in range(0, k):
            acc *= (s + j)
        return acc
    return 1.0 + 0.0j


def _mode_coefficient(k: int, s: complex, n: int) -> complex:
    """a_n(s): the coefficient of y^{-k/2} W e^{2 pi i n x} in the expansion."""
    sign = -1.0 if (k // 2) % 2 else 1.0
    an = abs(n)
    return sign * _mode_poly(k, s, n > 0) \
        * cmath.exp(-(s + k / 2.0) * math.log(an)) \
        * sigma_power(an, 2.0 * s + k - 1.0)


def _mode_sum(k: int, s: complex, z: PointUHP, t: TruncationPolicy,
              config: Config) -> tuple[complex, float]:
    """Sum of the nonzero Fourier modes of the completed series.

    Returns (sum, first-omitted-mode magnitude). Fixed summation order:
    |n| increasing, positive sign before negative.
    """
    y, x = z.y, z.x
    mu = s + (k - 1.0) / 2.0
    ymk = y ** (-k / 2.0)
    total = 0.0 + 0.0j
    for n in range(1, t.mode_count + 1):
        wy = 4.0 * math.pi * n * y
        wp = whittaker_w(WhittakerQuery(k / 2.0, mu, wy), config).value
        wm = whittaker_w(WhittakerQuery(-k / 2.0, mu, wy), config).value
        phase = cmath.exp(2j * math.pi * n * x)
        total += _mode_coefficient(k, s, n) * ymk * wp * phase
        total += _mode_coefficient(k, s, -n) * ymk * wm / phase
    n1 = t.mode_count + 1
    wy = 4.0 * math.pi * n1 * y
    wp = whittaker_w(WhittakerQuery(k / 2.0, mu, wy), config).value
    wm = whittaker_w(WhittakerQuery(-k / 2.0, mu, wy), config).value
    omitted = abs(_mode_coefficient(k, s, n1)) * ymk * abs(wp) \
        + abs(_mode_coefficient(k, s, -n1)) * ymk * abs(wm)
    # geometric continuation of the e^{-2 pi n y} decay
    tail = omitted / max(1e-16, 1.0 - math.exp(-2.0 * math.pi * y))
    return total, tail


def fourier_eval_completed(p: SpectralParam, z: PointUHP, t: TruncationPolicy,
                           config: Config = DEFAULT) -> EvalResult:
    """The completed series by its Fourier expansion; valid for all s.

    Value is C0(y,s) plus the two-sided Whittaker mode sum. This route is
    the working analytic continuation of the lattice sum.

    Raises PoleError for k = 0 at s in {0, 1}; TailError when the mode
    truncation cannot reach the requested tolerance.
    """
    k, s = p.k, complex(p.s)
    if k == 0 and (s == 0.0 or s == 1.0):
        raise PoleError(f"completed weight-0 series has a pole at s={s}")
    c0 = constant_term(p, z.y, config)
    modes, tail = _mode_sum(k, s, z, t, config)
    total = c0 + modes
    if tail > t.target_tol * max(1.0, abs(total)):
        raise TailError(
            f"mode tail estimate {tail:.3e} exceeds target {t.target_tol:.3e} "
            f"at mode_count {t.mode_count}")
    return EvalResult(value=total, abs_error_estimate=tail, method="fourier_series")


def doubly_completed_eval(p: SpectralParam, z: PointUHP, t: TruncationPolicy,
                          config: Config = DEFAULT) -> EvalResult:
    """The doubly-completed series (s+k/2)(s+k/2-1) x completed; entire in s.

    The polynomial prefactor is folded into the constant term analytically,
    so the k = 0 poles at s in {0, 1} (and the completion zeros at
    s = -k/2, 1-k/2) evaluate exactly rather than as 0 times infinity.
    """
    k, s = p.k, complex(p.s)
    c0 = _dc_const(k, s, z.y, config)
    modes, tail = _mode_sum(k, s, z, t, config)
    pref = (s + k / 2.0) * (s + k / 2.0 - 1.0)
    total = c0 + pref * modes
    tail = abs(pref) * tail
    if tail > t.target_tol * max(1.0, abs(total)):
        raise TailError(
            f"mode tail estimate {tail:.3e} exceeds target {t.target_tol:.3e} "
            f"at mode_count {t.mode_count}")
    return EvalResult(value=total, abs_error_estimate=tail, method="fourier_series")


def taylor_coeff(p: SpectralParam, z: PointUHP, n: int, t: TruncationPolicy,
                 config: Config = DEFAULT) -> complex:
    """n-th s-derivative of the doubly-completed series at the base point p.s.

    Cauchy-circle quadrature in s around p.s (the function is entire in s);
    returns the raw derivative, not the derivative divided by n factorial.
    A half-grid comparison guards the node count.
    """
    if n < 0 or n > config.max_order:
        raise DomainError(f"derivative order must lie in [0, {config.max_order}]")
    if n == 0:
        return doubly_completed_eval(p, z, t, config).value
    radius = config.circle_radius
    nodes = config.circle_nodes
    s0 = complex(p.s)
    vals = []
    for j in range(nodes):
        sj = s0 + radius * cmath.exp(2j * math.pi * j / nodes)
        vals.append(doubly_completed_eval(SpectralParam(p.k, sj), z, t, config).value)
    fact = math.factorial(n)
    full = sum(v * cmath.exp(-2j * math.pi * n * jj / nodes)
               for jj, v in enumerate(vals)) / nodes * fact / radius ** n
    half = sum(v * cmath.exp(-2j * math.pi * n * jj / (nodes // 2))
               for jj, v in enumerate(vals[::2])) / (nodes // 2) * fact / radius ** n
    scale = max(abs(v) for v in vals) * fact / radius ** n
    if abs(full - half) > 1e-6 * abs(full) + 1e-10 * scale + 1e-280:
        raise AccuracyError(
            f"s-derivative circle failed its half-grid check: "
            f"|delta|={abs(full - half):.3e}")
    return full


def maass_G(alpha: complex, beta: complex, z: PointUHP, t: TruncationPolicy,
            config: Config = DEFAULT) -> EvalResult:
    """The two-variable lattice function G(z, zbar; alpha, beta).

    Computed through G = 2 y^{-beta} E_{alpha-beta}(z, beta), undoing the
    completion prefactor of the Fourier route. Requires alpha - beta to be
    an even integer (otherwise the lattice terms are not single-valued with
    the principal-branch convention used here).
    """
    alpha, beta = complex(alpha), complex(beta)
    diff = alpha - beta
    k_real = diff.real
    k = round(k_real)
    if abs(diff.imag) > 1e-9 or abs(k_real - k) > 1e-9 or k % 2 != 0:
        raise DomainError(f"alpha - beta must be an even integer, got {diff}")
    p = SpectralParam(k, beta)
    completed = fourier_eval_completed(p, z, t, config)
    pref = cmath.exp(-(beta + k / 2.0) * math.log(math.pi)) \
        * gamma(beta + k / 2.0 + abs(k) / 2.0)
    val = 2.0 * cmath.exp(-beta * cmath.log(z.y)) * completed.value / pref
    err = abs(2.0 * completed.abs_error_estimate / pref) * abs(z.y ** (-beta.real))
    return EvalResult(value=val, abs_error_estimate=err, method="fourier_series")
