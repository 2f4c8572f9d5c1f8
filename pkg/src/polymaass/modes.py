"""Coefficient-level representation of moderate-growth forms and the exact
actions of the weight-shift and Laplacian operators on that data.

A FormExpansion stores, for one weight k and one spectral base point s0,
the constant-term atoms (coefficient x (log y)^j y^sigma, with sigma one of
the two exponents y^{s0} / y^{1-k-s0}) and, for each nonzero mode n, a stack
of coefficients against the derivative basis

    u[j](y) = y^{-k/2} (d/dmu)^j W_{sgn(n) k/2, mu}(4 pi |n| y),
    mu = s0 + (k-1)/2.

At the spectral center s0 = (1-k)/2 the odd-order derivatives vanish
identically, so the stored basis switches to even orders 2j (is_center) and
the constant term collapses to a single exponent with log powers.

Every operator action below is exact on this data: multiplying a depth-1
eigenfunction identity by an analytic factor g(s) and differentiating j
times in s gives the finite Leibniz mix g, g', g'' (all factors here are
polynomials of degree <= 2), and the xi-operator adds a conjugation plus a
mode flip n -> -n. The four factor tables are:

    raising   R_k: weight k+2, base s0-1; g = -1 (n>0), (s+k)(1-s) (n<0)
    lowering  L_k: weight k-2, base s0+1; g = s(s+k-1) (n>0), 1 (n<0)
    xi        xi_k: weight 2-k, base -conj(s0), conjugate-linear, mode flip;
              g(t) = t(1-k-t) (input n>0), -1 (input n<0), t = conj(s)
    laplacian Delta_k: same weight and base; g = s(s+k-1) for both signs

All derivative factors of these g vanish at the center base point, which is
why the even-order center basis is closed under all four actions (the center
maps to the center of the shifted weight in every case).
"""

from __future__ import annotations

import cmath
import dataclasses
import json
import math
import types

from .config import Config, DEFAULT
from .errors import DomainError, PoleError
from .eisenstein import PointUHP, SpectralParam, constant_term, _mode_coefficient, \
    _const_term_center, _a_roots, _b_roots, _b_sign, _poly_from_roots, _phi, _psi, \
    _EULER_GAMMA, _LOG_4PI
from .special import whittaker_w_mu_stack

__all__ = [
    "FormExpansion",
    "ConstTermAtom",
    "eval_expansion",
    "eisenstein_expansion",
    "apply_raising",
    "apply_lowering",
    "apply_xi",
    "apply_laplacian",
    "numeric_laplacian",
    "expansion_to_json",
    "expansion_from_json",
]


@dataclasses.dataclass(frozen=True)
class ConstTermAtom:
    """One constant-term summand: coefficient * (log y)^log_power * y^exponent."""

    log_power: int
    exponent: complex
    coefficient: complex

    def __post_init__(self):
        if self.log_power < 0:
            raise DomainError("log_power must be non-negative")

    def eval(self, y: float) -> complex:
        return self.coefficient * math.log(y) ** self.log_power \
            * cmath.exp(self.exponent * math.log(y))


@dataclasses.dataclass(frozen=True)
class FormExpansion:
    """Fourier-coefficient data of a depth-m moderate-growth form.

    const_coeffs maps (log_power j, sign) -> complex, where sign "-" tags the
    y^{s0} exponent family and "+" tags y^{1-k-s0}; at the center the two
    exponents coincide and everything is stored under "-" with log powers
    up to 2*depth - 1. mode_coeffs maps (n, j) -> complex against the u[j]
    basis (u[2j] when is_center).
    """

    weight: int
    s0: complex
    depth: int
    N: int
    const_coeffs: dict
    mode_coeffs: dict
    is_center: bool = False

    def __post_init__(self):
        if not (isinstance(self.weight, int) and self.weight % 2 == 0):
            raise DomainError("weight must be an even integer")
        if self.depth < 1:
            raise DomainError("depth must be >= 1")
        if self.N < 1:
            raise DomainError("N must be >= 1")
        jmax = 2 * self.depth if self.is_center else self.depth
        for (j, sign) in self.const_coeffs:
            if not (0 <= j < jmax) or sign not in ("+", "-"):
                raise DomainError(f"bad const key ({j}, {sign!r})")
        for (n, j) in self.mode_coeffs:
            if n == 0 or abs(n) > self.N or not (0 <= j < self.depth):
                raise DomainError(f"bad mode key ({n}, {j})")
        if self.is_center:
            center = (1.0 - self.weight) / 2.0
            if complex(self.s0) != complex(center):
                raise DomainError("is_center requires s0 = (1-k)/2")
        object.__setattr__(self, "const_coeffs",
                           types.MappingProxyType(dict(self.const_coeffs)))
        object.__setattr__(self, "mode_coeffs",
                           types.MappingProxyType(dict(self.mode_coeffs)))

    def const_atoms(self) -> list[ConstTermAtom]:
        """The constant term as explicit atoms, slot signs resolved."""
        out = []
        for (j, sign), c in sorted(self.const_coeffs.items(),
                                   key=lambda kv: (kv[0][0], kv[0][1])):
            sigma = self.s0 if sign == "-" else 1.0 - self.weight - self.s0
            out.append(ConstTermAtom(log_power=j, exponent=sigma, coefficient=c))
        return out


def eval_expansion(f: FormExpansion, z: PointUHP, config: Config = DEFAULT) -> complex:
    """Evaluate the expansion at a point of the upper half plane."""
    y, x = z.y, z.x
    total = 0.0 + 0.0j
    for atom in f.const_atoms():
        total += atom.eval(y)
    k = f.weight
    mu = f.s0 + (k - 1.0) / 2.0
    ymk = y ** (-k / 2.0)
    by_n: dict[int, dict[int, complex]] = {}
    for (n, j), c in f.mode_coeffs.items():
        by_n.setdefault(n, {})[j] = c
    for n in sorted(by_n, key=lambda m: (abs(m), m < 0)):
        stack = by_n[n]
        jtop = max(stack)
        order_top = 2 * jtop if f.is_center else jtop
        kappa = (k / 2.0) if n > 0 else (-k / 2.0)
        ws = whittaker_w_mu_stack(kappa, mu, 4.0 * math.pi * abs(n) * y,
                                  order_top, config)
        phase = cmath.exp(2j * math.pi * n * x)
        for j, c in sorted(stack.items()):
            order = 2 * j if f.is_center else j
            total += c * ymk * ws[order] * phase
    return total


def eisenstein_expansion(p: SpectralParam, N: int, config: Config = DEFAULT) -> FormExpansion:
    """Depth-1 expansion of the completed series at (k, s), modes |n| <= N.

    Mode coefficients are the explicit polynomial-times-divisor-sum values;
    constant-term slots come from the deflated zhat products, exact at the
    completion zeros. At the center the logarithmic closed form is stored.
    """
    k, s = p.k, complex(p.s)
    if k == 0 and (s == 0.0 or s == 1.0):
        raise PoleError(f"completed weight-0 series has a pole at s={s}")
    if N < 1:
        raise DomainError("N must be >= 1")
    center = (1.0 - k) / 2.0
    is_center = (s == complex(center))
    const: dict = {}
    if is_center:
        a = abs(k)
        h = 1.0
        for j in range(1, a, 2):
            h *= j
        h /= 2.0 ** (a // 2)
        wk = 2.0 * sum(1.0 / j for j in range(1, a, 2))
        const[(0, "-")] = h * (_EULER_GAMMA - _LOG_4PI + wk)
        const[(1, "-")] = h
    else:
        eps1 = s + k / 2.0
        eps2 = s - (1.0 - k / 2.0)
        if k == 0:
            cm = _phi(eps1, config) / eps1
            cp = _psi(eps2, config) / eps2
        else:
            cm = _poly_from_roots(s, _a_roots(k), skip=-k / 2.0) * _phi(eps1, config)
            cp = _b_sign(k) * _poly_from_roots(s, _b_roots(k), skip=1.0 - k / 2.0) \
                * _psi(eps2, config)
        const[(0, "-")] = cm
        const[(0, "+")] = cp
    modes = {}
    for n in range(1, N + 1):
        modes[(n, 0)] = _mode_coefficient(k, s, n)
        modes[(-n, 0)] = _mode_coefficient(k, s, -n)
    return FormExpansion(weight=k, s0=s, depth=1, N=N,
                         const_coeffs=const, mode_coeffs=modes,
                         is_center=is_center)


# ---------------------------------------------------------------------------
# Operator engine

# A mode action is "multiply the depth-1 identity by g(s), differentiate j
# times": with g at most quadratic the output stack is
#     d[i] = g c[i] + (i+1) g' c[i+1] + C(i+2,2) g'' c[i+2].
# The conjugate-linear variant (xi) evaluates g at t = conj(s), flips the
# mode sign, and picks up (-1)^{j-i} from d/dt acting through u(-t).


def _leibniz_linear(stack: dict[int, complex], g0: complex, g1: complex,
                    g2: complex) -> dict[int, complex]:
    out: dict[int, complex] = {}
    for j, c in stack.items():
        out[j] = out.get(j, 0.0) + g0 * c
        if j >= 1 and g1 != 0.0:
            out[j - 1] = out.get(j - 1, 0.0) + j * g1 * c
        if j >= 2 and g2 != 0.0:
            out[j - 2] = out.get(j - 2, 0.0) + (j * (j - 1) // 2) * g2 * c
    return {j: v for j, v in out.items() if v != 0.0 or j in stack}


def _leibniz_conj(stack: dict[int, complex], g0: complex, g1: complex,
                  g2: complex) -> dict[int, complex]:
    out: dict[int, complex] = {}
    for j, c in stack.items():
        cc = complex(c).conjugate()
        # contribution to d[j - i] is C(j, i) g^{(i)} (-1)^{j-i} conj(c)
        out[j] = out.get(j, 0.0) + cc * g0 * ((-1.0) ** j)
        if j >= 1 and g1 != 0.0:
            out[j - 1] = out.get(j - 1, 0.0) + cc * j * g1 * ((-1.0) ** (j - 1))
        if j >= 2 and g2 != 0.0:
            out[j - 2] = out.get(j - 2, 0.0) \
                + cc * (j * (j - 1) // 2) * g2 * ((-1.0) ** (j - 2))
    return out


def _modes_by_n(f: FormExpansion) -> dict[int, dict[int, complex]]:
    by_n: dict[int, dict[int, complex]] = {}
    for (n, j), c in f.mode_coeffs.items():
        by_n.setdefault(n, {})[j] = complex(c)
    return by_n


def _center_expand(stack: dict[int, complex]) -> dict[int, complex]:
    """Center stack (index j <-> derivative order 2j) to generic indexing."""
    return {2 * j: c for j, c in stack.items()}


def _center_repack(stack: dict[int, complex], what: str) -> dict[int, complex]:
    out = {}
    for j, c in stack.items():
        if j % 2 == 1:
            if c != 0.0:
                raise DomainError(f"{what}: center action produced an odd-order term")
            continue
        out[j // 2] = c
    return out


def _apply_mode_action(f: FormExpansion, factor_fn, conj_flip: bool) -> dict:
    """Run the Leibniz engine over every mode stack of f.

    factor_fn(n) returns (g0, g1, g2): the factor polynomial of the depth-1
    action and its s-derivatives, already evaluated at the base point (at
    conj(s0) for the conjugate-linear case). conj_flip selects the
    xi variant: conjugated coefficients and output mode -n.
    """
    out: dict = {}
    for n, stack in _modes_by_n(f).items():
        g0, g1, g2 = factor_fn(n)
        work = _center_expand(stack) if f.is_center else stack
        if conj_flip:
            res = _leibniz_conj(work, g0, g1, g2)
            n_out = -n
        else:
            res = _leibniz_linear(work, g0, g1, g2)
            n_out = n
        if f.is_center:
            res = _center_repack(res, "mode action")
        for j, c in res.items():
            out[(n_out, j)] = c
    return out


def _apply_const_action(f: FormExpansion, atom_fn, swap: bool) -> dict:
    """Transform const slots atom-by-atom.

    atom_fn(j, sigma, c) yields (j_out, c_out) contributions for one atom
    (the new exponent is implied by the slot bookkeeping: R/L keep slots,
    xi swaps them, Delta keeps both slot and exponent).
    """
    out: dict = {}
    k, s0 = f.weight, complex(f.s0)
    for (j, sign), c in f.const_coeffs.items():
        sigma = s0 if sign == "-" else 1.0 - k - s0
        nsign = sign if not swap else ("+" if sign == "-" else "-")
        if f.is_center:
            nsign = "-"
        for (j_out, c_out) in atom_fn(j, sigma, complex(c)):
            if j_out < 0:
                continue
            key = (j_out, nsign)
            out[key] = out.get(key, 0.0) + c_out
    return {key: v for key, v in out.items()}


def apply_raising(f: FormExpansion) -> FormExpansion:
    """Maass raising operator on coefficient data: weight k+2, base s0-1.

    Modes: factor -1 for n>0 and (s+k)(1-s) for n<0, Leibniz-mixed through
    the derivative stack. Const atoms: c (log y)^j y^sigma picks up
    d/dy + k/y, i.e. j c -> (j-1) slot and (sigma+k) c at exponent sigma-1.
    """
    k, s0 = f.weight, complex(f.s0)

    def factors(n):
        if n > 0:
            return (-1.0 + 0.0j, 0.0, 0.0)
        # g(s) = (s+k)(1-s); g' = 1-k-2s; g'' = -2
        return ((s0 + k) * (1.0 - s0), 1.0 - k - 2.0 * s0, -2.0)

    def atom(j, sigma, c):
        return [(j - 1, j * c), (j, (sigma + k) * c)]

    return FormExpansion(weight=k + 2, s0=s0 - 1.0, depth=f.depth, N=f.N,
                         const_coeffs=_apply_const_action(f, atom, swap=False),
                         mode_coeffs=_apply_mode_action(f, factors, False),
                         is_center=f.is_center)


def apply_lowering(f: FormExpansion) -> FormExpansion:
    """Maass lowering operator on coefficient data: weight k-2, base s0+1.

    Modes: factor s(s+k-1) for n>0 and 1 for n<0. Const atoms: -y^2 d/dy,
    i.e. -j c to the (j-1) slot and -sigma c, both at exponent sigma+1.
    """
    k, s0 = f.weight, complex(f.s0)

    def factors(n):
        if n > 0:
            # g(s) = s(s+k-1); g' = 2s+k-1; g'' = 2
            return (s0 * (s0 + k - 1.0), 2.0 * s0 + k - 1.0, 2.0)
        return (1.0 + 0.0j, 0.0, 0.0)

    def atom(j, sigma, c):
        return [(j - 1, -j * c), (j, -sigma * c)]

    return FormExpansion(weight=k - 2, s0=s0 + 1.0, depth=f.depth, N=f.N,
                         const_coeffs=_apply_const_action(f, atom, swap=False),
                         mode_coeffs=_apply_mode_action(f, factors, False),
                         is_center=f.is_center)


def apply_xi(f: FormExpansion) -> FormExpansion:
    """The conjugate-linear xi-operator: weight 2-k, base -conj(s0).

    Modes flip sign (output mode n comes from input mode -n) and conjugate;
    the depth-1 factor is t(1-k-t) at t = conj(s0) for input n>0 and -1 for
    input n<0. Const atoms map c (log y)^j y^sigma to
    conj(c) [j (log y)^{j-1} + conj(sigma) (log y)^j] y^{conj(sigma)+k-1},
    which exchanges the y^{s0} and y^{1-k-s0} slots.
    """
    k, s0 = f.weight, complex(f.s0)
    t = s0.conjugate()

    def factors(n):
        if n > 0:
            # g(t) = t(1-k-t); g' = 1-k-2t; g'' = -2
            return (t * (1.0 - k - t), 1.0 - k - 2.0 * t, -2.0)
        return (-1.0 + 0.0j, 0.0, 0.0)

    def atom(j, sigma, c):
        sc = sigma.conjugate() if isinstance(sigma, complex) else complex(sigma).conjugate()
        cc = complex(c).conjugate()
        return [(j - 1, j * cc), (j, sc * cc)]

    return FormExpansion(weight=2 - k, s0=-t, depth=f.depth, N=f.N,
                         const_coeffs=_apply_const_action(f, atom, swap=True),
                         mode_coeffs=_apply_mode_action(f, factors, True),
                         is_center=f.is_center)


def apply_laplacian(f: FormExpansion) -> FormExpansion:
    """The weight-k hyperbolic Laplacian on coefficient data (same base).

    Modes follow the stack recursion (Delta - lambda) u[j] =
    j(2 s0 + k - 1) u[j-1] + j(j-1) u[j-2]; the const atoms follow the exact
    y-derivative formula for (log y)^j y^sigma.
    """
    k, s0 = f.weight, complex(f.s0)

    def factors(n):
        # g(s) = s(s+k-1) for both mode signs
        return (s0 * (s0 + k - 1.0), 2.0 * s0 + k - 1.0, 2.0)

    def atom(j, sigma, c):
        return [(j, sigma * (sigma + k - 1.0) * c),
                (j - 1, j * (2.0 * sigma + k - 1.0) * c),
                (j - 2, j * (j - 1) * c)]

    return FormExpansion(weight=k, s0=s0, depth=f.depth, N=f.N,
                         const_coeffs=_apply_const_action(f, atom, swap=False),
                         mode_coeffs=_apply_mode_action(f, factors, False),
                         is_center=f.is_center)


def numeric_laplacian(g, k: int, z: PointUHP, h: float) -> complex:
    """Finite-difference weight-k Laplacian on a pointwise function g.

    Five-point cross stencil for y^2 (g_xx + g_yy) - i k y (g_x + i g_y);
    O(h^2) for C^4 integrands. The stencil must stay inside the upper half
    plane with margin: requires h < y/4.
    """
    if not (h > 0.0 and h < z.y / 4.0):
        raise DomainError(f"stencil step must satisfy 0 < h < y/4, got h={h}")
    x, y = z.x, z.y
    g0 = g(PointUHP(x, y))
    gxp = g(PointUHP(x + h, y))
    gxm = g(PointUHP(x - h, y))
    gyp = g(PointUHP(x, y + h))
    gym = g(PointUHP(x, y - h))
    gxx = (gxp + gxm - 2.0 * g0) / (h * h)
    gyy = (gyp + gym - 2.0 * g0) / (h * h)
    gx = (gxp - gxm) / (2.0 * h)
    gy = (gyp - gym) / (2.0 * h)
    return y * y * (gxx + gyy) - 1j * k * y * (gx + 1j * gy)


# ---------------------------------------------------------------------------
# Serialization


def expansion_to_json(f: FormExpansion) -> str:
    """Serialize to the fixed JSON shape: {weight, s0, depth, N, is_center,
    const:[{j, sign, c}], modes:[{n, j, c}]} with complex as [re, im]."""
    const = []
    for (j, sign) in sorted(f.const_coeffs, key=lambda key: (key[0], key[1])):
        c = complex(f.const_coeffs[(j, sign)])
        const.append({"j": j, "sign": sign, "c": [c.real, c.imag]})
    modes = []
    for (n, j) in sorted(f.mode_coeffs, key=lambda key: (abs(key[0]), key[0] < 0, key[1])):
        c = complex(f.mode_coeffs[(n, j)])
        modes.append({"n": n, "j": j, "c": [c.real, c.imag]})
    s0 = complex(f.s0)
    payload = {
        "weight": f.weight,
        "s0": [s0.real, s0.imag],
        "depth": f.depth,
        "N": f.N,
        "is_center": f.is_center,
        "const": const,
        "modes": modes,
    }
    return json.dumps(payload, indent=2)


def expansion_from_json(text: str) -> FormExpansion:
    """Inverse of expansion_to_json."""
    d = json.loads(text)
    const = {(int(e["j"]), str(e["sign"])): complex(e["c"][0], e["c"][1])
             for e in d["const"]}
    modes = {(int(e["n"]), int(e["j"])): complex(e["c"][0], e["c"][1])
             for e in d["modes"]}
    return FormExpansion(weight=int(d["weight"]),
                         s0=complex(d["s0"][0], d["s0"][1]),
                         depth=int(d["depth"]), N=int(d["N"]),
                         const_coeffs=const, mode_coeffs=modes,
                         is_center=bool(d["is_center"]))
