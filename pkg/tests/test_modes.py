"""Mode-level expansion data and the first-order operator actions on it."""

import json

import numpy as np
import pytest

import frozen_values as fv
from polymaass import (DomainError, FormExpansion, PointUHP, SpectralParam,
                       apply_laplacian, apply_lowering, apply_raising,
                       apply_xi, default_policy, eisenstein_expansion,
                       eval_expansion, expansion_from_json, expansion_to_json,
                       fourier_eval_completed, numeric_laplacian)

Z0 = PointUHP(fv.Z0_X, fv.Z0_Y)


def rel_err(got, want):
    return abs(complex(got) - complex(want)) / max(abs(complex(want)), 1e-300)


def coeff_distance(f, g):
    """Largest coefficient difference between two expansions, plus a scale."""
    diff = 0.0
    scale = 1e-300
    for attr in ("const_coeffs", "mode_coeffs"):
        a = getattr(f, attr)
        b = getattr(g, attr)
        for key in set(a) | set(b):
            diff = max(diff, abs(a.get(key, 0.0) - b.get(key, 0.0)))
        for v in a.values():
            scale = max(scale, abs(v))
    return diff, scale


def combo(*terms):
    """Coefficient dictionaries of a linear combination sum c_i * f_i."""
    const: dict = {}
    modes: dict = {}
    for c, f in terms:
        for key, v in f.const_coeffs.items():
            const[key] = const.get(key, 0.0 + 0.0j) + c * v
        for key, v in f.mode_coeffs.items():
            modes[key] = modes.get(key, 0.0 + 0.0j) + c * v
    return const, modes


def dict_gap(da, db):
    gap = 0.0
    for key in set(da) | set(db):
        gap = max(gap, abs(da.get(key, 0.0 + 0.0j) - db.get(key, 0.0 + 0.0j)))
    return gap


def random_expansion(rng, k, s0, depth, n_modes):
    const = {}
    for j in range(depth):
        for sign in ("-", "+"):
            const[(j, sign)] = complex(rng.standard_normal(),
                                       rng.standard_normal())
    modes = {}
    for n in range(1, n_modes + 1):
        for j in range(depth):
            modes[(n, j)] = complex(rng.standard_normal(), rng.standard_normal())
            modes[(-n, j)] = complex(rng.standard_normal(), rng.standard_normal())
    return FormExpansion(weight=k, s0=s0, depth=depth, N=n_modes,
                         const_coeffs=const, mode_coeffs=modes, is_center=False)


def fd_pair(g, z, h):
    """Richardson-refined first partials (g_x, g_y) at z."""
    def one(step):
        gx = (g(PointUHP(z.x + step, z.y)) - g(PointUHP(z.x - step, z.y))) \
            / (2.0 * step)
        gy = (g(PointUHP(z.x, z.y + step)) - g(PointUHP(z.x, z.y - step))) \
            / (2.0 * step)
        return gx, gy
    ax, ay = one(h)
    bx, by = one(0.5 * h)
    return (4.0 * bx - ax) / 3.0, (4.0 * by - ay) / 3.0


# ---------------------------------------------------------------------------
# expansion evaluation

def test_expansion_eval_matches_fourier_route():
    cases = [(0, 0.4 + 0.3j), (2, 0.8 + 0.3j), (-2, 1.9),
             (2, -0.5), (4, -1.5)]  # the last two are centers
    for k, s in cases:
        p = SpectralParam(k, s)
        f = eisenstein_expansion(p, 12)
        direct = fourier_eval_completed(p, Z0, default_policy(p, Z0, 1e-11)).value
        via_modes = eval_expansion(f, Z0)
        assert rel_err(via_modes, direct) < 1e-10, (k, s)


def test_expansion_requires_positive_mode_count():
    with pytest.raises(DomainError):
        eisenstein_expansion(SpectralParam(0, 0.6), 0)


# ---------------------------------------------------------------------------
# finite-difference checks of the four operator actions

def _fixture_expansion():
    return eisenstein_expansion(SpectralParam(2, 0.4 + 0.3j), 8)


def test_raising_action_fd():
    f = _fixture_expansion()
    k = f.weight
    g = lambda zz: eval_expansion(f, zz)
    gx, gy = fd_pair(g, Z0, 1e-4 * Z0.y)
    expected = 1j * gx + gy + (k / Z0.y) * g(Z0)
    got = eval_expansion(apply_raising(f), Z0)
    assert abs(got - expected) < 1e-6 * max(1.0, abs(expected))


def test_lowering_action_fd():
    f = _fixture_expansion()
    g = lambda zz: eval_expansion(f, zz)
    gx, gy = fd_pair(g, Z0, 1e-4 * Z0.y)
    expected = 1j * Z0.y ** 2 * gx - Z0.y ** 2 * gy
    got = eval_expansion(apply_lowering(f), Z0)
    assert abs(got - expected) < 1e-6 * max(1.0, abs(expected))


def test_xi_action_fd():
    f = _fixture_expansion()
    k = f.weight
    g = lambda zz: eval_expansion(f, zz)
    gx, gy = fd_pair(g, Z0, 1e-4 * Z0.y)
    expected = Z0.y ** k * (1j * gx.conjugate() + gy.conjugate())
    got = eval_expansion(apply_xi(f), Z0)
    assert abs(got - expected) < 1e-6 * max(1.0, abs(expected))


def test_laplacian_action_fd():
    f = _fixture_expansion()
    g = lambda zz: eval_expansion(f, zz)
    h = 1e-3 * Z0.y
    lap_h = numeric_laplacian(g, f.weight, Z0, h)
    lap_h2 = numeric_laplacian(g, f.weight, Z0, 0.5 * h)
    expected = (4.0 * lap_h2 - lap_h) / 3.0
    got = eval_expansion(apply_laplacian(f), Z0)
    assert abs(got - expected) < 1e-7 * max(1.0, abs(expected))


def test_numeric_laplacian_step_validation():
    g = lambda zz: zz.y ** 2
    with pytest.raises(DomainError):
        numeric_laplacian(g, 0, PointUHP(0.0, 1.0), 0.3)


# ---------------------------------------------------------------------------
# exact operator algebra on coefficient data

def test_operator_algebra_identities():
    rng = np.random.default_rng(7)
    for k in (-4, 0, 2):
        f = random_expansion(rng, k, 0.55 + 0.4j, depth=3, n_modes=3)
        lap = apply_laplacian(f)
        lr = apply_lowering(apply_raising(f))
        rl = apply_raising(apply_lowering(f))
        xx = apply_xi(apply_xi(f))
        _, scale = coeff_distance(f, f)
        scale = max(scale, 1.0)

        want_c, want_m = combo((-1.0, lap), (float(k), f))
        assert dict_gap(lr.const_coeffs, want_c) < 1e-12 * scale * 10
        assert dict_gap(lr.mode_coeffs, want_m) < 1e-12 * scale * 10

        want_c, want_m = combo((-1.0, lap))
        assert dict_gap(rl.const_coeffs, want_c) < 1e-12 * scale * 10
        assert dict_gap(rl.mode_coeffs, want_m) < 1e-12 * scale * 10

        comm_c, comm_m = combo((1.0, rl), (-1.0, lr))
        want_c, want_m = combo((-float(k), f))
        assert dict_gap(comm_c, want_c) < 1e-12 * scale * 10
        assert dict_gap(comm_m, want_m) < 1e-12 * scale * 10

        assert dict_gap(xx.const_coeffs, lap.const_coeffs) < 1e-12 * scale * 10
        assert dict_gap(xx.mode_coeffs, lap.mode_coeffs) < 1e-12 * scale * 10


def test_operator_metadata_shifts():
    f = _fixture_expansion()
    up = apply_raising(f)
    down = apply_lowering(f)
    flipped = apply_xi(f)
    assert up.weight == f.weight + 2 and abs(up.s0 - (f.s0 - 1.0)) < 1e-14
    assert down.weight == f.weight - 2 and abs(down.s0 - (f.s0 + 1.0)) < 1e-14
    assert flipped.weight == 2 - f.weight
    assert abs(flipped.s0 - (-f.s0.conjugate())) < 1e-14


def test_xi_on_eisenstein_both_branches():
    # Negative weight: xi maps the completed series onto the completed
    # series of weight 2-k at the reflected-conjugated base with factor 1;
    # positive weight picks up the polynomial factor conj(s0)(conj(s0)+k-1).
    for k, s0 in ((-2, 1.4 + 0.2j), (2, 0.7 + 0.4j)):
        f = eisenstein_expansion(SpectralParam(k, s0), 6)
        image = apply_xi(f)
        t = complex(s0).conjugate()
        factor = 1.0 + 0.0j if k <= 0 else t * (t + k - 1.0)
        target = eisenstein_expansion(SpectralParam(2 - k, -t), 6)
        gap_c = dict_gap(image.const_coeffs,
                         {key: factor * v for key, v in target.const_coeffs.items()})
        gap_m = dict_gap(image.mode_coeffs,
                         {key: factor * v for key, v in target.mode_coeffs.items()})
        _, scale = coeff_distance(target, target)
        assert gap_c < 1e-12 * max(scale, 1.0), k
        assert gap_m < 1e-12 * max(scale, 1.0), k


def test_raising_lowering_on_depth1_eigendata():
    # On depth-1 data of eigenvalue lambda, lowering-after-raising acts as
    # the scalar (k - lambda).
    k, s0 = 2, 0.55 + 0.4j
    f = eisenstein_expansion(SpectralParam(k, s0), 5)
    lam = s0 * (s0 + k - 1.0)
    lr = apply_lowering(apply_raising(f))
    want_c, want_m = combo((k - lam, f))
    _, scale = coeff_distance(f, f)
    assert dict_gap(lr.const_coeffs, want_c) < 1e-12 * max(abs(k - lam), 1.0) * max(scale, 1.0)
    assert dict_gap(lr.mode_coeffs, want_m) < 1e-12 * max(abs(k - lam), 1.0) * max(scale, 1.0)


# ---------------------------------------------------------------------------
# serialization

def test_json_roundtrip_generic():
    f = eisenstein_expansion(SpectralParam(2, 0.8 + 0.3j), 5)
    g = expansion_from_json(expansion_to_json(f))
    assert g.weight == f.weight and g.s0 == f.s0 and g.depth == f.depth
    assert g.N == f.N and g.is_center == f.is_center
    diff, _ = coeff_distance(f, g)
    assert diff == 0.0


def test_json_roundtrip_center():
    f = eisenstein_expansion(SpectralParam(4, -1.5), 4)
    assert f.is_center
    g = expansion_from_json(expansion_to_json(f))
    assert g.is_center
    diff, _ = coeff_distance(f, g)
    assert diff == 0.0


def test_json_shape_is_documented_format():
    f = eisenstein_expansion(SpectralParam(0, 0.7), 3)
    d = json.loads(expansion_to_json(f))
    assert list(d) == ["weight", "s0", "depth", "N", "is_center",
                       "const", "modes"]
    assert all(set(row) == {"j", "sign", "c"} for row in d["const"])
    assert all(set(row) == {"n", "j", "c"} for row in d["modes"])
    assert all(len(row["c"]) == 2 for row in d["modes"])
