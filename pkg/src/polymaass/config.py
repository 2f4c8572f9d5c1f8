"""Tunable numeric thresholds, collected in one immutable structure.

Every module reads its knobs from a Config instance so that a single object
(or the POLYMAASS_CONFIG environment file) controls all tolerances. The
defaults reproduce every documented accuracy target in double precision.
"""

from __future__ import annotations

import dataclasses
import json


@dataclasses.dataclass(frozen=True)
class Config:
    # Whittaker evaluation
    y_asym_base: float = 30.0        # asymptotic series used for y >= base + c_mu|mu|^2 + c_kappa|kappa|^2
    y_asym_mu: float = 2.0
    y_asym_kappa: float = 2.0
    quad_margin: float = 0.75        # required Re(mu - kappa + 1/2) before the integral route is trusted
    quad_max_level: int = 12         # exp-sinh halving levels
    quad_tol: float = 1e-14
    circle_radius: float = 0.25      # Cauchy circle for mu-derivatives
    circle_nodes: int = 64
    max_order: int = 8               # largest mu-derivative / Taylor order served

    # completed zeta
    laurent_window: float = 0.35     # |s-1| (and reflected |s|) radius using the frozen Laurent series
    zeta_em_terms: int = 12          # Bernoulli correction terms
    zeta_em_base: int = 25           # minimum Euler-Maclaurin cutoff N

    # eisenstein evaluation
    center_guard: float = 1e-3       # annulus around the center where the constant term interpolates
    pole_guard: float = 1e-9         # how close a zhat argument must be to {0,1} to trigger deflation
    default_tol: float = 1e-10
    default_lattice_radius: int = 120
    max_mode_count: int = 64

    # verification
    fd_step_scale: float = 1e-4      # xi / operator finite-difference step relative to y
    default_seed: int = 20260817

    def with_overrides(self, **kwargs) -> "Config":
        return dataclasses.replace(self, **kwargs)

    @staticmethod
    def from_json_file(path: str) -> "Config":
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        known = {f.name for f in dataclasses.fields(Config)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return Config(**data)


DEFAULT = Config()
