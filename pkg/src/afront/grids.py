"""Sampling grids over punctured planes, rectangles and period parallelograms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GridSpec:
    """Sampling specification.

    kind "annulus": n radii in [rmin, rmax] times m angles (wraps in angle).
    kind "rect":    n x-samples in [x0, x1] times m y-samples in [y0, y1].
    kind "fpp":     n x m samples s + t*tau over the fundamental period
                    parallelogram, s = i/n, t = j/m (wraps both ways).
    """

    kind: str = "annulus"
    n: int = 64
    m: int = 64
    rmin: float = 0.2
    rmax: float = 2.0
    x0: float = -2.0
    x1: float = 2.0
    y0: float = -2.0
    y1: float = 2.0
    center: complex = 0j

    def points(self, tau=None):
        """Complex sample array of shape (n, m) plus wrap flags (rows, cols)."""
        if self.kind == "annulus":
            r = np.linspace(self.rmin, self.rmax, self.n)
            th = 2.0 * np.pi * np.arange(self.m) / self.m
            z = self.center + r[:, None] * np.exp(1j * th)[None, :]
            return z, (False, True)
        if self.kind == "rect":
            x = np.linspace(self.x0, self.x1, self.n)
            y = np.linspace(self.y0, self.y1, self.m)
            z = x[:, None] + 1j * y[None, :]
            return z, (False, False)
        if self.kind == "fpp":
            if tau is None:
                raise ValueError("fpp grid needs the torus modulus")
            s = np.arange(self.n) / self.n
            t = np.arange(self.m) / self.m
            z = s[:, None] + t[None, :] * tau
            return z, (True, True)
        raise ValueError(f"unknown grid kind {self.kind!r}")


def default_grid(domain) -> GridSpec:
    """A reasonable sampling grid for the given domain kind."""
    if domain.kind == "torus":
        return GridSpec(kind="fpp", n=64, m=64)
    return GridSpec(kind="annulus", n=96, m=96, rmin=0.15, rmax=3.0)
