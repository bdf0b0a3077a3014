#!/usr/bin/env python3
"""Brute-force reference values for the two-slot far-field model.

Independent of the C++ quadrature: cell-midpoint Riemann sums on a
2000 x 4000 (theta x phi) grid, with the synthesis chain re-derived here
from the closed-form expressions. Prints the constants frozen into
tests/golden_values.hpp and writes the E-plane golden cut CSV.
"""
import math
import sys

import numpy as np

C0 = 299792458.0

FIXTURES = {
    "gps_l1": dict(f=1.57542e9, L=12.25e-3, W=12.25e-3, h=4.5e-3, er=5.5),
    "gps_glonass": dict(f=1.5925e9, L=12.25e-3, W=12.25e-3, h=4.5e-3, er=5.5),
}


def eps_eff(er, h, w):
    return (er + 1) / 2 + (er - 1) / 2 * (1 + 12 * h / w) ** -0.5


def delta_l(h, w, e):
    return 0.412 * h * (e + 0.3) * (w / h + 0.264) / ((e - 0.258) * (w / h + 0.8))


def intensity(k0, le, w, theta, phi):
    st = np.sin(theta)
    u = k0 * w / 2 * st * np.sin(phi)
    sinc = np.sinc(u / np.pi)
    f = sinc**2 * np.cos(k0 * le / 2 * st * np.cos(phi)) ** 2 * (1 - st**2 * np.cos(phi) ** 2)
    return np.where(theta <= np.pi / 2, f, 0.0)


def directivity(k0, le, w, n_theta_cells=2000, n_phi=4000):
    dt = math.pi / n_theta_cells
    dp = 2 * math.pi / n_phi
    theta = (np.arange(n_theta_cells) + 0.5) * dt
    phi = (np.arange(n_phi) + 0.5) * dp
    omega = 0.0
    for t in theta:  # row by row keeps memory small
        omega += float(np.sum(intensity(k0, le, w, t, phi))) * math.sin(t) * dt * dp
    return 4 * math.pi / omega


def to_dbi(x):
    return -120.0 if x <= 0 else 10 * math.log10(x)


def main():
    out_csv = sys.argv[1] if len(sys.argv) > 1 else None
    for name, fx in FIXTURES.items():
        k0 = 2 * math.pi * fx["f"] / C0
        e = eps_eff(fx["er"], fx["h"], fx["W"])
        le = fx["L"] + 2 * delta_l(fx["h"], fx["W"], e)
        d = directivity(k0, le, fx["W"])
        e0 = 1.0  # fixtures are matched (50 + j0 into 50 ohm), ec = ed = 1
        def cut(plane_phi, deg):
            th = math.radians(abs(deg))
            ph = plane_phi if deg >= 0 else plane_phi + math.pi
            return to_dbi(e0 * d * float(intensity(k0, le, fx["W"], th, ph)))
        de = cut(0.0, 30) - cut(0.0, 90)
        dh = cut(math.pi / 2, 30) - cut(math.pi / 2, 90)
        print(f"{name}: k0={k0!r} Le={le!r} k0Le={k0*le!r}")
        print(f"  D={d!r} D_dbi={to_dbi(d)!r}")
        print(f"  delta_E={de!r} delta_H={dh!r}")
        if name == "gps_l1" and out_csv:
            with open(out_csv, "w") as fh:
                fh.write("theta_deg,gain_dbi\n")
                for deg in range(-90, 91):
                    fh.write(f"{deg},{cut(0.0, deg)!r}\n")


if __name__ == "__main__":
    main()
