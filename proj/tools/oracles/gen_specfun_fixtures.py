#!/usr/bin/env python3
"""Generate golden-value fixtures for the special-function kernel.

Values are computed with mpmath at 50 significant digits and written as a
plain-text table consumed by the unit tests:

    gamma   <x>         <value>        <digits>
    besselk <nu> <x>    <value>        <digits>
    erfi    <re> <im>   <vre> <vim>    <digits>

Run from the repository root:

    python3 tools/oracles/gen_specfun_fixtures.py > tests/fixtures/specfun_golden.txt

The file checked into tests/fixtures/ was produced by this script; regenerate
only when the fixture set itself changes.
"""

from mpmath import mp, mpf, mpc, gamma, besselk, erfi

mp.dps = 50

DIGITS = 50


def fmt(x):
    return mp.nstr(x, 22, strip_zeros=False)


def emit(*cols):
    print(" ".join(str(c) for c in cols))


def main():
    print("# golden special-function values, mpmath dps=50")
    print("# columns: kind args... value(s) oracle-digits")

    gamma_args = [
        mpf("0.05"), mpf(1) / 6, mpf("0.3"), mpf("0.5"), mpf(1),
        mpf("1.5"), mpf("2.5"), mpf("3.7"), mpf("6.5"), mpf(10),
        mpf("20.25"), mpf("33.3"), mpf("34.9"),
        # reflection path (negative non-integer)
        mpf("-0.5"), mpf("-1.6"), mpf(-1) / 6,
    ]
    for x in gamma_args:
        emit("gamma", fmt(x), fmt(gamma(x)), DIGITS)

    orders = [mpf(-1) / 6, mpf(1) / 6, mpf(1) / 3, mpf("0.49"),
              mpf("0.5"), mpf(5) / 6, mpf("1.2"), mpf("1.9")]
    xs = [mpf("0.001"), mpf("0.05"), mpf("0.3"), mpf(1), mpf("1.9"),
          mpf(2), mpf("2.1"), mpf(3), mpf(5), mpf(10), mpf(30), mpf(100)]
    for nu in orders:
        for x in xs:
            emit("besselk", fmt(nu), fmt(x), fmt(besselk(nu, x)), DIGITS)

    erfi_args = [
        # real axis: series region, switchover straddle, w-path incl. points
        # adjacent to quadrature nodes of the trapezoid grids
        mpc("0.3"), mpc(1), mpc(2), mpc(3), mpc("3.15"), mpc("3.25"),
        mpc(4), mpc(5), mpc("5.25"), mpc("5.2500001"), mpc("6.0"),
        mpc(8), mpc(12),
        # imaginary axis (erfi(iy) = i erf(y))
        mpc(0, 1), mpc(0, "2.5"), mpc(0, 4), mpc(0, 10), mpc(0, 25),
        # the exp(i pi/4) ray used by the chirped-rectangle evolution
        *[mpc(r, r) / mp.sqrt(2) * mp.sqrt(2) for r in []],
    ]
    ray = mp.exp(mpc(0, mp.pi / 4))
    for r in [mpf(1), mpf("3.3"), mpf(6), mpf(12), mpf(25)]:
        erfi_args.append(ray * r)
    erfi_args += [
        mpc(1, 1), mpc(2, -3), mpc(-2, 3), mpc("0.5", "-0.2"),
        mpc("3.5", "0.1"), mpc(4, 4), mpc(10, 1), mpc(2, 10),
        mpc(-4, "-0.3"), mpc("6.1", "2.2"),
    ]
    for z in erfi_args:
        v = erfi(z)
        emit("erfi", fmt(z.real), fmt(z.imag), fmt(v.real), fmt(v.imag), DIGITS)


if __name__ == "__main__":
    main()
