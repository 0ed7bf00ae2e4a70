"""Weak secrecy gain of the 12-dimensional 3-modular lattice O3.

The theta prefix is grown until the truncation estimate falls below the
requested tolerance, then compared with the gain of the scaled cubic lattice.
"""

from latcode import NeedLargerPrefix, secrecy_gain
from latcode.catalog import EXAMPLES
from latcode.enumeration import theta_prefix
from latcode.secrecy import weak_secrecy_gain


def main():
    L = EXAMPLES["o3"].lattice()

    short = theta_prefix(L.gram, 9)
    try:
        weak_secrecy_gain(short, 3, L.dim, tol=5e-4)
    except NeedLargerPrefix as exc:
        print(f"cutoff 9 is too short: {exc} (suggested cutoff {exc.suggested_M})")

    report, theta = secrecy_gain(L.gram, 3, tol=1e-6)
    print(f"chi = {report.chi:.6f} at cutoff {report.M}, tail estimate {report.tail_estimate:.2e}")
    print("theta prefix:", " ".join(map(str, theta.counts)))


if __name__ == "__main__":
    main()
