"""Build the 5-modular extremal lattice of dimension 12 and certify its properties.

The code is a self-dual [6, 3] code over F_4, viewed as the residue field of
Q(sqrt(5)) at the inert prime 2.
"""

from latcode import (
    build_lattice,
    is_integral,
    modularity_certificate,
    parity,
    predict_evenness,
    shortest_vectors,
    theta_prefix,
)
from latcode.catalog import EXAMPLES


def main():
    inp = EXAMPLES["extremal12"].construction()
    L = build_lattice(inp)

    print(f"dimension {L.dim}, determinant {L.det}, integral {is_integral(L)}")
    print(f"parity {parity(L).value} (code criterion predicts even: {predict_evenness(inp)})")
    cert = modularity_certificate(L, 5)
    print(f"5-modularity: {cert.verdict.value}")
    mu, ks = shortest_vectors(L.gram)
    print(f"minimum {mu}, kissing number {ks}")
    print("theta prefix:", " ".join(map(str, theta_prefix(L.gram, 8).counts)))


if __name__ == "__main__":
    main()
