"""Search random self-dual codes and check which lattices come out modular.

For each field and prime, a few self-dual codes of length 4 are drawn, the
Construction A lattice is built, and the modularity certificate and parity are
compared with the code-side evenness prediction.
"""

from latcode import (
    ConstructionInput,
    QuadField,
    build_lattice,
    format_code,
    modularity_certificate,
    parity,
    predict_evenness,
    search_self_dual,
    shortest_vectors,
)
from latcode.codes import FiniteField

PAIRS = [(5, 2), (2, 3), (3, 5), (7, 5)]


def main():
    for d, p in PAIRS:
        K = QuadField(d)
        F = FiniteField.residue_field(K, p)
        for seed in range(2):
            C = search_self_dual(F, 4, seed=seed)
            inp = ConstructionInput.make(K, p, C)
            L = build_lattice(inp)
            cert = modularity_certificate(L, d)
            mu, ks = shortest_vectors(L.gram)
            print(f"Q(sqrt({d})), p={p}, seed {seed}: dim {L.dim}, min {mu}, kissing {ks}, "
                  f"{d}-modular {cert.verdict.value}, {parity(L).value} "
                  f"(predicted even: {predict_evenness(inp)})")
        print(format_code(C))


if __name__ == "__main__":
    main()
