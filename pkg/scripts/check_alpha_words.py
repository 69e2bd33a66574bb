"""Check the words for the twists about alpha_j at the matrix level and report
the value of the explicit cocycle on them.

For each j the word's matrix must equal the transvection about a_j, and the
cocycle value should be a multiple of a_j.
"""

import argparse

from twistcohom import alpha_twist_word, evaluate, humphries_representation, theorem1_cocycle, twist_matrix
from twistcohom.symplectic import basis_vector, format_vector


def main():
    ap = argparse.ArgumentParser(description="verify alpha_j twist words")
    ap.add_argument("--max-genus", type=int, default=6)
    args = ap.parse_args()
    bad = 0
    for g in range(3, args.max_genus + 1):
        _, rep = humphries_representation(g)
        u = theorem1_cocycle(g)
        for j in range(1, g + 1):
            w = alpha_twist_word(g, j)
            ok = rep.word_matrix(w) == twist_matrix(basis_vector(g, f"a{j}"))
            bad += not ok
            print(f"g={g} alpha_{j}: length {len(w):5d}  matrix {'ok' if ok else 'WRONG'}  "
                  f"u = {format_vector(evaluate(u, rep, w))}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
