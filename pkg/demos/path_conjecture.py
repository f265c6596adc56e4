"""Walkthrough: the path-quiver product rule, experimentally.

For a path  A -> C_1 -> ... -> C_k -> B  with frozen endpoints and weights
x_0..x_k, every quiver found in the (bounded) mutation class so far carries
either 0 or x_0*x_1*...*x_k arrows between A and B.  Proven for k <= 2, open
in general; this script reports what bounded search sees.

Run: python demos/path_conjecture.py
"""

from qmut import SearchLimits, build_path_quiver, conjecture_scan


def main():
    print("== k = 2: the proven case ==")
    limits = SearchLimits(max_states=50_000, max_multiplicity=1 << 64)
    for weights in ([1, 2, 1], [2, 3, 5], [3, 1, 2]):
        rep = conjecture_scan(weights, limits)
        print(
            f"weights {weights}: product {rep.product}, observed {sorted(rep.observed)},"
            f" consistent={rep.consistent}, exhausted={rep.exhausted},"
            f" visited {rep.visited}"
        )
    print()

    print("== k = 3: open territory ==")
    limits = SearchLimits(max_states=20_000, max_multiplicity=1 << 64)
    for weights in ([1, 1, 1, 1], [2, 1, 1, 2], [1, 2, 2, 1], [2, 2, 2, 2]):
        rep = conjecture_scan(weights, limits)
        flag = "" if rep.exhausted else "  [search truncated: " + ",".join(sorted(rep.truncated_by)) + "]"
        print(
            f"weights {weights}: product {rep.product}, observed {sorted(rep.observed)},"
            f" consistent={rep.consistent}{flag}"
        )
    print()
    print("the path quiver itself, for reference:")
    print(" ", build_path_quiver([2, 1, 1, 2]).arrows())


if __name__ == "__main__":
    main()
