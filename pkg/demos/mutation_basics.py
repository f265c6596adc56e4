"""Walkthrough: quivers, mutation, restriction, and icebound arrows.

Run: python demos/mutation_basics.py
"""

from qmut import Quiver, example_five_vertex, is_isomorphic


def show(label, q):
    arrows = ", ".join(f"{s} ->{w} {t}" for s, t, w in q.arrows())
    print(f"{label}: {arrows}   (total arrows: {q.total_arrows()})")


def main():
    print("== A five-vertex quiver and one mutation ==")
    q = example_five_vertex()
    show("Q", q)
    m = q.mutate("B")
    show("mu_B(Q)", m)
    print("mu_B twice returns the original:", m.mutate("B") == q)
    print()

    print("== Mutations at nonadjacent vertices commute ==")
    print(
        "mu_A then mu_D equals mu_D then mu_A:",
        q.mutate("A").mutate("D") == q.mutate("D").mutate("A"),
    )
    print()

    print("== Restriction commutes with mutation ==")
    sub = {"A", "B", "E"}
    lhs = q.mutate("B").restrict(sub)
    rhs = q.restrict(sub).mutate("B")
    show("restrict(mu_B Q)", lhs)
    print("equals mu_B(restrict Q):", lhs == rhs)
    print()

    print("== Frozen vertices and icebound arrows ==")
    iced = Quiver(
        [("A", True), ("B", True), ("C", False)],
        [("A", "B", 4), ("B", "C", 1), ("C", "A", 2)],
    )
    show("Q'", iced)
    print("icebound pairs:", iced.icebound_pairs())
    after = iced.mutate("C")
    show("mu_C(Q')", after)
    print("icebound pairs after mu_C:", after.icebound_pairs())
    print()

    print("== Isomorphism, frozen flags respected ==")
    a = Quiver([("A", True), ("B", False)], [("A", "B", 1)])
    b = Quiver([("X", False), ("Y", True)], [("Y", "X", 1)])
    c = Quiver([("X", False), ("Y", True)], [("X", "Y", 1)])
    print("frozen->mutable matches frozen->mutable:", is_isomorphic(a, b))
    print("but not mutable->frozen:", is_isomorphic(a, c))


if __name__ == "__main__":
    main()
