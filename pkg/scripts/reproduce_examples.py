"""Recompute the worked examples: Im_pi sets, the rejected matrix, the Z x| G2 automorphism."""

from ybe_aut import catalog
from ybe_aut.algebra import format_matrix, format_vector
from ybe_aut.automorphisms import (
    check_membership,
    closure_check,
    enumerate_generalized_permutation,
    image_of,
    quotient_group,
)
from ybe_aut.cocycle import StructureGroup, format_word
from ybe_aut.garside import delta, display_word, divisor_lattice


def section(title):
    print(f"\n== {title}")


def main():
    for name in ("four", "g2", "g3", "zg2"):
        G = StructureGroup(catalog.NAMED[name]())
        mats = enumerate_generalized_permutation(G)
        section(f"{name}: n={G.n} class={G.m} Delta={display_word(G, delta(G))}")
        print(f"|Div(Delta)|={len(divisor_lattice(G))} |W|={quotient_group(G).order}")
        print(f"{len(mats)} signed permutation matrices in Im_pi; {closure_check(G, mats)}")
        for m in mats:
            print(format_matrix(m), end="\n\n")

    section("rejected matrix on the four-element solution")
    G = StructureGroup(catalog.four_class2())
    sigma = ((-4, -3, -4, 0), (1, 1, 2, 0), (2, 1, 1, 0), (0, 0, 0, -1))
    v = check_membership(G, sigma)
    print("accepted" if v.accepted else "rejected")
    print("column actions:", ", ".join(str(p) for p in v.action_perms))
    for i, j, w in v.failures:
        print(f"  (i,j)=({i + 1},{j + 1}) -> {format_vector(w)}")
    print("phi(x1) =", format_word(G.word_of(image_of(G, sigma, G.gen(0)))))

    section("automorphism of Z x| G2")
    Z = StructureGroup(catalog.z_g2())
    sigma = ((1, 2, 2), (1, 3, 2), (1, 2, 3))
    print("accepted" if check_membership(Z, sigma).accepted else "rejected")
    for i in range(3):
        print(f"phi(x{i + 1}) = {display_word(Z, image_of(Z, sigma, Z.gen(i)))}")
    d = delta(Z)
    print(f"phi(Delta) has pi-image {format_vector(image_of(Z, sigma, d).vec)}")


if __name__ == "__main__":
    main()
