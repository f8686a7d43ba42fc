"""The truncated polynomial line over F_7, graded by Z_3 with a non-symmetric braiding.

Here b and its inverse differ, so t3 and t4 carry information t1 and t2 do not.
"""

from mbmcheck.builders import check_bimonoid, from_bimonoid, quantum_line
from mbmcheck.functorial import check_multiplier_bicomonad, check_multiplier_bimonad
from mbmcheck.mbm import check_regular, determine_t3, determine_t4
from mbmcheck.repcat import regular_comodule, solve_companion_coaction


def main():
    B = quantum_line()
    print(check_bimonoid(B).render_text())
    R = from_bimonoid(B)
    A = R.A
    same = R.ctx.braiding(A, A).materialize() == R.ctx.braiding_inv(A, A).materialize()
    print(f"\nbraiding equals its inverse: {same}")
    print(f"regular: {check_regular(R).passed}")

    for label, solve, stored in (("t3", determine_t3, R.t3), ("t4", determine_t4, R.t4)):
        sol, nullity = solve(R)
        print(f"{label} recovered from the multiplication: {sol == stored} (kernel dim {nullity})")
    C = regular_comodule(R)
    v3, nullity = solve_companion_coaction(R, C.V, C.v1)
    print(f"v3 recovered from v1: {v3 == C.v3} (kernel dim {nullity})")

    for check in (check_multiplier_bicomonad, check_multiplier_bimonad):
        rep = check(R)
        skipped = sum(e.skipped for e in rep.entries)
        print(f"{rep.title}: {'PASS' if rep.passed else 'FAIL'}, "
              f"{len(rep.entries) - skipped} checked, {skipped} over budget")


if __name__ == "__main__":
    main()
