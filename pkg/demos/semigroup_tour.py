"""Walk through the semigroup spans: which ones are regular, which are non-degenerate.

Run with ``python3 demos/semigroup_tour.py``.
"""

from mbmcheck.builders import CATALOG_SEMIGROUPS, from_semigroup, semigroup_table
from mbmcheck.mbm import check_multiplier_bialgebra, check_nondegenerate, check_regular


def main():
    print(f"{'table':14s} {'regular':8s} {'left':6s} {'right':6s} bialgebra clauses failing")
    for name in CATALOG_SEMIGROUPS:
        R = from_semigroup(semigroup_table(name))
        regular = check_regular(R).passed
        nd = check_nondegenerate(R.ctx, R.m)
        bad = [e.name for e in check_multiplier_bialgebra(R.mbm).failures()]
        print(f"{name:14s} {str(regular):8s} {str(nd.left):6s} {str(nd.right):6s} {', '.join(bad) or '-'}")

    # every span is regular; only the unital ones give multiplier bialgebras
    R = from_semigroup(semigroup_table("leftzero2"))
    print("\nleft-zero t1 on basis pairs:")
    AA = R.t1.dom
    for i in range(AA.dim):
        (j, _), = R.t1.column(i).items()
        print(f"  {AA.label(i)} -> {AA.label(j)}")


if __name__ == "__main__":
    main()
