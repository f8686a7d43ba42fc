"""Perturb one matrix entry at a time and see which axiom notices first."""

from collections import Counter

from mbmcheck.builders import catalog_instance, mutate, mutation_sites
from mbmcheck.mbm import check_regular


def main(name="dual-z3"):
    R = catalog_instance(name)
    first = Counter()
    survivors = []
    for site in mutation_sites(R):
        rep = check_regular(mutate(R, site))
        bad = rep.failures()
        if not bad:
            survivors.append(site)
        else:
            first[bad[0].name] += 1
    print(f"{name}: {len(mutation_sites(R))} single-entry mutants")
    for check, n in first.most_common():
        print(f"  {n:4d}  {check}")
    for site in survivors:
        M = mutate(R, site)
        print(f"survivor {site}: counit becomes {M.e.rows()[0]}, still regular with a rescaled counit")


if __name__ == "__main__":
    main()
