"""Build a few graphs and look at their distance structure."""

from resolvedim.families import path, petersen, spider
from resolvedim.graphs import (
    all_pairs_distances,
    delta_prime,
    metric_profile,
    tree_profile,
    twin_partition,
)


def show(name, g):
    d = all_pairs_distances(g)
    prof = metric_profile(g, d)
    print(f"{name}: n={g.n} m={g.m} connected={prof.connected} diam={prof.diameter}")
    for v in range(g.n):
        print(f"  dist from {v}: {list(d.dist[v])}")


def main():
    show("P5", path(5))
    show("petersen", petersen())

    g = spider(4, 2)
    print(f"\nspider(4,2) twins: {twin_partition(g).groups}")
    print(f"spider(4,2) delta' = {delta_prime(g)}")
    prof = tree_profile(g)
    print(f"tree stats: sigma={prof.sigma} ex={prof.ex} -> dim should be {prof.sigma - prof.ex}")


if __name__ == "__main__":
    main()
