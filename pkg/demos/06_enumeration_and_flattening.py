"""Enumerate every minimum broadcast, then flatten a lumpy one."""

from resolvedim.families import kK2, path
from resolvedim.resolution import Broadcast, is_resolving_broadcast
from resolvedim.solvers import enumerate_min_broadcasts, flatten_path_cycle_broadcast


def main():
    g = kK2(3)
    res = enumerate_min_broadcasts(g)
    print(f"3 disjoint edges: optimal cost {res.optimal_cost}, {len(res.broadcasts)} minima")
    for b in res.broadcasts:
        print(f"  {b}")

    g = path(10)
    lumpy = Broadcast((0, 0, 0, 0, 0, 4, 0, 0, 0, 3))
    assert is_resolving_broadcast(g, lumpy)
    flat = flatten_path_cycle_broadcast(g, lumpy)
    print(f"\nP10 broadcast {lumpy.values} (cost {lumpy.cost})")
    print(f"flattens to   {flat.values} (cost {flat.cost}, every value 0 or 1)")
    print(f"still resolving: {bool(is_resolving_broadcast(g, flat))}")


if __name__ == "__main__":
    main()
