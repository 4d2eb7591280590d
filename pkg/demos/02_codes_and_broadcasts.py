"""Why a landmark set or broadcast does or does not resolve a path."""

from resolvedim.families import path
from resolvedim.graphs import all_pairs_distances
from resolvedim.resolution import (
    Broadcast,
    broadcast_code,
    is_adjacency_resolving_set,
    is_resolving_broadcast,
    is_resolving_set,
)


def main():
    g = path(6)
    d = all_pairs_distances(g)

    for subset in ([0], [2], [0, 5]):
        verdict = is_resolving_set(g, subset)
        tail = "" if verdict else f" (pair {verdict.unresolved_pair} clashes)"
        print(f"set {subset} resolving: {bool(verdict)}{tail}")

    # truncated distances see at most one step, so one end is no longer enough
    verdict = is_adjacency_resolving_set(g, [0])
    print(f"set [0] adjacency-resolving: {bool(verdict)} (pair {verdict.unresolved_pair})")

    f = Broadcast((0, 0, 1, 0, 1, 0))
    print(f"\nbroadcast {f.values}, cost {f.cost}, support {f.support}")
    for v in range(g.n):
        print(f"  code({v}) = {broadcast_code(g, d, f, v)}")
    print(f"resolving: {bool(is_resolving_broadcast(g, f))}")

    g2 = Broadcast((1, 0, 0, 0, 0, 1))
    verdict = is_resolving_broadcast(g, g2)
    print(f"\nbroadcast {g2.values} resolving: {bool(verdict)} (pair {verdict.unresolved_pair})")


if __name__ == "__main__":
    main()
