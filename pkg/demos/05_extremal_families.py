"""The constructions that make the dimension bounds sharp."""

from resolvedim.families import (
    edge_gap,
    edge_gap_special_edge,
    logn_sharp,
    subgraph_gap,
    vdel_gap,
)
from resolvedim.graphs import clique_number, induced_subgraph, metric_profile
from resolvedim.solvers import delete_edge, delete_vertex, solve_adim, solve_bdim, solve_dim


def main():
    # order k + 2^k with every dimension equal to k: log-order witnesses
    for k in (2, 3):
        g = logn_sharp(k)
        print(
            f"logn_sharp({k}): n={g.n}, adim={solve_adim(g).value},"
            f" bdim={solve_bdim(g).value}, clique={clique_number(g)}"
        )

    # an induced subgraph can need far more landmarks than its host
    g = subgraph_gap(3)
    inner = induced_subgraph(g, range(6))
    print(
        f"\nsubgraph_gap(3): dim(host)={solve_dim(g).value},"
        f" dim(induced K6)={solve_dim(inner).value},"
        f" diam={metric_profile(g).diameter}"
    )

    # deleting one vertex can raise dim; deleting one edge can raise adim
    g = vdel_gap(2)
    shrunk, _ = delete_vertex(g, g.n - 1)
    print(f"\nvdel_gap(2): dim={solve_dim(g).value} -> {solve_dim(shrunk).value} after deletion")

    h = edge_gap(3, 2, 3)
    cut = delete_edge(h, edge_gap_special_edge(3, 2, 3))
    print(f"edge_gap(3,2,3): adim={solve_adim(h).value} -> {solve_adim(cut).value} after deletion")


if __name__ == "__main__":
    main()
