"""Closed-form catalog values cross-checked against the solvers."""

from resolvedim import formulas
from resolvedim.families import generate, FamilySpec
from resolvedim.formulas import FormulaQuery, closed_form
from resolvedim.solvers import solve_adim, solve_bdim, solve_dim

SOLVERS = {"dim": solve_dim, "adim": solve_adim, "bdim": solve_bdim}

QUERIES = [
    ("path", {"n": 9}, "bdim"),
    ("cycle", {"n": 11}, "adim"),
    ("wheel", {"n": 6}, "dim"),
    ("fan", {"n": 7}, "dim"),
    ("complete", {"n": 5}, "bdim"),
    ("complete_multipartite", {"parts": (1, 2, 2)}, "adim"),
    ("spider", {"x": 4, "s": 2}, "bdim"),
    ("petersen", {}, "dim"),
]


def main():
    print(f"families with closed forms: {', '.join(formulas.catalog_families())}\n")
    for family, params, kind in QUERIES:
        res = closed_form(FormulaQuery(kind, family, params))
        g = generate(FamilySpec(family, params))
        solved = SOLVERS[kind](g).value
        mark = "ok" if res.value == solved else "MISMATCH"
        print(f"{kind}({family} {params}) = {res.value}, solver says {solved}  [{mark}]")

    res = closed_form(FormulaQuery("bdim", "spider", {"x": 4, "s": 4}))
    print(f"\nspider x=4 s=4 has no bdim closed form: {res.detail}")


if __name__ == "__main__":
    main()
