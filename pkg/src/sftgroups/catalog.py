"""Built-in shifts of finite type and the reference invariant table.

The table rows carry the expected invariants; ``examples_table`` recomputes
everything and reports a pass flag per row, which the CLI ``examples`` verb
and the acceptance suite both consume.
"""

from __future__ import annotations

from .clopen import ClopenSet
from .graphs import Graph, graph_from_matrix
from .homology import abelianization_group, class_in_G, classify, homology


def full_shift(n: int, r: int = 1) -> Graph:
    """The Higman-Thompson shift: r vertices in a cycle, the closing arrow
    carrying n parallel edges."""
    m = [[0] * r for _ in range(r)]
    m[0][r - 1] = n
    for i in range(1, r):
        m[i][i - 1] = 1
    if r == 1:
        m = [[n]]
    return graph_from_matrix(m)


def golden_mean() -> Graph:
    return Graph(("a", "b"), (("e", "a", "a"), ("f", "a", "b"), ("g", "b", "a")))


def rank_one_kernel() -> Graph:
    """Two vertices, M = [[2,1],[1,2]]: the smallest example with H1 != 0."""
    return graph_from_matrix([[2, 1], [1, 2]])


def free_product_boundary(p: int, q: int) -> Graph:
    """Boundary of Z_p * Z_q: bipartite shift with M = [[0,p-1],[q-1,0]]."""
    return graph_from_matrix([[0, p - 1], [q - 1, 0]])


def free_group_boundary(k: int) -> Graph:
    """Boundary of the free group F_k: 2k letters, no immediate cancellation."""
    m = [[1] * (2 * k) for _ in range(2 * k)]
    for i in range(k):
        m[2 * i][2 * i + 1] = 0
        m[2 * i + 1][2 * i] = 0
    return graph_from_matrix(m)


BUILTIN_GRAPHS = {
    "full-2": lambda: full_shift(2, 1),
    "full-3": lambda: full_shift(3, 1),
    "full-3-r2": lambda: full_shift(3, 2),
    "golden-mean": golden_mean,
    "rank-one-kernel": rank_one_kernel,
    "free-product-3-3": lambda: free_product_boundary(3, 3),
    "free-group-2": lambda: free_group_boundary(2),
    "free-group-3": lambda: free_group_boundary(3),
}


_ROWS = [
    ("full shift (2,1)", "full-2",
     {"h0": "0", "h1_rank": 0, "det": -1, "unit_class": "0", "abelianization": "0"}),
    ("full shift (3,1)", "full-3",
     {"h0": "Z_2", "h1_rank": 0, "det": -2, "unit_class": "1", "abelianization": "Z_2"}),
    ("full shift (3,2)", "full-3-r2",
     {"h0": "Z_2", "h1_rank": 0, "det": -2, "unit_class": "0", "abelianization": "Z_2"}),
    ("golden mean", "golden-mean",
     {"h0": "0", "h1_rank": 0, "det": -1, "unit_class": "0", "abelianization": "0",
      "classify_against": "full-2", "classify": "SufficientConditionHolds"}),
    ("M=[[2,1],[1,2]]", "rank-one-kernel",
     {"h0": "Z", "h1_rank": 1, "det": 0, "unit_class": "0", "abelianization": "Z + Z_2"}),
    ("free product 3*3 boundary", "free-product-3-3",
     {"h0": "Z_3", "h1_rank": 0, "det": -3, "unit_class": "0", "abelianization": "0"}),
    ("free group k=2 boundary", "free-group-2",
     {"h0": "Z^2", "h1_rank": 2, "det": 0, "unit_class": "(0, 0)",
      "abelianization": "Z^2 + (Z_2)^2"}),
    ("free group k=3 boundary", "free-group-3",
     {"h0": "Z^3 + Z_2", "h1_rank": 3, "det": 0, "unit_class": "(0, 0, 0, 1)",
      "abelianization": "Z^3 + (Z_2)^4"}),
]


def examples_table() -> list[dict]:
    rows = []
    for name, key, expected in _ROWS:
        g = BUILTIN_GRAPHS[key]()
        h = homology(g)
        got = {
            "h0": h.h0.render(),
            "h1_rank": h.h1_rank,
            "det": h.det,
            "unit_class": class_in_G(ClopenSet.whole_space(g)).render(),
            "abelianization": abelianization_group(g).render(),
        }
        if "classify" in expected:
            other = BUILTIN_GRAPHS[expected["classify_against"]]()
            got["classify"] = classify(
                g, ClopenSet.whole_space(g), other, ClopenSet.whole_space(other))
        passed = all(got.get(k) == v for k, v in expected.items()
                     if k != "classify_against")
        rows.append({"name": name, "expected": dict(expected), "got": got,
                     "passed": passed})
    return rows
