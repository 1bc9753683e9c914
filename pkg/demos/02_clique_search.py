"""
Searching for codes as cliques
==============================

Admissible codewords avoid every effective error pattern, and two codewords
are compatible when their XOR is admissible too. A code is a clique in that
graph, so larger codes come from a maximum clique search.
"""

from cwscodes.search import build_problem, candidate_vertices, family, search_clique

problem = build_problem(family("ring", 5), 2)
print("ring-5, d=2:", len(problem.forbidden_differences), "forbidden patterns,",
      len(candidate_vertices(problem)), "candidate codewords")

# Branch and bound proves that six codewords is the best this graph allows.
result = search_clique(problem, "exact", budget=10)
print("K =", result.K, "proved" if result.exact else "not proved", "in %.2f s" % result.elapsed)
print("codewords:", result.to_code().codeword_strings())

# Distance three on nine qubits.
nine = search_clique(build_problem(family("ring", 9), 3), "exact", budget=60)
print("ring-9, d=3: K =", nine.K, "proved" if nine.exact else "best found")

# Ten qubits is out of reach for a quick exhaustive run. The local search
# gets to 18 on the ring and to 20 on the double ring in seconds.
for kind, goal in (("ring", 18), ("double_ring", 20)):
    res = search_clique(build_problem(family(kind, 10), 3), "heuristic", budget=120, seed=1, target=goal)
    print(f"{kind}-10, d=3: K = {res.K} after {res.elapsed:.1f} s")
