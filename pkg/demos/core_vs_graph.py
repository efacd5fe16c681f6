"""Why the sparsity certificate has to live on the core.

K_2 plus two isolated vertices is (1, 6)-uniformly sparse as a 4-vertex
graph. Plugging those numbers into the prefix bound with n = 4 asks for a
cut of 2 after two vertices, but the degeneracy core is just the edge, and
the real cutwidth is 1. Certifying (rho, lambda) on the core, with the
core's own vertex count, gives a bound that holds.
"""
from cutwidth import (Graph, SparsityParams, bound_eq_main2, degeneracy_core,
                      exact_cutwidth_dp, is_uniformly_sparse, max_uniform_lambda,
                      verify_theorem_on_graph)

G = Graph(4, [(0, 1)])
params = SparsityParams(1, 6)
print("uniformly sparse on G:", is_uniformly_sparse(G, params)[0])
print("bound with n = 4:", bound_eq_main2(4, 1, params), " cw =", exact_cutwidth_dp(G).value)

core, kept = degeneracy_core(G)
lam = max_uniform_lambda(core, 1)
print("core vertices", kept, " best lambda on the core:", lam)
print("bound with n = 2:", bound_eq_main2(core.n, 1, SparsityParams(1, lam)))

rep = verify_theorem_on_graph(G)
for e in rep.violations:
    print("violation:", e.name, e.params["scope"], "rho", e.params["rho"],
          "lambda", e.params["lambda"], "bound", e.value)
