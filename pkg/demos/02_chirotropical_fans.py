"""
Chirotropical Dressians of (3,6) and (3,7)
==========================================

From the rays of the Dressian to the fan of each chirotope: select the rays,
build the compatibility graph, take maximal cliques, close under
intersection.
"""

import time

from chirotrop import build_graph, chi_rays, compute_chirotropical_dressian, maximal_cliques
from chirotrop.io import bundled_classes, bundled_rays

rays = bundled_rays(3, 6)
classes = bundled_classes(3, 6)
print(len(rays), "rays of Dr(3,6) modulo lineality")

# the steps, spelled out for the positive chirotope (last class)
pos = classes[-1]
idx = chi_rays(rays, pos)
graph = build_graph([rays[i] for i in idx], pos, source=idx)
cliques = maximal_cliques(graph)
print(f"positive: {len(idx)} rays, {len(graph.edges)} edges, {len(cliques)} maximal cliques")

# the whole pipeline for every class
for n in (6, 7):
    rays = bundled_rays(3, n)
    t0 = time.perf_counter()
    for i, chi in enumerate(bundled_classes(3, n), start=1):
        res = compute_chirotropical_dressian(rays, chi)
        print(f"(3,{n}) #{i:2d} {chi.negative_notation():32s} f = {res.f_vector}"
              f"  pure={res.pure} 2-determined={res.fan.two_determined}")
    print(f"  {time.perf_counter() - t0:.1f} s")
