"""
Realizability checks
====================

Fano cones lie in Dr(3,7) but in no chirotropical Dressian; compatible
pairs of rays always share a chirotropical fan; and in rank 4 on 8 elements
one chirotope has a chirotropical Dressian with a 12-dimensional cone,
which no realizable configuration can produce.
"""

from chirotrop import expand_orbit
from chirotrop.io import bundled_classes, bundled_rays
from chirotrop.realizability import covering_check, fano_incompatibility_check, verify_48_counterexample

classes7 = bundled_classes(3, 7)
orbit7 = expand_orbit(classes7)
print(len(orbit7), "chirotopes on 7 elements up to reorientation")

print(fano_incompatibility_check(7, classes7, orbit7))
print(fano_incompatibility_check(8, bundled_classes(3, 8)))

#
print(covering_check(bundled_rays(3, 6), expand_orbit(bundled_classes(3, 6))))
print(covering_check(bundled_rays(3, 7), orbit7))

#
print(verify_48_counterexample())
