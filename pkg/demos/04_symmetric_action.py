"""S_d permutes the column blocks of cascades on a subdivided shape."""
from collections import Counter

from mncascade import Partition, enumerate_cascades, orbits, project, subdivide, weight, z_vector
from mncascade.action import act, orbit_report, symmetric_group

d = 3
lam = Partition((3, 2))
shape = subdivide(lam, d)
print(lam, "subdivided by", d, "->", shape)

content = (3, 3, 6, 12, 3, 3, 6, 9)   # every part divisible by d
cascades = list(enumerate_cascades(shape, content))
print(len(cascades), "cascades")

c = cascades[0]
for sigma in symmetric_group(d):
    image = act(sigma, c, d)
    print(sigma, z_vector(image, d), weight(image))

# the action is free: every orbit has d! = 6 members, and weight is constant on orbits
sizes = Counter(len(o) for o in orbits(cascades, d))
print(sizes)

# keep one column per block to see the cascade on lam underneath
print(project(c, d).rows)

report = orbit_report(lam, d, content, cascades)
print(report["all_free"], report["all_weight_constant"], len(report["orbits"]))
