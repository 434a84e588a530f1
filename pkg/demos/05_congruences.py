"""Divisibility and vanishing of characters on subdivided shapes, checked case by case."""
from mncascade import check_equivalence, check_prime_break, check_scaled, check_subdivided, check_vanishing

# chi at (subdivided lam, subdivided mu) is divisible by d!
r = check_subdivided(3, 2, with_orbits=True)
for case in r.cases:
    print(case["character"], case["class"], case["value"], case["orbit_value"])
print(r.all_passed)

# the same at classes d*mu of the doubled size
print(check_scaled(3, 2).all_passed)

# and zero when d does not divide n, with no cascades at all
v = check_vanishing(3, 2)
print({c["value"] for c in v.cases}, {c["cascades"] for c in v.cases})

# breaking a part p*m into p parts of size m preserves chi mod p
print(check_prime_break(6, 3).all_passed)

# reports are plain JSON and don't depend on the worker count
assert check_equivalence(5, workers=1).to_json() == check_equivalence(5, workers=4).to_json()
print(check_subdivided(1, 2).to_json())
