"""Character values and whole tables, computed exactly."""
from math import factorial

from mncascade import Partition, character_table, character_value, degree, mn_sum_cascades, mn_sum_tableaux
from mncascade.engine import orthogonality_holds

lam, mu = Partition((3, 2)), Partition((2, 2, 1))

# three routes to the same number
print(character_value(lam, mu), mn_sum_tableaux(lam, mu), mn_sum_cascades(lam, mu))

# order of the parts of mu does not matter
print(character_value(lam, (1, 2, 2)))

t = character_table(5)
print(t.to_text())
print(t.to_csv())
assert orthogonality_holds(t)

# the identity column holds the degrees, and their squares add up to n!
assert sum(degree(r) ** 2 for r in t.rows) == factorial(5)

# values can get big; Python ints keep them exact
stair = Partition(range(8, 0, -1))
print(degree(stair), character_value(stair, (1,) * 36) == degree(stair))

# the plain recursion tree, without merging equal states, gives the same answer
print(character_value(Partition((4, 3, 1)), (2, 2, 2, 1, 1), memo=False))
