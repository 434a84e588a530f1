"""Boundary words and rim hook removal."""
from mncascade import Partition, enumerate_tableaux, remove_hooks, shape_of, word
from mncascade.rimhook import hook_swaps

lam = Partition((8, 6, 4, 3))
beta = word(lam)
print(lam, "->", beta)           # each 1 is a row, each 0 a column step
print(shape_of(beta))            # and back again

# leading 1s and trailing 0s don't change the shape
print(shape_of("11" + beta + "000"))

# removing a k-hook = swapping a 0 with the 1 sitting k places to its right
for start, after, rows in hook_swaps("11" + beta, 7):
    print(f"swap at {start}: {after} -> {shape_of(after)}, hook spans {rows} rows")

# the same thing, in partition language
for smaller, rows in remove_hooks(lam, 3):
    print("3-hook leaves", smaller, "rows", rows)

# a full tableau, labels 1..6 fill hooks of sizes 4,4,6,3,2,2 from the inside out
tab = next(t for t in enumerate_tableaux(lam, (4, 4, 6, 3, 2, 2)) if t.rows_occupied == (2, 3, 4, 2, 2, 2))
print(tab.render())
print("weight", tab.weight())
