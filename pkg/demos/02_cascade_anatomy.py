"""A cascade is a stack of boundary words, one hook removal per row."""
from mncascade import (
    crossings,
    paths,
    permutation_of,
    render_diagram,
    theta,
    validate,
    weight,
)
from mncascade.cascade import format_cycles, row_crossings, sign

c = validate([
    "000101001001",
    "000101011000",
    "000111010000",
    "010111000000",
    "110011000000",
    "110110000000",
    "111100000000",
])
print("shape", c.shape, "content", c.content)

print(render_diagram(c))

# crossings per row, then in total
print(row_crossings(c), crossings(c))

# follow each 1 from top to bottom
for p in paths(c):
    print(p)

pi = permutation_of(c)
print(pi, format_cycles(pi))
# sign of the path permutation = (-1)^crossings
assert sign(pi) == weight(c) == -1

# every cascade is a rim hook tableau in disguise
print(theta(c).render())

# SVG for a notebook or a browser
svg = render_diagram(c, "svg")
print(svg[:80], "...")
