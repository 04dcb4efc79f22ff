"""Multiplying curve classes on the torus.

A class is a nonzero integer vector up to sign: (1,0) is the meridian, (0,1)
the longitude, (2,4) two parallel copies of (1,2).  The product resolves every
crossing of flat representatives from the first curve to the second.
"""

from curvesys import dehn_twist, intersection, multiply, normalize, power

a = normalize(1, 0)
b = normalize(0, 1)

# The product depends on the order: resolving a->b tilts one way,
# b->a the other.
print("a * b =", multiply(a, b))  # (1,1)
print("b * a =", multiply(b, a))  # (1,-1)

# Disjoint (parallel) classes just add up, and the product commutes.
print("(1,0) * (2,0) =", multiply(normalize(1, 0), normalize(2, 0)))

# Crossing classes never commute.
for u, v in [((2, 1), (1, 1)), ((1, 2), (3, 1))]:
    x, y = normalize(*u), normalize(*v)
    print(f"{x} * {y} = {multiply(x, y)}   {y} * {x} = {multiply(y, x)}")

# The product is not associative in general...
c = normalize(1, 1)
print("(a b) c =", multiply(multiply(a, b), c))  # (2,2)
print("a (b c) =", multiply(a, multiply(b, c)))  # (2,0)

# ...but flanking by a parallel copy cancels: a (b a) = (a b) a = b.
print("a (b a) =", multiply(a, multiply(b, a)))
print("(a b) a =", multiply(multiply(a, b), a))

# A positive Dehn twist along a sends b to a^k b with k = I(a, b);
# the negative twist undoes it.
t = dehn_twist(a, b, "positive")
print("twist along a:", t, " and back:", dehn_twist(a, t, "negative"))

# Powers distribute over the product: a^k b^k = (a b)^k.
k = 3
print("a^3 b^3 =", multiply(power(a, k), power(b, k)), "= (a b)^3 =", power(multiply(a, b), k))

# Intersection numbers obey a triangle inequality with the product.
g = normalize(2, -3)
print(
    "I(a,g), I(b,g), I(ab,g) =",
    intersection(a, g),
    intersection(b, g),
    intersection(multiply(a, b), g),
)
