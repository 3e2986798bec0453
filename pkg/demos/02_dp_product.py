"""The DP product mirrors matrix multiplication, including its quirks."""

from matpoly import construct, dp_product, identity_poly, parse

a = [[1, -1, 2], [-1, 0, -2]]
b = [[1, -1], [-1, 0], [2, -2]]
pa, pb = construct(a), construct(b)
print("P_A (x) P_B =", dp_product(pa, pb))
print("P_B (x) P_A =", dp_product(pb, pa))

# shapes (1,2) and (2,1): the two orders land in different spaces
p, q = parse("2*y - 3"), parse("-2*x + 3")
print("p (x) q =", dp_product(p, q), "   q (x) p =", dp_product(q, p))

# zero divisors
p, q = parse("3*x*y - 3*x - 4*y + 4"), parse("2*x*y - 5*x - 4*y + 10")
print("p (x) q =", dp_product(p, q), "   q (x) p =", dp_product(q, p))

print("I_3 =", identity_poly(3))
print("I_3 (x) P_B == P_B:", dp_product(identity_poly(3), pb) == pb)
