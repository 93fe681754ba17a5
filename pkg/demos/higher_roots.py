"""Cube and higher roots: one candidate per (trace, det) pair, families for scalars."""

from eslroots import Mat2, PrimeField, cube_roots, nth_roots
from eslroots.oracle import enumerate_roots

F = PrimeField(7)
A = Mat2.parse("2,1;1,1", F)
for n in (3, 4, 5):
    roots = nth_roots(A, n)
    brute = enumerate_roots(A, n)
    print(f"n={n}: {len(roots.explicit)} roots, brute force agrees: {roots.expand() == brute}")

# The identity mod 5 has the scalar cube root E and a whole conjugacy class of
# order-3 elements, all with trace -1 and det 1.
F5 = PrimeField(5)
roots = cube_roots(Mat2.identity(F5))
print("\ncube roots of E mod 5:", [B.format() for B in roots.explicit])
for f in roots.families:
    print(f"  family tr {f.trace}, det {f.det}: {len(f.members())} matrices")

# Over Z the trace scan is bounded, so an integer cube of B always recovers B.
B = Mat2.parse("1,2;0,1")
print("\ncube roots of", (B**3).format(), "over Z:", [X.format() for X in nth_roots(B**3, 3).explicit])
