"""A walk through square roots of 2x2 matrices, from Z to small prime fields."""

from eslroots import Mat2, PrimeField, Scope, membership, sqrt_all, sqrt_over_Z, square_root_exists

# The Fibonacci matrix squares to [[1,1],[1,2]]. Over Z the trace/det identity
# recovers it, plus two real roots with an irrational denominator.
A = Mat2.parse("1,1;1,2")
roots = sqrt_over_Z(A)
print(f"roots of {A.format()} over Z:")
for B in roots.explicit:
    print(f"  {B.format():<12} det {B.det}  [{membership(B).value}]")
for s in roots.scaled:
    print(f"  {s}")

# [[3,2],[4,3]] has det 1 but its only integer roots have det -1.
A = Mat2.parse("3,2;4,3")
v = square_root_exists(A)
print(f"\n{A.format()}: root in SL2 {v.exists_in_SL2}, in ESL2 {v.exists_in_ESL2}")

# Mod 3 the quarter turn has no root of det 1, only the pair from the det -1 coset.
F3 = PrimeField(3)
rot = Mat2.parse("0,-1;1,0", F3)
print(f"\nsquare roots of {rot.format()} mod 3:", [B.format() for B in sqrt_all(rot).explicit])

# The same question for every element of SL2(F_7), decided from residue symbols alone.
F7 = PrimeField(7)
tally = {}
for e in range(7**4):
    X = Mat2(e // 343, e // 49 % 7, e // 7 % 7, e % 7, F7)
    if X.det != 1:
        continue
    v = square_root_exists(X)
    tally[v.branch.name] = tally.get(v.branch.name, 0) + v.exists_in(Scope.ESL2)
print("\nSL2(F_7) elements with a root in ESL2, by branch:")
for name, count in sorted(tally.items()):
    print(f"  {name:<16} {count}")
