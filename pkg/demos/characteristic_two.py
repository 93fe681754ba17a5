"""Over F_2 a matrix is a square exactly when it diagonalizes (possibly over F_4)."""

import itertools

from eslroots import Mat2, PrimeField, classify, sqrt_all

F2 = PrimeField(2)
for e in itertools.product(range(2), repeat=4):
    A = Mat2(*e, F2)
    roots = sqrt_all(A)
    kind = classify(A).value
    count = len(roots.expand())
    print(f"{A.format()}  {kind:<24} det {A.det}  roots {count}")
