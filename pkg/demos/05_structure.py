"""Transpose, symmetry and other structural predicates."""

from matpoly import classify, construct, transpose

a3 = construct([[1, 2, 3], [2, 0, 4], [3, 4, -1]])
a4 = construct([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
print("A3 symmetric:", a3 == transpose(a3))
print("A4 skew-symmetric:", transpose(a4) == -a4)

for name, m in [
    ("rotation", [[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
    ("shift", [[0, 1], [0, 0]]),
    ("projection", [[1, 1], [0, 0]]),
]:
    report = classify(construct(m))
    flags = {k: v for k, v in report.as_dict().items() if v}
    print(f"{name:10s}", flags)
