"""
Ambiguous numbers and the closed-form actions
=============================================

A number (a + b*sqrt3)/c is ambiguous when it and its conjugate
(a - b*sqrt3)/c have opposite signs. B and D keep ambiguity; in each
C-triangle exactly one of C(x), C^2(x) is ambiguous again.
"""

from picard import act_A_image, act_B, act_C, act_C2, act_D, canonicalize, classify, d_value, render

for triple in [(0, 1, 1), (5, 1, 1), (-5, 1, 1), (3, 2, 1), (1, 0, 2)]:
    q = canonicalize(*triple)
    print(f"{render(q):>12}  {classify(q)!s:<18} d = {d_value(q)}")

x = canonicalize(0, 1, 1)
print()
print("x      =", render(x))
for name, act in [("B", act_B), ("D", act_D), ("C", act_C), ("C^2", act_C2)]:
    y = act(x)
    print(f"{name + '(x)':<7}= {render(y):<12} {classify(y)}")

# A leaves the real quadratic numbers altogether
print("A(x)   =", act_A_image(x))

# a bold (B) edge of the k = 2 closed path
print(render(canonicalize(-3, 2, 1)), "-B->", render(act_B(canonicalize(-3, 2, 1))))
