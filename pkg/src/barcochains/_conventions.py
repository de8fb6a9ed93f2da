"""Pinned sign conventions (generated by scripts/pin_sign_conventions.py).

Each constant was selected by an exhaustive low-degree search as the unique
choice under which the corresponding structural identity closes with zero
residual; tests/test_cochains.py re-derives and asserts them.

PRODUCT_SIGN_DEGREE   which degree of the right factor enters the Koszul
                      sign (-1)^(q * p) of the convolution product, where p
                      is the length of the left block: the total degree, the
                      word degree alone, or the value degree alone.
DELTA_SIGN_DEGREE     degree entering (-1)^(n+1) in  delta f = +- f b'.
BETA_CHAIN_SIGN       sign closing  b . beta = sign * beta . b'.
PARTIAL_LEIBNIZ_SIGN  sign s in  d(g1 g2) = d(g1).g2 + s^{|g1|} g1.d(g2)
                      for the slot-marking derivation dual to concatenation.
"""

PRODUCT_SIGN_DEGREE = "total"
DELTA_SIGN_DEGREE = "total"
BETA_CHAIN_SIGN = 1
PARTIAL_LEIBNIZ_SIGN = -1
