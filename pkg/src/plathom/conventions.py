"""Frozen convention data: grading normalization and the oracle bridge.

These constants were calibrated once, against the worked reduced trefoil
table together with the unknot, two-component unlink and Hopf anchors,
and are data rather than code.  Changing any of them invalidates the
golden files and the decategorification identity.

Grading normalization (4-strand pipeline).  A pass with raw weights
(M, J) homs into the marked simple in bidegree

    k = -M + K_BASE + K_SELF * s
    d = (-J - D_BASE - D_SELF * s) / 2

where s is the signed letter count of the self-crossings of the
brane-carrying arc.  Khovanov conversion consumes the inter-arc letter
counts (t+, t-):

    i = k + 2d          j = 2d + J0_DIM + (t+ - t-)

Oracle bridge.  The writhe-normalized Kauffman bracket, written in the
variable A = q^(-1/4), equals the homology Euler characteristic after
doubling the quarter exponents and multiplying by (-1)^(components - 1).
"""

GRADING = {
    "K_BASE": 1,
    "K_SELF": 1,
    "D_BASE": 1,
    "D_SELF": 2,
    "J0_DIM": 1,  # the brane-dimension summand of j_0
}

ORACLE_BRIDGE = {
    "exponent_scale": 2,
    "sign_rule": "components_minus_one",
}
