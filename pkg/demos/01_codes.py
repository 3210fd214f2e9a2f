# %% Codes over GF(2): parity-check matrices, BCH construction, file formats
import numpy as np

from lpdec import gf2
from lpdec.codes import bch_generator_poly, bch_parity_matrix, builtin_code, format_alist, load_code
from lpdec.gf2m import GF2m

# %% The [8,4,4] extended Hamming code used in the worked example
code = builtin_code("hamming_8_4_paper")
print(code.H)
print("n, k, rate:", code.n, code.k, code.rate)
print("all 16 codewords:")
print(code.codewords)

# %% Minimum distance by enumeration
weights = code.codewords.sum(axis=1)
print("weights:", sorted(set(weights.tolist())))

# %% Reduce H so that chosen columns become unit vectors
R, pivots = gf2.row_reduce(code.H, (7, 5, 3, 0))
print(R)
print("pivots (row, col):", pivots)
print("same code:", gf2.same_row_space(R, code.H))

# %% BCH codes from cyclotomic cosets in GF(2^m)
gf = GF2m(4)
print("coset of 3 in GF(16):", gf.cyclotomic_coset(3))
print("g(x) of BCH[15,7] in octal:", oct(bch_generator_poly(4, 5)))
bch = bch_parity_matrix(4, design_distance=5)
print("BCH[15,7] rows:", bch.H.shape[0], "rank:", gf2.rank(bch.H))

# %% Named codes and the alist format
for name in ("hamming_7_4", "bch_15_7", "bch_31_21", "bch_63_39", "bch_63_36"):
    c = load_code(name)
    print(f"{name:>10}: n={c.n} k={c.k} row degrees={sorted(set(gf2.row_degrees(c.H)))}")
print(format_alist(builtin_code("hamming_7_4").H))
