# %% Forbidden-set inequalities and redundant parity checks
import numpy as np

from lpdec.codes import builtin_code
from lpdec.separation import enumerate_full_fs, find_all_fs_cuts, find_fs_cut, fs_count, fs_to_lp, generate_rpc_cuts

code = builtin_code("hamming_8_4_paper")

# %% One check of degree 3 and a fractional point
row = np.array([1, 1, 1])
x = np.array([0.9, 0.8, 0.05])
cut = find_fs_cut(row, x)
print("odd set:", cut.odd_set, "lhs:", cut.lhs(x))
con = fs_to_lp(cut)
print("as <= row:", dict(zip(con._idx.tolist(), con._val.tolist())), "<=", con.rhs)

# %% The full FS description grows as 2^(d-1) per row
print("FS inequalities of the [8,4,4] matrix:", fs_count(code.H), len(enumerate_full_fs(code.H)))

# %% A point that satisfies every FS inequality of H but is not a codeword
x = np.array([1, 1, 0, 1 / 3, 0, 1, 2 / 3, 1 / 3])
print("FS cuts:", find_all_fs_cuts(code.H, x))

# Gaussian elimination on the fractional columns finds dual words with a
# single fractional position; their FS inequalities cut x off
for rpc in generate_rpc_cuts(code.H, x):
    print("RPC row", rpc.source_row, "odd set", rpc.odd_set, "lhs", round(rpc.lhs(x), 4))
