# %% Decoding one noisy word: LP relaxation, separation, branch and bound
import numpy as np

from lpdec.codes import builtin_code
from lpdec.decoders import (
    DecodeTrace,
    adapted_matrix,
    decode_alp,
    decode_bb,
    decode_diversity,
    decode_ml_bruteforce,
    decode_nsa,
    decode_preset,
    decode_static_lp,
)

code = builtin_code("hamming_8_4_paper")
r = np.array([0.798337, 1.421758, -1.240177, -0.771128, -1.745193, 0.554868, 0.983861, -0.404989])
c = -r  # BPSK 0 -> -1, so a negative cost favours a 1

# %% The answer to aim for
ml = decode_ml_bruteforce(code, c)
print("ML word:", ml.word.astype(int), "cost:", round(ml.objective, 6))

# %% The plain relaxation and its adaptive version land on the same pseudocodeword
static = decode_static_lp(code, c)
trace = DecodeTrace()
alp = decode_alp(code, c, trace=trace)
print("static LP:", np.round(static.word, 3), static.objective)
print("ALP      :", np.round(alp.word, 3), alp.objective)
for step in trace.runs[0]:
    print("  iteration objective", round(step.objective, 4), "cuts added", step.cuts_added)

# %% The separation decoder adds RPC cuts but is still fractional here
nsa = decode_nsa(code, c)
print("NSA:", np.round(nsa.word, 3), "certificate:", nsa.ml_certificate)

# %% Branch and bound on the least reliable fractional bit finds the ML word
bb = decode_bb(code, c, 3)
s = bb.stats
print("BB word:", bb.word.astype(int), "certificate:", bb.ml_certificate)
print("tree nodes:", s.bb_nodes, "pruned (infeasible, bound, integral):", s.pruned_infeasible, s.pruned_bound, s.pruned_integral)

# %% Matrix adaptation: unit columns on the least reliable positions 7, 5, 3, 0
print(adapted_matrix(code.H, c))

# %% Presets A, B and C
for name in "ABC":
    out = decode_preset(name, code, c, r, np.random.default_rng(0))
    print(name, out.hard_word(), out.ml_certificate, "LP solves:", out.stats.lp_solves)

# %% Diversity: permuted cost vectors can escape a pseudocodeword
div = decode_diversity(code, c, r, 5, np.random.default_rng(1))
print("diversity:", np.round(div.word, 3), div.ml_certificate, "NSA runs:", div.stats.nsa_calls)
