# %% Permutations that map a code onto itself
import numpy as np

from lpdec.automorphisms import (
    AutomorphismSampler,
    Permutation,
    apply_to_columns,
    apply_to_vector,
    cyclic_shift,
    verify_automorphism,
)
from lpdec.codes import builtin_code

bch = builtin_code("bch_15_7")

# %% Push-forward convention: result[pi(i)] = v[i]
print(apply_to_vector(cyclic_shift(4), [1, 0, 0, 0]))
print(Permutation.parse("1 2 3 0") == cyclic_shift(4))

# %% Shift and doubling are automorphisms of every odd-length cyclic code
print("shift:", verify_automorphism(bch, cyclic_shift(15)))
swap = np.arange(15)
swap[[0, 1]] = [1, 0]
print("transposition (0 1):", verify_automorphism(bch, Permutation(swap)))

# %% Random words over the generators
sampler = AutomorphismSampler.for_code(bch)
rng = np.random.default_rng(0)
perms = [sampler.sample(rng) for _ in range(5)]
for p in perms:
    print(p.format(), verify_automorphism(bch, p))

# %% Permuting the columns of H gives another parity-check matrix of the same code
Hp = apply_to_columns(perms[0], bch.H)
print("codewords satisfy permuted H:", not ((bch.codewords.astype(int) @ Hp.T) % 2).any())

# %% The extended Hamming code gets affine generators instead
ham = builtin_code("hamming_8_4_paper")
print(sorted(AutomorphismSampler.for_code(ham).generators))
