# Searching for a braid word that turns |0...0> into a GHZ state.

from errorgroups.braid import BraidRepSpec, apply_word, basis_state, ghz_search, ghz_test

for k in (1, 2):
    for variant in ("unscaled", "jones"):
        spec = BraidRepSpec(k, variant)
        word = ghz_search(spec, max_len=6)
        if word is None:
            print(f"k={k} {variant}: none within 6 letters")
            continue
        state = apply_word(spec, word, basis_state(spec.dim))
        match = ghz_test(state)
        print(f"k={k} {variant:8}: word {word}  ->  phase {match.phase}, relative zeta8^{match.a}")
        print("    state:", [str(v) for v in state])
